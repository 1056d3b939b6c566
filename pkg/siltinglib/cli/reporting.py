"""Sentry reporting of command failures."""

from typing import Optional

import sentry_sdk
from sentry_sdk import capture_exception, set_context, set_tag

from siltinglib.cli.options import SentryOptions


def redact_params(event, hint):
    # Redact local variables from captured events
    if "exception" not in event:
        return event
    if "values" not in event["exception"]:
        return event

    for exc in event["exception"]["values"]:
        if "stacktrace" not in exc:
            continue
        for frame in exc["stacktrace"]["frames"]:
            if "vars" in frame:
                frame["vars"] = {key: "REDACTED" for key in frame["vars"]}

    return event


def init_sentry(options: Optional[SentryOptions]) -> bool:
    """Initialises Sentry when a DSN is configured; returns whether it did."""
    if options is None or not options.dsn:
        return False
    before_send = redact_params if options.redact_params else None
    sentry_sdk.init(
        dsn=options.dsn,
        release=options.release,
        environment=options.environment,
        sample_rate=options.sample_rate,
        before_send=before_send,
    )
    return True


def report_failure(command: str, algebra: Optional[str], error: BaseException, enabled: bool) -> None:
    if not enabled:
        return
    set_tag("silting.command", command)
    if algebra is not None:
        set_context("silting.algebra", {"text": algebra})
    capture_exception(error)
