import pytest

from siltinglib.cli import AlgebraFile, SentryOptions, SiltingOptions, load_corpus
from siltinglib.cli.commands import build_parser, resolve_options
from siltinglib.cli import reporting
from siltinglib.cli.reporting import init_sentry, redact_params, report_failure


def test_defaults():
    options = SiltingOptions()
    assert options.field == "Q"
    assert options.max_nodes == 10_000
    assert options.max_dim == 60
    assert options.format == "text"


def test_environment(monkeypatch):
    monkeypatch.setenv("SILTING_MAX_NODES", "7")
    monkeypatch.setenv("SILTING_FIELD", "F 3")
    options = SiltingOptions()
    assert options.max_nodes == 7
    assert options.field_spec().p == 3


def test_invalid_values():
    with pytest.raises(ValueError):
        SiltingOptions(field="F 4")
    with pytest.raises(ValueError):
        SiltingOptions(max_dim=0)


def test_precedence(monkeypatch):
    monkeypatch.setenv("SILTING_MAX_NODES", "7")
    algebra_file = load_corpus("kronecker")
    parser = build_parser()
    args = parser.parse_args(["decide", "--corpus", "kronecker"])
    assert resolve_options(args, algebra_file).max_nodes == 7
    capped = AlgebraFile(None, algebra_file.vertices, algebra_file.arrows, caps=(("max_nodes", 50),))
    assert resolve_options(args, capped).max_nodes == 50
    args = parser.parse_args(["decide", "--corpus", "kronecker", "--max-nodes", "9"])
    assert resolve_options(args, capped).max_nodes == 9


def test_sentry_options(monkeypatch):
    monkeypatch.setenv("SILTING_SENTRY_SAMPLE_RATE", "0.5")
    monkeypatch.setenv("SILTING_SENTRY_REDACT_PARAMS", "true")
    options = SentryOptions()
    assert options.sample_rate == 0.5
    assert options.redact_params is True
    assert options.dsn is None
    assert not init_sentry(options)


def test_redact_params():
    event = {"exception": {"values": [{"stacktrace": {"frames": [{"vars": {"module": "Rep(S1)"}}]}}]}}
    redacted = redact_params(event, None)
    assert redacted["exception"]["values"][0]["stacktrace"]["frames"][0]["vars"] == {"module": "REDACTED"}
    assert redact_params({"message": "x"}, None) == {"message": "x"}


def test_report_failure(monkeypatch):
    captured = []
    monkeypatch.setattr(reporting, "set_tag", lambda key, value: captured.append((key, value)))
    monkeypatch.setattr(reporting, "set_context", lambda key, value: captured.append((key, value)))
    monkeypatch.setattr(reporting, "capture_exception", lambda error: captured.append(error))
    error = ValueError("boom")

    report_failure("hasse", "vertex 1\n", error, enabled=False)
    assert captured == []

    report_failure("hasse", "vertex 1\n", error, enabled=True)
    assert captured == [("silting.command", "hasse"), ("silting.algebra", {"text": "vertex 1\n"}), error]
