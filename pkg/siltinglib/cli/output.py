"""Rendering of command results as text, JSON, CSV or DOT."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

import networkx as nx

from siltinglib.cli.cache import SCHEMA, write_atomic


class FormatUnavailable(Exception):
    """Raised when a command has nothing to show in the requested format."""


@dataclass
class Result:
    """
    What a command produced: a JSON document, always, plus optional table rows for
    CSV, a graph for DOT and lines for the terminal. ``ok`` false means exit code 2.
    """

    command: str
    document: dict
    lines: List[str] = field(default_factory=list)
    rows: Optional[List[dict]] = None
    graph: Optional[nx.Graph] = None
    ok: bool = True

    def full_document(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "ok": self.ok, **self.document}


def to_dot(graph: nx.Graph) -> str:
    return nx.nx_pydot.to_pydot(graph).to_string()


def to_csv(rows: List[dict]) -> str:
    buffer = io.StringIO()
    if rows:
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buffer.getvalue()


def render(result: Result, fmt: str) -> str:
    """
    :raises FormatUnavailable: for CSV without rows or DOT without a graph
    """
    if fmt == "json":
        return json.dumps(result.full_document(), indent=1) + "\n"
    if fmt == "csv":
        if result.rows is None:
            raise FormatUnavailable(f"'{result.command}' has no table to write as csv")
        return to_csv(result.rows)
    if fmt == "dot":
        if result.graph is None:
            raise FormatUnavailable(f"'{result.command}' has no graph to write as dot")
        return to_dot(result.graph)
    return "".join(line + "\n" for line in result.lines)


def write_json(result: Result, path: Path) -> None:
    write_atomic(Path(path), result.full_document())
