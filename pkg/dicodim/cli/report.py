"""Rendering of command results as rich tables, JSON or CSV."""

import csv
import io
import json
from fractions import Fraction
from typing import Any

import typer
from rich.console import Console
from rich.table import Table


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "[green]✓[/green]" if value else "[red]✗[/red]"
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    return str(value)


class Report:
    """Results of one command invocation."""

    def __init__(self, command: str, inputs: dict[str, Any], title: str = ""):
        self.command = command
        self.inputs = inputs
        self.title = title or command
        self.rows: list[dict[str, Any]] = []
        self.notes: list[str] = []
        self.ok = True

    def add(self, row: dict[str, Any], passed: bool = True) -> None:
        self.rows.append(row)
        self.ok = self.ok and passed

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def status(self) -> str:
        return "ok" if self.ok else "failed"

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": _plain(self.inputs),
            "results": _plain(self.rows),
            "status": self.status,
        }
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        columns = self.columns()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: json.dumps(_plain(v)) if isinstance(v, (dict, list)) else _plain(v) for k, v in row.items()})
        return buf.getvalue()

    def columns(self) -> list[str]:
        cols: list[str] = []
        for row in self.rows:
            for key in row:
                if key not in cols:
                    cols.append(key)
        return cols

    def print(self, console: Console, fmt: str) -> None:
        if fmt == "json":
            typer.echo(self.to_json())
            return
        if fmt == "csv":
            typer.echo(self.to_csv(), nl=False)
            return
        table = Table(title=self.title)
        columns = self.columns()
        for col in columns:
            table.add_column(col, style="cyan" if col == columns[0] else None)
        for row in self.rows:
            table.add_row(*(_cell(row.get(col, "")) for col in columns))
        console.print(table)
        for text in self.notes:
            console.print(text)
        mark = "[green]✓[/green]" if self.ok else "[red]✗[/red]"
        console.print(f"{mark} {self.status}")
