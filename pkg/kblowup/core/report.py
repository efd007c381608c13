"""
KBlowup Core - Report Encoding

A Report collects verdicts (flat key/value sections), tables and a
deduction log. Two renderings:

- machine: line-oriented, byte-deterministic
    sections as dot-flattened `key:value` pairs joined by "|"
    tables as "@count:N", a header line and comma-separated rows
- text: rich tables and panels for a terminal
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table


@dataclass
class Report:
    """Everything a job produced, in insertion order."""
    command: str
    status: str = "ok"
    exit_code: int = 0
    sections: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    tables: Dict[str, List[Dict[str, Any]]] = field(default_factory=dict)
    log: List[str] = field(default_factory=list)

    def section(self, name: str, values: Dict[str, Any]) -> None:
        self.sections.setdefault(name, {}).update(values)

    def table(self, name: str, rows: List[Dict[str, Any]]) -> None:
        self.tables[name] = rows

    def fail(self, status: str, exit_code: int, message: str) -> None:
        self.status = status
        self.exit_code = exit_code
        self.section("error", {"message": message})


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "T" if value else "F"
    if isinstance(value, Enum):
        return str(value.value)
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return ";".join(_scalar(v) for v in value)
    return str(value)


def _clean(text: str) -> str:
    """Keep separators out of cell values."""
    return text.replace("\n", " ").replace("|", "/").replace(",", ";")


class ReportEncoder:
    """Machine encoding of reports: tables and flattened objects."""

    def encode(self, data: Any) -> str:
        if isinstance(data, Report):
            return self.encode_report(data)
        if isinstance(data, list) and data and isinstance(data[0], dict):
            return self.encode_table(data)
        if isinstance(data, dict):
            return self.encode_object(data)
        return _scalar(data)

    def encode_table(self, rows: List[Dict[str, Any]]) -> str:
        """@count:N, then headers, then one line per row"""
        if not rows:
            return "@count:0"
        headers = list(rows[0].keys())
        lines = [",".join(_clean(_scalar(row.get(h))) for h in headers) for row in rows]
        return f"@count:{len(rows)}\n{','.join(headers)}\n" + "\n".join(lines)

    def flatten(self, data: Dict[str, Any], prefix: str = "") -> List[tuple[str, str]]:
        """Dot-notation (key, value) pairs of a nested dict"""
        pairs = []
        for k, v in data.items():
            key = f"{prefix}.{k}" if prefix else str(k)
            if isinstance(v, dict):
                pairs.extend(self.flatten(v, key))
            else:
                pairs.append((key, _scalar(v)))
        return pairs

    def encode_object(self, data: Dict[str, Any], prefix: str = "") -> str:
        return "|".join(f"{key}:{_clean(value)}" for key, value in self.flatten(data, prefix))

    def encode_report(self, report: Report) -> str:
        lines = [self.encode_object({"command": report.command, "status": report.status, "exit": report.exit_code})]
        for name, values in report.sections.items():
            lines.append(f"#section {name}")
            lines.append(self.encode_object(values))
        for name, rows in report.tables.items():
            lines.append(f"#table {name}")
            lines.append(self.encode_table(rows))
        if report.log:
            lines.append(f"#log @count:{len(report.log)}")
            lines.extend(_clean(entry) for entry in report.log)
        return "\n".join(lines) + "\n"


def render_text(report: Report, console: Console) -> None:
    """Human rendering of a report on a rich console."""
    style = "green" if report.exit_code == 0 else "red"
    console.print(Panel(
        f"[bold]{report.command}[/bold]  status: [{style}]{report.status}[/{style}]",
        border_style=style,
        expand=False,
    ))
    for name, values in report.sections.items():
        table = Table(title=name, title_style="bold cyan", show_header=False, border_style="cyan")
        table.add_column("key", style="bold")
        table.add_column("value")
        for key, value in report_encoder.flatten(values):
            table.add_row(key, escape(value))
        console.print(table)
    for name, rows in report.tables.items():
        table = Table(title=name, title_style="bold cyan", header_style="bold magenta", border_style="cyan")
        if not rows:
            console.print(f"[dim]{name}: empty[/dim]")
            continue
        headers = list(rows[0].keys())
        for h in headers:
            table.add_column(h)
        for row in rows:
            table.add_row(*(escape(_scalar(row.get(h))) for h in headers))
        console.print(table)
    if report.log:
        console.print("[bold]Deductions[/bold]")
        for entry in report.log:
            console.print(f"  [dim]{escape(entry)}[/dim]")


report_encoder = ReportEncoder()
