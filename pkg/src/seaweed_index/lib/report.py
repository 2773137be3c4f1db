"""
Output rendering for the command-line front end. Every renderer is deterministic: the same records give the same
bytes.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence

from pydantic import PositiveInt
from pydantic.dataclasses import dataclass

from seaweed_index.lib.constants import JOBS_DEFAULT, OUTPUT_FORMAT_DEFAULT

OutputFormat = Literal["text", "csv", "json"]


@dataclass(frozen=True)
class CommandConfig:
    """
    Everything that determines one run: the command, its output format and destination, and the worker count.
    """

    command: str
    output_format: OutputFormat = OUTPUT_FORMAT_DEFAULT
    output: Optional[Path] = None
    jobs: PositiveInt = JOBS_DEFAULT


def status_label(match: bool) -> str:
    return "MATCH" if match else "MISMATCH"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(item) for item in value)
    return str(value)


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()


def _dump_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [list(header)] + [[_cell(value) for value in row] for row in rows]
    widths = [max(len(row[column]) for row in cells) for column in range(len(header))]
    lines = ["  ".join(value.rjust(width) for value, width in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def render_table(header: Sequence[str], rows: Sequence[Sequence[Any]], output_format: OutputFormat) -> str:
    """
    Render a header and rows. JSON gives a list of objects keyed by the header.
    """
    if output_format == "json":
        return _dump_json([dict(zip(header, row)) for row in rows])
    if output_format == "csv":
        return _dump_csv(header, rows)
    return _dump_text(header, rows)


def render_records(records: Sequence[Dict[str, Any]], output_format: OutputFormat) -> str:
    """
    Render a list of records sharing the keys of the first one.
    """
    if output_format == "json":
        return _dump_json(list(records))
    header = list(records[0]) if records else []
    return render_table(header, [[record[key] for key in header] for record in records], output_format)


def render_mapping(record: Dict[str, Any], output_format: OutputFormat) -> str:
    """
    Render a single record. Text gives one `key=value` line per field, CSV a single header and row.
    """
    if output_format == "json":
        return _dump_json(record)
    if output_format == "csv":
        return _dump_csv(list(record), [list(record.values())])
    return "".join(f"{key}={_cell(value)}\n" for key, value in record.items())


def render_lines(lines: List[str]) -> str:
    return "".join(line + "\n" for line in lines)


def write_output(text: str, config: CommandConfig, stream) -> Optional[Path]:
    """
    Write rendered output to the configured file, or to `stream` when none is set.

    Returns:
        The file written, if any.
    """
    if config.output is None:
        stream.write(text)
        return None
    path = Path(config.output)
    path.write_text(text)
    return path
