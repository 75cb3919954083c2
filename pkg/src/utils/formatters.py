# src/utils/formatters.py
"""
Record formatting utilities.

Turns command results (lists of flat records) into CSV with a ``#``
header carrying the resolved run configuration, or into the matching
JSON document.
"""

import csv
import io
import json
import math
from enum import Enum
from typing import Any, Mapping, Sequence

from src.models import Interval, IntervalSet


def format_value(value: Any) -> str:
    """Render one cell; floats use repr() so output round-trips exactly."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        # JSON has no inf/nan literals
        return value if math.isfinite(value) else repr(value)
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, (Enum, Interval, IntervalSet)):
        return format_value(value)
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def render_csv(
    records: Sequence[Mapping[str, Any]],
    columns: Sequence[str],
    settings: Mapping[str, Any],
) -> str:
    """CSV text: sorted ``# key=value`` config lines, header row, one row per record."""
    buffer = io.StringIO()
    for key in sorted(settings):
        buffer.write(f"# {key}={format_value(settings[key])}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for record in records:
        writer.writerow([format_value(record.get(column)) for column in columns])
    return buffer.getvalue()


def render_json(
    records: Sequence[Mapping[str, Any]],
    columns: Sequence[str],
    settings: Mapping[str, Any],
) -> str:
    """JSON mirror of :func:`render_csv`."""
    document = {
        "config": {key: _jsonable(settings[key]) for key in sorted(settings)},
        "columns": list(columns),
        "records": [{column: _jsonable(record.get(column)) for column in columns} for record in records],
    }
    return json.dumps(document, indent=2) + "\n"


def parse_csv(text: str) -> tuple[dict[str, str], list[dict[str, str]]]:
    """Inverse of :func:`render_csv`, returning raw strings.

    Returns
    -------
    tuple[dict[str, str], list[dict[str, str]]]
        (config header, records keyed by column).
    """
    settings: dict[str, str] = {}
    body = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            settings[key] = value
        else:
            body.append(line)
    return settings, list(csv.DictReader(body))
