"""JSON file helpers shared by the CLI, runner and merge."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Optional

from qschur.errors import CodecError


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def write_json(path: Path, payload: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(payload) + "\n", encoding="utf-8")


def read_json(path: Path) -> Any:
    if not path.exists():
        raise FileNotFoundError(f"{path} not found")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CodecError(f"{path} is not valid JSON: {exc}") from exc


def read_json_source(source: Optional[Path]) -> Any:
    """Read JSON from a file, or from standard input when source is None or '-'."""
    if source is None or str(source) == "-":
        text = sys.stdin.read()
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise CodecError(f"standard input is not valid JSON: {exc}") from exc
    return read_json(source)
