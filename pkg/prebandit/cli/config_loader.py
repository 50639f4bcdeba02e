"""Load experiment files (TOML) into validated SimulationConfig objects."""

import re
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Optional, Sequence, Union

from pydantic import ValidationError

from prebandit.core.errors import ConfigError
from prebandit.sim.schemas import SimulationConfig

_DECODE_LINE = re.compile(r"line (\d+)")


def _key_pattern(key: str) -> re.Pattern:
    name = re.escape(key)
    return re.compile(rf'^\s*(?:"{name}"|{name})\s*=|^\s*\[\[?\s*{name}\s*\]\]?\s*(?:#.*)?$')


def _table_array_pattern(key: str) -> re.Pattern:
    return re.compile(rf"^\s*\[\[\s*{re.escape(key)}\s*\]\]")


def locate(text: str, loc: Sequence[Union[str, int]]) -> Optional[int]:
    """
    Best-effort 1-based line number of the key addressed by a validation ``loc``.

    Walks the path from the top of the document: string parts match ``key =``
    lines or table headers, an integer after a table-array name selects the
    n-th ``[[name]]`` block. Parts that do not appear in the file (such as the
    discriminator tag pydantic adds for tagged unions) are skipped.
    """
    lines = text.splitlines()
    start = 0
    found: Optional[int] = None
    previous: Optional[str] = None

    for part in loc:
        if isinstance(part, int):
            if previous is None:
                continue
            pattern = _table_array_pattern(previous)
            hits = [k for k, line in enumerate(lines) if pattern.match(line)]
            if part < len(hits):
                start = hits[part]
                found = start + 1
            continue

        pattern = _key_pattern(part)
        for k in range(start, len(lines)):
            if pattern.match(lines[k]):
                start = k
                found = k + 1
                break
        previous = part

    return found


def parse_config(text: str) -> SimulationConfig:
    """
    Parse and validate an experiment document.

    Raises:
        ConfigError: With the offending line when it can be determined
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        match = _DECODE_LINE.search(str(e))
        raise ConfigError(f"invalid TOML: {e}", int(match.group(1)) if match else None) from e

    try:
        return SimulationConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        loc = first.get("loc", ())
        where = ".".join(str(part) for part in loc) or "<document>"
        message = f"{where}: {first['msg']}"
        if e.error_count() > 1:
            message += f" (and {e.error_count() - 1} more error(s))"
        raise ConfigError(message, locate(text, loc)) from e


def load_config(path: Union[str, Path]) -> SimulationConfig:
    """Read and validate an experiment file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e
    return parse_config(text)
