#!/usr/bin/env python3
"""
scheme_file.py - JSON Import/Export of Splitting Schemes

File format (full coefficient sequences, complex numbers as [re, im] pairs,
every number written with 17 significant digits):

    {
      "name": "verlet",
      "order": 2,
      "cycles": 1,
      "a": [[0.5, 0], [0.5, 0]],
      "b": [[1, 0]]
    }

Loading re-runs every scheme invariant, so a file with sum(a) != 1 or a
non-palindromic list is rejected with a message naming the violation.

PYTHON API
==========

    from trotterkit.schemes.scheme_file import load_scheme, save_scheme, resolve_scheme

    save_scheme(get_scheme("forest-ruth"), "fr.json")
    scheme = load_scheme("fr.json")

    # Catalog name or path to a scheme file
    scheme = resolve_scheme("fr.json")
"""

import json
import os
from typing import Any, List, Sequence

from .scheme_catalog import SCHEME_NAMES, SplittingScheme, get_scheme

REQUIRED_KEYS = ("name", "order", "cycles", "a", "b")


class SchemeFileError(ValueError):
    """Scheme file is not valid JSON or does not have the expected shape."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


def _format_number(x: float) -> str:
    return format(x, ".17g")


def _format_coefficients(values: Sequence[complex]) -> str:
    pairs = (f"[{_format_number(x.real)}, {_format_number(x.imag)}]" for x in values)
    return "[" + ", ".join(pairs) + "]"


def scheme_to_json(scheme: SplittingScheme) -> str:
    """
    Serialise a scheme to the JSON scheme file format.

    Numbers are formatted explicitly so that every value carries 17 significant
    digits, which json.dumps does not guarantee.
    """
    lines = [
        "{",
        f'  "name": {json.dumps(scheme.name)},',
        f'  "order": {scheme.order},',
        f'  "cycles": {scheme.cycles},',
        f'  "a": {_format_coefficients(scheme.a)},',
        f'  "b": {_format_coefficients(scheme.b)}',
        "}",
    ]
    return "\n".join(lines) + "\n"


def _parse_coefficients(key: str, raw: Any) -> List[complex]:
    if not isinstance(raw, list):
        raise SchemeFileError(f"Field {key!r} must be a list of [re, im] pairs")
    values = []
    for index, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise SchemeFileError(f"Field {key!r}[{index}] is not a [re, im] pair: {pair!r}")
        values.append(complex(pair[0], pair[1]))
    return values


def scheme_from_json(text: str) -> SplittingScheme:
    """
    Parse the JSON scheme file format.

    Raises:
        SchemeFileError: If the text is not JSON (with line/column) or a field is missing
                         or malformed
        ValueError: If the coefficients violate a scheme invariant
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemeFileError(f"Invalid JSON in scheme file: {e.msg}", e.lineno, e.colno) from e

    if not isinstance(data, dict):
        raise SchemeFileError("Scheme file must contain a JSON object")
    missing = [key for key in REQUIRED_KEYS if key not in data]
    if missing:
        raise SchemeFileError(f"Scheme file is missing field(s): {', '.join(missing)}")
    if not isinstance(data["name"], str) or not data["name"]:
        raise SchemeFileError(f"Field 'name' must be a non-empty string, got {data['name']!r}")
    for key in ("order", "cycles"):
        if not isinstance(data[key], int) or isinstance(data[key], bool):
            raise SchemeFileError(f"Field {key!r} must be an integer, got {data[key]!r}")

    return SplittingScheme(
        name=data["name"],
        order=data["order"],
        cycles=data["cycles"],
        a=tuple(_parse_coefficients("a", data["a"])),
        b=tuple(_parse_coefficients("b", data["b"])),
    )


def save_scheme(scheme: SplittingScheme, path: str) -> None:
    """Write a scheme file, or to stdout when path is '-'."""
    text = scheme_to_json(scheme)
    if path == "-":
        print(text, end="")
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def load_scheme(path: str) -> SplittingScheme:
    """Read and validate a scheme file."""
    with open(path, "r", encoding="utf-8") as f:
        return scheme_from_json(f.read())


def resolve_scheme(name_or_path: str) -> SplittingScheme:
    """
    Catalog identifier or scheme file path to a scheme.

    Catalog names take precedence; anything else that exists on disk is loaded as a
    scheme file, and the rest falls through to get_scheme for the usual lookup error.
    """
    if name_or_path in SCHEME_NAMES:
        return get_scheme(name_or_path)
    if os.path.isfile(name_or_path):
        return load_scheme(name_or_path)
    return get_scheme(name_or_path)
