"""Plain-text matrix files.

One matrix row per line, entries separated by whitespace, each an integer
or ``p/q``. Text after ``#`` is ignored. A file with no rows is the 0x0
matrix.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .exact import Matrix


def parse_matrix(text: str) -> Matrix:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        try:
            row = [Fraction(tok) for tok in body]
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: bad rational in {raw.strip()!r}") from None
        if any("." in tok or "e" in tok.lower() for tok in body):
            raise ParseError(f"line {lineno}: entries must be integers or p/q, got {raw.strip()!r}")
        if width is not None and len(row) != width:
            raise ParseError(f"line {lineno}: {len(row)} entries, expected {width}")
        width = len(row)
        rows.append(row)
    return Matrix(rows)


def format_scalar(x: Fraction) -> str:
    return str(x)


def format_matrix(a: Matrix) -> str:
    return "".join(" ".join(format_scalar(x) for x in row) + "\n" for row in a)


def read_matrix(path) -> Matrix:
    return parse_matrix(Path(path).read_text())


def write_matrix(path, a: Matrix) -> None:
    Path(path).write_text(format_matrix(a))
