"""Text formats for projective and affine arrangements."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement, ArrangementError
from .regions import AffineArrangement


class InputError(ValueError):
    pass


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _rational(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"line {lineno}: not a rational number: {tok!r}") from None


def _read_table(text: str, width_of) -> tuple[int, list[list[Fraction]]]:
    records = list(_records(text))
    if not records:
        raise InputError("empty arrangement file")
    lineno, header = records[0]
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise InputError(f"line {lineno}: header must be 'n d'")
    n, d = int(header[0]), int(header[1])
    width = width_of(n)
    rows = []
    for lineno, fields in records[1:]:
        if len(fields) != width:
            raise InputError(f"line {lineno}: expected {width} fields, got {len(fields)}")
        rows.append([_rational(f, lineno) for f in fields])
    if len(rows) != d:
        raise InputError(f"header announces {d} rows, file has {len(rows)}")
    return n, rows


def parse_arrangement(text: str) -> Arrangement:
    n, rows = _read_table(text, lambda n: n + 1)
    try:
        return Arrangement(n, tuple(tuple(r) for r in rows))
    except ArrangementError as exc:
        raise InputError(str(exc)) from None


def parse_arrangement_file(path) -> Arrangement:
    return parse_arrangement(Path(path).read_text())


def parse_affine(text: str) -> AffineArrangement:
    n, rows = _read_table(text, lambda n: n + 1)
    try:
        return AffineArrangement(n, tuple((tuple(r[:-1]), r[-1]) for r in rows))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_affine_file(path) -> AffineArrangement:
    return parse_affine(Path(path).read_text())


def format_arrangement(A: Arrangement) -> str:
    lines = [f"{A.n} {A.d}"]
    lines += [" ".join(str(c) for c in f) for f in A.forms]
    return "\n".join(lines) + "\n"


def format_affine(A: AffineArrangement) -> str:
    lines = [f"{A.n} {A.d}"]
    lines += [" ".join(str(c) for c in normal + (off,)) for normal, off in A.hyperplanes]
    return "\n".join(lines) + "\n"
