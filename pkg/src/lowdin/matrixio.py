"""Reading and writing matrices as delimited text files.

One matrix row per line, comma (csv) or tab (tsv) delimited.  Blank
lines and lines starting with ``#`` are skipped.  Each token is a real
decimal or a complex literal ``a+bi`` / ``a-bi`` with no spaces and an
``i`` suffix, e.g. ``1.5``, ``-2e-3``, ``0+1i``, ``3.25-0.5i``.

At the default precision of 17 significant digits values are written in
shortest-round-trip form, so ``parse(write(A)) == A`` exactly.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

_DEC = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TOKEN_RE = re.compile(rf"^(?P<re>[+-]?{_DEC})(?:(?P<im>[+-]{_DEC})i)?$")

_DELIMITERS = {"csv": ",", "tsv": "\t"}


class MatrixFileError(Exception):
    """Base class for matrix file format problems."""


class ParseError(MatrixFileError):
    """A token does not match the number grammar."""

    def __init__(self, line, column, token):
        super().__init__(f"line {line}, column {column}: bad token {token!r}")
        self.line = line
        self.column = column
        self.token = token


class RaggedRows(MatrixFileError):
    """Two rows have different lengths."""

    def __init__(self, line, expected, found):
        super().__init__(
            f"line {line}: row has {found} entries, earlier rows have {expected}"
        )
        self.line = line
        self.expected = expected
        self.found = found


class EmptyMatrix(MatrixFileError):
    """The file contains no data rows."""


def delimiter_for(fmt: str) -> str:
    try:
        return _DELIMITERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}, expected one of {sorted(_DELIMITERS)}")


def parse_token(token: str) -> complex:
    match = _TOKEN_RE.match(token)
    if match is None:
        raise ValueError(f"bad numeric token {token!r}")
    real = float(match.group("re"))
    imag_text = match.group("im")
    imag = float(imag_text) if imag_text is not None else 0.0
    return complex(real, imag)


def parse_matrix_text(text: str, fmt: str = "csv") -> np.ndarray:
    """Parse delimited text into a complex matrix.

    Raises ParseError (with line and 1-based token column), RaggedRows,
    or EmptyMatrix.
    """
    delimiter = delimiter_for(fmt)
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [tok.strip() for tok in line.split(delimiter)]
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise RaggedRows(line=lineno, expected=width, found=len(tokens))
        row = []
        for column, token in enumerate(tokens, start=1):
            try:
                row.append(parse_token(token))
            except ValueError:
                raise ParseError(line=lineno, column=column, token=token) from None
        rows.append(row)
    if not rows:
        raise EmptyMatrix("no data rows in matrix file")
    return np.array(rows, dtype=np.complex128)


def parse_matrix_file(path, fmt: str = "csv") -> np.ndarray:
    return parse_matrix_text(Path(path).read_text(encoding="utf-8"), fmt)


def _format_real(x: float, precision: int) -> str:
    if precision >= 17:
        return repr(float(x))
    return format(float(x), f".{precision}g")


def format_value(value, precision: int = 17) -> str:
    """Render one entry in the grammar this module parses."""
    z = complex(value)
    if z.imag == 0.0:
        return _format_real(z.real, precision)
    sign = "+" if z.imag > 0.0 else "-"
    return f"{_format_real(z.real, precision)}{sign}{_format_real(abs(z.imag), precision)}i"


def format_matrix(a, precision: int = 17, fmt: str = "csv") -> str:
    """Render a matrix (1-D input becomes a column) as delimited text."""
    delimiter = delimiter_for(fmt)
    arr = np.asarray(a)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    lines = [
        delimiter.join(format_value(entry, precision) for entry in row) for row in arr
    ]
    return "\n".join(lines) + "\n"


def write_matrix_file(path, a, fmt: str = "csv", precision: int = 17) -> None:
    Path(path).write_text(format_matrix(a, precision, fmt), encoding="utf-8", newline="\n")
