"""Dense square bit matrices over GF(2).

Each row is packed into a Python ``int``: column ``c`` lives at bit ``c``
(least significant bit is column 0). Adding one row to another is then a
single XOR of two integers, which is the operation everything else in the
package is built from.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised for empty or mismatched matrix dimensions."""


class MatrixParseError(ValueError):
    """Raised when matrix text cannot be parsed.

    Attributes:
        line: 1-based line number of the offending line.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(eq=True)
class BitMatrix:
    """Square ``n x n`` matrix over GF(2) with bit-packed rows.

    Args:
        n: Dimension (number of wires).
        rows: ``n`` integers; bit ``c`` of ``rows[r]`` is entry ``(r, c)``.
    """

    n: int
    rows: list[int] = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"dimension must be positive, got {self.n}")
        if len(self.rows) != self.n:
            raise DimensionError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for r, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise DimensionError(f"row {r} does not fit in {self.n} bits")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> BitMatrix:
        n = len(entries)
        rows = []
        for r, entry_row in enumerate(entries):
            if len(entry_row) != n:
                raise DimensionError(f"row {r} has length {len(entry_row)}, expected {n}")
            packed = 0
            for c, bit in enumerate(entry_row):
                if bit not in (0, 1):
                    raise ValueError(f"entry ({r}, {c}) is not a bit: {bit!r}")
                packed |= bit << c
            rows.append(packed)
        return cls(n, rows)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> BitMatrix:
        """Build from strings like ``"1100"``; character ``c`` is column ``c``."""
        return cls.from_lists([[int(ch) for ch in line] for line in lines])

    def to_lists(self) -> list[list[int]]:
        return [[(row >> c) & 1 for c in range(self.n)] for row in self.rows]

    def to_strings(self) -> list[str]:
        return ["".join("1" if (row >> c) & 1 else "0" for c in range(self.n)) for row in self.rows]

    def copy(self) -> BitMatrix:
        return BitMatrix(self.n, list(self.rows))

    def get(self, r: int, c: int) -> int:
        return (self.rows[r] >> c) & 1

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def identity(n: int) -> BitMatrix:
    if n < 1:
        raise DimensionError(f"dimension must be positive, got {n}")
    return BitMatrix(n, [1 << i for i in range(n)])


def zeros(n: int) -> BitMatrix:
    return BitMatrix(n, [0] * n)


def elementary(n: int, src: int, dst: int) -> BitMatrix:
    """Identity with entry ``(dst, src)`` set; left-multiplying adds row ``src`` to row ``dst``."""
    _check_pair(n, src, dst)
    m = identity(n)
    m.rows[dst] |= 1 << src
    return m


def _check_pair(n: int, src: int, dst: int) -> None:
    if not (0 <= src < n and 0 <= dst < n):
        raise IndexError(f"row index out of range for n={n}: src={src}, dst={dst}")
    if src == dst:
        raise ValueError(f"cannot add row {src} to itself")


def add_row(matrix: BitMatrix, src: int, dst: int) -> BitMatrix:
    """XOR row ``src`` into row ``dst`` in place and return ``matrix``.

    Raises:
        ValueError: if ``src == dst``.
        IndexError: if either index is outside ``[0, n)``.
    """
    _check_pair(matrix.n, src, dst)
    matrix.rows[dst] ^= matrix.rows[src]
    return matrix


def transpose(matrix: BitMatrix) -> BitMatrix:
    n = matrix.n
    out = [0] * n
    for r, row in enumerate(matrix.rows):
        bit = 1 << r
        while row:
            low = row & -row
            out[low.bit_length() - 1] |= bit
            row ^= low
    return BitMatrix(n, out)


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product ``a @ b`` over GF(2)."""
    if a.n != b.n:
        raise DimensionError(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    out = []
    for row in a.rows:
        acc = 0
        while row:
            low = row & -row
            acc ^= b.rows[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return BitMatrix(a.n, out)


def matvec(matrix: BitMatrix, x: Sequence[int]) -> list[int]:
    """Product of ``matrix`` with the column vector ``x``."""
    if len(x) != matrix.n:
        raise DimensionError(f"vector length {len(x)} does not match n={matrix.n}")
    packed = sum(bit << i for i, bit in enumerate(x))
    return [(row & packed).bit_count() & 1 for row in matrix.rows]


def rank(matrix: BitMatrix) -> int:
    # basis keyed by leading (highest) set bit; works on its own copy
    basis: dict[int, int] = {}
    for row in matrix.rows:
        while row:
            lead = row.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = row
                break
            row ^= pivot
    return len(basis)


def is_invertible(matrix: BitMatrix) -> bool:
    return rank(matrix) == matrix.n


def random_invertible(n: int, seed: int) -> BitMatrix:
    """Uniformly random element of GL(n, 2), deterministic in ``(n, seed)``.

    Draws uniform bit matrices and rejects singular ones. At least ~29% of
    all matrices are invertible for every ``n``, so few draws are needed.
    """
    if n < 1:
        raise DimensionError(f"dimension must be positive, got {n}")
    rng = random.Random(seed)
    while True:
        candidate = BitMatrix(n, [rng.getrandbits(n) for _ in range(n)])
        if is_invertible(candidate):
            return candidate


def count_linear_reversible(n: int) -> int:
    """Size of GL(n, 2): the product of ``2**n - 2**i`` for ``i < n``."""
    if n < 1:
        raise DimensionError(f"dimension must be positive, got {n}")
    full = 1 << n
    return math.prod(full - (1 << i) for i in range(n))


def parse_matrix(text: str) -> BitMatrix:
    """Parse the one-row-per-line ``0``/``1`` text format.

    The dimension is the length of the first line, and the file must hold
    exactly that many lines. A trailing newline is optional.

    Raises:
        MatrixParseError: naming the first offending line.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MatrixParseError("empty matrix", 1)
    lines = [line.rstrip("\r") for line in lines]
    n = len(lines[0])
    if n == 0:
        raise MatrixParseError("empty row", 1)
    rows = []
    for lineno, line in enumerate(lines, start=1):
        if len(line) != n:
            raise MatrixParseError(f"expected {n} characters, got {len(line)}", lineno)
        if lineno > n:
            raise MatrixParseError(f"matrix is not square: more than {n} rows", lineno)
        packed = 0
        for c, ch in enumerate(line):
            if ch == "1":
                packed |= 1 << c
            elif ch != "0":
                raise MatrixParseError(f"invalid character {ch!r} at column {c}", lineno)
        rows.append(packed)
    if len(rows) != n:
        raise MatrixParseError(
            f"matrix is not square: {len(rows)} rows of width {n}", len(rows) + 1
        )
    return BitMatrix(n, rows)


def format_matrix(matrix: BitMatrix) -> str:
    return "".join(line + "\n" for line in matrix.to_strings())
