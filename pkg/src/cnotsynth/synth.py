"""CNOT synthesis by partitioned row reduction, plus a Gaussian baseline.

Both synthesizers run two reduction passes. The lower pass row-reduces
``A`` to an upper triangular ``U``; the upper pass row-reduces
``transpose(U)`` to the identity. If the lower pass applied row operations
``L1..Lp`` and the upper pass ``F1..Fq``, then

    A = L1 ... Lp  F1^T ... Fq^T   (as elementary matrices)

so the circuit in application order is ``swap(F1) .. swap(Fq), Lp .. L1``.
A row operation ``(src, dst)`` is the gate with control ``src`` and target
``dst``; transposing its elementary matrix swaps the two roles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .circuit import Circuit, CnotGate, eval_matrix
from .gf2 import BitMatrix, DimensionError, transpose

MAX_SECTION_WIDTH = 24

RowOp = tuple[int, int]


class SingularMatrixError(ValueError):
    """Raised when no pivot exists for some column during reduction.

    Attributes:
        column: 0-based column (within the matrix being reduced) lacking a pivot.
    """

    def __init__(self, column: int):
        super().__init__(f"matrix is singular: no pivot for column {column}")
        self.column = column


@dataclass
class SynthOptions:
    """Knobs for :func:`cnot_synth_pmh`.

    Args:
        m: Section width in columns. ``None`` picks :func:`default_section_size`.
    """

    m: int | None = None


@dataclass
class SynthReport:
    n: int
    m_used: int
    gate_count_total: int = 0
    gates_step_a: int = 0
    gates_step_b: int = 0
    gates_step_c: int = 0
    upper_step_b: int = 0
    notes: list[str] = field(default_factory=list)

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "m": self.m_used,
                "total": self.gate_count_total,
                "step_a": self.gates_step_a,
                "step_b": self.gates_step_b,
                "step_c": self.gates_step_c,
            }
        )


@dataclass
class _PassStats:
    step_a: int = 0
    step_b: int = 0
    step_c: int = 0


def _pivot_and_clear(rows: list[int], n: int, col: int, ops: list[RowOp], stats: _PassStats):
    bit = 1 << col
    if not rows[col] & bit:
        for r in range(col + 1, n):
            if rows[r] & bit:
                rows[col] ^= rows[r]
                ops.append((r, col))
                stats.step_b += 1
                break
        else:
            raise SingularMatrixError(col)
    pivot = rows[col]
    for r in range(col + 1, n):
        if rows[r] & bit:
            rows[r] ^= pivot
            ops.append((col, r))
            stats.step_c += 1


def _lower_pass(rows: list[int], n: int, m: int) -> tuple[list[RowOp], _PassStats]:
    """Reduce ``rows`` in place to upper triangular form, section by section."""
    ops: list[RowOp] = []
    stats = _PassStats()
    for start in range(0, n, m):
        width = min(m, n - start)
        mask = (1 << width) - 1
        # first row holding each nonzero sub-row pattern; later copies get it added
        first = [-1] * (1 << width)
        for r in range(start, n):
            pattern = (rows[r] >> start) & mask
            if pattern == 0:
                continue
            keeper = first[pattern]
            if keeper < 0:
                first[pattern] = r
            else:
                rows[r] ^= rows[keeper]
                ops.append((keeper, r))
                stats.step_a += 1
        for col in range(start, start + width):
            _pivot_and_clear(rows, n, col, ops, stats)
    return ops, stats


def _gauss_lower_pass(rows: list[int], n: int) -> tuple[list[RowOp], _PassStats]:
    ops: list[RowOp] = []
    stats = _PassStats()
    for col in range(n):
        _pivot_and_clear(rows, n, col, ops, stats)
    return ops, stats


def lwr_cnot_synth(A: BitMatrix, m: int) -> tuple[BitMatrix, list[RowOp]]:
    """Run one partitioned reduction pass on a copy of ``A``.

    Args:
        A: Square bit matrix.
        m: Section width, ``1 <= m``; sections past column ``n`` are clipped.

    Returns:
        ``(reduced, ops)`` where ``reduced`` is upper triangular with a unit
        diagonal and replaying ``ops`` (``(src, dst)`` pairs, application
        order) on ``A`` with :func:`~cnotsynth.gf2.add_row` yields ``reduced``.

    Raises:
        SingularMatrixError: if ``A`` is singular.
    """
    if m < 1:
        raise ValueError(f"section width must be positive, got {m}")
    rows = list(A.rows)
    ops, _ = _lower_pass(rows, A.n, min(m, A.n, MAX_SECTION_WIDTH))
    return BitMatrix(A.n, rows), ops


def _combine(n: int, lower_ops: list[RowOp], upper_ops: list[RowOp]) -> Circuit:
    gates = [CnotGate(dst, src) for src, dst in upper_ops]
    gates.extend(CnotGate(src, dst) for src, dst in reversed(lower_ops))
    return Circuit(n, tuple(gates))


def _resolve_m(n: int, options: SynthOptions | int | None, report_notes: list[str]) -> int:
    if isinstance(options, int):
        options = SynthOptions(m=options)
    requested = options.m if options is not None else None
    if requested is None:
        return default_section_size(n)
    hi = min(n, MAX_SECTION_WIDTH)
    m = max(1, min(requested, hi))
    if m != requested:
        report_notes.append(f"section width {requested} clamped to {m}")
    return m


def cnot_synth_pmh(A: BitMatrix, options: SynthOptions | int | None = None) -> tuple[Circuit, SynthReport]:
    """Synthesize a CNOT circuit for ``A`` with sectioned pattern elimination.

    Args:
        A: Invertible bit matrix.
        options: :class:`SynthOptions`, or a bare section width.

    Returns:
        ``(circuit, report)`` with ``eval_matrix(circuit) == A``.

    Raises:
        SingularMatrixError: if ``A`` is singular.
    """
    notes: list[str] = []
    m = _resolve_m(A.n, options, notes)
    rows = list(A.rows)
    lower_ops, lower = _lower_pass(rows, A.n, m)
    upper_rows = transpose(BitMatrix(A.n, rows)).rows
    upper_ops, upper = _lower_pass(upper_rows, A.n, m)
    circuit = _combine(A.n, lower_ops, upper_ops)
    report = SynthReport(
        n=A.n,
        m_used=m,
        gate_count_total=len(circuit),
        gates_step_a=lower.step_a + upper.step_a,
        gates_step_b=lower.step_b + upper.step_b,
        gates_step_c=lower.step_c + upper.step_c,
        upper_step_b=upper.step_b,
        notes=notes,
    )
    return circuit, report


def gaussian_synth(A: BitMatrix) -> tuple[Circuit, SynthReport]:
    """Baseline synthesis by column-at-a-time Gaussian elimination.

    Uses at most ``n**2`` gates. The report's ``m_used`` is 0 since no
    sectioning takes place.
    """
    rows = list(A.rows)
    lower_ops, lower = _gauss_lower_pass(rows, A.n)
    upper_rows = transpose(BitMatrix(A.n, rows)).rows
    upper_ops, upper = _gauss_lower_pass(upper_rows, A.n)
    circuit = _combine(A.n, lower_ops, upper_ops)
    report = SynthReport(
        n=A.n,
        m_used=0,
        gate_count_total=len(circuit),
        gates_step_b=lower.step_b + upper.step_b,
        gates_step_c=lower.step_c + upper.step_c,
        upper_step_b=upper.step_b,
    )
    return circuit, report


def default_section_size(n: int) -> int:
    """``round(log2(n) / 2)`` rounding halves up, and at least 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return max(1, math.floor(math.log2(n) / 2 + 0.5))


def lower_bound_gates(n: int) -> float:
    """Counting lower bound ``(n^2 - n) / log2(n^2 - n + 1)`` on worst-case gate count."""
    if n < 2:
        raise ValueError(f"lower bound needs n >= 2, got {n}")
    return (n * n - n) / math.log2(n * n - n + 1)


def lower_bound_gates_ceil(n: int) -> int:
    return math.ceil(lower_bound_gates(n))


def upper_bound_row_ops(n: int, m: int) -> int:
    """Worst-case row operation count of :func:`cnot_synth_pmh` with section width ``m``.

    ``(n + m) * ceil(n/m) + n + 2 * ceil(n/m) * m * (2**m + m)``
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 1 <= m <= n:
        raise ValueError(f"section width must satisfy 1 <= m <= n, got m={m}, n={n}")
    sections = -(-n // m)
    return (n + m) * sections + n + 2 * sections * m * ((1 << m) + m)


def verify(A: BitMatrix, circuit: Circuit) -> bool:
    if circuit.n != A.n:
        raise DimensionError(f"circuit has {circuit.n} wires but matrix is {A.n}x{A.n}")
    return eval_matrix(circuit).rows == A.rows
