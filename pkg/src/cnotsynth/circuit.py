"""CNOT circuits: gate lists in application order and their matrices.

Wire ``i`` corresponds to matrix row ``i`` (0-based). A gate with control
``c`` and target ``t`` is the row operation "add row c to row t", i.e. the
elementary matrix with entry ``(t, c)`` set. A circuit ``[g1, g2, ..., gk]``
evaluates to ``Ek @ ... @ E2 @ E1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import BitMatrix, DimensionError, identity


class CircuitParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, slots=True)
class CnotGate:
    control: int
    target: int

    def __post_init__(self):
        if self.control < 0 or self.target < 0:
            raise ValueError(f"negative wire index in {self}")
        if self.control == self.target:
            raise ValueError(f"control and target are both wire {self.control}")

    def swapped(self) -> CnotGate:
        return CnotGate(self.target, self.control)


@dataclass(frozen=True)
class Circuit:
    """An ``n``-wire CNOT circuit; ``gates[0]`` acts first."""

    n: int
    gates: tuple[CnotGate, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"wire count must be positive, got {self.n}")
        gates = tuple(g if isinstance(g, CnotGate) else CnotGate(*g) for g in self.gates)
        for g in gates:
            if g.control >= self.n or g.target >= self.n:
                raise IndexError(f"{g} out of range for {self.n} wires")
        object.__setattr__(self, "gates", gates)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Circuit:
        return cls(n, tuple(CnotGate(c, t) for c, t in pairs))

    def pairs(self) -> list[tuple[int, int]]:
        return [(g.control, g.target) for g in self.gates]

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def then(self, other: Circuit) -> Circuit:
        """This circuit followed by ``other``."""
        if other.n != self.n:
            raise DimensionError(f"cannot join {self.n}-wire and {other.n}-wire circuits")
        return Circuit(self.n, self.gates + other.gates)


def apply_to_vector(circuit: Circuit, x: Sequence[int]) -> list[int]:
    if len(x) != circuit.n:
        raise DimensionError(f"vector length {len(x)} does not match {circuit.n} wires")
    out = list(x)
    for g in circuit.gates:
        out[g.target] ^= out[g.control]
    return out


def eval_matrix(circuit: Circuit) -> BitMatrix:
    m = identity(circuit.n)
    rows = m.rows
    for g in circuit.gates:
        rows[g.target] ^= rows[g.control]
    return m


def reverse(circuit: Circuit) -> Circuit:
    return Circuit(circuit.n, circuit.gates[::-1])


def swap_control_target(circuit: Circuit) -> Circuit:
    return Circuit(circuit.n, tuple(g.swapped() for g in circuit.gates))


def inverse(circuit: Circuit) -> Circuit:
    # every CNOT is its own inverse
    return reverse(circuit)


def serialize_circuit(circuit: Circuit) -> str:
    lines = [f"wires {circuit.n}"]
    lines.extend(f"cnot {g.control} {g.target}" for g in circuit.gates)
    return "\n".join(lines) + "\n"


def _parse_index(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise CircuitParseError(f"invalid wire index {token!r}", lineno)
    return int(token)


def parse_circuit(text: str) -> Circuit:
    """Parse the ``wires <n>`` / ``cnot <control> <target>`` text format.

    Blank lines and lines starting with ``#`` are ignored.

    Raises:
        CircuitParseError: naming the 1-based line that failed.
    """
    n = None
    gates = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "wires":
                raise CircuitParseError("expected header 'wires <n>'", lineno)
            n = _parse_index(tokens[1], lineno)
            if n < 1:
                raise CircuitParseError("wire count must be positive", lineno)
            continue
        if len(tokens) != 3 or tokens[0] != "cnot":
            raise CircuitParseError(f"expected 'cnot <control> <target>', got {line!r}", lineno)
        control = _parse_index(tokens[1], lineno)
        target = _parse_index(tokens[2], lineno)
        if control >= n or target >= n:
            raise CircuitParseError(f"wire index out of range for {n} wires", lineno)
        if control == target:
            raise CircuitParseError("control and target must differ", lineno)
        gates.append(CnotGate(control, target))
    if n is None:
        raise CircuitParseError("missing 'wires <n>' header", lineno + 1)
    return Circuit(n, tuple(gates))
