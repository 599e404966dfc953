import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cnotsynth.circuit import (
    Circuit,
    CircuitParseError,
    CnotGate,
    apply_to_vector,
    eval_matrix,
    inverse,
    parse_circuit,
    reverse,
    serialize_circuit,
    swap_control_target,
)
from cnotsynth.gf2 import elementary, identity, matvec, multiply, transpose


@st.composite
def circuits(draw, max_n=8, max_gates=30):
    n = draw(st.integers(2, max_n))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=max_gates,
        )
    )
    return Circuit.from_pairs(n, pairs)


def random_circuit(rng, n, length):
    pairs = []
    for _ in range(length):
        c, t = rng.sample(range(n), 2)
        pairs.append((c, t))
    return Circuit.from_pairs(n, pairs)


def product_oracle(circuit):
    """E_k ... E_1 by dense elementary-matrix multiplication."""
    m = identity(circuit.n)
    for g in circuit.gates:
        m = multiply(elementary(circuit.n, g.control, g.target), m)
    return m


def test_gate_validation():
    with pytest.raises(ValueError):
        CnotGate(1, 1)
    with pytest.raises(IndexError):
        Circuit.from_pairs(2, [(0, 2)])


def test_apply_to_vector_examples():
    assert apply_to_vector(Circuit(3), [1, 0, 1]) == [1, 0, 1]
    single = Circuit.from_pairs(2, [(0, 1)])
    assert apply_to_vector(single, [1, 0]) == [1, 1]
    assert apply_to_vector(single, [0, 1]) == [0, 1]
    # full truth table of the controlled-NOT
    table = {(0, 0): [0, 0], (0, 1): [0, 1], (1, 0): [1, 1], (1, 1): [1, 0]}
    for x, y in table.items():
        assert apply_to_vector(single, list(x)) == y


def test_eval_examples(fig2_circuit, fig2_matrix):
    assert eval_matrix(Circuit(4)) == identity(4)
    assert eval_matrix(fig2_circuit) == fig2_matrix
    assert eval_matrix(Circuit.from_pairs(2, [(0, 1)])).to_lists() == [[1, 0], [1, 1]]


@given(circuits())
def test_eval_matches_product_oracle(c):
    assert eval_matrix(c) == product_oracle(c)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_apply_matches_eval_exhaustively(n):
    rng = random.Random(n)
    for _ in range(20):
        c = random_circuit(rng, n, 12) if n > 1 else Circuit(1)
        m = eval_matrix(c)
        for x in itertools.product((0, 1), repeat=n):
            assert apply_to_vector(c, list(x)) == matvec(m, list(x))


def test_apply_matches_eval_random_large():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(5, 40)
        c = random_circuit(rng, n, 100)
        m = eval_matrix(c)
        x = [rng.randint(0, 1) for _ in range(n)]
        assert apply_to_vector(c, x) == matvec(m, x)


@given(circuits(), circuits())
def test_concatenation_is_product(c1, c2):
    if c1.n != c2.n:
        return
    assert eval_matrix(c1.then(c2)) == multiply(eval_matrix(c2), eval_matrix(c1))


@given(circuits())
def test_reverse_swap_is_transpose(c):
    assert eval_matrix(reverse(swap_control_target(c))) == transpose(eval_matrix(c))
    assert eval_matrix(swap_control_target(reverse(c))) == transpose(eval_matrix(c))


@given(circuits())
def test_transforms_preserve_length_and_inverse_is_involution(c):
    assert len(reverse(c)) == len(swap_control_target(c)) == len(inverse(c)) == len(c)
    assert inverse(inverse(c)) == c
    assert swap_control_target(swap_control_target(c)) == c


def test_reverse_single_gate():
    c = Circuit.from_pairs(3, [(2, 0)])
    assert reverse(c) == c


def test_inverse_random():
    rng = random.Random(100)
    for _ in range(100):
        c = random_circuit(rng, 8, 50)
        assert multiply(eval_matrix(inverse(c)), eval_matrix(c)) == identity(8)


def test_swap_on_fig2_reversed(fig2_circuit):
    c = reverse(fig2_circuit)
    assert eval_matrix(swap_control_target(c)) == transpose(eval_matrix(fig2_circuit))
    assert transpose(eval_matrix(fig2_circuit)).to_lists() == [
        [1, 0, 1, 1], [0, 0, 1, 1], [1, 1, 1, 0], [0, 0, 0, 1]
    ]


class TestText:
    def test_parse_minimal(self):
        assert parse_circuit("wires 2\ncnot 0 1\n") == Circuit.from_pairs(2, [(0, 1)])

    def test_serialize_empty(self):
        assert serialize_circuit(Circuit(4)) == "wires 4\n"

    def test_comments_and_missing_trailing_newline(self):
        text = "# made by hand\nwires 3\n\ncnot 0 2\n# mid comment\ncnot 2 1"
        assert parse_circuit(text).pairs() == [(0, 2), (2, 1)]

    @given(circuits())
    def test_round_trip(self, c):
        text = serialize_circuit(c)
        assert text.endswith("\n")
        assert parse_circuit(text) == c

    @pytest.mark.parametrize(
        "text, line",
        [
            ("wire 2\n", 1),
            ("wires x\n", 1),
            ("wires 2\ncnot 0 2\n", 2),
            ("wires 2\ncnot 1 1\n", 2),
            ("wires 3\ncnot 0 1\ncnot 0\n", 3),
            ("wires 3\n\nswap 0 1\n", 3),
            ("wires 2\ncnot -1 0\n", 2),
            ("", 1),
        ],
    )
    def test_errors_name_line(self, text, line):
        with pytest.raises(CircuitParseError) as err:
            parse_circuit(text)
        assert err.value.line == line
