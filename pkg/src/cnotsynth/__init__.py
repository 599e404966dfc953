"""Synthesis of linear reversible (CNOT-only) circuits over GF(2)."""

from .circuit import (
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
from .gf2 import (
    BitMatrix,
    DimensionError,
    MatrixParseError,
    add_row,
    count_linear_reversible,
    format_matrix,
    identity,
    is_invertible,
    multiply,
    parse_matrix,
    random_invertible,
    rank,
    transpose,
)
from .synth import (
    SingularMatrixError,
    SynthOptions,
    SynthReport,
    cnot_synth_pmh,
    default_section_size,
    gaussian_synth,
    lower_bound_gates,
    lwr_cnot_synth,
    upper_bound_row_ops,
    verify,
)

__version__ = "0.1.0"
