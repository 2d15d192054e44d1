"""Divisibility polynomials, cyclotomic products and the integer divisibility
sequences they generate."""

from .cyclotomic import cyclotomic, euler_totient, phi_of_map, phi_of_set
from .errors import *  # noqa: F401,F403
from .lucasring import (
    QuadInt,
    RingParams,
    SequenceSpec,
    alpha_power,
    phi_eval_at_power,
    phi_lower_bound_check,
    s_term,
    seq_range,
    seq_term,
    t_term,
    verify_divisibility,
    verify_strong_divisibility,
)
from .polyring import (
    IntPoly,
    compose_power,
    divide_exact,
    evaluate_at,
    is_palindromic,
    normal_decompose,
    poly_mul,
    primitive_gcd,
)
from .recognizer import (
    DivPolyDecomposition,
    canonical_form,
    is_indecomposable,
    oracle_composition_divides,
    recognize,
)
from .satset import (
    HasseDiagram,
    MultiplicityMap,
    SaturatedSet,
    compress_core,
    decompress,
    hasse_diagram,
    is_order_reversing,
    is_principal,
    maximal_generators,
    saturate,
    set_product,
    slicing_layers,
    strong_set_identity_check,
)

__version__ = "0.1.0"
