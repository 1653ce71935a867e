"""Exact algebra of partial injections on ℕ, the Int/GoI construction over them,
and law checking against a finite-window oracle."""

from .dyadic import (
    ONE, P_DAG, P_LEFT, Q_DAG, Q_LEFT, SIGMA, TAU, TAU_INV, ZERO, DyadicPInj, Piece,
    compose, dagger, equals, equals_refined, generator, source_idempotent,
    target_idempotent, union,
)
from .errors import (
    DepthExceeded, GoiError, NonDeterministic, NotDisjoint, ParseError, TraceDivergence,
    TypeMismatch, UnitHasNoCode,
)
from .expr import evaluate, parse, to_text
from .intgoi import (
    RookSquare, assoc_T, assoc_T_inv, box_tensor, compose_goi, compose_int, dual,
    embed_left, embed_right, endo_from_square, epsilon, eta, square_from_endo, sym_S,
)
from .structures import (
    BicyclicNF, LawReport, bicyclic_compose_nf, bicyclic_eval, check_f_relations, delta,
    frobenius_laws, law_suite, nabla, thompson_x,
)
from .traced import (
    Matrix2x2, decompose, matrix_compose, phi_code, phi_decode, recompose, star_tensor,
    trace,
)

__version__ = "0.1.0"
