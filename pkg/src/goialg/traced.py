"""The traced semi-monoidal structure on End(ℕ).

Every partial injection f on ℕ is a 2×2 rook matrix over itself, via
conjugation by the Cantor code ``(n, i) ↦ 2n + i``::

    decompose(f) = (p f p‡, p f q‡, q f p‡, q f q‡)

The ⋆ tensor, the particle-style trace and Φ-strictification of tree-shaped
objects are defined on top of that.
"""

from __future__ import annotations

from typing import NamedTuple

from .dyadic import (
    ONE, P_DAG, P_LEFT, Q_DAG, Q_LEFT, ZERO, DyadicPInj, Piece, classes_meet,
    compose, compose_all, dagger, union, union_all,
)
from .errors import TypeMismatch, UnitHasNoCode
from .paths import sum_paths


class Matrix2x2(NamedTuple):
    """Rook matrix ``((f00, f01), (f10, f11))``: column 0 is the p-half input."""

    f00: DyadicPInj
    f01: DyadicPInj
    f10: DyadicPInj
    f11: DyadicPInj

    def is_rook(self) -> bool:
        def meet(x, y, image):
            for a in x.pieces:
                for b in y.pieces:
                    if image and classes_meet(a.e, a.s, b.e, b.s):
                        return True
                    if not image and classes_meet(a.d, a.r, b.d, b.r):
                        return True
            return False

        return not (
            meet(self.f00, self.f01, True) or meet(self.f10, self.f11, True)
            or meet(self.f00, self.f10, False) or meet(self.f01, self.f11, False)
        )


IDENTITY_MATRIX = Matrix2x2(ONE, ZERO, ZERO, ONE)


def decompose(f: DyadicPInj) -> Matrix2x2:
    return Matrix2x2(
        compose_all(P_LEFT, f, P_DAG),
        compose_all(P_LEFT, f, Q_DAG),
        compose_all(Q_LEFT, f, P_DAG),
        compose_all(Q_LEFT, f, Q_DAG),
    )


def recompose(m) -> DyadicPInj:
    """Inverse of :func:`decompose`: ``p‡ a p ∪ p‡ b q ∪ q‡ c p ∪ q‡ d q``."""
    a, b, c, d = m
    return union_all([
        compose_all(P_DAG, a, P_LEFT),
        compose_all(P_DAG, b, Q_LEFT),
        compose_all(Q_DAG, c, P_LEFT),
        compose_all(Q_DAG, d, Q_LEFT),
    ])


def matrix_compose(g, f) -> Matrix2x2:
    """``g·f`` with union as addition and composition as multiplication."""
    g00, g01, g10, g11 = g
    f00, f01, f10, f11 = f
    return Matrix2x2(
        union(compose(g00, f00), compose(g01, f10)),
        union(compose(g00, f01), compose(g01, f11)),
        union(compose(g10, f00), compose(g11, f10)),
        union(compose(g10, f01), compose(g11, f11)),
    )


def star_tensor(f: DyadicPInj, g: DyadicPInj) -> DyadicPInj:
    """``f ⋆ g = p‡ f p ∪ q‡ g q``: f acts on evens, g on odds."""
    return union(compose_all(P_DAG, f, P_LEFT), compose_all(Q_DAG, g, Q_LEFT))


def trace_matrix(m, max_iter: int | None = None) -> DyadicPInj:
    """``f00 ∪ ⋃_j f01 f11^j f10`` for a rook matrix, feeding back the second wire."""
    f00, f01, f10, f11 = m
    edges = {("in", "out"): f00, ("in", "u"): f10, ("u", "out"): f01, ("u", "u"): f11}
    return sum_paths(edges, ["in"], ["out"], max_iter)[("in", "out")]


def trace(f: DyadicPInj, max_iter: int | None = None) -> DyadicPInj:
    """Trace out the odd half of ℕ ≅ ℕ ⊎ ℕ."""
    return trace_matrix(decompose(f), max_iter)


# -- tree-shaped objects and Φ ------------------------------------------------


class Leaf(NamedTuple):
    def __repr__(self):
        return "N"


class Node(NamedTuple):
    left: object
    right: object

    def __repr__(self):
        return f"({self.left!r}+{self.right!r})"


class _Unit:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "I"

    def __reduce__(self):
        return (_Unit, ())


LEAF = Leaf()
UNIT = _Unit()


def tensor_objects(a, b):
    if a is UNIT:
        return b
    if b is UNIT:
        return a
    return Node(a, b)


def leaf_count(x) -> int:
    if x is UNIT:
        return 0
    if isinstance(x, Leaf):
        return 1
    return leaf_count(x.left) + leaf_count(x.right)


def right_comb(k: int):
    """The right-nested tree with k ≥ 1 leaves."""
    tree = LEAF
    for _ in range(k - 1):
        tree = Node(LEAF, tree)
    return tree


def _flat_code(x) -> list:
    """Leaf paths as (depth, residue) classes of the nested Cantor code, left to right."""
    if isinstance(x, Leaf):
        return [(0, 0)]
    out = []
    for bit, sub in ((0, x.left), (1, x.right)):
        for d, r in _flat_code(sub):
            out.append((d + 1, (r << 1) | bit))
    return out


def phi_code(x) -> DyadicPInj:
    """Code ``C_X`` of a tree object, as a map from flat coordinates to ℕ.

    Elements of a tree with k leaves are numbered in the flat coordinates of
    the right comb with k leaves (leaf i, value n); under those coordinates the
    right comb has code 1 and every other shape differs from it by a product
    of associators.
    """
    if x is UNIT:
        raise UnitHasNoCode("the unit object has no code")
    ref = _flat_code(right_comb(leaf_count(x)))
    mine = _flat_code(x)
    return DyadicPInj(Piece(dr, rr, dm, rm) for (dr, rr), (dm, rm) in zip(ref, mine))


def phi_decode(x) -> DyadicPInj:
    return dagger(phi_code(x))


class TypedArrow(NamedTuple):
    """A pNat arrow between tree objects, stored as its Φ-image ``code``."""

    src: object
    tgt: object
    code: DyadicPInj

    @classmethod
    def from_flat(cls, src, tgt, flat: DyadicPInj) -> "TypedArrow":
        """Φ(f) = C_B f D_A for f given in flat coordinates."""
        if src is UNIT or tgt is UNIT:
            if src is tgt:
                return UNIT_ARROW
            raise TypeMismatch("no arrows between the unit and a non-unit object")
        return cls(src, tgt, compose_all(phi_code(tgt), flat, phi_decode(src)))

    def flat(self) -> DyadicPInj:
        return compose_all(phi_decode(self.tgt), self.code, phi_code(self.src))


UNIT_ARROW = TypedArrow(UNIT, UNIT, ONE)


def typed_identity(x) -> TypedArrow:
    return UNIT_ARROW if x is UNIT else TypedArrow(x, x, ONE)


def typed_compose(g: TypedArrow, f: TypedArrow) -> TypedArrow:
    if f.tgt != g.src:
        raise TypeMismatch(f"cannot compose: {f.tgt!r} ≠ {g.src!r}")
    if f.src is UNIT:
        return UNIT_ARROW
    return TypedArrow(f.src, g.tgt, compose(g.code, f.code))


def typed_tensor(f: TypedArrow, g: TypedArrow) -> TypedArrow:
    if f.src is UNIT:
        return g
    if g.src is UNIT:
        return f
    return TypedArrow(Node(f.src, g.src), Node(f.tgt, g.tgt), star_tensor(f.code, g.code))


def typed_trace(f: TypedArrow, feedback, max_iter: int | None = None) -> TypedArrow:
    """Trace out ``feedback`` from ``f: X⊎U → Y⊎U``; tracing the unit is a no-op."""
    if feedback is UNIT:
        return f
    if not (isinstance(f.src, Node) and isinstance(f.tgt, Node)
            and f.src.right == feedback and f.tgt.right == feedback):
        raise TypeMismatch(f"arrow {f.src!r} → {f.tgt!r} has no trailing {feedback!r}")
    return TypedArrow(f.src.left, f.tgt.left, trace(f.code, max_iter))
