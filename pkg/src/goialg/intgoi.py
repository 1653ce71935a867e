"""Rook squares: arrows of the two-object compact closed category 𝔊.

A square ``(X, U) → (Y, V)`` carries four partial injections::

        Y  <--a--  X
        ^          |
        b          c
        |          v
        V  --d-->  U

i.e. ``a: X→Y``, ``b: V→Y``, ``c: X→U``, ``d: V→U``; as a matrix it is
``(a b; c d)`` from ``X⊎V`` to ``Y⊎U``.  Object components are ``"N"`` or
``"I"``; 𝔊 uses only ``II`` and ``NN``.  Edges between N and I corners are
the formal zero (an empty homset), an edge between two I corners is the
formal scalar ``1_I``, stored as the identity.
"""

from __future__ import annotations

from typing import NamedTuple

from .dyadic import (
    ONE, P_DAG, P_LEFT, Q_DAG, Q_LEFT, ZERO, DyadicPInj, compose_all, union_all,
)
from .errors import TypeMismatch
from .paths import sum_paths
from .traced import Matrix2x2, decompose, recompose, star_tensor
from .dyadic import SIGMA, TAU, TAU_INV

N, I = "N", "I"
NN, II = (N, N), (I, I)
OBJECTS = {"NN": NN, "II": II}


def object_name(obj) -> str:
    return obj[0] + obj[1]


def _edge_ok(x, y, value: DyadicPInj) -> DyadicPInj:
    if x == I and y == I:
        return ONE
    if x == I or y == I:
        return ZERO
    return value


class RookSquare(NamedTuple):
    src: tuple
    tgt: tuple
    a: DyadicPInj
    b: DyadicPInj
    c: DyadicPInj
    d: DyadicPInj

    @classmethod
    def make(cls, src, tgt, a, b, c, d) -> "RookSquare":
        """Build a square, forcing unit-cornered edges to their formal values."""
        (x, u), (y, v) = src, tgt
        return cls(src, tgt, _edge_ok(x, y, a), _edge_ok(v, y, b), _edge_ok(x, u, c), _edge_ok(v, u, d))

    @property
    def matrix(self) -> Matrix2x2:
        return Matrix2x2(self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return {
            "src": object_name(self.src),
            "tgt": object_name(self.tgt),
            **{k: getattr(self, k).to_json() for k in "abcd"},
        }

    @classmethod
    def from_json(cls, data: dict) -> "RookSquare":
        try:
            src, tgt = OBJECTS[data["src"]], OBJECTS[data["tgt"]]
        except KeyError as exc:
            raise TypeMismatch(f"unknown object {exc.args[0]!r}") from None
        edges = [DyadicPInj.from_json(data[k]) for k in "abcd"]
        sq = cls(src, tgt, *edges)
        if cls.make(src, tgt, *edges) != sq:
            raise TypeMismatch("unit-cornered edge with a non-formal value")
        return sq


def square_from_endo(f: DyadicPInj) -> RookSquare:
    return RookSquare(NN, NN, *decompose(f))


def endo_from_square(sq: RookSquare) -> DyadicPInj:
    if sq.src != NN or sq.tgt != NN:
        raise TypeMismatch(f"not an endomorphism square: {object_name(sq.src)} → {object_name(sq.tgt)}")
    return recompose(sq.matrix)


def element(f: DyadicPInj) -> RookSquare:
    """f drawn in 𝔊((I,I),(N,N)): the up edge carries f."""
    return RookSquare.make(II, NN, ZERO, f, ONE, ZERO)


def coelement(f: DyadicPInj) -> RookSquare:
    """f drawn in 𝔊((N,N),(I,I)): the down edge carries f."""
    return RookSquare.make(NN, II, ZERO, ONE, f, ZERO)


def identity(obj=NN) -> RookSquare:
    return RookSquare.make(obj, obj, ONE, ZERO, ZERO, ONE)


def _result(src, tgt, found, keys) -> RookSquare:
    return RookSquare.make(src, tgt, *(found.get(k, ZERO) for k in keys))


def _n_edges(edges, kinds):
    return {k: v for k, v in edges.items() if kinds[k[0]] == N and kinds[k[1]] == N}


def compose_int(g: RookSquare, f: RookSquare, max_iter: int | None = None) -> RookSquare:
    """Horizontal pasting along the shared object, summing over paths.

    For ``f: (X,U)→(Y,V)`` and ``g: (Y,V)→(Z,W)``::

        X→Z: ⋃ g00 (f01 g10)^j f00        W→Z: g01 ∪ ⋃ g00 f01 (g10 f01)^j g11
        X→U: f10 ∪ ⋃ f11 g10 (f01 g10)^j f00    W→U: ⋃ f11 (g10 f01)^j g11
    """
    if f.tgt != g.src:
        raise TypeMismatch(f"cannot compose {object_name(f.tgt)} with {object_name(g.src)}")
    (x, u), (y, v), (z, w) = f.src, f.tgt, g.tgt
    kinds = {"X": x, "U": u, "Y": y, "V": v, "Z": z, "W": w}
    edges = {
        ("X", "Y"): f.a, ("V", "Y"): f.b, ("X", "U"): f.c, ("V", "U"): f.d,
        ("Y", "Z"): g.a, ("W", "Z"): g.b, ("Y", "V"): g.c, ("W", "V"): g.d,
    }
    found = sum_paths(_n_edges(edges, kinds), ["X", "W"], ["Z", "U"], max_iter)
    return _result(f.src, g.tgt, found, [("X", "Z"), ("W", "Z"), ("X", "U"), ("W", "U")])


def compose_goi(g: RookSquare, f: RookSquare, max_iter: int | None = None) -> RookSquare:
    """Vertical pasting: g on top, f below, glued along g's bottom edge.

    ``g: (X,U)→(Y,V)`` and ``f: (U,P)→(V,Q)`` give ``(X,P)→(Y,Q)`` with::

        X→Y: g.a ∪ ⋃ g.b (f.a g.d)^j f.a g.c      Q→Y: ⋃ g.b (f.a g.d)^j f.b
        X→P: ⋃ f.c (g.d f.a)^j g.c                Q→P: f.d ∪ ⋃ f.c (g.d f.a)^j g.d f.b
    """
    (x, u), (y, v) = g.src, g.tgt
    (u2, pp), (v2, qq) = f.src, f.tgt
    if u != u2 or v != v2:
        raise TypeMismatch("squares do not share a horizontal edge")
    kinds = {"X": x, "U": u, "Y": y, "V": v, "P": pp, "Q": qq}
    edges = {
        ("X", "Y"): g.a, ("V", "Y"): g.b, ("X", "U"): g.c, ("V", "U"): g.d,
        ("U", "V"): f.a, ("Q", "V"): f.b, ("U", "P"): f.c, ("Q", "P"): f.d,
    }
    found = sum_paths(_n_edges(edges, kinds), ["X", "Q"], ["Y", "P"], max_iter)
    return _result((x, pp), (y, qq), found, [("X", "Y"), ("Q", "Y"), ("X", "P"), ("Q", "P")])


def goi_identity() -> RookSquare:
    """Two-sided unit of vertical composition: the crossing square of σ."""
    return square_from_endo(SIGMA)


def _merge(k1, k2):
    """Tensor of two object components: the I is strict, N⋆N is Cantor-coded."""
    if k1 == I:
        return I if k2 == I else N
    return N


def _embed(edge, src_kinds, tgt_kinds, slot):
    """Place one operand's edge into the tensor: project from its input half, inject into its output half."""
    s1, s2 = src_kinds
    t1, t2 = tgt_kinds
    mine_s, other_s = (s1, s2) if slot == 0 else (s2, s1)
    mine_t, other_t = (t1, t2) if slot == 0 else (t2, t1)
    if mine_s == I or mine_t == I:
        return ZERO
    proj = ONE if other_s == I else (P_LEFT if slot == 0 else Q_LEFT)
    inj = ONE if other_t == I else (P_DAG if slot == 0 else Q_DAG)
    return compose_all(inj, edge, proj)


def box_tensor(f: RookSquare, g: RookSquare) -> RookSquare:
    """``(X,U)□(X',U') = (X⋆X', U⋆U')``, each edge tensored componentwise.

    Between endomorphism squares this is ``(f.a⋆g.a, f.b⋆g.b; f.c⋆g.c, f.d⋆g.d)``;
    unit objects are strict, so tensoring with a unit square is the identity.
    """
    if f.src == II and f.tgt == II:
        return g
    if g.src == II and g.tgt == II:
        return f
    (fx, fu), (fy, fv) = f.src, f.tgt
    (gx, gu), (gy, gv) = g.src, g.tgt
    src = (_merge(fx, gx), _merge(fu, gu))
    tgt = (_merge(fy, gy), _merge(fv, gv))
    corners = {"X": (fx, gx), "U": (fu, gu), "Y": (fy, gy), "V": (fv, gv)}
    edges = []
    for name, a, b in (("a", "X", "Y"), ("b", "V", "Y"), ("c", "X", "U"), ("d", "V", "U")):
        parts = [
            _embed(getattr(f, name), corners[a], corners[b], 0),
            _embed(getattr(g, name), corners[a], corners[b], 1),
        ]
        edges.append(union_all(parts))
    return RookSquare.make(src, tgt, *edges)


def dual(sq: RookSquare) -> RookSquare:
    """``((X,U)→(Y,V))* = (V,Y)→(U,X)``: edges ``(a, b, c, d) ↦ (d, c, b, a)``."""
    (x, u), (y, v) = sq.src, sq.tgt
    return RookSquare((v, y), (u, x), sq.d, sq.c, sq.b, sq.a)


def eta() -> RookSquare:
    """Unit ``(I,I) → (N,N)``: σ on the up edge."""
    return RookSquare.make(II, NN, ZERO, SIGMA, ONE, ZERO)


def epsilon() -> RookSquare:
    """Co-unit ``(N,N) → (I,I)``: σ on the down edge."""
    return RookSquare.make(NN, II, ZERO, ONE, SIGMA, ZERO)


def _diagonal(top, bottom) -> RookSquare:
    return RookSquare(NN, NN, top, ZERO, ZERO, bottom)


def assoc_T() -> RookSquare:
    """Associator ``A□(B□C) → (A□B)□C`` of □, the square of τ⋆τ′."""
    return _diagonal(TAU, TAU_INV)


def assoc_T_inv() -> RookSquare:
    return _diagonal(TAU_INV, TAU)


def sym_S() -> RookSquare:
    return _diagonal(SIGMA, SIGMA)


def embed_left(f: DyadicPInj) -> RookSquare:
    """``f ⋆ 1`` as a square; a monoid homomorphism from (·) to (∘)."""
    return _diagonal(f, ONE)


def embed_right(f: DyadicPInj) -> RookSquare:
    """``1 ⋆ f`` as a square; an anti-homomorphism from (·) to (∘)."""
    return _diagonal(ONE, f)


def circ(g: DyadicPInj, f: DyadicPInj, max_iter: int | None = None) -> DyadicPInj:
    """The ∘ composition on End(ℕ), routed through endomorphism squares."""
    return endo_from_square(compose_int(square_from_endo(g), square_from_endo(f), max_iter))


def box(f: DyadicPInj, g: DyadicPInj) -> DyadicPInj:
    """The □ tensor on End(ℕ)."""
    return endo_from_square(box_tensor(square_from_endo(f), square_from_endo(g)))


def goi(g: DyadicPInj, f: DyadicPInj, max_iter: int | None = None) -> DyadicPInj:
    """Vertical composition on End(ℕ); its unit is σ."""
    return endo_from_square(compose_goi(square_from_endo(g), square_from_endo(f), max_iter))


def star(f: DyadicPInj, g: DyadicPInj) -> DyadicPInj:
    return star_tensor(f, g)


def yanking_left() -> RookSquare:
    """``(1□ε) ∘ T′ ∘ (η□1)`` on (N,N)."""
    first = box_tensor(eta(), identity())
    return compose_int(box_tensor(identity(), epsilon()), compose_int(assoc_T_inv(), first))


def yanking_right() -> RookSquare:
    """``(ε□1) ∘ T ∘ (1□η)`` on (N,N)."""
    first = box_tensor(identity(), eta())
    return compose_int(box_tensor(epsilon(), identity()), compose_int(assoc_T(), first))
