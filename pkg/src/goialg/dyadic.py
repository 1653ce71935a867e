"""Exact partial injections on the naturals built from dyadic affine pieces.

A :class:`Piece` ``(d, r, e, s)`` is the map defined exactly on the residue
class ``r mod 2**d`` sending ``n`` to ``2**e * ((n - r) >> d) + s``; its image
is the class ``s mod 2**e``.  A :class:`DyadicPInj` is a finite union of
pieces with pairwise disjoint domains and images, kept in a canonical form
(maximal sibling merging, sorted by ``(d, r)``) so that equality of partial
maps is equality of piece tuples.

Every element of the inverse monoid generated by ``p, q, p‡, q‡`` has such a
form, and the class is closed under composition, disjoint union and
inversion.
"""

from __future__ import annotations

import contextlib
import contextvars
from typing import Iterable, NamedTuple, Optional

from .errors import DepthExceeded, NotDisjoint

DEFAULT_DEPTH_LIMIT = 64

_depth_limit = contextvars.ContextVar("goialg_depth_limit", default=DEFAULT_DEPTH_LIMIT)


def get_depth_limit() -> int:
    return _depth_limit.get()


@contextlib.contextmanager
def depth_limit(limit: int):
    """Temporarily change the maximal piece depth (context-local)."""
    token = _depth_limit.set(limit)
    try:
        yield
    finally:
        _depth_limit.reset(token)


class Piece(NamedTuple):
    d: int
    r: int
    e: int
    s: int

    def __call__(self, n: int) -> Optional[int]:
        if n & ((1 << self.d) - 1) != self.r:
            return None
        return (((n - self.r) >> self.d) << self.e) + self.s

    def inverse(self) -> "Piece":
        return Piece(self.e, self.s, self.d, self.r)


def classes_meet(d1: int, r1: int, d2: int, r2: int) -> bool:
    """True iff ``r1 mod 2**d1`` and ``r2 mod 2**d2`` share an element."""
    m = (1 << min(d1, d2)) - 1
    return (r1 & m) == (r2 & m)


def compose_pieces(g: Piece, f: Piece) -> Optional[Piece]:
    """The piece ``g∘f``, or None when the image of f misses the domain of g."""
    if f.e <= g.d:
        if (g.r & ((1 << f.e) - 1)) != f.s:
            return None
        depth, res = g.d, g.r
    else:
        if (f.s & ((1 << g.d) - 1)) != g.r:
            return None
        depth, res = f.e, f.s
    # the meeting class is res mod 2**depth; pull it back through f and push through g
    k = (res - f.s) >> f.e
    j = (res - g.r) >> g.d
    return Piece(
        f.d + depth - f.e,
        f.r + (k << f.d),
        g.e + depth - g.d,
        g.s + (j << g.e),
    )


def _check_depth(pieces):
    limit = _depth_limit.get()
    for pc in pieces:
        if pc.d > limit or pc.e > limit:
            raise DepthExceeded(max(pc.d, pc.e), limit)


def canonicalize(pieces: Iterable[Piece]) -> tuple:
    """Merge sibling pieces until none remain, then sort by ``(d, r)``.

    Siblings ``(d+1, r, e+1, s)`` and ``(d+1, r + 2**d, e+1, s + 2**e)``
    merge into ``(d, r, e, s)``.  The input must already be disjoint.
    """
    by_depth: dict[int, dict[int, tuple]] = {}
    for pc in pieces:
        by_depth.setdefault(pc.d, {})[pc.r] = (pc.e, pc.s)
    if not by_depth:
        return ()
    for depth in range(max(by_depth), 0, -1):
        level = by_depth.get(depth)
        if not level:
            continue
        half = 1 << (depth - 1)
        parent = None
        for r in sorted(level):
            if r & half or r not in level:
                continue
            sib = level.get(r + half)
            if sib is None:
                continue
            e, s = level[r]
            if e == 0 or sib[0] != e:
                continue
            ehalf = 1 << (e - 1)
            if s & ehalf or sib[1] != s + ehalf:
                continue
            del level[r], level[r + half]
            if parent is None:
                parent = by_depth.setdefault(depth - 1, {})
            parent[r] = (e - 1, s)
    out = [Piece(d, r, e, s) for d, level in by_depth.items() for r, (e, s) in level.items()]
    out.sort()
    return tuple(out)


class DyadicPInj:
    """A partial injection on ℕ given as a canonical finite union of pieces.

    Instances are immutable and hashable; ``==`` compares the represented
    partial functions (canonical forms are unique).
    """

    __slots__ = ("pieces", "_lookup", "_hash")

    def __init__(self, pieces: Iterable[Piece] = (), *, _canonical: bool = False):
        pieces = tuple(Piece(*pc) for pc in pieces)
        if not _canonical:
            for pc in pieces:
                if not (0 <= pc.r < (1 << pc.d) and 0 <= pc.s < (1 << pc.e)):
                    raise ValueError(f"residue out of range in {pc}")
            _check_disjoint(pieces, pieces, same=True)
            pieces = canonicalize(pieces)
        _check_depth(pieces)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "_lookup", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicPInj is immutable")

    # -- pointwise semantics -------------------------------------------------

    def __call__(self, n: int) -> Optional[int]:
        lookup = self._lookup
        if lookup is None:
            lookup = {}
            for pc in self.pieces:
                lookup.setdefault(pc.d, {})[pc.r] = pc
            lookup = tuple((d, (1 << d) - 1, tbl) for d, tbl in lookup.items())
            object.__setattr__(self, "_lookup", lookup)
        for _, mask, tbl in lookup:
            pc = tbl.get(n & mask)
            if pc is not None:
                return (((n - pc.r) >> pc.d) << pc.e) + pc.s
        return None

    apply = __call__

    # -- algebra ---------------------------------------------------------------

    def __matmul__(self, other: "DyadicPInj") -> "DyadicPInj":
        return compose(self, other)

    def __or__(self, other: "DyadicPInj") -> "DyadicPInj":
        return union(self, other)

    @property
    def dagger(self) -> "DyadicPInj":
        return dagger(self)

    def is_zero(self) -> bool:
        return not self.pieces

    def is_identity(self) -> bool:
        return self.pieces == ((0, 0, 0, 0),)

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DyadicPInj):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.pieces)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        name = _NAMES.get(self.pieces)
        if name:
            return f"DyadicPInj<{name}>"
        body = ", ".join("({},{},{},{})".format(*pc) for pc in self.pieces)
        return f"DyadicPInj[{body}]"

    def __reduce__(self):
        return (DyadicPInj, (self.pieces,))

    def to_json(self) -> dict:
        return {"pieces": [pc._asdict() for pc in self.pieces]}

    @classmethod
    def from_json(cls, data: dict) -> "DyadicPInj":
        return cls(Piece(int(p["d"]), int(p["r"]), int(p["e"]), int(p["s"])) for p in data["pieces"])


def _check_disjoint(left, right, same=False):
    for i, a in enumerate(left):
        for b in (right[i + 1:] if same else right):
            if classes_meet(a.d, a.r, b.d, b.r):
                d, r = (a.d, a.r) if a.d >= b.d else (b.d, b.r)
                raise NotDisjoint("domain", (d, r))
            if classes_meet(a.e, a.s, b.e, b.s):
                e, s = (a.e, a.s) if a.e >= b.e else (b.e, b.s)
                raise NotDisjoint("image", (e, s))


ZERO = DyadicPInj((), _canonical=True)
ONE = DyadicPInj((Piece(0, 0, 0, 0),), _canonical=True)


def compose(g: DyadicPInj, f: DyadicPInj) -> DyadicPInj:
    """``g∘f`` as partial maps: first f, then g."""
    if not f.pieces or not g.pieces:
        return ZERO
    if g.is_identity():
        return f
    if f.is_identity():
        return g
    out = []
    for pf in f.pieces:
        for pg in g.pieces:
            pc = compose_pieces(pg, pf)
            if pc is not None:
                out.append(pc)
    _check_depth(out)
    return DyadicPInj(canonicalize(out), _canonical=True)


def compose_all(*fs: DyadicPInj) -> DyadicPInj:
    """Right-to-left composite ``fs[0]∘fs[1]∘…``."""
    result = ONE
    for f in reversed(fs):
        result = compose(f, result)
    return result


def union(f: DyadicPInj, g: DyadicPInj) -> DyadicPInj:
    """Disjoint union; raises :class:`NotDisjoint` on any domain or image overlap."""
    if not g.pieces:
        return f
    if not f.pieces:
        return g
    _check_disjoint(f.pieces, g.pieces)
    return DyadicPInj(canonicalize(f.pieces + g.pieces), _canonical=True)


def union_all(fs: Iterable[DyadicPInj]) -> DyadicPInj:
    pieces: list = []
    for f in fs:
        if f.pieces:
            _check_disjoint(tuple(pieces), f.pieces)
            pieces.extend(f.pieces)
    return DyadicPInj(canonicalize(pieces), _canonical=True)


def dagger(f: DyadicPInj) -> DyadicPInj:
    return DyadicPInj(sorted(pc.inverse() for pc in f.pieces), _canonical=True)


def source_idempotent(f: DyadicPInj) -> DyadicPInj:
    """Identity restricted to the domain of f."""
    return DyadicPInj(canonicalize(Piece(pc.d, pc.r, pc.d, pc.r) for pc in f.pieces), _canonical=True)


def target_idempotent(f: DyadicPInj) -> DyadicPInj:
    """Identity restricted to the image of f."""
    return DyadicPInj(canonicalize(Piece(pc.e, pc.s, pc.e, pc.s) for pc in f.pieces), _canonical=True)


def equals(f: DyadicPInj, g: DyadicPInj) -> bool:
    return f.pieces == g.pieces


def equals_refined(f: DyadicPInj, g: DyadicPInj) -> bool:
    """Equality by common refinement, without relying on canonical forms.

    Both piece sets are split along the binary residue tree only as far as
    needed for every remaining class to be covered by a single piece on each
    side, where the restricted pieces are compared directly.
    """
    stack = [(0, 0, list(f.pieces), list(g.pieces))]
    while stack:
        depth, res, fs, gs = stack.pop()
        fs = [pc for pc in fs if classes_meet(pc.d, pc.r, depth, res)]
        gs = [pc for pc in gs if classes_meet(pc.d, pc.r, depth, res)]
        if not fs and not gs:
            continue
        if not fs or not gs:
            return False
        if len(fs) == 1 and len(gs) == 1 and fs[0].d <= depth and gs[0].d <= depth:
            if _restrict(fs[0], depth, res) != _restrict(gs[0], depth, res):
                return False
            continue
        stack.append((depth + 1, res, fs, gs))
        stack.append((depth + 1, res + (1 << depth), fs, gs))
    return True


def _restrict(pc: Piece, depth: int, res: int) -> tuple:
    k = (res - pc.r) >> pc.d
    return (pc.e + depth - pc.d, pc.s + (k << pc.e))


# -- the dynamical algebra ------------------------------------------------------

P_LEFT = DyadicPInj((Piece(1, 0, 0, 0),), _canonical=True)      # p: 2n -> n
Q_LEFT = DyadicPInj((Piece(1, 1, 0, 0),), _canonical=True)      # q: 2n+1 -> n
P_DAG = dagger(P_LEFT)                                          # p‡: n -> 2n
Q_DAG = dagger(Q_LEFT)                                          # q‡: n -> 2n+1

SIGMA = union(compose(P_DAG, Q_LEFT), compose(Q_DAG, P_LEFT))
TAU = union_all([
    compose_all(P_DAG, P_DAG, P_LEFT),
    compose_all(P_DAG, Q_DAG, P_LEFT, Q_LEFT),
    compose_all(Q_DAG, Q_LEFT, Q_LEFT),
])
TAU_INV = union_all([
    compose_all(P_DAG, P_LEFT, P_LEFT),
    compose_all(Q_DAG, P_DAG, Q_LEFT, P_LEFT),
    compose_all(Q_DAG, Q_DAG, Q_LEFT),
])

GENERATORS = {
    "p": P_LEFT,
    "q": Q_LEFT,
    "p‡": P_DAG,
    "q‡": Q_DAG,
    "σ": SIGMA,
    "τ": TAU,
    "τ′": TAU_INV,
    "1": ONE,
    "0": ZERO,
}

ALIASES = {
    "P": "p‡", "Q": "q‡", "s": "σ", "t": "τ", "t'": "τ′",
    "id": "1", "zero": "0", "sigma": "σ", "tau": "τ", "tau'": "τ′",
}

_NAMES = {v.pieces: k for k, v in GENERATORS.items()}


def generator(name: str) -> DyadicPInj:
    try:
        return GENERATORS[ALIASES.get(name, name)]
    except KeyError:
        raise KeyError(f"unknown generator {name!r}") from None
