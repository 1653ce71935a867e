"""Finite-window oracle: truncations and token-passing simulation.

Nothing here uses symbolic composition.  Pieces are only ever applied to
single points, words are stepped through the generators' case formulas, and
traces and square composites are computed by pushing one token per window
point around the glued digraph.
"""

from __future__ import annotations

import enum
from array import array
from typing import NamedTuple, Sequence

from ._accel import kernels, pack_graph, pack_pieces
from ._kernels_py import NONDET, OUT, STEPS, UNDEF
from .dyadic import ALIASES, DyadicPInj
from .errors import NonDeterministic, TypeMismatch
from .intgoi import NN, RookSquare

DEFAULT_WINDOW = 1 << 14
DEFAULT_STEP_BOUND = 1 << 10


class Outcome(enum.Enum):
    UNDEFINED = "undefined"
    OUT_OF_WINDOW = "out-of-window"
    STEPS_EXCEEDED = "steps-exceeded"


class Value(NamedTuple):
    value: int


_DECODE = {UNDEF: Outcome.UNDEFINED, OUT: Outcome.OUT_OF_WINDOW, STEPS: Outcome.STEPS_EXCEEDED}


def _decode(code: int):
    return Value(code) if code >= 0 else _DECODE[code]


class WindowMap:
    """Values of a map at ``0 .. N-1``; OutOfWindow carries no information."""

    __slots__ = ("size", "codes")

    def __init__(self, codes: Sequence[int]):
        self.codes = list(codes)
        self.size = len(self.codes)

    def __getitem__(self, n: int):
        return _decode(self.codes[n])

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, WindowMap) and self.codes == other.codes

    def defined(self) -> dict:
        return {n: v for n, v in enumerate(self.codes) if v >= 0}

    def check_injective(self) -> bool:
        vals = [v for v in self.codes if v >= 0]
        return len(vals) == len(set(vals))


def disagreements(left: WindowMap, right: WindowMap) -> list:
    """Points where both sides say something different.

    OutOfWindow and StepsExceeded are "no information" and never disagree;
    Undefined against a value is a disagreement.
    """
    bad = []
    for n, (a, b) in enumerate(zip(left.codes, right.codes)):
        if a in (OUT, STEPS) or b in (OUT, STEPS):
            continue
        if a != b:
            bad.append(n)
    return bad


def truncate(f: DyadicPInj, n: int = DEFAULT_WINDOW) -> WindowMap:
    return WindowMap(kernels.window_apply(pack_pieces(f), n))


_CODES = {"p": 0, "q": 1, "p‡": 2, "q‡": 3, "σ": 4, "τ": 5, "τ′": 6, "1": 7, "0": 8}


def word_codes(word: Sequence[str]) -> array:
    """Generator names in composition order (leftmost applied last) to kernel codes."""
    out = array("q")
    for name in reversed(word):
        out.append(_CODES[ALIASES.get(name, name)])
    return out


def word_values(word: Sequence[str], n: int = DEFAULT_WINDOW) -> list:
    """Stepwise values at ``0 .. n-1``; only values past 2^41 are cut off as OUT."""
    return kernels.word_window(word_codes(word), n)


def word_window(word: Sequence[str], n: int = DEFAULT_WINDOW) -> WindowMap:
    """Evaluate a generator word one generator at a time from the case formulas."""
    return WindowMap([v if v < n else OUT for v in word_values(word, n)])


def _run(nodes, edges, inputs, outputs, n, step_bound) -> WindowMap:
    packed = pack_graph(nodes, edges, inputs, outputs)
    pieces, flat, starts, ins, kinds = packed
    codes, bad = kernels.token_window(pieces, flat, starts, len(ins), ins, kinds, n, step_bound)
    if codes == NONDET:
        raise NonDeterministic(bad)
    return WindowMap(codes)


def trace_window(m, n: int = DEFAULT_WINDOW, step_bound: int = DEFAULT_STEP_BOUND) -> WindowMap:
    """Token simulation of the trace of a rook matrix ``(f00, f01, f10, f11)``."""
    f00, f01, f10, f11 = m
    edges = {("in", "out"): f00, ("in", "u"): f10, ("u", "out"): f01, ("u", "u"): f11}
    return _run(["in", "u", "out"], edges, ["in"], ["out"], n, step_bound)


def _single_token(nodes, edges, inputs, outputs, x, n, step_bound):
    out_edges: dict = {}
    for (u, v), label in edges.items():
        out_edges.setdefault(u, []).append((v, label))
    node, val = inputs[x % len(inputs)], x // len(inputs)
    for _ in range(step_bound + 1):
        if node in outputs:
            m = val * len(outputs) + outputs.index(node)
            return Value(m) if m < n else Outcome.OUT_OF_WINDOW
        moves = [(v, label(val)) for v, label in out_edges.get(node, ())]
        moves = [(v, m) for v, m in moves if m is not None]
        if len(moves) > 1:
            raise NonDeterministic(x)
        if not moves:
            return Outcome.UNDEFINED
        node, val = moves[0]
    return Outcome.STEPS_EXCEEDED


def simulate_trace(m, x: int, n: int = DEFAULT_WINDOW, step_bound: int = DEFAULT_STEP_BOUND):
    """Push one token from x through the feedback loop of ``m``."""
    if not 0 <= x < n:
        raise ValueError(f"point {x} outside window of size {n}")
    f00, f01, f10, f11 = m
    edges = {("in", "out"): f00, ("in", "u"): f10, ("u", "out"): f01, ("u", "u"): f11}
    return _single_token(["in", "u", "out"], edges, ["in"], ["out"], x, n, step_bound)


def _square_graph(g: RookSquare, f: RookSquare, mode: str):
    for sq in (g, f):
        if sq.src != NN or sq.tgt != NN:
            raise TypeMismatch("token simulation runs on endomorphism squares")
    if mode == "int":
        # f: (X,U)→(Y,V) then g: (Y,V)→(Z,W)
        edges = {
            ("X", "Y"): f.a, ("V", "Y"): f.b, ("X", "U"): f.c, ("V", "U"): f.d,
            ("Y", "Z"): g.a, ("W", "Z"): g.b, ("Y", "V"): g.c, ("W", "V"): g.d,
        }
        return ["X", "W", "Y", "V", "Z", "U"], edges, ["X", "W"], ["Z", "U"]
    if mode == "goi":
        # g on top, glued along its bottom edge to f's top edge
        edges = {
            ("X", "Y"): g.a, ("V", "Y"): g.b, ("X", "U"): g.c, ("V", "U"): g.d,
            ("U", "V"): f.a, ("Q", "V"): f.b, ("U", "P"): f.c, ("Q", "P"): f.d,
        }
        return ["X", "Q", "U", "V", "Y", "P"], edges, ["X", "Q"], ["Y", "P"]
    raise ValueError(f"unknown mode {mode!r}")


def square_compose_window(g: RookSquare, f: RookSquare, mode: str = "int",
                          n: int = DEFAULT_WINDOW, step_bound: int = DEFAULT_STEP_BOUND) -> WindowMap:
    """Window of the composite endomorphism, read through the Cantor code on both ends."""
    nodes, edges, ins, outs = _square_graph(g, f, mode)
    return _run(nodes, edges, ins, outs, n, step_bound)


def simulate_square_compose(g: RookSquare, f: RookSquare, mode: str, x: int,
                            n: int = DEFAULT_WINDOW, step_bound: int = DEFAULT_STEP_BOUND):
    if not 0 <= x < n:
        raise ValueError(f"point {x} outside window of size {n}")
    nodes, edges, ins, outs = _square_graph(g, f, mode)
    return _single_token(nodes, edges, ins, outs, x, n, step_bound)


def pointwise_agree(lhs: DyadicPInj, rhs: DyadicPInj, n: int = DEFAULT_WINDOW) -> list:
    return disagreements(truncate(lhs, n), truncate(rhs, n))


# -- window-level combinators ---------------------------------------------
#
# These act on WindowMaps only, so an expression can be evaluated on the
# window without touching symbolic composition at all.

_INT_TABLE = array("q", [1, 0, 2, 5,  0, 1, 4, 3,  0, 0, 4, 3,  1, 1, 2, 5])
_GOI_TABLE = array("q", [0, 0, 4, 2,  1, 1, 3, 5,  1, 0, 3, 5,  0, 1, 4, 2])


def _same_size(*ws: WindowMap) -> int:
    sizes = {w.size for w in ws}
    if len(sizes) != 1:
        raise ValueError("window sizes differ")
    return sizes.pop()


def w_compose(g: WindowMap, f: WindowMap) -> WindowMap:
    _same_size(g, f)
    gc = g.codes
    return WindowMap([gc[v] if v >= 0 else v for v in f.codes])


def w_star(f: WindowMap, g: WindowMap) -> WindowMap:
    n = _same_size(f, g)
    fc, gc = f.codes, g.codes
    out = []
    for x in range(n):
        v = (fc if x & 1 == 0 else gc)[x >> 1]
        if v >= 0:
            v = 2 * v + (x & 1)
            if v >= n:
                v = OUT
        out.append(v)
    return WindowMap(out)


def w_box(f: WindowMap, g: WindowMap) -> WindowMap:
    """Entrywise ⋆ of the two rook matrices, read back through the Cantor code."""
    n = _same_size(f, g)
    fc, gc = f.codes, g.codes
    out = []
    for x in range(n):
        col, v = x & 1, x >> 1
        half, u = v & 1, v >> 1
        idx = 2 * u + col
        r = (fc if half == 0 else gc)[idx] if idx < n else OUT
        if r >= 0:
            r = 2 * (2 * (r >> 1) + half) + (r & 1)
            if r >= n:
                r = OUT
        out.append(r)
    return WindowMap(out)


def w_dagger(f: WindowMap) -> WindowMap:
    """Converse on the window; points with no preimage inside it stay unknown."""
    out = [OUT] * f.size
    for x, v in enumerate(f.codes):
        if v >= 0:
            out[v] = x
    return WindowMap(out)


def w_square(g: WindowMap, f: WindowMap, mode: str = "int",
             step_bound: int = DEFAULT_STEP_BOUND) -> WindowMap:
    """``g ∘ f`` (mode int) or g stacked on f (mode goi), by token passing."""
    n = _same_size(g, f)
    table = {"int": _INT_TABLE, "goi": _GOI_TABLE}[mode]
    return WindowMap(kernels.square_window(array("q", g.codes), array("q", f.codes), table, n, step_bound))
