"""A small expression language over the generators.

Grammar, loosest binding first::

    expr    := tensor (("." | "o" | "@") tensor)*     left associative
    tensor  := postfix (("*" | "#") postfix)*         left associative
    postfix := atom "~"*
    atom    := NAME | "(" expr ")"

``.`` is plain composition, ``o`` the horizontal (Int) composition and ``@``
the vertical (GoI) one; ``*`` is ⋆, ``#`` is □ and ``~`` is ‡.  ``g . f``
means g after f.

=========  ======  ================================
name       symbol  meaning
=========  ======  ================================
p q        p q     n ↦ n/2 on evens / odds
P Q        p‡ q‡   n ↦ 2n, n ↦ 2n+1
s          σ       swap of the two halves
t t'       τ τ′    associator of ⋆ and its inverse
D V        Δ ∇     split and merge
S T T'     S T T′  symmetry and associators of □
id zero    1 0
x0 x1 ...  x_i     x_0 = τ, x_{i+1} = 1 ⋆ x_i
=========  ======  ================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from . import oracle
from .dyadic import (
    ONE, P_DAG, P_LEFT, Q_DAG, Q_LEFT, SIGMA, TAU, TAU_INV, ZERO, DyadicPInj,
    compose, dagger,
)
from .errors import DepthExceeded, NotDisjoint, ParseError, TraceDivergence
from .intgoi import assoc_T, assoc_T_inv, box, circ, endo_from_square, goi, sym_S
from .structures import delta, nabla, thompson_x
from .traced import star_tensor

GENERATOR_NAMES = ("p", "q", "P", "Q", "s", "t", "t'", "D", "V", "S", "T", "T'", "id", "zero")

UNICODE = {
    "p": "p", "q": "q", "P": "p‡", "Q": "q‡", "s": "σ", "t": "τ", "t'": "τ′",
    "D": "Δ", "V": "∇", "S": "S", "T": "T", "T'": "T′", "id": "1", "zero": "0",
}


@dataclass(frozen=True)
class Generator:
    name: str


@dataclass(frozen=True)
class ThompsonX:
    index: int


@dataclass(frozen=True)
class Dagger:
    arg: "Expr"


@dataclass(frozen=True)
class DotCompose:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class IntCompose:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class GoiCompose:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class StarTensor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class BoxTensor:
    left: "Expr"
    right: "Expr"


Expr = Union[Generator, ThompsonX, Dagger, DotCompose, IntCompose, GoiCompose, StarTensor, BoxTensor]

_COMPOSE_OPS = {".": DotCompose, "o": IntCompose, "@": GoiCompose}
_TENSOR_OPS = {"*": StarTensor, "#": BoxTensor}
_SYMBOL = {DotCompose: ".", IntCompose: "o", GoiCompose: "@", StarTensor: "*", BoxTensor: "#"}

# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*'?)|(?P<op>[().*#@~]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos,
                             ["generator", "(", ")", ".", "o", "@", "*", "#", "~"])
        start = m.start("name") if m.group("name") else m.start("op")
        word = m.group("name") or m.group("op")
        kind = "op" if (m.group("op") or word == "o") else "name"
        tokens.append((kind, word, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.compose()
        kind, word, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {word!r}", pos, ["end of input", ".", "o", "@", "*", "#", "~"])
        return e

    def compose(self) -> Expr:
        left = self.tensor()
        while self.peek()[0] == "op" and self.peek()[1] in _COMPOSE_OPS:
            op = self.take()[1]
            left = _COMPOSE_OPS[op](left, self.tensor())
        return left

    def tensor(self) -> Expr:
        left = self.postfix()
        while self.peek()[0] == "op" and self.peek()[1] in _TENSOR_OPS:
            op = self.take()[1]
            left = _TENSOR_OPS[op](left, self.postfix())
        return left

    def postfix(self) -> Expr:
        e = self.atom()
        while self.peek()[0] == "op" and self.peek()[1] == "~":
            self.take()
            e = Dagger(e)
        return e

    def atom(self) -> Expr:
        kind, word, pos = self.take()
        if kind == "name":
            if word in GENERATOR_NAMES:
                return Generator(word)
            m = re.fullmatch(r"x(\d+)", word)
            if m:
                return ThompsonX(int(m.group(1)))
            raise ParseError(f"unknown generator {word!r}", pos, ["generator"])
        if kind == "op" and word == "(":
            e = self.compose()
            kind2, word2, pos2 = self.take()
            if (kind2, word2) != ("op", ")"):
                raise ParseError("unclosed parenthesis", pos2, [")", ".", "o", "@", "*", "#", "~"])
            return e
        what = "end of input" if kind == "end" else repr(word)
        raise ParseError(f"unexpected {what}", pos, ["generator", "("])


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- printing -----------------------------------------------------------------


def _prec(e: Expr) -> int:
    if isinstance(e, (DotCompose, IntCompose, GoiCompose)):
        return 1
    if isinstance(e, (StarTensor, BoxTensor)):
        return 2
    if isinstance(e, Dagger):
        return 3
    return 4


def to_text(e: Expr) -> str:
    """Print with the fewest parentheses that reparse to the same tree."""
    if isinstance(e, Generator):
        return e.name
    if isinstance(e, ThompsonX):
        return f"x{e.index}"
    if isinstance(e, Dagger):
        inner = to_text(e.arg)
        return (inner if _prec(e.arg) >= 3 else f"({inner})") + "~"
    p = _prec(e)
    left = to_text(e.left)
    right = to_text(e.right)
    if _prec(e.left) < p:
        left = f"({left})"
    if _prec(e.right) <= p:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(e)]} {right}"


# -- symbolic evaluation --------------------------------------------------


_SYMBOLIC = {
    "p": lambda: P_LEFT, "q": lambda: Q_LEFT, "P": lambda: P_DAG, "Q": lambda: Q_DAG,
    "s": lambda: SIGMA, "t": lambda: TAU, "t'": lambda: TAU_INV,
    "id": lambda: ONE, "zero": lambda: ZERO,
    "D": delta, "V": nabla,
    "S": lambda: endo_from_square(sym_S()),
    "T": lambda: endo_from_square(assoc_T()),
    "T'": lambda: endo_from_square(assoc_T_inv()),
}


def evaluate(e: Expr, max_iter: Optional[int] = None) -> DyadicPInj:
    """Evaluate to a canonical partial injection.

    Errors from a subexpression carry its text in ``subexpression``.
    """
    try:
        if isinstance(e, Generator):
            return _SYMBOLIC[e.name]()
        if isinstance(e, ThompsonX):
            return thompson_x(e.index)
        if isinstance(e, Dagger):
            return dagger(evaluate(e.arg, max_iter))
        left = evaluate(e.left, max_iter)
        right = evaluate(e.right, max_iter)
        if isinstance(e, DotCompose):
            return compose(left, right)
        if isinstance(e, IntCompose):
            return circ(left, right, max_iter)
        if isinstance(e, GoiCompose):
            return goi(left, right, max_iter)
        if isinstance(e, StarTensor):
            return star_tensor(left, right)
        if isinstance(e, BoxTensor):
            return box(left, right)
    except (TraceDivergence, NotDisjoint, DepthExceeded) as exc:
        if getattr(exc, "subexpression", None) is None:
            exc.subexpression = to_text(e)
        raise
    raise TypeError(f"not an expression: {e!r}")


# -- window evaluation (independent of the symbolic arithmetic) -----------------

_WORD = {"p": "p", "q": "q", "P": "p‡", "Q": "q‡", "s": "σ", "t": "τ", "t'": "τ′", "id": "1", "zero": "0"}
_DAGGER_NAME = {"p": "P", "P": "p", "q": "Q", "Q": "q", "s": "s", "t": "t'", "t'": "t",
                "id": "id", "zero": "zero", "S": "S", "T": "T'", "T'": "T", "D": "V", "V": "D"}


def _window_generator(name: str, n: int):
    if name in _WORD:
        return oracle.word_window([_WORD[name]], n)
    w = lambda k: _window_generator(k, n)  # noqa: E731
    if name == "S":
        return oracle.w_star(w("s"), w("s"))
    if name == "T":
        return oracle.w_star(w("t"), w("t'"))
    if name == "T'":
        return oracle.w_star(w("t'"), w("t"))
    if name == "D":
        return oracle.w_compose(w("t"), oracle.w_star(w("id"), w("s")))
    if name == "V":
        return oracle.w_compose(oracle.w_star(w("id"), w("s")), w("t'"))
    raise KeyError(name)


def _window_thompson(i: int, n: int, inverse: bool):
    x = _window_generator("t'" if inverse else "t", n)
    one = _window_generator("id", n)
    for _ in range(i):
        x = oracle.w_star(one, x)
    return x


def window_evaluate(e: Expr, n: int = oracle.DEFAULT_WINDOW,
                    step_bound: int = oracle.DEFAULT_STEP_BOUND) -> "oracle.WindowMap":
    """Evaluate on ``0 .. n-1`` from the generators' case formulas and token passing."""
    rec = lambda x: window_evaluate(x, n, step_bound)  # noqa: E731
    if isinstance(e, Generator):
        return _window_generator(e.name, n)
    if isinstance(e, ThompsonX):
        return _window_thompson(e.index, n, False)
    if isinstance(e, Dagger):
        a = e.arg
        # push ‡ through the operations it is known to commute with
        if isinstance(a, Generator):
            return _window_generator(_DAGGER_NAME[a.name], n)
        if isinstance(a, ThompsonX):
            return _window_thompson(a.index, n, True)
        if isinstance(a, Dagger):
            return rec(a.arg)
        if isinstance(a, DotCompose):
            return oracle.w_compose(rec(Dagger(a.right)), rec(Dagger(a.left)))
        if isinstance(a, StarTensor):
            return oracle.w_star(rec(Dagger(a.left)), rec(Dagger(a.right)))
        return oracle.w_dagger(rec(a))
    left, right = rec(e.left), rec(e.right)
    if isinstance(e, DotCompose):
        return oracle.w_compose(left, right)
    if isinstance(e, StarTensor):
        return oracle.w_star(left, right)
    if isinstance(e, BoxTensor):
        return oracle.w_box(left, right)
    if isinstance(e, IntCompose):
        return oracle.w_square(left, right, "int", step_bound)
    if isinstance(e, GoiCompose):
        return oracle.w_square(left, right, "goi", step_bound)
    raise TypeError(f"not an expression: {e!r}")


# -- helpers ------------------------------------------------------------------


def chain(op, items: list) -> Expr:
    """Left-nested ``op`` over ``items``."""
    it = iter(items)
    out = next(it)
    for x in it:
        out = op(out, x)
    return out


def bicyclic_letters(e: Expr) -> Optional[list]:
    """The D/V letters of an ∘-word over {D, V}, leftmost first; None otherwise."""
    if isinstance(e, Generator) and e.name in ("D", "V"):
        return [e.name]
    if isinstance(e, IntCompose):
        left, right = bicyclic_letters(e.left), bicyclic_letters(e.right)
        if left is not None and right is not None:
            return left + right
    return None


__all__ = [
    "BoxTensor", "Dagger", "DotCompose", "Expr", "Generator", "GoiCompose", "IntCompose",
    "StarTensor", "ThompsonX", "GENERATOR_NAMES", "UNICODE", "bicyclic_letters", "chain",
    "evaluate", "parse", "to_text", "window_evaluate",
]
