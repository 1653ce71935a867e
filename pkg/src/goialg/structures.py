"""Thompson's F, the bicyclic monoid and the split/merge Frobenius monoid.

Laws are checked twice: symbolically, on canonical forms, and pointwise on a
finite window by :func:`goialg.expr.window_evaluate`, which never touches the
symbolic arithmetic.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

from .dyadic import (
    ONE, P_DAG, P_LEFT, Q_DAG, Q_LEFT, SIGMA, TAU, TAU_INV, ZERO, DyadicPInj,
    compose, compose_all, dagger, get_depth_limit, union,
)
from .errors import DepthExceeded, GoiError, TraceDivergence
from .intgoi import (
    II, NN, box, circ, compose_int, dual, embed_left, embed_right, endo_from_square,
    epsilon, eta, identity, yanking_left, yanking_right,
)
from .oracle import DEFAULT_WINDOW
from .traced import UNIT, decompose, star_tensor, trace, typed_identity, typed_trace

SUITES = (
    "dynamical", "pentagonF", "hexagon", "traceAxioms", "yankingCC", "bicyclic",
    "frobenius", "matrixForms", "embeddings", "canonicalIsoIdentities", "curiosity",
)


# -- constructions ------------------------------------------------------------


def thompson_x(i: int) -> DyadicPInj:
    """``x_0 = τ``, ``x_{i+1} = 1 ⋆ x_i``."""
    if i + 2 > get_depth_limit():
        raise DepthExceeded(i + 2, get_depth_limit())
    x = TAU
    for _ in range(i):
        x = star_tensor(ONE, x)
    return x


def delta() -> DyadicPInj:
    """Split: ``Δ = τ · (1 ⋆ σ)``."""
    return compose(TAU, star_tensor(ONE, SIGMA))


def nabla() -> DyadicPInj:
    """Merge: ``∇ = (1 ⋆ σ) · τ′``."""
    return compose(star_tensor(ONE, SIGMA), TAU_INV)


class BicyclicNF(NamedTuple):
    d: int
    c: int

    def __mul__(self, other: "BicyclicNF") -> "BicyclicNF":
        return bicyclic_compose_nf(self, other)


def bicyclic_compose_nf(x: BicyclicNF, y: BicyclicNF) -> BicyclicNF:
    """``(d,c)(b,a) = (d + (b ∸ c), (c ∸ b) + a)``."""
    d, c = x
    b, a = y
    return BicyclicNF(d + max(b - c, 0), max(c - b, 0) + a)


BICYCLIC_LETTER = {"D": BicyclicNF(1, 0), "V": BicyclicNF(0, 1)}
_LETTER_NAMES = {"D": "D", "Δ": "D", "V": "V", "∇": "V"}


def bicyclic_nf(word: Sequence[str]) -> BicyclicNF:
    nf = BicyclicNF(0, 0)
    for letter in word:
        nf = nf * BICYCLIC_LETTER[_LETTER_NAMES[letter]]
    return nf


def bicyclic_eval(word: Sequence[str], max_iter: Optional[int] = None):
    """∘-evaluate a word over {Δ, ∇} (leftmost applied last) and fold its normal form."""
    value = ONE
    gens = {"D": delta(), "V": nabla()}
    for letter in reversed(word):
        value = circ(gens[_LETTER_NAMES[letter]], value, max_iter)
    return value, bicyclic_nf(word)


# -- reports --------------------------------------------------------------------


@dataclass
class LawResult:
    name: str
    status: str  # "holds" | "fails" | "diverged"
    witness: object = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "witness": self.witness}


@dataclass
class LawReport:
    suite: str
    laws: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def failures(self) -> list:
        return [law for law in self.laws if law.status == "fails"]

    @property
    def diverged(self) -> list:
        return [law for law in self.laws if law.status == "diverged"]

    @property
    def ok(self) -> bool:
        return all(law.status == "holds" for law in self.laws)

    def extend(self, other: "LawReport") -> None:
        self.laws.extend(other.laws)
        self.seconds += other.seconds

    def to_json(self) -> dict:
        return {"suite": self.suite, "laws": [law.to_json() for law in self.laws]}

    @classmethod
    def from_json(cls, data: dict) -> "LawReport":
        laws = [LawResult(x["name"], x["status"], x.get("witness")) for x in data["laws"]]
        return cls(data["suite"], laws)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, indent=2)

    def summary(self) -> str:
        held = sum(law.status == "holds" for law in self.laws)
        return f"{self.suite}: {held}/{len(self.laws)} hold"


def _timed(name: str, check: Callable[[], tuple]) -> LawResult:
    """Run ``check() -> (holds, witness)``; divergence becomes a status."""
    start = time.perf_counter()
    try:
        holds, witness = check()
        status = "holds" if holds else "fails"
    except (TraceDivergence, DepthExceeded) as exc:
        status, witness = "diverged", str(exc)
    return LawResult(name, status, witness, time.perf_counter() - start)


def first_difference(f: DyadicPInj, g: DyadicPInj, limit: int = 1 << 16) -> Optional[int]:
    for n in range(limit):
        if f(n) != g(n):
            return n
    return None


def _point_witness(lhs: DyadicPInj, rhs: DyadicPInj) -> dict:
    n = first_difference(lhs, rhs)
    if n is None:
        return {"lhs": lhs.to_json(), "rhs": rhs.to_json()}
    return {"point": n, "lhs": lhs(n), "rhs": rhs(n)}


class _Ctx:
    def __init__(self, seed: int = 0, max_iter: Optional[int] = None, window: int = DEFAULT_WINDOW):
        self.rng = random.Random(seed)
        self.max_iter = max_iter
        self.window = window


def _equation(name: str, lhs, rhs, ctx: _Ctx, expect_equal: bool = True) -> LawResult:
    """Compare two expressions (text or AST) symbolically and on the window."""
    from . import expr as ex
    from .oracle import disagreements

    le = ex.parse(lhs) if isinstance(lhs, str) else lhs
    re_ = ex.parse(rhs) if isinstance(rhs, str) else rhs

    def check():
        a = ex.evaluate(le, ctx.max_iter)
        b = ex.evaluate(re_, ctx.max_iter)
        same = a == b
        if ctx.window:
            wa = ex.window_evaluate(le, ctx.window)
            wb = ex.window_evaluate(re_, ctx.window)
            bad = disagreements(wa, wb)
            if expect_equal and bad:
                n = bad[0]
                return False, {"point": n, "lhs": wa[n].__repr__(), "rhs": wb[n].__repr__(), "oracle": True}
            if expect_equal and not same:
                return False, _point_witness(a, b)
            if not expect_equal and not bad and same:
                return False, {"equal": a.to_json()}
        if expect_equal:
            return same, (None if same else _point_witness(a, b))
        return not same, (None if not same else {"equal": a.to_json()})

    return _timed(name, check)


def _report(suite: str, laws: Iterable[LawResult]) -> LawReport:
    start = time.perf_counter()
    laws = list(laws)
    return LawReport(suite, laws, time.perf_counter() - start + sum(law.seconds for law in laws))


# -- random words ---------------------------------------------------------------

WORD_ALPHABET = ("p", "q", "P", "Q", "s", "t", "t'")
BIJECTIONS = ("s", "t", "t'")


def random_word(rng: random.Random, max_len: int = 8, alphabet: Sequence[str] = WORD_ALPHABET) -> list:
    return [rng.choice(alphabet) for _ in range(rng.randint(1, max_len))]


def random_expr(rng: random.Random, depth: int = 3, alphabet: Sequence[str] = WORD_ALPHABET):
    """Random ·/⋆ expression; small enough to keep piece counts modest."""
    from . import expr as ex

    if depth == 0 or rng.random() < 0.3:
        return ex.Generator(rng.choice(alphabet + ("id",)))
    op = ex.DotCompose if rng.random() < 0.6 else ex.StarTensor
    return op(random_expr(rng, depth - 1, alphabet), random_expr(rng, depth - 1, alphabet))


def word_to_expr(word: Sequence[str]):
    from . import expr as ex

    return ex.chain(ex.DotCompose, [ex.Generator(w) for w in word])


# -- suites -------------------------------------------------------------------


def _dynamical(ctx: _Ctx) -> list:
    def sigma_case(n):
        return n + 1 if n % 2 == 0 else n - 1

    def tau_case(n):
        if n % 2 == 0:
            return 2 * n
        return n + 1 if n % 4 == 1 else (n - 1) // 2

    def table(f, case):
        def check():
            for n in range(ctx.window or DEFAULT_WINDOW):
                if f(n) != case(n):
                    return False, {"point": n, "lhs": f(n), "rhs": case(n)}
            return True, None
        return check

    laws = [
        _equation("pp‡ = 1", "p . P", "id", ctx),
        _equation("qq‡ = 1", "q . Q", "id", ctx),
        _equation("pq‡ = 0", "p . Q", "zero", ctx),
        _equation("qp‡ = 0", "q . P", "zero", ctx),
    ]
    union_law = _timed("p‡p ∪ q‡q = 1", lambda: (union(compose(P_DAG, P_LEFT), compose(Q_DAG, Q_LEFT)) == ONE, None))
    # the four equations pair up as the first two conditions
    cond1 = _merge_laws("condition 1: pp‡ = 1 = qq‡", laws[0:2])
    cond2 = _merge_laws("condition 2: pq‡ = 0 = qp‡", laws[2:4])
    return [
        cond1, cond2,
        LawResult("condition 3: " + union_law.name, union_law.status, union_law.witness, union_law.seconds),
        _timed("σ value table", table(SIGMA, sigma_case)),
        _timed("τ value table", table(TAU, tau_case)),
    ]


def _merge_laws(name: str, laws: list) -> LawResult:
    bad = [law for law in laws if law.status != "holds"]
    if not bad:
        return LawResult(name, "holds", None, sum(law.seconds for law in laws))
    worst = "diverged" if all(law.status == "diverged" for law in bad) else "fails"
    return LawResult(name, worst, {law.name: law.witness for law in bad}, sum(law.seconds for law in laws))


def _box_family(i: int, inverse: bool = False):
    from . import expr as ex

    x = ex.Generator("T'" if inverse else "T")
    for _ in range(i):
        x = ex.BoxTensor(ex.Generator("id"), x)
    return x


def check_f_relations(max_index: int = 5, max_iter: Optional[int] = None,
                      window: int = DEFAULT_WINDOW) -> LawReport:
    """``x_i⁻¹ x_j x_i = x_{j+1}`` for ``0 ≤ i < j ≤ max_index``, in (·,⋆) and in (∘,□)."""
    from . import expr as ex

    ctx = _Ctx(0, max_iter, window)
    laws = []
    for i in range(max_index + 1):
        for j in range(i + 1, max_index + 1):
            xi, xj = ex.ThompsonX(i), ex.ThompsonX(j)
            lhs = ex.chain(ex.DotCompose, [ex.Dagger(xi), xj, xi])
            laws.append(_equation(f"(·,⋆) x{i}⁻¹ x{j} x{i} = x{j + 1}", lhs, ex.ThompsonX(j + 1), ctx))
    for i in range(max_index + 1):
        for j in range(i + 1, max_index + 1):
            lhs = ex.chain(ex.IntCompose, [_box_family(i, True), _box_family(j), _box_family(i)])
            laws.append(_equation(f"(∘,□) X{i}⁻¹ X{j} X{i} = X{j + 1}", lhs, _box_family(j + 1), ctx))
    return _report("F relations", laws)


def _pentagon_f(ctx: _Ctx) -> list:
    laws = list(check_f_relations(5, ctx.max_iter, ctx.window).laws)
    laws += [
        _equation("pentagon (·,⋆)", "t . t", "(t * id) . t . (id * t)", ctx),
        _equation("pentagon (∘,□)", "T o T", "(T # id) o T o (id # T)", ctx),
    ]
    for i in range(4):
        laws.append(_equation(f"(∘,□) X{i}′ ∘ X{i} = 1", _circ_pair(i), "id", ctx))
    laws.append(_timed("F is a group (·,⋆ closure of τ, τ′)", lambda: _group_property(ctx)))
    return laws


def _circ_pair(i: int):
    from . import expr as ex

    return ex.IntCompose(_box_family(i, True), _box_family(i))


def _group_property(ctx: _Ctx) -> tuple:
    from . import expr as ex

    for _ in range(60):
        e = random_expr(ctx.rng, 3, BIJECTIONS)
        f = ex.evaluate(e)
        if compose(dagger(f), f) != ONE or compose(f, dagger(f)) != ONE:
            return False, {"word": ex.to_text(e)}
    return True, None


def _hexagon(ctx: _Ctx) -> list:
    return [
        _equation("hexagon τ′σ τ′ (·,⋆)", "t' . s . t'", "(id * s) . t' . (s * id)", ctx),
        _equation("hexagon τσ τ (·,⋆)", "t . s . t", "(s * id) . t . (id * s)", ctx),
        _equation("hexagon T′ S T′ (∘,□)", "T' o S o T'", "(id # S) o T' o (S # id)", ctx),
        _equation("hexagon T S T (∘,□)", "T o S o T", "(S # id) o T o (id # S)", ctx),
        _equation("σ·σ = 1", "s . s", "id", ctx),
        _equation("S∘S = 1", "S o S", "id", ctx),
    ]


def _sampled(name: str, ctx: _Ctx, samples: int, make: Callable, lhs: Callable, rhs: Callable) -> LawResult:
    """A law over random inputs; samples where either side diverges are skipped."""
    from . import expr as ex

    def check():
        tried = 0
        for _ in range(samples):
            args = make()
            try:
                a, b = lhs(*args), rhs(*args)
            except (TraceDivergence, DepthExceeded):
                continue
            tried += 1
            if a != b:
                return False, {"inputs": [ex.to_text(x) for x in args], **_point_witness(a, b)}
        if tried == 0:
            raise TraceDivergence(ctx.max_iter or 0)
        return True, {"checked": tried}

    result = _timed(name, check)
    if result.status == "holds":
        result.witness = None
    return result


def _trace_axioms(ctx: _Ctx) -> list:
    from . import expr as ex

    mi = ctx.max_iter
    ev = ex.evaluate
    one_expr = lambda: (random_expr(ctx.rng, 3),)  # noqa: E731
    two_expr = lambda: (random_expr(ctx.rng, 3), random_expr(ctx.rng, 3))  # noqa: E731
    tr = lambda f: trace(f, mi)  # noqa: E731
    laws = [_timed("yanking Tr(σ) = 1", lambda: (tr(SIGMA) == ONE, None))]
    laws.append(_sampled(
        "vanishing II: Tr over U⋆V = Tr_U Tr_V", ctx, 200, one_expr,
        lambda e: tr(ev(e)),
        lambda e: tr(tr(compose_all(TAU, ev(e), TAU_INV))),
    ))
    laws.append(_sampled(
        "superposing: Tr(g ⋆ f) = g ⋆ Tr(f)", ctx, 100, two_expr,
        lambda g, f: tr(compose_all(TAU, star_tensor(ev(g), ev(f)), TAU_INV)),
        lambda g, f: star_tensor(ev(g), tr(ev(f))),
    ))
    laws.append(_sampled(
        "naturality: Tr((h⋆1) f (k⋆1)) = h Tr(f) k", ctx, 100,
        lambda: (random_expr(ctx.rng, 2), random_expr(ctx.rng, 3), random_expr(ctx.rng, 2)),
        lambda h, f, k: tr(compose_all(star_tensor(ev(h), ONE), ev(f), star_tensor(ev(k), ONE))),
        lambda h, f, k: compose_all(ev(h), tr(ev(f)), ev(k)),
    ))
    laws.append(_sampled(
        "dinaturality: Tr((1⋆g) f) = Tr(f (1⋆g))", ctx, 100, lambda: (random_expr(ctx.rng, 3), random_expr(ctx.rng, 2)),
        lambda f, g: tr(compose(star_tensor(ONE, ev(g)), ev(f))),
        lambda f, g: tr(compose(ev(f), star_tensor(ONE, ev(g)))),
    ))
    laws.append(_timed("vanishing I: tracing the unit is the identity", lambda: (
        typed_trace(typed_identity(UNIT), UNIT) == typed_identity(UNIT), None)))
    return laws


def _yanking(ctx: _Ctx) -> list:
    return [
        _timed("(1□ε) ∘ T′ ∘ (η□1) = 1", lambda: (yanking_left() == identity(NN), None)),
        _timed("(ε□1) ∘ T ∘ (1□η) = 1", lambda: (yanking_right() == identity(NN), None)),
        _timed("η* = ε", lambda: (dual(eta()) == epsilon(), None)),
        _timed("ε ∘ η = 1_I", lambda: (compose_int(epsilon(), eta(), ctx.max_iter) == identity(II), None)),
    ]


def all_words(max_len: int, letters: Sequence[str] = ("D", "V")) -> list:
    words = [[]]
    frontier = [[]]
    for _ in range(max_len):
        frontier = [[x] + w for w in frontier for x in letters]
        words.extend(frontier)
    return words


def bicyclic_soundness(max_len: int = 8, max_iter: Optional[int] = None) -> tuple:
    """Check NF equality ⟺ ∘-equality over all words of length ≤ max_len.

    Returns ``(holds, witness, count)``.
    """
    gens = {"D": delta(), "V": nabla()}
    values = {(): ONE}
    for w in all_words(max_len):
        if w:
            values[tuple(w)] = circ(gens[w[0]], values[tuple(w[1:])], max_iter)
    by_nf: dict = {}
    by_value: dict = {}
    for w, v in values.items():
        nf = bicyclic_nf(w)
        by_nf.setdefault(nf, set()).add(w)
        by_value.setdefault(v, set()).add(w)
    classes_nf = {frozenset(s) for s in by_nf.values()}
    classes_val = {frozenset(s) for s in by_value.values()}
    if classes_nf == classes_val:
        return True, None, len(values)
    for cls in classes_nf ^ classes_val:
        ws = sorted(cls, key=len)
        return False, {"words": ["".join(w) or "ε" for w in ws[:4]]}, len(values)
    return False, None, len(values)


def _bicyclic(ctx: _Ctx) -> list:
    def sound():
        ok, witness, _ = bicyclic_soundness(8, ctx.max_iter)
        return ok, witness

    def monus_assoc():
        r = ctx.rng
        for _ in range(500):
            x, y, z = (BicyclicNF(r.randint(0, 6), r.randint(0, 6)) for _ in range(3))
            if (x * y) * z != x * (y * z):
                return False, {"triple": [list(x), list(y), list(z)]}
        return True, None

    def pair(word, nf):
        def check():
            value, got = bicyclic_eval(word, ctx.max_iter)
            return got == nf, (None if got == nf else {"nf": list(got)})
        return check

    return [
        _equation("∇ ∘ Δ = 1 (rs = 1)", "V o D", "id", ctx),
        _equation("Δ ∘ ∇ ≠ 1 (sr ≠ 1)", "D o V", "id", ctx, expect_equal=False),
        _timed("NF of ∇∘Δ is (0,0)", pair(["V", "D"], BicyclicNF(0, 0))),
        _timed("NF of Δ∘∇ is (1,1)", pair(["D", "V"], BicyclicNF(1, 1))),
        _timed("monus law is associative", monus_assoc),
        _timed("NF equality ⟺ ∘-equality, words ≤ 8", sound),
    ]


def frobenius_laws(max_iter: Optional[int] = None, window: int = DEFAULT_WINDOW) -> LawReport:
    ctx = _Ctx(0, max_iter, window)
    laws = [
        _equation("Frobenius: (1□∇) ∘ T′ ∘ (Δ□1) = Δ ∘ ∇", "(id # V) o T' o (D # id)", "D o V", ctx),
        _equation("Frobenius: (∇□1) ∘ T ∘ (1□Δ) = Δ ∘ ∇", "(V # id) o T o (id # D)", "D o V", ctx),
        _equation("associativity: ∇ ∘ (1□∇) = ∇ ∘ (∇□1) ∘ T", "V o (id # V)", "V o (V # id) o T", ctx),
        _equation("co-associativity: (1□Δ) ∘ Δ = T′ ∘ (Δ□1) ∘ Δ", "(id # D) o D", "T' o (D # id) o D", ctx),
        _equation("∇ ∘ Δ = 1", "V o D", "id", ctx),
        _equation("Δ ∘ ∇ ≠ 1", "D o V", "id", ctx, expect_equal=False),
    ]
    return _report("frobenius", laws)


def _matrix_forms(ctx: _Ctx) -> list:
    from .traced import Matrix2x2

    pd_p = compose(P_DAG, P_LEFT)
    qd_q = compose(Q_DAG, Q_LEFT)

    def mat(name, got, want):
        return _timed(name, lambda: (got() == Matrix2x2(*want), None))

    return [
        mat("Δ = (p‡, q‡q; 0, p)", lambda: decompose(delta()), (P_DAG, qd_q, ZERO, P_LEFT)),
        mat("∇ = (p, 0; q‡q, p‡)", lambda: decompose(nabla()), (P_LEFT, ZERO, qd_q, P_DAG)),
        _equation("Δ · ∇ = 1", "D . V", "id", ctx),
        _equation("∇ · Δ = 1", "V . D", "id", ctx),
        _equation("∇ ∘ Δ = 1", "V o D", "id", ctx),
        mat("Δ ∘ ∇ = (p‡p, q‡q; q‡q, p‡p)", lambda: decompose(circ(delta(), nabla(), ctx.max_iter)),
            (pd_p, qd_q, qd_q, pd_p)),
        _equation("Δ ∘ ∇ ≠ 1", "D o V", "id", ctx, expect_equal=False),
        mat("τ = (p‡, q‡p; 0, q)", lambda: decompose(TAU), (P_DAG, compose(Q_DAG, P_LEFT), ZERO, Q_LEFT)),
        mat("τ′ = (p, 0; p‡q, q‡)", lambda: decompose(TAU_INV), (P_LEFT, ZERO, compose(P_DAG, Q_LEFT), Q_DAG)),
    ]


def _random_pair(ctx: _Ctx):
    return tuple(word_to_expr(random_word(ctx.rng, 6)) for _ in range(2))


def _embeddings(ctx: _Ctx) -> list:
    from . import expr as ex

    pairs = [_random_pair(ctx) for _ in range(200)]

    def hom(embed, flip):
        def check():
            for g, f in pairs:
                gv, fv = ex.evaluate(g), ex.evaluate(f)
                lhs = compose_int(embed(gv), embed(fv), ctx.max_iter)
                rhs = embed(compose(fv, gv) if flip else compose(gv, fv))
                if lhs != rhs:
                    return False, {"g": ex.to_text(g), "f": ex.to_text(f)}
            return True, None
        return check

    def window_check(left):
        def check():
            from .oracle import disagreements

            for g, f in pairs[:20]:
                one = ex.Generator("id")
                wrap = (lambda x: ex.StarTensor(x, one)) if left else (lambda x: ex.StarTensor(one, x))
                lhs = ex.IntCompose(wrap(g), wrap(f))
                rhs = wrap(ex.DotCompose(g, f) if left else ex.DotCompose(f, g))
                bad = disagreements(ex.window_evaluate(lhs, ctx.window), ex.window_evaluate(rhs, ctx.window))
                if bad:
                    return False, {"g": ex.to_text(g), "f": ex.to_text(f), "point": bad[0]}
            return True, None
        return check

    return [
        _timed("embed_left is a homomorphism", hom(embed_left, False)),
        _timed("embed_right is an anti-homomorphism", hom(embed_right, True)),
        _timed("embed_left(1) = 1", lambda: (embed_left(ONE) == identity(NN), None)),
        _timed("f⋆1 homomorphic on the window", window_check(True)),
        _timed("1⋆f anti-homomorphic on the window", window_check(False)),
    ]


def _canonical_isos(ctx: _Ctx) -> list:
    return [
        _equation("S = σ ⋆ σ", "S", "s * s", ctx),
        _equation("S = σ · S · σ", "S", "s . S . s", ctx),
        _equation("T = τ ⋆ τ′", "T", "t * t'", ctx),
        _equation("T′ = σ · T · σ", "T'", "s . T . s", ctx),
        _equation("S · S = 1", "S . S", "id", ctx),
        _equation("S ∘ S = 1", "S o S", "id", ctx),
        _equation("T · T′ = 1", "T . T'", "id", ctx),
        _equation("T′ · T = 1", "T' . T", "id", ctx),
        _equation("T ∘ T′ = 1", "T o T'", "id", ctx),
        _equation("T′ ∘ T = 1", "T' o T", "id", ctx),
        _equation("σ is the unit of vertical composition (left)", "s @ t", "t", ctx),
        _equation("σ is the unit of vertical composition (right)", "t @ s", "t", ctx),
    ]


def _curiosity(ctx: _Ctx) -> list:
    return [_equation("(Δ∘∇)·(Δ∘∇) = 1", "(D o V) . (D o V)", "id", ctx)]


_SUITE_FUNCS = {
    "dynamical": _dynamical,
    "pentagonF": _pentagon_f,
    "hexagon": _hexagon,
    "traceAxioms": _trace_axioms,
    "yankingCC": _yanking,
    "bicyclic": _bicyclic,
    "frobenius": lambda ctx: frobenius_laws(ctx.max_iter, ctx.window).laws,
    "matrixForms": _matrix_forms,
    "embeddings": _embeddings,
    "canonicalIsoIdentities": _canonical_isos,
    "curiosity": _curiosity,
}


def law_suite(name: str, seed: int = 0, max_iter: Optional[int] = None,
              window: int = DEFAULT_WINDOW) -> LawReport:
    """Run one named suite, or every suite for ``"all"``; deterministic per seed."""
    if name == "all":
        report = LawReport("all")
        for suite in SUITES:
            sub = law_suite(suite, seed, max_iter, window)
            for law in sub.laws:
                law.name = f"{suite}/{law.name}"
            report.extend(sub)
        return report
    if name not in _SUITE_FUNCS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    start = time.perf_counter()
    laws = _SUITE_FUNCS[name](_Ctx(seed, max_iter, window))
    return LawReport(name, laws, time.perf_counter() - start)


__all__ = [
    "BicyclicNF", "LawReport", "LawResult", "SUITES", "all_words", "bicyclic_compose_nf",
    "bicyclic_eval", "bicyclic_nf", "bicyclic_soundness", "check_f_relations", "delta",
    "first_difference", "frobenius_laws", "law_suite", "nabla", "random_expr", "random_word",
    "thompson_x", "word_to_expr",
]
