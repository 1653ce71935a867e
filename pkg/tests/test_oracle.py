import random
from array import array

import pytest

from goialg import _kernels_py, expr as ex, oracle
from goialg._accel import COMPILED, pack_graph, pack_pieces
from goialg.dyadic import ONE, P_DAG, Q_DAG, SIGMA, TAU, ZERO
from goialg.errors import NonDeterministic
from goialg.intgoi import identity, square_from_endo
from goialg.oracle import (
    Outcome, Value, disagreements, simulate_square_compose, simulate_trace, square_compose_window,
    trace_window, truncate, word_values,
)
from goialg.structures import delta, nabla, random_expr
from goialg.traced import IDENTITY_MATRIX, Matrix2x2, decompose, trace

import oracles

N = 1 << 10


def test_truncate_examples():
    w = truncate(ONE, 4)
    assert [w[n] for n in range(4)] == [Value(0), Value(1), Value(2), Value(3)]
    w = truncate(P_DAG, 4)
    assert [w[n] for n in range(4)] == [Value(0), Value(2), Outcome.OUT_OF_WINDOW, Outcome.OUT_OF_WINDOW]
    assert all(truncate(ZERO, 8)[n] is Outcome.UNDEFINED for n in range(8))
    assert truncate(TAU, N).check_injective()


def test_simulate_trace_examples():
    s = decompose(SIGMA)
    assert all(simulate_trace(s, x, 64, 8) == Value(x) for x in range(64))
    assert all(simulate_trace(IDENTITY_MATRIX, x, 64, 8) == Value(x) for x in range(64))
    assert trace_window(s, 64).codes == list(range(64))


def test_simulate_trace_steps_exceeded():
    m = Matrix2x2(ZERO, ZERO, P_DAG, Q_DAG)
    assert simulate_trace(m, 0, 64, 5) in (Outcome.STEPS_EXCEEDED, Outcome.OUT_OF_WINDOW)
    assert simulate_trace(m, 3, 1 << 20, 5) == Outcome.STEPS_EXCEEDED


def test_trace_window_agrees_with_symbolic_trace():
    rng = random.Random(0)
    done = 0
    while done < 30:
        f = ex.evaluate(random_expr(rng, 3))
        try:
            t = trace(f)
        except Exception:
            continue
        done += 1
        assert disagreements(trace_window(decompose(f), N), truncate(t, N)) == []


def test_square_compose_examples():
    D, V = square_from_endo(delta()), square_from_endo(nabla())
    assert all(simulate_square_compose(V, D, "int", x, 64, 16) == Value(x) for x in range(64))
    ident = identity()
    assert all(simulate_square_compose(ident, ident, "int", x, 64, 16) == Value(x) for x in range(64))
    assert square_compose_window(V, D, "int", 64).codes == list(range(64))


def test_goi_window_agrees_with_point_oracle():
    rng = random.Random(1)
    for _ in range(30):
        g, f = ex.evaluate(random_expr(rng, 2)), ex.evaluate(random_expr(rng, 2))
        w = square_compose_window(square_from_endo(g), square_from_endo(f), "goi", N)
        for x in range(N):
            ref = oracles.square_point(g, f, x, "goi")
            got = w[x]
            if isinstance(got, Value):
                assert got.value == ref
            elif got is Outcome.UNDEFINED:
                assert ref is None


def test_nondeterminism_is_a_hard_error():
    bad = Matrix2x2(ONE, ZERO, ONE, ZERO)  # two edges leave the input node
    with pytest.raises(NonDeterministic):
        trace_window(bad, 16)
    with pytest.raises(NonDeterministic):
        simulate_trace(bad, 1, 16)


def test_word_values_match_case_formulas():
    rng = random.Random(2)
    names = ["p", "q", "P", "Q", "s", "t", "t'"]
    for _ in range(50):
        w = [rng.choice(names) for _ in range(rng.randint(1, 8))]
        vals = word_values([{"P": "p‡", "Q": "q‡", "s": "σ", "t": "τ", "t'": "τ′"}.get(x, x) for x in w], N)
        ref = oracles.word(w)
        for n in range(N):
            r = ref(n)
            assert vals[n] == (-1 if r is None else r)


def test_window_combinators_match_point_oracles():
    rng = random.Random(3)
    for _ in range(20):
        e1, e2 = random_expr(rng, 2), random_expr(rng, 2)
        f, g = ex.evaluate(e1), ex.evaluate(e2)
        wf, wg = ex.window_evaluate(e1, N), ex.window_evaluate(e2, N)
        checks = [
            (oracle.w_compose(wg, wf), oracles.then(g, f)),
            (oracle.w_star(wf, wg), oracles.star(f, g)),
            (oracle.w_square(wg, wf, "int"), lambda x: oracles.square_point(g, f, x, "int")),
        ]
        for w, ref in checks:
            for x in range(N):
                got = w[x]
                if isinstance(got, Value):
                    assert got.value == ref(x)
                elif got is Outcome.UNDEFINED:
                    assert ref(x) is None


@pytest.mark.skipif(not COMPILED, reason="compiled kernels not built")
def test_compiled_kernels_match_pure_python():
    from goialg import _kernels

    rng = random.Random(4)
    for _ in range(20):
        f = ex.evaluate(random_expr(rng, 3))
        packed = pack_pieces(f)
        assert _kernels.window_apply(packed, N) == _kernels_py.window_apply(packed, N)
        codes = array("q", [rng.randrange(8) for _ in range(6)])
        assert _kernels.word_window(codes, N) == _kernels_py.word_window(codes, N)
        m = decompose(f)
        edges = {("in", "out"): m.f00, ("in", "u"): m.f10, ("u", "out"): m.f01, ("u", "u"): m.f11}
        pieces, flat, starts, ins, kinds = pack_graph(["in", "u", "out"], edges, ["in"], ["out"])
        assert _kernels.token_window(pieces, flat, starts, 1, ins, kinds, N, 64) == \
            _kernels_py.token_window(pieces, flat, starts, 1, ins, kinds, N, 64)
        g = ex.evaluate(random_expr(rng, 3))
        wf, wg = array("q", truncate(f, N).codes), array("q", truncate(g, N).codes)
        table = oracle._INT_TABLE
        assert _kernels.square_window(wg, wf, table, N, 64) == _kernels_py.square_window(wg, wf, table, N, 64)


def test_clamped_pieces_stay_exact_for_huge_slopes():
    f = ex.evaluate(ex.parse(" . ".join(["P"] * 50)))
    w = truncate(f, 8)
    assert w[0] == Value(0)
    assert all(w[n] is Outcome.OUT_OF_WINDOW for n in range(1, 8))
