import random

import pytest

from goialg import expr as ex
from goialg.dyadic import (
    ONE, P_DAG, P_LEFT, Q_DAG, Q_LEFT, SIGMA, TAU, TAU_INV, ZERO, compose,
)
from goialg.errors import DepthExceeded, TraceDivergence, TypeMismatch
from goialg.intgoi import (
    II, NN, RookSquare, assoc_T, assoc_T_inv, box, box_tensor, circ, compose_goi,
    compose_int, dual, element, embed_left, embed_right, endo_from_square, epsilon, eta,
    goi_identity, identity, square_from_endo, sym_S, yanking_left, yanking_right,
)
from goialg.structures import delta, nabla, random_expr, random_word, word_to_expr
from goialg.traced import star_tensor

import oracles

PDP = compose(P_DAG, P_LEFT)
QDQ = compose(Q_DAG, Q_LEFT)


def sq(a, b, c, d):
    return RookSquare(NN, NN, a, b, c, d)


def test_square_endo_bijection():
    assert square_from_endo(ONE) == sq(ONE, ZERO, ZERO, ONE)
    rng = random.Random(1)
    for _ in range(100):
        f = ex.evaluate(word_to_expr(random_word(rng)))
        assert endo_from_square(square_from_endo(f)) == f
    with pytest.raises(TypeMismatch):
        endo_from_square(eta())


def test_compose_int_examples():
    D, V = square_from_endo(delta()), square_from_endo(nabla())
    assert compose_int(V, D) == identity()
    assert compose_int(D, V) == sq(PDP, QDQ, QDQ, PDP)
    assert compose_int(D, V) != identity()
    assert compose_int(D, identity()) == D == compose_int(identity(), D)
    assert endo_from_square(compose_int(D, V)) == circ(delta(), nabla())


def test_compose_int_type_mismatch():
    with pytest.raises(TypeMismatch):
        compose_int(eta(), eta())


def _sample_pairs(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g, f = random_expr(rng, 3), random_expr(rng, 3)
        out.append((ex.evaluate(g), ex.evaluate(f)))
    return out


@pytest.mark.parametrize("mode", ["int", "goi"])
def test_square_compose_matches_point_oracle(mode):
    checked = 0
    for g, f in _sample_pairs(2 if mode == "int" else 3, 150):
        try:
            h = circ(g, f) if mode == "int" else endo_from_square(
                compose_goi(square_from_endo(g), square_from_endo(f)))
        except (TraceDivergence, DepthExceeded):
            continue
        checked += 1
        for x in range(1 << 9):
            ref = oracles.square_point(g, f, x, mode)
            if ref != "diverged":
                assert h(x) == ref, (mode, x)
    assert checked > 80


def test_compose_goi_examples():
    # no feedback: upper square has d = 0 and lower square has a = 0
    g = sq(TAU, ZERO, ZERO, ZERO)
    f = sq(ZERO, ZERO, ZERO, SIGMA)
    out = compose_goi(g, f)
    assert out == sq(TAU, ZERO, ZERO, SIGMA)
    s = goi_identity()
    for h in (square_from_endo(TAU), square_from_endo(delta()), sym_S()):
        assert compose_goi(s, h) == h == compose_goi(h, s)


def test_box_tensor_examples():
    assert box_tensor(identity(), identity()) == identity()
    unit = identity(II)
    h = square_from_endo(TAU)
    assert box_tensor(unit, h) == h == box_tensor(h, unit)
    for f, g in [(TAU, SIGMA), (P_DAG, Q_LEFT)]:
        # diagonal squares tensor like ⋆ on each diagonal entry
        lhs = endo_from_square(box_tensor(embed_left(f), embed_left(g)))
        assert lhs == star_tensor(star_tensor(f, g), ONE)
        assert endo_from_square(box_tensor(embed_right(f), embed_right(g))) == star_tensor(ONE, star_tensor(f, g))


def test_box_is_a_bifunctor_for_circ():
    rng = random.Random(9)
    done = 0
    while done < 30:
        f1, f2, g1, g2 = (ex.evaluate(random_expr(rng, 2)) for _ in range(4))
        try:
            lhs = box(circ(g1, f1), circ(g2, f2))
            rhs = circ(box(g1, g2), box(f1, f2))
        except (TraceDivergence, DepthExceeded):
            continue
        assert lhs == rhs
        done += 1


def test_dual():
    h = square_from_endo(TAU)
    assert dual(dual(h)) == h
    assert dual(identity()) == identity()
    assert dual(eta()) == epsilon()
    assert dual(h) == square_from_endo(compose(SIGMA, compose(TAU, SIGMA)))


def test_dual_is_contravariant_and_monoidal():
    rng = random.Random(11)
    done = 0
    while done < 40:
        g, f = (square_from_endo(ex.evaluate(random_expr(rng, 2))) for _ in range(2))
        try:
            lhs = dual(compose_int(g, f))
            rhs = compose_int(dual(f), dual(g))
        except (TraceDivergence, DepthExceeded):
            continue
        assert lhs == rhs
        assert dual(box_tensor(g, f)) == box_tensor(dual(g), dual(f))
        done += 1


def test_eta_epsilon():
    e, c = eta(), epsilon()
    assert (e.src, e.tgt, e.b) == (II, NN, SIGMA)
    assert (c.src, c.tgt, c.c) == (NN, II, SIGMA)
    assert yanking_left() == identity()
    assert yanking_right() == identity()
    assert compose_int(c, e) == identity(II)


def test_yanking_without_associator_fails():
    # the □ tensor is not strictly associative, so the bare composite is not 1
    bare = compose_int(box_tensor(identity(), epsilon()), box_tensor(eta(), identity()))
    assert bare != identity()


def test_canonical_isos():
    assert endo_from_square(sym_S()) == star_tensor(SIGMA, SIGMA)
    assert compose_int(assoc_T(), assoc_T_inv()) == identity()
    assert endo_from_square(assoc_T()) == star_tensor(TAU, TAU_INV)
    T = endo_from_square(assoc_T())
    assert endo_from_square(assoc_T_inv()) == compose(SIGMA, compose(T, SIGMA))


def test_embeddings():
    rng = random.Random(12)
    for _ in range(50):
        g, f = (ex.evaluate(word_to_expr(random_word(rng, 5))) for _ in range(2))
        assert compose_int(embed_left(g), embed_left(f)) == embed_left(compose(g, f))
        assert compose_int(embed_right(g), embed_right(f)) == embed_right(compose(f, g))
    assert embed_left(ONE) == identity()


def test_element_and_json():
    e = element(TAU)
    assert e.src == II and e.b == TAU and e.a == ZERO
    for s in (e, eta(), epsilon(), square_from_endo(delta())):
        assert RookSquare.from_json(s.to_json()) == s
    data = square_from_endo(TAU).to_json()
    assert data["src"] == "NN" and set(data) == {"src", "tgt", "a", "b", "c", "d"}
    bad = dict(eta().to_json())
    bad["a"] = TAU.to_json()
    with pytest.raises(TypeMismatch):
        RookSquare.from_json(bad)
    with pytest.raises(TypeMismatch):
        RookSquare.from_json({**data, "src": "XY"})


def test_circ_is_associative_and_unital():
    rng = random.Random(13)
    done = tried = 0
    while done < 1000:
        tried += 1
        h, g, f = (square_from_endo(ex.evaluate(random_expr(rng, 2))) for _ in range(3))
        try:
            lhs = compose_int(h, compose_int(g, f))
            rhs = compose_int(compose_int(h, g), f)
        except (TraceDivergence, DepthExceeded):
            continue
        assert lhs == rhs
        assert compose_int(f, identity()) == f == compose_int(identity(), f)
        done += 1
    assert tried < 2000


@pytest.mark.parametrize("mode", ["int", "goi"])
def test_square_compose_matches_token_simulation(mode):
    from goialg.oracle import disagreements, square_compose_window, truncate

    rng = random.Random(14)
    done = 0
    while done < 100:
        g, f = (square_from_endo(ex.evaluate(random_expr(rng, 3))) for _ in range(2))
        try:
            h = compose_int(g, f) if mode == "int" else compose_goi(g, f)
        except (TraceDivergence, DepthExceeded):
            continue
        done += 1
        sym = truncate(endo_from_square(h), 1 << 14)
        assert disagreements(sym, square_compose_window(g, f, mode, 1 << 14)) == []
