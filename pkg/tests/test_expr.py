import pytest
from hypothesis import given, settings, strategies as st

from goialg import expr as ex
from goialg.dyadic import ONE, SIGMA, TAU, ZERO
from goialg.errors import DepthExceeded, ParseError, TraceDivergence
from goialg.expr import (
    BoxTensor, Dagger, DotCompose, Generator, GoiCompose, IntCompose, StarTensor, ThompsonX,
    evaluate, parse, to_text,
)
from goialg.structures import delta


def test_parse_examples():
    assert parse("t . (id * s)") == DotCompose(Generator("t"), StarTensor(Generator("id"), Generator("s")))
    assert evaluate(parse("t . (id * s)")) == delta()
    frob = parse("(id # V) o T' o (D # id)")
    assert frob == IntCompose(
        IntCompose(BoxTensor(Generator("id"), Generator("V")), Generator("T'")),
        BoxTensor(Generator("D"), Generator("id")),
    )
    with pytest.raises(ParseError) as info:
        parse("p .")
    assert info.value.position == 3
    assert "generator" in info.value.expected


def test_precedence_and_postfix():
    assert parse("p * q . s") == DotCompose(StarTensor(Generator("p"), Generator("q")), Generator("s"))
    assert parse("s~~") == Dagger(Dagger(Generator("s")))
    assert parse("x12") == ThompsonX(12)
    assert parse("p @ q") == GoiCompose(Generator("p"), Generator("q"))
    assert parse("  p.q  ") == parse("p . q")


@pytest.mark.parametrize("text,pos", [("", 0), ("(p", 2), ("p q", 2), ("foo", 0), ("p $ q", 2), ("p . )", 4)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos
    assert info.value.expected


def test_evaluate_examples():
    assert evaluate(parse("V o D")) == ONE
    assert evaluate(parse("id")) == ONE
    assert evaluate(parse("t . t~")) == ONE
    assert evaluate(parse("p . Q")) == ZERO
    assert evaluate(parse("s @ t")) == TAU
    assert evaluate(parse("x0")) == TAU
    assert evaluate(parse("S")) == evaluate(parse("s * s"))


def test_evaluation_errors_name_the_subexpression():
    with pytest.raises(TraceDivergence) as info:
        evaluate(parse("q . s . Q * s o (t' . t . P)"), max_iter=3)
    assert info.value.subexpression == "q . s . Q * s o (t' . t . P)"
    with pytest.raises(DepthExceeded) as info:
        evaluate(parse("x70"))
    assert info.value.subexpression == "x70"


LEAVES = st.one_of(st.sampled_from([Generator(n) for n in ex.GENERATOR_NAMES]),
                   st.integers(0, 12).map(ThompsonX))
BINARY = [DotCompose, IntCompose, GoiCompose, StarTensor, BoxTensor]

exprs = st.recursive(
    LEAVES,
    lambda kids: st.one_of(
        kids.map(Dagger),
        st.tuples(st.sampled_from(BINARY), kids, kids).map(lambda t: t[0](t[1], t[2])),
    ),
    max_leaves=12,
)


@settings(max_examples=400, deadline=None)
@given(exprs)
def test_print_parse_round_trip(e):
    assert parse(to_text(e)) == e


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(["p", "q", "P", "Q", "s", "t", "t'"]), min_size=3, max_size=6))
def test_association_does_not_matter(word):
    gens = [Generator(w) for w in word]
    left = ex.chain(DotCompose, gens)
    right = gens[-1]
    for g in reversed(gens[:-1]):
        right = DotCompose(g, right)
    assert evaluate(left) == evaluate(right)


def test_window_evaluate_agrees_with_symbolic():
    from goialg.oracle import disagreements, truncate

    for text in ["t . (id * s)", "(id # V) o T' o (D # id)", "x1~ . x3 . x1", "(D o V) . (D o V)", "t @ (s * t)"]:
        e = parse(text)
        assert disagreements(ex.window_evaluate(e, 1 << 12), truncate(evaluate(e), 1 << 12)) == []


def test_bicyclic_letters():
    assert ex.bicyclic_letters(parse("D o V o D")) == ["D", "V", "D"]
    assert ex.bicyclic_letters(parse("D . V")) is None
