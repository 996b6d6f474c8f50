import pytest
from hypothesis import given, settings

from multiseg.core import IrreducibleParam, Line, Multisegment, Param, Point, Segment, contragredient
from multiseg.duality import dual
from multiseg.socle import (COSOCLE, LEFT, NOT_IN_IMAGE, RIGHT, SOCLE, Q, Q_primed, S, SocleQuery,
                            condition_C, is_irreducible_with_cuspidal, l_prime_invariant,
                            l_sup_formula, socle_cosocle, unlinked_product_irreducible)

from conftest import M, multisegments, points


@pytest.mark.parametrize("m, c, want", [
    (M((1, 2)), 0, M((0, 2))),
    (M((0, 1)), 0, M((0, 0), (0, 1))),
    (Multisegment(), 0, M((0, 0))),
    (M((1, 1), (1, 3)), 0, M((0, 3), (1, 1))),
])
def test_Q(m, c, want):
    assert Q(m, c) == want


@pytest.mark.parametrize("m, c, want", [
    (M((0, 2)), 0, M((1, 2))),
    (M((0, 0), (0, 1)), 0, M((0, 1))),
    (M((1, 2)), 0, NOT_IN_IMAGE),
])
def test_S(m, c, want):
    assert S(m, c) == want


def test_not_in_image_is_falsy():
    assert not NOT_IN_IMAGE
    assert S(Multisegment(), 0) is NOT_IN_IMAGE


@pytest.mark.parametrize("m, c, want", [
    (M((0, 0)), 1, M((0, 1))),
    (M((0, 1), (1, 2)), 0, M((0, 0), (0, 1), (1, 2))),
    (M((1, 1), (1, 1)), 2, M((1, 2), (1, 1))),
])
def test_Q_primed(m, c, want):
    assert Q_primed(m, c) == want


@pytest.mark.parametrize("pi, c, side, mode, want", [
    (IrreducibleParam(Param.LANGLANDS, M((1, 2))), 0, RIGHT, SOCLE, M((0, 2))),
    (IrreducibleParam(Param.ZELEVINSKY, M((0, 0))), 1, RIGHT, SOCLE, M((0, 1))),
] + [
    (IrreducibleParam(p, M((0, 1))), 5, side, mode, M((0, 1), (5, 5)))
    for p in Param for side in (LEFT, RIGHT) for mode in (SOCLE, COSOCLE)
])
def test_socle_cosocle(pi, c, side, mode, want):
    out = socle_cosocle(SocleQuery(pi, Point(c), side, mode))
    assert out == IrreducibleParam(pi.param, want)


def test_socle_query_validation():
    pi = IrreducibleParam(Param.LANGLANDS, M())
    with pytest.raises(ValueError):
        SocleQuery(pi, Point(0), "middle", SOCLE)
    with pytest.raises(ValueError):
        SocleQuery(pi, Point(0), RIGHT, "head")


@pytest.mark.parametrize("m, c, want", [
    (M((1, 1)), 0, False),
    (M((1, 1)), 5, True),
    (M((0, 1), (1, 2)), 0, True),
    (M((0, 0)), 2, True),
    (M((0, 0)), -1, False),
])
def test_irreducible(m, c, want):
    assert is_irreducible_with_cuspidal(m, c) is want


@pytest.mark.parametrize("m, c, want", [
    (M((0, 2)), 0, 1),
    (M((0, 1), (1, 2)), 0, 0),
    (Multisegment(), 3, 0),
])
def test_l_prime(m, c, want):
    assert l_prime_invariant(m, c) == want


def test_l_sup_scales_with_unit_degree():
    L = Line("L", 3)
    m = Multisegment([Segment(0, 2, L), Segment(0, 0, L)])
    assert l_sup_formula(m, Point(0, L), 3) == 6


@pytest.mark.parametrize("m, want", [
    (M((0, 1), (0, 1), (3, 4)), True),
    (M((0, 1), (1, 2)), False),
    (M((0, 3), (1, 2)), False),
])
def test_condition_C(m, want):
    assert condition_C(m) is want


@pytest.mark.parametrize("segs, want", [
    ([Segment(0, 1), Segment(0, 1)], True),
    ([Segment(0, 0), Segment(1, 1)], False),
    ([Segment(0, 3), Segment(1, 2)], True),
])
def test_unlinked_product(segs, want):
    assert unlinked_product_irreducible(segs) is want


@given(multisegments(max_size=5), points)
def test_Q_S_inverse(m, c):
    q = Q(m, c)
    assert S(q, c) == m
    assert l_prime_invariant(q, c) == l_prime_invariant(m, c) + 1
    s = S(m, c)
    if s is NOT_IN_IMAGE:
        assert l_prime_invariant(m, c) == 0
    else:
        assert Q(s, c) == m


@given(multisegments(max_size=5), points)
def test_Q_primed_is_mirrored_Q(m, c):
    assert Q_primed(m, c) == contragredient(Q(contragredient(m), -c))


@settings(max_examples=60)
@given(multisegments(max_size=4, lo=-1, hi=3, max_len=3), points)
def test_parametrizations_agree(m, c):
    """The Langlands socle rule is the Zelevinsky one conjugated by the involution."""
    assert Q(m, c) == dual(Q_primed(dual(m), c))
    z = socle_cosocle(SocleQuery(IrreducibleParam(Param.ZELEVINSKY, dual(m)), Point(c)))
    assert z.m == dual(Q(m, c))


@given(multisegments(max_size=4, halves=True, lines=(Line(), Line("L1"))), points)
def test_other_lines_untouched(m, c):
    c = Point(c, Line("L1"))
    q = Q(m, c)
    assert q.on_line(Line()) == m.on_line(Line())
    assert q.degree == m.degree + 1
