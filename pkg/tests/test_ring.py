import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from multiseg.core import Line, Multisegment, Param, Point, Segment
from multiseg.ring import (GrothVector, StandardProduct, cons_hypothesis, jac_filter, jacquet,
                           jacquet_vector, l_sup_standard, lemme2_jac, margin_matrices, multiplicity,
                           ordered_multiplicity, virtual_class)

from conftest import M

S = Segment
SP = StandardProduct.of
Z = Param.ZELEVINSKY


def brute_margins(beta, gamma):
    cells = [range(min(b, g) + 1) for b in beta for g in gamma]
    out = []
    for flat in itertools.product(*cells):
        rows = [flat[i * len(gamma):(i + 1) * len(gamma)] for i in range(len(beta))]
        if [sum(r) for r in rows] == list(beta) and [sum(c) for c in zip(*rows)] == list(gamma):
            out.append(tuple(tuple(r) for r in rows))
    return sorted(out)


@pytest.mark.parametrize("beta, gamma, count", [
    ((1, 1), (1, 1), 2), ((2,), (1, 1), 1), ((1, 1, 1), (1, 1, 1), 6), ((), (), 1), ((0,), (0, 0), 1),
])
def test_margin_examples(beta, gamma, count):
    assert len(margin_matrices(beta, gamma)) == count


def test_margin_identity_and_antidiagonal():
    assert sorted(margin_matrices((1, 1), (1, 1))) == [((0, 1), (1, 0)), ((1, 0), (0, 1))]


@settings(max_examples=60)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=3),
       st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_margins_match_brute_force(beta, gamma):
    if sum(beta) != sum(gamma):
        with pytest.raises(ValueError):
            margin_matrices(beta, gamma)
        return
    assert sorted(margin_matrices(beta, gamma)) == brute_margins(beta, gamma)


@pytest.mark.parametrize("k", range(1, 6))
def test_unit_margins_are_permutations(k):
    assert len(margin_matrices((1,) * k, (1,) * k)) == factorial(k)


def test_margins_reject_negative():
    with pytest.raises(ValueError):
        margin_matrices((-1, 2), (1,))


def test_jacquet_segment_langlands_top_first():
    v = jacquet(SP([S(0, 1)]), (1, 1))
    assert v == GrothVector.basis(SP([S(1, 1)]), SP([S(0, 0)]))


def test_jacquet_segment_zelevinsky_bottom_first():
    v = jacquet(SP([S(0, 1)], Z), (1, 1))
    assert v == GrothVector.basis(SP([S(0, 0)], Z), SP([S(1, 1)], Z))


def test_jacquet_two_cuspidals():
    v = jacquet(SP([S(0, 0), S(1, 1)]), (1, 1))
    a, b = SP([S(0, 0)]), SP([S(1, 1)])
    assert v == GrothVector.basis(a, b) + GrothVector.basis(b, a)


def test_jacquet_trivial_composition():
    std = SP([S(0, 2), S(1, 1)])
    assert jacquet(std, (4,)) == GrothVector.basis(std)


def test_jacquet_bad_composition():
    with pytest.raises(ValueError):
        jacquet(SP([S(0, 1)]), (1, 2))


def test_jacquet_respects_unit_degree():
    L = Line("L", 2)
    std = SP([S(0, 1, L)])
    assert not jacquet(std, (1, 3))
    assert jacquet(std, (2, 2)) == GrothVector.basis(SP([S(1, 1, L)]), SP([S(0, 0, L)]))


def test_filter_examples():
    a, b = SP([S(0, 0)]), SP([S(1, 1)])
    v = GrothVector.basis(a, b) + GrothVector.basis(b, a)
    assert jac_filter(v, [Point(0)]) == GrothVector.basis(b, a)
    assert jac_filter(v, [Point(9)]) == GrothVector()
    assert jac_filter(v, [0], side="left") == GrothVector.basis(a, b)


def test_filter_of_two_segment_product():
    v = jac_filter(jacquet(SP([S(0, 1), S(2, 3)]), (3, 1)), [0])
    assert v == GrothVector.basis(SP([S(1, 1), S(2, 3)]), SP([S(0, 0)]))


def test_filter_needs_two_slots():
    with pytest.raises(ValueError):
        jac_filter(GrothVector.basis(SP([S(0, 0)])), [0])


@pytest.mark.parametrize("segs, target, gamma, want", [
    ([S(0, 0), S(1, 1), S(0, 0)], [M((0, 0)), M((1, 1)), M((0, 0))], (1, 1, 1), 2),
    ([S(0, 0), S(1, 1)], [M((0, 0)), M((1, 1))], (1, 1), 1),
    ([S(0, 1)], [M((0, 0)), M((1, 1))], (1, 1), 0),
    ([S(0, 0)] * 3, [M((0, 0))] * 3, (1, 1, 1), 6),
])
def test_multiplicity(segs, target, gamma, want):
    assert multiplicity(SP(segs), target, gamma) == want


@pytest.mark.parametrize("d, dp, zero", [
    (S(0, 1), S(1, 2), True),
    (S(0, 1), S(2, 3), False),
    (S(0, 2), S(1, 3), True),
    (S(-1, 0), S(1, 3), False),
])
def test_lemme2(d, dp, zero):
    assert (not lemme2_jac(d, dp)) is zero


def test_lemme2_nonzero_terms():
    v = lemme2_jac(S(0, 1), S(2, 3))
    nu0 = SP([S(0, 0)])
    want = GrothVector.basis(SP([S(1, 1), S(2, 3)]), nu0) - GrothVector.basis(SP([S(1, 3)]), nu0)
    assert v == want


def test_lemme2_requires_precedence():
    with pytest.raises(ValueError):
        lemme2_jac(S(1, 2), S(0, 1))


@pytest.mark.parametrize("segs, support, want", [
    ([S(0, 2)], [0], 1),
    ([S(0, 2)], [9], 0),
    ([S(0, 0), S(0, 0)], [0], 2),
    ([S(0, 1), S(0, 0)], [0], 2),
    ([S(0, 1), S(0, 0)], [0, 1], 3),
])
def test_l_sup(segs, support, want):
    assert l_sup_standard(SP(segs), support) == want


def test_virtual_class_expansion():
    v = virtual_class([], [(S(0, 0), S(1, 1))])
    want = GrothVector.basis(SP([S(0, 0), S(1, 1)])) - GrothVector.basis(SP([S(0, 1)]))
    assert v == want
    # l_sup of <0,1>^t (the two-point Langlands quotient) toward nu^0 is zero
    assert l_sup_standard(v, [0]) == 0
    assert l_sup_standard(v, [1]) == 1


def test_ordered_multiplicity_and_cons():
    f = [S(0, 0), S(1, 1), S(0, 0)]
    assert ordered_multiplicity(f) == 2
    assert not cons_hypothesis(f)
    g = [S(0, 0), S(3, 3)]
    assert cons_hypothesis(g) and ordered_multiplicity(g) == 1


def test_groth_vector_algebra():
    a = GrothVector.basis(SP([S(0, 0)]))
    b = GrothVector.basis(SP([S(1, 1)]))
    assert a - a == GrothVector() and not (a - a)
    assert 2 * a + b - a == a + b
    assert a <= a + b and not (a + b <= a)
    assert -a + a == GrothVector()
    assert (a + b).to_json() == [[1, ["[1..1]"]], [1, ["[0..0]"]]]
    assert str(GrothVector()) == "0"


def test_jacquet_vector_linear():
    a, b = SP([S(0, 1)]), SP([S(0, 0), S(1, 1)])
    v = GrothVector.basis(b) - GrothVector.basis(a)
    assert jacquet_vector(v, (1, 1)) == jacquet(b, (1, 1)) - jacquet(a, (1, 1))


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-1, 2), st.integers(0, 2)), min_size=1, max_size=3),
       st.sampled_from(list(Param)))
def test_jacquet_conserves_support(pairs, tag):
    std = SP([S(b, b + n) for b, n in pairs], tag)
    d = std.degree
    for k in range(d + 1):
        for key, coeff in jacquet(std, (d - k, k)).terms.items():
            assert coeff > 0
            assert key[0].supp() + key[1].supp() == std.supp()
            assert key[1].degree == k
