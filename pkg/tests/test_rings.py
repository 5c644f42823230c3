"""Core monomial/ring layer: grlex order, standard bases, Hilbert series,
growth, the minimal-growth oracle and the ideal enumerator."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import M, poly_ring, powers_ring
from hilbemb.errors import PreconditionError
from hilbemb.rings import (HilbertSeries, Monomial, MonomialIdeal, QuotientRing,
                           cmp_grlex, enumerate_monomial_ideals, grlex_key,
                           series_realizable)

V3 = ("x1", "x2", "x3")


def test_cmp_grlex_variable_order():
    assert cmp_grlex(M(V3, x1=1), M(V3, x2=1)) == -1


def test_cmp_grlex_within_degree():
    # exponents (1,0,1) are lex-larger than (0,2,0), so x1*x3 comes first
    assert cmp_grlex(M(V3, x1=1, x3=1), M(V3, x2=2)) == -1
    ring = poly_ring(V3, 3)
    deg2 = ring.standard_basis(2)
    # multiples of x1 form a prefix of the degree-2 listing
    x1_multiples = [m for m in deg2 if m.exponents[0] > 0]
    assert list(deg2[:len(x1_multiples)]) == x1_multiples


def test_cmp_grlex_degree_dominates():
    for m in poly_ring(V3, 2).standard_basis(1):
        for m2 in poly_ring(V3, 2).standard_basis(2):
            assert cmp_grlex(m, m2) == -1


def test_cmp_grlex_mismatched_vars():
    with pytest.raises(ValueError):
        cmp_grlex(M(("x",), x=1), M(("x", "y"), x=1))


def test_standard_basis_principal_square():
    ring = QuotientRing.create(("x", "y"), [M(("x", "y"), x=2)], cap=2)
    assert ring.standard_basis(2) == (M(ring, x=1, y=1), M(ring, y=2))


def test_standard_basis_tensor_degree3(tensor_ring):
    expected = (M(tensor_ring, x=2, z=1), M(tensor_ring, x=1, y=1, z=1), M(tensor_ring, y=2, z=1))
    assert tensor_ring.standard_basis(3) == expected


def test_standard_basis_wxyz_degree4_empty(wxyz_ring):
    assert wxyz_ring.standard_basis(4) == ()


def test_standard_basis_degree_cap_error(tensor_ring):
    with pytest.raises(PreconditionError):
        tensor_ring.standard_basis(4)


def test_hilbert_series_tensor_principal_ideals(tensor_ring):
    ix = MonomialIdeal.from_generators(tensor_ring, [M(tensor_ring, x=1)])
    iz = MonomialIdeal.from_generators(tensor_ring, [M(tensor_ring, z=1)])
    assert ix.hilbert_series() == (0, 1, 3, 2)
    assert iz.hilbert_series() == (0, 1, 2, 3)


def test_hilbert_series_zero_ideal(tensor_ring):
    assert MonomialIdeal.zero(tensor_ring).hilbert_series() == (0, 0, 0, 0)


def test_hilbert_series_groebner_flag(groebner_flag_ring):
    r = groebner_flag_ring
    i5 = MonomialIdeal.from_generators(r, [M(r, x5=1)])
    i1 = MonomialIdeal.from_generators(r, [M(r, x1=1)])
    assert i5.hilbert_series() == (0, 1, 3, 0)
    assert i1.hilbert_series() == (0, 1, 2, 1)


def test_growth_wxyz_singletons(wxyz_ring):
    w2 = wxyz_ring.growth([M(wxyz_ring, w=2)])
    wx = wxyz_ring.growth([M(wxyz_ring, w=1, x=1)])
    assert len(w2) == 4
    assert len(wx) == 2


def test_growth_empty_and_full(tensor_ring):
    assert tensor_ring.growth([]) == frozenset()
    full = tensor_ring.growth(tensor_ring.standard_basis(2))
    assert full == frozenset(tensor_ring.standard_basis(3))


def test_growth_checked_rejects_cap_overflow(tensor_ring):
    with pytest.raises(PreconditionError):
        tensor_ring.growth_checked(tensor_ring.standard_basis(3), 3)


def test_min_growth_trivial_extremes(tensor_ring):
    assert tensor_ring.min_growth_oracle(2, 0) == 0
    b2, b3 = tensor_ring.standard_basis(2), tensor_ring.standard_basis(3)
    assert tensor_ring.min_growth_oracle(2, len(b2)) == len(b3)


def test_min_growth_kk2():
    ring = powers_ring(("x", "y"), (2, 2), cap=2)
    assert ring.min_growth_oracle(1, 1) == 1  # {x} grows to {xy}


def test_min_growth_wxyz_degree2(wxyz_ring):
    assert wxyz_ring.min_growth_oracle(2, 1) == 2


def test_min_growth_monotone_in_r(wxyz_ring):
    vals = [wxyz_ring.min_growth_oracle(2, r) for r in range(11)]
    assert vals == sorted(vals)


def test_growth_is_variable_order_free():
    ring = powers_ring(("x", "y", "z"), (2, 3, None), cap=3)
    perm_names = ("z", "x", "y")
    perm = [ring.var_names.index(v) for v in perm_names]
    gens = [Monomial(tuple(g.exponents[i] for i in perm)) for g in ring.generators]
    ring2 = QuotientRing.create(perm_names, gens, cap=3)
    for d in range(3):
        for r in range(len(ring.standard_basis(d)) + 1):
            assert ring.min_growth_oracle(d, r) == ring2.min_growth_oracle(d, r)


def test_enumerate_kx_mod_x2():
    ring = QuotientRing.create(("x",), [M(("x",), x=2)], cap=2)
    ideals = list(enumerate_monomial_ideals(ring))
    series = sorted(i.hilbert_series() for i in ideals)
    assert series == [(0, 0, 0), (0, 1, 0), (1, 1, 0)]


def test_enumerate_with_unreachable_target(strongly_stable_ring):
    r = strongly_stable_ring
    four = QuotientRing.create(r.var_names, r.generators, cap=4)
    assert not series_realizable(four, (0, 0, 3, 6, 0))


def test_enumerate_full_target_is_unit(tensor_ring):
    ideals = list(enumerate_monomial_ideals(tensor_ring, target=tensor_ring.ring_series()))
    assert ideals == [MonomialIdeal.unit(tensor_ring)]


def test_betti1_principal():
    ring = poly_ring(("x", "y"), 3)
    ideal = MonomialIdeal.from_generators(ring, [M(ring, x=1)])
    assert [ideal.betti1(j) for j in range(4)] == [0, 1, 0, 0]


def test_betti1_gotzmann_image():
    ring = powers_ring(("x", "y"), (3, None), cap=4)
    ideal = MonomialIdeal.from_generators(ring, [M(ring, x=1), M(ring, y=3)])
    assert [ideal.betti1(j) for j in range(5)] == [0, 1, 0, 1, 0]


def test_betti1_zero_ideal(tensor_ring):
    zero = MonomialIdeal.zero(tensor_ring)
    assert all(zero.betti1(j) == 0 for j in range(4))


def test_betti1_counts_minimal_generators(strongly_stable_ring):
    r = strongly_stable_ring
    ideal = MonomialIdeal.from_generators(r, [M(r, x1=2), M(r, x1=1, x2=1), M(r, x2=2)])
    total = sum(ideal.betti1(j) for j in range(r.cap + 1))
    assert total == len(ideal.minimal_generators()) == 3


def test_monomial_ideal_closure_validation(tensor_ring):
    bad = {2: [M(tensor_ring, x=2)]}  # missing its degree-3 multiples
    with pytest.raises(ValueError):
        MonomialIdeal.from_pieces(tensor_ring, bad)


def test_hilbert_series_monotone_under_inclusion(tensor_ring):
    ideals = list(enumerate_monomial_ideals(tensor_ring))
    small = [i for i in ideals if sum(i.hilbert_series()) <= 3]
    for a in small:
        for b in small:
            if a <= b:
                assert b.hilbert_series().dominates(a.hilbert_series())


def test_antichain_reduction_drops_redundant():
    v = ("x", "y")
    ring = QuotientRing.create(v, [M(v, x=2), M(v, x=3), M(v, x=2)], cap=3)
    assert ring.generators == (M(v, x=2),)
    assert ring.dropped_generators == (M(v, x=3),)


def test_degree_one_generator_rejected():
    with pytest.raises(ValueError):
        QuotientRing.create(("x", "y"), [M(("x", "y"), x=1)], cap=2)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_grlex_key_total_order(a, b, c):
    m1, m2 = Monomial((a, b, c)), Monomial((c, a, b))
    if m1 == m2:
        assert grlex_key(m1) == grlex_key(m2)
    else:
        assert grlex_key(m1) != grlex_key(m2)


@settings(deadline=None, max_examples=25)
@given(st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=4))
def test_growth_subset_monotone(exp_pairs):
    ring = poly_ring(("x", "y"), 6)
    ms = [Monomial(e) for e in exp_pairs]
    by_degree = {}
    for m in ms:
        by_degree.setdefault(m.degree, []).append(m)
    for d, group in by_degree.items():
        whole = ring.growth(group)
        for m in group:
            assert ring.growth([m]) <= whole


def test_hilbert_series_lattice_helpers():
    a, b = HilbertSeries((0, 1, 3, 2)), HilbertSeries((0, 1, 2, 3))
    assert a.join(b) == (0, 1, 3, 3)
    assert a.meet(b) == (0, 1, 2, 2)
    assert not a.dominates(b) and not b.dominates(a)
