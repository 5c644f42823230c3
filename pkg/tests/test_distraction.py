"""Distraction matrices, leading-weight spaces, stabilization (plain and
truncated), polarization, and the three order-transport pipelines."""

import random

import pytest
from fractions import Fraction

from conftest import M, poly_ring, powers_ring
from hilbemb.distraction import (DistractionMatrix, FieldConfig, Polarization,
                                 apply_distraction, clements_lindstrom_extend,
                                 distraction_embedding, distraction_ideal,
                                 initial_space, polarization_embedding,
                                 polarize, stabilize, stabilize_truncated)
from hilbemb.errors import PreconditionError, VerificationError
from hilbemb.extension import ExtensionRing, extended_order, ideal_z_stable
from hilbemb.linalg import QQ, PrimeField, smallest_prime_with_unity_root
from hilbemb.orders import (GradedOrder, find_embedding_order,
                            is_embedding_order)
from hilbemb.rings import Monomial, MonomialIdeal, QuotientRing


def ext_over(ring, t, cap=None):
    return ExtensionRing.create(GradedOrder.grlex(ring), t, cap)


# --- apply_distraction ----------------------------------------------------------

def test_identity_matrix_fixes_monomials():
    L = DistractionMatrix.identity(2)
    m = Monomial((2, 1))
    assert apply_distraction(L, m) == {m: Fraction(1)}


def test_z_row_first_column():
    # two variables (x, z); z-row column 1 holds x + z
    L = DistractionMatrix(2, {(1, 1): {0: 1, 1: 1}})
    out = apply_distraction(L, Monomial((1, 1)))  # xz
    assert out == {Monomial((2, 0)): Fraction(1), Monomial((1, 1)): Fraction(1)}


def test_polarization_matrix_column():
    # variables (y, z); y-row column 2 holds y + z
    L = DistractionMatrix(2, {(0, 2): {0: 1, 1: 1}})
    out = apply_distraction(L, Monomial((2, 0)))  # y^2 -> y(y+z)
    assert out == {Monomial((2, 0)): Fraction(1), Monomial((1, 1)): Fraction(1)}
    out3 = apply_distraction(L, Monomial((3, 0)))  # y^3 -> y(y+z)y
    assert out3 == {Monomial((3, 0)): Fraction(1), Monomial((2, 1)): Fraction(1)}


def test_spanning_check_rejects_degenerate():
    L = DistractionMatrix(2, {(0, 1): {1: 1}})  # first row's column 1 is x2
    with pytest.raises(PreconditionError):
        L.check_spanning(QQ, up_to_col=2)


# --- distraction_ideal ------------------------------------------------------------

def test_distraction_ideal_identity_is_monomial():
    ring = QuotientRing.create(("x", "y"), [M(("x", "y"), x=2)], cap=3)
    pieces = {d: [m for m in __import__("hilbemb.distraction", fromlist=["ambient_basis"]).ambient_basis(2, d)
                  if ring.is_zero(m)] for d in range(4)}
    spaces = distraction_ideal(DistractionMatrix.identity(2), pieces, cap=3)
    for d in range(4):
        assert spaces[d].monomial_rows() == tuple(sorted(pieces[d], key=lambda m: (m.degree, tuple(-e for e in m.exponents))))


def test_distraction_ideal_preserves_dimension():
    L = DistractionMatrix(2, {(1, 1): {0: 1, 1: 1}})
    ideal_pieces = {2: [Monomial((1, 1))], 3: [Monomial((2, 1)), Monomial((1, 2))]}
    spaces = distraction_ideal(L, ideal_pieces, cap=3)
    assert spaces[2].dim == 1 and spaces[3].dim == 2


def test_distraction_ideal_closure_failure_is_loud():
    L = DistractionMatrix(2, {(1, 1): {0: 1, 1: 1}})
    # degree-3 piece missing a multiple: not an ideal
    bad = {2: [Monomial((1, 1))], 3: [Monomial((2, 1))]}
    with pytest.raises(VerificationError):
        distraction_ideal(L, bad, cap=3)


# --- initial_space -----------------------------------------------------------------

def test_initial_space_single_form():
    polys = [{Monomial((2, 0)): 1, Monomial((1, 1)): 1}]  # x^2 + xz
    assert initial_space([1, 0], polys, 2, 2) == (Monomial((2, 0)),)


def test_initial_space_monomials_fixed():
    polys = [{Monomial((2, 0)): 1}, {Monomial((0, 2)): 1}]
    assert set(initial_space([1, 0], polys, 2, 2)) == {Monomial((2, 0)), Monomial((0, 2))}


def test_initial_space_two_strata():
    polys = [{Monomial((2, 0)): 1, Monomial((1, 1)): 1},
             {Monomial((2, 0)): 1, Monomial((1, 1)): -1}]
    assert set(initial_space([1, 0], polys, 2, 2)) == {Monomial((2, 0)), Monomial((1, 1))}


# --- stabilize ----------------------------------------------------------------------

def test_stabilize_fixes_stable_ideal():
    ext = ext_over(poly_ring(("x",), 4), None)
    ideal = MonomialIdeal.from_generators(ext.ring, [M(ext.ring, x=2)])
    assert ideal_z_stable(ext, ideal) is None
    assert stabilize(ext, ideal) == ideal


def test_stabilize_xz_example():
    ext = ext_over(poly_ring(("x",), 4), None)
    s = ext.ring
    ideal = MonomialIdeal.from_generators(s, [M(s, x=1, z=1)])
    out = stabilize(ext, ideal)
    assert out == MonomialIdeal.from_generators(s, [M(s, x=2)])
    assert out.hilbert_series() == ideal.hilbert_series()
    # oracle: the only z-stable monomial ideal with this series
    from hilbemb.rings import enumerate_monomial_ideals
    stable_same = [i for i in enumerate_monomial_ideals(s, target=ideal.hilbert_series())
                   if ideal_z_stable(ext, i) is None]
    assert stable_same == [out]


def test_stabilize_random_property():
    ext = ext_over(poly_ring(("x1", "x2"), 4), None)
    s = ext.ring
    rng = random.Random(11)
    pool = [m for d in range(1, 5) for m in s.standard_basis(d)]
    for _ in range(15):
        ideal = MonomialIdeal.from_generators(s, rng.sample(pool, rng.randint(1, 3)))
        out = stabilize(ext, ideal)
        assert ideal_z_stable(ext, out) is None
        assert out.hilbert_series() == ideal.hilbert_series()
        assert stabilize(ext, out) == out  # idempotent


def test_stabilize_rejects_truncated_extension():
    ext = ext_over(powers_ring(("x",), (2,), 3), 2)
    with pytest.raises(PreconditionError):
        stabilize(ext, MonomialIdeal.zero(ext.ring))


# --- stabilize_truncated --------------------------------------------------------------

def test_unity_root_field_selection():
    assert smallest_prime_with_unity_root(2) == 3
    assert smallest_prime_with_unity_root(3) == 7
    cfg = FieldConfig.for_unity_root(2)
    assert (cfg.p, cfg.zeta) == (3, 2)
    cfg3 = FieldConfig.for_unity_root(3)
    assert cfg3.p == 7 and pow(cfg3.zeta, 3, 7) == 1 and cfg3.zeta != 1


def test_stabilize_truncated_t2_hand_case():
    ext = ext_over(powers_ring(("x",), (2,), 3), 2)
    s = ext.ring
    ideal = MonomialIdeal.from_generators(s, [M(s, z=1)])
    out = stabilize_truncated(ext, ideal)
    assert out == MonomialIdeal.from_generators(s, [M(s, x=1)])
    assert out.hilbert_series() == ideal.hilbert_series()


def test_stabilize_truncated_fixes_stable():
    ext = ext_over(powers_ring(("x",), (2,), 3), 2)
    s = ext.ring
    ideal = MonomialIdeal.from_generators(s, [M(s, x=1, z=1)])
    assert ideal_z_stable(ext, ideal) is None
    assert stabilize_truncated(ext, ideal) == ideal


def test_stabilize_truncated_requires_pure_powers():
    ext = ext_over(powers_ring(("x",), (3,), 3), 2)  # x^2 not a relation
    with pytest.raises(PreconditionError):
        stabilize_truncated(ext, MonomialIdeal.zero(ext.ring))


def test_stabilize_truncated_random_property():
    ext = ext_over(powers_ring(("x1", "x2"), (3, 3), 4), 3)
    s = ext.ring
    rng = random.Random(13)
    pool = [m for d in range(1, 5) for m in s.standard_basis(d)]
    for _ in range(10):
        ideal = MonomialIdeal.from_generators(s, rng.sample(pool, rng.randint(1, 3)))
        out = stabilize_truncated(ext, ideal)
        assert ideal_z_stable(ext, out) is None
        assert out.hilbert_series() == ideal.hilbert_series()


# --- polarize ---------------------------------------------------------------------------

def test_polarize_square():
    pol = polarize(("y",), [Monomial((2,))], "y", 2, cap=4)
    assert pol.bgens == (Monomial((1, 1)),)


def test_polarize_below_threshold_is_extension():
    gens = [M(("x", "y"), x=2)]
    pol = polarize(("x", "y"), gens, "y", 2, cap=4)
    assert pol.bgens == (Monomial((2, 0, 0)),)


def test_polarize_xy3():
    pol = polarize(("x", "y"), [M(("x", "y"), x=1, y=3)], "y", 2, cap=4)
    assert pol.bgens == (Monomial((1, 2, 1)),)


# --- polarization_embedding --------------------------------------------------------------

def test_polarization_embedding_y_square():
    ring = QuotientRing.create(("y",), [Monomial((2,))], cap=4)
    order, pol = polarization_embedding(GradedOrder.grlex(ring), "y", 2)
    s = order.ring
    assert s.generators == (Monomial((1, 1)),)  # yz
    assert order.per_degree[1] == (M(s, y=1), M(s, z=1))
    assert is_embedding_order(order) is None


def test_polarization_embedding_trivial_threshold():
    ring = QuotientRing.create(("x", "y"), [M(("x", "y"), x=2)], cap=4)
    order, pol = polarization_embedding(GradedOrder.grlex(ring), "y", 2)
    # nothing to polarize: the target is just the extension ring
    assert order.ring.generators == (Monomial((2, 0, 0)),)
    assert is_embedding_order(order) is None


def test_polarization_embedding_full_square():
    v = ("x", "y")
    gens = [M(v, x=2), M(v, x=1, y=1), M(v, y=2)]
    ring = QuotientRing.create(v, gens, cap=4)
    order, pol = polarization_embedding(GradedOrder.grlex(ring), "y", 2)
    assert is_embedding_order(order) is None
    # series identity against the base ring
    hA = ring.ring_series()
    hB = order.ring.ring_series()
    assert all(hA[e] == hB[e] - (hB[e - 1] if e else 0) for e in range(5))


def test_polarization_embedding_xy3():
    ring = QuotientRing.create(("x", "y"), [M(("x", "y"), x=1, y=3)], cap=4)
    base = find_embedding_order(ring).order
    assert base is not None
    order, pol = polarization_embedding(base, "y", 2)
    assert order.ring.generators == (Monomial((1, 2, 1)),)
    assert is_embedding_order(order) is None


# --- distraction_embedding ------------------------------------------------------------------

def test_distraction_embedding_identity():
    ring = QuotientRing.create(("x1", "x2"), [M(("x1", "x2"), x1=2)], cap=4)
    transfer = distraction_embedding(GradedOrder.grlex(ring), DistractionMatrix.identity(2))
    assert transfer.per_degree == GradedOrder.grlex(ring).per_degree
    for d in range(5):
        assert transfer.ring.ideal_spaces[d].monomial_rows() is not None


def test_distraction_embedding_x1_squared():
    ring = QuotientRing.create(("x1", "x2"), [M(("x1", "x2"), x1=2)], cap=4)
    L = DistractionMatrix(2, {(0, 2): {0: 1, 1: 1}})  # column 2 of the first row: x1 + x2
    transfer = distraction_embedding(GradedOrder.grlex(ring), L)
    # the distracted generator is x1(x1 + x2), no longer monomial in degree 2
    assert transfer.ring.ideal_spaces[2].monomial_rows() is None
    spaces = transfer.embedded_spaces((0, 1, 1, 1, 1))
    assert [sp.dim - transfer.ring.ideal_spaces[d].dim for d, sp in enumerate(spaces)] == [0, 1, 1, 1, 1]


def test_distraction_embedding_x1x2():
    ring = QuotientRing.create(("x1", "x2"), [M(("x1", "x2"), x1=1, x2=1)], cap=4)
    L = DistractionMatrix(2, {(0, 1): {0: 1, 1: 1}})  # column 1: x1 + x2
    transfer = distraction_embedding(GradedOrder.grlex(ring), L)
    assert transfer.ring.ideal_spaces[2].monomial_rows() is None


def test_distraction_embedding_rejects_other_rows():
    ring = QuotientRing.create(("x1", "x2"), [M(("x1", "x2"), x1=2)], cap=3)
    L = DistractionMatrix(2, {(1, 1): {0: 1, 1: 1}})
    with pytest.raises(PreconditionError):
        distraction_embedding(GradedOrder.grlex(ring), L)


# --- clements_lindstrom_extend ------------------------------------------------------------------

def test_cl_extend_tiny():
    ring = powers_ring(("x",), (2,), cap=2)
    result = clements_lindstrom_extend(GradedOrder.grlex(ring), 2)
    s = result.ext.ring
    assert result.order.per_degree[1] == (M(s, x=1), M(s, z=1))
    assert result.order.per_degree[2] == (M(s, x=1, z=1),)


def test_cl_extend_recovers_kruskal_katona():
    from hilbemb.bounds import cl_min_growth
    ring = powers_ring(("x", "y"), (2, 2), cap=3)
    result = clements_lindstrom_extend(GradedOrder.grlex(ring), 2, sample_ideals=5)
    order = result.order
    s = result.ext.ring
    assert sorted(s.generators, key=lambda g: g.exponents) == sorted(
        [Monomial((2, 0, 0)), Monomial((0, 2, 0)), Monomial((0, 0, 2))],
        key=lambda g: g.exponents)
    for d in range(s.cap):
        for r in range(1, len(order.per_degree[d]) + 1):
            grown = s.growth(order.prefix(d, r))
            assert len(grown) == cl_min_growth((2, 2, 2), d, r)


def test_cl_extend_t_infinity_is_extension_order():
    ring = powers_ring(("x", "y"), (2, 2), cap=3)
    base = GradedOrder.grlex(ring)
    result = clements_lindstrom_extend(base, None, sample_ideals=3)
    assert result.order.per_degree == extended_order(ExtensionRing.create(base, None)).per_degree


def test_cl_extend_rejects_missing_powers():
    ring = powers_ring(("x", "y"), (2, 3), cap=3)
    with pytest.raises(PreconditionError):
        clements_lindstrom_extend(GradedOrder.grlex(ring), 2)
