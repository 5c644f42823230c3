"""Shared ring constructions used across the test suite."""

from __future__ import annotations

import itertools

import pytest

from hilbemb.rings import Monomial, QuotientRing


def M(vars_or_ring, **exps) -> Monomial:
    """Monomial from keyword exponents, e.g. ``M(ring, x=2, y=1)``."""
    names = vars_or_ring.var_names if isinstance(vars_or_ring, QuotientRing) else tuple(vars_or_ring)
    unknown = set(exps) - set(names)
    if unknown:
        raise KeyError(f"unknown variables {unknown}")
    return Monomial(tuple(exps.get(v, 0) for v in names))


def poly_ring(names, cap) -> QuotientRing:
    return QuotientRing.create(tuple(names), (), cap)


def powers_ring(names, bounds, cap) -> QuotientRing:
    """k[names]/(x_i^{e_i}) with e_i = None meaning no bound."""
    names = tuple(names)
    gens = []
    for i, e in enumerate(bounds):
        if e is not None:
            exps = [0] * len(names)
            exps[i] = e
            gens.append(Monomial(exps))
    return QuotientRing.create(names, gens, cap)


@pytest.fixture
def tensor_ring() -> QuotientRing:
    """k[x,y,z] / ((x,y)^3 + (z^2)), cap 3."""
    v = ("x", "y", "z")
    gens = [M(v, x=3), M(v, x=2, y=1), M(v, x=1, y=2), M(v, y=3), M(v, z=2)]
    return QuotientRing.create(v, gens, cap=3, truncate_above=3)


@pytest.fixture
def wxyz_ring() -> QuotientRing:
    """k[w,x,y,z] / ((wxy, wxz, wyz, xyz) + all monomials of degree 4), cap 4."""
    v = ("w", "x", "y", "z")
    gens = [M(v, w=1, x=1, y=1), M(v, w=1, x=1, z=1), M(v, w=1, y=1, z=1), M(v, x=1, y=1, z=1)]
    return QuotientRing.create(v, gens, cap=4, truncate_above=3)


@pytest.fixture
def strongly_stable_ring() -> QuotientRing:
    """k[x1,x2,x3] / ((x1,x2)^2 (x1,x2,x3)^2), cap 5."""
    v = ("x1", "x2", "x3")
    sq12 = [M(v, x1=2), M(v, x1=1, x2=1), M(v, x2=2)]
    sq123 = [M(v, **{a: 1, b: 1}) if a != b else M(v, **{a: 2})
             for a, b in itertools.combinations_with_replacement(("x1", "x2", "x3"), 2)]
    gens = [a.mul(b) for a in sq12 for b in sq123]
    return QuotientRing.create(v, gens, cap=5)


@pytest.fixture
def groebner_flag_ring() -> QuotientRing:
    """k[x1..x6] / (x1(x1..x4) + (x2^2, x2 x3) + (x3^2) + x4(x4,x5) + x5(x5,x6)), cap 3."""
    v = tuple(f"x{i}" for i in range(1, 7))
    pairs = [("x1", "x1"), ("x1", "x2"), ("x1", "x3"), ("x1", "x4"),
             ("x2", "x2"), ("x2", "x3"), ("x3", "x3"),
             ("x4", "x4"), ("x4", "x5"), ("x5", "x5"), ("x5", "x6")]
    gens = []
    for a, b in pairs:
        gens.append(M(v, **{a: 2}) if a == b else M(v, **{a: 1, b: 1}))
    return QuotientRing.create(v, gens, cap=3)


@pytest.fixture
def kk3_ring() -> QuotientRing:
    """Kruskal-Katona ring k[x,y,z]/(x^2, y^2, z^2), cap 3."""
    return powers_ring(("x", "y", "z"), (2, 2, 2), cap=3)
