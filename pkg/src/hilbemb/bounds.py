"""Classical growth bounds: Macaulay representations, lex segments, minimal
growth in polynomial and truncated-power rings, and the check that every
attainable Hilbert series comes from the image of a lex-segment ideal.

The closed-form growth bound is cross-validated against the brute-force
oracle in the tests rather than trusted, which insulates against off-by-one
slips between the smallest-first listing used here and the classical
largest-first lex convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import PreconditionError
from .rings import HilbertSeries, Monomial, QuotientRing, grlex_key
from .orders import hilbert_poset


@dataclass(frozen=True)
class MacaulayRep:
    """Greedy binomial decomposition ``a = sum C(k_i, i)`` with strictly
    decreasing tops ``k_d > k_{d-1} > ...`` down from index d."""

    a: int
    d: int
    terms: tuple[tuple[int, int], ...]  # (k_i, i), i descending

    def value(self) -> int:
        return sum(comb(k, i) for k, i in self.terms)

    def shifted_value(self) -> int:
        """The classical growth bound: each C(k_i, i) becomes C(k_i+1, i+1)."""
        return sum(comb(k + 1, i + 1) for k, i in self.terms)


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    if a < 0 or d < 1:
        raise PreconditionError("need a >= 0 and d >= 1")
    terms: list[tuple[int, int]] = []
    rest, i = a, d
    while rest > 0 and i >= 1:
        k = i
        while comb(k + 1, i) <= rest:
            k += 1
        terms.append((k, i))
        rest -= comb(k, i)
        i -= 1
    rep = MacaulayRep(a, d, tuple(terms))
    assert rep.value() == a
    return rep


def _bounded_ring(bounds: Sequence[int | None], cap: int) -> QuotientRing:
    names = tuple(f"x{i + 1}" for i in range(len(bounds)))
    gens = []
    for i, e in enumerate(bounds):
        if e is not None:
            exps = [0] * len(bounds)
            exps[i] = e
            gens.append(Monomial(exps))
    return QuotientRing.create(names, gens, cap)


def lex_segment(ring: QuotientRing, d: int, r: int) -> tuple[Monomial, ...]:
    """First r monomials of the degree-d standard basis in grlex order."""
    basis = ring.standard_basis(d)
    if not 0 <= r <= len(basis):
        raise PreconditionError(f"segment size {r} out of range 0..{len(basis)}")
    return basis[:r]


def macaulay_min_growth(n: int, d: int, r: int) -> int:
    """Size of ``R_1 L`` for the r-element lex segment L in degree d of the
    polynomial ring in n variables; this is the minimum over all r-element
    monomial subsets (Macaulay's theorem, oracle-checked in the tests)."""
    ring = _bounded_ring([None] * n, cap=d + 1)
    return len(ring.growth(lex_segment(ring, d, r)))


def macaulay_growth_formula(n: int, d: int, r: int) -> int:
    """Closed form for macaulay_min_growth via the shifted binomial
    decomposition of the complement (quotient-side) dimension."""
    total_d, total_d1 = comb(n + d - 1, d), comb(n + d, d + 1)
    if not 0 <= r <= total_d:
        raise PreconditionError("segment size out of range")
    codim = total_d - r
    if codim == 0:
        return total_d1
    return total_d1 - macaulay_rep(codim, d).shifted_value()


def _validate_bounds(bounds: Sequence[int | None]) -> None:
    finite = [e for e in bounds if e is not None]
    tail_inf = bounds[len(finite):]
    if any(e is not None for e in tail_inf) or finite != sorted(finite):
        raise PreconditionError("exponent bounds must be ascending, with unbounded entries last")
    if any(e < 2 for e in finite):
        raise PreconditionError("exponent bounds must be >= 2")


def cl_min_growth(bounds: Sequence[int | None], d: int, r: int) -> int:
    """Minimal growth of an r-element monomial subset in degree d of
    ``k[x_1..x_n]/(x_i^{e_i})`` with ``2 <= e_1 <= ... <= e_n`` (None means
    unbounded): realized by the lex segment."""
    _validate_bounds(bounds)
    ring = _bounded_ring(bounds, cap=d + 1)
    return len(ring.growth(lex_segment(ring, d, r)))


def _lex_ideal_image_series(ring: QuotientRing) -> Iterator[HilbertSeries]:
    """Hilbert series of images in the ring of all lex-segment ideals of the
    ambient polynomial ring, enumerated over degreewise segment sizes.

    Uses that the growth of a grlex prefix of the polynomial ring is again a
    grlex prefix, so closure under the variables is a size condition."""
    ambient = _bounded_ring([None] * ring.nvars, cap=ring.cap)
    sizes, img, gsize = [], [], []
    for d in range(ring.cap + 1):
        basis = ambient.standard_basis(d)
        sizes.append(len(basis))
        counts = [0]
        for m in basis:
            counts.append(counts[-1] + (0 if ring.is_zero(m) else 1))
        img.append(counts)
        grown: set[Monomial] = set()
        gs = [0]
        for m in basis:
            grown |= ambient.growth([m])
            gs.append(len(grown))
        gsize.append(gs)

    def rec(d: int, prev_r: int, coeffs: list[int]) -> Iterator[HilbertSeries]:
        if d > ring.cap:
            yield HilbertSeries(coeffs)
            return
        lo = gsize[d - 1][prev_r] if d > 0 else 0
        for r in range(lo, sizes[d] + 1):
            yield from rec(d + 1, r, coeffs + [img[d][r]])

    yield from rec(0, 0, [])


def is_macaulay_lex(ring: QuotientRing, budget: int | None = 2_000_000) -> HilbertSeries | None:
    """None if every attainable Hilbert series of the ring is the series of
    the image of some lex-segment ideal of the ambient polynomial ring;
    otherwise the first attainable series that is not."""
    attainable = hilbert_poset(ring, budget=budget)
    lex_images = set(_lex_ideal_image_series(ring))
    for h in attainable:
        if h not in lex_images:
            return h
    return None
