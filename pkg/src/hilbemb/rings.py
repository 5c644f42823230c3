"""Monomials, quotient rings by monomial ideals, Hilbert series, and the
brute-force growth machinery that everything else is validated against.

Conventions
-----------
* A ring is ``k[x_1..x_n]/a`` where ``a`` is generated by monomials of
  degree >= 2, optionally together with every monomial of degree
  ``> truncate_above``.  All computations are truncated at ``cap``.
* The graded order ``cmp_grlex`` is smallest-first: ``m < m'`` iff
  ``deg m < deg m'``, or the degrees agree and the exponent vector of ``m``
  is lexicographically *larger* (reading ``x_1`` first).  In each degree the
  multiples of ``x_1`` therefore form a prefix of the listing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import BudgetExceeded, PreconditionError


class Monomial:
    """A monomial as a dense exponent vector with cached total degree."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Sequence[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial({self.exponents})"

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int) -> "Monomial":
        exps = list(self.exponents)
        exps[i] += 1
        return Monomial(exps)

    def div(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def is_one(self) -> bool:
        return self.degree == 0


def grlex_key(m: Monomial) -> tuple:
    """Sort key realizing the graded order; ascending sort gives the listing."""
    return (m.degree, tuple(-e for e in m.exponents))


def cmp_grlex(m: Monomial, m2: Monomial) -> int:
    """Compare two monomials over the same variable list: -1, 0 or 1."""
    if len(m.exponents) != len(m2.exponents):
        raise ValueError("monomials over different variable lists")
    a, b = grlex_key(m), grlex_key(m2)
    return -1 if a < b else (0 if a == b else 1)


def _degree_monomials(n: int, d: int) -> Iterator[Monomial]:
    """All degree-d monomials in n variables, unsorted."""
    if n == 0:
        if d == 0:
            yield Monomial(())
        return
    for cuts in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(d + n - 2 - prev)
        yield Monomial(exps)


def _reduce_to_antichain(gens: Iterable[Monomial]) -> tuple[tuple[Monomial, ...], tuple[Monomial, ...]]:
    """Drop duplicate or divisible generators; returns (kept, dropped)."""
    ordered = sorted(set(gens), key=grlex_key)
    kept: list[Monomial] = []
    dropped: list[Monomial] = []
    for g in ordered:
        if any(h.divides(g) for h in kept):
            dropped.append(g)
        else:
            kept.append(g)
    return tuple(kept), tuple(dropped)


@dataclass(frozen=True)
class QuotientRing:
    """``k[vars]/a`` with ``a`` monomial, truncated at ``cap``.

    ``truncate_above = d0`` means every monomial of degree > d0 lies in the
    defining ideal as well; with ``d0 <= cap`` all results are exact rather
    than "exact up to cap".
    """

    var_names: tuple[str, ...]
    generators: tuple[Monomial, ...]
    cap: int
    truncate_above: int | None = None
    dropped_generators: tuple[Monomial, ...] = ()
    _basis_cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)
    _oracle_cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.cap < 0:
            raise ValueError("cap must be non-negative")
        n = len(self.var_names)
        if len(set(self.var_names)) != n:
            raise ValueError("duplicate variable names")
        for g in self.generators:
            if len(g.exponents) != n:
                raise ValueError("generator over wrong variable list")
            if g.degree <= 1:
                raise ValueError(f"defining ideal has a generator of degree {g.degree}; degree >= 2 required")
        if self.truncate_above is not None and self.truncate_above < -1:
            raise ValueError("truncate_above must be >= -1")

    @classmethod
    def create(cls, var_names: Sequence[str], generators: Iterable[Monomial],
               cap: int, truncate_above: int | None = None) -> "QuotientRing":
        kept, dropped = _reduce_to_antichain(generators)
        if truncate_above is not None:
            kept = tuple(g for g in kept if g.degree <= truncate_above)
        return cls(tuple(var_names), kept, cap, truncate_above, dropped)

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def is_zero(self, m: Monomial) -> bool:
        """True if the monomial maps to zero in the quotient."""
        if self.truncate_above is not None and m.degree > self.truncate_above:
            return True
        return any(g.divides(m) for g in self.generators)

    def standard_basis(self, d: int) -> tuple[Monomial, ...]:
        """Degree-d monomials outside the defining ideal, in grlex order."""
        if d > self.cap:
            raise PreconditionError(f"degree {d} exceeds cap {self.cap}")
        if d < 0:
            return ()
        cached = self._basis_cache.get(d)
        if cached is None:
            cached = tuple(sorted((m for m in _degree_monomials(self.nvars, d)
                                   if not self.is_zero(m)), key=grlex_key))
            self._basis_cache[d] = cached
        return cached

    def ring_series(self) -> "HilbertSeries":
        return HilbertSeries(len(self.standard_basis(d)) for d in range(self.cap + 1))

    @property
    def is_exact_at_cap(self) -> bool:
        """True when degrees beyond cap are all zero, so truncation loses nothing."""
        if self.truncate_above is not None and self.truncate_above <= self.cap:
            return True
        return len(self.standard_basis(self.cap)) == 0

    def growth(self, monomials: Iterable[Monomial], step: int = 1) -> frozenset[Monomial]:
        """Nonzero products of the given degree-d standard monomials with
        the degree-``step`` part of the ring (set of standard monomials in
        degree ``d + step``)."""
        if step == 1:
            out = set()
            for m in monomials:
                for i in range(self.nvars):
                    p = m.times_var(i)
                    if not self.is_zero(p):
                        out.add(p)
            return frozenset(out)
        out = set()
        factors = [m for m in _degree_monomials(self.nvars, step) if not self.is_zero(m)]
        for m in monomials:
            for u in factors:
                p = m.mul(u)
                if not self.is_zero(p):
                    out.add(p)
        return frozenset(out)

    def growth_checked(self, monomials: Iterable[Monomial], d: int, step: int = 1) -> frozenset[Monomial]:
        """Like :meth:`growth` but enforces the degree-cap precondition."""
        ms = list(monomials)
        basis = set(self.standard_basis(d))
        for m in ms:
            if m not in basis:
                raise PreconditionError(f"{m} is not a degree-{d} standard monomial")
        if d + step > self.cap:
            raise PreconditionError(f"growth from degree {d} exceeds cap {self.cap}")
        return self.growth(ms, step)

    def annihilator_degree(self, d: int) -> tuple[Monomial, ...]:
        """Degree-d standard monomials killed by every variable (the degree-d
        part of the annihilator of the maximal ideal)."""
        return tuple(m for m in self.standard_basis(d) if not self.growth([m]))

    def min_growth_oracle(self, d: int, r: int, step: int = 1) -> int:
        """Minimum of ``|growth(W)|`` over r-element subsets W of the degree-d
        standard basis.  Exhaustive branch-and-bound: subsets are extended in
        grlex index order and a branch is cut once its partial growth already
        matches the best complete subset."""
        basis = self.standard_basis(d)
        if not 0 <= r <= len(basis):
            raise PreconditionError(f"subset size {r} out of range 0..{len(basis)}")
        if d + step > self.cap:
            raise PreconditionError(f"growth from degree {d} exceeds cap {self.cap}")
        key = (d, r, step)
        cached = self._oracle_cache.get(key)
        if cached is not None:
            return cached
        if r == 0:
            self._oracle_cache[key] = 0
            return 0
        growths = [self.growth([m], step) for m in basis]
        best = len(self.standard_basis(d + step)) + 1

        # extend in grlex index order (the lex segment is tried first and is
        # often optimal); prune once the partial growth reaches the best
        def rec(start: int, acc: frozenset[Monomial], count: int) -> None:
            nonlocal best
            if len(acc) >= best:
                return
            if count == r:
                best = len(acc)
                return
            for i in range(start, len(basis) - (r - count) + 1):
                rec(i + 1, acc | growths[i], count + 1)

        rec(0, frozenset(), 0)
        self._oracle_cache[key] = best
        return best


class HilbertSeries(tuple):
    """Truncated coefficient sequence ``(H^0, ..., H^cap)`` of an ideal.

    The partial order is pointwise: ``H.dominates(H2)`` iff ``H^d >= H2^d``
    for every d.
    """

    def __new__(cls, coeffs: Iterable[int]):
        vals = tuple(int(c) for c in coeffs)
        if any(c < 0 for c in vals):
            raise ValueError("negative Hilbert series coefficient")
        return super().__new__(cls, vals)

    def dominates(self, other: "HilbertSeries") -> bool:
        self._check(other)
        return all(a >= b for a, b in zip(self, other))

    def join(self, other: "HilbertSeries") -> "HilbertSeries":
        self._check(other)
        return HilbertSeries(max(a, b) for a, b in zip(self, other))

    def meet(self, other: "HilbertSeries") -> "HilbertSeries":
        self._check(other)
        return HilbertSeries(min(a, b) for a, b in zip(self, other))

    def _check(self, other) -> None:
        if len(self) != len(other):
            raise ValueError("Hilbert series of different lengths")


@dataclass(frozen=True)
class MonomialIdeal:
    """A degree-indexed family of standard monomials closed under
    multiplication by the variables (within the degree cap)."""

    ring: QuotientRing
    pieces: tuple[frozenset[Monomial], ...]

    def __post_init__(self):
        if len(self.pieces) != self.ring.cap + 1:
            raise ValueError("pieces must cover degrees 0..cap")

    @classmethod
    def from_pieces(cls, ring: QuotientRing, pieces: Mapping[int, Iterable[Monomial]] | Sequence[Iterable[Monomial]],
                    validate: bool = True) -> "MonomialIdeal":
        if isinstance(pieces, Mapping):
            seq = [frozenset(pieces.get(d, ())) for d in range(ring.cap + 1)]
        else:
            seq = [frozenset(p) for p in pieces]
            seq += [frozenset()] * (ring.cap + 1 - len(seq))
        ideal = cls(ring, tuple(seq))
        if validate:
            ideal.validate()
        return ideal

    @classmethod
    def zero(cls, ring: QuotientRing) -> "MonomialIdeal":
        return cls(ring, tuple(frozenset() for _ in range(ring.cap + 1)))

    @classmethod
    def unit(cls, ring: QuotientRing) -> "MonomialIdeal":
        return cls(ring, tuple(frozenset(ring.standard_basis(d)) for d in range(ring.cap + 1)))

    @classmethod
    def from_generators(cls, ring: QuotientRing, gens: Iterable[Monomial]) -> "MonomialIdeal":
        gens = [g for g in gens if not ring.is_zero(g)]
        pieces = []
        for d in range(ring.cap + 1):
            pieces.append(frozenset(m for m in ring.standard_basis(d)
                                    if any(g.divides(m) for g in gens)))
        return cls(ring, tuple(pieces))

    def validate(self) -> None:
        for d in range(self.ring.cap + 1):
            basis = set(self.ring.standard_basis(d))
            if not self.pieces[d] <= basis:
                raise ValueError(f"degree-{d} piece contains non-standard monomials")
            if d < self.ring.cap:
                if not self.ring.growth(self.pieces[d]) <= self.pieces[d + 1]:
                    raise ValueError(f"not closed under multiplication at degree {d}")

    def hilbert_series(self) -> HilbertSeries:
        return HilbertSeries(len(p) for p in self.pieces)

    def piece_sorted(self, d: int) -> tuple[Monomial, ...]:
        return tuple(sorted(self.pieces[d], key=grlex_key))

    def betti1(self, j: int) -> int:
        """Number of minimal generators in degree j: ``|I_j| - |R_1 I_{j-1}|``."""
        if not 0 <= j <= self.ring.cap:
            raise PreconditionError(f"degree {j} out of range")
        if j == 0:
            return len(self.pieces[0])
        return len(self.pieces[j]) - len(self.ring.growth(self.pieces[j - 1]))

    def minimal_generators(self) -> tuple[Monomial, ...]:
        gens: list[Monomial] = list(self.pieces[0])
        for j in range(1, self.ring.cap + 1):
            grown = self.ring.growth(self.pieces[j - 1])
            gens.extend(sorted(self.pieces[j] - grown, key=grlex_key))
        return tuple(gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(a <= b for a, b in zip(self.pieces, other.pieces))


def hilbert_series(ideal: MonomialIdeal) -> HilbertSeries:
    return ideal.hilbert_series()


def betti1(ideal: MonomialIdeal, j: int) -> int:
    return ideal.betti1(j)


def enumerate_monomial_ideals(ring: QuotientRing,
                              target: Sequence[int] | None = None,
                              piece_bounds: Mapping[int, tuple[int, int]] | None = None,
                              budget: int | None = None,
                              counter: list | None = None) -> Iterator[MonomialIdeal]:
    """Yield every monomial ideal of the ring (up to cap), each exactly once.

    Generation is degree by degree: the degree-d piece must contain the
    growth of the degree-(d-1) piece, and the extra monomials are chosen as
    grlex-ordered combinations, so the stream order is deterministic.

    ``target`` fixes the exact size of each piece (a Hilbert series);
    ``piece_bounds`` maps a degree to an inclusive (lo, hi) size range.
    ``budget`` caps the number of search nodes visited.
    """
    if target is not None and len(target) != ring.cap + 1:
        raise PreconditionError("target series must have cap+1 coefficients")
    nodes = counter if counter is not None else [0]

    def bounds(d: int, basis_size: int) -> tuple[int, int]:
        lo, hi = 0, basis_size
        if piece_bounds and d in piece_bounds:
            lo, hi = piece_bounds[d]
        if target is not None:
            lo = hi = target[d]
        return max(lo, 0), min(hi, basis_size)

    def rec(d: int, pieces: list[frozenset[Monomial]]) -> Iterator[MonomialIdeal]:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise BudgetExceeded(f"enumeration exceeded budget of {budget} nodes")
        if d > ring.cap:
            yield MonomialIdeal(ring, tuple(pieces))
            return
        basis = ring.standard_basis(d)
        forced = ring.growth(pieces[-1]) if pieces else frozenset()
        lo, hi = bounds(d, len(basis))
        if len(forced) > hi:
            return
        free = [m for m in basis if m not in forced]
        for k in range(max(lo - len(forced), 0), hi - len(forced) + 1):
            for extra in itertools.combinations(free, k):
                yield from rec(d + 1, pieces + [forced | frozenset(extra)])

    yield from rec(0, [])


def series_realizable(ring: QuotientRing, series: Sequence[int],
                      budget: int | None = None) -> bool:
    """True if some monomial ideal of the ring has the given Hilbert series."""
    return next(enumerate_monomial_ideals(ring, target=series, budget=budget), None) is not None
