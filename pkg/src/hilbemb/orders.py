"""Embedding orders on quotient rings: verification, search, the induced
section of the Hilbert-series map, and the derived structural checks.

A graded order lists the standard basis of each degree.  It is an
*embedding order* when, for every degree d and every prefix V of the
degree-d listing, the set ``R_1 V`` is (a) a prefix of the degree-(d+1)
listing and (b) of the minimum possible size among |V|-element subsets of
the degree-d basis.  Prefixes of such an order realize every attainable
Hilbert series by an ideal, compatibly with inclusion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import BudgetExceeded, PreconditionError, VerificationError
from .rings import (HilbertSeries, Monomial, MonomialIdeal, QuotientRing,
                    enumerate_monomial_ideals, grlex_key, series_realizable)


@dataclass(frozen=True)
class GradedOrder:
    """Per-degree listings of the standard basis (degrees 0..cap)."""

    ring: QuotientRing
    per_degree: tuple[tuple[Monomial, ...], ...]

    def __post_init__(self):
        if len(self.per_degree) != self.ring.cap + 1:
            raise ValueError("order must list degrees 0..cap")
        for d, listing in enumerate(self.per_degree):
            if sorted(listing, key=grlex_key) != list(self.ring.standard_basis(d)):
                raise ValueError(f"degree-{d} listing is not a permutation of the standard basis")

    @classmethod
    def from_listings(cls, ring: QuotientRing,
                      listings: Mapping[int, Sequence[Monomial]]) -> "GradedOrder":
        per = []
        for d in range(ring.cap + 1):
            if d in listings:
                per.append(tuple(listings[d]))
            else:
                basis = ring.standard_basis(d)
                if len(basis) > 1:
                    raise ValueError(f"degree {d} has {len(basis)} monomials but no listing")
                per.append(basis)
        return cls(ring, tuple(per))

    @classmethod
    def grlex(cls, ring: QuotientRing) -> "GradedOrder":
        return cls(ring, tuple(ring.standard_basis(d) for d in range(ring.cap + 1)))

    def prefix(self, d: int, r: int) -> tuple[Monomial, ...]:
        return self.per_degree[d][:r]

    def rank(self, d: int, m: Monomial) -> int:
        return self.per_degree[d].index(m)


@dataclass(frozen=True)
class OrderViolation:
    degree: int
    prefix_size: int
    kind: str  # "not_minimal" | "not_prefix"


@dataclass(frozen=True)
class EmbeddingCertificate:
    """Witness that an order passed is_embedding_order up to verified_cap."""

    order: GradedOrder
    verified_cap: int


def is_embedding_order(order: GradedOrder) -> OrderViolation | None:
    """None if the order is an embedding order up to cap; otherwise the
    smallest (degree, prefix size) that fails, minimality checked first."""
    ring = order.ring
    for d in range(ring.cap):
        nxt = order.per_degree[d + 1]
        position = {m: i for i, m in enumerate(nxt)}
        running: set[Monomial] = set()
        for r, m in enumerate(order.per_degree[d], start=1):
            running.add(m)
            grown = ring.growth(running)
            if len(grown) != ring.min_growth_oracle(d, r):
                return OrderViolation(d, r, "not_minimal")
            if grown and max(position[g] for g in grown) != len(grown) - 1:
                return OrderViolation(d, r, "not_prefix")
    return None


def certify(order: GradedOrder) -> EmbeddingCertificate:
    violation = is_embedding_order(order)
    if violation is not None:
        raise PreconditionError(f"not an embedding order: {violation}")
    return EmbeddingCertificate(order, order.ring.cap)


def _growth_blocks(ring: QuotientRing, listing: Sequence[Monomial], d: int) -> list[list[Monomial]]:
    """Partition of the degree-(d+1) basis forced by the growth chain of the
    degree-d listing: the order on degree d+1 must exhaust each block before
    starting the next."""
    blocks: list[list[Monomial]] = []
    seen: set[Monomial] = set()
    running: set[Monomial] = set()
    for m in listing:
        running.add(m)
        grown = ring.growth(running)
        fresh = sorted(grown - seen, key=grlex_key)
        if fresh:
            blocks.append(fresh)
            seen |= set(fresh)
    rest = sorted(set(ring.standard_basis(d + 1)) - seen, key=grlex_key)
    if rest:
        blocks.append(rest)  # unreachable for step-1 growth, kept for safety
    return blocks


def find_embedding_orders(ring: QuotientRing,
                          forced_prefixes: Mapping[int, Sequence[Monomial]] | None = None,
                          budget: int | None = None) -> Iterator[GradedOrder]:
    """Depth-first enumeration of all embedding orders, degree by degree.

    Candidates extend the current degree one monomial at a time in grlex
    order, restricted to the block structure imposed by the previous degree
    and pruned by the minimal-growth oracle, so the first yielded order is
    deterministic.  ``forced_prefixes[d]`` pins the initial monomials of the
    degree-d listing.
    """
    forced = {d: tuple(ms) for d, ms in (forced_prefixes or {}).items()}
    nodes = [0]

    def order_degree(d: int, blocks: list[list[Monomial]]) -> Iterator[tuple[Monomial, ...]]:
        basis = ring.standard_basis(d)
        pinned = forced.get(d, ())
        if len(pinned) > len(basis):
            return

        def extend(listing: list[Monomial], block_idx: int, used: set[Monomial],
                   grown: frozenset[Monomial]) -> Iterator[tuple[Monomial, ...]]:
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise BudgetExceeded(f"order search exceeded {budget} nodes")
            if len(listing) == len(basis):
                yield tuple(listing)
                return
            while block_idx < len(blocks) and all(m in used for m in blocks[block_idx]):
                block_idx += 1
            candidates = [m for m in blocks[block_idx] if m not in used]
            pos = len(listing)
            if pos < len(pinned):
                candidates = [m for m in candidates if m == pinned[pos]]
            for m in candidates:
                new_grown = grown | ring.growth([m]) if d < ring.cap else grown
                if d < ring.cap and len(new_grown) != ring.min_growth_oracle(d, pos + 1):
                    continue
                listing.append(m)
                used.add(m)
                yield from extend(listing, block_idx, used, new_grown)
                used.remove(m)
                listing.pop()

        if not basis:
            yield ()
            return
        yield from extend([], 0, set(), frozenset())

    def search(d: int, listings: list[tuple[Monomial, ...]]) -> Iterator[GradedOrder]:
        if d > ring.cap:
            yield GradedOrder(ring, tuple(listings))
            return
        if d == 0:
            blocks = [list(ring.standard_basis(0))]
        else:
            blocks = _growth_blocks(ring, listings[d - 1], d - 1)
        for listing in order_degree(d, blocks):
            yield from search(d + 1, listings + [listing])

    yield from search(0, [])


@dataclass(frozen=True)
class OrderSearchResult:
    order: GradedOrder | None
    exhaustive: bool  # True when "none" is a proof, not just "none up to cap"


def find_embedding_order(ring: QuotientRing,
                         forced_prefixes: Mapping[int, Sequence[Monomial]] | None = None,
                         budget: int | None = None) -> OrderSearchResult:
    order = next(find_embedding_orders(ring, forced_prefixes, budget), None)
    return OrderSearchResult(order, ring.is_exact_at_cap)


def embed(order: GradedOrder, series: Sequence[int],
          budget: int | None = None) -> MonomialIdeal:
    """The ideal whose degree-d piece is the first ``series[d]`` monomials of
    the degree-d listing.  Rejects series not attained by any monomial ideal."""
    ring = order.ring
    h = HilbertSeries(series)
    if len(h) != ring.cap + 1:
        raise PreconditionError("series must have cap+1 coefficients")
    for d, c in enumerate(h):
        if c > len(ring.standard_basis(d)):
            raise PreconditionError(f"series coefficient {c} exceeds basis size in degree {d}")
    pieces = {d: order.prefix(d, h[d]) for d in range(ring.cap + 1)}
    try:
        ideal = MonomialIdeal.from_pieces(ring, pieces)
    except ValueError:
        if not series_realizable(ring, h, budget=budget):
            raise PreconditionError(f"series {tuple(h)} is not attained by any monomial ideal")
        raise VerificationError(f"series {tuple(h)} is attainable but its prefixes are not an ideal; "
                                "the order is not an embedding order")
    if ideal.hilbert_series() != h:
        raise VerificationError("prefix ideal has the wrong Hilbert series")
    return ideal


def hilbert_poset(ring: QuotientRing, budget: int | None = 2_000_000) -> tuple[HilbertSeries, ...]:
    """All Hilbert series of monomial ideals, deduplicated and sorted."""
    seen = {i.hilbert_series() for i in enumerate_monomial_ideals(ring, budget=budget)}
    return tuple(sorted(seen))


@dataclass(frozen=True)
class LatticeWitness:
    first: HilbertSeries
    second: HilbertSeries
    missing: str  # "max" | "min"
    missing_series: HilbertSeries


def lattice_check(ring: QuotientRing, budget: int | None = 2_000_000) -> LatticeWitness | None:
    """None if the set of attainable series is closed under pointwise max and
    min; otherwise the first violating pair in sorted order.  A witness rules
    out the existence of an embedding (exactly, for Artinian rings computed
    to their top degree)."""
    poset = hilbert_poset(ring, budget=budget)
    members = set(poset)
    for a, b in itertools.combinations(poset, 2):
        join = a.join(b)
        if join not in members:
            return LatticeWitness(a, b, "max", join)
        meet = a.meet(b)
        if meet not in members:
            return LatticeWitness(a, b, "min", meet)
    return None


def _divisors(m: Monomial) -> Iterator[Monomial]:
    """All monomial divisors of m, including 1 and m."""
    ranges = [range(e + 1) for e in m.exponents]
    for exps in itertools.product(*ranges):
        yield Monomial(exps)


@dataclass(frozen=True)
class MonomialOrderViolation:
    kind: str  # "divisor_closure" | "multiplicative"
    f: Monomial
    f2: Monomial | None = None
    divisor: Monomial | None = None


def is_monomial_order(order: GradedOrder) -> MonomialOrderViolation | None:
    """Checks that the basis is divisor-closed and that comparisons are
    stable under cancelling common divisors."""
    ring = order.ring
    for d in range(1, ring.cap + 1):
        prev = set(ring.standard_basis(d - 1))
        for m in ring.standard_basis(d):
            for i in range(ring.nvars):
                if m.exponents[i] > 0 and Monomial(
                        tuple(e - (1 if j == i else 0) for j, e in enumerate(m.exponents))) not in prev:
                    return MonomialOrderViolation("divisor_closure", m)
    rank = [{m: i for i, m in enumerate(listing)} for listing in order.per_degree]
    for d in range(2, ring.cap + 1):
        for f, f2 in itertools.combinations(order.per_degree[d], 2):
            for g in _divisors(f.gcd(f2)):
                if g.is_one():
                    continue
                q, q2 = f.div(g), f2.div(g)
                d2 = d - g.degree
                before = rank[d][f] < rank[d][f2]
                after = rank[d2][q] < rank[d2][q2]
                if before != after:
                    return MonomialOrderViolation("multiplicative", f, f2, g)
    return None


def lex_refinement_check(order: GradedOrder) -> tuple[Monomial, Monomial] | None:
    """After relabelling variables by the degree-1 listing, the order must
    coincide with grlex in every degree.  Preconditions (embedding order and
    monomial order) are enforced, not assumed."""
    certify(order)
    violation = is_monomial_order(order)
    if violation is not None:
        raise PreconditionError(f"not a monomial order: {violation}")
    ring = order.ring
    perm = [order.per_degree[1].index(Monomial(tuple(1 if j == i else 0 for j in range(ring.nvars))))
            for i in range(ring.nvars)]

    def relabeled_key(m: Monomial):
        exps = [0] * ring.nvars
        for i, e in enumerate(m.exponents):
            exps[perm[i]] = e
        return (m.degree, tuple(-e for e in exps))

    for listing in order.per_degree:
        for i in range(len(listing)):
            for j in range(i + 1, len(listing)):
                if relabeled_key(listing[i]) > relabeled_key(listing[j]):
                    return (listing[i], listing[j])
    return None


def _is_prefix_ideal(order: GradedOrder, ideal: MonomialIdeal) -> bool:
    return all(set(order.prefix(d, len(ideal.pieces[d]))) == ideal.pieces[d]
               for d in range(order.ring.cap + 1))


def inherit_order(order: GradedOrder, ideal: MonomialIdeal) -> GradedOrder:
    """Order induced on R/I for a prefix ideal I: quotient ring plus the old
    listings with I's monomials removed.  Degree-1 monomials of I eliminate
    their variables."""
    ring = order.ring
    if ideal.ring is not ring and ideal.ring != ring:
        raise PreconditionError("ideal lives in a different ring")
    if not _is_prefix_ideal(order, ideal):
        raise PreconditionError("ideal is not a prefix ideal of the order")
    if ideal.pieces[0]:
        empty = QuotientRing.create((), (), cap=ring.cap, truncate_above=-1)
        return GradedOrder(empty, tuple(() for _ in range(ring.cap + 1)))
    removed_vars = {next(i for i, e in enumerate(m.exponents) if e) for m in ideal.pieces[1]}
    keep = [i for i in range(ring.nvars) if i not in removed_vars]
    new_names = tuple(ring.var_names[i] for i in keep)

    def project(m: Monomial) -> Monomial:
        return Monomial(tuple(m.exponents[i] for i in keep))

    gens = [project(g) for g in ring.generators
            if all(g.exponents[i] == 0 for i in removed_vars)]
    for d in range(2, ring.cap + 1):
        for m in sorted(ideal.pieces[d], key=grlex_key):
            if all(m.exponents[i] == 0 for i in removed_vars):
                gens.append(project(m))
    new_ring = QuotientRing.create(new_names, gens, cap=ring.cap,
                                   truncate_above=ring.truncate_above)
    listings = []
    for d in range(ring.cap + 1):
        kept = [project(m) for m in order.per_degree[d] if m not in ideal.pieces[d]]
        listings.append(tuple(kept))
    new_order = GradedOrder(new_ring, tuple(listings))
    violation = is_embedding_order(new_order)
    if violation is not None:
        raise VerificationError(f"inherited order failed the checker: {violation}")
    return new_order


@dataclass(frozen=True)
class VeroneseOrder:
    """Embedding data for the m-th Veronese: S_i = R_{im}, growth by R_m."""

    base: GradedOrder
    m: int
    cap: int  # in S-degrees
    per_degree: tuple[tuple[Monomial, ...], ...]


def veronese_restrict(order: GradedOrder, m: int, cap: int | None = None) -> VeroneseOrder:
    """Restrict an embedding order to the m-th Veronese and verify the
    prefix and minimality conditions against the m-step growth oracle."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    ring = order.ring
    if cap is None:
        cap = ring.cap // m
    if m * cap > ring.cap:
        raise PreconditionError(f"Veronese cap {cap} needs base degree {m * cap} > cap {ring.cap}")
    listings = tuple(order.per_degree[i * m] for i in range(cap + 1))
    for i in range(cap):
        nxt = listings[i + 1]
        position = {mm: k for k, mm in enumerate(nxt)}
        running: set[Monomial] = set()
        for r, mm in enumerate(listings[i], start=1):
            running.add(mm)
            grown = ring.growth(running, step=m)
            if len(grown) != ring.min_growth_oracle(i * m, r, step=m):
                raise VerificationError(f"Veronese minimality failed at S-degree {i}, prefix {r}")
            if grown and max(position[g] for g in grown) != len(grown) - 1:
                raise VerificationError(f"Veronese prefix condition failed at S-degree {i}, prefix {r}")
    return VeroneseOrder(order, m, cap, listings)


@dataclass(frozen=True)
class GotzmannResult:
    holds: bool
    witness_degree: int | None
    embedded: MonomialIdeal


def gotzmann_check(order: GradedOrder, ideal: MonomialIdeal, d: int) -> GotzmannResult:
    """Persistence of generator degrees through the embedding: given that the
    input is generated in degrees <= d and its embedded image has no new
    generator in degree d+1, the image must have none later either."""
    ring = order.ring
    bad = [j for j in range(d + 1, ring.cap + 1) if ideal.betti1(j) != 0]
    if bad:
        raise PreconditionError(f"input has minimal generators in degrees {bad} > {d}")
    image = embed(order, ideal.hilbert_series())
    if d + 1 <= ring.cap and image.betti1(d + 1) != 0:
        raise PreconditionError(f"embedded image has a minimal generator in degree {d + 1}")
    for j in range(d + 2, ring.cap + 1):
        if image.betti1(j) != 0:
            return GotzmannResult(False, j, image)
    return GotzmannResult(True, None, image)


def socle_segment_check(order: GradedOrder) -> int | None:
    """The degreewise annihilator of the maximal ideal must be a prefix of
    every listing; returns the first violating degree."""
    ring = order.ring
    for d in range(ring.cap + 1):
        socle = set(ring.annihilator_degree(d))
        if set(order.prefix(d, len(socle))) != socle:
            return d
    return None


def betti1_dominance_check(order: GradedOrder, ideal: MonomialIdeal) -> int | None:
    """Generator counts can only grow under the embedding; returns the first
    degree where that fails (None expected)."""
    image = embed(order, ideal.hilbert_series())
    for j in range(order.ring.cap + 1):
        if ideal.betti1(j) > image.betti1(j):
            return j
    return None
