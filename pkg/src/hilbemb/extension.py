"""Extension rings ``S = R[z]/(z^t)``: coefficient sequences by z-exponent,
z-stability, the unique minimal segments, the lifted embedding, and the
extended embedding order.

The degree-d part of S splits as ``⊕_i R_{d-i} z^i`` over z-exponents
``0 <= i < t``.  A multigraded subspace is *z-stable* when multiplying any
level by the variables of R lands in the level below.  Among z-stable
subspaces of a given dimension whose levels are prefixes of the base
embedding order, there is a unique one minimizing the vector of partial
level sums; these *segments* are the prefixes of the extended order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import PreconditionError, VerificationError
from .orders import EmbeddingCertificate, GradedOrder, certify
from .rings import (HilbertSeries, Monomial, MonomialIdeal, QuotientRing,
                    grlex_key)


def _fresh_name(taken: Sequence[str], base: str = "z") -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def materialize_truncation(ring: QuotientRing) -> QuotientRing:
    """Replace ``truncate_above`` by explicit generators in degree d0+1."""
    if ring.truncate_above is None:
        return ring
    d0 = ring.truncate_above
    if d0 < 0:
        raise PreconditionError("cannot materialize a ring with no standard monomials")
    # the truncation must be dropped before reading off degree-(d0+1) monomials
    probe = QuotientRing.create(ring.var_names, ring.generators, cap=max(d0 + 1, ring.cap))
    extra = probe.standard_basis(d0 + 1)
    return QuotientRing.create(ring.var_names, ring.generators + tuple(extra), cap=ring.cap)


@dataclass(frozen=True)
class ExtensionRing:
    """``S = R[z]/(z^t)``, usually over a base with a certified embedding
    order (required for segments; stabilization works without one).

    ``t is None`` means no power relation on z within the cap (the infinite
    case is represented exactly: level indices at degree d are 0..d).
    """

    base: QuotientRing
    base_order: GradedOrder | None
    certificate: EmbeddingCertificate | None
    t: int | None
    ring: QuotientRing
    zvar: str

    @classmethod
    def create(cls, base_order: GradedOrder, t: int | None, cap: int | None = None) -> "ExtensionRing":
        cert = certify(base_order)
        skeleton = cls.over_ring(base_order.ring, t, cap)
        return cls(skeleton.base, base_order, cert, t, skeleton.ring, skeleton.zvar)

    @classmethod
    def over_ring(cls, base: QuotientRing, t: int | None, cap: int | None = None) -> "ExtensionRing":
        """Extension ring without a base order: enough for stability checks
        and stabilization, but not for segments."""
        if t is not None and t < 2:
            raise PreconditionError("t must be >= 2 (or None for no relation)")
        if cap is None:
            cap = base.cap
        if cap > base.cap:
            raise PreconditionError("extension cap cannot exceed the base cap")
        flat = materialize_truncation(base)
        z = _fresh_name(base.var_names)
        names = base.var_names + (z,)
        gens = [Monomial(g.exponents + (0,)) for g in flat.generators]
        if t is not None:
            gens.append(Monomial((0,) * base.nvars + (t,)))
        trunc = None
        if base.truncate_above is not None and t is not None:
            trunc = base.truncate_above + t - 1
        ring = QuotientRing.create(names, gens, cap=cap, truncate_above=trunc)
        return cls(base, None, None, t, ring, z)

    def levels(self, d: int) -> range:
        """Relevant z-exponents at total degree d."""
        hi = d if self.t is None else min(d, self.t - 1)
        return range(hi + 1)

    def split(self, m: Monomial) -> tuple[Monomial, int]:
        """Base part and z-exponent of a monomial of S."""
        return Monomial(m.exponents[:-1]), m.exponents[-1]

    def join(self, base_m: Monomial, i: int) -> Monomial:
        return Monomial(base_m.exponents + (i,))

    def base_dim(self, d: int) -> int:
        return len(self.base.standard_basis(d)) if 0 <= d <= self.base.cap else 0

    def prefix(self, d: int, r: int) -> tuple[Monomial, ...]:
        """Rank-r prefix of the base order in base degree d."""
        if self.base_order is None:
            raise PreconditionError("this extension ring was built without a base order")
        return self.base_order.prefix(d, r)


@dataclass(frozen=True)
class CoefficientSequence:
    """Levels of a multigraded subspace of S_d, indexed by z-exponent."""

    ext: ExtensionRing
    d: int
    levels: tuple[frozenset[Monomial], ...]

    @classmethod
    def of(cls, ext: ExtensionRing, d: int, monomials) -> "CoefficientSequence":
        levels = [set() for _ in ext.levels(d)]
        for m in monomials:
            if m.degree != d:
                raise PreconditionError(f"{m} does not have degree {d}")
            f, i = ext.split(m)
            if ext.t is not None and i >= ext.t:
                raise PreconditionError(f"z-exponent {i} not below t={ext.t}")
            levels[i].add(f)
        return cls(ext, d, tuple(frozenset(s) for s in levels))

    @classmethod
    def from_ranks(cls, ext: ExtensionRing, d: int, ranks: Sequence[int]) -> "CoefficientSequence":
        levels = [frozenset(ext.prefix(d - i, r)) for i, r in enumerate(ranks)]
        return cls(ext, d, tuple(levels))

    def to_monomials(self) -> frozenset[Monomial]:
        return frozenset(self.ext.join(f, i)
                         for i, level in enumerate(self.levels) for f in level)

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def size(self) -> int:
        return sum(len(level) for level in self.levels)

    def level_sums(self) -> tuple[int, ...]:
        """Partial sums of level sizes from z-exponent 0 upward; the vector
        minimized by segments (componentwise order)."""
        out, acc = [], 0
        for level in self.levels:
            acc += len(level)
            out.append(acc)
        return tuple(out)


def is_z_stable(seq: CoefficientSequence) -> int | None:
    """None if every positive level's growth lies in the level below;
    otherwise the smallest violating z-exponent."""
    base = seq.ext.base
    for i in range(1, len(seq.levels)):
        if not base.growth(seq.levels[i]) <= seq.levels[i - 1]:
            return i
    return None


def ideal_z_stable(ext: ExtensionRing, ideal: MonomialIdeal) -> tuple[int, int] | None:
    """None if every degree piece is z-stable; otherwise (degree, level)."""
    for d in range(ext.ring.cap + 1):
        i = is_z_stable(CoefficientSequence.of(ext, d, ideal.pieces[d]))
        if i is not None:
            return (d, i)
    return None


def _rank_tuple_z_stable(ext: ExtensionRing, d: int, ranks: Sequence[int]) -> bool:
    return is_z_stable(CoefficientSequence.from_ranks(ext, d, ranks)) is None


def _segment_condition_fails(ext: ExtensionRing, d: int, ranks: list[int]) -> tuple[int, int] | None:
    """First (i, j), ordered by j-i then i, where the prefix at level i is
    not contained in R_{j-i} times the one-step-enlarged prefix at level j."""
    L = len(ranks)
    for gap in range(1, L):
        for i in range(0, L - gap):
            j = i + gap
            top = min(ranks[j] + 1, ext.base_dim(d - j))
            target = ext.base.growth(ext.prefix(d - j, top), step=gap) if gap <= ext.base.cap else frozenset()
            if not frozenset(ext.prefix(d - i, ranks[i])) <= target:
                return (i, j)
    return None


def segment(ext: ExtensionRing, d: int, s: int) -> CoefficientSequence:
    """The unique segment of length s in degree d.

    Start from the z-stable filling that packs low z-exponents first, then
    repeatedly move one unit of rank from the failing low level to the high
    level of the first violated segment condition.  Every move strictly
    decreases the partial-sum vector, so the loop terminates at the minimal
    (hence unique) z-stable configuration.
    """
    if d > ext.ring.cap:
        raise PreconditionError(f"degree {d} exceeds cap")
    dims = [ext.base_dim(d - i) for i in ext.levels(d)]
    total = sum(dims)
    if not 0 <= s <= total:
        raise PreconditionError(f"length {s} out of range 0..{total}")
    ranks: list[int] = []
    rest = s
    for dim in dims:
        take = min(rest, dim)
        ranks.append(take)
        rest -= take
    budget = s * len(dims) + 1
    for _ in range(budget):
        move = _segment_condition_fails(ext, d, ranks)
        if move is None:
            break
        i, j = move
        if ranks[i] == 0 or ranks[j] >= dims[j]:
            raise VerificationError(f"impossible exchange at degree {d}: {move} on {ranks}")
        ranks[i] -= 1
        ranks[j] += 1
        if not _rank_tuple_z_stable(ext, d, ranks):
            raise VerificationError(f"exchange broke z-stability at degree {d}: {ranks}")
    else:
        raise VerificationError(f"segment exchange did not terminate within {budget} moves")
    seq = CoefficientSequence.from_ranks(ext, d, ranks)
    if is_z_stable(seq) is not None:
        raise VerificationError("segment is not z-stable")
    return seq


def enumerate_z_stable_rank_tuples(ext: ExtensionRing, d: int, s: int) -> Iterator[tuple[int, ...]]:
    """All z-stable rank tuples of total length s (levels are base-order
    prefixes); brute-force ground truth for segment uniqueness."""
    dims = [ext.base_dim(d - i) for i in ext.levels(d)]
    for ranks in itertools.product(*[range(dim + 1) for dim in dims]):
        if sum(ranks) == s and _rank_tuple_z_stable(ext, d, list(ranks)):
            yield ranks


def extend_embedding(ext: ExtensionRing, ideal: MonomialIdeal) -> MonomialIdeal:
    """Replace each degree piece of a z-stable ideal by the segment of the
    same length; preserves the Hilbert series."""
    bad = ideal_z_stable(ext, ideal)
    if bad is not None:
        raise PreconditionError(
            f"ideal is not z-stable (degree {bad[0]}, level {bad[1]}); stabilize it first")
    pieces = {d: sorted(segment(ext, d, len(ideal.pieces[d])).to_monomials(), key=grlex_key)
              for d in range(ext.ring.cap + 1)}
    try:
        out = MonomialIdeal.from_pieces(ext.ring, pieces)
    except ValueError as exc:
        raise VerificationError(f"segments do not form an ideal: {exc}")
    if out.hilbert_series() != ideal.hilbert_series():
        raise VerificationError("extension changed the Hilbert series")
    return out


def _divisors_of_degree(m: Monomial, k: int) -> Iterator[Monomial]:
    ranges = [range(e + 1) for e in m.exponents]
    for exps in itertools.product(*ranges):
        if sum(exps) == k:
            yield Monomial(exps)


def _below_by_definition(ext: ExtensionRing, f: Monomial, a: int, g: Monomial, b: int) -> bool:
    """Comparison rule for ``f z^a`` against ``g z^b`` with a <= b: the first
    is smaller iff some degree-|g| divisor of f is at or below g in the base
    order.  (Non-strict at g itself; the strict variant fails to reproduce
    the segments, see the package docs.)"""
    d2 = g.degree
    rank_g = ext.base_order.rank(d2, g)
    for g2 in _divisors_of_degree(f, d2):
        if ext.base.is_zero(g2):
            continue
        if ext.base_order.rank(d2, g2) <= rank_g:
            return True
    return False


def extended_order(ext: ExtensionRing, cross_check: bool = True) -> GradedOrder:
    """The embedding order on S whose degree-d prefixes are the segments.

    Built by peeling successive segments; optionally cross-checked against
    the independent pairwise comparison rule above.
    """
    listings = []
    for d in range(ext.ring.cap + 1):
        total = len(ext.ring.standard_basis(d))
        listing: list[Monomial] = []
        prev: frozenset[Monomial] = frozenset()
        for s in range(1, total + 1):
            cur = segment(ext, d, s).to_monomials()
            new = cur - prev
            if len(new) != 1:
                raise VerificationError(f"segments of lengths {s - 1},{s} in degree {d} do not nest")
            listing.append(next(iter(new)))
            prev = cur
        listings.append(tuple(listing))
    order = GradedOrder(ext.ring, tuple(listings))
    if cross_check:
        _check_against_definition(ext, order)
    return order


def _check_against_definition(ext: ExtensionRing, order: GradedOrder) -> None:
    for d in range(ext.ring.cap + 1):
        listing = order.per_degree[d]
        rank = {m: i for i, m in enumerate(listing)}
        for u, v in itertools.combinations(listing, 2):
            fu, au = ext.split(u)
            fv, av = ext.split(v)
            if au <= av:
                expected = _below_by_definition(ext, fu, au, fv, av)
                actual = rank[u] < rank[v]
            else:
                expected = _below_by_definition(ext, fv, av, fu, au)
                actual = rank[v] < rank[u]
            if expected != actual:
                raise VerificationError(
                    f"definition and segments disagree on {u} vs {v} in degree {d}")


def z_stable_representatives_exist(ext: ExtensionRing,
                                   budget: int | None = 2_000_000) -> HilbertSeries | None:
    """None if every attainable Hilbert series of S has a z-stable monomial
    representative; otherwise the first series without one.

    This is the hypothesis under which the segment order is an embedding
    order.  It holds automatically when t is None, and when every variable's
    t-th power lies in the base ideal; outside that range it can fail, and
    then the segment order need not pass the embedding checker.
    """
    from .rings import enumerate_monomial_ideals
    stable: set[HilbertSeries] = set()
    attained: set[HilbertSeries] = set()
    for ideal in enumerate_monomial_ideals(ext.ring, budget=budget):
        h = ideal.hilbert_series()
        attained.add(h)
        if h not in stable and ideal_z_stable(ext, ideal) is None:
            stable.add(h)
    for h in sorted(attained):
        if h not in stable:
            return h
    return None


def strong_hyp_check(ext: ExtensionRing, ideal: MonomialIdeal) -> tuple[int, int] | None:
    """For a z-stable ideal and its segment replacement J: in every degree,
    adding ``(z^i)`` keeps the original at least as large as J, for every
    level i.  Returns the first violating (i, degree); None expected."""
    image = extend_embedding(ext, ideal)
    for d in range(ext.ring.cap + 1):
        mine = CoefficientSequence.of(ext, d, ideal.pieces[d]).level_sums()
        its = CoefficientSequence.of(ext, d, image.pieces[d]).level_sums()
        # |(I, z^i)_d| >= |(J, z^i)_d| reduces to partial sums over levels < i
        for i in range(len(mine) + 1):
            lhs = mine[i - 1] if i > 0 else 0
            rhs = its[i - 1] if i > 0 else 0
            if lhs < rhs:
                return (i, d)
    return None
