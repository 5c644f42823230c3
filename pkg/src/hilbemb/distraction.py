"""Distraction matrices, leading-weight spaces, the stabilization operators,
polarization, and the pipelines that transport an embedding order through a
distraction, a polarization, or a truncated extension.

All linear algebra is exact: over the rationals by default, over GF(p) with
a primitive t-th root of unity where the truncated stabilization needs one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError, VerificationError
from .extension import (ExtensionRing, extend_embedding, extended_order,
                        ideal_z_stable, materialize_truncation)
from .linalg import (Field, PolySpace, PrimeField, QQ, degree_columns,
                     initial_space as _initial_space, poly_mul,
                     smallest_prime_with_unity_root)
from .orders import EmbeddingCertificate, GradedOrder, certify
from .rings import (Monomial, MonomialIdeal, QuotientRing, grlex_key,
                    _degree_monomials)


@dataclass(frozen=True)
class FieldConfig:
    """Exact coefficient field: rationals, or GF(p) with a chosen root of
    unity of multiplicative order t."""

    kind: str  # "rationals" | "gf"
    p: int | None = None
    zeta: int | None = None
    t: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            return
        if self.kind != "gf":
            raise PreconditionError(f"unknown field kind {self.kind!r}")
        if self.p is None:
            raise PreconditionError("GF mode needs a prime p")
        fld = PrimeField(self.p)
        if self.t is not None:
            if (self.p - 1) % self.t != 0:
                raise PreconditionError(f"p={self.p} is not 1 mod t={self.t}")
            if self.zeta is not None:
                if pow(self.zeta, self.t, self.p) != 1 or any(
                        pow(self.zeta, k, self.p) == 1 for k in range(1, self.t)):
                    raise PreconditionError(f"zeta={self.zeta} has the wrong order in GF({self.p})")

    @classmethod
    def rationals(cls) -> "FieldConfig":
        return cls("rationals")

    @classmethod
    def for_unity_root(cls, t: int) -> "FieldConfig":
        p = smallest_prime_with_unity_root(t)
        zeta = PrimeField(p).element_of_order(t)
        return cls("gf", p=p, zeta=zeta, t=t)

    def field(self) -> Field:
        return QQ if self.kind == "rationals" else PrimeField(self.p)


LinearForm = Mapping[int, object]  # variable index -> coefficient


class DistractionMatrix:
    """Finitely many overriding columns of linear forms per variable row;
    the entry defaults to the row's own variable and is constant from
    column N on."""

    def __init__(self, nvars: int, overrides: Mapping[tuple[int, int], LinearForm],
                 stable_from: int | None = None):
        self.nvars = nvars
        self.overrides = {key: dict(form) for key, form in overrides.items()}
        for (row, col), form in self.overrides.items():
            if not 0 <= row < nvars or col < 1:
                raise PreconditionError(f"override at invalid position ({row}, {col})")
            if any(not 0 <= v < nvars for v in form):
                raise PreconditionError("linear form mentions an unknown variable")
        max_col = max((col for _, col in self.overrides), default=0)
        self.stable_from = stable_from if stable_from is not None else max_col + 1
        if any(col >= self.stable_from for _, col in self.overrides):
            raise PreconditionError("an override sits at or beyond the stability column")

    def entry(self, row: int, col: int) -> dict[int, object]:
        if col >= self.stable_from:
            col = self.stable_from
        form = self.overrides.get((row, col))
        return dict(form) if form is not None else {row: 1}

    def row_entries(self, row: int, up_to_col: int) -> list[dict[int, object]]:
        cols = range(1, min(up_to_col, self.stable_from) + 1)
        seen, out = set(), []
        for col in cols:
            form = self.entry(row, col)
            key = tuple(sorted(form.items(), key=lambda kv: kv[0]))
            if key not in seen:
                seen.add(key)
                out.append(form)
        return out

    def check_spanning(self, field: Field, up_to_col: int) -> None:
        """Every choice of one used entry per row must span degree one."""
        per_row = [self.row_entries(i, up_to_col) for i in range(self.nvars)]
        unit_columns = degree_columns([Monomial(tuple(1 if j == i else 0 for j in range(self.nvars)))
                                       for i in range(self.nvars)])
        for choice in itertools.product(*per_row):
            polys = [{Monomial(tuple(1 if j == v else 0 for j in range(self.nvars))): c
                      for v, c in form.items()} for form in choice]
            if PolySpace.span(1, unit_columns, polys, field).dim != self.nvars:
                raise PreconditionError("distraction matrix columns fail to span degree one")

    @classmethod
    def identity(cls, nvars: int) -> "DistractionMatrix":
        return cls(nvars, {})


def _form_poly(form: LinearForm, nvars: int) -> dict[Monomial, object]:
    return {Monomial(tuple(1 if j == v else 0 for j in range(nvars))): c
            for v, c in form.items()}


def apply_distraction(matrix: DistractionMatrix, m: Monomial,
                      field: Field = QQ) -> dict[Monomial, object]:
    """Image of a monomial: the product, over each variable, of the matrix
    entries in columns 1..exponent of that row."""
    poly: dict[Monomial, object] = {Monomial((0,) * matrix.nvars): field.one}
    for row, exp in enumerate(m.exponents):
        for col in range(1, exp + 1):
            poly = poly_mul(poly, _form_poly(matrix.entry(row, col), matrix.nvars), field)
    return poly


def ambient_basis(nvars: int, d: int) -> tuple[Monomial, ...]:
    return degree_columns(_degree_monomials(nvars, d))


def distraction_ideal(matrix: DistractionMatrix,
                      pieces: Mapping[int, Iterable[Monomial]],
                      cap: int,
                      field: Field = QQ,
                      check_closure: bool = True,
                      check_spanning: bool = True) -> dict[int, PolySpace]:
    """Degreewise spans of the distracted monomials of an ideal; dimension
    per degree is checked against the input, and (for the one-nontrivial-row
    matrices used here) closure under every variable is verified exactly."""
    if check_spanning:
        matrix.check_spanning(field, up_to_col=cap)
    out: dict[int, PolySpace] = {}
    for d in range(cap + 1):
        monos = sorted(pieces.get(d, ()), key=grlex_key)
        columns = ambient_basis(matrix.nvars, d)
        space = PolySpace.span(d, columns, [apply_distraction(matrix, m, field) for m in monos], field)
        if space.dim != len(monos):
            raise VerificationError(f"distraction lost dimension in degree {d}")
        out[d] = space
    if check_closure:
        for d in range(cap):
            target = out[d + 1]
            shifted = []
            for poly in out[d].row_polys():
                for v in range(matrix.nvars):
                    unit = Monomial(tuple(1 if j == v else 0 for j in range(matrix.nvars)))
                    shifted.append({m.mul(unit): c for m, c in poly.items()})
            probe = PolySpace.span(d + 1, target.columns, list(target.row_polys()) + shifted, field)
            if probe.dim != target.dim:
                raise VerificationError(f"distracted family is not an ideal at degree {d}")
    return out


def initial_space(weights: Sequence[int], polys: Iterable[Mapping[Monomial, object]],
                  nvars: int, degree: int, field: Field = QQ) -> tuple[Monomial, ...]:
    """Monomials spanning the leading-weight space of a span of degree-d
    forms; errors if that space is not a span of monomials."""
    columns = ambient_basis(nvars, degree)
    leading, _ = _initial_space(weights, columns, polys, field)
    return leading


def _dead_monomials(ring: QuotientRing, d: int) -> frozenset[Monomial]:
    return frozenset(ambient_basis(ring.nvars, d)) - frozenset(ring.standard_basis(d))


def _one_step(ext: ExtensionRing, matrix: DistractionMatrix, weights: Sequence[int],
              pieces: list[frozenset[Monomial]], field: Field) -> list[frozenset[Monomial]]:
    """One leading-space-after-distraction pass, degree by degree, on the
    ambient-lifted pieces (which include the defining ideal's monomials)."""
    s = ext.ring
    out: list[frozenset[Monomial]] = []
    for d in range(s.cap + 1):
        dead = _dead_monomials(s, d)
        lifted = sorted(pieces[d] | dead, key=grlex_key)
        polys = [apply_distraction(matrix, m, field) for m in lifted]
        leading = frozenset(initial_space(weights, polys, s.nvars, d, field))
        if len(leading) != len(lifted):
            raise VerificationError(f"stabilization step lost dimension in degree {d}")
        if not dead <= leading:
            raise VerificationError(f"stabilization step moved the defining ideal in degree {d}")
        out.append(leading - dead)
    return out


def _iterate_to_fixpoint(ext: ExtensionRing, matrices: Sequence[DistractionMatrix],
                         weights: Sequence[int], ideal: MonomialIdeal,
                         field: Field) -> MonomialIdeal:
    s = ext.ring
    pieces = [frozenset(p) for p in ideal.pieces]
    budget = sum(len(s.standard_basis(d)) for d in range(s.cap + 1)) ** 2 + 1
    for _ in range(budget):
        before = pieces
        for matrix in matrices:
            pieces = _one_step(ext, matrix, weights, pieces, field)
        if pieces == before:
            break
    else:
        raise VerificationError("stabilization exceeded its iteration budget")
    out = MonomialIdeal.from_pieces(s, pieces)
    if out.hilbert_series() != ideal.hilbert_series():
        raise VerificationError("stabilization changed the Hilbert series")
    if ideal_z_stable(ext, out) is not None:
        raise VerificationError("stabilization terminated on a non-z-stable ideal")
    return out


def stabilize(ext: ExtensionRing, ideal: MonomialIdeal,
              field: Field = QQ) -> MonomialIdeal:
    """Make a monomial ideal of R[z] z-stable without changing its Hilbert
    series: repeatedly distract with ``z -> x_l + z`` in the first column
    and take the leading space for the weight that counts the base
    variables."""
    if ext.t is not None:
        raise PreconditionError("stabilize is the no-power-relation case; use stabilize_truncated")
    n = ext.base.nvars
    zrow = ext.ring.nvars - 1
    matrices = [DistractionMatrix(ext.ring.nvars, {(zrow, 1): {l: 1, zrow: 1}})
                for l in range(n)]
    weights = [1] * n + [0]
    return _iterate_to_fixpoint(ext, matrices, weights, ideal, field)


def stabilize_truncated(ext: ExtensionRing, ideal: MonomialIdeal,
                        config: FieldConfig | None = None) -> MonomialIdeal:
    """z-stabilization mod (z^t): needs every variable's t-th power in the
    base ideal, and a field with a primitive t-th root of unity; the z-row
    runs through ``x_j - zeta^k z`` for k = 0..t-1."""
    t = ext.t
    if t is None:
        raise PreconditionError("use stabilize for the no-power-relation case")
    base = ext.base
    for i in range(base.nvars):
        power = Monomial(tuple(t if j == i else 0 for j in range(base.nvars)))
        if not base.is_zero(power):
            raise PreconditionError(
                f"{base.var_names[i]}^{t} is not in the defining ideal; the truncated "
                "stabilization hypothesis fails")
    if config is None:
        config = FieldConfig.for_unity_root(t)
    if config.kind != "gf" or config.t != t:
        raise PreconditionError("stabilize_truncated needs a GF(p) config with matching t")
    fld = config.field()
    zeta = config.zeta if config.zeta is not None else fld.element_of_order(t)
    n = base.nvars
    zrow = ext.ring.nvars - 1
    matrices = []
    for j in range(n):
        overrides = {(zrow, k + 1): {j: 1, zrow: fld.sub(fld.zero, pow(zeta, k, config.p))}
                     for k in range(t)}
        matrices.append(DistractionMatrix(ext.ring.nvars, overrides, stable_from=t + 1))
    weights = [1] * n + [0]
    return _iterate_to_fixpoint(ext, matrices, weights, ideal, fld)


# --- polarization -------------------------------------------------------------

@dataclass(frozen=True)
class Polarization:
    """One partial polarization step: powers y^i with i >= threshold lose one
    y in favour of the new variable z."""

    avars: tuple[str, ...]
    bvars: tuple[str, ...]
    y_index: int
    threshold: int
    agens: tuple[Monomial, ...]
    bgens: tuple[Monomial, ...]

    def image(self, m: Monomial) -> Monomial:
        exps = list(m.exponents)
        i = exps[self.y_index]
        if i >= self.threshold:
            exps[self.y_index] -= 1
            return Monomial(exps + [1])
        return Monomial(exps + [0])


def polarize(avars: Sequence[str], gens: Iterable[Monomial], y: str, threshold: int,
             cap: int, zname: str | None = None) -> Polarization:
    """Polarize a monomial ideal at the variable y with the given threshold
    degree; verified both at the level of monomial images and through the
    (1 - q) Hilbert series identity up to cap."""
    if threshold < 1:
        raise PreconditionError("threshold degree must be >= 1")
    avars = tuple(avars)
    if y not in avars:
        raise PreconditionError(f"designated variable {y!r} not in the ring")
    if zname is None:
        zname = "z" if "z" not in avars else next(
            f"z{i}" for i in itertools.count(1) if f"z{i}" not in avars)
    pol = Polarization(avars, avars + (zname,), avars.index(y), threshold, (), ())
    agens = tuple(sorted(gens, key=grlex_key))
    bgens = tuple(pol.image(g) for g in agens)
    pol = Polarization(avars, avars + (zname,), avars.index(y), threshold, agens, bgens)

    aring = QuotientRing.create(avars, agens, cap)
    bring = QuotientRing.create(pol.bvars, bgens, cap)
    # soundness of polarizing only the generators: the image of every
    # monomial of the ideal must lie in the polarized ideal
    for e in range(cap + 1):
        for m in _degree_monomials(len(avars), e):
            if aring.is_zero(m) and not bring.is_zero(pol.image(m)):
                raise VerificationError(f"generator-level polarization unsound at {m}")
    hA = aring.ring_series()
    hB = bring.ring_series()
    for e in range(cap + 1):
        lhs = hA[e]
        rhs = hB[e] - (hB[e - 1] if e > 0 else 0)
        if lhs != rhs:
            raise VerificationError(f"polarized ring breaks the series identity in degree {e}")
    return pol


def _binomial_z_to_yz(m: Monomial, y_index: int, z_index: int,
                      field: Field) -> dict[Monomial, object]:
    """Substitute z -> y + z in a monomial of the polarized ring."""
    k = m.exponents[z_index]
    base = list(m.exponents)
    base[z_index] = 0
    out: dict[Monomial, object] = {}
    for j in range(k + 1):
        exps = list(base)
        exps[y_index] += k - j
        exps[z_index] += j
        out[Monomial(exps)] = field.from_int(comb(k, j))
    return out


def polarization_embedding(base_order: GradedOrder, y: str, threshold: int,
                           cap: int | None = None) -> tuple[GradedOrder, Polarization]:
    """Transport an embedding order of R = A/a to the polarized quotient
    B/p(a): extend to R[z], distract the y-row at the threshold column by
    y + z, and take leading spaces for the weight that favours z.

    Every intermediate identity is checked exactly: the image of the
    defining ideal is the polarized ideal degree by degree, the transported
    prefixes grow one monomial at a time, undoing the coordinate change
    z -> y + z recovers the extended ideal, and the final order passes the
    embedding checker.
    """
    ring = base_order.ring
    if cap is None:
        cap = ring.cap
    certify(base_order)
    ext = ExtensionRing.create(base_order, None, cap)
    tau = extended_order(ext)
    flat = materialize_truncation(ring)
    pol = polarize(ring.var_names, flat.generators, y, threshold, cap, zname=ext.zvar)
    s_ring = QuotientRing.create(pol.bvars, pol.bgens, cap)
    n = len(pol.bvars)
    y_idx, z_idx = pol.y_index, n - 1
    matrix = DistractionMatrix(n, {(y_idx, threshold): {y_idx: 1, z_idx: 1}})
    weights = [0] * n
    weights[z_idx] = 1
    listings: list[tuple[Monomial, ...]] = []
    for e in range(cap + 1):
        dead_ext = _dead_monomials(ext.ring, e)
        dead_s = _dead_monomials(s_ring, e)
        prev: frozenset[Monomial] = frozenset()
        listing: list[Monomial] = []
        for r in range(len(tau.per_degree[e]) + 1):
            lifted = sorted(set(tau.prefix(e, r)) | dead_ext, key=grlex_key)
            polys = [apply_distraction(matrix, m, QQ) for m in lifted]
            image = frozenset(initial_space(weights, polys, n, e, QQ))
            if r == 0:
                if image != dead_s:
                    raise VerificationError(
                        f"distracted defining ideal is not the polarized ideal in degree {e}")
            else:
                fresh = image - prev
                if not prev <= image or len(fresh) != 1:
                    raise VerificationError(f"transported prefixes do not nest in degree {e}")
                listing.append(next(iter(fresh)))
            prev = image
        listings.append(tuple(listing))
    order = GradedOrder(s_ring, tuple(listings))
    _check_polarization_coordinate_change(pol, s_ring, ext.ring, cap)
    certify(order)
    return order, pol


def _check_polarization_coordinate_change(pol: Polarization, s_ring: QuotientRing,
                                          ext_ring: QuotientRing, cap: int) -> None:
    """Undoing z -> y + z on the polarized ideal and taking the leading
    space for the weight that ignores z must recover the extended ideal."""
    n = len(pol.bvars)
    weights = [1] * n
    weights[-1] = 0
    for e in range(cap + 1):
        polarized = sorted(_dead_monomials(s_ring, e), key=grlex_key)
        polys = [_binomial_z_to_yz(m, pol.y_index, n - 1, QQ) for m in polarized]
        lead = frozenset(initial_space(weights, polys, n, e, QQ))
        if lead != _dead_monomials(ext_ring, e):
            raise VerificationError(
                f"coordinate-change identity fails for the polarization in degree {e}")


# --- distraction transfer -------------------------------------------------------

@dataclass(frozen=True)
class DistractedRing:
    """Quotient of the polynomial ring by a distracted monomial ideal: the
    ideal is stored degreewise as row-reduced spaces, the standard basis is
    the one of the original monomial quotient."""

    var_names: tuple[str, ...]
    cap: int
    ideal_spaces: tuple[PolySpace, ...]
    standard: tuple[tuple[Monomial, ...], ...]
    field: Field

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def growth_space(self, d: int, monomials: Iterable[Monomial]) -> PolySpace:
        """Span of (V + ideal_d) multiplied by all variables, plus the
        degree-(d+1) ideal piece."""
        polys = [{m: self.field.one} for m in monomials] + list(self.ideal_spaces[d].row_polys())
        shifted = []
        for poly in polys:
            for v in range(self.nvars):
                unit = Monomial(tuple(1 if j == v else 0 for j in range(self.nvars)))
                shifted.append({m.mul(unit): c for m, c in poly.items()})
        columns = self.ideal_spaces[d + 1].columns
        return PolySpace.span(d + 1, columns,
                              shifted + list(self.ideal_spaces[d + 1].row_polys()), self.field)

    def residue_span(self, d: int, monomials: Iterable[Monomial]) -> PolySpace:
        polys = [{m: self.field.one} for m in monomials] + list(self.ideal_spaces[d].row_polys())
        return PolySpace.span(d, self.ideal_spaces[d].columns, polys, self.field)


@dataclass(frozen=True)
class DistractionTransfer:
    """An embedding transported to the quotient by a distracted ideal.

    The filtration spaces are spans of distracted base-order prefixes (plus
    the distracted defining ideal); they are generally not spans of
    monomials, so the listing kept here is their leading-weight shadow: the
    leading space of filtration_space(d, r) is exactly the span of the first
    r listed monomials together with the original defining ideal.
    """

    base_order: GradedOrder
    matrix: DistractionMatrix
    ring: DistractedRing
    per_degree: tuple[tuple[Monomial, ...], ...]
    field: Field

    def filtration_space(self, d: int, r: int) -> PolySpace:
        """Distracted span of the rank-r base prefix, plus the distracted
        defining ideal, in degree d."""
        polys = [apply_distraction(self.matrix, m, self.field) for m in self.per_degree[d][:r]]
        polys += list(self.ring.ideal_spaces[d].row_polys())
        return PolySpace.span(d, self.ring.ideal_spaces[d].columns, polys, self.field)

    def embedded_spaces(self, series: Sequence[int]) -> list[PolySpace]:
        """The distracted image of the base embedding of the series."""
        from .orders import embed
        ideal = embed(self.base_order, series)
        out = []
        for d in range(self.ring.cap + 1):
            polys = [apply_distraction(self.matrix, m, self.field)
                     for m in sorted(ideal.pieces[d], key=grlex_key)]
            polys += list(self.ring.ideal_spaces[d].row_polys())
            space = PolySpace.span(d, self.ring.ideal_spaces[d].columns, polys, self.field)
            if space.dim != len(ideal.pieces[d]) + self.ring.ideal_spaces[d].dim:
                raise VerificationError(f"distracted image lost dimension in degree {d}")
            out.append(space)
        return out


def distraction_embedding(base_order: GradedOrder, matrix: DistractionMatrix,
                          cap: int | None = None, field: Field = QQ) -> DistractionTransfer:
    """Transport an embedding order through a distraction whose only varying
    row is the first variable's (every entry keeping that variable's
    coefficient nonzero)."""
    ring = base_order.ring
    if cap is None:
        cap = ring.cap
    certify(base_order)
    n = ring.nvars
    if matrix.nvars != n:
        raise PreconditionError("matrix size does not match the ring")
    for (row, _), form in matrix.overrides.items():
        if row != 0:
            raise PreconditionError("only the first variable's row may vary")
        if not form.get(0, 0):
            raise PreconditionError("every entry must involve the first variable")
    flat = materialize_truncation(ring)
    pieces = {d: [m for m in ambient_basis(n, d) if flat.is_zero(m)] for d in range(cap + 1)}
    spaces = distraction_ideal(matrix, pieces, cap, field)
    weights = [1] + [0] * (n - 1)
    for d in range(cap + 1):
        lead = frozenset(initial_space(weights, list(spaces[d].row_polys()), n, d, field))
        if lead != frozenset(pieces[d]):
            raise VerificationError(
                f"leading space of the distracted ideal is not the original in degree {d}")
    distracted = DistractedRing(ring.var_names, cap, tuple(spaces[d] for d in range(cap + 1)),
                                tuple(ring.standard_basis(d) for d in range(cap + 1)), field)
    transfer = DistractionTransfer(base_order, matrix, distracted,
                                   tuple(base_order.per_degree[d] for d in range(cap + 1)), field)
    _verify_distracted_order(transfer)
    return transfer


def _verify_distracted_order(transfer: DistractionTransfer) -> None:
    """Embedding-filtration conditions for the distracted filtration: the
    growth of every member is again a member, of the minimum dimension the
    base ring allows.  Also re-checks that the leading-weight shadow of each
    member is the corresponding monomial prefix."""
    ring = transfer.ring
    base = transfer.base_order.ring
    n = ring.nvars
    weights = [1] + [0] * (n - 1)
    for d in range(ring.cap + 1):
        next_members: dict[int, PolySpace] = {}
        jdim = ring.ideal_spaces[d + 1].dim if d < ring.cap else 0
        for r in range(len(transfer.per_degree[d]) + 1):
            member = transfer.filtration_space(d, r)
            shadow = frozenset(initial_space(weights, list(member.row_polys()), n, d,
                                             transfer.field))
            expected = frozenset(transfer.per_degree[d][:r]) | frozenset(
                m for m in ambient_basis(n, d) if m not in set(base.standard_basis(d)))
            if shadow != expected:
                raise VerificationError(
                    f"filtration shadow mismatch at degree {d}, rank {r}")
            if d == ring.cap:
                continue
            shifted = []
            for poly in member.row_polys():
                for v in range(n):
                    unit = Monomial(tuple(1 if j == v else 0 for j in range(n)))
                    shifted.append({m.mul(unit): c for m, c in poly.items()})
            grown = PolySpace.span(d + 1, ring.ideal_spaces[d + 1].columns,
                                   shifted + list(ring.ideal_spaces[d + 1].row_polys()),
                                   transfer.field)
            gdim = grown.dim - jdim
            if r > 0 and gdim != base.min_growth_oracle(d, r):
                raise VerificationError(
                    f"distracted growth is not minimal at degree {d}, rank {r}")
            if gdim not in next_members:
                next_members[gdim] = transfer.filtration_space(d + 1, gdim)
            if grown.rows != next_members[gdim].rows:
                raise VerificationError(
                    f"distracted growth is not a filtration member at degree {d}, rank {r}")


# --- truncated extensions --------------------------------------------------------

@dataclass(frozen=True)
class TruncatedExtension:
    ext: ExtensionRing
    order: GradedOrder
    certificate: EmbeddingCertificate


def clements_lindstrom_extend(base_order: GradedOrder, t: int | None,
                              cap: int | None = None,
                              sample_ideals: int = 0, seed: int = 7) -> TruncatedExtension:
    """Extend an embedding order of R (with every variable's t-th power in
    the defining ideal) to R[z]/(z^t): the segment order, independently
    certified by the embedding checker.  Optionally round-trips randomly
    sampled ideals through stabilization and the segment replacement."""
    ring = base_order.ring
    if t is not None:
        for i in range(ring.nvars):
            power = Monomial(tuple(t if j == i else 0 for j in range(ring.nvars)))
            if not ring.is_zero(power):
                raise PreconditionError(
                    f"{ring.var_names[i]}^{t} is not in the defining ideal")
    ext = ExtensionRing.create(base_order, t, cap)
    order = extended_order(ext)
    cert = certify(order)
    if sample_ideals:
        import random
        rng = random.Random(seed)
        s = ext.ring
        pool = [m for d in range(1, s.cap + 1) for m in s.standard_basis(d)]
        for _ in range(sample_ideals):
            gens = rng.sample(pool, rng.randint(1, 3))
            ideal = MonomialIdeal.from_generators(s, gens)
            stable = (stabilize(ext, ideal) if t is None
                      else stabilize_truncated(ext, ideal))
            image = extend_embedding(ext, stable)
            if image.hilbert_series() != ideal.hilbert_series():
                raise VerificationError("sampled ideal lost its Hilbert series in the round trip")
    return TruncatedExtension(ext, order, cert)
