"""Exact linear algebra over the rationals or a prime field, on spaces of
homogeneous polynomials with monomial columns.

Everything is dense and small: matrices here have at most a few hundred
columns (the monomials of one degree), so plain fraction/modular row
reduction is both exact and fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import PreconditionError, VerificationError
from .rings import Monomial, grlex_key


class Field:
    """Arithmetic hooks shared by the rational and prime-field backends."""

    def from_int(self, n: int):
        raise NotImplementedError

    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError


class Rationals(Field):
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = Rationals()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


class PrimeField(Field):
    """GF(p) with elements as ints in 0..p-1."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError
        return pow(a, self.p - 2, self.p)

    def element_of_order(self, t: int) -> int:
        """A multiplicative element of exact order t (requires t | p-1)."""
        if (self.p - 1) % t != 0:
            raise PreconditionError(f"no element of order {t} in GF({self.p})")
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // q, self.p) != 1 for q in _prime_factors(self.p - 1)):
                zeta = pow(g, (self.p - 1) // t, self.p)
                return zeta
        raise VerificationError(f"no primitive root found in GF({self.p})")

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def smallest_prime_with_unity_root(t: int, bound: int = 100_000) -> int:
    """Smallest prime p with p = 1 (mod t), so GF(p) has a primitive t-th
    root of unity."""
    p = 2
    while p < bound:
        if _is_prime(p) and (p - 1) % t == 0:
            return p
        p += 1
    raise VerificationError(f"no prime = 1 mod {t} below {bound}")


Poly = Mapping[Monomial, object]  # coefficients in the active field


def rref(rows: list[list], field: Field) -> list[list]:
    """Reduced row echelon form; drops zero rows, canonical for the space."""
    rows = [list(r) for r in rows]
    out: list[list] = []
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pivot_row = next((i for i, r in enumerate(rows) if r[col] != field.zero), None)
        if pivot_row is None:
            col += 1
            continue
        row = rows.pop(pivot_row)
        inv = field.inv(row[col])
        row = [field.mul(inv, c) for c in row]
        for other in rows:
            if other[col] != field.zero:
                factor = other[col]
                for j in range(col, ncols):
                    other[j] = field.sub(other[j], field.mul(factor, row[j]))
        for other in out:
            if other[col] != field.zero:
                factor = other[col]
                for j in range(col, ncols):
                    other[j] = field.sub(other[j], field.mul(factor, row[j]))
        out.append(row)
        pivots.append(col)
        col += 1
    order = sorted(range(len(out)), key=lambda i: pivots[i])
    return [out[i] for i in order]


@dataclass(frozen=True)
class PolySpace:
    """Row-reduced span of homogeneous polynomials of one degree.

    Columns are the degree-d monomials of the ambient polynomial ring in a
    fixed order (grlex listing), so equal spaces have identical rows.
    """

    degree: int
    columns: tuple[Monomial, ...]
    rows: tuple[tuple, ...]
    field: Field

    @classmethod
    def span(cls, degree: int, columns: Sequence[Monomial], polys: Iterable[Poly],
             field: Field) -> "PolySpace":
        index = {m: i for i, m in enumerate(columns)}
        dense = []
        for poly in polys:
            row = [field.zero] * len(columns)
            for m, c in poly.items():
                c = field.from_int(c) if isinstance(c, int) else c
                if c != field.zero:
                    if m not in index:
                        raise PreconditionError(f"monomial {m} outside the degree-{degree} columns")
                    row[index[m]] = field.add(row[index[m]], c)
            dense.append(row)
        reduced = rref(dense, field)
        return cls(degree, tuple(columns), tuple(tuple(r) for r in reduced), field)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, poly: Poly) -> bool:
        probe = PolySpace.span(self.degree, self.columns, list(self.row_polys()) + [poly], self.field)
        return probe.dim == self.dim

    def contains_space(self, other: "PolySpace") -> bool:
        if other.columns != self.columns:
            raise PreconditionError("spaces over different column sets")
        merged = rref([list(r) for r in self.rows + other.rows], self.field)
        return len(merged) == self.dim

    def row_polys(self) -> Iterable[Poly]:
        for row in self.rows:
            yield {m: c for m, c in zip(self.columns, row) if c != self.field.zero}

    def plus(self, other: "PolySpace") -> "PolySpace":
        if other.columns != self.columns:
            raise PreconditionError("spaces over different column sets")
        merged = rref([list(r) for r in self.rows + other.rows], self.field)
        return PolySpace(self.degree, self.columns, tuple(tuple(r) for r in merged), self.field)

    def monomial_rows(self) -> tuple[Monomial, ...] | None:
        """The spanning monomials if the space is a coordinate subspace,
        else None."""
        out = []
        for row in self.rows:
            support = [m for m, c in zip(self.columns, row) if c != self.field.zero]
            if len(support) != 1:
                return None
            out.append(support[0])
        return tuple(sorted(out, key=grlex_key))


def degree_columns(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(monomials, key=grlex_key))


def poly_mul_monomial(poly: Poly, m: Monomial) -> dict[Monomial, object]:
    return {pm.mul(m): c for pm, c in poly.items()}


def poly_mul(a: Poly, b: Poly, field: Field) -> dict[Monomial, object]:
    out: dict[Monomial, object] = {}
    for ma, ca in a.items():
        ca = field.from_int(ca) if isinstance(ca, int) else ca
        for mb, cb in b.items():
            cb = field.from_int(cb) if isinstance(cb, int) else cb
            m = ma.mul(mb)
            out[m] = field.add(out.get(m, field.zero), field.mul(ca, cb))
    return {m: c for m, c in out.items() if c != field.zero}


def initial_space(weights: Sequence[int], columns: Sequence[Monomial],
                  polys: Iterable[Poly], field: Field) -> tuple[tuple[Monomial, ...], "PolySpace"]:
    """Leading-weight space of a span of degree-d forms.

    Columns are re-sorted by weight (descending, grlex tiebreak); after row
    reduction, a row with pivot in the weight-a stratum contributes its
    weight-a part.  Per stratum the contributions are reduced again and must
    come out as single monomials; the full list of those monomials (one per
    row, so the dimension is preserved) is returned together with the
    underlying reduced space.
    """
    def weight(m: Monomial) -> int:
        return sum(w * e for w, e in zip(weights, m.exponents))

    ordered = tuple(sorted(columns, key=lambda m: (-weight(m), grlex_key(m))))
    space = PolySpace.span(0 if not ordered else ordered[0].degree, ordered, polys, field)
    by_stratum: dict[int, list[list]] = {}
    for row in space.rows:
        pivot = next(i for i, c in enumerate(row) if c != field.zero)
        a = weight(ordered[pivot])
        part = [c if weight(m) == a else field.zero for m, c in zip(ordered, row)]
        by_stratum.setdefault(a, []).append(part)
    leading: list[Monomial] = []
    for a, rows in sorted(by_stratum.items(), reverse=True):
        for row in rref(rows, field):
            support = [m for m, c in zip(ordered, row) if c != field.zero]
            if len(support) != 1:
                raise VerificationError(
                    f"leading-weight space is not spanned by monomials in stratum {a}")
            leading.append(support[0])
    if len(leading) != space.dim:
        raise VerificationError("leading space lost dimension")
    return tuple(sorted(leading, key=grlex_key)), space
