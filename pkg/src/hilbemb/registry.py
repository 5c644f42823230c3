"""Built-in example rings with executable golden claims.

Each record builds its ring and runs a list of named checks; the runner
reports one pass/fail line per claim.  The records double as regression
anchors for the library: series values, growth numbers, existence and
non-existence statements that are all reproducible by brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable

from .bounds import cl_min_growth, lex_segment, macaulay_min_growth
from .errors import HilbembError
from .orders import (GradedOrder, embed, find_embedding_order, gotzmann_check,
                     hilbert_poset, is_embedding_order, lattice_check)
from .rings import (Monomial, MonomialIdeal, QuotientRing,
                    enumerate_monomial_ideals, series_realizable)


@dataclass(frozen=True)
class Claim:
    label: str
    run: Callable[[], tuple[bool, Any]]


@dataclass(frozen=True)
class ExampleRecord:
    id: str
    description: str
    build_ring: Callable[[], QuotientRing | None]
    claims: Callable[[], list[Claim]]


def _mono(var_names, **exps) -> Monomial:
    return Monomial(tuple(exps.get(v, 0) for v in var_names))


def tensor_ring() -> QuotientRing:
    v = ("x", "y", "z")
    gens = [_mono(v, x=3), _mono(v, x=2, y=1), _mono(v, x=1, y=2), _mono(v, y=3), _mono(v, z=2)]
    return QuotientRing.create(v, gens, cap=3, truncate_above=3)


def strongly_stable_ring(cap: int = 5) -> QuotientRing:
    v = ("x1", "x2", "x3")
    sq12 = [_mono(v, x1=2), _mono(v, x1=1, x2=1), _mono(v, x2=2)]
    sq123 = []
    for a, b in itertools.combinations_with_replacement(v, 2):
        sq123.append(_mono(v, **({a: 2} if a == b else {a: 1, b: 1})))
    return QuotientRing.create(v, [p.mul(q) for p in sq12 for q in sq123], cap=cap)


def groebner_flag_ring() -> QuotientRing:
    v = tuple(f"x{i}" for i in range(1, 7))
    pairs = [("x1", "x1"), ("x1", "x2"), ("x1", "x3"), ("x1", "x4"),
             ("x2", "x2"), ("x2", "x3"), ("x3", "x3"),
             ("x4", "x4"), ("x4", "x5"), ("x5", "x5"), ("x5", "x6")]
    gens = [_mono(v, **({a: 2} if a == b else {a: 1, b: 1})) for a, b in pairs]
    return QuotientRing.create(v, gens, cap=3)


def wxyz_ring() -> QuotientRing:
    v = ("w", "x", "y", "z")
    gens = [_mono(v, w=1, x=1, y=1), _mono(v, w=1, x=1, z=1),
            _mono(v, w=1, y=1, z=1), _mono(v, x=1, y=1, z=1)]
    return QuotientRing.create(v, gens, cap=4, truncate_above=3)


def wxyz_order(ring: QuotientRing) -> GradedOrder:
    v = ring.var_names

    def m(**exps):
        return _mono(v, **exps)

    deg2 = [m(w=1, x=1), m(w=1, y=1), m(w=2), m(w=1, z=1), m(x=1, y=1),
            m(x=2), m(x=1, z=1), m(y=2), m(y=1, z=1), m(z=2)]
    deg3 = [m(w=2, x=1), m(w=1, x=2), m(w=2, y=1), m(w=1, y=2), m(w=3),
            m(w=2, z=1), m(w=1, z=2), m(x=2, y=1), m(x=1, y=2), m(x=3),
            m(x=2, z=1), m(x=1, z=2), m(y=3), m(y=2, z=1), m(y=1, z=2), m(z=3)]
    return GradedOrder.from_listings(ring, {1: [m(w=1), m(x=1), m(y=1), m(z=1)],
                                            2: deg2, 3: deg3})


def gotzmann_ring() -> QuotientRing:
    return QuotientRing.create(("x", "y"), [Monomial((3, 0))], cap=4)


def _series_claim(ring: QuotientRing, gens: list[Monomial], expected: tuple[int, ...],
                  label: str) -> Claim:
    def run():
        got = tuple(MonomialIdeal.from_generators(ring, gens).hilbert_series())
        return got == expected, {"expected": list(expected), "got": list(got)}
    return Claim(label, run)


def _absence_claim(ring: QuotientRing, series: tuple[int, ...], label: str) -> Claim:
    def run():
        exists = series_realizable(ring, series)
        return not exists, {"series": list(series), "attained": exists}
    return Claim(label, run)


def _tensor_claims() -> list[Claim]:
    ring = tensor_ring()
    v = ring.var_names
    witness_series = (0, 1, 2, 2)

    def witness_run():
        witness = lattice_check(ring)
        ok = (witness is not None and witness.missing == "min"
              and tuple(witness.missing_series) == witness_series)
        detail = None if witness is None else {
            "pair": [list(witness.first), list(witness.second)],
            "missing": witness.missing, "missing_series": list(witness.missing_series)}
        return ok, detail

    return [
        _series_claim(ring, [_mono(v, x=1)], (0, 1, 3, 2), "series of the ideal (x)"),
        _series_claim(ring, [_mono(v, z=1)], (0, 1, 2, 3), "series of the ideal (z)"),
        _absence_claim(ring, witness_series, "no monomial ideal attains (0,1,2,2)"),
        Claim("lattice closure fails with pointwise minimum (0,1,2,2)", witness_run),
    ]


def _strongly_stable_claims() -> list[Claim]:
    ring = strongly_stable_ring()
    v = ring.var_names
    four = strongly_stable_ring(cap=4)
    return [
        _series_claim(ring, [_mono(v, x1=2), _mono(v, x1=1, x2=1), _mono(v, x2=2)],
                      (0, 0, 3, 7, 0, 0), "series of (x1^2, x1*x2, x2^2)"),
        _series_claim(ring, [_mono(v, x1=2), _mono(v, x1=1, x2=1), _mono(v, x1=1, x3=1)],
                      (0, 0, 3, 6, 1, 1), "series of (x1^2, x1*x2, x1*x3)"),
        _absence_claim(four, (0, 0, 3, 6, 0), "no monomial ideal attains (0,0,3,6,0)"),
    ]


def _groebner_flag_claims() -> list[Claim]:
    ring = groebner_flag_ring()
    v = ring.var_names
    return [
        _series_claim(ring, [_mono(v, x1=1)], (0, 1, 2, 1), "series of the ideal (x1)"),
        _series_claim(ring, [_mono(v, x5=1)], (0, 1, 3, 0), "series of the ideal (x5)"),
        _absence_claim(ring, (0, 1, 2, 0), "no monomial ideal attains (0,1,2,0)"),
    ]


def _wxyz_claims() -> list[Claim]:
    ring = wxyz_ring()
    v = ring.var_names

    def growth_run():
        g_w2 = len(ring.growth([_mono(v, w=2)]))
        g_wx = len(ring.growth([_mono(v, w=1, x=1)]))
        return (g_w2, g_wx) == (4, 2), {"w^2": g_w2, "w*x": g_wx}

    def order_run():
        violation = is_embedding_order(wxyz_order(ring))
        return violation is None, None if violation is None else repr(violation)

    def forced_run():
        result = find_embedding_order(ring, forced_prefixes={2: [_mono(v, w=2)]})
        return result.order is None and result.exhaustive, {"exhaustive": result.exhaustive}

    return [
        Claim("the square of the first variable grows to 4, the first product to 2", growth_run),
        Claim("the listed degree-2/3 order is an embedding order", order_run),
        Claim("no embedding order starts with the square of the first variable", forced_run),
    ]


def _gotzmann_claims() -> list[Claim]:
    ring = gotzmann_ring()
    order = GradedOrder.grlex(ring)
    ideal = MonomialIdeal.from_generators(ring, [Monomial((0, 1))])

    def image_run():
        image = embed(order, ideal.hilbert_series())
        gens = image.minimal_generators()
        return gens == (Monomial((1, 0)), Monomial((0, 3))), [g.exponents for g in gens]

    def profile_run():
        image = embed(order, ideal.hilbert_series())
        profile = {j: image.betti1(j) for j in range(5) if image.betti1(j)}
        return profile == {1: 1, 3: 1}, {str(k): v for k, v in profile.items()}

    def persistence_run():
        result = gotzmann_check(order, ideal, 1)
        return (not result.holds and result.witness_degree == 3), {
            "holds": result.holds, "witness_degree": result.witness_degree}

    return [
        Claim("the embedded image of (y) is (x, y^3)", image_run),
        Claim("the image has generator degrees 1 and 3", profile_run),
        Claim("generator-degree persistence fails at degree 3", persistence_run),
    ]


def _cl_kk_grid_claims() -> list[Claim]:
    cases = [((2, 2), 2), ((2, 3), 2), ((2, 2, 2), 2), ((None, None), 2), ((2, 3, None), 2)]

    def grid_run():
        checked = 0
        for bounds, dmax in cases:
            names = tuple(f"x{i}" for i in range(len(bounds)))
            gens = []
            for i, e in enumerate(bounds):
                if e is not None:
                    gens.append(Monomial(tuple(e if j == i else 0 for j in range(len(bounds)))))
            ring = QuotientRing.create(names, gens, cap=dmax + 1)
            for d in range(1, dmax + 1):
                for r in range(len(ring.standard_basis(d)) + 1):
                    expected = ring.min_growth_oracle(d, r)
                    got = (macaulay_min_growth(len(bounds), d, r)
                           if all(e is None for e in bounds)
                           else cl_min_growth(bounds, d, r))
                    if got != expected:
                        return False, {"bounds": list(bounds), "d": d, "r": r,
                                       "lex": got, "oracle": expected}
                    checked += 1
        return True, {"grid_points": checked}

    return [Claim("lex-segment growth matches the exhaustive minimum on the grid", grid_run)]


REGISTRY: dict[str, ExampleRecord] = {
    rec.id: rec for rec in [
        ExampleRecord("tensor-product",
                      "three-variable quotient whose attainable series are not a lattice",
                      tensor_ring, _tensor_claims),
        ExampleRecord("strongly-stable",
                      "strongly stable quotient where a pointwise minimum is unattained",
                      strongly_stable_ring, _strongly_stable_claims),
        ExampleRecord("grobner-flag",
                      "six-variable flag algebra with an unattained intermediate series",
                      groebner_flag_ring, _groebner_flag_claims),
        ExampleRecord("wxyz-embedding",
                      "four-variable ring with an embedding order but no monomial one",
                      wxyz_ring, _wxyz_claims),
        ExampleRecord("gotzmann-counterexample",
                      "generator-degree persistence fails through the embedding",
                      gotzmann_ring, _gotzmann_claims),
        ExampleRecord("cl-kk-grid",
                      "lex-segment growth equals the exhaustive minimum over a parameter grid",
                      lambda: None, _cl_kk_grid_claims),
    ]
}


def run_example(example_id: str) -> dict:
    """Execute every claim of a registered example; a machine-readable
    per-claim verdict plus an overall status."""
    if example_id not in REGISTRY:
        raise HilbembError(f"unknown example {example_id!r}; known: {sorted(REGISTRY)}")
    record = REGISTRY[example_id]
    results = []
    for claim in record.claims():
        ok, detail = claim.run()
        results.append({"claim": claim.label, "status": "pass" if ok else "fail",
                        "detail": detail})
    return {
        "example": record.id,
        "description": record.description,
        "claims": results,
        "status": "pass" if all(r["status"] == "pass" for r in results) else "fail",
    }
