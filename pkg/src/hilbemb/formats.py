"""JSON file formats and canonical reports.

Ring file:   {"vars": ["w","x"], "relations": ["w*x^2"], "cap": 4,
              "truncate_above": 3}
Ideal file:  {"gens": ["x*y^2", "z^3"]}
Order file:  {"degrees": {"1": ["w","x"], "2": ["w*x", "w^2", "x^2"]}}
Matrix file: {"rows": {"z": {"1": "x+z"}}, "N": 2}

Monomials follow ``ident('^'uint)? ('*' ident('^'uint)?)*`` with "1" for the
unit.  Unknown fields are rejected so typos in hand-written files surface
immediately.  Reports carry a schema version and canonicalize to the same
bytes for the same inputs.
"""

from __future__ import annotations

import hashlib
import json
import re
from typing import Any, Mapping, Sequence

from .errors import ParseError
from .orders import GradedOrder
from .rings import HilbertSeries, Monomial, MonomialIdeal, QuotientRing, grlex_key

SCHEMA = "1"

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _check_keys(obj: Mapping[str, Any], allowed: set[str], required: set[str], what: str) -> None:
    if not isinstance(obj, Mapping):
        raise ParseError(f"{what}: expected a JSON object")
    unknown = set(obj) - allowed - {"schema"}
    if unknown:
        raise ParseError(f"{what}: unknown fields {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ParseError(f"{what}: missing fields {sorted(missing)}")
    if "schema" in obj and str(obj["schema"]) != SCHEMA:
        raise ParseError(f"{what}: unsupported schema {obj['schema']!r}")


def parse_monomial(text: str, var_names: Sequence[str]) -> Monomial:
    """Parse ``x^2*y`` over the given variables; exponents accumulate."""
    index = {v: i for i, v in enumerate(var_names)}
    exps = [0] * len(var_names)
    text = text.strip()
    if text == "1":
        return Monomial(exps)
    for factor in text.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        name, _, power = factor.partition("^")
        name = name.strip()
        if not _IDENT.match(name):
            raise ParseError(f"bad monomial factor {factor!r}")
        if name not in index:
            raise ParseError(f"unknown variable {name!r} in monomial {text!r}")
        if power:
            power = power.strip()
            if not power.isdigit():
                raise ParseError(f"bad exponent in factor {factor!r}")
            exps[index[name]] += int(power)
        else:
            exps[index[name]] += 1
    return Monomial(exps)


def monomial_str(m: Monomial, var_names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(var_names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_ring(obj: Mapping[str, Any]) -> QuotientRing:
    _check_keys(obj, {"vars", "relations", "cap", "truncate_above"}, {"vars", "cap"}, "ring file")
    var_names = obj["vars"]
    if not isinstance(var_names, list) or any(
            not isinstance(v, str) or not _IDENT.match(v) for v in var_names):
        raise ParseError("ring file: 'vars' must be a list of identifiers")
    cap = obj["cap"]
    if not isinstance(cap, int) or cap < 0:
        raise ParseError("ring file: 'cap' must be a non-negative integer")
    trunc = obj.get("truncate_above")
    if trunc is not None and (not isinstance(trunc, int) or trunc < -1):
        raise ParseError("ring file: 'truncate_above' must be an integer >= -1")
    gens = [parse_monomial(s, var_names) for s in obj.get("relations", [])]
    for s, g in zip(obj.get("relations", []), gens):
        if g.degree <= 1:
            raise ParseError(f"ring file: relation {s!r} has degree {g.degree}; need degree >= 2")
    return QuotientRing.create(tuple(var_names), gens, cap, trunc)


def ring_to_json(ring: QuotientRing) -> dict[str, Any]:
    out: dict[str, Any] = {
        "schema": SCHEMA,
        "vars": list(ring.var_names),
        "relations": [monomial_str(g, ring.var_names) for g in ring.generators],
        "cap": ring.cap,
    }
    if ring.truncate_above is not None:
        out["truncate_above"] = ring.truncate_above
    return out


def parse_ideal(obj: Mapping[str, Any], ring: QuotientRing) -> MonomialIdeal:
    _check_keys(obj, {"gens"}, {"gens"}, "ideal file")
    gens = [parse_monomial(s, ring.var_names) for s in obj["gens"]]
    return MonomialIdeal.from_generators(ring, gens)


def ideal_to_json(ideal: MonomialIdeal) -> dict[str, Any]:
    names = ideal.ring.var_names
    return {"schema": SCHEMA,
            "gens": [monomial_str(g, names) for g in ideal.minimal_generators()]}


def parse_order(obj: Mapping[str, Any], ring: QuotientRing) -> GradedOrder:
    _check_keys(obj, {"degrees"}, {"degrees"}, "order file")
    degrees = obj["degrees"]
    if not isinstance(degrees, Mapping):
        raise ParseError("order file: 'degrees' must map degree to a monomial list")
    listings = {}
    for key, listing in degrees.items():
        try:
            d = int(key)
        except (TypeError, ValueError):
            raise ParseError(f"order file: bad degree key {key!r}")
        if not 0 <= d <= ring.cap:
            raise ParseError(f"order file: degree {d} outside 0..{ring.cap}")
        monos = [parse_monomial(s, ring.var_names) for s in listing]
        basis = set(ring.standard_basis(d))
        extra = [m for m in monos if m not in basis]
        if extra:
            raise ParseError(
                f"order file: {monomial_str(extra[0], ring.var_names)!r} is not a degree-{d} "
                "standard monomial")
        missing = basis - set(monos)
        if missing:
            name = monomial_str(sorted(missing, key=grlex_key)[0], ring.var_names)
            raise ParseError(f"order file: degree {d} is missing monomial {name!r}")
        if len(monos) != len(basis):
            raise ParseError(f"order file: degree {d} lists a monomial twice")
        listings[d] = monos
    try:
        return GradedOrder.from_listings(ring, listings)
    except ValueError as exc:
        raise ParseError(f"order file: {exc}")


def order_to_json(order: GradedOrder) -> dict[str, Any]:
    names = order.ring.var_names
    return {"schema": SCHEMA,
            "degrees": {str(d): [monomial_str(m, names) for m in listing]
                        for d, listing in enumerate(order.per_degree)}}


def parse_series(text: str) -> HilbertSeries:
    try:
        return HilbertSeries(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"bad series {text!r}; expected comma-separated integers")


def parse_exponent_bounds(text: str) -> tuple[int | None, ...]:
    out: list[int | None] = []
    for part in text.split(","):
        part = part.strip().lower()
        out.append(None if part in ("inf", "infinity", "*") else int(part))
    return tuple(out)


_TERM = re.compile(r"^\s*([+-]?)\s*(?:(\d+)\s*\*?\s*)?([A-Za-z_][A-Za-z0-9_]*)\s*$")


def parse_linear_form(text: str, var_names: Sequence[str]) -> dict[int, int]:
    """``x + 2*z`` or ``x - z`` as a map from variable index to coefficient."""
    index = {v: i for i, v in enumerate(var_names)}
    out: dict[int, int] = {}
    chunks = re.split(r"(?=[+-])", text.replace(" ", ""))
    for chunk in chunks:
        if not chunk:
            continue
        m = _TERM.match(chunk)
        if not m:
            raise ParseError(f"bad linear form term {chunk!r}")
        sign, coeff, name = m.groups()
        if name not in index:
            raise ParseError(f"unknown variable {name!r} in linear form {text!r}")
        value = int(coeff) if coeff else 1
        if sign == "-":
            value = -value
        out[index[name]] = out.get(index[name], 0) + value
    return {i: c for i, c in out.items() if c}


def parse_distraction_matrix(obj: Mapping[str, Any], var_names: Sequence[str]):
    from .distraction import DistractionMatrix
    _check_keys(obj, {"rows", "N"}, {"rows"}, "matrix file")
    index = {v: i for i, v in enumerate(var_names)}
    overrides = {}
    for row_name, cols in obj["rows"].items():
        if row_name not in index:
            raise ParseError(f"matrix file: unknown row variable {row_name!r}")
        for col, form in cols.items():
            try:
                j = int(col)
            except (TypeError, ValueError):
                raise ParseError(f"matrix file: bad column index {col!r}")
            if isinstance(form, str):
                parsed = parse_linear_form(form, var_names)
            elif isinstance(form, Mapping):
                parsed = {index[v]: int(c) for v, c in form.items()}
            else:
                raise ParseError("matrix file: entries must be strings or coefficient maps")
            overrides[(index[row_name], j)] = parsed
    return DistractionMatrix(len(var_names), overrides, obj.get("N"))


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def pretty_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def inputs_digest(*parsed_inputs: Any) -> str:
    payload = canonical_json(list(parsed_inputs))
    return "sha256:" + hashlib.sha256(payload.encode()).hexdigest()


def build_report(command: Sequence[str], digest: str, results: Any,
                 status: str = "ok", timing_ms: float | None = None) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": list(command),
        "inputs_digest": digest,
        "status": status,
        "results": results,
        "timing_ms": timing_ms,
    }
