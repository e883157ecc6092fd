"""Structured encoding of the cyclic identities and the catalog file format.

Every displayed identity is one IdentitySpec.  The left side is a list of
cyclic sums (a bracketed [f(z_{j+r}) + f(z_{j-r})] is two sums); the right
side is a list of terms: coefficient-weighted cyclic sums, p-proportional
constants, a mean-value integral, or zero.  Constraints drive the parameter
enumeration (coprimality, parity, chain-length bounds).
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Optional

from .coeffexpr import CoeffExpr, IntPoly, free_symbols, parse_expr, serialize_expr
from .errors import EmptyParameterSpace, ParseError, SchemaError

__all__ = [
    "RatioFactor",
    "Chain",
    "CyclicSum",
    "WeightedSum",
    "PConstant",
    "MeanValueIntegral",
    "ZeroTerm",
    "Constraints",
    "Status",
    "TransformRelation",
    "TransformSpec",
    "Provenance",
    "IdentitySpec",
    "builtin_catalog",
    "validate",
    "enumerate_params",
    "load_catalog",
    "save_catalog",
    "catalog_by_id",
]

FAMILIES = ("MI-I", "MI-I-alt", "MI-II", "MI-II-alt", "MI-III", "MI-IV", "Transform")
_ALT_FAMILIES = ("MI-I-alt", "MI-II-alt")
_ODD_P_FAMILIES = ("MI-III", "MI-IV")

# Constant prefactors attached to mapped ratio factors and transform relations.
PREFACTORS = {
    "1": 1.0 + 0.0j,
    "-1": -1.0 + 0.0j,
    "i": 1.0j,
    "-i": -1.0j,
    "sqrt_i": complex(math.sqrt(0.5), math.sqrt(0.5)),
    "inv_sqrt_i": complex(math.sqrt(0.5), -math.sqrt(0.5)),
}


@dataclass(frozen=True)
class RatioFactor:
    """A single theta ratio evaluated at z_j + offset*delta.

    kind "ratio": theta_num^power / theta_den^den_power (den_power defaults to
    power; the catalog identities always have den = 4).
    kind "logderiv": theta4'(x)/theta4(x).
    ``prefactor`` names a constant from PREFACTORS applied (raised to
    ``power``) to the ratio; only derived tau-shift identities use it.
    """

    kind: str = "ratio"
    num: int = 3
    power: int = 1
    offset: IntPoly = field(default_factory=lambda: IntPoly.const(0))
    den: int = 4
    den_power: Optional[int] = None
    prefactor: str = "1"

    def __post_init__(self):
        object.__setattr__(self, "offset", IntPoly.parse(self.offset))
        if self.den_power is None:
            object.__setattr__(self, "den_power", self.power)
        if self.kind not in ("ratio", "logderiv"):
            raise SchemaError(f"unknown factor kind {self.kind!r}")
        if self.kind == "logderiv" and (self.num != 4 or self.power != 1 or self.den != 4):
            raise SchemaError("logderiv factors are fixed to theta4'/theta4")
        if self.prefactor not in PREFACTORS:
            raise SchemaError(f"unknown prefactor token {self.prefactor!r}")


@dataclass(frozen=True)
class Chain:
    """Product over n = 0..length-1 of theta_num/theta_den at z_j + n*step*delta."""

    num: int
    length: IntPoly
    step: IntPoly
    den: int = 4
    prefactor: str = "1"

    def __post_init__(self):
        object.__setattr__(self, "length", IntPoly.parse(self.length))
        object.__setattr__(self, "step", IntPoly.parse(self.step))


@dataclass(frozen=True)
class CyclicSum:
    factors: tuple[RatioFactor, ...] = ()
    chain: Optional[Chain] = None
    alternating: bool = False
    product_form: bool = False


@dataclass(frozen=True)
class WeightedSum:
    coeff: CoeffExpr
    sum: CyclicSum

    kind = "weighted"


@dataclass(frozen=True)
class PConstant:
    """RHS term equal to p times the coefficient, independent of z."""

    coeff: CoeffExpr

    kind = "pconst"


@dataclass(frozen=True)
class MeanValueIntegral:
    """(p/pi) * integral over [0, pi) of the integrand product at continuous z."""

    integrand: CyclicSum

    kind = "integral"


@dataclass(frozen=True)
class ZeroTerm:
    kind = "zero"


RHS_KINDS = (WeightedSum, PConstant, MeanValueIntegral, ZeroTerm)


@dataclass(frozen=True)
class Constraints:
    """Parameter constraints: parities, coprime shift symbols, chain bounds.

    ``symbols`` lists the shift symbols (subset of r, s, t) that range over
    1 <= x < p with gcd(x, p) = 1 and pairwise distinct values.  When
    ``ordered`` is true and both r and s are present, enumeration imposes
    r < s (used for identities symmetric under the swap).
    """

    p_parity: str = "any"
    p_min: int = 2
    symbols: tuple[str, ...] = ()
    ordered: bool = True
    l_parity: Optional[str] = None
    l_min: int = 0
    l_max: Optional[str] = None  # None (unbounded), "p", or "p-1"

    def __post_init__(self):
        if self.p_parity not in ("any", "even", "odd"):
            raise SchemaError(f"bad p parity {self.p_parity!r}")
        if self.l_parity not in (None, "even", "odd"):
            raise SchemaError(f"bad l parity {self.l_parity!r}")
        if self.l_max not in (None, "p", "p-1"):
            raise SchemaError(f"bad l upper bound {self.l_max!r}")
        for s in self.symbols:
            if s not in ("r", "s", "t"):
                raise SchemaError(f"bad shift symbol {s!r}")

    def uses_l(self) -> bool:
        return self.l_parity is not None

    def admits_p(self, p: int) -> bool:
        if p < self.p_min:
            return False
        if self.p_parity == "even" and p % 2:
            return False
        if self.p_parity == "odd" and p % 2 == 0:
            return False
        return True

    def l_values(self, p: int, l_cap: int) -> list[int]:
        if not self.uses_l():
            return []
        hi = l_cap
        if self.l_max == "p":
            hi = min(hi, p)
        elif self.l_max == "p-1":
            hi = min(hi, p - 1)
        start = self.l_min
        if self.l_parity == "odd" and start % 2 == 0:
            start += 1
        if self.l_parity == "even" and start % 2:
            start += 1
        return list(range(start, hi + 1, 2))

    def check_binding(self, p: int, binding: dict) -> Optional[str]:
        """Return a violation description, or None when the binding is valid."""
        if not self.admits_p(p):
            return f"p={p} violates parity/minimum ({self.p_parity}, >= {self.p_min})"
        values = []
        for sym in self.symbols:
            if sym not in binding:
                return f"missing symbol {sym}"
            v = binding[sym]
            if not 1 <= v < p:
                return f"{sym}={v} outside 1..{p - 1}"
            if gcd(v, p) != 1:
                return f"{sym}={v} not coprime to p={p}"
            values.append(v)
        if len(set(values)) != len(values):
            return "shift symbols must be pairwise distinct"
        if self.uses_l():
            if "l" not in binding:
                return "missing symbol l"
            lv = binding["l"]
            if self.l_parity == "odd" and lv % 2 == 0:
                return f"l={lv} must be odd"
            if self.l_parity == "even" and lv % 2:
                return f"l={lv} must be even"
            if lv < self.l_min:
                return f"l={lv} below minimum {self.l_min}"
            if self.l_max == "p" and lv > p:
                return f"l={lv} exceeds p"
            if self.l_max == "p-1" and lv >= p:
                return f"l={lv} must be below p"
        return None


@dataclass(frozen=True)
class Status:
    kind: str = "unchecked"  # verified | erratum | unchecked
    corrected: Optional[str] = None
    note: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("verified", "erratum", "unchecked"):
            raise SchemaError(f"bad status kind {self.kind!r}")
        if self.kind == "erratum" and not self.corrected:
            raise SchemaError("erratum status requires a corrected sibling id")


@dataclass(frozen=True)
class TransformRelation:
    """lhs_num/lhs_den at the mapped parameter equals prefactor * rhs_num/rhs_den."""

    lhs_num: int
    lhs_den: int
    rhs_num: int
    rhs_den: int
    prefactor: str = "1"


@dataclass(frozen=True)
class TransformSpec:
    kind: str  # half_period | modular | product_ratio
    map: Optional[str] = None  # minus_inverse | over_one_minus
    which: Optional[int] = None  # 1..6 selects Eq (125)..(130)
    relations: tuple[TransformRelation, ...] = ()
    variant: str = "printed"  # printed | corrected (product_ratio only)

    def __post_init__(self):
        if self.kind not in ("half_period", "modular", "product_ratio"):
            raise SchemaError(f"bad transform kind {self.kind!r}")
        if self.variant not in ("printed", "corrected"):
            raise SchemaError(f"bad transform variant {self.variant!r}")
        if self.kind == "modular" and self.map not in ("minus_inverse", "over_one_minus"):
            raise SchemaError("modular transform requires a map name")
        if self.kind == "product_ratio" and self.which not in (1, 2, 3, 4, 5, 6):
            raise SchemaError("product_ratio transform requires which in 1..6")


@dataclass(frozen=True)
class Provenance:
    source_id: str
    map: str


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    paper_eq: str
    family: str
    period: str  # "pi" | "2pi"
    lhs: tuple[CyclicSum, ...] = ()
    rhs: tuple = ()
    constraints: Constraints = field(default_factory=Constraints)
    status: Status = field(default_factory=Status)
    transform: Optional[TransformSpec] = None
    provenance: Optional[Provenance] = None
    shift_unit: str = "real"  # real | tau | one_minus_tau
    coeff_map: str = "self"  # self | minus_inverse | over_one_minus

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SchemaError(f"unknown family {self.family!r}", self.id)
        if self.period not in ("pi", "2pi"):
            raise SchemaError("period must be pi or 2pi", self.id)
        if self.shift_unit not in ("real", "tau", "one_minus_tau"):
            raise SchemaError(f"bad shift unit {self.shift_unit!r}", self.id)
        if self.coeff_map not in ("self", "minus_inverse", "over_one_minus"):
            raise SchemaError(f"bad coefficient map {self.coeff_map!r}", self.id)

    @property
    def T(self) -> float:
        return math.pi if self.period == "pi" else 2.0 * math.pi

    def is_transform(self) -> bool:
        return self.family == "Transform"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _sum_symbols(cs: CyclicSum) -> set[str]:
    out: set[str] = set()
    for f in cs.factors:
        out |= set(f.offset.symbols)
    if cs.chain is not None:
        out |= set(cs.chain.length.symbols) | set(cs.chain.step.symbols)
    return out


def validate(spec: IdentitySpec) -> list[str]:
    """Schema diagnostics for one identity; empty list means well-formed."""
    diags: list[str] = []
    if spec.family in ("MI-I", "MI-I-alt", "MI-II", "MI-II-alt") and spec.period != "pi":
        diags.append("family/period mismatch")
    if spec.family in _ODD_P_FAMILIES and spec.period != "2pi":
        diags.append("family/period mismatch")
    if spec.is_transform():
        if spec.transform is None:
            diags.append("Transform entry lacks transform payload")
        if spec.lhs or spec.rhs:
            diags.append("Transform entry must not carry lhs/rhs sums")
        return diags
    if spec.transform is not None:
        diags.append("non-Transform entry carries transform payload")
    if spec.family in _ALT_FAMILIES and spec.constraints.p_parity != "even":
        diags.append("alternating family requires even p")
    if spec.family in _ODD_P_FAMILIES and spec.constraints.p_parity != "odd":
        diags.append("family requires odd p")
    if not spec.lhs:
        diags.append("no left-hand side")
    for cs in spec.lhs:
        if not cs.factors and cs.chain is None:
            diags.append("cyclic sum with neither factors nor chain")
        if cs.product_form and cs.alternating:
            diags.append("product form excludes alternating")
        if cs.alternating and not spec.family.endswith("-alt"):
            diags.append("alternating sum outside an alternating family")
    if not spec.rhs:
        diags.append("no right-hand side")
    n_integral = 0
    constrained = {"p"} | set(spec.constraints.symbols)
    if spec.constraints.uses_l():
        constrained.add("l")
    for term in spec.rhs:
        if isinstance(term, MeanValueIntegral):
            n_integral += 1
        coeff = getattr(term, "coeff", None)
        if coeff is not None:
            for sym in sorted(free_symbols(coeff)):
                if sym not in constrained:
                    diags.append(f"unconstrained symbol {sym}")
    if n_integral > 1:
        diags.append("more than one mean-value integral term")
    lhs_syms = set()
    for cs in spec.lhs:
        lhs_syms |= _sum_symbols(cs)
    for sym in sorted(lhs_syms & {"r", "s", "t", "l"}):
        if sym not in constrained:
            diags.append(f"unconstrained symbol {sym}")
    return diags


# ---------------------------------------------------------------------------
# Parameter enumeration
# ---------------------------------------------------------------------------


def enumerate_params(
    spec: IdentitySpec, p_range, l_cap: int = 7
) -> list[dict[str, int]]:
    """All constraint-satisfying bindings over p_range, in lexicographic order.

    Chain lengths l are capped at ``l_cap`` (and at p / p-1 where the identity
    requires it).  Raises EmptyParameterSpace when nothing qualifies.
    """
    ps = sorted(set(int(p) for p in p_range))
    if not ps:
        raise EmptyParameterSpace(f"{spec.id}: empty p range")
    if any(p < 2 or p > 64 for p in ps):
        raise SchemaError("p range must lie within [2, 64]", spec.id)
    if spec.is_transform():
        return [{}]

    cons = spec.constraints
    out: list[dict[str, int]] = []
    for p in ps:
        if not cons.admits_p(p):
            continue
        coprime = [x for x in range(1, p) if gcd(x, p) == 1]
        l_values = cons.l_values(p, l_cap) if cons.uses_l() else [None]
        if cons.uses_l() and not l_values:
            continue

        def bind(sym_values):
            binding = {"p": p}
            binding.update(sym_values)
            return binding

        combos: list[dict[str, int]] = [{}]
        syms = cons.symbols
        if syms == ("r",):
            combos = [{"r": r} for r in coprime]
        elif set(syms) == {"r", "s"}:
            if cons.ordered:
                combos = [
                    {"r": r, "s": s} for r in coprime for s in coprime if r < s
                ]
            else:
                combos = [
                    {"r": r, "s": s} for r in coprime for s in coprime if r != s
                ]
        elif set(syms) == {"r", "s", "t"}:
            combos = [
                {"r": r, "s": s, "t": t}
                for r in coprime
                for s in coprime
                if (r < s if cons.ordered else r != s)
                for t in coprime
                if t not in (r, s)
            ]
        elif syms:
            raise SchemaError(f"unsupported symbol set {syms}", spec.id)

        for combo in combos:
            for lv in l_values:
                binding = bind(combo)
                if lv is not None:
                    binding["l"] = lv
                out.append(binding)

    if not out:
        raise EmptyParameterSpace(
            f"{spec.id}: no parameter binding satisfies the constraints on p in {ps}"
        )
    def sort_key(b):
        return (b["p"], b.get("r", 0), b.get("s", 0), b.get("t", 0), b.get("l", 0))

    return sorted(out, key=sort_key)


# ---------------------------------------------------------------------------
# Catalog file format (JSON)
# ---------------------------------------------------------------------------


def _factor_to_json(f: RatioFactor) -> dict:
    out = {"num": f.num, "offset": str(f.offset)}
    if f.kind != "ratio":
        out["kind"] = f.kind
    if f.power != 1:
        out["power"] = f.power
    if f.den_power != f.power:
        out["denPower"] = f.den_power
    if f.den != 4:
        out["den"] = f.den
    if f.prefactor != "1":
        out["prefactor"] = f.prefactor
    return out


_FACTOR_KEYS = {"kind", "num", "power", "offset", "den", "denPower", "prefactor"}


def _factor_from_json(obj: dict, where: str) -> RatioFactor:
    _reject_unknown(obj, _FACTOR_KEYS, where)
    return RatioFactor(
        kind=obj.get("kind", "ratio"),
        num=obj.get("num", 4 if obj.get("kind") == "logderiv" else 3),
        power=obj.get("power", 1),
        offset=IntPoly.parse(obj.get("offset", "0")),
        den=obj.get("den", 4),
        den_power=obj.get("denPower"),
        prefactor=obj.get("prefactor", "1"),
    )


def _sum_to_json(cs: CyclicSum) -> dict:
    out: dict = {}
    if cs.alternating:
        out["alternating"] = True
    if cs.product_form:
        out["productForm"] = True
    if cs.factors:
        out["factors"] = [_factor_to_json(f) for f in cs.factors]
    if cs.chain is not None:
        chain = {
            "num": cs.chain.num,
            "length": str(cs.chain.length),
            "step": str(cs.chain.step),
        }
        if cs.chain.den != 4:
            chain["den"] = cs.chain.den
        if cs.chain.prefactor != "1":
            chain["prefactor"] = cs.chain.prefactor
        out["chain"] = chain
    return out


_SUM_KEYS = {"alternating", "productForm", "factors", "chain"}
_CHAIN_KEYS = {"num", "length", "step", "den", "prefactor"}


def _sum_from_json(obj: dict, where: str) -> CyclicSum:
    _reject_unknown(obj, _SUM_KEYS, where)
    chain = None
    if "chain" in obj:
        cobj = obj["chain"]
        _reject_unknown(cobj, _CHAIN_KEYS, where + ".chain")
        chain = Chain(
            num=cobj["num"],
            length=IntPoly.parse(cobj["length"]),
            step=IntPoly.parse(cobj["step"]),
            den=cobj.get("den", 4),
            prefactor=cobj.get("prefactor", "1"),
        )
    return CyclicSum(
        factors=tuple(
            _factor_from_json(f, f"{where}.factors[{i}]")
            for i, f in enumerate(obj.get("factors", ()))
        ),
        chain=chain,
        alternating=obj.get("alternating", False),
        product_form=obj.get("productForm", False),
    )


def _rhs_to_json(term) -> dict:
    if isinstance(term, WeightedSum):
        return {
            "kind": "weighted",
            "coeff": serialize_expr(term.coeff),
            "sum": _sum_to_json(term.sum),
        }
    if isinstance(term, PConstant):
        return {"kind": "pconst", "coeff": serialize_expr(term.coeff)}
    if isinstance(term, MeanValueIntegral):
        return {"kind": "integral", "integrand": _sum_to_json(term.integrand)}
    if isinstance(term, ZeroTerm):
        return {"kind": "zero"}
    raise SchemaError(f"unknown rhs term {term!r}")


def _rhs_from_json(obj: dict, where: str):
    kind = obj.get("kind")
    if kind == "weighted":
        _reject_unknown(obj, {"kind", "coeff", "sum"}, where)
        return WeightedSum(parse_expr(obj["coeff"]), _sum_from_json(obj["sum"], where + ".sum"))
    if kind == "pconst":
        _reject_unknown(obj, {"kind", "coeff"}, where)
        return PConstant(parse_expr(obj["coeff"]))
    if kind == "integral":
        _reject_unknown(obj, {"kind", "integrand"}, where)
        return MeanValueIntegral(_sum_from_json(obj["integrand"], where + ".integrand"))
    if kind == "zero":
        _reject_unknown(obj, {"kind"}, where)
        return ZeroTerm()
    raise SchemaError(f"unknown rhs kind {kind!r} at {where}")


def _constraints_to_json(c: Constraints) -> dict:
    out: dict = {}
    if c.p_parity != "any":
        out["pParity"] = c.p_parity
    if c.p_min != 2:
        out["pMin"] = c.p_min
    if c.symbols:
        out["symbols"] = list(c.symbols)
    if not c.ordered:
        out["ordered"] = False
    if c.l_parity is not None:
        out["lParity"] = c.l_parity
        out["lMin"] = c.l_min
        if c.l_max is not None:
            out["lMax"] = c.l_max
    return out


_CONSTRAINT_KEYS = {"pParity", "pMin", "symbols", "ordered", "lParity", "lMin", "lMax"}


def _constraints_from_json(obj: dict, where: str) -> Constraints:
    _reject_unknown(obj, _CONSTRAINT_KEYS, where)
    return Constraints(
        p_parity=obj.get("pParity", "any"),
        p_min=obj.get("pMin", 2),
        symbols=tuple(obj.get("symbols", ())),
        ordered=obj.get("ordered", True),
        l_parity=obj.get("lParity"),
        l_min=obj.get("lMin", 0),
        l_max=obj.get("lMax"),
    )


def _status_to_json(s: Status) -> dict:
    out = {"kind": s.kind}
    if s.corrected:
        out["corrected"] = s.corrected
    if s.note:
        out["note"] = s.note
    return out


def _transform_to_json(t: TransformSpec) -> dict:
    out: dict = {"kind": t.kind}
    if t.map:
        out["map"] = t.map
    if t.which:
        out["which"] = t.which
    if t.variant != "printed":
        out["variant"] = t.variant
    if t.relations:
        out["relations"] = [
            {
                "lhsNum": r.lhs_num,
                "lhsDen": r.lhs_den,
                "rhsNum": r.rhs_num,
                "rhsDen": r.rhs_den,
                "prefactor": r.prefactor,
            }
            for r in t.relations
        ]
    return out


_TRANSFORM_KEYS = {"kind", "map", "which", "relations", "variant"}
_RELATION_KEYS = {"lhsNum", "lhsDen", "rhsNum", "rhsDen", "prefactor"}


def _transform_from_json(obj: dict, where: str) -> TransformSpec:
    _reject_unknown(obj, _TRANSFORM_KEYS, where)
    relations = []
    for i, robj in enumerate(obj.get("relations", ())):
        _reject_unknown(robj, _RELATION_KEYS, f"{where}.relations[{i}]")
        relations.append(
            TransformRelation(
                lhs_num=robj["lhsNum"],
                lhs_den=robj["lhsDen"],
                rhs_num=robj["rhsNum"],
                rhs_den=robj["rhsDen"],
                prefactor=robj.get("prefactor", "1"),
            )
        )
    return TransformSpec(
        kind=obj["kind"],
        map=obj.get("map"),
        which=obj.get("which"),
        relations=tuple(relations),
        variant=obj.get("variant", "printed"),
    )


def identity_to_json(spec: IdentitySpec) -> dict:
    out: dict = {
        "id": spec.id,
        "paperEq": spec.paper_eq,
        "family": spec.family,
        "period": spec.period,
        "status": _status_to_json(spec.status),
    }
    if spec.lhs:
        out["lhs"] = [_sum_to_json(cs) for cs in spec.lhs]
    if spec.rhs:
        out["rhs"] = [_rhs_to_json(t) for t in spec.rhs]
    constraints = _constraints_to_json(spec.constraints)
    if constraints:
        out["constraints"] = constraints
    if spec.transform is not None:
        out["transform"] = _transform_to_json(spec.transform)
    if spec.provenance is not None:
        out["provenance"] = {"sourceId": spec.provenance.source_id, "map": spec.provenance.map}
    if spec.shift_unit != "real":
        out["shiftUnit"] = spec.shift_unit
    if spec.coeff_map != "self":
        out["coeffMap"] = spec.coeff_map
    return out


_IDENTITY_KEYS = {
    "id",
    "paperEq",
    "family",
    "period",
    "status",
    "lhs",
    "rhs",
    "constraints",
    "transform",
    "provenance",
    "shiftUnit",
    "coeffMap",
}
_STATUS_KEYS = {"kind", "corrected", "note"}


def _reject_unknown(obj: dict, allowed: set, where: str):
    if not isinstance(obj, dict):
        raise SchemaError(f"expected object at {where}")
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"unknown field(s) {sorted(unknown)} at {where}")


def identity_from_json(obj: dict, index: int) -> IdentitySpec:
    where = f"identities[{index}]"
    _reject_unknown(obj, _IDENTITY_KEYS, where)
    for key in ("id", "paperEq", "family", "period"):
        if key not in obj:
            raise SchemaError(f"missing field {key!r} at {where}", obj.get("id"))
    sobj = obj.get("status", {"kind": "unchecked"})
    _reject_unknown(sobj, _STATUS_KEYS, where + ".status")
    provenance = None
    if "provenance" in obj:
        pobj = obj["provenance"]
        _reject_unknown(pobj, {"sourceId", "map"}, where + ".provenance")
        provenance = Provenance(pobj["sourceId"], pobj["map"])
    return IdentitySpec(
        id=obj["id"],
        paper_eq=obj["paperEq"],
        family=obj["family"],
        period=obj["period"],
        lhs=tuple(
            _sum_from_json(s, f"{where}.lhs[{i}]") for i, s in enumerate(obj.get("lhs", ()))
        ),
        rhs=tuple(
            _rhs_from_json(t, f"{where}.rhs[{i}]") for i, t in enumerate(obj.get("rhs", ()))
        ),
        constraints=_constraints_from_json(obj.get("constraints", {}), where + ".constraints"),
        status=Status(
            kind=sobj.get("kind", "unchecked"),
            corrected=sobj.get("corrected"),
            note=sobj.get("note"),
        ),
        transform=_transform_from_json(obj["transform"], where + ".transform")
        if "transform" in obj
        else None,
        provenance=provenance,
        shift_unit=obj.get("shiftUnit", "real"),
        coeff_map=obj.get("coeffMap", "self"),
    )


def save_catalog(identities, path):
    """Write a catalog file atomically (temp file + rename)."""
    doc = {"version": 1, "identities": [identity_to_json(s) for s in identities]}
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def load_catalog(path) -> tuple[IdentitySpec, ...]:
    """Load and schema-check a catalog file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise SchemaError("catalog top level must be an object")
    _reject_unknown(doc, {"version", "identities"}, "top level")
    if doc.get("version") != 1:
        raise SchemaError(f"unsupported catalog version {doc.get('version')!r}")
    identities = [identity_from_json(o, i) for i, o in enumerate(doc.get("identities", []))]
    seen = set()
    for spec in identities:
        if spec.id in seen:
            raise SchemaError("duplicate id", spec.id)
        seen.add(spec.id)
        diags = validate(spec)
        if diags:
            raise SchemaError(f"invalid entry: {'; '.join(diags)}", spec.id)
    return tuple(identities)


def builtin_catalog() -> tuple[IdentitySpec, ...]:
    """The built-in identity catalog (one entry per displayed identity)."""
    from .identities import BUILTIN

    return BUILTIN


def catalog_by_id(catalog=None) -> dict[str, IdentitySpec]:
    if catalog is None:
        catalog = builtin_catalog()
    return {spec.id: spec for spec in catalog}
