"""Numerical verification: bind parameters, evaluate both sides, report residuals.

Residuals are scaled by 1 + max(|lhs|, |rhs|, largest intermediate term) so
that exact-zero right sides and strongly cancelling sums are judged fairly.
Pole proximity and constraint violations are recorded as skips, never as
verdicts about an identity.
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .catalog import (
    PREFACTORS,
    CyclicSum,
    IdentitySpec,
    MeanValueIntegral,
    PConstant,
    WeightedSum,
    ZeroTerm,
    builtin_catalog,
    catalog_by_id,
    enumerate_params,
)
from .coeffexpr import eval_expr
from .errors import (
    ConstraintViolation,
    DivisionNearZeroError,
    DomainError,
    EmptyParameterSpace,
    PoleError,
    ThetaIdentsError,
)
from .special import EllipticContext, theta, theta_dz

__all__ = [
    "VerificationInstance",
    "VerificationResult",
    "SweepGrid",
    "SweepReport",
    "evaluate_cyclic_sum",
    "verify",
    "mean_value_rhs",
    "sweep",
    "sweep_many",
    "report_to_json",
    "reports_to_json",
    "rows_to_csv",
]

_POLE_RTOL = 1e-12

BINDING_KEYS = ("p", "r", "s", "t", "l")


def _shift_delta(spec: IdentitySpec, p: int, tau: complex) -> complex:
    base = spec.T / p
    if spec.shift_unit == "real":
        return complex(base)
    if spec.shift_unit == "tau":
        return base * tau
    return base * (1.0 - tau)


def _coeff_tau(spec: IdentitySpec, tau: complex) -> complex:
    if spec.coeff_map == "self":
        return tau
    if spec.coeff_map == "minus_inverse":
        return -1.0 / tau
    return tau / (1.0 - tau)


class _ThetaColumns:
    """Cached theta values on the lattice zs + k*delta (k integer)."""

    def __init__(self, tau: complex, delta: complex, zs: np.ndarray):
        self.tau = tau
        self.delta = delta
        self.zs = np.asarray(zs, dtype=complex)
        self._cols: dict = {}

    def columns(self, index: int, deriv: int, ks: list[int]) -> np.ndarray:
        store = self._cols.setdefault((index, deriv), {})
        missing = sorted(set(k for k in ks if k not in store))
        if missing:
            args = self.zs[:, None] + np.array(missing, dtype=float)[None, :] * self.delta
            vals = theta(index, args, self.tau, order=deriv)
            vals = np.atleast_2d(vals)
            for i, k in enumerate(missing):
                store[k] = vals[:, i]
        return np.stack([store[k] for k in ks], axis=1)


class _ThetaConsts:
    """Cached theta constants at offsets k*delta (coefficient arguments)."""

    def __init__(self, tau: complex, delta: complex):
        self.tau = tau
        self.delta = delta
        self._vals: dict = {}

    def __call__(self, index: int, k: int, deriv: int) -> complex:
        key = (index, k, deriv)
        if key not in self._vals:
            self._vals[key] = theta(index, k * self.delta, self.tau, order=deriv)
        return self._vals[key]


def _factor_values(cols: _ThetaColumns, f, binding: dict, p: int) -> np.ndarray:
    """(nz, p) values of one ratio factor across the j-grid (j = 1..p, literal)."""
    o = f.offset.eval(binding)
    ks = [j + o for j in range(p)]
    if f.kind == "logderiv":
        den = cols.columns(4, 0, ks)
        num = cols.columns(4, 1, ks)
        _pole_guard(den, num)
        return num / den
    num = cols.columns(f.num, 0, ks)
    out = num if f.power == 1 else num**f.power
    if f.den_power:
        den = cols.columns(f.den, 0, ks)
        _pole_guard(den, num)
        out = out / (den if f.den_power == 1 else den**f.den_power)
    if f.prefactor != "1":
        out = out * PREFACTORS[f.prefactor] ** f.power
    return out


def _pole_guard(den: np.ndarray, num: np.ndarray):
    if np.any(np.abs(den) < _POLE_RTOL * np.maximum(1.0, np.abs(num))):
        raise PoleError("denominator theta value too close to zero")


def _chain_values(cols: _ThetaColumns, chain, binding: dict, p: int) -> np.ndarray:
    length = chain.length.eval(binding)
    step = chain.step.eval(binding)
    out = None
    for n in range(length):
        o = n * step
        ks = [j + o for j in range(p)]
        num = cols.columns(chain.num, 0, ks)
        den = cols.columns(chain.den, 0, ks)
        _pole_guard(den, num)
        ratio = num / den
        out = ratio if out is None else out * ratio
    if out is None:
        out = np.ones((len(cols.zs), p), dtype=complex)
    if chain.prefactor != "1":
        out = out * PREFACTORS[chain.prefactor] ** length
    return out


def _sum_batch(cols: _ThetaColumns, cs: CyclicSum, binding: dict, p: int):
    """Values (nz,) of one cyclic sum plus the largest term magnitude (nz,)."""
    terms = np.ones((len(cols.zs), p), dtype=complex)
    for f in cs.factors:
        terms = terms * _factor_values(cols, f, binding, p)
    if cs.chain is not None:
        terms = terms * _chain_values(cols, cs.chain, binding, p)
    if cs.product_form:
        total = terms[:, 0]
        for j in range(1, p):
            total = total * terms[:, j]
        return total, np.abs(total)
    if cs.alternating:
        signs = np.array([(-1.0) ** j for j in range(p)])
        terms = terms * signs[None, :]
    total = terms[:, 0].copy()
    for j in range(1, p):
        total = total + terms[:, j]
    return total, np.abs(terms).max(axis=1)


def evaluate_cyclic_sum(cs: CyclicSum, binding: dict, tau: complex, z, *, T: float = math.pi, delta: complex | None = None):
    """One cyclic sum at base point(s) z; convenience wrapper over the batch path."""
    p = binding["p"]
    if delta is None:
        delta = complex(T / p)
    zs = np.atleast_1d(np.asarray(z, dtype=complex))
    cols = _ThetaColumns(tau, delta, zs)
    vals, _ = _sum_batch(cols, cs, binding, p)
    if np.ndim(z) == 0:
        return complex(vals[0])
    return vals


def mean_value_rhs(integrand: CyclicSum, binding: dict, tau: complex, n: int = 256, *, T: float = math.pi) -> complex:
    """(p/pi) * trapezoidal integral of the integrand product over [0, pi).

    The integrand is T-periodic and smooth, so the uniform trapezoid rule on
    the period converges geometrically; n must be a power of two >= 64.
    """
    if n < 64 or (n & (n - 1)):
        raise DomainError(f"quadrature size must be a power of two >= 64, got {n}")
    p = binding["p"]
    delta = complex(T / p)
    nodes = (math.pi / n) * np.arange(n)
    cols = _ThetaColumns(tau, delta, nodes)
    vals = np.ones(n, dtype=complex)
    cs = integrand
    for f in cs.factors:
        vals = vals * _factor_values(cols, f, binding, 1)[:, 0]
    if cs.chain is not None:
        vals = vals * _chain_values(cols, cs.chain, binding, 1)[:, 0]
    return complex(p / n * np.sum(vals))


@dataclass
class VerificationInstance:
    identity_id: str
    binding: dict
    m: float
    base_points: tuple
    tolerance: float = 1e-9
    quadrature_n: int = 256


@dataclass
class VerificationResult:
    identity_id: str
    binding: dict
    m: float
    z_points: tuple
    lhs_values: tuple
    rhs_values: tuple
    abs_residuals: tuple
    scales: tuple
    rel_residuals: tuple
    verdict: str  # "pass" | "fail"
    worst_z: complex
    max_rel_residual: float

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _evaluate_instance(spec: IdentitySpec, binding: dict, tau: complex, zs: np.ndarray, quadrature_n: int):
    """lhs values, rhs values and the per-z largest intermediate magnitude."""
    p = binding["p"]
    delta = _shift_delta(spec, p, tau)
    cols = _ThetaColumns(tau, delta, zs)
    nz = len(zs)

    lhs = np.zeros(nz, dtype=complex)
    term_max = np.zeros(nz)
    for cs in spec.lhs:
        vals, tmax = _sum_batch(cols, cs, binding, p)
        lhs = lhs + vals
        term_max = np.maximum(term_max, np.abs(vals))
        term_max = np.maximum(term_max, tmax)

    coeff_tau = _coeff_tau(spec, tau)
    coeff_delta = spec.T / p
    consts = _ThetaConsts(coeff_tau, coeff_delta)
    ints = {k: v for k, v in binding.items() if k in BINDING_KEYS}

    def theta_value(index, k, deriv):
        return consts(index, k, deriv)

    rhs = np.zeros(nz, dtype=complex)
    for term in spec.rhs:
        if isinstance(term, ZeroTerm):
            continue
        if isinstance(term, WeightedSum):
            c = eval_expr(term.coeff, ints, theta_value)
            vals, tmax = _sum_batch(cols, term.sum, binding, p)
            contrib = c * vals
            term_max = np.maximum(term_max, np.abs(contrib))
            term_max = np.maximum(term_max, abs(c) * tmax)
            rhs = rhs + contrib
        elif isinstance(term, PConstant):
            c = p * eval_expr(term.coeff, ints, theta_value)
            term_max = np.maximum(term_max, abs(c))
            rhs = rhs + c
        elif isinstance(term, MeanValueIntegral):
            c = mean_value_rhs(term.integrand, binding, tau, quadrature_n, T=spec.T)
            term_max = np.maximum(term_max, abs(c))
            rhs = rhs + c
        else:
            raise DomainError(f"unknown rhs term {term!r}")
    return lhs, rhs, term_max


def verify(instance: VerificationInstance, catalog=None) -> VerificationResult:
    """Evaluate both sides of one identity at one binding and a batch of z."""
    by_id = catalog_by_id(catalog)
    if instance.identity_id not in by_id:
        raise DomainError(f"unknown identity {instance.identity_id!r}")
    spec = by_id[instance.identity_id]
    if spec.is_transform():
        raise DomainError(
            f"{spec.id} is a transform relation; use the transforms module checks"
        )
    binding = dict(instance.binding)
    p = binding.get("p")
    if p is None:
        raise ConstraintViolation("binding must include p")
    violation = spec.constraints.check_binding(p, binding)
    if violation is not None:
        raise ConstraintViolation(f"{spec.id}: {violation}")

    ctx = EllipticContext(instance.m)
    zs = np.asarray([complex(z) for z in instance.base_points], dtype=complex)
    lhs, rhs, term_max = _evaluate_instance(spec, binding, ctx.tau, zs, instance.quadrature_n)

    abs_res = np.abs(lhs - rhs)
    scales = 1.0 + np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), term_max)
    rel = abs_res / scales
    worst = int(np.argmax(rel))
    return VerificationResult(
        identity_id=spec.id,
        binding=binding,
        m=instance.m,
        z_points=tuple(complex(z) for z in zs),
        lhs_values=tuple(complex(v) for v in lhs),
        rhs_values=tuple(complex(v) for v in rhs),
        abs_residuals=tuple(float(v) for v in abs_res),
        scales=tuple(float(v) for v in scales),
        rel_residuals=tuple(float(v) for v in rel),
        verdict="pass" if bool(np.all(rel <= instance.tolerance)) else "fail",
        worst_z=complex(zs[worst]),
        max_rel_residual=float(rel[worst]),
    )


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepGrid:
    m_values: tuple = (0.1, 0.3, 0.5, 0.7, 0.9)
    p_values: tuple = tuple(range(2, 10))
    samples: int = 16
    seed: int = 0
    tolerance: float = 1e-9
    quadrature_n: int = 256
    l_cap: int = 7


@dataclass
class SweepRow:
    identity_id: str
    binding: dict
    m: float
    z: complex
    residual: float
    verdict: str  # pass | fail


@dataclass
class SweepReport:
    identity_id: str
    family: str
    paper_eq: str
    status_kind: str
    erratum: bool
    grid: SweepGrid
    rows: list = field(default_factory=list)
    skipped: list = field(default_factory=list)  # (binding desc, m, reason)
    details: dict = field(default_factory=dict)
    duration: float = 0.0  # never serialized; reports must be byte-stable

    @property
    def pass_count(self):
        return sum(1 for r in self.rows if r.verdict == "pass")

    @property
    def fail_count(self):
        return sum(1 for r in self.rows if r.verdict == "fail")

    @property
    def skip_count(self):
        return len(self.skipped)

    @property
    def total(self):
        return len(self.rows) + len(self.skipped)

    @property
    def max_rel_residual(self):
        return max((r.residual for r in self.rows), default=0.0)

    @property
    def counts(self):
        return {"pass": self.pass_count, "fail": self.fail_count, "skipped": self.skip_count}

    @property
    def failed(self) -> bool:
        return self.fail_count > 0


def _rng_for(seed: int, identity_id: str, p: int, m: float) -> np.random.Generator:
    digest = hashlib.sha256(f"{seed}|{identity_id}|{p}|{m!r}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "big"))


def _draw_base_points(spec: IdentitySpec, rng, n: int) -> np.ndarray:
    """Real base points, uniform on [0, T); derived tau-shift entries sample
    within one shift cell away from its edges (the theta4 zero ladder)."""
    if spec.shift_unit == "real":
        return rng.random(n) * spec.T
    cell = spec.T / 8.0
    return (0.1 + 0.8 * rng.random(n)) * cell


def sweep(identity_id: str, grid: SweepGrid = SweepGrid(), catalog=None) -> SweepReport:
    """Verify one identity over the grid; deterministic given (catalog, grid)."""
    by_id = catalog_by_id(catalog)
    if identity_id not in by_id:
        raise DomainError(f"unknown identity {identity_id!r}")
    spec = by_id[identity_id]
    report = SweepReport(
        identity_id=spec.id,
        family=spec.family,
        paper_eq=spec.paper_eq,
        status_kind=spec.status.kind,
        erratum=spec.status.kind == "erratum",
        grid=grid,
    )
    start = time.perf_counter()
    if spec.is_transform():
        from .transforms import sweep_transform_entry

        sweep_transform_entry(spec, grid, report)
        report.duration = time.perf_counter() - start
        return report

    try:
        bindings = enumerate_params(spec, grid.p_values, grid.l_cap)
    except EmptyParameterSpace as exc:
        report.skipped.append(({}, None, f"EmptyParameterSpace: {exc}"))
        report.duration = time.perf_counter() - start
        return report

    by_p: dict[int, list] = {}
    for b in bindings:
        by_p.setdefault(b["p"], []).append(b)

    for m in grid.m_values:
        ctx = EllipticContext(m)
        for p in sorted(by_p):
            rng = _rng_for(grid.seed, spec.id, p, m)
            zs = _draw_base_points(spec, rng, grid.samples)
            delta = _shift_delta(spec, p, ctx.tau)
            cols = _ThetaColumns(ctx.tau, delta, np.asarray(zs, dtype=complex))
            coeff_consts = _ThetaConsts(_coeff_tau(spec, ctx.tau), spec.T / p)
            for binding in by_p[p]:
                try:
                    lhs, rhs, term_max = _evaluate_with_caches(
                        spec, binding, ctx.tau, cols, coeff_consts, grid.quadrature_n
                    )
                except (PoleError, DivisionNearZeroError, DomainError) as exc:
                    report.skipped.append((binding, m, f"{type(exc).__name__}: {exc}"))
                    continue
                abs_res = np.abs(lhs - rhs)
                scales = 1.0 + np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), term_max)
                rel = abs_res / scales
                for i, z in enumerate(zs):
                    report.rows.append(
                        SweepRow(
                            identity_id=spec.id,
                            binding=binding,
                            m=m,
                            z=complex(zs[i]),
                            residual=float(rel[i]),
                            verdict="pass" if rel[i] <= grid.tolerance else "fail",
                        )
                    )
    report.duration = time.perf_counter() - start
    return report


def _evaluate_with_caches(spec, binding, tau, cols, coeff_consts, quadrature_n):
    """Same contract as _evaluate_instance but reusing shared per-(m, p) caches."""
    p = binding["p"]
    lhs = np.zeros(len(cols.zs), dtype=complex)
    term_max = np.zeros(len(cols.zs))
    for cs in spec.lhs:
        vals, tmax = _sum_batch(cols, cs, binding, p)
        lhs = lhs + vals
        term_max = np.maximum(term_max, np.abs(vals))
        term_max = np.maximum(term_max, tmax)
    ints = {k: v for k, v in binding.items() if k in BINDING_KEYS}

    rhs = np.zeros(len(cols.zs), dtype=complex)
    for term in spec.rhs:
        if isinstance(term, ZeroTerm):
            continue
        if isinstance(term, WeightedSum):
            c = eval_expr(term.coeff, ints, coeff_consts)
            vals, tmax = _sum_batch(cols, term.sum, binding, p)
            contrib = c * vals
            term_max = np.maximum(term_max, np.abs(contrib))
            term_max = np.maximum(term_max, abs(c) * tmax)
            rhs = rhs + contrib
        elif isinstance(term, PConstant):
            c = p * eval_expr(term.coeff, ints, coeff_consts)
            term_max = np.maximum(term_max, abs(c))
            rhs = rhs + c
        elif isinstance(term, MeanValueIntegral):
            c = mean_value_rhs(term.integrand, binding, tau, quadrature_n, T=spec.T)
            term_max = np.maximum(term_max, abs(c))
            rhs = rhs + c
        else:
            raise DomainError(f"unknown rhs term {term!r}")
    return lhs, rhs, term_max


def sweep_many(identity_ids, grid: SweepGrid = SweepGrid(), catalog=None) -> list[SweepReport]:
    by_id = catalog_by_id(catalog)
    reports = []
    for identity_id in sorted(identity_ids):
        if identity_id not in by_id:
            raise DomainError(f"unknown identity {identity_id!r}")
        reports.append(sweep(identity_id, grid, catalog))
    return reports


# ---------------------------------------------------------------------------
# Report serialization (durations and timestamps are deliberately excluded
# so identical (catalog, grid, seed) runs serialize byte-identically)
# ---------------------------------------------------------------------------


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return repr(z.real)
    return f"{z.real!r}{'+' if z.imag >= 0 else '-'}{abs(z.imag)!r}j"


def _binding_fields(binding: dict) -> dict:
    return {k: binding[k] for k in BINDING_KEYS if k in binding}


def report_to_json(report: SweepReport) -> dict:
    worst = None
    if report.rows:
        worst_row = max(report.rows, key=lambda r: r.residual)
        worst = {
            "binding": _binding_fields(worst_row.binding),
            "m": worst_row.m,
            "z": _fmt_complex(worst_row.z),
            "residual": worst_row.residual,
        }
    out = {
        "id": report.identity_id,
        "family": report.family,
        "paperEq": report.paper_eq,
        "status": report.status_kind,
        "erratum": report.erratum,
        "counts": report.counts,
        "maxRelResidual": report.max_rel_residual,
        "worst": worst,
    }
    if report.skipped:
        out["skipped"] = [
            {"binding": _binding_fields(b or {}), "m": m, "reason": reason}
            for (b, m, reason) in report.skipped
        ]
    if report.details:
        out["details"] = report.details
    return out


def reports_to_json(reports, grid: SweepGrid) -> str:
    doc = {
        "version": 1,
        "kind": "sweep-report",
        "grid": {
            "m": list(grid.m_values),
            "p": list(grid.p_values),
            "samples": grid.samples,
            "seed": grid.seed,
            "tolerance": grid.tolerance,
            "quadratureN": grid.quadrature_n,
            "lCap": grid.l_cap,
        },
        "reports": [report_to_json(r) for r in reports],
        "totals": {
            "pass": sum(r.pass_count for r in reports),
            "fail": sum(r.fail_count for r in reports),
            "skipped": sum(r.skip_count for r in reports),
        },
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def rows_to_csv(reports) -> str:
    lines = ["id,p,r,s,t,l,m,z,residual,verdict"]
    for report in reports:
        for row in report.rows:
            b = row.binding
            lines.append(
                ",".join(
                    [
                        row.identity_id,
                        *(str(b.get(k, "")) for k in BINDING_KEYS),
                        repr(row.m),
                        _fmt_complex(row.z),
                        repr(row.residual),
                        row.verdict,
                    ]
                )
            )
    return "\n".join(lines) + "\n"
