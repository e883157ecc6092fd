"""Half-period, modular-map, and product-ratio relations, plus derivation of
tau-shift variants of catalog identities.

Each relation check evaluates the printed left and right sides independently
and reports the residual together with a best-fit constant (the mean of
lhs/rhs over the sample), so a misprinted constant prefactor shows up as a
stable best-fit constant rather than a guess.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .catalog import (
    PREFACTORS,
    Chain,
    CyclicSum,
    IdentitySpec,
    MeanValueIntegral,
    PConstant,
    Provenance,
    RatioFactor,
    Status,
    TransformSpec,
    WeightedSum,
    ZeroTerm,
)
from .errors import DomainError, PoleError, UnsupportedFactor
from .special import theta, tau_from_m

__all__ = [
    "half_period_ratio",
    "modular_check",
    "product_ratio_check",
    "derive_tau_shift_identity",
    "MINUS_INVERSE_MAP",
    "OVER_ONE_MINUS_MAP",
    "sweep_transform_entry",
]

_POLE_RTOL = 1e-12


def _ratio(num: int, den: int, z, tau) -> complex:
    n = theta(num, z, tau)
    d = theta(den, z, tau)
    if abs(d) < _POLE_RTOL * max(1.0, abs(n)):
        raise PoleError(f"theta{den}({z!r}) too close to zero")
    return n / d


def half_period_ratio(z, tau):
    """Both sides of the half-period relation theta1/theta2 at z.

    Returns (lhs, rhs, residual): lhs = theta1(z)/theta2(z), rhs is the
    shifted-argument theta3/theta4 form with its -i prefactor.
    """
    lhs = _ratio(1, 2, z, tau)
    w = z + math.pi * (1.0 + tau) / 2.0
    rhs = -1j * _ratio(3, 4, w, tau)
    scale = 1.0 + max(abs(lhs), abs(rhs))
    return lhs, rhs, abs(lhs - rhs) / scale


def modular_check(map_name: str, relation, z, tau):
    """Evaluate one modular relation at base parameter tau.

    ``relation`` is a TransformRelation; the left side is evaluated at the
    mapped parameter (tau1 = -1/tau or tau3 = tau/(1-tau)), the right side at
    tau with the scaled argument.  Returns (lhs, rhs, residual, ratio) where
    ratio = lhs/rhs exposes any constant-prefactor misprint.
    """
    if map_name == "minus_inverse":
        tau_m = -1.0 / tau
        arg = tau * z
    elif map_name == "over_one_minus":
        tau_m = tau / (1.0 - tau)
        arg = (1.0 - tau) * z
    else:
        raise DomainError(f"unknown modular map {map_name!r}")
    lhs = _ratio(relation.lhs_num, relation.lhs_den, z, tau_m)
    rhs = PREFACTORS[relation.prefactor] * _ratio(relation.rhs_num, relation.rhs_den, arg, tau)
    scale = 1.0 + max(abs(lhs), abs(rhs))
    ratio = lhs / rhs if abs(rhs) > 1e-300 else complex("nan")
    return lhs, rhs, abs(lhs - rhs) / scale, ratio


# Each product-ratio relation: lhs indices, then the rhs combination
#   (sign1 * theta_a(0) theta_b(w) + sign2 * theta_c(0) theta_d(w)) * outer
#   ------------------------------------------------------------------
#            theta_e(0) theta_4(w),   w = 2z + pi tau / 2
# encoded as (lhs_pair, outer, (a, b, c1), (c, d, c2), e).
_PRODUCT_RELATIONS = {
    1: (((2, 3), (1, 4)), 1j, (3, 3, 1.0), (2, 2, 1.0), 4),
    2: (((1, 3), (2, 4)), 1.0, (2, 1, 1.0), (4, 3, -1j), 3),
    3: (((1, 2), (3, 4)), 1.0, (3, 1, 1.0), (4, 2, -1j), 2),
    4: (((2, 4), (1, 3)), 1.0, (2, 1, 1.0), (4, 3, 1j), 3),
    5: (((1, 4), (2, 3)), 1j, (2, 2, 1.0), (3, 3, -1.0), 3),
    6: (((3, 4), (1, 2)), 1.0, (3, 1, 1.0), (4, 2, 1j), 2),
}

# Relation 5 as printed divides by theta3(0); the corrected variant divides by
# theta4(0), matching its reciprocal partner.
_PRODUCT_CORRECTED = {5: 4}


def product_ratio_check(which: int, z, tau, *, corrected: bool = False):
    """Evaluate one of the six theta-product relations; returns (lhs, rhs, residual)."""
    if which not in _PRODUCT_RELATIONS:
        raise DomainError(f"which must be 1..6, got {which}")
    (num_pair, den_pair), outer, (a, b, c1), (c, d, c2), e = _PRODUCT_RELATIONS[which]
    if corrected:
        if which not in _PRODUCT_CORRECTED:
            raise DomainError(f"relation {which} has no corrected variant")
        e = _PRODUCT_CORRECTED[which]
    d1 = theta(den_pair[0], z, tau)
    d2 = theta(den_pair[1], z, tau)
    n1 = theta(num_pair[0], z, tau)
    n2 = theta(num_pair[1], z, tau)
    if min(abs(d1), abs(d2)) < _POLE_RTOL * max(1.0, abs(n1), abs(n2)):
        raise PoleError(f"lhs denominator ~ 0 at z={z!r}")
    lhs = n1 * n2 / (d1 * d2)
    w = 2.0 * z + math.pi * tau / 2.0
    den = theta(e, 0.0, tau) * theta(4, w, tau)
    if abs(den) < _POLE_RTOL:
        raise PoleError(f"rhs denominator ~ 0 at z={z!r}")
    num = c1 * theta(a, 0.0, tau) * theta(b, w, tau) + c2 * theta(c, 0.0, tau) * theta(d, w, tau)
    rhs = outer * num / den
    scale = 1.0 + max(abs(lhs), abs(rhs))
    return lhs, rhs, abs(lhs - rhs) / scale


# ---------------------------------------------------------------------------
# Derivation of tau-shift identities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModularMap:
    """Verified ratio substitutions used to derive tau-shift identities."""

    kind: str  # minus_inverse | over_one_minus
    shift_unit: str
    new_den: int
    images: dict  # numerator index -> (new numerator index, prefactor token)


MINUS_INVERSE_MAP = ModularMap(
    kind="minus_inverse",
    shift_unit="tau",
    new_den=2,
    images={1: (1, "-i"), 2: (4, "1"), 3: (3, "1")},
)

OVER_ONE_MINUS_MAP = ModularMap(
    kind="over_one_minus",
    shift_unit="one_minus_tau",
    new_den=4,
    images={1: (1, "1"), 2: (3, "inv_sqrt_i"), 3: (2, "inv_sqrt_i")},
)

_TOKEN_PRODUCT = {
    ("1", "1"): "1",
    ("1", "-1"): "-1",
    ("1", "i"): "i",
    ("1", "-i"): "-i",
}


def _map_factor(f: RatioFactor, mm: ModularMap) -> RatioFactor:
    if f.kind != "ratio" or f.den != 4 or f.den_power != f.power or f.prefactor != "1":
        raise UnsupportedFactor(f"factor {f} has no printed modular image")
    if f.num == 4:
        # theta4/theta4 never appears; a bare theta4 power has no image.
        raise UnsupportedFactor("theta4 numerator has no printed modular image")
    new_num, token = mm.images[f.num]
    return RatioFactor("ratio", new_num, f.power, f.offset, mm.new_den, f.power, token)


def _map_sum(cs: CyclicSum, mm: ModularMap) -> CyclicSum:
    if cs.chain is not None:
        chain = cs.chain
        new_num, token = mm.images.get(chain.num, (None, None))
        if new_num is None:
            raise UnsupportedFactor(f"chain numerator {chain.num} has no modular image")
        new_chain = Chain(new_num, chain.length, chain.step, mm.new_den, token)
    else:
        new_chain = None
    return CyclicSum(
        factors=tuple(_map_factor(f, mm) for f in cs.factors),
        chain=new_chain,
        alternating=cs.alternating,
        product_form=cs.product_form,
    )


def derive_tau_shift_identity(spec: IdentitySpec, mm: ModularMap) -> IdentitySpec:
    """Mechanically derived identity with shifts in units of T*tau/p (or
    T*(1-tau)/p), obtained by substituting the modular ratio relations.

    The coefficient expressions are kept verbatim and evaluated at the mapped
    modular parameter; only the cyclic-sum factors are rewritten.  The source
    must be a Verified non-transform entry whose factors all have modular
    images (log-derivative factors do not).
    """
    if spec.is_transform():
        raise UnsupportedFactor("transform entries cannot be derived from")
    if spec.status.kind == "erratum":
        raise UnsupportedFactor(f"{spec.id} is an erratum entry; derive from its correction")
    if spec.status.kind != "verified":
        raise UnsupportedFactor(f"{spec.id} is not a verified entry")
    if spec.shift_unit != "real":
        raise UnsupportedFactor(f"{spec.id} already uses {spec.shift_unit} shifts")

    new_rhs = []
    for term in spec.rhs:
        if isinstance(term, ZeroTerm):
            new_rhs.append(term)
        elif isinstance(term, WeightedSum):
            new_rhs.append(WeightedSum(term.coeff, _map_sum(term.sum, mm)))
        elif isinstance(term, PConstant):
            new_rhs.append(term)
        elif isinstance(term, MeanValueIntegral):
            raise UnsupportedFactor("mean-value integral terms have no derived form")
        else:
            raise UnsupportedFactor(f"unknown rhs term {term!r}")

    return IdentitySpec(
        id=f"{spec.id}-{'tau' if mm.shift_unit == 'tau' else 'onemtau'}",
        paper_eq=spec.paper_eq,
        family=spec.family,
        period=spec.period,
        lhs=tuple(_map_sum(cs, mm) for cs in spec.lhs),
        rhs=tuple(new_rhs),
        constraints=spec.constraints,
        status=Status("unchecked", note=f"derived from {spec.id} via {mm.kind}"),
        provenance=Provenance(spec.id, mm.kind),
        shift_unit=mm.shift_unit,
        coeff_map=mm.kind,
    )


# ---------------------------------------------------------------------------
# Sweep support for Transform catalog entries
# ---------------------------------------------------------------------------


def _safe_strip_points(rng, n: int) -> np.ndarray:
    # Real z away from 0 and pi/2 multiples, where the shifted-argument
    # denominators pass through theta zeros.
    out = []
    while len(out) < n:
        z = float(rng.random()) * math.pi
        frac = (2.0 * z / math.pi) % 1.0
        if 0.08 < frac < 0.92 and z > 0.05:
            out.append(z)
    return np.array(out)


def sweep_transform_entry(spec: IdentitySpec, grid, report):
    """Fill a SweepReport for a Transform entry over the grid's m values."""
    from .verify import SweepRow, _rng_for

    payload = spec.transform
    ratios: dict[str, list[complex]] = {}
    for m in grid.m_values:
        tau = tau_from_m(m)
        rng = _rng_for(grid.seed, spec.id, 0, m)
        zs = _safe_strip_points(rng, grid.samples)
        for z in zs:
            try:
                if payload.kind == "half_period":
                    residuals = {"": half_period_ratio(z, tau)[2]}
                elif payload.kind == "modular":
                    residuals = {}
                    for i, rel in enumerate(payload.relations):
                        _, _, res, ratio = modular_check(payload.map, rel, z, tau)
                        residuals[f"rel{i + 1}"] = res
                        ratios.setdefault(f"rel{i + 1}", []).append(ratio)
                else:
                    _, _, res = product_ratio_check(
                        payload.which, z, tau, corrected=payload.variant == "corrected"
                    )
                    residuals = {"": res}
            except PoleError as exc:
                report.skipped.append(({}, m, f"PoleError: {exc}"))
                continue
            for label, res in residuals.items():
                report.rows.append(
                    SweepRow(
                        identity_id=spec.id + (f":{label}" if label else ""),
                        binding={"p": 0},
                        m=m,
                        z=complex(z),
                        residual=float(res),
                        verdict="pass" if res <= grid.tolerance else "fail",
                    )
                )
    if ratios:
        fits = {}
        for label, values in ratios.items():
            arr = np.array(values)
            mean = complex(arr.mean())
            var = float(np.mean(np.abs(arr - mean) ** 2))
            fits[label] = {
                "bestFitConstant": [mean.real, mean.imag],
                "variance": var,
            }
        report.details["modularBestFit"] = fits
