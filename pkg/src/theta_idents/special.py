"""Jacobi theta functions, complete elliptic integrals, and Jacobi elliptic functions.

Two independent evaluation routes live here on purpose:

* the theta q-series (``theta``, ``theta_dz`` and everything built on them), and
* the arithmetic-geometric mean iteration (``elliptic_K``, ``elliptic_E``,
  ``agm_jacobi``), which never touches the theta series.

The AGM route is the oracle used to cross-check the series route, so the two
must not be merged.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "ThetaIndex",
    "ThetaArgument",
    "EllipticContext",
    "theta",
    "theta_dz",
    "elliptic_K",
    "elliptic_E",
    "elliptic_E_via_theta",
    "jacobi_elliptic",
    "jacobi_zeta",
    "agm_jacobi",
    "tau_from_m",
]

# Stopping rule for all q-series: a term below REL_STOP times the running
# partial sum ends the series (ABS_STOP catches identically-zero sums such as
# theta1 at z=0); hitting MAX_TERMS first is an error, never a silent
# truncation.
REL_STOP = 1e-17
ABS_STOP = 1e-300
MAX_TERMS = 64

# exp((2n+1)·Im z) must stay finite for the largest n we may reach.
_IM_Z_LIMIT = 700.0 / (2 * MAX_TERMS + 1)

_POLE_RTOL = 1e-12


class ThetaIndex(IntEnum):
    """Selector for the four Jacobi theta functions."""

    THETA1 = 1
    THETA2 = 2
    THETA3 = 3
    THETA4 = 4


def _check_tau(tau: complex) -> complex:
    tau = complex(tau)
    if not tau.imag > 0:
        raise DomainError(f"tau must satisfy Im(tau) > 0, got {tau}")
    return tau


@dataclass(frozen=True)
class ThetaArgument:
    """Argument pair (z, tau) with the derived nome q = exp(i*pi*tau)."""

    z: complex
    tau: complex
    q: complex = field(init=False)

    def __post_init__(self):
        tau = _check_tau(self.tau)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "q", cmath.exp(1j * math.pi * tau))


def _theta_series(index: int, z: np.ndarray, tau: complex, order: int) -> np.ndarray:
    """Evaluate theta_index^(order)(z) by direct q-series summation.

    ``z`` is a complex ndarray; the whole batch is summed in lockstep with a
    fixed ascending term order so repeated calls are bit-identical.
    """
    tau = _check_tau(tau)
    if index not in (1, 2, 3, 4):
        raise DomainError(f"theta index must be 1..4, got {index}")
    if order not in (0, 1, 2):
        raise DomainError(f"derivative order must be 0, 1 or 2, got {order}")
    if np.any(np.abs(z.imag) > _IM_Z_LIMIT):
        raise DomainError(
            f"|Im z| exceeds the supported strip ({_IM_Z_LIMIT:.2f}); "
            "theta series terms would overflow"
        )

    iptau = 1j * math.pi * tau  # log q
    im_tau = tau.imag
    max_im_z = float(np.max(np.abs(z.imag))) if z.size else 0.0
    w = np.exp(1j * z)
    winv = np.exp(-1j * z)
    w2 = w * w
    w2inv = winv * winv

    # The stopping test uses an envelope of the last added term,
    # 2 |q|^{e(n)} exp(a|Im z|) a^order, rather than the term itself: a sine
    # or cosine factor can vanish exactly (z a rational multiple of pi), and
    # a single accidental zero must not end the series.

    if index in (1, 2):
        # theta1 = 2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1)z)
        # theta2 = 2 sum        q^{(n+1/2)^2} cos((2n+1)z)
        total = np.zeros_like(w)
        wp, wm = w.copy(), winv.copy()  # e^{i(2n+1)z}, e^{-i(2n+1)z}
        for n in range(MAX_TERMS):
            qn = cmath.exp(iptau * (n + 0.5) ** 2)
            a = 2 * n + 1
            if index == 1:
                sgn = -1.0 if n % 2 else 1.0
                if order == 0:
                    term = sgn * qn * (wp - wm) / 1j
                elif order == 1:
                    term = sgn * qn * a * (wp + wm)
                else:
                    term = -sgn * qn * a * a * (wp - wm) / 1j
            else:
                if order == 0:
                    term = qn * (wp + wm)
                elif order == 1:
                    term = -qn * a * (wp - wm) / 1j
                else:
                    term = -qn * a * a * (wp + wm)
            total = total + term
            env = 2.0 * math.exp(
                -math.pi * im_tau * (n + 0.5) ** 2 + a * max_im_z
            ) * float(a) ** order
            if env <= ABS_STOP or np.all(env <= REL_STOP * np.abs(total)):
                return total
            wp = wp * w2
            wm = wm * w2inv
        raise ConvergenceError(
            f"theta{index} series did not converge within {MAX_TERMS} terms "
            f"(tau={tau}, order={order})"
        )

    # theta3 = 1 + 2 sum q^{n^2} cos(2nz), theta4 alternates signs.
    if order == 0:
        total = np.ones_like(w)
    else:
        total = np.zeros_like(w)
    wp, wm = w2.copy(), w2inv.copy()  # e^{2inz}, e^{-2inz}
    for n in range(1, MAX_TERMS + 1):
        qn = cmath.exp(iptau * n * n)
        if index == 4 and n % 2:
            qn = -qn
        b = 2 * n
        if order == 0:
            term = qn * (wp + wm)
        elif order == 1:
            term = -qn * b * (wp - wm) / 1j
        else:
            term = -qn * b * b * (wp + wm)
        total = total + term
        env = 2.0 * math.exp(-math.pi * im_tau * n * n + b * max_im_z) * float(b) ** order
        if env <= ABS_STOP or np.all(env <= REL_STOP * np.abs(total)):
            return total
        wp = wp * w2
        wm = wm * w2inv
    raise ConvergenceError(
        f"theta{index} series did not converge within {MAX_TERMS} terms "
        f"(tau={tau}, order={order})"
    )


def theta(index, z, tau=None, *, order: int = 0):
    """theta_index(z, tau), vectorized over z.

    ``index`` is a ThetaIndex or plain int in 1..4.  ``z`` may be a scalar or
    an ndarray; a ThetaArgument may be passed as ``z`` with ``tau`` omitted.
    """
    if isinstance(z, ThetaArgument):
        if tau is not None:
            raise DomainError("pass either a ThetaArgument or (z, tau), not both")
        z, tau = z.z, z.tau
    if tau is None:
        raise DomainError("tau is required")
    arr = np.asarray(z, dtype=complex)
    out = _theta_series(int(index), np.atleast_1d(arr), tau, order)
    if arr.ndim == 0:
        return complex(out[0])
    return out.reshape(arr.shape)


def theta_dz(index, z, tau=None, *, order: int = 1):
    """d^order/dz^order of theta_index at (z, tau), order in {1, 2}."""
    if order not in (1, 2):
        raise DomainError(f"theta_dz order must be 1 or 2, got {order}")
    return theta(index, z, tau, order=order)


# ---------------------------------------------------------------------------
# AGM route (oracle; independent of the theta series above)
# ---------------------------------------------------------------------------


def _check_m(m: float) -> float:
    m = float(m)
    if not 0.0 < m < 1.0:
        raise DomainError(f"modulus m must lie in (0, 1), got {m}")
    return m


# Quadratic convergence makes ~8 AGM steps plenty; the cap guards the final
# one-ulp oscillation between a and b.
_AGM_MAX_ITER = 40
_AGM_RTOL = 4e-16


def elliptic_K(m: float) -> float:
    """Complete elliptic integral of the first kind K(m), by the AGM iteration."""
    m = _check_m(m)
    a, b = 1.0, math.sqrt(1.0 - m)
    for _ in range(_AGM_MAX_ITER):
        if abs(a - b) <= _AGM_RTOL * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (a + b)


def elliptic_E(m: float) -> float:
    """Complete elliptic integral of the second kind E(m), by the AGM iteration."""
    m = _check_m(m)
    a, b = 1.0, math.sqrt(1.0 - m)
    csum = 0.5 * m  # 2^{-1} c_0^2 with c_0 = sqrt(m)
    pow2 = 0.5
    for _ in range(_AGM_MAX_ITER):
        if abs(a - b) <= _AGM_RTOL * a:
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        pow2 *= 2.0
        csum += pow2 * c * c
    return 2.0 * math.pi / (a + b) * 0.5 * (1.0 - csum)


def tau_from_m(m: float) -> complex:
    """Modular parameter tau = i K(1-m)/K(m) for real m in (0, 1)."""
    m = _check_m(m)
    return 1j * (elliptic_K(1.0 - m) / elliptic_K(m))


def agm_jacobi(u: float, m: float) -> tuple[float, float, float]:
    """(sn, cn, dn) at real u by the descending-AGM phase recurrence.

    This is the oracle route for the Jacobi elliptic functions; it shares no
    code with the theta-series route.
    """
    m = _check_m(m)
    a = [1.0]
    c = [math.sqrt(m)]
    b = math.sqrt(1.0 - m)
    while abs(c[-1]) > _AGM_RTOL * a[-1]:
        an = 0.5 * (a[-1] + b)
        cn_ = 0.5 * (a[-1] - b)
        b = math.sqrt(a[-1] * b)
        a.append(an)
        c.append(cn_)
        if len(a) > _AGM_MAX_ITER:
            raise ConvergenceError("AGM for Jacobi functions did not converge")
    n = len(a) - 1
    phi = (2.0**n) * a[n] * u
    for k in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, c[k] / a[k] * math.sin(phi)))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(max(0.0, 1.0 - m * sn * sn))  # dn > 0 for real u
    return sn, cn, dn


@dataclass(frozen=True)
class EllipticContext:
    """Real modulus m with the derived constants K, K', E and tau = i K'/K."""

    m: float
    K: float = field(init=False)
    Kprime: float = field(init=False)
    E: float = field(init=False)
    tau: complex = field(init=False)

    def __post_init__(self):
        m = _check_m(self.m)
        object.__setattr__(self, "m", m)
        K = elliptic_K(m)
        Kp = elliptic_K(1.0 - m)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "Kprime", Kp)
        object.__setattr__(self, "E", elliptic_E(m))
        object.__setattr__(self, "tau", 1j * (Kp / K))

    @property
    def q(self) -> float:
        return math.exp(-math.pi * self.Kprime / self.K)

    def z_from_u(self, u):
        """Map the elliptic argument u to the theta argument z = u*pi/(2K)."""
        return u * math.pi / (2.0 * self.K)


# ---------------------------------------------------------------------------
# Theta-ratio constructions (series route)
# ---------------------------------------------------------------------------


def _guard_theta4(z, tau):
    t4 = theta(4, z, tau)
    t1 = theta(1, z, tau)
    if np.any(np.abs(t4) < _POLE_RTOL * np.maximum(1.0, np.abs(t1))):
        raise PoleError(f"theta4 vanishes too close to z={z}")
    return t1, t4


def jacobi_elliptic(kind: str, u, ctx: EllipticContext):
    """sn/cn/dn at complex u, via the theta-ratio construction."""
    if kind not in ("sn", "cn", "dn"):
        raise DomainError(f"kind must be sn, cn or dn, got {kind!r}")
    z = ctx.z_from_u(np.asarray(u, dtype=complex))
    t1, t4 = _guard_theta4(z, ctx.tau)
    mq = ctx.m**0.25
    m1q = (1.0 - ctx.m) ** 0.25
    if kind == "sn":
        val = t1 / (mq * t4)
    elif kind == "cn":
        val = (m1q / mq) * theta(2, z, ctx.tau) / t4
    else:
        val = m1q * theta(3, z, ctx.tau) / t4
    if np.ndim(u) == 0:
        return complex(val)
    return val


def jacobi_zeta(u, ctx: EllipticContext):
    """Jacobi zeta function Z(u) = theta4'(z) / (theta3(0)^2 theta4(z))."""
    z = ctx.z_from_u(np.asarray(u, dtype=complex))
    _, t4 = _guard_theta4(z, ctx.tau)
    t30 = theta(3, 0.0, ctx.tau)
    val = theta_dz(4, z, ctx.tau, order=1) / (t30 * t30 * t4)
    if np.ndim(u) == 0:
        return complex(val)
    return val


def elliptic_E_via_theta(ctx: EllipticContext) -> float:
    """E(m) from theta constants: [1 - theta4''(0)/(theta3^4(0) theta4(0))] K.

    K itself is taken in the theta form (pi/2) theta3(0)^2 so the whole value
    comes from the series route.  The variant with a trailing factor
    pi*theta3(0)^2 is off by a factor 2; see the README erratum notes.
    """
    t30 = theta(3, 0.0, ctx.tau)
    t40 = theta(4, 0.0, ctx.tau)
    t4pp0 = theta_dz(4, 0.0, ctx.tau, order=2)
    k_theta = 0.5 * math.pi * (t30 * t30)
    val = (1.0 - t4pp0 / (t30**4 * t40)) * k_theta
    return float(val.real)
