"""Incident Airy wave packet.

Units: lengths in units of the potential radius a, momenta in 1/a,
hbar = m_e = 1.

The transverse momentum wave function is

    Phi(k) = N exp(-k² sigma²) exp(i (xi_x³ k_x³ + xi_y³ k_y³)/3 - i k·b)

with N = 2 sigma, fixed by ∫|Phi|² d²k / (2π) = 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .special_functions import airy_ai, airy_zero, scaled_airy_any

__all__ = [
    "AiryPacketParams",
    "BeamKinematics",
    "SpecialPointKind",
    "SpecialPoint",
    "GAUSSIAN_XI_FRACTION",
    "HARTREE_EV",
    "momentum_wavefunction",
    "axis_factor",
    "effective_spatial_wavefunction",
    "special_point",
    "validate_regime",
    "kinetic_energy_ev",
]

#: xi below this fraction of sigma_perp is treated as a Gaussian axis
GAUSSIAN_XI_FRACTION = 1e-3
HARTREE_EV = 27.211386245988
REGIME_RATIO = 0.1


@dataclass(frozen=True)
class AiryPacketParams:
    """Transverse state of the Airy packet.

    ``norm`` is not an input: it is fixed to 2 sigma_perp.
    """

    sigma_perp: float
    xi_x: float
    xi_y: float
    b_x: float = 0.0
    b_y: float = 0.0
    sigma_z: float = 50.0
    norm: float = field(init=False)

    def __post_init__(self):
        for name in ("sigma_perp", "sigma_z"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        for name in ("xi_x", "xi_y"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be non-negative and finite, got {v}")
        for name in ("b_x", "b_y"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        object.__setattr__(self, "norm", 2.0 * self.sigma_perp)

    @classmethod
    def symmetric(cls, sigma_perp, xi_ratio=2.0, b=0.0, **kw):
        """Packet with xi_x = xi_y = xi_ratio * sigma and b_x = b_y = b."""
        xi = xi_ratio * sigma_perp
        return cls(sigma_perp=sigma_perp, xi_x=xi, xi_y=xi, b_x=b, b_y=b, **kw)

    def with_impact(self, b_x, b_y):
        return AiryPacketParams(self.sigma_perp, self.xi_x, self.xi_y, b_x, b_y, self.sigma_z)

    def is_gaussian_axis(self, axis):
        xi = self.xi_x if axis == "x" else self.xi_y
        return xi < GAUSSIAN_XI_FRACTION * self.sigma_perp

    def swapped(self):
        """Mirror x <-> y."""
        return AiryPacketParams(self.sigma_perp, self.xi_y, self.xi_x, self.b_y, self.b_x, self.sigma_z)


@dataclass(frozen=True)
class BeamKinematics:
    """Longitudinal momentum p_i and conical angle theta_k."""

    p_i: float
    theta_k: float = 0.0

    def __post_init__(self):
        if not self.p_i > 0:
            raise ValueError(f"p_i must be positive, got {self.p_i}")
        if not 0 <= self.theta_k < math.pi / 2:
            raise ValueError("theta_k must lie in [0, pi/2)")

    @classmethod
    def from_kappa0(cls, p_i, kappa0):
        return cls(p_i=p_i, theta_k=math.atan2(kappa0, p_i))

    @property
    def kappa0(self):
        return self.p_i * math.tan(self.theta_k)

    @property
    def p_f(self):
        return math.hypot(self.p_i, self.kappa0)


class SpecialPointKind(str, enum.Enum):
    TYPE1 = "Type1"
    TYPE2X = "Type2X"
    TYPE2Y = "Type2Y"


@dataclass(frozen=True)
class SpecialPoint:
    b_x: float
    b_y: float
    kind: SpecialPointKind
    indices: tuple


def momentum_wavefunction(params: AiryPacketParams, k_x, k_y):
    """Phi(k_x, k_y) of the Airy packet (broadcasts over arrays)."""
    k_x = np.asarray(k_x, dtype=float)
    k_y = np.asarray(k_y, dtype=float)
    s2 = params.sigma_perp ** 2
    phase = ((params.xi_x * k_x) ** 3 + (params.xi_y * k_y) ** 3) / 3.0 - k_x * params.b_x - k_y * params.b_y
    return params.norm * np.exp(-(k_x ** 2 + k_y ** 2) * s2) * np.exp(1j * phase)


def axis_factor(s, q, b, xi, sigma, a):
    """One transverse axis of the s-dependent packet function.

    Returns ``(E, M)`` with the axis factor equal to ``M * exp(E)``:

        (1/xi) exp((2/3) rho^6 - i rho² zeta) Ai(rho^4 - i zeta)
        rho² = (a² s / 4 + sigma²) / xi²,  zeta = q a² s / (2 xi) - i b / xi

    The large exponent (2/3) rho^6 cancels analytically against the decay of
    Ai; E is formed from that difference directly, so neither factor
    overflows. Arguments broadcast; ``xi`` below the Gaussian threshold uses
    the closed-form Gaussian integral instead.
    """
    s, q, b = np.broadcast_arrays(np.asarray(s, float), np.asarray(q, float), np.asarray(b, float))
    width2 = a * a * s / 4.0 + sigma * sigma
    if xi < GAUSSIAN_XI_FRACTION * sigma:
        c = q * a * a * s / 2.0 - 1j * b
        E = c * c / (4.0 * width2)
        M = (0.5 / math.sqrt(math.pi)) / np.sqrt(width2) + 0j
        return E, M

    rho2 = width2 / (xi * xi)
    rho4 = rho2 * rho2
    y = -b / xi - 1j * q * a * a * s / (2.0 * xi)  # -i zeta
    w = rho4 + y
    E = np.empty(w.shape, dtype=complex)
    M = np.empty(w.shape, dtype=complex)

    right = w.real >= 0.0
    if np.any(right):
        yr = y[right]
        r4 = rho4[right]
        r2 = rho2[right]
        r = np.sqrt(w[right] / r4)
        E[right] = -(2.0 / 3.0) * (yr * yr / r2) * (r + 0.5) / (1.0 + r) ** 2
        M[right] = scaled_airy_any(w[right]) / xi
    left = ~right
    if np.any(left):
        # rho^4 < b/xi here, so the plain exponent stays small
        r2 = rho2[left]
        E[left] = (2.0 / 3.0) * r2 ** 3 + r2 * y[left]
        M[left] = airy_ai(w[left]) / xi
    return E, M


def effective_spatial_wavefunction(params: AiryPacketParams, x, y, s=0.0, Q=(0.0, 0.0), a=1.0):
    """Psi_perp(x, y, s): packet function at impact parameter (x, y).

    At s = 0 this is the transverse wave function in coordinate space, with
    the same prefactor that enters the scattering amplitude. ``Q`` is the
    transverse momentum transfer (Q_x, Q_y).
    """
    Ex, Mx = axis_factor(s, Q[0], x, params.xi_x, params.sigma_perp, a)
    Ey, My = axis_factor(s, Q[1], y, params.xi_y, params.sigma_perp, a)
    out = params.norm * Mx * My * np.exp(Ex + Ey)
    return out if out.ndim else out.item()


def _axis_special(xi, sigma, m):
    return float(xi * (sigma ** 4 / xi ** 4 - airy_zero(m)))


def special_point(params: AiryPacketParams, m: int, n: int) -> SpecialPoint:
    """Impact parameter on the m-th (x) and n-th (y) Airy zero.

    An index of 0 leaves that axis unconstrained (its value is taken from
    ``params``).
    """
    if m == 0 and n == 0:
        raise ValueError("at least one zero index must be non-zero")
    sig = params.sigma_perp
    bx = _axis_special(params.xi_x, sig, m) if m else params.b_x
    by = _axis_special(params.xi_y, sig, n) if n else params.b_y
    for idx, b, xi in ((m, bx, params.xi_x), (n, by, params.xi_y)):
        if idx:
            residual = abs(airy_ai(-b / xi + sig ** 4 / xi ** 4))
            if residual >= 1e-8:
                raise ArithmeticError(f"special point residual {residual:.3g} too large")
    if m and n:
        kind = SpecialPointKind.TYPE1
    elif m:
        kind = SpecialPointKind.TYPE2X
    else:
        kind = SpecialPointKind.TYPE2Y
    return SpecialPoint(bx, by, kind, (m, n))


def validate_regime(params: AiryPacketParams, kin: BeamKinematics, a: float = 1.0):
    """Check the small-ratio conditions behind the generalized Born formula.

    A condition ``u << v`` counts as satisfied when ``u / v < 0.1``.
    Returns a list of human-readable warnings; nothing is fatal.
    """
    checks = [
        ("a << sigma_z", a, params.sigma_z),
        ("1/sigma_perp << p_i", 1.0 / params.sigma_perp, kin.p_i),
        ("1/sigma_z << p_i", 1.0 / params.sigma_z, kin.p_i),
    ]
    if kin.kappa0 > 0:
        checks.insert(1, ("sigma_z << sigma_perp p_i / kappa0", params.sigma_z,
                          params.sigma_perp * kin.p_i / kin.kappa0))
    out = []
    for label, u, v in checks:
        ratio = u / v
        if not ratio < REGIME_RATIO:
            out.append(f"{label} violated: ratio {ratio:.4g} >= {REGIME_RATIO}")
    return out


def kinetic_energy_ev(kin) -> float:
    """Kinetic energy p_i²/2 in eV (p_i in inverse Bohr radii)."""
    p = kin.p_i if isinstance(kin, BeamKinematics) else float(kin)
    return 0.5 * p * p * HARTREE_EV
