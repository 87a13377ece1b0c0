"""Born amplitudes of the hydrogen ground state and the Yukawa potential.

Both are written through the unified form ``f(q) = f0 * I(eta, 1 + q² a² / 4)``
with ``I(eta, z) = 1/z + eta/z²``, the closed form of
``∫_0^∞ (1 + eta s) exp(-s z) ds``. The s-representation is what makes the
packet amplitude collapse to a one-dimensional integral.

Atomic units throughout (hbar = m_e = 1 unless ``m_e`` is given).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PotentialKind",
    "PotentialSpec",
    "hydrogen_spec",
    "yukawa_spec",
    "i_function",
    "born_amplitude",
    "hydrogen_born_direct",
    "yukawa_born_direct",
]


class PotentialKind(str, enum.Enum):
    HYDROGEN = "hydrogen"
    YUKAWA = "yukawa"


@dataclass(frozen=True)
class PotentialSpec:
    """Unified potential descriptor.

    Attributes
    ----------
    eta : float
        1 for hydrogen, 0 for Yukawa.
    a : float
        Effective radius (Bohr radius, or 2/mu for Yukawa).
    f0 : float
        Amplitude prefactor (a/2 for hydrogen, -2 m_e V0 / mu² for Yukawa).
    kind : PotentialKind
    """

    eta: float
    a: float
    f0: float
    kind: PotentialKind

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"effective radius must be positive, got a={self.a}")
        if self.kind is PotentialKind.HYDROGEN and (self.eta != 1.0 or self.f0 != self.a / 2.0):
            raise ValueError("hydrogen requires eta = 1 and f0 = a/2")
        if self.kind is PotentialKind.YUKAWA and self.eta != 0.0:
            raise ValueError("Yukawa requires eta = 0")


def hydrogen_spec(a: float = 1.0) -> PotentialSpec:
    return PotentialSpec(eta=1.0, a=float(a), f0=float(a) / 2.0, kind=PotentialKind.HYDROGEN)


def yukawa_spec(V0: float, mu: float, m_e: float = 1.0) -> PotentialSpec:
    """Yukawa potential V0 exp(-mu r)/r mapped onto (eta, a, f0).

    With a = 2/mu the unified argument is 1 + q²/mu², which reproduces
    -2 m_e V0 / (q² + mu²) exactly.
    """
    if not mu > 0:
        raise ValueError(f"mu must be positive, got {mu}")
    return PotentialSpec(eta=0.0, a=2.0 / mu, f0=-2.0 * m_e * V0 / mu ** 2, kind=PotentialKind.YUKAWA)


def i_function(eta, z):
    """``1/z + eta/z²``; defined for ``Re z > 0``."""
    z = np.asarray(z)
    if np.any(np.real(z) <= 0):
        raise ValueError("I(eta, z) diverges for Re(z) <= 0")
    out = 1.0 / z + eta / (z * z)
    return out if out.ndim else out.item()


def born_amplitude(spec: PotentialSpec, q2):
    """Plane-wave Born amplitude f(q) for squared momentum transfer q2."""
    q2 = np.asarray(q2, dtype=float)
    if np.any(q2 < 0):
        raise ValueError("q2 must be non-negative")
    return spec.f0 * i_function(spec.eta, 1.0 + q2 * spec.a ** 2 / 4.0)


def hydrogen_born_direct(a, q2):
    x = 1.0 + np.asarray(q2) * a * a / 4.0
    return a / 2.0 * (1.0 / x + 1.0 / (x * x))


def yukawa_born_direct(V0, mu, q2, m_e=1.0):
    return -2.0 * m_e * V0 / (np.asarray(q2) + mu * mu)
