"""Scattering amplitude of the Airy packet in the generalized Born approximation.

F(Q) = ∫ f(Q - k) Phi(k) d²k / (2π)²

Two independent routes are provided:

* :func:`scattering_amplitude` - the s-representation of the Born amplitude
  turns the k-integral into Gaussian-cubic integrals that are Airy
  functions, leaving one integral over s in [0, ∞);
* :func:`scattering_amplitude_oracle2d` - brute-force quadrature of the
  defining k-integral (slow, test and verification use).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .packet import AiryPacketParams, BeamKinematics, axis_factor, effective_spatial_wavefunction
from .potentials import PotentialSpec
from .quadrature import QuadratureError, adaptive_batch, gauss_legendre

__all__ = [
    "MomentumTransfer",
    "FlatAngles",
    "AmplitudeResult",
    "momentum_transfer",
    "momentum_transfer_arrays",
    "flat_from_polar",
    "polar_from_flat",
    "scattering_amplitude",
    "scattering_amplitudes",
    "scattering_amplitude_oracle2d",
    "point_potential_limit",
    "DEFAULT_RTOL",
]

DEFAULT_RTOL = 1e-8
_S_BREAKS = (0.0, 0.5, 1.0, 2.0, 4.0, 7.0, 11.0, 16.0, 22.0, 30.0, 40.0)
_TAIL_RTOL = 1e-12
_S_MAX = 400.0


@dataclass(frozen=True)
class MomentumTransfer:
    Qx: float
    Qy: float
    Qz: float

    @property
    def q2(self):
        return self.Qx ** 2 + self.Qy ** 2 + self.Qz ** 2

    def swapped(self):
        return MomentumTransfer(self.Qy, self.Qx, self.Qz)


@dataclass(frozen=True)
class FlatAngles:
    theta_x: float
    theta_y: float

    def __post_init__(self):
        if not (abs(self.theta_x) < math.pi / 2 and abs(self.theta_y) < math.pi / 2):
            raise ValueError("flat angles must lie in (-pi/2, pi/2)")


@dataclass(frozen=True)
class AmplitudeResult:
    value: complex
    abs2: float
    quadrature_error_estimate: float


def momentum_transfer_arrays(kin: BeamKinematics, theta, phi):
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    pf = kin.p_f
    st = np.sin(theta)
    return pf * st * np.cos(phi), pf * st * np.sin(phi), pf * np.cos(theta) - kin.p_i


def momentum_transfer(kin: BeamKinematics, theta: float, phi: float) -> MomentumTransfer:
    """Q for a plane wave scattered into polar direction (theta, phi)."""
    if not 0 <= theta <= math.pi:
        raise ValueError("theta must lie in [0, pi]")
    qx, qy, qz = momentum_transfer_arrays(kin, theta, phi)
    return MomentumTransfer(float(qx), float(qy), float(qz))


def polar_from_flat(theta_x, theta_y):
    """Polar (theta, phi) of the flat angles.

    cos(theta) = cos(theta_x) cos(theta_y) and
    sin(phi) = sin(theta_y) / sin(theta); phi = 0 at theta = 0.
    The direction vector is (sin θx cos θy, sin θy, cos θx cos θy).
    """
    tx = np.asarray(theta_x, dtype=float)
    ty = np.asarray(theta_y, dtype=float)
    if np.any(np.abs(tx) >= math.pi / 2) or np.any(np.abs(ty) >= math.pi / 2):
        raise ValueError("flat angles outside the forward hemisphere")
    nx = np.sin(tx) * np.cos(ty)
    ny = np.sin(ty)
    nz = np.cos(tx) * np.cos(ty)
    theta = np.arctan2(np.hypot(nx, ny), nz)
    phi = np.where(theta == 0.0, 0.0, np.arctan2(ny, nx))
    if theta.ndim == 0:
        return float(theta), float(phi)
    return theta, phi


def flat_from_polar(theta, phi):
    """Inverse of :func:`polar_from_flat` on the forward hemisphere."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if np.any(theta < 0) or np.any(theta >= math.pi / 2):
        raise ValueError("theta outside the forward hemisphere")
    nx = np.sin(theta) * np.cos(phi)
    ny = np.sin(theta) * np.sin(phi)
    nz = np.cos(theta)
    tx = np.arctan2(nx, nz)
    ty = np.arcsin(np.clip(ny, -1.0, 1.0))
    if tx.ndim == 0:
        return FlatAngles(float(tx), float(ty))
    return tx, ty


def _integrand_factory(qx, qy, qz, bx, by, packet: AiryPacketParams, pot: PotentialSpec):
    """Vectorized s-integrand (without the constant f0 N) for item arrays."""
    a = pot.a
    eta = pot.eta
    q2 = qx * qx + qy * qy + qz * qz
    sig = packet.sigma_perp

    # identical (q, b) pairs share an axis factor (mesoscopic b-grids)
    ux, inv_x = np.unique(np.stack([qx, bx]), axis=1, return_inverse=True)
    uy, inv_y = np.unique(np.stack([qy, by]), axis=1, return_inverse=True)
    inv_x = inv_x.ravel()
    inv_y = inv_y.ravel()

    def func(s, idx):
        s_col = s[:, None]
        ix = inv_x[idx]
        iy = inv_y[idx]
        kx, rx = np.unique(ix, return_inverse=True)
        ky, ry = np.unique(iy, return_inverse=True)
        Ex, Mx = axis_factor(s_col, ux[0, kx][None, :], ux[1, kx][None, :], packet.xi_x, sig, a)
        Ey, My = axis_factor(s_col, uy[0, ky][None, :], uy[1, ky][None, :], packet.xi_y, sig, a)
        expo = -s_col * (1.0 + q2[idx][None, :] * a * a / 4.0) + Ex[:, rx] + Ey[:, ry]
        return (1.0 + eta * s_col) * Mx[:, rx] * My[:, ry] * np.exp(expo)

    return func


def scattering_amplitudes(qx, qy, qz, packet: AiryPacketParams, pot: PotentialSpec,
                          rtol: float = DEFAULT_RTOL, bx=None, by=None):
    """Vectorized amplitude F for arrays of momentum transfers.

    ``bx``/``by`` optionally override the packet's impact parameter per item.
    Returns ``(values, error_estimates)``.
    """
    qx, qy, qz = (np.atleast_1d(np.asarray(v, dtype=float)).ravel() for v in (qx, qy, qz))
    n = qx.size
    bx = np.full(n, packet.b_x) if bx is None else np.broadcast_to(np.asarray(bx, float), (n,)).copy()
    by = np.full(n, packet.b_y) if by is None else np.broadcast_to(np.asarray(by, float), (n,)).copy()
    func = _integrand_factory(qx, qy, qz, bx, by, packet, pot)
    val, err, absint = adaptive_batch(func, n, _S_BREAKS, rtol=rtol)

    # tail beyond the last breakpoint: |g| <= C (1 + eta s) exp(-s)
    S = _S_BREAKS[-1]
    s_probe = np.array([S])
    g_end = np.abs(func(s_probe, np.arange(n))[0])
    C = g_end * math.exp(S) / (1.0 + pot.eta * S)
    ref = np.maximum(np.abs(val), 64 * np.finfo(float).eps * absint)
    tail = C * (1.0 + pot.eta * (S + 1.0)) * math.exp(-S)
    need = tail > _TAIL_RTOL * ref
    lo = S
    while np.any(need):
        hi = min(2.0 * lo, _S_MAX)
        if hi <= lo:
            raise QuadratureError("integrand tail does not decay within s_max", estimate=tail[need])
        idx = np.nonzero(need)[0]
        sub = _integrand_factory(qx[idx], qy[idx], qz[idx], bx[idx], by[idx], packet, pot)
        v2, e2, a2 = adaptive_batch(sub, idx.size, np.linspace(lo, hi, 5), rtol=rtol,
                                    floor=rtol * ref[idx])
        val[idx] += v2
        err[idx] += e2
        g_end = np.abs(sub(np.array([hi]), np.arange(idx.size))[0])
        C = g_end * math.exp(hi) / (1.0 + pot.eta * hi)
        tail_i = C * (1.0 + pot.eta * (hi + 1.0)) * math.exp(-hi)
        ref_i = np.maximum(np.abs(val[idx]), 64 * np.finfo(float).eps * absint[idx])
        need = np.zeros(n, dtype=bool)
        need[idx[tail_i > _TAIL_RTOL * ref_i]] = True
        lo = hi

    pref = pot.f0 * packet.norm
    return pref * val, abs(pref) * err


def scattering_amplitude(Q: MomentumTransfer, packet: AiryPacketParams, pot: PotentialSpec,
                         rtol: float = DEFAULT_RTOL) -> AmplitudeResult:
    """Amplitude F(Q) from the one-dimensional s-integral."""
    v, e = scattering_amplitudes(Q.Qx, Q.Qy, Q.Qz, packet, pot, rtol=rtol)
    value = complex(v[0])
    return AmplitudeResult(value, abs(value) ** 2, float(e[0]))


def _k_panels(xi, sigma, b, a, q, kmax):
    """Panel edges on [-kmax, kmax] sized to about one phase period each."""
    env_cut = math.sqrt(46.0) / sigma  # exp(-k² sigma²) < 1e-20 beyond
    grid = np.linspace(-kmax, kmax, 20001)
    rate = np.abs(xi ** 3 * grid ** 2 - b) + 1.0 / sigma + a + 1.0 / a
    rate = np.where(np.abs(grid) > env_cut, 1.0 / sigma, rate)
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (rate[1:] + rate[:-1]) * np.diff(grid))])
    npan = max(8, int(math.ceil(cum[-1] / (2.0 * math.pi))))
    targets = np.linspace(0.0, cum[-1], npan + 1)
    edges = np.interp(targets, cum, grid)
    edges[0], edges[-1] = -kmax, kmax
    return edges


def _composite_nodes(edges, n):
    x, w = gauss_legendre(n)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _oracle_sum(Q, packet, pot, n, edges_x, edges_y):
    kx, wx = _composite_nodes(edges_x, n)
    ky, wy = _composite_nodes(edges_y, n)
    sig2 = packet.sigma_perp ** 2
    phix = wx * np.exp(-kx * kx * sig2 + 1j * ((packet.xi_x * kx) ** 3 / 3.0 - kx * packet.b_x))
    phiy = wy * np.exp(-ky * ky * sig2 + 1j * ((packet.xi_y * ky) ** 3 / 3.0 - ky * packet.b_y))
    a2 = pot.a ** 2 / 4.0
    ux = a2 * (Q.Qx - kx) ** 2 + 1.0 + a2 * Q.Qz ** 2
    uy = a2 * (Q.Qy - ky) ** 2
    total = 0j
    block = max(1, 4_000_000 // max(1, ky.size))
    for i0 in range(0, kx.size, block):
        z = ux[i0:i0 + block, None] + uy[None, :]
        fz = (1.0 + pot.eta / z) / z
        total += phix[i0:i0 + block] @ (fz @ phiy)
    return pot.f0 * packet.norm * total / (2.0 * math.pi) ** 2


def scattering_amplitude_oracle2d(Q: MomentumTransfer, packet: AiryPacketParams, pot: PotentialSpec,
                                  rtol: float = DEFAULT_RTOL) -> AmplitudeResult:
    """Brute-force tensor-product quadrature of ∫ f(Q-k) Phi(k) d²k/(2π)².

    The box is ±8/sigma_perp per axis. Panels follow the local phase rate
    of the cubic phase, so they are about one oscillation wide; the rule
    is evaluated at two orders and the difference is the error estimate.
    Valid for any xi including 0.
    """
    kmax = 8.0 / packet.sigma_perp
    ex = _k_panels(packet.xi_x, packet.sigma_perp, packet.b_x, pot.a, Q.Qx, kmax)
    ey = _k_panels(packet.xi_y, packet.sigma_perp, packet.b_y, pot.a, Q.Qy, kmax)
    lo = _oracle_sum(Q, packet, pot, 14, ex, ey)
    hi = _oracle_sum(Q, packet, pot, 20, ex, ey)
    err = abs(hi - lo)
    if err > rtol * abs(hi) and err > 1e-300:
        # refine once by splitting every panel
        ex = np.sort(np.concatenate([ex, 0.5 * (ex[1:] + ex[:-1])]))
        ey = np.sort(np.concatenate([ey, 0.5 * (ey[1:] + ey[:-1])]))
        lo = hi
        hi = _oracle_sum(Q, packet, pot, 20, ex, ey)
        err = abs(hi - lo)
        if err > rtol * abs(hi):
            raise QuadratureError(f"2D oracle did not converge (error {err:.3g})", estimate=err)
    return AmplitudeResult(complex(hi), abs(hi) ** 2, float(err))


def point_potential_limit(packet: AiryPacketParams, pot: PotentialSpec) -> complex:
    """Amplitude in the a -> 0 limit: f0 (1 + eta) Psi_perp(b, s = 0)."""
    psi = effective_spatial_wavefunction(packet, packet.b_x, packet.b_y, s=0.0, a=pot.a)
    return complex(pot.f0 * (1.0 + pot.eta) * psi)
