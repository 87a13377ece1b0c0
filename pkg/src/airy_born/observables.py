"""Measurable quantities built from the packet amplitude.

Single-atom angular densities, impact-parameter averages over mesoscopic and
macroscopic targets, azimuthal ratios, pattern classification and the
critical target size.
"""

from __future__ import annotations

import enum
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import RegularGridInterpolator
from scipy.signal import find_peaks

from .amplitude import (
    DEFAULT_RTOL,
    FlatAngles,
    momentum_transfer_arrays,
    polar_from_flat,
    scattering_amplitudes,
)
from .packet import AiryPacketParams, BeamKinematics, axis_factor
from .potentials import PotentialSpec, born_amplitude
from .quadrature import QuadratureError, gauss_hermite, gauss_kronrod_15, gauss_legendre

__all__ = [
    "AngularGrid",
    "TargetDistribution",
    "PatternKind",
    "PatternClass",
    "PatternGrid",
    "PatternGridError",
    "ClassificationAmbiguousError",
    "DivisionFloorError",
    "probability_density",
    "densities_polar",
    "pattern_grid",
    "classify_pattern",
    "azimuthal_ratio",
    "azimuthal_variation",
    "mesoscopic_density",
    "mesoscopic_densities_polar",
    "macroscopic_cross_section",
    "critical_size",
    "size_inequality_check",
    "MAIN_MAXIMUM_ARGUMENT",
]

#: position of the main maximum of Ai on the real axis (rounded)
MAIN_MAXIMUM_ARGUMENT = -1.018

PEAK_THRESHOLD = 0.20
PEAK_SEPARATION_DEG = 10.0
RING_SAMPLES = 720
#: ripple guard: a counted maximum must rise this far above its valleys
PEAK_PROMINENCE = 0.02
CIRCULAR_VARIATION = 0.10
_CHUNK = 2048
_HERMITE_NODES = 40
_VARIATION_UPGRADE = 1e3


class PatternGridError(ArithmeticError):
    """Failures on individual grid nodes; ``nodes`` lists (ix, iy, message)."""

    def __init__(self, nodes):
        self.nodes = nodes
        super().__init__(f"{len(nodes)} grid node(s) failed, first: {nodes[0] if nodes else None}")


class ClassificationAmbiguousError(ValueError):
    pass


class DivisionFloorError(ArithmeticError):
    pass


@dataclass(frozen=True)
class AngularGrid:
    theta_x_min: float = -0.3
    theta_x_max: float = 0.3
    theta_y_min: float = -0.3
    theta_y_max: float = 0.3
    nx: int = 201
    ny: int = 201

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs at least 2 nodes per axis")
        lims = (self.theta_x_min, self.theta_x_max, self.theta_y_min, self.theta_y_max)
        if any(not abs(v) < math.pi / 2 for v in lims):
            raise ValueError("grid bounds must lie inside (-pi/2, pi/2)")
        if not (self.theta_x_min < self.theta_x_max and self.theta_y_min < self.theta_y_max):
            raise ValueError("grid bounds must be increasing")

    def axes(self):
        return (np.linspace(self.theta_x_min, self.theta_x_max, self.nx),
                np.linspace(self.theta_y_min, self.theta_y_max, self.ny))

    def mesh(self):
        tx, ty = self.axes()
        return np.meshgrid(tx, ty, indexing="ij")

    def refined(self, factor=2):
        return AngularGrid(self.theta_x_min, self.theta_x_max, self.theta_y_min, self.theta_y_max,
                           factor * (self.nx - 1) + 1, factor * (self.ny - 1) + 1)


@dataclass(frozen=True)
class TargetDistribution:
    """Gaussian scatterer density n(b) of width sigma_b centred at b0."""

    b0_x: float
    b0_y: float
    sigma_b: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma_b) and self.sigma_b >= 0):
            raise ValueError("sigma_b must be non-negative")

    def density(self, b_x, b_y):
        if self.sigma_b == 0:
            raise ValueError("a zero-width target has no density function")
        s2 = self.sigma_b ** 2
        r2 = (np.asarray(b_x) - self.b0_x) ** 2 + (np.asarray(b_y) - self.b0_y) ** 2
        return np.exp(-r2 / (2 * s2)) / (2 * math.pi * s2)


class PatternKind(str, enum.Enum):
    CIRCULAR = "Circular"
    TWO_PETAL_X = "TwoPetalX"
    TWO_PETAL_Y = "TwoPetalY"
    FOUR_PETAL = "FourPetal"
    TRANSITIONAL = "Transitional"


@dataclass(frozen=True)
class PatternClass:
    kind: PatternKind
    peak_azimuths: list
    peak_values: list
    ring_theta: float = float("nan")
    ring_variation: float = float("nan")


@dataclass
class PatternGrid:
    """Density on a flat-angle grid; ``density[i, j]`` is at (theta_x[i], theta_y[j])."""

    theta_x: np.ndarray
    theta_y: np.ndarray
    density: np.ndarray
    error: np.ndarray = field(default=None)

    def rows(self):
        """(theta_x, theta_y, density) triples in x-major order."""
        for i, tx in enumerate(self.theta_x):
            for j, ty in enumerate(self.theta_y):
                yield float(tx), float(ty), float(self.density[i, j])


# ---------------------------------------------------------------- single atom

def _map_chunks(fn, n, threads):
    """Apply ``fn(slice)`` over fixed-size chunks; results in chunk order."""
    slices = [slice(i, min(i + _CHUNK, n)) for i in range(0, n, _CHUNK)]
    if threads is not None and threads != 1 and len(slices) > 1:
        workers = None if threads == 0 else threads
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return slices, list(ex.map(fn, slices))
    return slices, [fn(s) for s in slices]


def densities_polar(theta, phi, packet: AiryPacketParams, kin: BeamKinematics, pot: PotentialSpec,
                    rtol: float = DEFAULT_RTOL, threads=1):
    """|F|²/cos(theta_k) for arrays of polar angles; returns ``(density, error)``."""
    theta, phi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    shape = theta.shape
    qx, qy, qz = (v.ravel() for v in momentum_transfer_arrays(kin, theta, phi))
    ck = math.cos(kin.theta_k)

    def work(sl):
        v, e = scattering_amplitudes(qx[sl], qy[sl], qz[sl], packet, pot, rtol=rtol)
        return v, e

    slices, parts = _map_chunks(work, qx.size, threads)
    v = np.concatenate([p[0] for p in parts]) if parts else np.zeros(0, complex)
    e = np.concatenate([p[1] for p in parts]) if parts else np.zeros(0)
    dens = np.abs(v) ** 2 / ck
    err = 2.0 * np.abs(v) * e / ck
    return dens.reshape(shape), err.reshape(shape)


def probability_density(fa: FlatAngles, packet: AiryPacketParams, kin: BeamKinematics, pot: PotentialSpec,
                        rtol: float = DEFAULT_RTOL) -> float:
    """Single-atom angular density |F(Q)|² / cos(theta_k) at flat angles ``fa``."""
    theta, phi = polar_from_flat(fa.theta_x, fa.theta_y)
    d, _ = densities_polar(theta, phi, packet, kin, pot, rtol=rtol)
    return float(d)


def pattern_grid(grid: AngularGrid, packet: AiryPacketParams, kin: BeamKinematics, pot: PotentialSpec,
                 target: TargetDistribution | None = None, rtol: float = DEFAULT_RTOL,
                 threads=1) -> PatternGrid:
    """Evaluate the angular density (single atom or mesoscopic) on ``grid``."""
    tx, ty = grid.axes()
    TX, TY = grid.mesh()
    theta, phi = polar_from_flat(TX, TY)
    if target is not None and target.sigma_b > 0:
        try:
            d, e = mesoscopic_densities_polar(theta.ravel(), phi.ravel(), packet, kin, pot, target,
                                              rtol=rtol, threads=threads)
        except QuadratureError as exc:
            raise PatternGridError([(-1, -1, str(exc))]) from exc
        return PatternGrid(tx, ty, d.reshape(TX.shape), e.reshape(TX.shape))
    if target is not None:
        packet = packet.with_impact(target.b0_x, target.b0_y)
    try:
        d, e = densities_polar(theta, phi, packet, kin, pot, rtol=rtol, threads=threads)
    except QuadratureError:
        failed = []
        d = np.full(TX.shape, np.nan)
        e = np.full(TX.shape, np.nan)
        for i in range(TX.shape[0]):
            for j in range(TX.shape[1]):
                try:
                    dd, ee = densities_polar(theta[i, j], phi[i, j], packet, kin, pot, rtol=rtol)
                    d[i, j], e[i, j] = dd, ee
                except QuadratureError as exc:
                    failed.append((i, j, str(exc)))
        raise PatternGridError(failed)
    return PatternGrid(tx, ty, d, e)


# ------------------------------------------------------------ classification

def _ring_interpolator(pg: PatternGrid):
    scale = float(np.max(pg.density))
    if not scale > 0:
        raise ClassificationAmbiguousError("density vanishes on the whole grid")
    return RegularGridInterpolator((pg.theta_x, pg.theta_y), pg.density / scale, method="cubic")


def _flat_of(theta, phi):
    nx = np.sin(theta) * np.cos(phi)
    ny = np.sin(theta) * np.sin(phi)
    nz = np.cos(theta)
    return np.arctan2(nx, nz), np.arcsin(np.clip(ny, -1, 1))


def _count_peaks(signal, threshold, distance):
    n = signal.size
    top = signal.max()
    pad = n // 2
    ext = np.concatenate([signal[-pad:], signal, signal[:pad]])
    idx, _ = find_peaks(ext, height=threshold * top, distance=distance,
                        prominence=PEAK_PROMINENCE * top)
    idx = idx - pad
    idx = np.unique(idx[(idx >= 0) & (idx < n)])
    return idx


def classify_pattern(pg: PatternGrid, quadrature_floor: float = 0.0) -> PatternClass:
    """Petal classification of an angular density grid.

    The ring of largest azimuthal mean is located in polar angle and sampled
    at 720 azimuths. Maxima above 20% of the ring maximum (with at least that
    much prominence) and at least 10 degrees apart are counted; the count,
    and for two peaks their orientation, fixes the class. Densities below
    ``quadrature_floor`` are treated as zero. The verdict must be the same
    for thresholds 19% and 21%, otherwise the pattern is ambiguous.
    """
    dens = np.where(pg.density < quadrature_floor, 0.0, pg.density)
    pg = PatternGrid(pg.theta_x, pg.theta_y, dens)
    interp = _ring_interpolator(pg)
    reach = min(-pg.theta_x[0], pg.theta_x[-1], -pg.theta_y[0], pg.theta_y[-1])
    if not reach > 0:
        raise ValueError("grid must contain the forward direction")
    step = min(np.diff(pg.theta_x).min(), np.diff(pg.theta_y).min())
    radii = np.arange(step, 0.98 * reach, step / 2)
    phi = np.arange(RING_SAMPLES) * (2 * math.pi / RING_SAMPLES)
    T, P = np.meshgrid(radii, phi, indexing="ij")
    fx, fy = _flat_of(T, P)
    rings = np.clip(interp(np.stack([fx.ravel(), fy.ravel()], axis=-1)).reshape(T.shape), 0.0, None)
    k = int(np.argmax(rings.mean(axis=1)))
    ring = rings[k]
    top = ring.max()
    if not top > 0:
        raise ClassificationAmbiguousError("density vanishes on every ring")
    variation = (top - ring.min()) / top
    distance = int(round(PEAK_SEPARATION_DEG / 360 * RING_SAMPLES))

    def verdict(threshold):
        idx = _count_peaks(ring, threshold, distance)
        if variation < CIRCULAR_VARIATION:
            return PatternKind.CIRCULAR, idx
        az = phi[idx]
        if idx.size == 2:
            c = np.abs(np.cos(az))
            s = np.abs(np.sin(az))
            opposite = abs(abs(((az[1] - az[0]) + math.pi) % (2 * math.pi) - math.pi) - math.pi) < math.radians(30)
            if opposite and np.all(c > math.cos(math.radians(30))):
                return PatternKind.TWO_PETAL_X, idx
            if opposite and np.all(s > math.cos(math.radians(30))):
                return PatternKind.TWO_PETAL_Y, idx
            return PatternKind.TRANSITIONAL, idx
        if idx.size == 4:
            quadrants = np.floor(az / (math.pi / 2)).astype(int) % 4
            if len(set(quadrants.tolist())) == 4:
                return PatternKind.FOUR_PETAL, idx
        return PatternKind.TRANSITIONAL, idx

    kind, idx = verdict(PEAK_THRESHOLD)
    for thr in (0.95 * PEAK_THRESHOLD, 1.05 * PEAK_THRESHOLD):
        k2, idx2 = verdict(thr)
        if k2 is not kind or idx2.size != idx.size:
            raise ClassificationAmbiguousError(
                f"peak count unstable under threshold change ({idx.size} vs {idx2.size})")
    return PatternClass(kind, [float(phi[i]) for i in idx], [float(ring[i]) for i in idx],
                        float(radii[k]), float(variation))


# ------------------------------------------------------------ azimuthal ratio

def _check_reference(ref, ref_err):
    floor = max(100.0 * float(ref_err), 1e-300)
    if not ref > floor:
        raise DivisionFloorError(f"reference density {ref:.3g} is below the quadrature noise floor {floor:.3g}")


def azimuthal_ratio(theta, phi, packet: AiryPacketParams, kin: BeamKinematics, pot: PotentialSpec,
                    phi_reference: float = math.pi / 4, rtol: float = DEFAULT_RTOL,
                    target: TargetDistribution | None = None):
    """dnu(theta, phi) / dnu(theta, phi_reference); ``phi`` may be an array."""
    phi = np.asarray(phi, dtype=float)
    angles = np.concatenate([[phi_reference], phi.ravel()])
    th = np.full(angles.shape, float(theta))
    if target is None:
        d, e = densities_polar(th, angles, packet, kin, pot, rtol=rtol)
    else:
        d, e = mesoscopic_densities_polar(th, angles, packet, kin, pot, target, rtol=rtol)
    _check_reference(d[0], e[0])
    out = d[1:] / d[0]
    out[phi.ravel() == phi_reference] = 1.0
    return out.reshape(phi.shape) if phi.ndim else float(out[0])


def azimuthal_variation(theta, packet, kin, pot, target=None, n_phi=180, rtol=DEFAULT_RTOL):
    """max - min over phi in [0, 2π) of :func:`azimuthal_ratio`."""
    phi = np.arange(n_phi) * (2 * math.pi / n_phi)
    r = azimuthal_ratio(theta, phi, packet, kin, pot, rtol=rtol, target=target)
    return float(r.max() - r.min())


# ---------------------------------------------------------------- mesoscopic

def _s_rule():
    """Composite 15-point Kronrod rule on [0, 80] with its embedded Gauss weights."""
    edges = np.array([0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.5, 7.0, 9.0, 11.0, 13.5, 16.0,
                      19.0, 22.0, 26.0, 30.0, 35.0, 40.0, 50.0, 65.0, 80.0])
    x, wk, wg = gauss_kronrod_15()
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x).ravel()
    return nodes, (half[:, None] * wk).ravel(), (half[:, None] * wg).ravel()


def _axis_support(packet, axis, b_lo, b_hi, a):
    """Trim [b_lo, b_hi] to where the packet's axis profile is non-negligible."""
    xi = packet.xi_x if axis == 0 else packet.xi_y
    grid = np.linspace(b_lo, b_hi, 4001)
    E, M = axis_factor(0.0, 0.0, grid, xi, packet.sigma_perp, a)
    with np.errstate(over="ignore", under="ignore"):
        log_amp = np.log(np.abs(M) + 1e-300) + E.real
    keep = log_amp > log_amp.max() - 0.5 * math.log(1e32)
    if not np.any(keep):
        return b_lo, b_hi
    pad = 10.0 * a + 2.0 * packet.sigma_perp
    lo = max(b_lo, grid[keep][0] - pad)
    hi = min(b_hi, grid[keep][-1] + pad)
    return lo, hi


def _b_rule(target: TargetDistribution, packet, axis, a, upgraded):
    b0 = target.b0_x if axis == 0 else target.b0_y
    sb = target.sigma_b
    if not upgraded:
        x, w = gauss_hermite(_HERMITE_NODES)
        return b0 + math.sqrt(2.0) * sb * x, w / math.sqrt(math.pi)
    lo, hi = _axis_support(packet, axis, b0 - 6.0 * sb, b0 + 6.0 * sb, a)
    width = min(sb, packet.xi_x if axis == 0 else packet.xi_y, packet.sigma_perp)
    npan = max(4, int(math.ceil((hi - lo) / width)))
    edges = np.linspace(lo, hi, npan + 1)
    x, w = gauss_legendre(8)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x).ravel()
    weights = (half[:, None] * w).ravel()
    weights = weights * np.exp(-(nodes - b0) ** 2 / (2 * sb * sb)) / (math.sqrt(2 * math.pi) * sb)
    return nodes, weights


def _amplitude_matrices(qx, qy, qz, bx_nodes, by_nodes, packet, pot, s, *weights):
    """F(Q, bx_i, by_j) for one Q on a tensor b-grid, one matrix per s-weight set."""
    a = pot.a
    q2 = qx * qx + qy * qy + qz * qz
    g = (1.0 + pot.eta * s) * np.exp(-s * (1.0 + q2 * a * a / 4.0))
    Ex, Mx = axis_factor(s[:, None], qx, bx_nodes[None, :], packet.xi_x, packet.sigma_perp, a)
    Ey, My = axis_factor(s[:, None], qy, by_nodes[None, :], packet.xi_y, packet.sigma_perp, a)
    A = Mx * np.exp(Ex) * g[:, None]
    B = My * np.exp(Ey)
    pref = pot.f0 * packet.norm
    return [pref * ((A * w[:, None]).T @ B) for w in weights]


def _meso_one(qx, qy, qz, packet, pot, target, upgraded):
    bx, wx = _b_rule(target, packet, 0, pot.a, upgraded)
    by, wy = _b_rule(target, packet, 1, pot.a, upgraded)
    s, wk, wg = _s_rule()
    Fk, Fg = _amplitude_matrices(qx, qy, qz, bx, by, packet, pot, s, wk, wg)
    P = np.abs(Fk) ** 2
    vk = wx @ P @ wy
    vg = wx @ (np.abs(Fg) ** 2) @ wy
    return vk, abs(vk - vg), P


def mesoscopic_densities_polar(theta, phi, packet: AiryPacketParams, kin: BeamKinematics, pot: PotentialSpec,
                               target: TargetDistribution, rtol: float = DEFAULT_RTOL, threads=1):
    """Target-averaged density (1/cos theta_k) ∫|F(Q, b)|² n(b) d²b for polar-angle arrays.

    Tensor Gauss-Hermite nodes (40 x 40) scaled to sigma_b are used unless
    |F|² varies by more than 1e3 across them, in which case a composite
    Gauss-Legendre rule over b0 ± 6 sigma_b, trimmed to the packet support,
    replaces them. The s-integral uses a fixed composite Kronrod rule; its
    embedded Gauss rule supplies the error estimate.
    """
    theta, phi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    shape = theta.shape
    ck = math.cos(kin.theta_k)
    if target.sigma_b == 0:
        d, e = densities_polar(theta, phi, packet.with_impact(target.b0_x, target.b0_y), kin, pot, rtol=rtol)
        return d, e
    qx, qy, qz = (v.ravel() for v in momentum_transfer_arrays(kin, theta, phi))

    def one(i):
        v, err, P = _meso_one(qx[i], qy[i], qz[i], packet, pot, target, upgraded=False)
        pmax, pmin = P.max(), P.min()
        if pmax > _VARIATION_UPGRADE * max(pmin, 1e-300):
            v, err, P = _meso_one(qx[i], qy[i], qz[i], packet, pot, target, upgraded=True)
        if err > max(rtol * abs(v), 1e-300) * 100:
            raise QuadratureError(f"mesoscopic s-rule not converged at node {i}", estimate=err)
        return v, err

    idx = list(range(qx.size))
    if threads is not None and threads != 1 and len(idx) > 1:
        with ThreadPoolExecutor(max_workers=None if threads == 0 else threads) as ex:
            out = list(ex.map(one, idx))
    else:
        out = [one(i) for i in idx]
    vals = np.array([o[0] for o in out]) / ck
    errs = np.array([o[1] for o in out]) / ck
    return vals.reshape(shape), errs.reshape(shape)


def mesoscopic_density(fa: FlatAngles, packet, kin, pot, target: TargetDistribution,
                       rtol: float = DEFAULT_RTOL) -> float:
    theta, phi = polar_from_flat(fa.theta_x, fa.theta_y)
    d, _ = mesoscopic_densities_polar(theta, phi, packet, kin, pot, target, rtol=rtol)
    return float(d)


def impact_integrated_density(theta, phi, packet, kin, pot, b_range, n_panels=200, order=10):
    """∫|F(Q, b)|² d²b over the square ``b_range`` (lo, hi) on both axes.

    Test and verification helper: for a box covering the packet support,
    2π times this equals :func:`macroscopic_cross_section` times cos(theta_k).
    """
    lo, hi = b_range
    edges = np.linspace(lo, hi, n_panels + 1)
    x, w = gauss_legendre(order)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x).ravel()
    weights = (half[:, None] * w).ravel()
    qx, qy, qz = momentum_transfer_arrays(kin, theta, phi)
    s, wk, _ = _s_rule()
    F, = _amplitude_matrices(float(qx), float(qy), float(qz), nodes, nodes, packet, pot, s, wk)
    return float(weights @ (np.abs(F) ** 2) @ weights)


# ---------------------------------------------------------------- macroscopic

def macroscopic_cross_section(theta, phi, packet: AiryPacketParams, kin: BeamKinematics, pot: PotentialSpec,
                              rtol: float = 1e-10):
    """Averaged cross section over an infinitely wide random target.

    (1/cos theta_k) ∫ |f(Q - k)|² |Phi(k)|² d²k / (2π), which depends on the
    packet only through sigma_perp. Computed with tensor Gauss-Hermite nodes
    matched to the Gaussian |Phi|²; the node count is doubled until two
    successive results agree to ``rtol``.
    """
    qx, qy, qz = (float(v) for v in momentum_transfer_arrays(kin, theta, phi))
    sig = packet.sigma_perp
    prev = None
    for n in (32, 64, 128, 256):
        x, w = gauss_hermite(n)
        k = x / (math.sqrt(2.0) * sig)
        KX, KY = np.meshgrid(k, k, indexing="ij")
        f = born_amplitude(pot, (qx - KX) ** 2 + (qy - KY) ** 2 + qz * qz)
        # N² exp(-2σ²k²) d²k/(2π) with N = 2σ maps to (1/π) Σ w_i w_j
        val = float(w @ (f * f) @ w) / math.pi / math.cos(kin.theta_k)
        if prev is not None and abs(val - prev) <= rtol * abs(val):
            return val
        prev = val
    raise QuadratureError("macroscopic Gauss-Hermite rule did not converge", estimate=abs(val - prev))


# ------------------------------------------------------------- critical size

def critical_size(b0: float, xi: float, sigma_perp: float) -> float:
    """Largest target width that keeps the Airy side lobes visible.

    sigma_c = b0 - sigma_perp^4 / xi^3 - 1.018 xi, clamped at 0 (with a
    warning) when the target centre already overlaps the main lobe.
    """
    if not xi > 0:
        raise ValueError("xi must be positive")
    sc = b0 - sigma_perp ** 4 / xi ** 3 - (-MAIN_MAXIMUM_ARGUMENT) * xi
    if sc < 0:
        warnings.warn(f"critical size negative ({sc:.4g}); clamped to 0", RuntimeWarning, stacklevel=2)
        return 0.0
    return sc


def size_inequality_check(b: float, xi: float, sigma_perp: float) -> bool:
    """True when the Airy argument at ``b`` lies beyond the main maximum."""
    return -b / xi + sigma_perp ** 4 / xi ** 4 < MAIN_MAXIMUM_ARGUMENT
