"""
Airy function Ai(z) for complex argument.

Evaluation scheme
-----------------
Three representations cover the complex plane:

* ``|z| <= 4``: the two Maclaurin series with the Ai(0), Ai'(0) coefficients.
* ``|z| >= 9``: the asymptotic expansion in t = (2/3) z^{3/2}; for
  ``|arg z| > 2π/3`` the connection formula
  Ai(z) = -ω Ai(ωz) - ω² Ai(ω²z), ω = exp(2πi/3), moves both evaluations
  into the sector where the expansion has no Stokes-line accuracy loss.
* ``4 < |z| < 9``: Taylor steps of the Airy ODE y'' = z y along the ray
  through z. Where Ai is recessive (``|arg z| <= π/3``) the walk starts on
  the asymptotic circle and moves inward; elsewhere Ai is dominant and the
  walk starts on the series circle and moves outward. Both directions keep
  the contaminating solution from growing relative to Ai.

All functions accept scalars or arrays and broadcast elementwise.

The branch of z^{3/2} is principal (cut along the negative real axis) and
is always formed as ``z * sqrt(z)``.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

__all__ = [
    "AiryError",
    "AiryDomainError",
    "AiryOverflowError",
    "AiryBranchError",
    "airy_ai",
    "airy_ai_scaled",
    "airy_zero",
    "airy_zeros",
    "airy_contour_oracle",
    "MAX_ABS_Z",
    "MAX_ZERO_INDEX",
]

AI0 = 0.355028053887817239260063186004183176397979174199
AIP0 = -0.258819403792806798405183560189203963479091138354

SERIES_RADIUS = 4.0
ASYMPTOTIC_RADIUS = 9.0
MAX_ABS_Z = 1.0e4
MAX_ZERO_INDEX = 100

_N_SERIES = 22
_N_ASYM = 30
_N_TAYLOR = 26
_MAX_STEP = 0.5
_OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)
_EXP_LIMIT = 700.0


class AiryError(ArithmeticError):
    """Base class for special-function failures."""


class AiryDomainError(AiryError, ValueError):
    """Argument outside the documented evaluation domain (or not finite)."""


class AiryOverflowError(AiryError, OverflowError):
    """Unscaled Ai(z) is not representable in double precision."""


class AiryBranchError(AiryError, ValueError):
    """Principal-branch scaling requested on the branch cut."""


def _asym_coefficients(n):
    u = np.empty(n)
    v = np.empty(n)
    u[0] = v[0] = 1.0
    for k in range(1, n):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        v[k] = -u[k] * (6 * k + 1) / (6 * k - 1)
    return u, v


_U, _V = _asym_coefficients(_N_ASYM)


def _as_complex(z):
    z = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(z)):
        raise AiryDomainError("Airy argument must be finite")
    return z


def _series(z):
    """Ai and Ai' from the Maclaurin series (accurate for |z| <= 4)."""
    z3 = z * z * z
    f = np.ones_like(z)
    g = z.copy()
    fp = np.zeros_like(z)
    gp = np.ones_like(z)
    tf = np.ones_like(z)
    tg = z.copy()
    tfp = z * z / 2.0
    tgp = np.ones_like(z)
    fp += tfp
    for k in range(1, _N_SERIES):
        tf = tf * z3 / ((3 * k - 1) * (3 * k))
        tg = tg * z3 / ((3 * k) * (3 * k + 1))
        tgp = tgp * z3 / ((3 * k) * (3 * k - 2))
        f += tf
        g += tg
        gp += tgp
        if k >= 2:
            tfp = tfp * z3 / ((3 * k - 1) * (3 * k - 3))
            fp += tfp
    return AI0 * f + AIP0 * g, AI0 * fp + AIP0 * gp


def _asym_sector(z):
    """Scaled (Ai, Ai') times exp(zeta) for |arg z| <= 2π/3, |z| large."""
    sq = np.sqrt(z)
    zeta = (2.0 / 3.0) * z * sq
    q = sq ** 0.5  # z^{1/4}
    inv = -1.0 / zeta
    su = np.zeros_like(z)
    sv = np.zeros_like(z)
    p = np.ones_like(z)
    for k in range(_N_ASYM):
        su += _U[k] * p
        sv += _V[k] * p
        p = p * inv
    norm = 0.5 / math.sqrt(math.pi)
    return norm * su / q, -norm * q * sv, zeta


def _asym(z):
    """Scaled Ai, Ai' and zeta for |z| >= ASYMPTOTIC_RADIUS, any argument."""
    ai = np.empty_like(z)
    aip = np.empty_like(z)
    zeta = (2.0 / 3.0) * z * np.sqrt(z)
    direct = np.abs(np.angle(z)) <= 2.0 * math.pi / 3.0
    if np.any(direct):
        a, ap, _ = _asym_sector(z[direct])
        ai[direct] = a
        aip[direct] = ap
    far = ~direct
    if np.any(far):
        zf = z[far]
        z1 = _OMEGA * zf
        z2 = _OMEGA * _OMEGA * zf
        a1, ap1, zeta1 = _asym_sector(z1)
        a2, ap2, zeta2 = _asym_sector(z2)
        e1 = np.exp(zeta[far] - zeta1)
        e2 = np.exp(zeta[far] - zeta2)
        w = _OMEGA
        w2 = _OMEGA * _OMEGA
        ai[far] = -w * e1 * a1 - w2 * e2 * a2
        aip[far] = -w2 * e1 * ap1 - w * e2 * ap2
    return ai, aip, zeta


def _taylor_walk(z0, y, yp, z1):
    """Propagate (y, y') of y'' = z y from z0 to z1 by Taylor steps."""
    dist = np.abs(z1 - z0)
    nsteps = max(1, int(math.ceil(float(np.max(dist)) / _MAX_STEP))) if dist.size else 1
    h = (z1 - z0) / nsteps
    zc = z0.copy()
    h2 = h * h
    h3 = h2 * h
    for _ in range(nsteps):
        d_prev2 = y          # d_0
        d_prev1 = yp * h     # d_1
        ynew = d_prev2 + d_prev1
        ypnew_h = d_prev1.copy()
        d_nm1 = np.zeros_like(y)  # d_{-1}
        zh2 = zc * h2
        # d_{n+2} = (z0 h^2 d_n + h^3 d_{n-1}) / ((n+1)(n+2))
        dn = d_prev2
        dn1 = d_prev1
        for n in range(0, _N_TAYLOR - 2):
            d_next = (zh2 * dn + h3 * d_nm1) / ((n + 1) * (n + 2))
            ynew = ynew + d_next
            ypnew_h = ypnew_h + (n + 2) * d_next
            d_nm1, dn, dn1 = dn, dn1, d_next
        y = ynew
        yp = ypnew_h / h
        zc = zc + h
    return y, yp


def _airy_core(z):
    """Return (S, S', zeta) with Ai = S exp(-zeta), Ai' = S' exp(-zeta).

    zeta is identically zero outside the asymptotic region, so S is then the
    unscaled value itself.
    """
    z = np.atleast_1d(z)
    lower = z.imag < 0.0
    real_axis = z.imag == 0.0
    z = np.where(lower, np.conj(z), z)
    s = np.empty_like(z)
    sp = np.empty_like(z)
    zeta = np.zeros_like(z)
    r = np.abs(z)

    inner = r <= SERIES_RADIUS
    if np.any(inner):
        s[inner], sp[inner] = _series(z[inner])

    outer = r >= ASYMPTOTIC_RADIUS
    if np.any(outer):
        s[outer], sp[outer], zeta[outer] = _asym(z[outer])

    mid = ~(inner | outer)
    if np.any(mid):
        zm = z[mid]
        unit = zm / np.abs(zm)
        recessive = np.abs(np.angle(zm)) <= math.pi / 3.0
        ym = np.empty_like(zm)
        ypm = np.empty_like(zm)
        if np.any(recessive):
            z0 = ASYMPTOTIC_RADIUS * unit[recessive]
            a, ap, ze = _asym(z0)
            e = np.exp(-ze)
            ym[recessive], ypm[recessive] = _taylor_walk(z0, a * e, ap * e, zm[recessive])
        dom = ~recessive
        if np.any(dom):
            z0 = SERIES_RADIUS * unit[dom]
            a, ap = _series(z0)
            ym[dom], ypm[dom] = _taylor_walk(z0, a, ap, zm[dom])
        s[mid] = ym
        sp[mid] = ypm
    # Schwarz reflection: exact conjugate symmetry, real on the real axis
    s[real_axis & (zeta.imag == 0.0)] = s[real_axis & (zeta.imag == 0.0)].real
    sp[real_axis & (zeta.imag == 0.0)] = sp[real_axis & (zeta.imag == 0.0)].real
    s = np.where(lower, np.conj(s), s)
    sp = np.where(lower, np.conj(sp), sp)
    zeta = np.where(lower, np.conj(zeta), zeta)
    return s, sp, zeta


def _unscale(s, zeta):
    expo = -zeta.real
    if np.any(expo > _EXP_LIMIT):
        raise AiryOverflowError("Ai(z) overflows double precision; use airy_ai_scaled")
    if np.any(expo < -_EXP_LIMIT):
        raise AiryOverflowError("Ai(z) underflows double precision; use airy_ai_scaled")
    return s * np.exp(-zeta)


def _shape(out, z):
    if np.ndim(z) == 0:
        return out.reshape(()).item()
    return out.reshape(np.shape(z))


def airy_ai(z):
    """Airy function Ai(z) for complex z with ``|z| <= 1e4``.

    Raises
    ------
    AiryDomainError
        If ``|z|`` exceeds the evaluation domain or z is not finite.
    AiryOverflowError
        If Ai(z) cannot be represented without scaling.
    """
    zc = _as_complex(z)
    if np.any(np.abs(zc) > MAX_ABS_Z):
        raise AiryDomainError(f"|z| exceeds the evaluation domain {MAX_ABS_Z:g}")
    flat = zc.ravel()
    s, _, zeta = _airy_core(flat)
    out = _unscale(s, zeta)
    out[flat.imag == 0.0] = out[flat.imag == 0.0].real
    return _shape(out, z)


def airy_ai_prime(z):
    """Derivative Ai'(z); internal helper used by the zero finder and tests."""
    zc = _as_complex(z)
    if np.any(np.abs(zc) > MAX_ABS_Z):
        raise AiryDomainError(f"|z| exceeds the evaluation domain {MAX_ABS_Z:g}")
    flat = zc.ravel()
    _, sp, zeta = _airy_core(flat)
    out = _unscale(sp, zeta)
    out[flat.imag == 0.0] = out[flat.imag == 0.0].real
    return _shape(out, z)


def scaled_airy_any(z):
    """Ai(z) exp((2/3) z sqrt(z)) without the branch-cut check.

    Returns a flat array. Used by the amplitude integrand, which pairs this
    with an exponent formed on the same ``z * sqrt(z)`` branch.
    """
    zc = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
    s, _, zeta = _airy_core(zc)
    zeta_full = (2.0 / 3.0) * zc * np.sqrt(zc)
    # inside the asymptotic circle S is unscaled; |zeta| < 18 there
    small = np.abs(zc) < ASYMPTOTIC_RADIUS
    s[small] = s[small] * np.exp(zeta_full[small])
    return s


def airy_ai_scaled(z):
    """Exponentially scaled Airy function ``Ai(z) * exp((2/3) z^{3/2})``.

    Finite for every z with ``Re z >= 0`` regardless of ``|z|``.

    Raises
    ------
    AiryBranchError
        For z on the negative real axis, where the principal branch of
        z^{3/2} is discontinuous; use :func:`airy_ai` there.
    """
    zc = _as_complex(z)
    on_cut = (zc.imag == 0.0) & (zc.real < 0.0)
    if np.any(on_cut):
        raise AiryBranchError("scaled Ai is undefined on the negative real axis; use airy_ai")
    return _shape(scaled_airy_any(zc), z)


def _zero_seed(n):
    t = 3.0 * math.pi * (4 * n - 1) / 8.0
    return -(t ** (2.0 / 3.0)) * (1.0 + 5.0 / 48.0 * t ** -2 - 5.0 / 36.0 * t ** -4
                                  + 77125.0 / 82944.0 * t ** -6)


def _ai_real(x):
    return airy_ai(complex(x, 0.0)).real


@lru_cache(maxsize=None)
def _zero_table():
    zeros = []
    for n in range(1, MAX_ZERO_INDEX + 1):
        x = _zero_seed(n)
        for _ in range(50):
            s, sp, ze = _airy_core(np.array([complex(x, 0.0)]))
            e = np.exp(-ze[0])
            step = (s[0] * e).real / (sp[0] * e).real
            x -= step
            if abs(step) < 1e-15 * abs(x):
                break
        # bracket check against a bisection fallback
        lo, hi = x - 1e-6, x + 1e-6
        if _ai_real(lo) * _ai_real(hi) > 0.0:
            lo, hi = _zero_seed(n) - 0.3, _zero_seed(n) + 0.3
            flo = _ai_real(lo)
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                fm = _ai_real(mid)
                if flo * fm <= 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            x = 0.5 * (lo + hi)
        zeros.append(x)
    return tuple(zeros)


def airy_zero(n):
    """n-th negative real zero a_n of Ai (1-based, ``1 <= n <= 100``)."""
    if isinstance(n, bool) or int(n) != n:
        raise IndexError(f"zero index must be an integer, got {n!r}")
    n = int(n)
    if not 1 <= n <= MAX_ZERO_INDEX:
        raise IndexError(f"zero index {n} outside 1..{MAX_ZERO_INDEX}")
    return _zero_table()[n - 1]


def airy_zeros(count):
    """First ``count`` zeros a_1 > a_2 > ... as a numpy array."""
    if not 1 <= count <= MAX_ZERO_INDEX:
        raise IndexError(f"count {count} outside 1..{MAX_ZERO_INDEX}")
    return np.array(_zero_table()[:count])


def airy_contour_oracle(z, scaled=False, dps=None):
    """Ai(z) from the defining contour integral, in extended precision.

    The contour is the pair of rays t = -sqrt(z) + r exp(±iα), r >= 0,
    joined at the saddle point of z t - t³/3. Factoring out the saddle value
    gives ``Ai(z) = exp(-ζ) / (2πi) ∫ [e^{iα+} h(r e^{iα+}) - e^{iα-} h(r e^{iα-})] dr``
    with ``h(u) = exp(sqrt(z) u² - u³/3)``. The ray angles are chosen inside
    the convergence sectors to make the quadratic term as damping as
    possible. Test-only; slow.
    """
    import mpmath

    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise AiryDomainError("Airy argument must be finite")
    if abs(z) > 30.0:
        raise AiryDomainError("contour oracle is limited to |z| <= 30")
    sq = complex(np.sqrt(z))
    beta = math.atan2(sq.imag, sq.real) if sq != 0 else 0.0
    lo, hi = 7.0 * math.pi / 12.0, 3.0 * math.pi / 4.0
    alpha_p = min(max((math.pi - beta) / 2.0, lo), hi)
    alpha_m = max(min(-(math.pi + beta) / 2.0, -lo), -hi)

    growth = 0.0
    for a in (alpha_p, alpha_m):
        c = abs(sq) * math.cos(beta + 2.0 * a)
        cubic = math.cos(3.0 * a)
        if c > 0:
            r = 2.0 * c / cubic
            growth = max(growth, c * r * r - cubic * r ** 3 / 3.0)
    work_dps = dps if dps is not None else 25 + int(growth / 2.3)

    with mpmath.workdps(work_dps):
        msq = mpmath.sqrt(mpmath.mpc(z.real, z.imag))
        if sq == 0:
            msq = mpmath.mpc(0)
        ep = mpmath.expjpi(mpmath.mpf(alpha_p) / mpmath.pi)
        em = mpmath.expjpi(mpmath.mpf(alpha_m) / mpmath.pi)

        def integrand(r):
            up = r * ep
            um = r * em
            return ep * mpmath.exp(msq * up * up - up ** 3 / 3) - em * mpmath.exp(msq * um * um - um ** 3 / 3)

        scale = max(1.0, abs(sq))
        pts = [0] + [k * 1.5 / math.sqrt(scale) for k in range(1, 9)] + [mpmath.inf]
        val, err = mpmath.quad(integrand, pts, error=True, maxdegree=10)
        res = val / (2j * mpmath.pi)
        if abs(err) > 1e-12 * max(abs(val), mpmath.mpf(1e-30)) and abs(err) > 1e-20:
            raise AiryError(f"contour quadrature failed to converge (error estimate {float(abs(err)):.3g})")
        if not scaled:
            zeta = mpmath.mpf(2) / 3 * mpmath.mpc(z.real, z.imag) * msq
            res = res * mpmath.exp(-zeta)
        return complex(res)
