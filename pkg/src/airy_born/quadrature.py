"""Quadrature rules shared by the amplitude and observable code.

The adaptive integrator handles a *batch* of integrands that share their
abscissae: each panel is evaluated once for every item still unresolved on
it, and the accept/bisect decision is made per item. An item's value depends
only on its own error estimates, never on what else is in the batch.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = ["QuadratureError", "gauss_kronrod_15", "gauss_legendre", "gauss_hermite", "adaptive_batch"]

# 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1] (QUADPACK qk15)
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])


#: relative noise of the special-function values feeding the integrands;
#: panel errors below this fraction of the panel's ∫|f| are not bisected
NOISE_LEVEL = 1e-11


class QuadratureError(ArithmeticError):
    """Raised when a rule fails to reach its tolerance.

    ``estimate`` carries the achieved error estimate (scalar or array).
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


@lru_cache(maxsize=None)
def gauss_kronrod_15():
    """Nodes on [-1, 1], Kronrod weights and Gauss weights (zero off-Gauss)."""
    x = np.concatenate([-_XK[:-1], _XK[::-1]])
    wk = np.concatenate([_WK[:-1], _WK[::-1]])
    wg = np.zeros(15)
    # Gauss nodes are the odd-indexed Kronrod nodes (0.949.., 0.741.., 0.405.., 0)
    gauss_idx_pos = [1, 3, 5, 7]
    for j, k in enumerate(gauss_idx_pos):
        wg[k] = _WG[j]
        wg[14 - k] = _WG[j]
    return x, wk, wg


@lru_cache(maxsize=None)
def gauss_legendre(n):
    return np.polynomial.legendre.leggauss(n)


@lru_cache(maxsize=None)
def gauss_hermite(n):
    return np.polynomial.hermite.hermgauss(n)


def adaptive_batch(func, n_items, breakpoints, rtol=1e-8, floor=None, max_depth=30):
    """Integrate ``n_items`` integrands over consecutive panels.

    Parameters
    ----------
    func : callable
        ``func(s, idx)`` returns an array of shape ``(len(s), len(idx))`` with
        the integrand values of items ``idx`` at abscissae ``s``.
    breakpoints : sequence of float
        Initial panel edges.
    rtol : float
        Target relative error per item.
    floor : array or None
        Absolute error floor per item (added to the relative target).

    Returns
    -------
    value, error, absint : arrays of length n_items
        The integral, the summed |Kronrod - Gauss| estimate and the Kronrod
        estimate of ∫|f| (used by callers for noise floors).
    """
    x, wk, wg = gauss_kronrod_15()
    edges = np.asarray(breakpoints, dtype=float)
    total_len = edges[-1] - edges[0]
    value = np.zeros(n_items, dtype=complex)
    error = np.zeros(n_items)
    absint = np.zeros(n_items)
    all_idx = np.arange(n_items)

    def panel(a, b, idx):
        half = 0.5 * (b - a)
        s = 0.5 * (a + b) + half * x
        f = func(s, idx)
        k = half * (wk @ f)
        g = half * (wg @ f)
        return k, np.abs(k - g), half * (wk @ np.abs(f))

    def good(e, ab, share):
        # a difference at noise level cannot be reduced by bisection
        return (e <= share) | (e <= NOISE_LEVEL * ab)

    # coarse pass fixes each item's target from its own magnitude
    coarse = []
    for a, b in zip(edges[:-1], edges[1:]):
        k, e, ab = panel(a, b, all_idx)
        coarse.append((a, b, k, e, ab))
    est = sum(c[2] for c in coarse)
    est_abs = sum(c[4] for c in coarse)
    eps_floor = 64 * np.finfo(float).eps * est_abs
    target = np.maximum(rtol * np.abs(est), eps_floor)
    if floor is not None:
        target = np.maximum(target, floor)

    stack = []
    for a, b, k, e, ab in coarse:
        ok = good(e, ab, target * (b - a) / total_len)
        value[ok] += k[ok]
        error[ok] += e[ok]
        absint[ok] += ab[ok]
        if not np.all(ok):
            stack.append((a, b, all_idx[~ok], 1))

    unresolved = []
    while stack:
        a, b, idx, depth = stack.pop()
        m = 0.5 * (a + b)
        for lo, hi in ((a, m), (m, b)):
            k, e, ab = panel(lo, hi, idx)
            ok = good(e, ab, target[idx] * (hi - lo) / total_len)
            if depth + 1 >= max_depth:
                unresolved.append(idx[~ok])
                ok[:] = True
            acc = idx[ok]
            value[acc] += k[ok]
            error[acc] += e[ok]
            absint[acc] += ab[ok]
            if not np.all(ok):
                stack.append((lo, hi, idx[~ok], depth + 1))

    if unresolved and any(len(u) for u in unresolved):
        bad = np.unique(np.concatenate(unresolved))
        raise QuadratureError(
            f"adaptive quadrature hit depth {max_depth} for {bad.size} item(s)",
            estimate=error[bad],
        )
    return value, error, absint
