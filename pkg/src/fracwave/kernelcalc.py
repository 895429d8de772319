"""Grid-level fractional calculus by product-integration quadrature.

The power kernel, Riemann-Liouville integrals and the two classical
fractional derivatives are realized on uniform time grids.  Integrals use
product-trapezoidal weights (exact for piecewise-linear data); Caputo
derivatives use the L1 scheme, which is the exact half of the same
construction applied to the derivative of the piecewise-linear interpolant.
"""

from __future__ import annotations

import numpy as np
from scipy.special import gamma

from .errors import DomainError
from .grids import TimeGrid, TimeSeries

__all__ = [
    "g_kernel",
    "rl_integral",
    "caputo_derivative",
    "rl_derivative",
    "pt_weights_matrixfree",
]


def g_kernel(alpha: float, t) -> float:
    """Power kernel t^(alpha-1)/Gamma(alpha); zero for t <= 0.

    Scalar or array `t` is accepted; non-finite inputs are rejected.
    """
    if not np.isfinite(alpha) or alpha <= 0:
        raise DomainError(f"kernel order must be finite and positive, got {alpha}")
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)):
        raise DomainError("kernel argument must be finite")
    with np.errstate(divide="ignore"):
        out = np.where(t_arr > 0, np.power(np.maximum(t_arr, 1e-300), alpha - 1.0), 0.0)
    out = out / gamma(alpha)
    if np.isscalar(t) or t_arr.ndim == 0:
        return float(out)
    return out


def _pt_tail_weights(alpha: float, n: int) -> np.ndarray:
    """Convolution part c_m of the product-trapezoidal rule, m = 0..n-1.

    c_0 weights the newest sample; c_m with m >= 1 the interior ones.  The
    oldest sample carries the separate boundary weight from `_pt_w0`.
    """
    m = np.arange(n, dtype=float)
    c = np.empty(n)
    c[0] = 1.0
    if n > 1:
        mm = m[1:]
        c[1:] = (mm + 1.0) ** (alpha + 1.0) - 2.0 * mm ** (alpha + 1.0) + (mm - 1.0) ** (alpha + 1.0)
    return c


def _pt_w0(alpha: float, n_max: int) -> np.ndarray:
    """Boundary weight of sample 0 at each node n = 0..n_max."""
    n = np.arange(n_max + 1, dtype=float)
    w0 = np.zeros(n_max + 1)
    nn = n[1:]
    w0[1:] = (nn - 1.0) ** (alpha + 1.0) - (nn - 1.0 - alpha) * nn**alpha
    return w0


def pt_weights_matrixfree(alpha: float, n_steps: int, dt: float):
    """Scale, boundary and convolution weights of the product-trapezoid rule.

    Returns (scale, w0, c) so that the integral of g_alpha against a
    piecewise-linear f at node n is scale*(w0[n]*f[0] + sum_{j>=1} c[n-j]*f[j]).
    """
    scale = dt**alpha / gamma(alpha + 2.0)
    return scale, _pt_w0(alpha, n_steps), _pt_tail_weights(alpha, n_steps)


def rl_integral(alpha: float, f: TimeSeries) -> TimeSeries:
    """Riemann-Liouville integral of order alpha > 0 at every grid node.

    Product-trapezoidal quadrature: the convolution of g_alpha with the
    piecewise-linear interpolant of f, evaluated exactly.  Node 0 is 0.
    """
    if not np.isfinite(alpha) or alpha <= 0:
        raise DomainError(f"integral order must be positive, got {alpha}")
    n = f.grid.n_steps
    scale, w0, c = pt_weights_matrixfree(alpha, n, f.grid.dt)
    y = f.values
    out = np.zeros(n + 1, dtype=y.dtype)
    # S_n = sum_{j=1}^{n} c_{n-j} y_j, evaluated for all n at once
    conv = np.convolve(y[1:], c)[:n]
    out[1:] = scale * (w0[1:] * y[0] + conv)
    return TimeSeries(f.grid, out)


def _l1_values(alpha: float, f: TimeSeries) -> np.ndarray:
    """L1-scheme Caputo derivative values at nodes 1..n (node 0 left as nan)."""
    n = f.grid.n_steps
    dt = f.grid.dt
    k = np.arange(n, dtype=float)
    d = (k + 1.0) ** (1.0 - alpha) - k ** (1.0 - alpha)
    df = np.diff(f.values)
    conv = np.convolve(df, d)[:n]
    out = np.empty(n + 1, dtype=df.dtype)
    out[0] = np.nan
    out[1:] = conv * dt ** (-alpha) / gamma(2.0 - alpha)
    return out


def caputo_derivative(alpha: float, f: TimeSeries) -> TimeSeries:
    """Caputo derivative of order alpha in (0, 1] by the L1 scheme.

    The node-0 value is the limit from the right, extrapolated linearly from
    nodes 1 and 2.  Orders above 1 are rejected; compose two half-order
    applications for them.

    Sampled inputs are assumed to come from functions with integrable first
    derivative; that membership is not checkable numerically.
    """
    if not np.isfinite(alpha) or not (0.0 < alpha <= 1.0):
        raise DomainError(f"Caputo order must lie in (0, 1], got {alpha}")
    out = _l1_values(alpha, f)
    out[0] = 2.0 * out[1] - out[2]
    return TimeSeries(f.grid, out)


def rl_derivative(alpha: float, f: TimeSeries) -> TimeSeries:
    """Riemann-Liouville derivative of order alpha in (0, 1].

    Computed as the exact derivative of the product-trapezoidal
    reconstruction of J^(1-alpha) f, which splits into f(0)*g_(1-alpha) plus
    the L1 form; the two derivatives coincide when f(0) = 0.
    """
    if not np.isfinite(alpha) or not (0.0 < alpha <= 1.0):
        raise DomainError(f"RL order must lie in (0, 1], got {alpha}")
    out = _l1_values(alpha, f)
    if alpha < 1.0:
        nodes = f.grid.nodes
        out[1:] = out[1:] + f.values[0] * g_kernel(1.0 - alpha, nodes[1:])
    out[0] = 2.0 * out[1] - out[2]
    return TimeSeries(f.grid, out)
