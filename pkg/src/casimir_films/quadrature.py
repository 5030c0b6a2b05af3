"""Adaptive panel quadrature for smooth, exponentially decaying integrands.

Fixed-order Gauss-Legendre panels with bisection refinement. The integrator
works on many rows at once (each row owns an interval [lo_i, lo_i + span] and
its own integrand parameters selected through the row index), so a whole block
of Matsubara terms is evaluated in a handful of vectorized integrand calls.

Error control per row: a panel's error is the difference between its one-shot
Gauss value and the sum over its two halves; panels are bisected until the
summed error drops below max(rel_tol * |I|, 1e-3 * rel_tol * L1, abs_floor),
the L1 term guarding rows whose integral is small through cancellation.
"""

from __future__ import annotations

import numpy as np

_GAUSS_X, _GAUSS_W = np.polynomial.legendre.leggauss(15)

# initial panel edges as offsets from the lower limit, graded toward the
# exponential peak at the lower end; the last edge is stretched to the span
_BASE_OFFSETS = np.array([0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0])


class QuadratureError(RuntimeError):
    """Raised when panel refinement exhausts its budget."""


def _gauss_batch(f, rows, lo, hi):
    """15-point Gauss values for a batch of intervals, one integrand call."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    nodes = mid[:, None] + half[:, None] * _GAUSS_X[None, :]
    row_rep = np.repeat(rows, _GAUSS_X.size)
    vals = f(row_rep, nodes.ravel()).reshape(nodes.shape)
    return half * (vals @ _GAUSS_W)


def integrate_rows(f, lower, span, rel_tol, abs_floor,
                   max_panels_per_row=2048, max_rounds=60):
    """Integrate f over [lower[i], lower[i] + span] for every row i.

    f(row_indices, v) must accept equal-length 1D arrays and return the
    integrand values; row_indices selects per-row parameters inside f.
    Returns (integrals, error_estimates) as 1D arrays over rows.
    """
    lower = np.asarray(lower, dtype=float)
    n_rows = lower.size
    edges = np.concatenate([_BASE_OFFSETS, [float(span)]])

    # panel arrays, one entry per live panel (across all rows)
    p_row = np.repeat(np.arange(n_rows), edges.size - 1)
    p_lo = (lower[:, None] + edges[None, :-1]).ravel()
    p_hi = (lower[:, None] + edges[None, 1:]).ravel()

    whole = _gauss_batch(f, p_row, p_lo, p_hi)
    p_mid = 0.5 * (p_lo + p_hi)
    left = _gauss_batch(f, p_row, p_lo, p_mid)
    right = _gauss_batch(f, p_row, p_mid, p_hi)
    p_left, p_right = left, right
    p_val = left + right
    p_err = np.abs(whole - p_val)

    for _ in range(max_rounds):
        totals = np.bincount(p_row, weights=p_val, minlength=n_rows)
        errs = np.bincount(p_row, weights=p_err, minlength=n_rows)
        l1 = np.bincount(p_row, weights=np.abs(p_val), minlength=n_rows)
        counts = np.bincount(p_row, minlength=n_rows)
        tol_row = np.maximum(rel_tol * np.abs(totals),
                             np.maximum(1e-3 * rel_tol * l1, abs_floor))
        live = errs > tol_row
        if not live.any():
            break
        # bisect panels of unconverged rows that carry a meaningful error share
        share = tol_row[p_row] / (2.0 * counts[p_row])
        split = live[p_row] & (p_err > share)
        if not split.any():
            break
        if (counts + np.bincount(p_row[split], minlength=n_rows))[live].max() \
                > max_panels_per_row:
            bad = np.flatnonzero(live)
            raise QuadratureError(
                f"panel budget exhausted for rows {bad.tolist()}")

        s_row = p_row[split]
        s_lo, s_hi = p_lo[split], p_hi[split]
        s_mid = 0.5 * (s_lo + s_hi)
        s_left, s_right = p_left[split], p_right[split]
        # children inherit the parent's half values as their one-shot estimate
        c_row = np.concatenate([s_row, s_row])
        c_lo = np.concatenate([s_lo, s_mid])
        c_hi = np.concatenate([s_mid, s_hi])
        c_whole = np.concatenate([s_left, s_right])
        c_mid = 0.5 * (c_lo + c_hi)
        cl = _gauss_batch(f, c_row, c_lo, c_mid)
        cr = _gauss_batch(f, c_row, c_mid, c_hi)
        c_val = cl + cr
        c_err = np.abs(c_whole - c_val)

        keep = ~split
        p_row = np.concatenate([p_row[keep], c_row])
        p_lo = np.concatenate([p_lo[keep], c_lo])
        p_hi = np.concatenate([p_hi[keep], c_hi])
        p_left = np.concatenate([p_left[keep], cl])
        p_right = np.concatenate([p_right[keep], cr])
        p_val = np.concatenate([p_val[keep], c_val])
        p_err = np.concatenate([p_err[keep], c_err])
    else:
        raise QuadratureError("refinement did not converge within max_rounds")

    # deterministic summation order: by (row, panel position)
    order = np.lexsort((p_lo, p_row))
    integrals = np.zeros(n_rows)
    np.add.at(integrals, p_row[order], p_val[order])
    errors = np.bincount(p_row, weights=p_err, minlength=n_rows)
    return integrals, errors


def integrate(f, lower, span, rel_tol, abs_floor):
    """Single-interval convenience wrapper; f takes a 1D array of v values."""
    def rows_f(_rows, v):
        return f(v)
    vals, errs = integrate_rows(rows_f, np.array([lower]), span,
                                rel_tol, abs_floor)
    return float(vals[0]), float(errs[0])
