"""Pure-Python kernels for the hot inner loops.

This module is the portable fallback for :mod:`bibliofit._fastkernels`; the
two implement the same functions with the same accumulation order, so they
agree to the last few ULPs. Select explicitly with BIBLIOFIT_PURE_PYTHON=1.

All kernels expect pre-sorted / pre-validated inputs; sorting, validation and
array preparation live in the calling modules.
"""

BACKEND_NAME = "python"

# model family codes shared with the compiled kernel
FAMILY_HIRSCH = 0  # amplitude * C**(1/exponent)
FAMILY_ER = 1      # amplitude * P**(1/exponent)
FAMILY_GS = 2      # amplitude * P**(1/(exponent+1)) * (C/P)**(exponent/(exponent+1))


def _floats(seq):
    tolist = getattr(seq, "tolist", None)
    if tolist is not None:
        return tolist()
    return [float(v) for v in seq]


def h_index_core(citations_desc):
    """Largest k with citations_desc[k-1] >= k, for a descending sequence."""
    h = 0
    for i, c in enumerate(citations_desc):
        if c < i + 1:
            break
        h = i + 1
    return h


def hm_core(citations_desc, inv_authors):
    """Largest effective rank r with citations >= r.

    ``citations_desc`` must be sorted descending and ``inv_authors`` holds the
    matching 1/n_authors weights; the effective rank is their running sum.
    Once a paper fails the check every later one fails too (citations are
    non-increasing while the rank grows), so the scan stops early.
    """
    citations_desc = _floats(citations_desc)
    inv_authors = _floats(inv_authors)
    best = 0.0
    rank = 0.0
    for c, w in zip(citations_desc, inv_authors):
        rank += w
        if c < rank:
            break
        best = rank
    return best


def model_chi2(p, c, h, family, exponent):
    """Least-squares amplitude and chi-squared at a fixed exponent.

    For fixed exponent the model is linear in the amplitude, so the optimum
    is closed-form: a* = sum(h*f) / sum(f*f) with f the per-point predictor.
    Returns ``(amplitude, chi2)``. The chi2 pass recomputes the residuals
    explicitly instead of expanding the square, which keeps noiseless data at
    exactly zero. Accumulation order is fixed (sequential over the input).
    """
    p = _floats(p)
    c = _floats(c)
    h = _floats(h)
    n = len(h)
    f = [0.0] * n
    if family == FAMILY_HIRSCH:
        e = 1.0 / exponent
        for i in range(n):
            f[i] = c[i] ** e
    elif family == FAMILY_ER:
        e = 1.0 / exponent
        for i in range(n):
            f[i] = p[i] ** e
    elif family == FAMILY_GS:
        e1 = 1.0 / (exponent + 1.0)
        e2 = exponent / (exponent + 1.0)
        for i in range(n):
            f[i] = p[i] ** e1 * (c[i] / p[i]) ** e2
    else:
        raise ValueError(f"unknown family code {family!r}")
    shf = 0.0
    sff = 0.0
    for i in range(n):
        shf += h[i] * f[i]
        sff += f[i] * f[i]
    amplitude = shf / sff
    chi2 = 0.0
    for i in range(n):
        r = h[i] - amplitude * f[i]
        chi2 += r * r
    return amplitude, chi2
