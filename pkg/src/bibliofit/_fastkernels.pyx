# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Mirrors :mod:`bibliofit._purekernels` function for function; inputs here are
typed memoryviews (C-contiguous numpy arrays), prepared by the callers. The
accumulation order matches the pure version so results agree to the last few
ULPs.
"""

from libc.math cimport pow
from libc.stdlib cimport free, malloc

BACKEND_NAME = "cython"

FAMILY_HIRSCH = 0
FAMILY_ER = 1
FAMILY_GS = 2


def h_index_core(long long[::1] citations_desc):
    """Largest k with citations_desc[k-1] >= k, for a descending array."""
    cdef Py_ssize_t i, n = citations_desc.shape[0]
    cdef long long h = 0
    for i in range(n):
        if citations_desc[i] < i + 1:
            break
        h = i + 1
    return int(h)


def hm_core(double[::1] citations_desc, double[::1] inv_authors):
    """Largest effective rank r (running sum of inv_authors) with c >= r."""
    cdef Py_ssize_t i, n = citations_desc.shape[0]
    cdef double best = 0.0, rank = 0.0
    for i in range(n):
        rank += inv_authors[i]
        if citations_desc[i] < rank:
            break
        best = rank
    return best


def model_chi2(double[::1] p, double[::1] c, double[::1] h, int family,
               double exponent):
    """Least-squares amplitude and chi-squared at a fixed exponent.

    Same two-pass scheme as the pure kernel: closed-form amplitude from
    sum(h*f)/sum(f*f), then explicit residual accumulation for chi2.
    """
    cdef Py_ssize_t i, n = h.shape[0]
    cdef double e, e1, e2, shf = 0.0, sff = 0.0, chi2 = 0.0, amplitude, r
    cdef double* f = <double*> malloc(n * sizeof(double))
    if f == NULL:
        raise MemoryError()
    try:
        if family == 0:
            e = 1.0 / exponent
            for i in range(n):
                f[i] = pow(c[i], e)
        elif family == 1:
            e = 1.0 / exponent
            for i in range(n):
                f[i] = pow(p[i], e)
        elif family == 2:
            e1 = 1.0 / (exponent + 1.0)
            e2 = exponent / (exponent + 1.0)
            for i in range(n):
                f[i] = pow(p[i], e1) * pow(c[i] / p[i], e2)
        else:
            raise ValueError(f"unknown family code {family!r}")
        for i in range(n):
            shf += h[i] * f[i]
            sff += f[i] * f[i]
        amplitude = shf / sff
        for i in range(n):
            r = h[i] - amplitude * f[i]
            chi2 += r * r
    finally:
        free(f)
    return amplitude, chi2
