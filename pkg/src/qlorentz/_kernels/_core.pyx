# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled twin of ``_pure``; same branches, same operation order."""

from libc.math cimport cosh, exp, fabs, log, sqrt

cdef double M_PI = 3.141592653589793
cdef double EULER_GAMMA = 0.5772156649015328606

Z_SERIES_MAX = 2.0
Z_ASYM_MIN = 14.0
BRIDGE_STEP = 0.35


cdef double _series(double z) nogil:
    cdef double q = 0.25 * z * z
    cdef double term = 1.0
    cdef double bessel_i0 = 1.0
    cdef double harmonic = 0.0
    cdef double logfree = 0.0
    cdef int k = 0
    while True:
        k += 1
        term *= q / (k * k)
        harmonic += 1.0 / k
        bessel_i0 += term
        logfree += term * harmonic
        if term * harmonic < 1e-19 * (bessel_i0 + logfree) and k >= 4:
            break
    return -(log(0.5 * z) + EULER_GAMMA) * bessel_i0 + logfree


cdef double _bridge(double z) nogil:
    cdef double h = 0.35 / sqrt(1.0 + z)
    cdef double total = 0.5
    cdef double deficit
    cdef int k = 0
    while True:
        k += 1
        deficit = z * (cosh(k * h) - 1.0)
        if deficit > 45.0:
            break
        total += exp(-deficit)
    return h * total * exp(-z)


cdef double _asymptotic(double z) nogil:
    cdef double acc = 1.0
    cdef double term = 1.0
    cdef double nxt
    cdef int k = 0
    while True:
        k += 1
        nxt = -term * (2 * k - 1) * (2 * k - 1) / (8.0 * k * z)
        if fabs(nxt) >= fabs(term) or k > 60:
            break
        term = nxt
        acc += term
        if fabs(term) < 5e-17 * fabs(acc):
            break
    return sqrt(M_PI / (2.0 * z)) * exp(-z) * acc


def k0_series(double z):
    return _series(z)


def k0_bridge(double z):
    return _bridge(z)


def k0_asymptotic(double z):
    return _asymptotic(z)


def k0(double z):
    """Modified Bessel K0 for 0 < z <= ~700; domain checks live upstream."""
    if z <= 2.0:
        return _series(z)
    if z < 14.0:
        return _bridge(z)
    return _asymptotic(z)
