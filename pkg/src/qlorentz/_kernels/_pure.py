"""Pure-Python numeric kernels.

``_core.pyx`` is a line-for-line compiled twin of this module; keep the
two in sync (same branch points, same operation order) so both backends
produce identical doubles.

k0 branches:

* z <= 2        ascending power series with the log term;
* 2 < z < 14    trapezoidal sum of the decaying integral
                int_0^inf exp(-z cosh u) du, step scaled to the
                1/sqrt(z) saddle width (exponentially convergent);
* z >= 14       the large-z expansion sqrt(pi/2z) e^-z sum a_k,
                truncated at its smallest term.

Each branch holds relative error well under 1e-12 on its own interval,
so the splices at 2 and 14 are continuous far below the 1e-10 gate.
"""

import math

EULER_GAMMA = 0.5772156649015328606
Z_SERIES_MAX = 2.0
Z_ASYM_MIN = 14.0
BRIDGE_STEP = 0.35


def k0_series(z):
    """Ascending series; cancellation stays harmless for z <= 2."""
    q = 0.25 * z * z
    term = 1.0
    bessel_i0 = 1.0
    harmonic = 0.0
    logfree = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (k * k)
        harmonic += 1.0 / k
        bessel_i0 += term
        logfree += term * harmonic
        if term * harmonic < 1e-19 * (bessel_i0 + logfree) and k >= 4:
            break
    return -(math.log(0.5 * z) + EULER_GAMMA) * bessel_i0 + logfree


def k0_bridge(z):
    """Trapezoid on exp(-z cosh u); the integrand is even and entire."""
    h = BRIDGE_STEP / math.sqrt(1.0 + z)
    total = 0.5
    k = 0
    while True:
        k += 1
        # exponent deficit relative to the peak value exp(-z)
        deficit = z * (math.cosh(k * h) - 1.0)
        if deficit > 45.0:
            break
        total += math.exp(-deficit)
    return h * total * math.exp(-z)


def k0_asymptotic(z):
    """Large-z expansion, stopped at its smallest term."""
    acc = 1.0
    term = 1.0
    k = 0
    while True:
        k += 1
        nxt = -term * (2 * k - 1) * (2 * k - 1) / (8.0 * k * z)
        if abs(nxt) >= abs(term) or k > 60:
            break
        term = nxt
        acc += term
        if abs(term) < 5e-17 * abs(acc):
            break
    return math.sqrt(math.pi / (2.0 * z)) * math.exp(-z) * acc


def k0(z):
    """Modified Bessel K0 for 0 < z <= ~700; domain checks live upstream."""
    if z <= Z_SERIES_MAX:
        return k0_series(z)
    if z < Z_ASYM_MIN:
        return k0_bridge(z)
    return k0_asymptotic(z)
