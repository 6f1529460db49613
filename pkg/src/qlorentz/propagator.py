"""Spacelike propagation amplitude, evaluated two independent ways.

All internal numerics are dimensionless.  Times and positions arrive
already divided by the reduced Compton wavelength lambda-bar, written tau
and xi here, and for a spacelike pair the amplitude depends on the single
variable z = sqrt(xi^2 - tau^2):

* ``gamma_bessel``     closed form (1/2pi) K0(z) on the fast kernel.
* ``gamma_quadrature`` the oscillatory integral (1/2pi) int_0^inf
  cos(z sinh u) du, summed half-period by half-period in scaled working
  precision with alternating-series acceleration.

The two routes share no code below this module's interface; their
agreement is the cross-check the test suite leans on.  Unit conversion
(kg, MeV/c^2, meters, seconds) happens only at the CLI boundary through
the helpers at the bottom.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from mpmath.calculus.quadrature import GaussLegendre

from . import _kernels
from .errors import (
    DomainError,
    NonConvergence,
    NonpositiveMass,
    NotSpacelike,
    UnderflowToZero,
)

TWO_PI = 2.0 * math.pi

# K0(z) ~ sqrt(pi/2z) e^-z drops below the smallest normal double near
# z = 745; refuse a little earlier, while the value is still exact.
Z_UNDERFLOW = 700.0

PLANCK_SI = 6.62607015e-34  # J s, exact by SI definition
HBAR_SI = PLANCK_SI / TWO_PI
C_SI = 299792458.0  # m / s, exact
HBARC_MEV_FM = 197.3269804  # MeV fm


# ---------------------------------------------------------------------------
# kernel route


def k0(z: float) -> float:
    """Modified Bessel function of the second kind, order zero.

    Wraps the compiled/pure kernel with the domain contract: z must be
    a positive real, and values past ``Z_UNDERFLOW`` are refused rather
    than silently returned as subnormal noise.
    """
    z = float(z)
    if not math.isfinite(z) or z <= 0.0:
        raise DomainError(f"k0 requires z > 0, got {z!r}")
    if z > Z_UNDERFLOW:
        raise UnderflowToZero(f"k0({z:g}) underflows double precision")
    return _kernels.k0(z)


def interval(tau: float, xi: float) -> float:
    """Squared interval tau^2 - xi^2 in lambda-bar^2 units (negative = spacelike)."""
    return tau * tau - xi * xi


def spacelike_z(tau: float, xi: float) -> float:
    s = xi * xi - tau * tau
    if s <= 0.0:
        raise NotSpacelike(
            f"(tau={tau!r}, xi={xi!r}) is not spacelike: xi^2 - tau^2 = {s!r}"
        )
    return math.sqrt(s)


def gamma_bessel(tau: float, xi: float) -> complex:
    """Amplitude (1/2pi) K0(z) as a real-positive complex value."""
    return complex(k0(spacelike_z(tau, xi)) / TWO_PI, 0.0)


# ---------------------------------------------------------------------------
# oscillatory route
#
# Gamma = (1/2pi) int_0^inf cos(z sinh u) du.  The integrand oscillates
# with slowly growing frequency and does not decay, so the integral only
# exists as an Abel-summed alternating series of half-period arcs.  We
# integrate each arc between consecutive zeros with a fixed
# Gauss-Legendre rule and feed the arc magnitudes to the
# Cohen-Villegas-Zagier accelerator, which converges geometrically for
# such series.  Working precision scales with z because the answer
# shrinks like e^-z while the arcs stay O(1/z).

_NODE_CACHE: dict = {}

_CHECK_DROP = 8  # arcs withheld for the convergence self-check
_CHECK_TOL = 1e-8


def _gl_nodes(degree: int):
    key = (degree, mp.mp.prec)
    if key not in _NODE_CACHE:
        _NODE_CACHE[key] = GaussLegendre(mp.mp).get_nodes(-1, 1, degree, mp.mp.prec)
    return _NODE_CACHE[key]


def _cvz(terms):
    # Cohen-Villegas-Zagier acceleration of sum (-1)^k terms[k], terms > 0.
    n = len(terms)
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    s = mp.mpf(0)
    for k in range(n):
        c = b - c
        s += c * terms[k]
        b = (k + n) * (k - n) * b / ((k + mp.mpf("0.5")) * (k + 1))
    return s / d


def k0_oscillatory(z: float, degree: int = 4) -> float:
    """int_0^inf cos(z sinh u) du, the independent route to K0(z).

    Shares nothing with the kernel: different representation, different
    arithmetic.  Raises NonConvergence when the internal self-check
    (recomputing with the last few arcs withheld) disagrees.
    """
    z = float(z)
    if not math.isfinite(z) or z <= 0.0:
        raise DomainError(f"k0_oscillatory requires z > 0, got {z!r}")
    if z > Z_UNDERFLOW:
        raise UnderflowToZero(f"k0_oscillatory({z:g}) underflows double precision")
    dps = 25 + int(0.55 * z)
    narcs = 36 + int(0.6 * z)
    with mp.workdps(dps):
        zz = mp.mpf(z)
        nodes = _gl_nodes(degree)
        if z >= 2.0:
            # substitute w = sinh u; zeros of cos(z w) are equally spaced
            def f(w):
                return mp.cos(zz * w) / mp.sqrt(1 + w * w)

            def zero(n):
                return (n + mp.mpf("0.5")) * mp.pi / zz

        else:
            def f(u):
                return mp.cos(zz * mp.sinh(u))

            def zero(n):
                return mp.asinh((n + mp.mpf("0.5")) * mp.pi / zz)

        def arc(a, b):
            mid = (a + b) / 2
            half = (b - a) / 2
            s = mp.mpf(0)
            for xk, wk in nodes:
                s += wk * f(mid + half * xk)
            return half * s

        terms = []
        prev = mp.mpf(0)
        for n in range(narcs):
            nxt = zero(n)
            terms.append(abs(arc(prev, nxt)))
            prev = nxt

        full = _cvz(terms)
        check = _cvz(terms[:-_CHECK_DROP])
        drift = abs(full - check) / abs(full)
        if drift > _CHECK_TOL:
            raise NonConvergence(
                f"oscillatory sum for z={z:g} failed its self-check",
                z=z,
                arcs=narcs,
                drift=float(drift),
            )
        return float(full)


def gamma_quadrature(tau: float, xi: float) -> complex:
    """Amplitude by direct integration; cross-checks gamma_bessel."""
    return complex(k0_oscillatory(spacelike_z(tau, xi)) / TWO_PI, 0.0)


# ---------------------------------------------------------------------------
# interval classification


class Classification(enum.Enum):
    TIMELIKE_OR_LIGHTLIKE = "timelike_or_lightlike"
    SPACELIKE_NONNEGLIGIBLE = "spacelike_nonnegligible"
    SPACELIKE_NEGLIGIBLE = "spacelike_negligible"


class ThresholdCriterion(enum.Enum):
    """Which negligibility boundary applies, in lambda-bar^2 units.

    The amplitude criterion keeps xi^2 - tau^2 <= 1; the probability
    criterion tightens the window by a factor of four.  Both boundaries
    are inclusive on the nonnegligible side.
    """

    AMPLITUDE_EQ2 = "amplitude_eq2"
    PROBABILITY_EQ13 = "probability_eq13"

    @property
    def boundary(self) -> float:
        return 1.0 if self is ThresholdCriterion.AMPLITUDE_EQ2 else 0.25


def classify_interval(
    tau: float, xi: float, criterion: ThresholdCriterion
) -> Classification:
    s = xi * xi - tau * tau
    if s <= 0.0:
        return Classification.TIMELIKE_OR_LIGHTLIKE
    if s <= criterion.boundary:
        return Classification.SPACELIKE_NONNEGLIGIBLE
    return Classification.SPACELIKE_NEGLIGIBLE


# ---------------------------------------------------------------------------
# tabulation


@dataclass(frozen=True)
class PropagatorPoint:
    tau: float
    xi: float
    z: float
    gamma: complex
    prob: float
    class_eq2: Classification
    class_eq13: Classification


def point_at(tau: float, xi: float) -> PropagatorPoint:
    z = spacelike_z(tau, xi)
    gamma = gamma_bessel(tau, xi)
    return PropagatorPoint(
        tau=tau,
        xi=xi,
        z=z,
        gamma=gamma,
        prob=abs(gamma) ** 2,
        class_eq2=classify_interval(tau, xi, ThresholdCriterion.AMPLITUDE_EQ2),
        class_eq13=classify_interval(tau, xi, ThresholdCriterion.PROBABILITY_EQ13),
    )


def scan(z_min: float, z_max: float, steps: int) -> list[PropagatorPoint]:
    """tau = 0 slice on a linear inclusive grid, one point per step."""
    if not (0.0 < z_min < z_max):
        raise DomainError(f"need 0 < z_min < z_max, got [{z_min!r}, {z_max!r}]")
    if steps < 2:
        raise DomainError(f"need steps >= 2, got {steps!r}")
    return [point_at(0.0, float(xi)) for xi in np.linspace(z_min, z_max, steps)]


def falloff_fit(z_lo: float, z_hi: float, n: int = 50) -> float:
    """Least-squares slope of ln(prob(z) * z) against z; ~-2 for large z.

    prob(z) decays like e^(-2z)/z, so multiplying the z back out leaves
    a nearly pure exponential whose log is linear in z.
    """
    if not (0.0 < z_lo < z_hi):
        raise DomainError(f"need 0 < z_lo < z_hi, got [{z_lo!r}, {z_hi!r}]")
    if n < 3:
        raise DomainError(f"need n >= 3, got {n!r}")
    zs = np.logspace(math.log10(z_lo), math.log10(z_hi), n)
    ys = np.array([math.log((k0(z) / TWO_PI) ** 2 * z) for z in zs])
    slope, _ = np.polyfit(zs, ys, 1)
    return float(slope)


def hbound_check(p_samples: int) -> bool:
    """1/(p^2 c^2 + m^2 c^4) <= 1/(m^2 c^4) over sampled momenta.

    Natural units (m = c = 1); samples are +/- log-spaced plus the p = 0
    equality point.
    """
    if p_samples < 1:
        raise DomainError(f"need p_samples >= 1, got {p_samples!r}")
    mags = np.logspace(-8.0, 8.0, p_samples)
    ps = np.concatenate(([0.0], mags, -mags))
    return bool(np.all(1.0 / (ps * ps + 1.0) <= 1.0))


# ---------------------------------------------------------------------------
# unit conversion (CLI boundary only)


def compton_wavelength(mass_kg: float) -> float:
    """Reduced Compton wavelength hbar/(m c) in meters, mass in kg."""
    if not (mass_kg > 0.0):
        raise NonpositiveMass(f"mass must be positive, got {mass_kg!r}")
    return HBAR_SI / (mass_kg * C_SI)


def lambda_bar_from_mev(mass_mev: float) -> float:
    """Reduced Compton wavelength in meters for a mass in MeV/c^2."""
    if not (mass_mev > 0.0):
        raise NonpositiveMass(f"mass must be positive, got {mass_mev!r}")
    return HBARC_MEV_FM / mass_mev * 1e-15
