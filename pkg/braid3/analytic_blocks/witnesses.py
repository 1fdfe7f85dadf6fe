"""
Explicit maps with arbitrarily small extremal length for the exceptional words.

For w = a1^n with tr boundary values, zeta -> -1 + e^zeta on a long rectangle
(-X, 0) x (0, 2 pi n) keeps the horizontal sides on (-1, 0) and winds the
vertical side n times around -1. For w = a1 a2 ... with pb boundary values,
zeta -> e^zeta on (1, X) x (pi/2, pi/2 + pi d) keeps the horizontal sides on
the imaginary axis. Letting X grow drives height/width to zero.

Evaluation is done in mpmath so that e^(-X) and e^X stay representable.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np
from mpmath import mp

from braid3.exceptions import DomainError

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 256
_AXIS_TOL = mp.mpf('1e-20')


class WitnessFamily(str, enum.Enum):
    TR = 'tr'
    PB = 'pb'


@dataclass(frozen=True)
class WitnessReport:
    family: WitnessFamily
    # n for a1^n, the degree d for a1 a2 ...
    parameter: int
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    extremal_length: float
    samples: int
    avoids_punctures: bool
    horizontal_on_axis: bool
    winding: float
    expected_winding: float

    @property
    def passed(self) -> bool:
        return (self.avoids_punctures and self.horizontal_on_axis
                and abs(self.winding - self.expected_winding) < 1e-9)


def _winding(values, centre) -> float:
    """Turns of a sampled closed-or-open path about ``centre``, by unwrapped argument."""
    args = np.array([float(mp.arg(v - centre)) for v in values])
    return float(np.unwrap(args)[-1] - args[0]) / (2 * np.pi)


def _side(x0, y0, x1, y1, count):
    return [mp.mpc(x0 + (x1 - x0) * t, y0 + (y1 - y0) * t) for t in (mp.mpf(k) / (count - 1) for k in range(count))]


def _avoids(values, punctures=(-1, 1)) -> bool:
    """No sampled value lands on a puncture."""
    return all(v != p for v in values for p in punctures)


def tr_witness(n: int, extremal_length: float, samples: int = DEFAULT_SAMPLES) -> WitnessReport:
    if n < 1:
        raise DomainError("the tr witness takes a1^n with n >= 1")
    if not extremal_length > 0:
        raise DomainError("target extremal length must be positive")
    with mp.workdps(40):
        height = 2 * mp.pi * n
        X = height / mp.mpf(extremal_length)

        # work with u = g + 1 = e^zeta, which neither underflows nor rounds to -1
        def g(zeta):
            return mp.exp(zeta)

        bottom = [g(z) for z in _side(-X, 0, 0, 0, samples)]
        top = [g(z) for z in _side(-X, height, 0, height, samples)]
        # steps of at most pi/4 along the vertical side keep the unwrapped argument exact
        right = [g(z) for z in _side(0, 0, 0, height, max(samples, 8 * n + 1))]
        left = [g(z) for z in _side(-X, 0, -X, height, max(samples, 8 * n + 1))]
        rng = np.random.default_rng(n)
        interior = [g(mp.mpc(-X * mp.mpf(float(u)), height * mp.mpf(float(v))))
                    for u, v in rng.random((samples, 2))]

        on_axis = all(abs(u.imag) <= _AXIS_TOL * abs(u) and 0 < u.real < 1 for u in bottom[1:-1] + top[1:-1])
        inside = all(0 < abs(u) < 1 for u in interior)
        # g = -1 and g = 1 are u = 0 and u = 2
        avoids = _avoids(bottom + top + right + left + interior, punctures=(0, 2)) and inside
        winding = _winding(right, mp.mpf(0))
        report = WitnessReport(WitnessFamily.TR, n, (float(-X), 0.0), (0.0, float(height)),
                               float(height / X), len(bottom + top + right + left + interior),
                               avoids, on_axis, winding, float(n))
    logger.debug("tr witness n=%d: X=%.6g, winding %.6f", n, report.x_range[0], winding)
    return report


def pb_witness(d: int, extremal_length: float, samples: int = DEFAULT_SAMPLES) -> WitnessReport:
    if d < 2:
        raise DomainError("the pb witness takes words a1 a2 ... of degree d >= 2")
    if not extremal_length > 0:
        raise DomainError("target extremal length must be positive")
    with mp.workdps(40):
        y0 = mp.pi / 2
        height = mp.pi * d
        X = 1 + height / mp.mpf(extremal_length)

        def g(zeta):
            return mp.exp(zeta)

        bottom = [g(z) for z in _side(1, y0, X, y0, samples)]
        top = [g(z) for z in _side(1, y0 + height, X, y0 + height, samples)]
        left = [g(z) for z in _side(1, y0, 1, y0 + height, max(samples, 4 * d + 1))]
        rng = np.random.default_rng(d)
        interior = [g(mp.mpc(1 + (X - 1) * mp.mpf(float(u)), y0 + height * mp.mpf(float(v))))
                    for u, v in rng.random((samples, 2))]

        on_axis = all(abs(v.real) <= _AXIS_TOL * abs(v) for v in bottom + top)
        outside = all(abs(v) >= mp.e * (1 - _AXIS_TOL) for v in bottom + top + left + interior)
        avoids = _avoids(bottom + top + left + interior) and outside
        winding = _winding(left, mp.mpf(0))
        report = WitnessReport(WitnessFamily.PB, d, (1.0, float(X)), (float(y0), float(y0 + height)),
                               float(height / (X - 1)), len(bottom + top + left + interior),
                               avoids, on_axis, winding, d / 2)
    logger.debug("pb witness d=%d: X=%.6g, winding %.6f", d, report.x_range[1], winding)
    return report
