"""
Extremal length of the elementary slalom classes.

The class of slalom curves around the slits at iM and -i(M+1) is carried by
phi_2 o phi_1 to the ring between the unit circle and a small circle on the
imaginary axis. The ring's modulus is a Moebius invariant, read off from the
inversive distance of its two boundary circles.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from braid3.exceptions import DomainError, PoleError
from braid3.invariant_bounds import Interval

logger = logging.getLogger(__name__)


class MoebiusMap:
    """z -> (a z + b) / (c z + d), stored as a 2x2 complex matrix."""

    __slots__ = ('matrix',)

    def __init__(self, a: complex, b: complex, c: complex, d: complex):
        matrix = np.array([[a, b], [c, d]], dtype=complex)
        if not np.all(np.isfinite(matrix)):
            raise DomainError("Moebius coefficients must be finite")
        if abs(np.linalg.det(matrix)) == 0:
            raise DomainError("Moebius map has vanishing determinant")
        self.matrix = matrix

    @classmethod
    def from_matrix(cls, matrix) -> 'MoebiusMap':
        (a, b), (c, d) = np.asarray(matrix, dtype=complex)
        return cls(a, b, c, d)

    @property
    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        (a, b), (c, d) = self.matrix
        return complex(a), complex(b), complex(c), complex(d)

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))

    def __call__(self, z: complex) -> complex:
        a, b, c, d = self.coefficients
        denominator = c * z + d
        if denominator == 0:
            raise PoleError(f"Moebius map has a pole at {z}")
        return (a * z + b) / denominator

    def __matmul__(self, other: 'MoebiusMap') -> 'MoebiusMap':
        """Composition: (self @ other)(z) = self(other(z))."""
        return MoebiusMap.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> 'MoebiusMap':
        a, b, c, d = self.coefficients
        return MoebiusMap(d, -b, -c, a)

    def __repr__(self):
        return 'MoebiusMap(%r, %r, %r, %r)' % self.coefficients


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0 or not math.isfinite(self.radius):
            raise DomainError(f"circle radius {self.radius} must be positive and finite")

    @classmethod
    def from_diameter(cls, p: complex, q: complex) -> 'Circle':
        return cls((p + q) / 2, abs(p - q) / 2)

    @classmethod
    def through(cls, p: complex, q: complex, r: complex) -> 'Circle':
        """The circle through three points, from the perpendicular bisector system."""
        system = np.array([[2 * (q - p).real, 2 * (q - p).imag], [2 * (r - p).real, 2 * (r - p).imag]])
        rhs = np.array([abs(q) ** 2 - abs(p) ** 2, abs(r) ** 2 - abs(p) ** 2])
        if abs(np.linalg.det(system)) < 1e-300:
            raise DomainError("points are collinear")
        x, y = np.linalg.solve(system, rhs)
        center = complex(x, y)
        return cls(center, abs(p - center))

    def image(self, f: MoebiusMap) -> 'Circle':
        points = [self.center + self.radius * np.exp(1j * t) for t in (0.0, 2 * math.pi / 3, 4 * math.pi / 3)]
        return Circle.through(*(f(z) for z in points))


UNIT_CIRCLE = Circle(0j, 1.0)


def inversive_distance(c1: Circle, c2: Circle) -> float:
    """|r1^2 + r2^2 - d^2| / (2 r1 r2); above 1 for disjoint circles."""
    d = abs(c1.center - c2.center)
    return abs(c1.radius ** 2 + c2.radius ** 2 - d ** 2) / (2 * c1.radius * c2.radius)


def _check(M: float):
    if not (M > 0 and math.isfinite(M)):
        raise DomainError(f"M={M} must be a positive real")


def phi_1(M: float) -> MoebiusMap:
    """z -> 1 / (2z + i(2M+1)); sends iM to -i/(4M+1) and -i(M+1) to i."""
    _check(M)
    return MoebiusMap(0, 1, 2, 1j * (2 * M + 1))


def phi_2(M: float) -> MoebiusMap:
    """A disc automorphism moving -i/(4M+1) to -i y_minus."""
    _check(M)
    s = 1 / (4 * M + 2)
    return MoebiusMap(1, 1j * s, -1j * s, 1)


def y_minus(M: float) -> float:
    _check(M)
    return 1 / ((4 * M + 1) * (4 * M + 2) - 1)


def y_plus(M: float) -> float:
    _check(M)
    return 1 / ((4 * M + 2) * (4 * M + 3) - 1)


@dataclass(frozen=True)
class SlalomBounds:
    M: float
    # (2/pi) ln(4M+1) .. (2/pi) ln(4M+3)
    stated: Interval
    # (1/pi) ln((4M+1)(4M+2)-1) .. (1/pi) ln((4M+2)(4M+3)-1)
    proof: Interval

    def contains(self, value: float) -> bool:
        return all(i.lower <= value <= i.upper for i in (self.stated, self.proof))


def slalom_extremal_bounds(M: float) -> SlalomBounds:
    _check(M)
    stated = Interval(2 / math.pi * math.log(4 * M + 1), 2 / math.pi * math.log(4 * M + 3))
    proof = Interval(
        math.log((4 * M + 1) * (4 * M + 2) - 1) / math.pi,
        math.log((4 * M + 2) * (4 * M + 3) - 1) / math.pi,
    )
    return SlalomBounds(M, stated, proof)


def slalom_ring(M: float) -> tuple[Circle, Circle]:
    """The two boundary circles of the ring after phi_2 o phi_1."""
    f = phi_2(M) @ phi_1(M)
    inner = Circle.from_diameter(f(1j * M), f(1j * (M + 1)))
    return UNIT_CIRCLE.image(phi_2(M)), inner


def slalom_extremal_exact(M: float) -> float:
    outer, inner = slalom_ring(M)
    delta = inversive_distance(outer, inner)
    if delta <= 1:
        raise DomainError(f"slalom ring degenerates at M={M} (inversive distance {delta})")
    value = math.acosh(delta) / math.pi
    logger.debug("slalom M=%s: inversive distance %.12g, extremal length %.12g", M, delta, value)
    return value


def half_slalom_extremal(M: float) -> float:
    return slalom_extremal_exact(M) / 2
