"""
Building-block maps for Form1 and Form2 syllables.

Short syllables (degree at most 4) have closed-form exponential blocks. Long
ones are inverses of r F_M, computed by Newton iteration on the quadrature of
F_M. Every block has two anchors p- and p+ on a common vertical line where
|g'| = 1, which is what the gluing step matches.
"""

from __future__ import annotations

import cmath
import enum
import functools
import logging
import math
from dataclasses import dataclass

import numpy as np

from braid3.braid_words import Syllable, SyllableKind
from braid3.exceptions import BlockUnavailable, DomainError, NewtonDivergence, QuadratureFailure
from braid3.analytic_blocks.elliptic import F_M, F_M_between, ellip_K, fm_derivative

logger = logging.getLogger(__name__)

NEWTON_TOL = 1e-12
NEWTON_MAX_ITER = 50
CONTINUATION_STEPS = 8
# gluing windows plus their difference stencils reach this far outside a block rectangle
BLEND_MARGIN = 1 / 9
SHORT_MAX_DEGREE = 4


class BlockKind(str, enum.Enum):
    FORM1_LONG = 'Form1Long'
    FORM2_LONG = 'Form2Long'
    FORM1_SHORT = 'Form1Short'
    FORM2_SHORT = 'Form2Short'

    @property
    def is_long(self) -> bool:
        return self in (BlockKind.FORM1_LONG, BlockKind.FORM2_LONG)


@dataclass(frozen=True)
class Rect:
    x0: float
    x1: float
    y0: float
    y1: float

    def contains(self, xi: complex, margin: float = 0.0) -> bool:
        return (self.x0 - margin <= xi.real <= self.x1 + margin
                and self.y0 - margin <= xi.imag <= self.y1 + margin)

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.uniform(self.x0, self.x1, n) + 1j * rng.uniform(self.y0, self.y1, n)


@dataclass(frozen=True)
class BlockGeometry:
    kind: BlockKind
    M: float
    r: float
    rect: Rect
    p_minus: complex
    p_plus: complex

    @property
    def anchors(self) -> tuple[complex, complex]:
        return self.p_minus, self.p_plus

    @property
    def degree(self) -> int:
        if self.kind is BlockKind.FORM1_LONG or self.kind is BlockKind.FORM1_SHORT:
            return round(2 * self.M + 1)
        if self.kind is BlockKind.FORM2_LONG:
            return round(2 * self.M - 1)
        return round(2 * self.M)


def radius_form1(M: float) -> float:
    return math.sqrt((M + 0.25) * (M + 0.75))


def radius_form2(M: float) -> float:
    return math.pi * math.sqrt(3) * math.sqrt((M - 0.25) * (M + 0.25))


def _long_preimages(kind: BlockKind, M: float) -> tuple[complex, complex]:
    h = M + 0.5 if kind is BlockKind.FORM1_LONG else M - 0.5
    return -1j * h, 1j * h


@functools.lru_cache(maxsize=64)
def block_geometry(kind: BlockKind, M: float) -> BlockGeometry:
    kind = BlockKind(kind)
    if kind is BlockKind.FORM1_LONG:
        if M < 2:
            raise DomainError(f"long Form1 blocks need M >= 2, got {M}")
        r = radius_form1(M)
    elif kind is BlockKind.FORM2_LONG:
        if M < 2.5:
            raise DomainError(f"long Form2 blocks need M >= 5/2, got {M}")
        r = radius_form2(M)
    elif kind is BlockKind.FORM1_SHORT:
        if M not in (0.5, 1.0, 1.5):
            raise DomainError(f"short Form1 blocks take M in {{1/2, 1, 3/2}}, got {M}")
        c = M + 0.5
        x = -c * math.log(c / M)
        rect = Rect(c * math.log(M / (M + 1)), 0.0, -math.pi * c / 2, math.pi * c / 2)
        return BlockGeometry(kind, M, 1.0, rect, complex(x, -math.pi * c / 2), complex(x, math.pi * c / 2))
    else:
        if M not in (1.0, 1.5, 2.0):
            raise DomainError(f"short Form2 blocks take M in {{1, 3/2, 2}}, got {M}")
        d = 2 * M
        rect = Rect(math.log(0.5), 0.0, -1 / 18, d * math.pi / 2 + 1 / 18)
        return BlockGeometry(kind, M, 1.0, rect, 0j, 1j * d * math.pi / 2)

    k = M / (M + 1)
    height = r * ellip_K(k) / (M + 1)
    if kind is BlockKind.FORM1_LONG:
        width = r * ellip_K(math.sqrt(1 - k * k)) / (M + 1)
        rect = Rect(-width, 0.0, -height, height)
    else:
        rect = Rect(-1 / 18, 0.0, -height, height)
    lower, upper = _long_preimages(kind, M)
    geometry = BlockGeometry(kind, M, r, rect, r * F_M(lower, M), r * F_M(upper, M))
    logger.debug("block geometry %s M=%s: anchors %s, %s", kind.value, M, geometry.p_minus, geometry.p_plus)
    return geometry


def geometry_for_syllable(s: Syllable) -> BlockGeometry:
    d = s.degree
    if s.kind is SyllableKind.SINGLETON:
        raise BlockUnavailable("singleton syllables have no building block")
    if s.kind is SyllableKind.FORM1:
        kind = BlockKind.FORM1_SHORT if d <= SHORT_MAX_DEGREE else BlockKind.FORM1_LONG
        return block_geometry(kind, (d - 1) / 2)
    if d <= SHORT_MAX_DEGREE:
        return block_geometry(BlockKind.FORM2_SHORT, d / 2)
    return block_geometry(BlockKind.FORM2_LONG, (d + 1) / 2)


@functools.lru_cache(maxsize=64)
def _bases(kind: BlockKind, M: float) -> tuple[tuple[complex, complex], ...]:
    """Points zeta with known F_M(zeta), used as starting points of the quadrature."""
    lower, upper = _long_preimages(kind, M)
    return (0j, 0j), (lower, F_M(lower, M)), (upper, F_M(upper, M))


def _F(geometry: BlockGeometry, zeta: complex) -> complex:
    bases = sorted(_bases(geometry.kind, geometry.M), key=lambda base: abs(zeta - base[0]))
    last_error = None
    for point, value in bases:
        try:
            return value + F_M_between(point, zeta, geometry.M)
        except DomainError as exc:
            last_error = exc
    raise last_error


def _Fprime(geometry: BlockGeometry, zeta: complex) -> complex:
    return complex(fm_derivative(zeta, geometry.M))


def _short_seed(geometry: BlockGeometry, xi: complex) -> complex:
    """The short Form1 block matched to the long one at the nearest anchor."""
    M = geometry.M
    c = M + 0.5
    anchor = geometry.p_plus if xi.imag >= 0 else geometry.p_minus
    side = 1 if xi.imag >= 0 else -1
    short_anchor = complex(-c * math.log(c / M), side * math.pi * c / 2)
    return -M * cmath.exp(-(xi - anchor + short_anchor) / c)


def _newton(geometry: BlockGeometry, xi: complex, seed: complex) -> complex:
    r = geometry.r
    zeta = seed
    residual = math.inf
    for iteration in range(1, NEWTON_MAX_ITER + 1):
        try:
            value = r * _F(geometry, zeta) - xi
            step = value / (r * _Fprime(geometry, zeta))
        except (DomainError, QuadratureFailure, ZeroDivisionError) as exc:
            logger.debug("Newton step left the domain at %s: %s", zeta, exc)
            raise NewtonDivergence(xi, zeta, residual, iteration) from exc
        residual = abs(value)
        zeta = zeta - step
        if not cmath.isfinite(zeta):
            raise NewtonDivergence(xi, zeta, residual, iteration)
        if abs(step) <= NEWTON_TOL * (1 + abs(zeta)):
            logger.debug("Newton converged for xi=%s in %d iterations", xi, iteration)
            return zeta
    raise NewtonDivergence(xi, zeta, residual, NEWTON_MAX_ITER)


def _nearest_anchor(geometry: BlockGeometry, xi: complex) -> tuple[complex, complex]:
    lower, upper = _long_preimages(geometry.kind, geometry.M)
    candidates = ((0j, 0j), (geometry.p_minus, lower), (geometry.p_plus, upper))
    return min(candidates, key=lambda pair: abs(xi - pair[0]))


def invert_long(geometry: BlockGeometry, xi: complex) -> complex:
    """zeta with r F_M(zeta) = xi."""
    anchor_xi, anchor_zeta = _nearest_anchor(geometry, xi)
    if geometry.kind is BlockKind.FORM1_LONG and anchor_zeta != 0:
        seed = _short_seed(geometry, xi)
    else:
        seed = anchor_zeta + (xi - anchor_xi) / (geometry.r * _Fprime(geometry, anchor_zeta))
    try:
        return _newton(geometry, xi, seed)
    except NewtonDivergence as exc:
        logger.debug("seeded Newton failed for xi=%s, continuing from anchor %s: %s", xi, anchor_xi, exc)

    zeta = anchor_zeta
    previous = anchor_xi
    for step in range(1, CONTINUATION_STEPS + 1):
        target = anchor_xi + (xi - anchor_xi) * step / CONTINUATION_STEPS
        guess = zeta + (target - previous) / (geometry.r * _Fprime(geometry, zeta))
        zeta = _newton(geometry, target, guess)
        previous = target
    return zeta


def _check_domain(geometry: BlockGeometry, xi: complex):
    if not geometry.rect.contains(xi, BLEND_MARGIN):
        raise DomainError(f"{xi} lies outside the {geometry.kind.value} block rectangle")


def _finite(value: complex, what: str) -> complex:
    if not cmath.isfinite(value):
        raise DomainError(f"{what} is not finite")
    return value


def evaluate_block(geometry: BlockGeometry, xi: complex) -> tuple[complex, complex]:
    """(g(xi), g'(xi)) for the block."""
    xi = complex(xi)
    _check_domain(geometry, xi)
    M = geometry.M
    if geometry.kind is BlockKind.FORM1_SHORT:
        g = -M * cmath.exp(-xi / (M + 0.5))
        return _finite(g, 'block value'), _finite(-g / (M + 0.5), 'block derivative')
    if geometry.kind is BlockKind.FORM2_SHORT:
        g = -0.5j * cmath.exp(2 * xi)
        return _finite(g, 'block value'), _finite(2 * g, 'block derivative')

    zeta = invert_long(geometry, xi)
    inverse_derivative = 1 / (geometry.r * _Fprime(geometry, zeta))
    if geometry.kind is BlockKind.FORM1_LONG:
        return zeta, inverse_derivative
    g = cmath.exp(math.pi * (zeta + 1j * (M - 1)))
    return _finite(g, 'block value'), _finite(math.pi * g * inverse_derivative, 'block derivative')


def block_map(geometry: BlockGeometry, xi: complex) -> complex:
    return evaluate_block(geometry, xi)[0]


def block_derivative(geometry: BlockGeometry, xi: complex) -> complex:
    return evaluate_block(geometry, xi)[1]


@dataclass(frozen=True)
class AnchorCheck:
    kind: BlockKind
    M: float
    anchor: complex
    value: complex
    derivative: complex

    @property
    def deviation(self) -> float:
        return abs(abs(self.derivative) - 1)


def anchor_checks(geometry: BlockGeometry) -> tuple[AnchorCheck, AnchorCheck]:
    """Values and derivatives at p- and p+; |g'| should be 1 at both."""
    if geometry.kind.is_long:
        results = []
        for anchor, zeta in zip(geometry.anchors, _long_preimages(geometry.kind, geometry.M)):
            # the anchor preimages are known exactly, no inversion needed
            inverse_derivative = 1 / (geometry.r * _Fprime(geometry, zeta))
            if geometry.kind is BlockKind.FORM1_LONG:
                value, derivative = zeta, inverse_derivative
            else:
                value = cmath.exp(math.pi * (zeta + 1j * (geometry.M - 1)))
                derivative = math.pi * value * inverse_derivative
            results.append(AnchorCheck(geometry.kind, geometry.M, anchor, value, derivative))
        return tuple(results)
    return tuple(AnchorCheck(geometry.kind, geometry.M, p, *evaluate_block(geometry, p)) for p in geometry.anchors)
