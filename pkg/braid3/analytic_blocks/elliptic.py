"""
The complete elliptic integral K and the Schwarz-Christoffel type integral

    F_M(z) = int_0^z dzeta / sqrt((zeta^2 + M^2)(zeta^2 + (M + 1)^2)).

The square root is the product of principal roots
sqrt(iM - zeta) sqrt(-iM - zeta) sqrt(i(M+1) - zeta) sqrt(-i(M+1) - zeta),
which is positive on the real axis and analytic off the four horizontal rays
running to the right from the branch points +-iM, +-i(M+1).
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np
from mpmath import mp
from scipy import integrate

from braid3.exceptions import DomainError, QuadratureFailure

logger = logging.getLogger(__name__)

_POINT_EPS = 1e-13


def ellip_K(k: float) -> float:
    """K(k) = pi / (2 agm(1, sqrt(1 - k^2)))."""
    if not 0 <= k < 1:
        raise DomainError(f"modulus k={k} outside [0, 1)")
    with mp.workdps(30):
        k = mp.mpf(k)
        return float(mp.pi / (2 * mp.agm(1, mp.sqrt(1 - k * k))))


def ellip_K_quadrature(k: float) -> float:
    """K(k) from its defining integral over [0, pi/2], for cross-checks."""
    if not 0 <= k < 1:
        raise DomainError(f"modulus k={k} outside [0, 1)")
    with mp.workdps(30):
        k = mp.mpf(k)
        value = mp.quad(lambda phi: 1 / mp.sqrt(1 - (k * mp.sin(phi)) ** 2), [0, mp.pi / 2])
        return float(value)


class QuadratureRule(str, enum.Enum):
    AUTO = 'auto'
    TANH_SINH = 'tanh-sinh'
    GAUSS_KRONROD = 'gauss-kronrod'


@dataclass(frozen=True)
class QuadratureSpec:
    """How to integrate F_M.

    ``path`` is the full polyline from 0 to z; None means the straight segment,
    split at any branch point it passes through. AUTO uses tanh-sinh on
    segments ending at a branch point and Gauss-Kronrod elsewhere.
    """

    rule: QuadratureRule = QuadratureRule.AUTO
    abs_tol: float = 1e-10
    path: tuple[complex, ...] | None = None

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise DomainError("abs_tol must be positive")
        object.__setattr__(self, 'rule', QuadratureRule(self.rule))


def branch_points(M: float) -> tuple[complex, ...]:
    return (1j * M, -1j * M, 1j * (M + 1), -1j * (M + 1))


def fm_derivative(zeta, M: float):
    """F_M' on arrays of complex points."""
    zeta = np.asarray(zeta, dtype=complex)
    product = np.ones_like(zeta)
    for b in branch_points(M):
        product = product * np.sqrt(b - zeta)
    return 1 / product


def fm_root_product(zeta, M: float):
    """S_M(zeta) S_{M+1}(zeta) = 1 / F_M'(zeta)."""
    zeta = np.asarray(zeta, dtype=complex)
    product = np.ones_like(zeta)
    for b in branch_points(M):
        product = product * np.sqrt(b - zeta)
    return product


def _is_branch_point(z: complex, M: float) -> bool:
    return any(abs(z - b) < _POINT_EPS * max(1.0, M) for b in branch_points(M))


def _on_segment(p: complex, q: complex, z: complex) -> bool:
    """z strictly inside the segment [p, q]."""
    d = q - p
    if abs(d) == 0:
        return False
    t = ((z - p) * d.conjugate()).real / abs(d) ** 2
    if t <= _POINT_EPS or t >= 1 - _POINT_EPS:
        return False
    return abs(p + t * d - z) < _POINT_EPS * max(1.0, abs(d))


def _default_path(z: complex, M: float) -> list[complex]:
    inner = [b for b in branch_points(M) if _on_segment(0j, z, b)]
    inner.sort(key=abs)
    return [0j] + inner + [z]


def _check_path(path: list[complex], M: float, user_path: bool):
    for p, q in zip(path, path[1:]):
        for b in branch_points(M):
            if _on_segment(p, q, b):
                if user_path:
                    raise DomainError(f"path segment {p}->{q} passes through branch point {b}")
        for level in (M, -M, M + 1, -(M + 1)):
            dp, dq = p.imag - level, q.imag - level
            if dp * dq < 0:
                x = p.real + (q.real - p.real) * dp / (dp - dq)
                if x > 0:
                    raise DomainError(f"path segment {p}->{q} crosses the cut at height {level}")
            for end, dend in ((p, dp), (q, dq)):
                if dend == 0 and end.real > _POINT_EPS:
                    raise DomainError(f"path vertex {end} lies on a branch cut")


def _tanh_sinh_from(start: complex, end: complex, M: float, tol: float) -> complex:
    """Integral from a branch point ``start`` to ``end``, singular end at t = 0."""
    with mp.workdps(30):
        s = mp.mpc(start)
        d = mp.mpc(end) - s
        shifted = [mp.mpc(b) - s for b in branch_points(M)]

        def integrand(t):
            u = d * t
            product = mp.mpc(1)
            for offset in shifted:
                product *= mp.sqrt(offset - u)
            return d / product

        value, error = mp.quad(integrand, [0, 1], method='tanh-sinh', error=True)
        if error > tol:
            raise QuadratureFailure(f"tanh-sinh error {float(error):.2e} exceeds {tol:.1e} on {start}->{end}")
        return complex(value)


def _gauss_kronrod(p: complex, q: complex, M: float, tol: float) -> complex:
    d = q - p

    def integrand(t):
        return complex(fm_derivative(p + d * t, M)) * d

    real, real_err = integrate.quad(lambda t: integrand(t).real, 0, 1, epsabs=tol / 2, epsrel=0, limit=200)
    imag, imag_err = integrate.quad(lambda t: integrand(t).imag, 0, 1, epsabs=tol / 2, epsrel=0, limit=200)
    if real_err + imag_err > tol:
        raise QuadratureFailure(f"Gauss-Kronrod error {real_err + imag_err:.2e} exceeds {tol:.1e} on {p}->{q}")
    return complex(real, imag)


def _segment(p: complex, q: complex, M: float, spec: QuadratureSpec) -> complex:
    singular_p, singular_q = _is_branch_point(p, M), _is_branch_point(q, M)
    rule = spec.rule
    if rule is QuadratureRule.AUTO:
        rule = QuadratureRule.TANH_SINH if (singular_p or singular_q) else QuadratureRule.GAUSS_KRONROD
    if rule is QuadratureRule.GAUSS_KRONROD:
        if singular_p or singular_q:
            raise QuadratureFailure("Gauss-Kronrod cannot integrate up to a branch point")
        return _gauss_kronrod(p, q, M, spec.abs_tol)
    if singular_p and singular_q:
        mid = (p + q) / 2
        return _tanh_sinh_from(p, mid, M, spec.abs_tol) - _tanh_sinh_from(q, mid, M, spec.abs_tol)
    if singular_q:
        return -_tanh_sinh_from(q, p, M, spec.abs_tol)
    return _tanh_sinh_from(p, q, M, spec.abs_tol)


def F_M(z: complex, M: float, spec: QuadratureSpec | None = None) -> complex:
    spec = spec or QuadratureSpec()
    if M <= 0:
        raise DomainError(f"M={M} must be positive")
    z = complex(z)
    if spec.path is None:
        if z == 0:
            return 0j
        path = _default_path(z, M)
    else:
        path = [complex(v) for v in spec.path]
        if len(path) < 2 or path[0] != 0 or abs(path[-1] - z) > _POINT_EPS:
            raise DomainError("quadrature path must run from 0 to z")
    _check_path(path, M, user_path=spec.path is not None)
    total = 0j
    for p, q in zip(path, path[1:]):
        total += _segment(p, q, M, spec)
    logger.debug("F_%s(%s) = %s over %d segments", M, z, total, len(path) - 1)
    return total


def F_M_between(start: complex, end: complex, M: float, tol: float = 1e-12) -> complex:
    """F_M(end) - F_M(start) along the straight segment, both ends regular."""
    _check_path([complex(start), complex(end)], M, user_path=True)
    if start == end:
        return 0j
    return _gauss_kronrod(complex(start), complex(end), M, tol)
