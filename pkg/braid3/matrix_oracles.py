"""
Exact matrix oracles for B3.

The Burau image over Z[t, 1/t] decides the word problem. The integer image in
SL(2, Z) realises B3 / <d^2> up to sign, classifies conjugacy classes by trace and
gives the entropy of a class as the log of its spectral radius.
"""

from __future__ import annotations

import enum
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp
from sympy import ImmutableMatrix

from braid3.braid_words import (
    BraidWord,
    CyclicFreeWord,
    FreeWord,
    Generator,
    Symbol,
    free_reduce,
)

logger = logging.getLogger(__name__)


class IntMat2:
    """A 2x2 integer matrix, held as a sympy ``ImmutableMatrix``."""

    __slots__ = ('matrix',)

    def __init__(self, a: int, b: int, c: int, d: int):
        self.matrix = ImmutableMatrix(2, 2, [int(a), int(b), int(c), int(d)])

    @classmethod
    def _wrap(cls, matrix) -> 'IntMat2':
        return cls(*matrix)

    @property
    def a(self) -> int:
        return int(self.matrix[0, 0])

    @property
    def b(self) -> int:
        return int(self.matrix[0, 1])

    @property
    def c(self) -> int:
        return int(self.matrix[1, 0])

    @property
    def d(self) -> int:
        return int(self.matrix[1, 1])

    def __matmul__(self, other: 'IntMat2') -> 'IntMat2':
        return IntMat2._wrap(self.matrix * other.matrix)

    def __neg__(self) -> 'IntMat2':
        return IntMat2._wrap(-self.matrix)

    def __pow__(self, n: int) -> 'IntMat2':
        base = self if n >= 0 else self.inverse()
        # square-and-multiply; the default switches to Cayley-Hamilton for large n
        return IntMat2._wrap(base.matrix.pow(abs(n), method='multiply'))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMat2):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"IntMat2({self.a}, {self.b}, {self.c}, {self.d})"

    @classmethod
    def identity(cls) -> 'IntMat2':
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return int(self.matrix.det())

    @property
    def trace(self) -> int:
        return int(self.matrix.trace())

    def inverse(self) -> 'IntMat2':
        if self.det != 1:
            raise ValueError(f"matrix {self} is not in SL(2, Z)")
        return IntMat2(self.d, -self.b, -self.c, self.a)

    def is_central(self) -> bool:
        return self == IntMat2.identity() or self == -IntMat2.identity()

    def equal_up_to_sign(self, other: 'IntMat2') -> bool:
        return self == other or self == -other

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


_PSL_SIGMA = {
    Symbol.S1: IntMat2(1, 1, 0, 1),
    Symbol.S2: IntMat2(1, 0, -1, 1),
}
_PSL_SIGMA[Symbol.DELTA] = _PSL_SIGMA[Symbol.S1] @ _PSL_SIGMA[Symbol.S2] @ _PSL_SIGMA[Symbol.S1]
_PSL_A = {
    Generator.A1: IntMat2(1, 2, 0, 1),
    Generator.A2: IntMat2(1, 0, -2, 1),
}


def psl2_image(w: BraidWord | FreeWord | CyclicFreeWord) -> IntMat2:
    result = IntMat2.identity()
    if isinstance(w, BraidWord):
        for symbol, exponent in w.letters:
            result = result @ (_PSL_SIGMA[symbol] ** exponent)
    else:
        for generator, exponent in w.blocks:
            result = result @ (_PSL_A[generator] ** exponent)
    return result


def psl2_generator(symbol: Symbol) -> IntMat2:
    return _PSL_SIGMA[symbol]


def congruence_word(m: IntMat2) -> FreeWord:
    """Write a matrix congruent to the identity mod 2 as a word in a1, a2.

    The matrix is reduced from the left: a1 powers shrink the top-left entry
    below the bottom-left one, a2 powers do the opposite, until the bottom-left
    entry vanishes. The result is determined up to the sign of the matrix.
    """
    if m.det != 1 or m.b % 2 or m.c % 2 or m.a % 2 == 0:
        raise ValueError(f"{m} is not in the level-2 congruence subgroup")
    peeled: list[tuple[Generator, int]] = []
    while m.c != 0:
        if abs(m.a) > abs(m.c):
            n = round(Fraction(m.a, 2 * m.c))
            peeled.append((Generator.A1, n))
            m = (_PSL_A[Generator.A1] ** -n) @ m
        else:
            n = -round(Fraction(m.c, 2 * m.a))
            peeled.append((Generator.A2, n))
            m = (_PSL_A[Generator.A2] ** -n) @ m
    # m = +-[[1, 2n], [0, 1]]
    peeled.append((Generator.A1, (m.a * m.b) // 2))
    return free_reduce(peeled)


class LaurentPoly:
    """Polynomial in t and 1/t with integer coefficients, stored sparsely."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs=None):
        cleaned = {}
        for exponent, value in (coeffs or {}).items():
            if value:
                cleaned[int(exponent)] = int(value)
        self._coeffs = cleaned

    @classmethod
    def monomial(cls, coefficient: int = 1, exponent: int = 0) -> 'LaurentPoly':
        return cls({exponent: coefficient})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        out = defaultdict(int, self._coeffs)
        for exponent, value in other._coeffs.items():
            out[exponent] += value
        return LaurentPoly(out)

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self + (-other)

    def __mul__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        out = defaultdict(int)
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] += c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def unit_exponent(self) -> int | None:
        """m if the polynomial is +-t^m, else None."""
        if len(self._coeffs) == 1:
            (exponent, value), = self._coeffs.items()
            if abs(value) == 1:
                return exponent
        return None

    def __repr__(self):
        if not self._coeffs:
            return '0'
        return ' + '.join(f"{c}*t^{e}" for e, c in sorted(self._coeffs.items()))


_ZERO = LaurentPoly()
_ONE = LaurentPoly.monomial(1)


@dataclass(frozen=True)
class LaurentMat2:
    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    def __matmul__(self, other: 'LaurentMat2') -> 'LaurentMat2':
        return LaurentMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @classmethod
    def identity(cls) -> 'LaurentMat2':
        return cls(_ONE, _ZERO, _ZERO, _ONE)

    @classmethod
    def scalar(cls, p: LaurentPoly) -> 'LaurentMat2':
        return cls(p, _ZERO, _ZERO, p)

    @property
    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c


def _t(coefficient, exponent):
    return LaurentPoly.monomial(coefficient, exponent)


_BURAU = {
    (Symbol.S1, 1): LaurentMat2(_t(-1, 1), _ONE, _ZERO, _ONE),
    (Symbol.S1, -1): LaurentMat2(_t(-1, -1), _t(1, -1), _ZERO, _ONE),
    (Symbol.S2, 1): LaurentMat2(_ONE, _ZERO, _t(1, 1), _t(-1, 1)),
    (Symbol.S2, -1): LaurentMat2(_ONE, _ZERO, _ONE, _t(-1, -1)),
}
_BURAU[(Symbol.DELTA, 1)] = _BURAU[(Symbol.S1, 1)] @ _BURAU[(Symbol.S2, 1)] @ _BURAU[(Symbol.S1, 1)]
_BURAU[(Symbol.DELTA, -1)] = _BURAU[(Symbol.S1, -1)] @ _BURAU[(Symbol.S2, -1)] @ _BURAU[(Symbol.S1, -1)]


def burau_image(b: BraidWord) -> LaurentMat2:
    result = LaurentMat2.identity()
    for symbol, exponent in b.letters:
        step = _BURAU[(symbol, 1 if exponent > 0 else -1)]
        for _ in range(abs(exponent)):
            result = result @ step
    return result


def braids_equal(b1: BraidWord, b2: BraidWord) -> bool:
    return burau_image(b1) == burau_image(b2)


def check_burau_convention() -> bool:
    """The braid relation and d^2 -> t^3 I, as pinned by the golden tests."""
    s1 = BraidWord(((Symbol.S1, 1),))
    s2 = BraidWord(((Symbol.S2, 1),))
    relation = braids_equal(s1 * s2 * s1, s2 * s1 * s2)
    center = burau_image(BraidWord(((Symbol.DELTA, 2),))) == LaurentMat2.scalar(_t(1, 3))
    return relation and center


class NTClass(enum.Enum):
    CENTRAL_POWER = 'CentralPower'
    PERIODIC = 'Periodic'
    REDUCIBLE = 'Reducible'
    PSEUDO_ANOSOV = 'PseudoAnosov'


def nt_class(w: CyclicFreeWord | FreeWord | BraidWord) -> NTClass:
    m = psl2_image(w)
    if m.is_central():
        return NTClass.CENTRAL_POWER
    trace = abs(m.trace)
    if trace > 2:
        return NTClass.PSEUDO_ANOSOV
    if trace == 2:
        return NTClass.REDUCIBLE
    return NTClass.PERIODIC


def entropy_exact(w: CyclicFreeWord | FreeWord | BraidWord) -> float:
    """ln of the spectral radius of the SL(2, Z) image; 0 unless pseudo-Anosov."""
    trace = abs(psl2_image(w).trace)
    if trace <= 2:
        return 0.0
    with mp.workdps(40):
        value = mp.log((trace + mp.sqrt(mp.mpf(trace) ** 2 - 4)) / 2)
        return float(value)
