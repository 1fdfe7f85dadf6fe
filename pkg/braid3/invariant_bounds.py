"""
Two-sided bounds on the extremal length invariants and the entropy of 3-braids.

All bounds are expressed through L(w), the sum of ln(4d - 1) over the syllables
of a reduced word w in a1, a2:

    L / (2 pi) <= Lambda <= 300 L,   L / 4 <= h <= 150 pi L   (conjugacy classes)

with the exceptional families where Lambda and h vanish.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple

from braid3.braid_words import (
    BraidWord,
    CyclicExceptional,
    CyclicFreeWord,
    FreeWord,
    Syllable,
    SyllableDecomposition,
    SyllableKind,
    cyclic_syllable_decompose,
    empty_decomposition,
    script_L,
    syllable_decompose,
)
from braid3.exceptions import UnsupportedCombinationError
from braid3.matrix_oracles import NTClass, entropy_exact, nt_class
from braid3.normal_form import DeltaPower, NormalForm, normalize, theta

logger = logging.getLogger(__name__)

LOWER_FACTOR = 1 / (2 * math.pi)
UPPER_FACTOR = 300.0
SUM_UPPER_FACTOR = 600.0
ENTROPY_LOWER_FACTOR = 0.25
ENTROPY_UPPER_FACTOR = 150 * math.pi


class BoundaryCondition(str, enum.Enum):
    TR_TR = 'tr_tr'
    PB_PB = 'pb_pb'
    TR_PB = 'tr_pb'
    PB_TR = 'pb_tr'
    CONJUGACY = 'conjugacy'

    @property
    def is_mixed(self) -> bool:
        return self in (BoundaryCondition.TR_PB, BoundaryCondition.PB_TR)


class Verdict(str, enum.Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'


class Interval(NamedTuple):
    lower: float
    upper: float


@dataclass(frozen=True)
class BoundsReport:
    word: FreeWord | CyclicFreeWord
    boundary: BoundaryCondition
    L: float
    lambda_lower: float
    lambda_upper: float
    nt_class: NTClass
    # (1/lambda_upper, 1/lambda_lower), the conformal module interval
    module_value: Interval | None = None
    entropy_lower: float | None = None
    entropy_upper: float | None = None
    entropy_exact: float | None = None
    exceptional: str | None = None
    reason: str | None = None
    decomposition: SyllableDecomposition | None = None
    sum_lower: float | None = None
    sum_upper: float | None = None
    sum_hypothesis: bool | None = None
    normal_form: NormalForm | None = None
    braid: BraidWord | None = None
    syllable_intervals: tuple[Interval, ...] = field(default=())

    def __post_init__(self):
        if self.lambda_lower > self.lambda_upper:
            raise ValueError("lambda_lower exceeds lambda_upper")
        if self.exceptional and (self.lambda_lower or self.lambda_upper):
            raise ValueError("exceptional reports carry Lambda = 0")

    @property
    def theta_word(self) -> FreeWord | None:
        if self.normal_form is None or isinstance(self.normal_form, DeltaPower):
            return None
        return self.word


def _module(lower: float, upper: float) -> Interval | None:
    if lower <= 0:
        return None
    return Interval(1 / upper, 1 / lower)


def _decompose(w: FreeWord) -> SyllableDecomposition:
    return empty_decomposition(w) if w.is_empty else syllable_decompose(w)


def syllable_lower_bound_sum(dec: SyllableDecomposition) -> float:
    """Additive lower bound: sum over syllables of ln(4d - 1) / (2 pi)."""
    return math.fsum(LOWER_FACTOR * math.log(4 * d - 1) for d in dec.degrees)


def _mixed_intervals(dec: SyllableDecomposition) -> tuple[Interval, ...]:
    return tuple(syllable_block_bounds(s, BoundaryCondition.TR_PB) for s in dec.syllables)


def _tr_exception(w: FreeWord) -> str | None:
    if len(w.blocks) > 1:
        return None
    if w.is_empty:
        return 'identity'
    return f"a{int(w.blocks[0].generator)}^n"


def _pb_exception(w: FreeWord) -> str | None:
    exponents = {term.exponent for term in w.blocks}
    if exponents in (set(), {1}, {-1}):
        return 'identity' if w.is_empty else 'equal_unit_powers'
    return None


_REASONS = {
    BoundaryCondition.TR_TR: "tr boundary values: w is a power of a single generator, Lambda_tr = 0",
    BoundaryCondition.PB_PB: "pb boundary values: every term of w has the same power +1 or -1, Lambda_pb = 0",
}


def bounds_thm1(w: FreeWord, bc: BoundaryCondition) -> BoundsReport:
    bc = BoundaryCondition(bc)
    if bc not in (BoundaryCondition.TR_TR, BoundaryCondition.PB_PB):
        raise UnsupportedCombinationError(f"bounds_thm1 takes tr_tr or pb_pb, not {bc.value}")
    dec = _decompose(w)
    L = script_L(dec)
    exceptional = _tr_exception(w) if bc is BoundaryCondition.TR_TR else _pb_exception(w)
    lower, upper = (0.0, 0.0) if exceptional else (LOWER_FACTOR * L, UPPER_FACTOR * L)
    singleton = len(dec) == 1 and dec.syllables[0].kind is SyllableKind.SINGLETON
    return BoundsReport(
        word=w,
        boundary=bc,
        L=L,
        lambda_lower=lower,
        lambda_upper=upper,
        nt_class=nt_class(w),
        module_value=_module(lower, upper),
        exceptional=exceptional,
        reason=_REASONS[bc] if exceptional else None,
        decomposition=dec,
        sum_lower=LOWER_FACTOR * L,
        sum_upper=SUM_UPPER_FACTOR * L,
        sum_hypothesis=not singleton,
    )


def bounds_mixed(w: FreeWord, bc: BoundaryCondition) -> BoundsReport:
    bc = BoundaryCondition(bc)
    if not bc.is_mixed:
        raise UnsupportedCombinationError(f"bounds_mixed takes tr_pb or pb_tr, not {bc.value}")
    dec = _decompose(w)
    L = script_L(dec)
    lower, upper = LOWER_FACTOR * L, UPPER_FACTOR * L
    return BoundsReport(
        word=w,
        boundary=bc,
        L=L,
        lambda_lower=lower,
        lambda_upper=upper,
        nt_class=nt_class(w),
        module_value=_module(lower, upper),
        decomposition=dec,
        syllable_intervals=_mixed_intervals(dec),
    )


_CYCLIC_REASONS = {
    'identity': "identity class, Lambda = h = 0",
    'a1^n': "class of a1^n, Lambda = h = 0",
    'a2^n': "class of a2^n, Lambda = h = 0",
    '(a1a2)^n': "class of (a1 a2)^n, Lambda = h = 0",
}


def class_bounds_thm2(cw: CyclicFreeWord) -> BoundsReport:
    exact = entropy_exact(cw)
    cls = nt_class(cw)
    if cw.is_empty:
        found: SyllableDecomposition | CyclicExceptional = empty_decomposition(cw)
        exceptional = 'identity'
    else:
        found = cyclic_syllable_decompose(cw)
        exceptional = found.family.value if isinstance(found, CyclicExceptional) else None

    if exceptional:
        # no syllable boundary in the periodic word; L is reported as 0
        return BoundsReport(
            word=cw,
            boundary=BoundaryCondition.CONJUGACY,
            L=0.0,
            lambda_lower=0.0,
            lambda_upper=0.0,
            nt_class=cls,
            entropy_lower=0.0,
            entropy_upper=0.0,
            entropy_exact=exact,
            exceptional=exceptional,
            reason=_CYCLIC_REASONS[exceptional],
        )

    L = script_L(found)
    lower, upper = LOWER_FACTOR * L, UPPER_FACTOR * L
    return BoundsReport(
        word=cw,
        boundary=BoundaryCondition.CONJUGACY,
        L=L,
        lambda_lower=lower,
        lambda_upper=upper,
        nt_class=cls,
        module_value=_module(lower, upper),
        entropy_lower=ENTROPY_LOWER_FACTOR * L,
        entropy_upper=ENTROPY_UPPER_FACTOR * L,
        entropy_exact=exact,
        decomposition=found,
    )


def braid_bounds_thm3(b: BraidWord) -> BoundsReport:
    nf = normalize(b)
    if isinstance(nf, DeltaPower):
        return BoundsReport(
            word=FreeWord(),
            boundary=BoundaryCondition.TR_TR,
            L=0.0,
            lambda_lower=0.0,
            lambda_upper=0.0,
            nt_class=NTClass.CENTRAL_POWER,
            exceptional='delta_power',
            reason="b is a power of d, Lambda_tr = 0",
            normal_form=nf,
            braid=b,
        )
    if nf.b1.is_empty:
        image = theta(nf)
        return BoundsReport(
            word=image,
            boundary=BoundaryCondition.TR_TR,
            L=0.0,
            lambda_lower=0.0,
            lambda_upper=0.0,
            nt_class=nt_class(image),
            exceptional='sigma_power_delta',
            reason="b = s_j^k d^l, Lambda_tr = 0",
            normal_form=nf,
            braid=b,
        )
    w = theta(nf)
    dec = syllable_decompose(w)
    L = script_L(dec)
    lower, upper = LOWER_FACTOR * L, UPPER_FACTOR * L
    return BoundsReport(
        word=w,
        boundary=BoundaryCondition.TR_TR,
        L=L,
        lambda_lower=lower,
        lambda_upper=upper,
        nt_class=nt_class(w),
        module_value=_module(lower, upper),
        decomposition=dec,
        normal_form=nf,
        braid=b,
    )


def syllable_block_bounds(s: Syllable, bc: BoundaryCondition) -> Interval:
    bc = BoundaryCondition(bc)
    d = s.degree
    if bc.is_mixed:
        return Interval(math.log(4 * d - 1) / math.pi, math.log(4 * d + 1) / math.pi)
    if (s.kind is SyllableKind.FORM1 and bc is BoundaryCondition.PB_PB) or (
        s.kind is SyllableKind.FORM2 and bc is BoundaryCondition.TR_TR
    ):
        return Interval(2 / math.pi * math.log(2 * d - 1), 2 / math.pi * math.log(2 * d + 1))
    raise UnsupportedCombinationError(f"no building-block bound for {s.kind.value} with {bc.value}")


def consistency_check(rep: BoundsReport) -> Verdict:
    if rep.boundary is not BoundaryCondition.CONJUGACY or rep.entropy_exact is None:
        raise UnsupportedCombinationError("consistency_check takes conjugacy-class reports")
    if rep.exceptional:
        ok = rep.entropy_exact == 0.0
    else:
        ok = (
            rep.entropy_lower <= rep.entropy_exact <= rep.entropy_upper
            and rep.nt_class is NTClass.PSEUDO_ANOSOV
        )
    if not ok:
        logger.warning("sandwich failed for %s: h=%s, bounds [%s, %s]", rep.word, rep.entropy_exact,
                       rep.entropy_lower, rep.entropy_upper)
    return Verdict.PASS if ok else Verdict.FAIL
