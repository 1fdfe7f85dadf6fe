from typing import List, Optional

from ninja import Schema


class ErrorOut(Schema):
    error: str
    detail: str


class HealthOut(Schema):
    status: str
    burau_convention: bool


class NormalizeOut(Schema):
    word: str
    normal_form: str
    permutation: str
    exponent_sum: int
    theta_word: Optional[str] = None


class SyllableOut(Schema):
    kind: str
    word: str
    degree: int
    start: int
    stop: int


class SyllablesOut(Schema):
    word: str
    cyclic: bool
    syllables: List[SyllableOut]
    degrees: List[int]
    L: float
    exceptional: Optional[str] = None


class BoundsOut(Schema):
    word: str
    boundary: str
    normal_form: Optional[str] = None
    theta_word: Optional[str] = None
    L: float
    lambda_lower: float
    lambda_upper: float
    module_value: Optional[List[float]] = None
    nt_class: str
    exceptional: Optional[str] = None
    reason: Optional[str] = None
    degrees: List[int]
    syllable_intervals: List[List[float]]
    sum_lower: Optional[float] = None
    sum_upper: Optional[float] = None
    sum_hypothesis: Optional[bool] = None
    verdict: Optional[str] = None


class EntropyOut(Schema):
    word: str
    L: float
    entropy_exact: Optional[float] = None
    entropy_lower: Optional[float] = None
    entropy_upper: Optional[float] = None
    lambda_lower: float
    lambda_upper: float
    nt_class: str
    exceptional: Optional[str] = None
    reason: Optional[str] = None
    verdict: str


class SlalomOut(Schema):
    M: float
    extremal_length: float
    half_extremal_length: float
    stated: List[float]
    proof: List[float]
    contained: bool
