"""
Braid words, reduced words in the free group <a1, a2> and their syllables.

a1 and a2 stand for the classes of s1^2 and s2^2 in PB3 / <d^2>, which is free
of rank two. Words are stored as tuples of ``Term(generator, exponent)`` blocks.
"""

from __future__ import annotations

import enum
import logging
import math
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from braid3.exceptions import EmptyWordError, WordSyntaxError

logger = logging.getLogger(__name__)


class Generator(enum.IntEnum):
    A1 = 1
    A2 = 2

    @property
    def other(self) -> 'Generator':
        return Generator.A2 if self is Generator.A1 else Generator.A1


class Symbol(enum.Enum):
    S1 = 's1'
    S2 = 's2'
    DELTA = 'd'

    @property
    def weight(self) -> int:
        # contribution of one letter to the exponent sum B3 -> Z
        return 3 if self is Symbol.DELTA else 1


class Letter(NamedTuple):
    symbol: Symbol
    exponent: int


class Term(NamedTuple):
    generator: Generator
    exponent: int


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(Letter(Symbol(s), int(e)) for s, e in self.letters)
        if any(letter.exponent == 0 for letter in letters):
            raise ValueError("braid word letters must have nonzero exponents")
        object.__setattr__(self, 'letters', letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: 'BraidWord') -> 'BraidWord':
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> 'BraidWord':
        return BraidWord(tuple(Letter(s, -e) for s, e in reversed(self.letters)))

    @property
    def exponent_sum(self) -> int:
        return sum(letter.symbol.weight * letter.exponent for letter in self.letters)

    @property
    def is_identity_word(self) -> bool:
        return not self.letters

    def __str__(self):
        return render_braid(self)


@dataclass(frozen=True)
class FreeWord:
    blocks: tuple[Term, ...] = ()

    def __post_init__(self):
        blocks = tuple(Term(Generator(g), int(e)) for g, e in self.blocks)
        for left, right in zip(blocks, blocks[1:]):
            if left.generator == right.generator:
                raise ValueError(f"adjacent blocks share generator a{int(left.generator)}; use free_reduce")
        if any(term.exponent == 0 for term in blocks):
            raise ValueError("free word blocks must have nonzero exponents")
        object.__setattr__(self, 'blocks', blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __mul__(self, other: 'FreeWord') -> 'FreeWord':
        return free_reduce(self.blocks + other.blocks)

    def inverse(self) -> 'FreeWord':
        return FreeWord(tuple(Term(g, -e) for g, e in reversed(self.blocks)))

    @property
    def total_degree(self) -> int:
        return sum(abs(term.exponent) for term in self.blocks)

    @property
    def exponent_sum(self) -> int:
        return sum(term.exponent for term in self.blocks)

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    def __str__(self):
        return render_free_word(self)


@dataclass(frozen=True)
class CyclicFreeWord:
    """A cyclically reduced word kept in its lexicographically minimal rotation."""

    blocks: tuple[Term, ...] = ()
    cyclically_reduced: bool = True

    def __post_init__(self):
        blocks = tuple(Term(Generator(g), int(e)) for g, e in self.blocks)
        FreeWord(blocks)
        if len(blocks) > 1 and blocks[0].generator == blocks[-1].generator:
            raise ValueError("first and last blocks share a generator; use cyclic_reduce")
        object.__setattr__(self, 'blocks', canonical_rotation(blocks))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    @property
    def total_degree(self) -> int:
        return sum(abs(term.exponent) for term in self.blocks)

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    def as_free_word(self) -> FreeWord:
        return FreeWord(self.blocks)

    def __str__(self):
        return render_cyclic_word(self)


class SyllableKind(enum.Enum):
    FORM1 = 'Form1'
    FORM2 = 'Form2'
    SINGLETON = 'Singleton'


@dataclass(frozen=True)
class Syllable:
    kind: SyllableKind
    start: int
    stop: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        if self.stop - self.start != len(self.terms) or not self.terms:
            raise ValueError("syllable span does not match its terms")
        exponents = {term.exponent for term in self.terms}
        if self.kind is SyllableKind.FORM1:
            valid = len(self.terms) == 1 and abs(self.terms[0].exponent) >= 2
        elif self.kind is SyllableKind.FORM2:
            valid = len(self.terms) >= 2 and exponents in ({1}, {-1})
        else:
            valid = len(self.terms) == 1 and abs(self.terms[0].exponent) == 1
        if not valid:
            raise ValueError(f"terms {self.terms} do not form a {self.kind.value} syllable")

    @property
    def degree(self) -> int:
        return sum(abs(term.exponent) for term in self.terms)

    @property
    def sign(self) -> int:
        return 1 if self.terms[0].exponent > 0 else -1

    def as_free_word(self) -> FreeWord:
        return FreeWord(self.terms)


@dataclass(frozen=True)
class SyllableDecomposition:
    syllables: tuple[Syllable, ...]
    source: FreeWord | CyclicFreeWord
    # index of the source block where the decomposed period starts
    offset: int = 0

    def __iter__(self):
        return iter(self.syllables)

    def __len__(self):
        return len(self.syllables)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(s.degree for s in self.syllables)

    def single(self, index: int) -> 'SyllableDecomposition':
        """The one-syllable decomposition of the ``index``-th syllable."""
        syllable = self.syllables[index]
        word = syllable.as_free_word()
        return SyllableDecomposition(
            (Syllable(syllable.kind, 0, len(syllable.terms), syllable.terms),), word
        )


class ExceptionalFamily(enum.Enum):
    POWER_A1 = 'a1^n'
    POWER_A2 = 'a2^n'
    ALTERNATING = '(a1a2)^n'


@dataclass(frozen=True)
class CyclicExceptional:
    """A cyclic word whose periodic expansion has no syllable boundary."""

    family: ExceptionalFamily
    word: CyclicFreeWord
    power: int


_BRAID_TOKEN = re.compile(r'^(s1|s2|d)(?:\^([+-]?\d+))?$')
_PURE_TOKEN = re.compile(r'^(a1|a2)(?:\^([+-]?\d+))?$')
_WHITESPACE = re.compile(r'\S+')


def _tokens(text: str, pattern: re.Pattern) -> list[tuple[str, int]]:
    parsed = []
    for match in _WHITESPACE.finditer(text):
        token = match.group(0)
        offset = len(text[:match.start()].encode('utf-8'))
        found = pattern.match(token)
        if found is None:
            raise WordSyntaxError("unknown token", offset, token)
        exponent = 1 if found.group(2) is None else int(found.group(2))
        if exponent == 0:
            raise WordSyntaxError("zero exponent", offset, token)
        parsed.append((found.group(1), exponent))
    return parsed


def parse_braid(text: str) -> BraidWord:
    """Parse ``s1``, ``s2`` and ``d`` tokens, each with an optional ``^<int>``."""
    return BraidWord(tuple(Letter(Symbol(name), e) for name, e in _tokens(text, _BRAID_TOKEN)))


def parse_pure_word(text: str) -> FreeWord:
    pairs = [(Generator(int(name[1])), e) for name, e in _tokens(text, _PURE_TOKEN)]
    return free_reduce(pairs)


def free_reduce(blocks: Iterable[tuple[int, int]]) -> FreeWord:
    stack: list[Term] = []
    for generator, exponent in blocks:
        if exponent == 0:
            continue
        generator = Generator(generator)
        if stack and stack[-1].generator == generator:
            merged = stack[-1].exponent + exponent
            stack.pop()
            if merged:
                stack.append(Term(generator, merged))
        else:
            stack.append(Term(generator, exponent))
    return FreeWord(tuple(stack))


def canonical_rotation(blocks: tuple[Term, ...]) -> tuple[Term, ...]:
    if len(blocks) < 2:
        return tuple(blocks)
    return min(blocks[i:] + blocks[:i] for i in range(len(blocks)))


def cyclic_reduce(w: FreeWord) -> CyclicFreeWord:
    blocks = list(w.blocks)
    while len(blocks) > 1 and blocks[0].generator == blocks[-1].generator:
        merged = blocks[0].exponent + blocks[-1].exponent
        middle = blocks[1:-1]
        blocks = middle if merged == 0 else [Term(blocks[0].generator, merged)] + middle
    return CyclicFreeWord(tuple(blocks))


def _split_terms(terms: tuple[Term, ...]) -> tuple[Syllable, ...]:
    syllables = []
    i = 0
    while i < len(terms):
        exponent = terms[i].exponent
        if abs(exponent) >= 2:
            syllables.append(Syllable(SyllableKind.FORM1, i, i + 1, terms[i:i + 1]))
            i += 1
            continue
        j = i
        while j < len(terms) and terms[j].exponent == exponent:
            j += 1
        kind = SyllableKind.FORM2 if j - i >= 2 else SyllableKind.SINGLETON
        syllables.append(Syllable(kind, i, j, terms[i:j]))
        i = j
    return tuple(syllables)


def syllable_decompose(w: FreeWord) -> SyllableDecomposition:
    if w.is_empty:
        raise EmptyWordError("the empty word has no syllables")
    return SyllableDecomposition(_split_terms(w.blocks), w)


def empty_decomposition(source: FreeWord | CyclicFreeWord) -> SyllableDecomposition:
    return SyllableDecomposition((), source)


def _is_boundary(left: Term, right: Term) -> bool:
    return not (abs(left.exponent) == 1 and left.exponent == right.exponent)


def cyclic_syllable_decompose(cw: CyclicFreeWord) -> SyllableDecomposition | CyclicExceptional:
    if cw.is_empty:
        raise EmptyWordError("the empty cyclic word has no syllables")
    blocks = cw.blocks
    if len(blocks) == 1:
        term = blocks[0]
        family = ExceptionalFamily.POWER_A1 if term.generator is Generator.A1 else ExceptionalFamily.POWER_A2
        return CyclicExceptional(family, cw, term.exponent)
    cuts = [i for i in range(len(blocks)) if _is_boundary(blocks[i - 1], blocks[i])]
    if not cuts:
        # all terms are +1 (or all -1) and generators alternate
        return CyclicExceptional(ExceptionalFamily.ALTERNATING, cw, blocks[0].exponent * len(blocks) // 2)
    start = cuts[0]
    period = blocks[start:] + blocks[:start]
    logger.debug("cyclic word %s cut at block %d", cw, start)
    return SyllableDecomposition(_split_terms(period), cw, offset=start)


def script_L(dec: SyllableDecomposition) -> float:
    """Sum of ln(4 d_j - 1) over the syllables; 0 for the identity."""
    return math.fsum(math.log(4 * d - 1) for d in dec.degrees)


def word_L(w: FreeWord) -> float:
    if w.is_empty:
        return 0.0
    return script_L(syllable_decompose(w))


def _render(pairs, name) -> str:
    parts = []
    for key, exponent in pairs:
        token = name(key)
        parts.append(token if exponent == 1 else f"{token}^{exponent}")
    return ' '.join(parts)


def render_braid(b: BraidWord) -> str:
    return _render(b.letters, lambda symbol: symbol.value)


def render_free_word(w: FreeWord) -> str:
    return _render(w.blocks, lambda generator: f"a{int(generator)}")


def render_cyclic_word(cw: CyclicFreeWord) -> str:
    return _render(cw.blocks, lambda generator: f"a{int(generator)}")


def render_syllable(s: Syllable) -> str:
    return f"{s.kind.value}({render_free_word(s.as_free_word())}, d={s.degree})"
