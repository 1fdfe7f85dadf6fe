"""
Exhaustive enumeration of cyclic words in a1, a2 and the entropy sandwich over them.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from braid3.braid_words import CyclicFreeWord, Generator, Term
from braid3.invariant_bounds import Verdict, class_bounds_thm2, consistency_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationSummary:
    checked: int
    failures: int
    failed_words: tuple[CyclicFreeWord, ...] = field(default=())
    max_degree: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _exponents(budget: int) -> Iterator[int]:
    for size in range(1, budget + 1):
        yield size
        yield -size


def _alternating(generator: Generator, budget: int, prefix: tuple[Term, ...]) -> Iterator[tuple[Term, ...]]:
    """Block sequences starting with ``prefix`` and continuing with ``generator``, ending on a2."""
    for exponent in _exponents(budget):
        blocks = prefix + (Term(generator, exponent),)
        if generator is Generator.A2:
            yield blocks
        yield from _alternating(generator.other, budget - abs(exponent), blocks)


def enumerate_words(max_degree: int) -> Iterator[CyclicFreeWord]:
    """Every cyclically reduced word of degree <= ``max_degree``, once per rotation class.

    Words are yielded sorted by (degree, blocks).
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    found: set[tuple[Term, ...]] = set()
    for generator in Generator:
        for exponent in _exponents(max_degree):
            found.add((Term(generator, exponent),))
    # any class of two or more blocks has a rotation starting with a1 and ending with a2
    for blocks in _alternating(Generator.A1, max_degree, ()):
        found.add(CyclicFreeWord(blocks).blocks)
    words = sorted(found, key=lambda blocks: (sum(abs(term.exponent) for term in blocks), blocks))
    logger.debug("%d rotation classes up to degree %d", len(words), max_degree)
    for blocks in words:
        yield CyclicFreeWord(blocks)


def check_word(cw: CyclicFreeWord) -> Verdict:
    return consistency_check(class_bounds_thm2(cw))


def check_enumeration(max_degree: int, workers: int = 1) -> EnumerationSummary:
    """Run the conjugacy-class sandwich over ``enumerate_words(max_degree)``.

    Results are collected in enumeration order whatever the number of workers.
    """
    words = list(enumerate_words(max_degree))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(check_word, words, chunksize=64))
    else:
        verdicts = [check_word(cw) for cw in words]

    failed = tuple(cw for cw, verdict in zip(words, verdicts) if verdict is Verdict.FAIL)
    summary = EnumerationSummary(len(words), len(failed), failed, max_degree)
    logger.info("enumeration to degree %d: %d classes checked, %d failures",
                max_degree, summary.checked, summary.failures)
    return summary
