"""
The factorisation b = s_j^k * b1 * d^l of a 3-braid and the map theta.

``normalize`` reads the factorisation off three invariants of the braid: the
strand permutation picks the coset of the pure braids and the parity of l, the
SL(2, Z) image of the pure part gives b1 as a reduced word in a1, a2, and the
exponent sum fixes l. The reassembled word is then checked against the input
with the Burau oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy.combinatorics import Permutation

from braid3.braid_words import (
    BraidWord,
    FreeWord,
    Generator,
    Letter,
    Symbol,
    free_reduce,
    render_free_word,
)
from braid3.exceptions import CertificationError, NotApplicableError, ZeroInputError
from braid3.matrix_oracles import IntMat2, braids_equal, congruence_word, psl2_generator, psl2_image

logger = logging.getLogger(__name__)

PermutationS3 = Permutation

# sympy composes p*q as "p first, then q", i.e. left to right along the word
_TAU = {
    Symbol.S1: Permutation([1, 0, 2]),
    Symbol.S2: Permutation([0, 2, 1]),
    Symbol.DELTA: Permutation([2, 1, 0]),
}

# array form of tau(b) -> (leading generator or None, parity of the d exponent)
_COSETS = {
    (0, 1, 2): (None, 0),
    (2, 1, 0): (None, 1),
    (1, 0, 2): (Symbol.S1, 0),
    (0, 2, 1): (Symbol.S2, 0),
    (1, 2, 0): (Symbol.S1, 1),
    (2, 0, 1): (Symbol.S2, 1),
}

_SIGMA_OF = {Generator.A1: Symbol.S1, Generator.A2: Symbol.S2}
_GENERATOR_OF = {Symbol.S1: Generator.A1, Symbol.S2: Generator.A2}


@dataclass(frozen=True)
class DeltaPower:
    m: int

    def __str__(self):
        return f"DeltaPower({self.m})"


@dataclass(frozen=True)
class Split:
    j: int
    k: int
    b1: FreeWord
    l: int

    def __post_init__(self):
        if self.j not in (1, 2):
            raise ValueError("j must be 1 or 2")
        if self.k == 0:
            raise ValueError("k must be nonzero")
        if self.b1.blocks and self.b1.blocks[0].generator == Generator(self.j):
            raise ValueError(f"b1 must not start with a{self.j} when j={self.j}")

    def __str__(self):
        return f"Split(j={self.j}, k={self.k}, b1={render_free_word(self.b1) or 'e'}, l={self.l})"


NormalForm = DeltaPower | Split


def identity_permutation() -> Permutation:
    return Permutation([0, 1, 2])


def permutation(b: BraidWord) -> Permutation:
    result = identity_permutation()
    for symbol, exponent in b.letters:
        result = result * _TAU[symbol] ** exponent
    return result


def cycle_label(p: Permutation) -> str:
    """'id', '(12)', '(123)', ... with strands numbered from 1."""
    cycles = p.cyclic_form
    if not cycles:
        return 'id'
    return ''.join('(' + ''.join(str(i + 1) for i in cycle) + ')' for cycle in cycles)


def q(k: int) -> int:
    """The even integer nearest to k, ties broken toward zero."""
    if k == 0:
        raise ZeroInputError("q is defined on nonzero integers only")
    if k % 2 == 0:
        return k
    return k - (1 if k > 0 else -1)


def normalize(b: BraidWord) -> NormalForm:
    lead, parity = _COSETS[tuple(permutation(b).array_form)]
    image = psl2_image(b)
    left = psl2_generator(lead).inverse() if lead else IntMat2.identity()
    right = psl2_generator(Symbol.DELTA) ** -parity
    pure = congruence_word(left @ image @ right).blocks

    if lead is None:
        if not pure:
            m, rest = divmod(b.exponent_sum, 3)
            if rest:
                raise CertificationError(f"exponent sum of {b} is not a multiple of 3")
            nf = DeltaPower(m)
            _certify(nf, b)
            return nf
        j, k, b1 = pure[0].generator, 2 * pure[0].exponent, pure[1:]
    else:
        j = _GENERATOR_OF[lead]
        if pure and pure[0].generator == j:
            k, b1 = 1 + 2 * pure[0].exponent, pure[1:]
        else:
            k, b1 = 1, pure

    l, rest = divmod(b.exponent_sum - k - 2 * sum(term.exponent for term in b1), 3)
    if rest:
        raise CertificationError(f"exponent bookkeeping failed for {b}")
    nf = Split(int(j), k, FreeWord(tuple(b1)), l)
    _certify(nf, b)
    return nf


def _certify(nf: NormalForm, b: BraidWord):
    if not braids_equal(denormalize(nf), b):
        logger.warning("normal form %s does not reassemble to %s", nf, b)
        raise CertificationError(f"normal form {nf} is not Burau-equal to {b}")


def theta(nf: NormalForm) -> FreeWord:
    if isinstance(nf, DeltaPower):
        raise NotApplicableError("theta is undefined on powers of d")
    return free_reduce([(Generator(nf.j), q(nf.k) // 2)] + list(nf.b1.blocks))


def denormalize(nf: NormalForm) -> BraidWord:
    if isinstance(nf, DeltaPower):
        return BraidWord(((Symbol.DELTA, nf.m),) if nf.m else ())
    letters = [Letter(_SIGMA_OF[Generator(nf.j)], nf.k)]
    letters += [Letter(_SIGMA_OF[term.generator], 2 * term.exponent) for term in nf.b1.blocks]
    if nf.l:
        letters.append(Letter(Symbol.DELTA, nf.l))
    return BraidWord(tuple(letters))


def shift_delta(nf: NormalForm, n: int = 1) -> NormalForm:
    """The normal form of b * d^n given that of b."""
    if isinstance(nf, DeltaPower):
        return DeltaPower(nf.m + n)
    return Split(nf.j, nf.k, nf.b1, nf.l + n)
