import math

from django.test import SimpleTestCase

from braid3.braid_words import (
    BraidWord,
    CyclicExceptional,
    CyclicFreeWord,
    ExceptionalFamily,
    FreeWord,
    Generator,
    Letter,
    Symbol,
    SyllableKind,
    Term,
    cyclic_reduce,
    cyclic_syllable_decompose,
    empty_decomposition,
    free_reduce,
    parse_braid,
    parse_pure_word,
    render_braid,
    render_cyclic_word,
    render_free_word,
    render_syllable,
    script_L,
    syllable_decompose,
    word_L,
)
from braid3.exceptions import EmptyWordError, WordSyntaxError

A1, A2 = Generator.A1, Generator.A2

# a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1
SIX_SYLLABLES = "a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1"


class ParseTests(SimpleTestCase):
    def test_braid_tokens(self):
        self.assertEqual(parse_braid("s1^3 s2^-2").letters,
                         (Letter(Symbol.S1, 3), Letter(Symbol.S2, -2)))
        self.assertEqual(parse_braid("d^2").letters, (Letter(Symbol.DELTA, 2),))
        self.assertTrue(parse_braid("").is_identity_word)
        self.assertEqual(parse_braid("  s1\ts2 ").letters, (Letter(Symbol.S1, 1), Letter(Symbol.S2, 1)))

    def test_pure_word_is_reduced(self):
        self.assertEqual(parse_pure_word("a1^2 a2^-3").blocks, (Term(A1, 2), Term(A2, -3)))
        self.assertEqual(parse_pure_word("a1 a1 a1^-1").blocks, (Term(A1, 1),))
        self.assertTrue(parse_pure_word("a1 a2 a2^-1 a1^-1").is_empty)

    def test_syntax_error_reports_byte_offset(self):
        with self.assertRaises(WordSyntaxError) as cm:
            parse_braid("s1 x3")
        self.assertEqual(cm.exception.offset, 3)
        self.assertEqual(cm.exception.token, 'x3')

    def test_zero_exponent_rejected(self):
        with self.assertRaises(WordSyntaxError):
            parse_pure_word("a1^0")

    def test_braid_token_in_pure_word(self):
        with self.assertRaises(WordSyntaxError):
            parse_pure_word("a1 s2")

    def test_render_round_trip(self):
        for text in ("s1^3 s2^-2 d", "d^-4", "s2"):
            self.assertEqual(render_braid(parse_braid(text)), text)
        self.assertEqual(render_free_word(parse_pure_word("a1^2 a2^-3 a1")), "a1^2 a2^-3 a1")


class ReductionTests(SimpleTestCase):
    def test_free_reduce(self):
        self.assertEqual(free_reduce([(A1, 2), (A1, 3)]).blocks, (Term(A1, 5),))
        self.assertTrue(free_reduce([(A1, 1), (A2, 0), (A1, -1)]).is_empty)
        self.assertEqual(free_reduce([(A2, -1), (A1, 2)]).blocks, (Term(A2, -1), Term(A1, 2)))

    def test_free_word_rejects_unreduced_blocks(self):
        with self.assertRaises(ValueError):
            FreeWord(((A1, 1), (A1, 2)))

    def test_cyclic_reduce(self):
        self.assertEqual(cyclic_reduce(parse_pure_word("a1 a2 a1^-1")).blocks, (Term(A2, 1),))
        self.assertEqual(cyclic_reduce(parse_pure_word("a2 a1^3 a2")).blocks, (Term(A1, 3), Term(A2, 2)))
        self.assertEqual(cyclic_reduce(parse_pure_word("a1^2 a2^-1")).blocks, (Term(A1, 2), Term(A2, -1)))

    def test_rotations_share_a_representative(self):
        self.assertEqual(CyclicFreeWord(((A2, 2), (A1, 3))), CyclicFreeWord(((A1, 3), (A2, 2))))

    def test_inverse_and_product(self):
        w = parse_pure_word("a1^2 a2^-1")
        self.assertTrue((w * w.inverse()).is_empty)
        b = parse_braid("s1 s2^2")
        self.assertEqual((b * b.inverse()).exponent_sum, 0)
        self.assertEqual(BraidWord(((Symbol.DELTA, 1),)).exponent_sum, 3)


class SyllableTests(SimpleTestCase):
    def test_six_syllable_word(self):
        dec = syllable_decompose(parse_pure_word(SIX_SYLLABLES))
        self.assertEqual(dec.degrees, (1, 2, 3, 3, 1, 1))
        self.assertEqual([s.kind for s in dec], [
            SyllableKind.SINGLETON, SyllableKind.FORM1, SyllableKind.FORM1,
            SyllableKind.FORM2, SyllableKind.SINGLETON, SyllableKind.SINGLETON,
        ])
        expected = 3 * math.log(3) + math.log(7) + 2 * math.log(11)
        self.assertAlmostEqual(script_L(dec), expected, delta=1e-12)
        self.assertAlmostEqual(script_L(dec), 10.0375, places=4)

    def test_single_block(self):
        dec = syllable_decompose(parse_pure_word("a1^5"))
        self.assertEqual([(s.kind, s.degree) for s in dec], [(SyllableKind.FORM1, 5)])

    def test_form1_interrupts_unit_run(self):
        dec = syllable_decompose(parse_pure_word("a1 a2 a1^5 a2 a1"))
        self.assertEqual([(s.kind, s.degree) for s in dec],
                         [(SyllableKind.FORM2, 2), (SyllableKind.FORM1, 5), (SyllableKind.FORM2, 2)])

    def test_syllables_tile_the_word(self):
        dec = syllable_decompose(parse_pure_word(SIX_SYLLABLES))
        self.assertEqual([(s.start, s.stop) for s in dec], [(0, 1), (1, 2), (2, 3), (3, 6), (6, 7), (7, 8)])
        self.assertEqual(sum(dec.degrees), parse_pure_word(SIX_SYLLABLES).total_degree)

    def test_empty_word(self):
        with self.assertRaises(EmptyWordError):
            syllable_decompose(FreeWord())
        self.assertEqual(script_L(empty_decomposition(FreeWord())), 0.0)
        self.assertEqual(word_L(FreeWord()), 0.0)

    def test_single_syllable_L(self):
        self.assertAlmostEqual(word_L(parse_pure_word("a2^-2")), math.log(7), delta=1e-15)

    def test_render_syllable(self):
        dec = syllable_decompose(parse_pure_word("a1^2 a2 a1"))
        self.assertEqual([render_syllable(s) for s in dec], ["Form1(a1^2, d=2)", "Form2(a2 a1, d=2)"])


class CyclicSyllableTests(SimpleTestCase):
    def test_alternating_word_with_extra_letter(self):
        n = 3
        cw = cyclic_reduce(parse_pure_word(" ".join(["a1 a2"] * n + ["a1"])))
        dec = cyclic_syllable_decompose(cw)
        self.assertEqual([(s.kind, s.degree) for s in dec], [(SyllableKind.FORM1, 2), (SyllableKind.FORM2, 2 * n - 1)])
        self.assertEqual(render_free_word(dec.syllables[0].as_free_word()), "a1^2")

    def test_alternating_power_is_exceptional(self):
        found = cyclic_syllable_decompose(cyclic_reduce(parse_pure_word("a1 a2 a1 a2 a1 a2")))
        self.assertIsInstance(found, CyclicExceptional)
        self.assertEqual(found.family, ExceptionalFamily.ALTERNATING)
        self.assertEqual(found.power, 3)

    def test_generator_power_is_exceptional(self):
        found = cyclic_syllable_decompose(cyclic_reduce(parse_pure_word("a2^-4")))
        self.assertEqual(found.family, ExceptionalFamily.POWER_A2)
        self.assertEqual(found.power, -4)

    def test_every_block_boundary_cuts(self):
        dec = cyclic_syllable_decompose(cyclic_reduce(parse_pure_word("a1^2 a2^2")))
        self.assertEqual([(s.kind, s.degree) for s in dec], [(SyllableKind.FORM1, 2), (SyllableKind.FORM1, 2)])

    def test_empty_cyclic_word(self):
        with self.assertRaises(EmptyWordError):
            cyclic_syllable_decompose(CyclicFreeWord())

    def test_render_cyclic(self):
        self.assertEqual(render_cyclic_word(cyclic_reduce(parse_pure_word("a2 a1^3 a2"))), "a1^3 a2^2")
