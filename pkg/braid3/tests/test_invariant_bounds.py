import math

from django.test import SimpleTestCase

from braid3.braid_words import FreeWord, cyclic_reduce, parse_braid, parse_pure_word, syllable_decompose
from braid3.enumeration import enumerate_words
from braid3.exceptions import UnsupportedCombinationError
from braid3.invariant_bounds import (
    BoundaryCondition,
    BoundsReport,
    Interval,
    Verdict,
    bounds_mixed,
    bounds_thm1,
    braid_bounds_thm3,
    class_bounds_thm2,
    consistency_check,
    syllable_block_bounds,
    syllable_lower_bound_sum,
)
from braid3.matrix_oracles import NTClass
from braid3.normal_form import DeltaPower, Split

TWO_PI = 2 * math.pi


class BoundaryValueBoundsTests(SimpleTestCase):
    def test_tr_bounds(self):
        rep = bounds_thm1(parse_pure_word("a1^2 a2^-3"), BoundaryCondition.TR_TR)
        L = math.log(7) + math.log(11)
        self.assertAlmostEqual(rep.L, L, places=12)
        self.assertAlmostEqual(rep.lambda_lower, L / TWO_PI, places=12)
        self.assertAlmostEqual(rep.lambda_upper, 300 * L, places=9)
        self.assertAlmostEqual(rep.module_value.lower, 1 / (300 * L), places=12)
        self.assertAlmostEqual(rep.module_value.upper, TWO_PI / L, places=12)
        self.assertIsNone(rep.exceptional)
        self.assertTrue(rep.sum_hypothesis)
        self.assertAlmostEqual(rep.sum_upper, 600 * L, places=9)

    def test_tr_and_pb_agree_away_from_exceptions(self):
        w = parse_pure_word("a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1")
        tr = bounds_thm1(w, BoundaryCondition.TR_TR)
        pb = bounds_thm1(w, 'pb_pb')
        self.assertEqual((tr.lambda_lower, tr.lambda_upper), (pb.lambda_lower, pb.lambda_upper))
        self.assertAlmostEqual(tr.L, 3 * math.log(3) + math.log(7) + 2 * math.log(11), places=12)

    def test_tr_exceptions(self):
        rep = bounds_thm1(parse_pure_word("a1^5"), BoundaryCondition.TR_TR)
        self.assertEqual(rep.exceptional, 'a1^n')
        self.assertEqual((rep.lambda_lower, rep.lambda_upper), (0.0, 0.0))
        self.assertIsNone(rep.module_value)
        self.assertIn("single generator", rep.reason)
        self.assertAlmostEqual(rep.L, math.log(19), places=12)
        self.assertEqual(bounds_thm1(parse_pure_word("a2^-2"), BoundaryCondition.TR_TR).exceptional, 'a2^n')
        self.assertEqual(bounds_thm1(FreeWord(), BoundaryCondition.TR_TR).exceptional, 'identity')
        # not an exception for pb
        self.assertIsNone(bounds_thm1(parse_pure_word("a1^5"), BoundaryCondition.PB_PB).exceptional)

    def test_pb_exceptions(self):
        rep = bounds_thm1(parse_pure_word("a1 a2 a1"), BoundaryCondition.PB_PB)
        self.assertEqual(rep.exceptional, 'equal_unit_powers')
        self.assertEqual(rep.lambda_upper, 0.0)
        self.assertEqual(bounds_thm1(parse_pure_word("a2^-1 a1^-1"), BoundaryCondition.PB_PB).exceptional,
                         'equal_unit_powers')
        self.assertIsNone(bounds_thm1(parse_pure_word("a1 a2"), BoundaryCondition.TR_TR).exceptional)

    def test_single_singleton_fails_sum_hypothesis(self):
        self.assertFalse(bounds_thm1(parse_pure_word("a2^-1"), BoundaryCondition.PB_PB).sum_hypothesis)

    def test_wrong_boundary(self):
        with self.assertRaises(UnsupportedCombinationError):
            bounds_thm1(parse_pure_word("a1"), BoundaryCondition.TR_PB)
        with self.assertRaises(UnsupportedCombinationError):
            bounds_mixed(parse_pure_word("a1"), BoundaryCondition.TR_TR)

    def test_mixed_bounds(self):
        rep = bounds_mixed(parse_pure_word("a1^2 a2"), BoundaryCondition.PB_TR)
        self.assertIsNone(rep.exceptional)
        self.assertEqual(len(rep.syllable_intervals), 2)
        first, second = rep.syllable_intervals
        self.assertAlmostEqual(first.lower, math.log(7) / math.pi, places=12)
        self.assertAlmostEqual(first.upper, math.log(9) / math.pi, places=12)
        self.assertAlmostEqual(second.lower, math.log(3) / math.pi, places=12)
        self.assertAlmostEqual(second.upper, math.log(5) / math.pi, places=12)


class ClassBoundsTests(SimpleTestCase):
    def test_pseudo_anosov_class(self):
        rep = class_bounds_thm2(cyclic_reduce(parse_pure_word("a1^2 a2 a1 a2")))
        L = math.log(7) + math.log(11)
        self.assertAlmostEqual(rep.L, L, places=12)
        self.assertEqual(rep.nt_class, NTClass.PSEUDO_ANOSOV)
        self.assertAlmostEqual(rep.entropy_exact, math.log(5 + 2 * math.sqrt(6)), places=12)
        self.assertAlmostEqual(rep.entropy_lower, L / 4, places=12)
        self.assertAlmostEqual(rep.entropy_upper, 150 * math.pi * L, places=9)
        self.assertEqual(consistency_check(rep), Verdict.PASS)

    def test_rotation_invariance(self):
        a = class_bounds_thm2(cyclic_reduce(parse_pure_word("a1^-1 a2 a1^3")))
        b = class_bounds_thm2(cyclic_reduce(parse_pure_word("a2 a1^2")))
        self.assertEqual(a.L, b.L)
        self.assertEqual(a.entropy_exact, b.entropy_exact)

    def test_exceptional_classes(self):
        cases = {
            "": 'identity',
            "a1^4": 'a1^n',
            "a2^-1": 'a2^n',
            "a1 a2 a1 a2": '(a1a2)^n',
            "a2^-1 a1^-1": '(a1a2)^n',
        }
        for text, family in cases.items():
            rep = class_bounds_thm2(cyclic_reduce(parse_pure_word(text)))
            self.assertEqual(rep.exceptional, family, text)
            self.assertEqual((rep.L, rep.lambda_upper, rep.entropy_upper), (0.0, 0.0, 0.0))
            self.assertEqual(rep.entropy_exact, 0.0)
            self.assertEqual(consistency_check(rep), Verdict.PASS, text)

    def test_conjugation_leaves_the_class_alone(self):
        w = parse_pure_word("a1^2 a2^-1 a1 a2^3")
        g = parse_pure_word("a2^5 a1^-1")
        a = class_bounds_thm2(cyclic_reduce(w))
        b = class_bounds_thm2(cyclic_reduce(g * w * g.inverse()))
        self.assertEqual(a.word, b.word)
        self.assertEqual(a.L, b.L)

    def test_exceptional_means_not_pseudo_anosov(self):
        for cw in enumerate_words(5):
            rep = class_bounds_thm2(cw)
            self.assertEqual(rep.exceptional is None, rep.nt_class is NTClass.PSEUDO_ANOSOV, str(cw))
            self.assertEqual(consistency_check(rep), Verdict.PASS, str(cw))

    def test_consistency_check_needs_a_class_report(self):
        with self.assertRaises(UnsupportedCombinationError):
            consistency_check(bounds_thm1(parse_pure_word("a1^2 a2^2"), BoundaryCondition.TR_TR))


class BraidBoundsTests(SimpleTestCase):
    def test_split_braid(self):
        rep = braid_bounds_thm3(parse_braid("s1^3 s2^-2"))
        self.assertEqual(rep.normal_form, Split(1, 3, parse_pure_word("a2^-1"), 0))
        self.assertEqual(rep.theta_word, parse_pure_word("a1 a2^-1"))
        self.assertAlmostEqual(rep.L, 2 * math.log(3), places=12)
        self.assertAlmostEqual(rep.lambda_lower, 2 * math.log(3) / TWO_PI, places=12)
        self.assertAlmostEqual(rep.lambda_upper, 600 * math.log(3), places=9)

    def test_delta_power(self):
        rep = braid_bounds_thm3(parse_braid("s1 s2 s1 s2 s1 s2"))
        self.assertEqual(rep.normal_form, DeltaPower(2))
        self.assertEqual(rep.exceptional, 'delta_power')
        self.assertEqual(rep.nt_class, NTClass.CENTRAL_POWER)
        self.assertIsNone(rep.theta_word)

    def test_sigma_power_times_delta(self):
        rep = braid_bounds_thm3(parse_braid("s1^3 d"))
        self.assertEqual(rep.exceptional, 'sigma_power_delta')
        self.assertEqual(rep.lambda_upper, 0.0)


class SyllableBlockTests(SimpleTestCase):
    def test_block_intervals(self):
        form2 = syllable_decompose(parse_pure_word("a1 a2")).syllables[0]
        form1 = syllable_decompose(parse_pure_word("a1^3")).syllables[0]
        tr = syllable_block_bounds(form2, BoundaryCondition.TR_TR)
        self.assertAlmostEqual(tr.lower, 2 / math.pi * math.log(3), places=12)
        self.assertAlmostEqual(tr.upper, 2 / math.pi * math.log(5), places=12)
        pb = syllable_block_bounds(form1, BoundaryCondition.PB_PB)
        self.assertAlmostEqual(pb.lower, 2 / math.pi * math.log(5), places=12)
        with self.assertRaises(UnsupportedCombinationError):
            syllable_block_bounds(form1, BoundaryCondition.TR_TR)

    def test_additive_lower_bound(self):
        dec = syllable_decompose(parse_pure_word("a1^2 a2 a1 a2^-1"))
        self.assertAlmostEqual(syllable_lower_bound_sum(dec), (2 * math.log(7) + math.log(3)) / TWO_PI)

    def test_report_rejects_inverted_bounds(self):
        with self.assertRaises(ValueError):
            BoundsReport(FreeWord(), BoundaryCondition.TR_TR, 1.0, 2.0, 1.0, NTClass.REDUCIBLE)
        self.assertEqual(Interval(1.0, 2.0).upper, 2.0)
