from django.test import SimpleTestCase

from braid3.analytic_blocks import pb_witness, tr_witness
from braid3.exceptions import DomainError

TARGET = 1e-4


class TrWitnessTests(SimpleTestCase):
    def test_powers(self):
        for n in (1, 2, 3):
            report = tr_witness(n, TARGET)
            self.assertTrue(report.passed, n)
            self.assertAlmostEqual(report.winding, n, places=9)
            self.assertAlmostEqual(report.extremal_length, TARGET, delta=TARGET * 1e-9)
            self.assertLess(report.x_range[0], -1e4)

    def test_far_side_avoids_punctures(self):
        # e^-X is far below the working precision; it must not read as g = -1
        for target in (1e-2, 1e-4):
            report = tr_witness(1, target)
            self.assertTrue(report.avoids_punctures, target)
            self.assertTrue(report.horizontal_on_axis, target)

    def test_arguments(self):
        with self.assertRaises(DomainError):
            tr_witness(0, TARGET)
        with self.assertRaises(DomainError):
            tr_witness(1, 0.0)


class PbWitnessTests(SimpleTestCase):
    def test_degrees(self):
        for d in (2, 3, 4, 5):
            report = pb_witness(d, TARGET)
            self.assertTrue(report.passed, d)
            self.assertEqual(report.expected_winding, d / 2)
            self.assertTrue(report.horizontal_on_axis)
            self.assertAlmostEqual(report.extremal_length, TARGET, delta=TARGET * 1e-9)

    def test_arguments(self):
        with self.assertRaises(DomainError):
            pb_witness(1, TARGET)
        with self.assertRaises(DomainError):
            pb_witness(3, -1.0)
