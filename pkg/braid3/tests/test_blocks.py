import math

from django.test import SimpleTestCase

from braid3.analytic_blocks import (
    BlockKind,
    F_M,
    block_derivative,
    block_geometry,
    block_map,
    evaluate_block,
    geometry_for_syllable,
)
from braid3.analytic_blocks.blocks import anchor_checks, invert_long
from braid3.braid_words import parse_pure_word, syllable_decompose
from braid3.exceptions import BlockUnavailable, DomainError


def first_syllable(text):
    return syllable_decompose(parse_pure_word(text)).syllables[0]


class ShortBlockTests(SimpleTestCase):
    def test_form1_short_on_the_axis(self):
        geometry = block_geometry(BlockKind.FORM1_SHORT, 1.0)
        self.assertAlmostEqual(block_map(geometry, 0.75j * math.pi), 1j, places=14)
        self.assertAlmostEqual(block_map(geometry, -0.75j * math.pi), -1j, places=14)

    def test_form1_short_anchors(self):
        for M in (0.5, 1.0, 1.5):
            geometry = block_geometry(BlockKind.FORM1_SHORT, M)
            self.assertAlmostEqual(geometry.p_minus.real, geometry.p_plus.real)
            for check in anchor_checks(geometry):
                self.assertAlmostEqual(abs(check.derivative), 1, places=12)

    def test_form2_short_anchor(self):
        geometry = block_geometry(BlockKind.FORM2_SHORT, 1.5)
        self.assertEqual(geometry.degree, 3)
        self.assertAlmostEqual(geometry.p_plus, 1.5j * math.pi, places=14)
        g, dg = evaluate_block(geometry, geometry.p_plus)
        self.assertAlmostEqual(g, 0.5j, places=12)
        self.assertAlmostEqual(dg, 1j, places=12)

    def test_derivative_matches_difference_quotient(self):
        geometry = block_geometry(BlockKind.FORM2_SHORT, 2.0)
        xi, h = -0.3 + 1.0j, 1e-6
        quotient = (block_map(geometry, xi + h) - block_map(geometry, xi - h)) / (2 * h)
        self.assertAlmostEqual(block_derivative(geometry, xi), quotient, places=6)

    def test_short_parameters(self):
        with self.assertRaises(DomainError):
            block_geometry(BlockKind.FORM1_SHORT, 2.0)
        with self.assertRaises(DomainError):
            block_geometry(BlockKind.FORM2_SHORT, 0.5)

    def test_outside_the_rectangle(self):
        geometry = block_geometry(BlockKind.FORM1_SHORT, 1.0)
        with self.assertRaises(DomainError):
            evaluate_block(geometry, 5 + 0j)


class LongBlockTests(SimpleTestCase):
    def test_form1_long_anchor(self):
        geometry = block_geometry(BlockKind.FORM1_LONG, 2.0)
        self.assertEqual(geometry.degree, 5)
        self.assertAlmostEqual(geometry.p_minus.real, geometry.p_plus.real, places=9)
        low, high = anchor_checks(geometry)
        self.assertAlmostEqual(high.value, 2.5j, places=12)
        self.assertAlmostEqual(high.derivative, -1j, places=10)
        self.assertAlmostEqual(low.deviation, 0, places=10)
        g, dg = evaluate_block(geometry, geometry.p_plus)
        self.assertAlmostEqual(g, 2.5j, places=6)
        self.assertAlmostEqual(dg, -1j, places=6)

    def test_inversion_round_trip(self):
        geometry = block_geometry(BlockKind.FORM1_LONG, 2.0)
        xi = -0.1 + 0.1j
        zeta = invert_long(geometry, xi)
        self.assertAlmostEqual(geometry.r * F_M(zeta, geometry.M), xi, places=8)

    def test_form2_long_anchors(self):
        geometry = block_geometry(BlockKind.FORM2_LONG, 3.0)
        for check in anchor_checks(geometry):
            self.assertLess(check.deviation, 1e-9)

    def test_long_parameters(self):
        with self.assertRaises(DomainError):
            block_geometry(BlockKind.FORM1_LONG, 1.5)
        with self.assertRaises(DomainError):
            block_geometry(BlockKind.FORM2_LONG, 2.0)


class SyllableGeometryTests(SimpleTestCase):
    def test_kinds_by_degree(self):
        cases = {
            "a1^3": (BlockKind.FORM1_SHORT, 1.0),
            "a2^-5": (BlockKind.FORM1_LONG, 2.0),
            "a1 a2 a1": (BlockKind.FORM2_SHORT, 1.5),
            "a2^-1 a1^-1 a2^-1 a1^-1 a2^-1": (BlockKind.FORM2_LONG, 3.0),
        }
        for text, (kind, M) in cases.items():
            geometry = geometry_for_syllable(first_syllable(text))
            self.assertEqual((geometry.kind, geometry.M), (kind, M), text)
            self.assertEqual(geometry.degree, first_syllable(text).degree, text)

    def test_singletons_have_no_block(self):
        with self.assertRaises(BlockUnavailable):
            geometry_for_syllable(first_syllable("a1"))
