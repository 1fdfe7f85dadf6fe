from django.test import SimpleTestCase

from braid3.analytic_blocks import (
    AuditEntry,
    AuditReport,
    AuditStatus,
    audit_anchor_normalization,
    audit_block_constants,
    audit_elliptic_sides,
    audit_slalom,
    audit_upper_bound_arithmetic,
    audit_vsl_bounds,
    audit_witnesses,
)

MISPRINT = '1.414 1.25 18 (1.504 sqrt3 pi + 0.715) < 260.4 + 0.715'


class BlockConstantAuditTests(SimpleTestCase):
    def test_full_sample_count(self):
        report = audit_block_constants()
        self.assertTrue(report.passed, [e.name for e in report.failures])
        self.assertTrue(all(e.samples >= 10_000 for e in report.entries))

    def test_seed_is_reproducible(self):
        a = audit_block_constants(M_range=(2.0, 3.5), samples=500, seed=3)
        b = audit_block_constants(M_range=(2.0, 3.5), samples=500, seed=3)
        self.assertEqual([e.observed for e in a.entries], [e.observed for e in b.entries])


class ClosedFormAuditTests(SimpleTestCase):
    def test_anchor_normalization(self):
        report = audit_anchor_normalization()
        self.assertTrue(report.passed)
        self.assertEqual(len(report.entries), 2 * (3 + 3 + 3 + 2))

    def test_vertical_side_lengths(self):
        report = audit_vsl_bounds()
        self.assertTrue(report.passed, [(e.name, e.parameter) for e in report.failures])
        names = {e.name for e in report.entries}
        self.assertIn('Form1 long: vsl < 1.362 ln(4d-1)', names)
        self.assertIn('half block: pi d/2 < 2 ln(4d-1)', names)

    def test_elliptic_sides(self):
        report = audit_elliptic_sides()
        self.assertTrue(report.passed, [(e.name, e.parameter) for e in report.failures])
        self.assertEqual(len(report.entries), 5 * 20)

    def test_slalom(self):
        report = audit_slalom()
        self.assertTrue(report.passed)
        self.assertEqual(len(report.entries), 4 * 50)

    def test_witnesses(self):
        report = audit_witnesses()
        self.assertTrue(report.passed)
        self.assertEqual(len(report.entries), 7)


class ArithmeticAuditTests(SimpleTestCase):
    def test_every_counted_chain_holds(self):
        report = audit_upper_bound_arithmetic()
        self.assertTrue(report.passed, [e.name for e in report.failures])
        self.assertTrue(all(e.margin > 0 for e in report.counted if e.strict))

    def test_single_misprint(self):
        report = audit_upper_bound_arithmetic()
        misprints = [e for e in report.entries if e.status is AuditStatus.MISPRINT]
        self.assertEqual([e.name for e in misprints], [MISPRINT])
        self.assertLess(misprints[0].margin, 0)
        self.assertEqual(len(report.counted), len(report.entries) - 1)

    def test_named_chains(self):
        entries = {e.name: e for e in audit_upper_bound_arithmetic().entries}
        self.assertEqual(entries['1.414 1.25 18 1.504 sqrt3 pi < 260.4'].status, AuditStatus.PASS)
        self.assertEqual(entries['260.4 < 300'].status, AuditStatus.PASS)
        self.assertFalse(entries['pi/4 <= 0.715 ln 3'].strict)


class ReportTests(SimpleTestCase):
    def test_combination(self):
        ok = AuditEntry('a', 1.0, 2.0, AuditStatus.PASS)
        bad = AuditEntry('b', 3.0, 2.0, AuditStatus.FAIL)
        noted = AuditEntry('c', 3.0, 2.0, AuditStatus.MISPRINT)
        report = AuditReport('x', (ok, noted)) + AuditReport('y', (bad,))
        self.assertEqual(report.kind, 'x+y')
        self.assertEqual(report.failures, (bad,))
        self.assertEqual(report.counted, (ok, bad))
        self.assertFalse(report.passed)
        self.assertEqual(bad.margin, -1.0)
        self.assertTrue(AuditReport('x', (ok, noted)).passed)
