from braid3.analytic_blocks.audits import (
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
from braid3.analytic_blocks.blocks import (
    BlockGeometry,
    BlockKind,
    Rect,
    block_derivative,
    block_geometry,
    block_map,
    evaluate_block,
    geometry_for_syllable,
)
from braid3.analytic_blocks.coverings import covering_f, covering_f1, covering_f2, covering_f2_exp
from braid3.analytic_blocks.elliptic import F_M, QuadratureRule, QuadratureSpec, ellip_K
from braid3.analytic_blocks.gluing import GluingAudit, glue_word, random_gluable_word
from braid3.analytic_blocks.slalom import (
    Circle,
    MoebiusMap,
    SlalomBounds,
    half_slalom_extremal,
    inversive_distance,
    slalom_extremal_bounds,
    slalom_extremal_exact,
)
from braid3.analytic_blocks.witnesses import WitnessReport, pb_witness, tr_witness

__all__ = [
    'AuditEntry', 'AuditReport', 'AuditStatus', 'audit_anchor_normalization', 'audit_block_constants',
    'audit_elliptic_sides', 'audit_slalom', 'audit_upper_bound_arithmetic', 'audit_vsl_bounds', 'audit_witnesses',
    'BlockGeometry', 'BlockKind', 'Rect', 'block_derivative', 'block_geometry', 'block_map', 'evaluate_block',
    'geometry_for_syllable',
    'covering_f', 'covering_f1', 'covering_f2', 'covering_f2_exp',
    'F_M', 'QuadratureRule', 'QuadratureSpec', 'ellip_K',
    'GluingAudit', 'glue_word', 'random_gluable_word',
    'Circle', 'MoebiusMap', 'SlalomBounds', 'half_slalom_extremal', 'inversive_distance', 'slalom_extremal_bounds',
    'slalom_extremal_exact',
    'WitnessReport', 'pb_witness', 'tr_witness',
]
