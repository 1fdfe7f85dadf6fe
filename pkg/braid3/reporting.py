"""
Payloads and text tables for the management command and the HTTP API.

Every ``*_payload`` function returns a plain dict with a fixed key set for its
command; numbers are rounded to 15 significant digits and non-finite values
are emitted as null.
"""

from __future__ import annotations

import json
import math

from django.core.serializers.json import DjangoJSONEncoder

from braid3.analytic_blocks import AuditReport, GluingAudit, slalom_extremal_bounds, slalom_extremal_exact
from braid3.braid_words import (
    BraidWord,
    CyclicExceptional,
    CyclicFreeWord,
    FreeWord,
    SyllableDecomposition,
    render_braid,
    render_free_word,
    script_L,
)
from braid3.enumeration import EnumerationSummary
from braid3.invariant_bounds import BoundsReport, Interval, Verdict
from braid3.normal_form import NormalForm, cycle_label, permutation

SIGNIFICANT_DIGITS = 15


def number(value):
    if value is None:
        return None
    value = float(value)
    if not math.isfinite(value):
        return None
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def _interval(interval: Interval | None):
    if interval is None:
        return None
    return [number(interval.lower), number(interval.upper)]


def _text(w) -> str:
    if w is None:
        return None
    if isinstance(w, BraidWord):
        return render_braid(w)
    if isinstance(w, CyclicFreeWord):
        return str(w)
    return render_free_word(w)


def dumps(payload: dict) -> str:
    return json.dumps(payload, cls=DjangoJSONEncoder, indent=2)


def parse_payload(source: str, word: BraidWord | FreeWord) -> dict:
    braid = isinstance(word, BraidWord)
    return {
        'input': source,
        'kind': 'braid' if braid else 'pure_word',
        'word': _text(word),
        'length': len(word),
        'exponent_sum': word.exponent_sum,
        'degree': None if braid else word.total_degree,
    }


def normalize_payload(b: BraidWord, nf: NormalForm, theta_word: FreeWord | None) -> dict:
    return {
        'word': _text(b),
        'normal_form': str(nf),
        'permutation': cycle_label(permutation(b)),
        'exponent_sum': b.exponent_sum,
        'theta_word': _text(theta_word),
    }


def syllables_payload(word: FreeWord | CyclicFreeWord, found: SyllableDecomposition | CyclicExceptional) -> dict:
    if isinstance(found, CyclicExceptional):
        syllables, degrees, L, exceptional = [], [], 0.0, found.family.value
    else:
        syllables = [
            {'kind': s.kind.value, 'word': render_free_word(s.as_free_word()), 'degree': s.degree,
             'start': s.start, 'stop': s.stop}
            for s in found
        ]
        degrees, L, exceptional = list(found.degrees), script_L(found), None
    return {
        'word': _text(word),
        'cyclic': isinstance(word, CyclicFreeWord),
        'syllables': syllables,
        'degrees': degrees,
        'L': number(L),
        'exceptional': exceptional,
    }


def bounds_payload(rep: BoundsReport, verdict: Verdict | None = None) -> dict:
    word = rep.braid if rep.braid is not None else rep.word
    return {
        'word': _text(word),
        'boundary': rep.boundary.value,
        'normal_form': None if rep.normal_form is None else str(rep.normal_form),
        'theta_word': _text(rep.theta_word),
        'L': number(rep.L),
        'lambda_lower': number(rep.lambda_lower),
        'lambda_upper': number(rep.lambda_upper),
        'module_value': _interval(rep.module_value),
        'nt_class': rep.nt_class.value,
        'exceptional': rep.exceptional,
        'reason': rep.reason,
        'degrees': list(rep.decomposition.degrees) if rep.decomposition is not None else [],
        'syllable_intervals': [_interval(i) for i in rep.syllable_intervals],
        'sum_lower': number(rep.sum_lower),
        'sum_upper': number(rep.sum_upper),
        'sum_hypothesis': rep.sum_hypothesis,
        'verdict': None if verdict is None else verdict.value,
    }


def entropy_payload(rep: BoundsReport, verdict: Verdict) -> dict:
    return {
        'word': _text(rep.word),
        'L': number(rep.L),
        'entropy_exact': number(rep.entropy_exact),
        'entropy_lower': number(rep.entropy_lower),
        'entropy_upper': number(rep.entropy_upper),
        'lambda_lower': number(rep.lambda_lower),
        'lambda_upper': number(rep.lambda_upper),
        'nt_class': rep.nt_class.value,
        'exceptional': rep.exceptional,
        'reason': rep.reason,
        'verdict': verdict.value,
    }


def enumeration_payload(summary: EnumerationSummary) -> dict:
    return {
        'max_degree': summary.max_degree,
        'checked': summary.checked,
        'failures': summary.failures,
        'failed_words': [_text(cw) for cw in summary.failed_words],
        'verdict': (Verdict.PASS if summary.passed else Verdict.FAIL).value,
    }


def audit_payload(report: AuditReport) -> dict:
    return {
        'kind': report.kind,
        'passed': report.passed,
        'counted': len(report.counted),
        'failures': len(report.failures),
        'entries': [
            {'name': e.name, 'parameter': number(e.parameter), 'observed': number(e.observed),
             'bound': number(e.bound), 'margin': number(e.margin), 'strict': e.strict,
             'samples': e.samples, 'status': e.status.value}
            for e in report.entries
        ],
    }


def glue_payload(audit: GluingAudit) -> dict:
    return {
        'word': _text(audit.word),
        'grid_step': number(audit.grid_step),
        'sup_mu': number(audit.sup_mu),
        'qc_dilatation': number(audit.qc_dilatation),
        'margin': number(audit.margin),
        'passed': audit.passed,
        'junctions': [
            {'index': j.index, 'window': [number(j.window[0]), number(j.window[1])], 'max_mu': number(j.max_mu),
             'syllables': list(j.syllables), 'orientation': j.orientation, 'lift': number(j.lift)}
            for j in audit.junctions
        ],
    }


def slalom_payload(M: float) -> dict:
    value = slalom_extremal_exact(M)
    bounds = slalom_extremal_bounds(M)
    return {
        'M': number(M),
        'extremal_length': number(value),
        'half_extremal_length': number(value / 2),
        'stated': _interval(bounds.stated),
        'proof': _interval(bounds.proof),
        'contained': bounds.contains(value),
    }


def error_payload(exc: Exception) -> dict:
    return {'error': getattr(exc, 'kind', 'error'), 'detail': str(exc)}


# text output

def _cell(value) -> str:
    if value is None:
        return '-'
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(_cell(v) for v in value) + ']'
    if value == '':
        return 'e'
    return str(value)


def key_value_table(payload: dict) -> str:
    """Two-column table of the scalar fields of a payload."""
    rows = [(key, _cell(value)) for key, value in payload.items() if not isinstance(value, list) or
            all(not isinstance(v, dict) for v in value)]
    width = max(len(key) for key, _ in rows)
    return '\n'.join(f"{key.ljust(width)}  {value}" for key, value in rows)


def grid_table(headers: list[str], rows: list[list]) -> str:
    cells = [[_cell(v) for v in row] for row in rows]
    widths = [max([len(h)] + [len(row[i]) for row in cells]) for i, h in enumerate(headers)]
    lines = ['  '.join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append('  '.join('-' * w for w in widths))
    lines += ['  '.join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return '\n'.join(lines)


def syllables_text(payload: dict) -> str:
    head = key_value_table({k: v for k, v in payload.items() if k != 'syllables'})
    if not payload['syllables']:
        return head
    rows = [[s['kind'], s['word'], s['degree'], s['start'], s['stop']] for s in payload['syllables']]
    return head + '\n\n' + grid_table(['kind', 'word', 'degree', 'start', 'stop'], rows)


def audit_text(payload: dict) -> str:
    rows = [[e['name'], e['parameter'], e['observed'], e['bound'], e['margin'], e['status']]
            for e in payload['entries']]
    table = grid_table(['check', 'param', 'observed', 'bound', 'margin', 'status'], rows)
    return (f"{table}\n\n{payload['kind']}: {payload['counted']} checks counted, "
            f"{payload['failures']} failures")


def glue_text(payload: dict) -> str:
    head = key_value_table({k: v for k, v in payload.items() if k != 'junctions'})
    rows = [[j['index'], ' | '.join(j['syllables']), j['window'], j['max_mu'], j['orientation'], j['lift']]
            for j in payload['junctions']]
    if not rows:
        return head
    return head + '\n\n' + grid_table(['junction', 'syllables', 'window', 'max |mu|', 'sign', 'lift'], rows)


def enumeration_text(payload: dict) -> str:
    line = f"{payload['checked']} classes checked, {payload['failures']} failures"
    if payload['failed_words']:
        line += '\n' + '\n'.join(f"FAIL {w}" for w in payload['failed_words'])
    return line
