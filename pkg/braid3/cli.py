"""
The command surface behind ``manage.py braid3``.

``run`` takes a validated ``CliConfig`` and two text sinks and returns the exit
status: 0 on success, 1 when a check fails or a numeric routine gives up, 2 on
bad input.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from pathlib import Path

from braid3 import reporting
from braid3.analytic_blocks import (
    AuditReport,
    audit_anchor_normalization,
    audit_block_constants,
    audit_elliptic_sides,
    audit_slalom,
    audit_upper_bound_arithmetic,
    audit_vsl_bounds,
    audit_witnesses,
    glue_word,
    random_gluable_word,
)
from braid3.braid_words import (
    BraidWord,
    FreeWord,
    cyclic_reduce,
    cyclic_syllable_decompose,
    parse_braid,
    parse_pure_word,
    syllable_decompose,
)
from braid3.conf import get_setting, seed_override
from braid3.enumeration import check_enumeration, enumerate_words
from braid3.exceptions import (
    Braid3Error,
    CertificationError,
    NewtonDivergence,
    NotApplicableError,
    QuadratureFailure,
    UnsupportedCombinationError,
    UsageError,
)
from braid3.invariant_bounds import (
    BoundaryCondition,
    Verdict,
    bounds_mixed,
    bounds_thm1,
    braid_bounds_thm3,
    class_bounds_thm2,
    consistency_check,
)
from braid3.normal_form import DeltaPower, normalize, permutation, theta

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

GLUE_SYLLABLES = 3


class CliCommand(str, enum.Enum):
    PARSE = 'parse'
    NORMALIZE = 'normalize'
    SYLLABLES = 'syllables'
    BOUNDS = 'bounds'
    ENTROPY = 'entropy'
    ENUMERATE = 'enumerate'
    AUDIT = 'audit'
    GLUE = 'glue'


class AuditKind(str, enum.Enum):
    BLOCKS = 'blocks'
    ANCHORS = 'anchors'
    VSL = 'vsl'
    ELLIPTIC = 'elliptic'
    ARITHMETIC = 'arithmetic'
    SLALOM = 'slalom'
    WITNESSES = 'witnesses'
    ALL = 'all'


# --boundary values; a braid word only takes tr
_BOUNDARIES = {
    'tr': BoundaryCondition.TR_TR,
    'pb': BoundaryCondition.PB_PB,
    'tr_pb': BoundaryCondition.TR_PB,
    'pb_tr': BoundaryCondition.PB_TR,
    'conjugacy': BoundaryCondition.CONJUGACY,
}
BOUNDARY_CHOICES = tuple(_BOUNDARIES)


@dataclass
class CliConfig:
    command: CliCommand
    word: str | None = None
    pure_word: str | None = None
    boundary: str = 'tr'
    max_degree: int | None = None
    check: bool = False
    json: bool = False
    seed: int | None = None
    tolerance: float | None = None
    workers: int | None = None
    out: str | None = None
    grid_step: float | None = None
    samples: int | None = None
    audit_kind: AuditKind = AuditKind.ALL
    cyclic: bool = False
    syllables: int = GLUE_SYLLABLES

    def __post_init__(self):
        try:
            self.command = CliCommand(self.command)
            self.audit_kind = AuditKind(self.audit_kind or AuditKind.ALL)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    def validate(self):
        """Enforce the flags each command needs before anything runs."""
        words = [flag for flag, value in (('--word', self.word), ('--pure-word', self.pure_word)) if value is not None]
        if len(words) > 1:
            raise UsageError("give either --word or --pure-word, not both")
        if self.command in (CliCommand.PARSE, CliCommand.BOUNDS, CliCommand.ENTROPY) and not words:
            raise UsageError(f"{self.command.value} needs --word or --pure-word")
        if self.command is CliCommand.NORMALIZE and self.word is None:
            raise UsageError("normalize needs --word")
        if self.command is CliCommand.SYLLABLES and self.pure_word is None:
            raise UsageError("syllables needs --pure-word")
        if self.command is CliCommand.ENUMERATE and (self.max_degree is None or self.max_degree < 1):
            raise UsageError("enumerate needs --max-degree >= 1")
        if self.boundary not in _BOUNDARIES:
            raise UsageError(f"unknown boundary {self.boundary!r}; choose from {', '.join(BOUNDARY_CHOICES)}")
        if self.workers is not None and self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.samples is not None and self.samples < 1:
            raise UsageError("--samples must be at least 1")
        if self.tolerance is not None and not self.tolerance > 0:
            raise UsageError("--tolerance must be positive")
        return self

    @property
    def effective_seed(self) -> int:
        override = seed_override()
        if override is not None:
            return int(override)
        return self.seed if self.seed is not None else get_setting('SEED')


@dataclass
class Outcome:
    payload: dict
    text: str
    ok: bool = True


def _pure_part(b: BraidWord) -> FreeWord:
    """The word in a1, a2 of a pure braid, up to the centre."""
    if permutation(b).array_form != [0, 1, 2]:
        raise NotApplicableError(f"{b} is not a pure braid; entropy bounds take pure braids or --pure-word")
    nf = normalize(b)
    return FreeWord() if isinstance(nf, DeltaPower) else theta(nf)


def _parse(config: CliConfig) -> Outcome:
    source = config.word if config.word is not None else config.pure_word
    word = parse_braid(source) if config.word is not None else parse_pure_word(source)
    payload = reporting.parse_payload(source, word)
    return Outcome(payload, reporting.key_value_table(payload))


def _normalize(config: CliConfig) -> Outcome:
    b = parse_braid(config.word)
    nf = normalize(b)
    image = None if isinstance(nf, DeltaPower) else theta(nf)
    payload = reporting.normalize_payload(b, nf, image)
    return Outcome(payload, reporting.key_value_table(payload))


def _syllables(config: CliConfig) -> Outcome:
    w = parse_pure_word(config.pure_word)
    if config.cyclic:
        cw = cyclic_reduce(w)
        payload = reporting.syllables_payload(cw, cyclic_syllable_decompose(cw))
    else:
        payload = reporting.syllables_payload(w, syllable_decompose(w))
    return Outcome(payload, reporting.syllables_text(payload))


def _bounds(config: CliConfig) -> Outcome:
    bc = _BOUNDARIES[config.boundary]
    if config.word is not None:
        if bc is not BoundaryCondition.TR_TR:
            raise UnsupportedCombinationError("braid words take --boundary tr only")
        rep = braid_bounds_thm3(parse_braid(config.word))
    else:
        w = parse_pure_word(config.pure_word)
        if bc is BoundaryCondition.CONJUGACY:
            rep = class_bounds_thm2(cyclic_reduce(w))
        elif bc.is_mixed:
            rep = bounds_mixed(w, bc)
        else:
            rep = bounds_thm1(w, bc)
    verdict = None
    if config.check and bc is BoundaryCondition.CONJUGACY:
        verdict = consistency_check(rep)
    payload = reporting.bounds_payload(rep, verdict)
    return Outcome(payload, reporting.key_value_table(payload), verdict is not Verdict.FAIL)


def _entropy(config: CliConfig) -> Outcome:
    if config.word is not None:
        w = _pure_part(parse_braid(config.word))
    else:
        w = parse_pure_word(config.pure_word)
    rep = class_bounds_thm2(cyclic_reduce(w))
    verdict = consistency_check(rep)
    payload = reporting.entropy_payload(rep, verdict)
    return Outcome(payload, reporting.key_value_table(payload), verdict is Verdict.PASS)


def _enumerate(config: CliConfig) -> Outcome:
    if config.check:
        workers = config.workers if config.workers is not None else get_setting('WORKERS')
        summary = check_enumeration(config.max_degree, workers)
        payload = reporting.enumeration_payload(summary)
        return Outcome(payload, reporting.enumeration_text(payload), summary.passed)
    words = [str(cw) for cw in enumerate_words(config.max_degree)]
    payload = {'max_degree': config.max_degree, 'count': len(words), 'words': words}
    return Outcome(payload, '\n'.join(words + [f"{len(words)} classes"]))


def _audit_report(kind: AuditKind, config: CliConfig) -> AuditReport:
    if kind is AuditKind.BLOCKS:
        samples = config.samples if config.samples is not None else get_setting('AUDIT_SAMPLES')
        return audit_block_constants(samples=samples, seed=config.effective_seed)
    if kind is AuditKind.ANCHORS:
        return audit_anchor_normalization()
    if kind is AuditKind.VSL:
        return audit_vsl_bounds()
    if kind is AuditKind.ELLIPTIC:
        tolerance = config.tolerance if config.tolerance is not None else get_setting('TOLERANCE')
        return audit_elliptic_sides(quadrature_tol=tolerance)
    if kind is AuditKind.ARITHMETIC:
        return audit_upper_bound_arithmetic()
    if kind is AuditKind.SLALOM:
        return audit_slalom()
    return audit_witnesses()


def _audit(config: CliConfig) -> Outcome:
    if config.audit_kind is AuditKind.ALL:
        kinds = [kind for kind in AuditKind if kind is not AuditKind.ALL]
        report = _audit_report(kinds[0], config)
        for kind in kinds[1:]:
            report = report + _audit_report(kind, config)
    else:
        report = _audit_report(config.audit_kind, config)
    payload = reporting.audit_payload(report)
    return Outcome(payload, reporting.audit_text(payload), report.passed)


def _glue(config: CliConfig) -> Outcome:
    if config.pure_word is not None:
        w = parse_pure_word(config.pure_word)
    else:
        w = random_gluable_word(config.effective_seed, config.syllables)
    grid_step = config.grid_step if config.grid_step is not None else get_setting('GRID_STEP')
    audit = glue_word(w, grid_step)
    payload = reporting.glue_payload(audit)
    return Outcome(payload, reporting.glue_text(payload), audit.passed)


_HANDLERS = {
    CliCommand.PARSE: _parse,
    CliCommand.NORMALIZE: _normalize,
    CliCommand.SYLLABLES: _syllables,
    CliCommand.BOUNDS: _bounds,
    CliCommand.ENTROPY: _entropy,
    CliCommand.ENUMERATE: _enumerate,
    CliCommand.AUDIT: _audit,
    CliCommand.GLUE: _glue,
}


def _diagnostic(err, exc: Exception):
    err.write(f"error: {getattr(exc, 'kind', 'error')}: {exc}\n")


def execute(config: CliConfig) -> Outcome:
    """Validate ``config`` and build the report of its command."""
    config.validate()
    return _HANDLERS[config.command](config)


def run(config: CliConfig, out, err) -> int:
    try:
        outcome = execute(config)
    except (QuadratureFailure, NewtonDivergence, CertificationError) as exc:
        logger.warning("%s aborted: %s", config.command.value, exc)
        _diagnostic(err, exc)
        return EXIT_FAIL
    except (Braid3Error, ValueError) as exc:
        _diagnostic(err, exc)
        return EXIT_USAGE

    rendered = reporting.dumps(outcome.payload) if config.json else outcome.text
    if config.out:
        Path(config.out).write_text(rendered + '\n', encoding='utf-8')
    else:
        out.write(rendered + '\n')
    if not outcome.ok:
        err.write(f"{config.command.value}: check FAILED\n")
        return EXIT_FAIL
    return EXIT_OK
