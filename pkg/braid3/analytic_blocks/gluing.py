"""
Glue building blocks along the vertical strip -1/18 <= Re xi <= 0.

Blocks are stacked bottom to top: block j is translated so that its anchors
sit at P_j- and P_j+ = P_{j+1}- on the imaginary axis, then multiplied by
a sign and lifted along the imaginary axis so that values and derivatives
agree at each junction. Around a junction the two neighbours are blended with
the smoothstep chi, and only there can the Beltrami coefficient be nonzero.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from braid3.braid_words import FreeWord, Generator, Term, free_reduce, render_syllable, syllable_decompose
from braid3.exceptions import BlockUnavailable, CertificationError, GridDegenerate
from braid3.analytic_blocks.blocks import BlockGeometry, evaluate_block, geometry_for_syllable

logger = logging.getLogger(__name__)

STRIP_WIDTH = 1 / 18
MU_BOUND = 0.1712
DILATATION_BOUND = 1.414
MAX_GRID_STEP = 1 / 36
# long blocks are inverted by Newton iteration
JUNCTION_TOL = 1e-8


def chi0(t):
    t = np.clip(t, 0.0, 1.0)
    return 3 * t ** 2 - 2 * t ** 3


def chi(t):
    return chi0(9 * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class PlacedBlock:
    geometry: BlockGeometry
    # global xi = local xi + shift
    shift: complex
    # g = orientation * block + i * lift
    orientation: int
    lift: float

    def __call__(self, xi: complex) -> complex:
        value, _ = evaluate_block(self.geometry, xi - self.shift)
        return self.orientation * value + 1j * self.lift

    def derivative(self, xi: complex) -> complex:
        _, derivative = evaluate_block(self.geometry, xi - self.shift)
        return self.orientation * derivative

    @property
    def bottom(self) -> complex:
        return self.geometry.p_minus + self.shift

    @property
    def top(self) -> complex:
        return self.geometry.p_plus + self.shift


@dataclass(frozen=True)
class JunctionAudit:
    index: int
    # Im xi range of the blend window
    window: tuple[float, float]
    max_mu: float
    # orientation and imaginary lift of the upper block
    orientation: int
    lift: float
    syllables: tuple[str, str] = ('', '')


@dataclass(frozen=True)
class GluingAudit:
    word: FreeWord
    grid_step: float
    sup_mu: float
    qc_dilatation: float
    margin: float
    junctions: tuple[JunctionAudit, ...] = ()

    def __post_init__(self):
        if self.sup_mu < 0:
            raise ValueError("sup_mu must be nonnegative")

    @property
    def passed(self) -> bool:
        return self.sup_mu < MU_BOUND and self.qc_dilatation <= DILATATION_BOUND


def place_blocks(geometries: list[BlockGeometry]) -> list[PlacedBlock]:
    """Stack the blocks along the imaginary axis.

    Anchor derivatives are +-i and anchor values are imaginary, so each block
    only needs a sign and a shift along iR to continue its lower neighbour to
    first order. Anything else raises ``CertificationError``.
    """
    placed: list[PlacedBlock] = []
    junction = 0j
    for geometry in geometries:
        # anchors of a block share their real part
        shift = junction - geometry.p_minus
        if not placed:
            orientation, lift = 1, 0.0
        else:
            previous = placed[-1]
            start_value, start_derivative = evaluate_block(geometry, geometry.p_minus)
            ratio = previous.derivative(junction) / start_derivative
            orientation = 1 if ratio.real > 0 else -1
            if abs(ratio - orientation) > JUNCTION_TOL:
                raise CertificationError(f"derivatives at junction {junction} differ by the factor {ratio}")
            offset = previous(junction) - orientation * start_value
            if abs(offset.real) > JUNCTION_TOL * (1 + abs(offset)):
                raise CertificationError(f"values at junction {junction} differ off the imaginary axis: {offset}")
            lift = offset.imag
        block = PlacedBlock(geometry, shift, orientation, lift)
        placed.append(block)
        junction = block.top
    return placed


def _glued(blocks: list[PlacedBlock], j: int, xi: complex) -> complex:
    """The map on the window around the junction between blocks j and j+1."""
    weight = float(chi(xi.imag - blocks[j].top.imag + STRIP_WIDTH))
    if weight == 1:
        return blocks[j + 1](xi)
    lower = blocks[j](xi)
    if weight == 0:
        return lower
    return (1 - weight) * lower + weight * blocks[j + 1](xi)


def _wirtinger(blocks, j, xi, h):
    east, west = _glued(blocks, j, xi + h), _glued(blocks, j, xi - h)
    north, south = _glued(blocks, j, xi + 1j * h), _glued(blocks, j, xi - 1j * h)
    g_u = (east - west) / (2 * h)
    g_v = (north - south) / (2 * h)
    return 0.5 * (g_u - 1j * g_v), 0.5 * (g_u + 1j * g_v)


def beltrami_coefficient(blocks: list[PlacedBlock], j: int, xi: complex, h: float) -> complex:
    """mu = dbar g / d g from central differences, Richardson-extrapolated over h and h/2."""
    d_h, dbar_h = _wirtinger(blocks, j, xi, h)
    d_half, dbar_half = _wirtinger(blocks, j, xi, h / 2)
    d = (4 * d_half - d_h) / 3
    dbar = (4 * dbar_half - dbar_h) / 3
    return dbar / d


def _window_grid(center: float, h: float) -> np.ndarray:
    xs = np.linspace(-STRIP_WIDTH, 0.0, int(round(STRIP_WIDTH / h)) + 1)
    ys = center + np.linspace(-STRIP_WIDTH, STRIP_WIDTH, int(round(2 * STRIP_WIDTH / h)) + 1)
    return (xs[None, :] + 1j * ys[:, None]).ravel()


def glue_word(w: FreeWord, grid_step: float) -> GluingAudit:
    if not 0 < grid_step <= MAX_GRID_STEP:
        raise GridDegenerate(f"grid step {grid_step} must lie in (0, 1/36]")
    if w.is_empty:
        raise BlockUnavailable("the empty word has no building blocks")
    decomposition = syllable_decompose(w)
    geometries = [geometry_for_syllable(s) for s in decomposition]
    blocks = place_blocks(geometries)

    junctions = []
    for j, block in enumerate(blocks[:-1]):
        center = block.top.imag
        mus = [abs(beltrami_coefficient(blocks, j, xi, grid_step)) for xi in _window_grid(center, grid_step)]
        worst = max(mus)
        upper = blocks[j + 1]
        junctions.append(
            JunctionAudit(
                j,
                (center - STRIP_WIDTH, center + STRIP_WIDTH),
                worst,
                upper.orientation,
                upper.lift,
                (render_syllable(decomposition.syllables[j]), render_syllable(decomposition.syllables[j + 1])),
            )
        )
        logger.debug("junction %d of %s: max |mu| = %.6g", j, w, worst)

    sup_mu = max((junction.max_mu for junction in junctions), default=0.0)
    audit = GluingAudit(
        word=w,
        grid_step=grid_step,
        sup_mu=sup_mu,
        qc_dilatation=(1 + sup_mu) / (1 - sup_mu),
        margin=MU_BOUND - sup_mu,
        junctions=tuple(junctions),
    )
    if not audit.passed:
        logger.warning("gluing %s: sup |mu| = %.6g exceeds %s", w, sup_mu, MU_BOUND)
    else:
        logger.info("gluing %s: sup |mu| = %.6g over %d junctions", w, sup_mu, len(junctions))
    return audit


def random_gluable_word(seed: int, syllables: int) -> FreeWord:
    """A word of ``syllables`` Form1/Form2 syllables, all of degree 2 to 4.

    A Form2 run is never followed by another Form2 run, so each run stays maximal.
    """
    if syllables < 1:
        raise ValueError("need at least one syllable")
    rng = np.random.default_rng(seed)
    terms: list[Term] = []
    generator = Generator(int(rng.integers(1, 3)))
    previous_form2 = False
    for _ in range(syllables):
        if not previous_form2 and rng.random() < 0.5:
            sign = 1 if rng.random() < 0.5 else -1
            for _ in range(int(rng.integers(2, 5))):
                terms.append(Term(generator, sign))
                generator = generator.other
            previous_form2 = True
        else:
            sign = 1 if rng.random() < 0.5 else -1
            terms.append(Term(generator, sign * int(rng.integers(2, 5))))
            generator = generator.other
            previous_form2 = False
    return free_reduce(terms)
