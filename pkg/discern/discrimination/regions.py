"""
The k = 2 parameter plane.

Sector 1 carries weights (alpha, beta) and sector 2 (1 - alpha, 1 - beta),
with cos^2(theta_1) > cos^2(theta_2). Four divider curves in beta split
the unit square into the regions I to V by how I_1 and I_2 overlap.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from discern.core.constants import (
    CENSUS_PROBE_ALPHA,
    CENSUS_SCAN_POINTS,
    MEASUREMENT_MIXED,
    MEASUREMENT_POVM,
    MEASUREMENT_PROJECTIVE,
    REGIME_INTERIOR,
    REGIONS,
)
from discern.core.exceptions import DegenerateAngles, InvalidParameters

from .optimum import SectorInterval, interval_for, regime_for

logger = logging.getLogger(__name__)

# Subintervals narrower than this are treated as coincident endpoints
PLACEMENT_WIDTH = 1e-12


@dataclass(frozen=True)
class RegionClassification:
    region: str
    dividers: tuple
    intervals: tuple
    intersection: Optional[SectorInterval]


@dataclass(frozen=True)
class CensusCase:
    region: str
    alpha: float
    beta: float
    placement: int
    eta: float
    regimes: tuple
    saturates: bool
    measurement_kind: str


@dataclass(frozen=True)
class CaseCensus:
    cos2_theta1: float
    cos2_theta2: float
    probe_alpha: float
    cases: tuple

    @property
    def counts(self):
        kinds = Counter(case.measurement_kind for case in self.cases)
        return {
            'cases': len(self.cases),
            'saturating': sum(1 for case in self.cases if case.saturates),
            MEASUREMENT_PROJECTIVE: kinds[MEASUREMENT_PROJECTIVE],
            MEASUREMENT_POVM: kinds[MEASUREMENT_POVM],
            MEASUREMENT_MIXED: kinds[MEASUREMENT_MIXED],
        }


def _check_open_unit(name, value):
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise InvalidParameters(f'{name} must be a number, got {value!r}')
    if not (math.isfinite(number) and 0 < number < 1):
        raise InvalidParameters(f'{name} must lie strictly between 0 and 1, got {value!r}')


def _check_angles(cos2_theta1, cos2_theta2):
    _check_open_unit('cos2theta1', cos2_theta1)
    _check_open_unit('cos2theta2', cos2_theta2)
    if cos2_theta2 > cos2_theta1:
        raise InvalidParameters(
            f'Sectors must be ordered with cos2theta1 >= cos2theta2, got {cos2_theta1} and {cos2_theta2}'
        )


def dividers(cos2_theta1, cos2_theta2, alpha):
    _check_angles(cos2_theta1, cos2_theta2)
    _check_open_unit('alpha', alpha)

    c1, c2 = cos2_theta1, cos2_theta2
    return (
        alpha * c1 * c2 / (1 - alpha * (1 - c1 * c2)),
        alpha * c2 / (c1 - alpha * (c1 - c2)),
        alpha * c1 / (c2 + alpha * (c1 - c2)),
        alpha / (c1 * c2 + alpha * (1 - c1 * c2)),
    )


def sector_pair(cos2_theta1, cos2_theta2, alpha, beta):
    return (
        interval_for(alpha, beta, cos2_theta1),
        interval_for(1 - alpha, 1 - beta, cos2_theta2),
    )


def classify(cos2_theta1, cos2_theta2, alpha, beta):
    """Region of (alpha, beta); a point on a divider belongs to the lower region."""
    values = dividers(cos2_theta1, cos2_theta2, alpha)
    _check_open_unit('beta', beta)

    region = REGIONS[-1]
    for name, divider in zip(REGIONS, values):
        if beta <= divider:
            region = name
            break

    first, second = sector_pair(cos2_theta1, cos2_theta2, alpha, beta)
    low, high = max(first.c, second.c), min(first.d, second.d)

    return RegionClassification(
        region=region,
        dividers=values,
        intervals=(first, second),
        intersection=SectorInterval(c=low, d=high) if low <= high else None,
    )


def _region_midpoints(values):
    edges = (0.0,) + tuple(values) + (1.0,)
    return [(edges[i] + edges[i + 1]) / 2 for i in range(len(REGIONS))], \
        min(edges[i + 1] - edges[i] for i in range(len(REGIONS)))


def _probe(cos2_theta1, cos2_theta2):
    candidates = [CENSUS_PROBE_ALPHA] + [j / (CENSUS_SCAN_POINTS + 1) for j in range(1, CENSUS_SCAN_POINTS + 1)]
    for alpha in candidates:
        midpoints, narrowest = _region_midpoints(dividers(cos2_theta1, cos2_theta2, alpha))
        if narrowest > PLACEMENT_WIDTH:
            return alpha, midpoints
        logger.debug(f'Not every region is realized at alpha={alpha}, scanning on')
    raise DegenerateAngles(f'No alpha realizes all five regions for cos2theta = ({cos2_theta1}, {cos2_theta2})')


def _placements(intervals):
    points = sorted({0.0, 1.0} | {x for interval in intervals for x in (interval.c, interval.d)})
    return [
        (low + high) / 2
        for low, high in zip(points, points[1:])
        if high - low > PLACEMENT_WIDTH
    ]


def _kind(regimes):
    interior = sum(1 for regime in regimes if regime == REGIME_INTERIOR)
    if interior == 0:
        return MEASUREMENT_PROJECTIVE
    if interior == len(regimes):
        return MEASUREMENT_POVM
    return MEASUREMENT_MIXED


def census(cos2_theta1, cos2_theta2):
    """
    Every characteristically different (region, prior) case for one angle pair.

    Each region gets a representative beta midway between its dividers at
    the probe alpha. The prior axis is cut at the interval endpoints and
    each piece is represented by its midpoint.
    """
    _check_angles(cos2_theta1, cos2_theta2)
    if abs(cos2_theta1 - cos2_theta2) <= PLACEMENT_WIDTH:
        raise DegenerateAngles(
            f'Equal Jordan angles (cos2theta = {cos2_theta1}) collapse regions II and IV'
        )

    alpha, betas = _probe(cos2_theta1, cos2_theta2)

    cases = []
    for region, beta in zip(REGIONS, betas):
        intervals = sector_pair(cos2_theta1, cos2_theta2, alpha, beta)
        for placement, eta in enumerate(_placements(intervals), start=1):
            regimes = tuple(regime_for(eta, interval) for interval in intervals)
            kind = _kind(regimes)
            cases.append(CensusCase(
                region=region,
                alpha=alpha,
                beta=beta,
                placement=placement,
                eta=eta,
                regimes=regimes,
                saturates=kind == MEASUREMENT_POVM,
                measurement_kind=kind,
            ))

    result = CaseCensus(
        cos2_theta1=cos2_theta1,
        cos2_theta2=cos2_theta2,
        probe_alpha=alpha,
        cases=tuple(cases),
    )
    logger.info(f'Census for cos2theta = ({cos2_theta1}, {cos2_theta2}): {result.counts}')
    return result


def divider_curves(cos2_theta1, cos2_theta2, grid_points):
    """Rows (alpha, beta1, beta2, beta3, beta4) on alpha = j/(N + 1), j = 1..N."""
    if int(grid_points) != grid_points or grid_points < 2:
        raise InvalidParameters(f'Divider curves need at least two grid points, got {grid_points}')
    grid_points = int(grid_points)
    _check_angles(cos2_theta1, cos2_theta2)

    rows = []
    for j in range(1, grid_points + 1):
        alpha = j / (grid_points + 1)
        rows.append((alpha,) + dividers(cos2_theta1, cos2_theta2, alpha))
    return rows
