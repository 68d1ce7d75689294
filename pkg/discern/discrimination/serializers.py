"""Plain-data forms of problems and solutions, ready for DiscernJSONEncoder."""
import numpy as np

from discern.core.exceptions import InvalidParameters
from discern.core.utils import from_pairs, to_pairs

from .optimum import SectorInterval, SectorSolution
from .povm import PovmSolution

MATRIX_NAMES = ('Pi0', 'Pi1', 'Pi2')


def problem_to_dict(problem, s1=None, s2=None):
    """
    Subspace form when spanning vectors or Jordan frames are available,
    angle form otherwise.
    """
    data = {
        'alpha': problem.alpha.tolist(),
        'beta': problem.beta.tolist(),
    }
    if s1 is not None and s2 is not None:
        data.update(
            ambient_dim=s1.ambient_dim,
            s1_basis=[to_pairs(v) for v in s1.spanning_vectors],
            s2_basis=[to_pairs(v) for v in s2.spanning_vectors],
        )
    elif problem.has_frames:
        data.update(
            ambient_dim=problem.jordan.ambient_dim,
            s1_basis=[to_pairs(v) for v in problem.jordan.basis1],
            s2_basis=[to_pairs(v) for v in problem.jordan.basis2],
        )
    else:
        data['cos_angles'] = problem.cos_angles.tolist()
    return data


def sector_to_dict(sector):
    return {
        'index': sector.index,
        'regime': sector.regime,
        'q1_bar': sector.q1_bar,
        'q2_bar': sector.q2_bar,
        'lambda': sector.lam,
        'zeta': to_pairs(sector.zeta),
        'interval': sector.interval.as_list(),
        'sector_prior': sector.sector_prior,
        'cond_prob1': sector.cond_prob1,
        'cond_prob2': sector.cond_prob2,
        'contribution': sector.contribution,
        'failure': sector.failure,
    }


def solution_to_dict(sol):
    data = {
        'eta': sol.eta,
        'sectors': [sector_to_dict(s) for s in sol.sectors],
        'Q_total': sol.Q_total,
        'fidelity': sol.fidelity,
        'fidelity_bound': sol.fidelity_bound,
        'saturates': sol.saturates_bound,
        'failure1': sol.failure1,
        'failure2': sol.failure2,
        'success_probability': sol.success_probability,
    }
    if sol.has_matrices:
        data['matrices'] = {name: to_pairs(sol.operators[name]) for name in MATRIX_NAMES}
    return data


def sector_from_dict(data):
    c, d = data['interval']
    return SectorSolution(
        index=data['index'],
        regime=data['regime'],
        q1_bar=data['q1_bar'],
        q2_bar=data['q2_bar'],
        lam=data['lambda'],
        zeta=np.asarray(from_pairs(data['zeta']), dtype=complex),
        sector_prior=data['sector_prior'],
        cond_prob1=data['cond_prob1'],
        cond_prob2=data['cond_prob2'],
        interval=SectorInterval(c=c, d=d),
        contribution=data['contribution'],
    )


def solution_from_dict(data):
    try:
        matrices = data.get('matrices') or {}
        return PovmSolution(
            eta=data['eta'],
            sectors=[sector_from_dict(s) for s in data['sectors']],
            Q_total=data['Q_total'],
            fidelity=data['fidelity'],
            fidelity_bound=data['fidelity_bound'],
            saturates_bound=data['saturates'],
            failure1=data['failure1'],
            failure2=data['failure2'],
            **{name: from_pairs(matrices[name]) if name in matrices else None for name in MATRIX_NAMES},
        )
    except (KeyError, TypeError, ValueError) as error:
        raise InvalidParameters(f'Malformed solution file: {error!r}')
