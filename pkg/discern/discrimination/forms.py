import logging

from django import forms
from django.conf import settings

from discern.core.exceptions import InvalidInput, InvalidProblemFile
from discern.core.jordan import make_subspace
from discern.core.utils import from_pairs

from .problem import DiscriminationProblem

logger = logging.getLogger(__name__)

SUBSPACE_FIELDS = ('ambient_dim', 's1_basis', 's2_basis')


def _real_list(value, name):
    if not isinstance(value, list) or not value:
        raise forms.ValidationError(f'{name} must be a non-empty list of numbers')
    if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value):
        raise forms.ValidationError(f'{name} must be a non-empty list of numbers')
    return [float(x) for x in value]


class ProblemFileForm(forms.Form):
    """
    A problem file is either a subspace pair given by spanning vectors of
    [re, im] pairs, or a list of Jordan cosines. Weights are optional in
    both forms and default to uniform.
    """
    ambient_dim = forms.IntegerField(required=False, min_value=2)
    s1_basis = forms.JSONField(required=False)
    s2_basis = forms.JSONField(required=False)
    cos_angles = forms.JSONField(required=False)
    alpha = forms.JSONField(required=False)
    beta = forms.JSONField(required=False)

    def __init__(self, *args, **kwargs):
        self.tolerance = kwargs.pop('tolerance', None)
        super().__init__(*args, **kwargs)

    def _clean_basis(self, name):
        value = self.cleaned_data[name]
        if value is None:
            return None
        if not isinstance(value, list):
            raise forms.ValidationError('Expected a list of vectors')
        vectors = []
        for vector in value:
            try:
                vectors.append(from_pairs(vector))
            except InvalidInput as error:
                raise forms.ValidationError(str(error))
            if vectors[-1].ndim != 1:
                raise forms.ValidationError('Each vector must be a list of [re, im] pairs')
        return vectors

    def clean_s1_basis(self):
        return self._clean_basis('s1_basis')

    def clean_s2_basis(self):
        return self._clean_basis('s2_basis')

    def clean_cos_angles(self):
        value = self.cleaned_data['cos_angles']
        return None if value is None else _real_list(value, 'cos_angles')

    def clean_alpha(self):
        value = self.cleaned_data['alpha']
        return None if value is None else _real_list(value, 'alpha')

    def clean_beta(self):
        value = self.cleaned_data['beta']
        return None if value is None else _real_list(value, 'beta')

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data

        unknown = sorted(set(self.data) - set(self.fields))
        if unknown:
            raise forms.ValidationError(f'Unknown fields: {", ".join(unknown)}')

        given = [name for name in SUBSPACE_FIELDS if cleaned_data.get(name) is not None]
        has_angles = cleaned_data.get('cos_angles') is not None

        if has_angles and given:
            raise forms.ValidationError('Give either subspaces or cos_angles, not both')
        if not has_angles and not given:
            raise forms.ValidationError('Give either ambient_dim, s1_basis and s2_basis, or cos_angles')
        if given and len(given) != len(SUBSPACE_FIELDS):
            missing = [name for name in SUBSPACE_FIELDS if name not in given]
            raise forms.ValidationError(f'Subspace form is missing: {", ".join(missing)}')

        try:
            cleaned_data['problem'] = self._build(cleaned_data)
        except InvalidInput as error:
            raise forms.ValidationError(f'{type(error).__name__}: {error}')

        return cleaned_data

    def _build(self, data):
        alpha, beta = data.get('alpha'), data.get('beta')
        if data.get('cos_angles') is not None:
            return DiscriminationProblem.from_angles(data['cos_angles'], alpha=alpha, beta=beta)

        s1 = make_subspace(data['ambient_dim'], data['s1_basis'], tol=settings.ORTHONORMALIZE_TOLERANCE)
        s2 = make_subspace(data['ambient_dim'], data['s2_basis'], tol=settings.ORTHONORMALIZE_TOLERANCE)
        tolerance = self.tolerance if self.tolerance is not None else settings.GENERAL_POSITION_TOLERANCE
        return DiscriminationProblem.from_subspaces(s1, s2, alpha=alpha, beta=beta, tolerance=tolerance)


def problem_from_data(data, tolerance=None):
    if not isinstance(data, dict):
        raise InvalidProblemFile({'__all__': ['A problem file must hold a JSON object']})

    form = ProblemFileForm(data=data, tolerance=tolerance)
    if not form.is_valid():
        logger.info(f'Rejected problem file: {form.errors.get_json_data()}')
        raise InvalidProblemFile(form.errors)

    return form.cleaned_data['problem']
