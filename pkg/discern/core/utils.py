import csv
import json
import logging

import numpy as np

from django.core.serializers.json import DjangoJSONEncoder

from .exceptions import InvalidParameters

logger = logging.getLogger(__name__)


class DiscernJSONEncoder(DjangoJSONEncoder):
    """Complex numbers become [re, im] pairs, numpy values become plain Python values."""

    def default(self, o):
        if isinstance(o, complex):
            return [o.real, o.imag]
        if isinstance(o, np.complexfloating):
            return [float(o.real), float(o.imag)]
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        return super().default(o)


def dump_json(data):
    return json.dumps(data, cls=DiscernJSONEncoder, sort_keys=True, indent=2)


def load_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as error:
        raise InvalidParameters(f'Cannot read {path}: {error.strerror}')
    except json.JSONDecodeError as error:
        raise InvalidParameters(f'{path} is not valid JSON: {error}')


def write_output(text, path=None, stream=None):
    """Write text to path when given, otherwise to stream."""
    if path:
        with open(path, 'w') as f:
            f.write(text)
            f.write('\n')
        logger.info(f'Wrote {path}')
    else:
        stream.write(text)


def write_csv(header, rows, path=None, stream=None):
    def _write(f):
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(value)) for value in row])

    if path:
        with open(path, 'w', newline='') as f:
            _write(f)
        logger.info(f'Wrote {len(rows)} rows to {path}')
    else:
        _write(stream)


def to_pairs(values):
    """Complex array as nested lists of [re, im]."""
    values = np.asarray(values, dtype=complex)
    return np.stack([values.real, values.imag], axis=-1).tolist()


def from_pairs(pairs):
    """Inverse of to_pairs."""
    try:
        array = np.asarray(pairs, dtype=float)
    except (TypeError, ValueError):
        raise InvalidParameters('Complex values must be given as [re, im] pairs of numbers')
    if array.ndim and array.shape[-1] == 2 and np.all(np.isfinite(array)):
        return array[..., 0] + 1j * array[..., 1]
    raise InvalidParameters('Complex values must be given as [re, im] pairs')
