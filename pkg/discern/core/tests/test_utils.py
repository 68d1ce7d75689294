import json
import os
import tempfile
from io import StringIO

import numpy as np
from django.test import SimpleTestCase

from ..exceptions import InvalidParameters
from ..utils import (
    dump_json,
    from_pairs,
    load_json,
    to_pairs,
    write_csv,
    write_output,
)


class DiscernJSONEncoderTestCase(SimpleTestCase):

    def test_complex_and_numpy_values(self):
        data = {
            'z': 1 + 2j,
            'n': np.int64(3),
            'x': np.float64(0.25),
            'flag': np.bool_(True),
            'array': np.array([1.5, 2.5]),
            'w': np.complex128(-1j),
        }
        self.assertEqual(json.loads(dump_json(data)), {
            'z': [1.0, 2.0],
            'n': 3,
            'x': 0.25,
            'flag': True,
            'array': [1.5, 2.5],
            'w': [-0.0, -1.0],
        })

    def test_keys_are_sorted(self):
        self.assertLess(dump_json({'b': 1, 'a': 2}).index('"a"'), dump_json({'b': 1, 'a': 2}).index('"b"'))

    def test_floats_round_trip_exactly(self):
        value = 0.7071067811865476
        self.assertEqual(json.loads(dump_json({'v': value}))['v'], value)


class PairsTestCase(SimpleTestCase):

    def test_to_pairs(self):
        self.assertEqual(to_pairs([1, 1j]), [[1.0, 0.0], [0.0, 1.0]])

    def test_from_pairs(self):
        np.testing.assert_array_equal(from_pairs([[1, 0], [0, -1]]), np.array([1, -1j]))

    def test_from_pairs_nested(self):
        values = from_pairs([[[1, 0], [0, 1]], [[0, 0], [2, 0]]])
        self.assertEqual(values.shape, (2, 2))
        self.assertEqual(values[0, 1], 1j)

    def test_from_pairs_rejects_bad_input(self):
        for bad in ([1, 2, 3], [[1, 2, 3]], [['a', 'b']], [[1, 0], [1]], [[float('nan'), 0]], 5):
            with self.assertRaises(InvalidParameters):
                from_pairs(bad)


class OutputTestCase(SimpleTestCase):

    def test_write_output_to_stream(self):
        stream = StringIO()
        write_output('{}', stream=stream)
        self.assertEqual(stream.getvalue(), '{}')

    def test_write_output_to_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'out.json')
            write_output('{"a": 1}', path=path)
            self.assertEqual(load_json(path), {'a': 1})

    def test_write_csv(self):
        stream = StringIO()
        write_csv(('eta', 'q'), [(0, 0.1), (1, np.float64(1 / 3))], stream=stream)
        self.assertEqual(stream.getvalue(), 'eta,q\n0.0,0.1\n1.0,0.3333333333333333\n')

    def test_load_json_missing_file(self):
        with self.assertRaises(InvalidParameters):
            load_json('/nonexistent/problem.json')

    def test_load_json_malformed(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'bad.json')
            with open(path, 'w') as f:
                f.write('{not json')
            with self.assertRaises(InvalidParameters):
                load_json(path)
