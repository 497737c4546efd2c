# -*- coding: utf-8 -*-
"""Tests of noblemeans.filters module."""

import json
import unittest

import numpy as np

from noblemeans.filters import data_format
from noblemeans.filters import provenance_comment
from noblemeans.filters import to_csv
from noblemeans.filters import to_json
from noblemeans.filters import filter_csv_rows
from noblemeans.filters import svg_stem_chart
from noblemeans.filters import svg_line_chart
from noblemeans.filters import svg_scatter_chart
from noblemeans.filters import svg_histogram
from noblemeans.filters import filter_svg_series


class TestFilters(unittest.TestCase):
    """Test Class of noblemeans.filters module."""

    def setUp(self):
        self.data_success_case = {'msg': 'success', 'data': 0.618}
        self.data_illegal_case = {'msg': 'illegal', 'data': 0.0}
        self.provenance = {'package': 'noblemeans', 'version': '0.1.0', 'config': 'abc123def456'}

    def test_data_format_with_data_only_argument_as_true(self):
        success_case = data_format(data_only=True, data_dict=self.data_success_case)
        illegal_case = data_format(data_only=True, data_dict=self.data_illegal_case)

        self.assertEqual(success_case, 0.618)
        self.assertDictEqual(illegal_case, self.data_illegal_case)

    def test_data_format_with_data_only_argument_as_false(self):
        success_case = data_format(data_only=False, data_dict=self.data_success_case)
        illegal_case = data_format(data_only=False, data_dict=self.data_illegal_case)

        self.assertDictEqual(success_case, self.data_success_case)
        self.assertDictEqual(illegal_case, self.data_illegal_case)

    def test_if_provenance_comment_is_key_value_pairs(self):
        self.assertEqual(
            provenance_comment(self.provenance),
            'package=noblemeans version=0.1.0 config=abc123def456'
        )

    def test_if_csv_starts_with_the_provenance_line(self):
        rows = [{'m': 1, 'value': 0.44439}, {'m': 2, 'value': 0.40855}]
        text = to_csv(rows, self.provenance)
        lines = text.splitlines()

        self.assertEqual(lines[0], '# package=noblemeans version=0.1.0 config=abc123def456')
        self.assertEqual(lines[1], 'm,value')
        self.assertEqual(lines[2], '1,0.44439')

    def test_if_csv_filters_back_into_rows(self):
        rows = [{'word': 'aa', 'measure': 0.25}, {'word': 'ab', 'measure': 0.75}]
        result = filter_csv_rows(to_csv(rows, self.provenance, columns=['word', 'measure']))

        self.assertDictEqual(result['provenance'], self.provenance)
        self.assertListEqual(result['rows'], [{'word': 'aa', 'measure': '0.25'}, {'word': 'ab', 'measure': '0.75'}])

    def test_if_empty_csv_keeps_the_header(self):
        text = to_csv([], self.provenance, columns=['k', 'phi'])

        self.assertListEqual(text.splitlines()[1:], ['k,phi'])

    def test_if_json_serialises_numpy_and_complex_values(self):
        document = {'matrix': np.eye(2), 'value': np.float64(1.5), 'flag': np.bool_(True), 'mean': 1 + 2j}
        data = json.loads(to_json(document, self.provenance))

        self.assertDictEqual(data['provenance'], self.provenance)
        self.assertListEqual(data['matrix'], [[1.0, 0.0], [0.0, 1.0]])
        self.assertEqual(data['value'], 1.5)
        self.assertIs(data['flag'], True)
        self.assertDictEqual(data['mean'], {'re': 1.0, 'im': 2.0})

        with self.assertRaises(TypeError):
            to_json({'bad': object()}, self.provenance)

    def test_if_stem_chart_filters_back_into_its_data(self):
        svg = svg_stem_chart([0.0, 0.5, 1.0], [0.52, 0.1, 0.3], 'Bragg peaks', self.provenance)
        result = filter_svg_series(svg)

        self.assertEqual(result['title'], 'Bragg peaks')
        self.assertEqual(result['provenance'], provenance_comment(self.provenance))
        self.assertListEqual(result['series']['pp'], [(0.0, 0.52), (0.5, 0.1), (1.0, 0.3)])

    def test_if_line_chart_keeps_every_series(self):
        svg = svg_line_chart([1, 2, 3], {'a': [0.1, 0.2, 0.3], 'b': [1.0, 0.5, 0.0]}, 'Lines', self.provenance)
        series = filter_svg_series(svg)['series']

        self.assertCountEqual(['a', 'b'], series.keys())
        self.assertListEqual(series['b'], [(1.0, 1.0), (2.0, 0.5), (3.0, 0.0)])
        self.assertIn('<polyline', svg)

    def test_if_scatter_chart_keeps_every_point(self):
        points = {'a': (np.array([0.0, 1.0]), np.array([0.5, -0.5])), 'b': ([2.0], [0.0])}
        series = filter_svg_series(svg_scatter_chart(points, 'Lift', self.provenance))['series']

        self.assertListEqual(series['a'], [(0.0, 0.5), (1.0, -0.5)])
        self.assertListEqual(series['b'], [(2.0, 0.0)])

    def test_if_histogram_has_one_bar_per_bin_and_series(self):
        svg = svg_histogram([0.0, 1.0, 2.0], {'a': [3, 1], 'b': [0, 2]}, 'Histogram', self.provenance)
        series = filter_svg_series(svg)['series']

        self.assertListEqual(series['a'], [(0.0, 3.0), (1.0, 1.0)])
        self.assertListEqual(series['b'], [(0.0, 0.0), (1.0, 2.0)])
        self.assertEqual(svg.count('<rect'), 4)

    def test_if_empty_chart_is_still_a_valid_document(self):
        result = filter_svg_series(svg_stem_chart([], [], 'Empty', self.provenance))

        self.assertEqual(result['title'], 'Empty')
        self.assertListEqual(result['series']['pp'], [])


if __name__ == '__main__':
    unittest.main()
