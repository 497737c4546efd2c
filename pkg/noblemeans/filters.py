# -*- coding: utf-8 -*-
"""
noblemeans.filters
------------------

This module converts computed results into the output formats of the
noblemeans command line (CSV rows, JSON documents and small SVG charts) and
filters them back into Python structures.

Every output carries a provenance record (package, version and digest of the
run configuration).
"""

__all__ = [
    'data_format',
    'provenance_comment',
    'to_csv',
    'to_json',
    'filter_csv_rows',
    'svg_stem_chart',
    'svg_line_chart',
    'svg_scatter_chart',
    'svg_histogram',
    'filter_svg_series'
]

from noblemeans.__about__ import __version__
from noblemeans.__about__ import __author__

import csv
import io
import json

import numpy as np

from bs4 import BeautifulSoup

from noblemeans.consts import SERIES_COLORS
from noblemeans.consts import SVG_HEIGHT
from noblemeans.consts import SVG_MARGIN
from noblemeans.consts import SVG_NAMESPACE
from noblemeans.consts import SVG_WIDTH


def data_format(data_only: bool, data_dict: dict) -> dict:
    """Filter the result envelope as requested.

    With ``data_only`` a successful result returns only its data; anything
    else (including flagged results) returns the full envelope.
    """

    if data_only and data_dict['msg'] == 'success':
        return data_dict['data']

    return data_dict


def provenance_comment(provenance: dict) -> str:
    """Render a provenance record as ``key=value`` pairs."""

    return ' '.join(f'{key}={value}' for key, value in provenance.items())


def _jsonable(value):
    if isinstance(value, np.ndarray):
        return value.tolist()

    if isinstance(value, np.generic):
        return value.item()

    if isinstance(value, complex):
        return {'re': value.real, 'im': value.imag}

    raise TypeError(f'Object of type {type(value).__name__} is not JSON serializable.')


def to_csv(rows: list, provenance: dict, columns: list = None) -> str:
    """Write ``rows`` (dicts) as CSV below a ``#`` provenance line.

    Parameters
    ----------
    rows
        The records to write, all with the same keys.

    provenance
        The provenance record of the run.

    columns
        The column order. Defaults to the keys of the first row.
    """

    if columns is None:
        columns = list(rows[0]) if rows else []

    buffer = io.StringIO()
    buffer.write(f'# {provenance_comment(provenance)}\n')

    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)

    return buffer.getvalue()


def to_json(document: dict, provenance: dict) -> str:
    """Serialise ``document`` with a ``provenance`` key in front."""

    return json.dumps({'provenance': provenance, **document}, indent=2, default=_jsonable)


def filter_csv_rows(text: str) -> dict:
    """Filter a CSV output back into its provenance line and rows.

    Values are returned as strings, exactly as written.
    """

    lines = text.splitlines()
    comments = [line[1:].strip() for line in lines if line.startswith('#')]
    body = [line for line in lines if not line.startswith('#')]

    provenance = {}
    for comment in comments:
        for pair in comment.split():
            key, _, value = pair.partition('=')
            provenance[key] = value

    rows = list(csv.DictReader(body))

    return {'provenance': provenance, 'rows': rows}


class _Canvas(object):
    # Maps data coordinates onto the drawable area of an SVG document.

    def __init__(self, title: str, provenance: dict, xs, ys):
        self.soup = BeautifulSoup('', 'html.parser')

        self.svg = self.soup.new_tag(
            'svg',
            attrs={
                'xmlns': SVG_NAMESPACE,
                'width': str(SVG_WIDTH),
                'height': str(SVG_HEIGHT),
                'viewBox': f'0 0 {SVG_WIDTH} {SVG_HEIGHT}',
                'data-provenance': provenance_comment(provenance)
            }
        )
        self.soup.append(self.svg)

        title_tag = self.soup.new_tag('title')
        title_tag.string = title
        self.svg.append(title_tag)

        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)

        self.x_lo, self.x_hi = (float(xs.min()), float(xs.max())) if xs.size else (0.0, 1.0)
        self.y_lo, self.y_hi = (min(0.0, float(ys.min())), float(ys.max())) if ys.size else (0.0, 1.0)

        if self.x_hi == self.x_lo:
            self.x_hi = self.x_lo + 1.0
        if self.y_hi == self.y_lo:
            self.y_hi = self.y_lo + 1.0

        self._axes()

    def px(self, x: float) -> float:
        span = SVG_WIDTH - 2 * SVG_MARGIN

        return round(SVG_MARGIN + (x - self.x_lo) / (self.x_hi - self.x_lo) * span, 3)

    def py(self, y: float) -> float:
        span = SVG_HEIGHT - 2 * SVG_MARGIN

        return round(SVG_HEIGHT - SVG_MARGIN - (y - self.y_lo) / (self.y_hi - self.y_lo) * span, 3)

    def _axes(self) -> None:
        axes = self.soup.new_tag('g', attrs={'class': 'axes', 'stroke': 'black'})

        axes.append(self.soup.new_tag('line', attrs={
            'x1': str(self.px(self.x_lo)), 'y1': str(self.py(self.y_lo)),
            'x2': str(self.px(self.x_hi)), 'y2': str(self.py(self.y_lo))
        }))
        axes.append(self.soup.new_tag('line', attrs={
            'x1': str(self.px(self.x_lo)), 'y1': str(self.py(self.y_lo)),
            'x2': str(self.px(self.x_lo)), 'y2': str(self.py(self.y_hi))
        }))

        for x in (self.x_lo, self.x_hi):
            label = self.soup.new_tag('text', attrs={'x': str(self.px(x)), 'y': str(SVG_HEIGHT - SVG_MARGIN / 3)})
            label.string = f'{x:.4g}'
            axes.append(label)

        for y in (self.y_lo, self.y_hi):
            label = self.soup.new_tag('text', attrs={'x': '2', 'y': str(self.py(y))})
            label.string = f'{y:.4g}'
            axes.append(label)

        self.svg.append(axes)

    def series(self, name: str, color: str):
        group = self.soup.new_tag('g', attrs={'class': 'series', 'data-name': name, 'stroke': color, 'fill': color})
        self.svg.append(group)

        return group

    def mark(self, group, tag: str, x: float, y: float, /, **attrs) -> None:
        attrs.update({'data-x': repr(float(x)), 'data-y': repr(float(y))})
        group.append(self.soup.new_tag(tag, attrs={key.replace('_', '-'): str(value) for key, value in attrs.items()}))

    def render(self) -> str:
        return str(self.soup)


def _color(name: str, position: int) -> str:
    return SERIES_COLORS.get(name, list(SERIES_COLORS.values())[position % len(SERIES_COLORS)])


def svg_stem_chart(xs, ys, title: str, provenance: dict, name: str = 'pp') -> str:
    """A stem chart (vertical line from 0 to y at every x), used for Bragg peaks."""

    canvas = _Canvas(title, provenance, xs, ys)
    group = canvas.series(name, _color(name, 0))

    for x, y in zip(xs, ys):
        canvas.mark(group, 'line', x, y, x1=canvas.px(x), y1=canvas.py(0.0), x2=canvas.px(x), y2=canvas.py(y))

    return canvas.render()


def svg_line_chart(xs, series: dict, title: str, provenance: dict) -> str:
    """A polyline per entry of ``series`` (name -> ys), sharing the abscissa ``xs``."""

    all_ys = np.concatenate([np.asarray(ys, dtype=float) for ys in series.values()]) if series else []
    canvas = _Canvas(title, provenance, xs, all_ys)

    for position, (name, ys) in enumerate(series.items()):
        group = canvas.series(name, _color(name, position))
        points = ' '.join(f'{canvas.px(x)},{canvas.py(y)}' for x, y in zip(xs, ys))
        group.append(canvas.soup.new_tag('polyline', attrs={'points': points, 'fill': 'none'}))

        for x, y in zip(xs, ys):
            canvas.mark(group, 'circle', x, y, cx=canvas.px(x), cy=canvas.py(y), r=0)

    return canvas.render()


def svg_scatter_chart(points: dict, title: str, provenance: dict) -> str:
    """Dots per entry of ``points`` (name -> (xs, ys))."""

    xs = np.concatenate([np.asarray(p[0], dtype=float) for p in points.values()]) if points else []
    ys = np.concatenate([np.asarray(p[1], dtype=float) for p in points.values()]) if points else []
    canvas = _Canvas(title, provenance, xs, ys)

    for position, (name, (series_x, series_y)) in enumerate(points.items()):
        group = canvas.series(name, _color(name, position))

        for x, y in zip(series_x, series_y):
            canvas.mark(group, 'circle', x, y, cx=canvas.px(x), cy=canvas.py(y), r=1.5)

    return canvas.render()


def svg_histogram(edges, counts: dict, title: str, provenance: dict) -> str:
    """A stacked histogram with one series per entry of ``counts`` (name -> counts per bin)."""

    edges = np.asarray(edges, dtype=float)
    stacked = np.zeros(max(edges.size - 1, 0))

    for values in counts.values():
        stacked = stacked + np.asarray(values, dtype=float)

    canvas = _Canvas(title, provenance, edges, stacked)
    base = np.zeros_like(stacked)

    for position, (name, values) in enumerate(counts.items()):
        group = canvas.series(name, _color(name, position))

        for lo, hi, bottom, height in zip(edges[:-1], edges[1:], base, values):
            top = canvas.py(bottom + height)
            canvas.mark(
                group, 'rect', lo, height,
                x=canvas.px(lo), y=top,
                width=round(canvas.px(hi) - canvas.px(lo), 3),
                height=round(canvas.py(bottom) - top, 3)
            )

        base = base + np.asarray(values, dtype=float)

    return canvas.render()


def filter_svg_series(svg: str) -> dict:
    """Filter the data points back out of an SVG chart written by this module.

    Parameters
    ----------
    svg
        The SVG document as text.
    """

    soup = BeautifulSoup(svg, 'html.parser')

    root = soup.find('svg')
    title = soup.find('title')

    # Get every series with the (x, y) data of its marks.
    series = {}
    for group in soup.find_all('g', 'series'):
        series[group.get('data-name')] = [
            (float(mark.get('data-x')), float(mark.get('data-y')))
            for mark in group.find_all(attrs={'data-x': True})
        ]

    return {
        'title': title.text if title else '',
        'provenance': root.get('data-provenance', '') if root else '',
        'series': series
    }
