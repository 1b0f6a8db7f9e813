'''Renders results of the smooth modules as JSON, CSV and aligned markdown.

Exact scalars print as "p/q" (integers as "p"), approx scalars as their shortest round-trip repr.

Classes:

    Renderers
'''

import csv
import io
from fractions import Fraction

import ujson

import weil
from errors import MalformedInputError
from linalg import SmoothComplex
from type_hintings import EigenTable, InternalTruth, GlobalReal
from weil import Jet


EIGENTABLE_COLUMNS = ('label', 'eigenvector', 'energy', 'printed_energy', 's_squared', 's_z')


def format_complex(z: SmoothComplex) -> str:

    re, im = weil.format_jet(z.re), weil.format_jet(z.im)
    if z.im.is_zero():
        return re
    if z.re.is_zero():
        return f'({im})*i'
    return f'{re} + ({im})*i'


def jet_to_json(x: Jet) -> dict:
    '''{"std": "...", "nil": {"monomial": "..."}}'''

    nilpotent = x.nilpotent_part
    return {'std': weil.format_scalar(x.standard_part),
            'nil': {x.algebra.monomial_name(monomial): weil.format_scalar(value)
                    for monomial, value in sorted(nilpotent.coefficients.items())}}


def complex_to_json(z: SmoothComplex) -> list:
    return [weil.format_scalar(z.re.standard_part), weil.format_scalar(z.im.standard_part)]


def parse_scalar(text: str) -> GlobalReal:
    '''Inverse of `weil.format_scalar`.'''

    try:
        return float(text) if any(mark in text for mark in '.eE') or text in ('nan', 'inf', '-inf') else Fraction(text)
    except ValueError as exc:
        raise MalformedInputError(f'{text!r} is neither "p/q" nor a float') from exc


class Renderers:
    '''Builds payloads for stdout; every renderer is deterministic.'''

    def eigentable_to_json(self, table: EigenTable) -> str:
        '''Takes EigenTable, returns a JSON list of rows.'''

        rows = [{'label': row.label,
                 'eigenvector': [complex_to_json(entry) for entry in row.eigenvector.vector],
                 'energy': weil.format_scalar(row.energy),
                 'printed_energy': row.printed_energy,
                 's_squared': weil.format_scalar(row.s_squared),
                 's_z': weil.format_scalar(row.s_z)} for row in table.rows]
        return ujson.dumps(rows, ensure_ascii = False)


    def eigentable_to_csv(self, table: EigenTable) -> str:
        '''Takes EigenTable, returns CSV with a header line.'''

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator = '\n')
        writer.writerow(EIGENTABLE_COLUMNS)
        for row in table.rows:
            writer.writerow(self._eigentable_cells(row))
        return buffer.getvalue()


    def eigentable_to_markdown(self, table: EigenTable) -> str:
        '''Takes EigenTable, returns an aligned markdown table followed by its note.'''

        cells = [list(EIGENTABLE_COLUMNS)] + [self._eigentable_cells(row) for row in table.rows]
        widths = [max(len(line[column]) for line in cells) for column in range(len(EIGENTABLE_COLUMNS))]

        def render(line):
            return '| ' + ' | '.join(cell.ljust(width) for cell, width in zip(line, widths)) + ' |'

        lines = [render(cells[0]), '|' + '|'.join('-' * (width + 2) for width in widths) + '|']
        lines += [render(line) for line in cells[1:]]
        return '\n'.join(lines) + f'\n\n{table.note}\n'


    def _eigentable_cells(self, row) -> list[str]:

        vector = '(' + ', '.join(format_complex(entry) for entry in row.eigenvector.vector) + ')'
        return [row.label, vector, weil.format_scalar(row.energy), row.printed_energy,
                weil.format_scalar(row.s_squared), weil.format_scalar(row.s_z)]

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

    def trajectory_to_json(self, samples: list, labels: list[str]) -> str:
        '''Takes (t, probabilities) samples, returns a JSON list of {"t", "probabilities"} objects.'''

        payload = [{'t': weil.format_scalar(t),
                    'probabilities': {label: weil.format_scalar(p) for label, p in zip(labels, probabilities)}}
                   for t, probabilities in samples]
        return ujson.dumps(payload, ensure_ascii = False)


    def verdicts_to_text(self, verdicts: list[tuple[str, InternalTruth]]) -> str:

        width = max(len(name) for name, _ in verdicts)
        return '\n'.join(f'{name.ljust(width)}  {verdict.value}' for name, verdict in verdicts)


def load_eigentable_rows(text: str) -> list[dict]:
    '''Reads JSON produced by `Renderers.eigentable_to_json` back into rows with numeric scalars.'''

    try:
        rows = ujson.loads(text)
    except ValueError as exc:
        raise MalformedInputError(f'Eigen-table payload is not JSON: {exc}') from exc

    return [{**row,
             'eigenvector': [tuple(parse_scalar(part) for part in entry) for entry in row['eigenvector']],
             'energy': parse_scalar(row['energy']),
             's_squared': parse_scalar(row['s_squared']),
             's_z': parse_scalar(row['s_z'])} for row in rows]
