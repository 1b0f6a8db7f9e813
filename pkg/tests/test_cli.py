import csv
import io

import pytest
import ujson

import cli
from cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_demo_eigen_json(capsys):
    code, out, _ = invoke(capsys, '--backend', 'exact', 'demo', 'eigen')
    rows = ujson.loads(out)
    assert code == 0
    assert len(rows) == 4
    assert [row['s_z'] for row in rows] == ['1', '0', '-1', '0']
    assert [row['s_squared'] for row in rows] == ['2', '2', '2', '0']
    assert [row['energy'] for row in rows] == ['-1/4', '-1/4', '-1/4', '3/4']
    assert rows[3]['label'] == '|↑⟩|↓⟩ - |↓⟩|↑⟩'


def test_demo_eigen_csv(capsys):
    code, out, _ = invoke(capsys, '--backend', 'exact', 'demo', 'eigen', '--hbar', '2', '--format', 'csv')
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ['label', 'eigenvector', 'energy', 'printed_energy', 's_squared', 's_z']
    assert [row[2] for row in rows[1:5]] == ['-1', '-1', '-1', '3']
    assert rows[4][1] == '(0, 1, -1, 0)'


def test_demo_eigen_markdown(capsys):
    code, out, _ = invoke(capsys, '--backend', 'exact', 'demo', 'eigen', '--format', 'md')
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith('| label')
    assert set(lines[1]) <= {'|', '-'}
    assert len({len(line) for line in lines[:6]}) == 1
    assert 'hbar^2' in out


def test_demo_output_is_deterministic(capsys):
    first = invoke(capsys, '--backend', 'exact', 'demo', 'eigen', '--format', 'md')
    second = invoke(capsys, '--backend', 'exact', 'demo', 'eigen', '--format', 'md')
    assert first == second


def test_demo_evolve(capsys):
    code, out, _ = invoke(capsys, 'demo', 'evolve', '--state', 'ud', '--steps', '4')
    samples = ujson.loads(out)
    assert code == 0
    assert len(samples) == 5
    assert float(samples[0]['probabilities']['ud']) == pytest.approx(1)
    assert float(samples[-1]['probabilities']['du']) == pytest.approx(1, abs = 1e-9)


def test_demo_infinitesimal(capsys):
    code, out, _ = invoke(capsys, '--backend', 'exact', 'demo', 'infinitesimal')
    verdicts = dict(line.rsplit(None, 1) for line in out.splitlines())
    assert code == 0
    assert verdicts['eq(e, 0)'] == 'undecided'
    assert verdicts['apart(e, 0)'] == 'fails'
    assert verdicts['less_than(e, 1/10)'] == 'holds'
    assert verdicts['eq(e*e, 0)'] == 'holds'
    assert verdicts['eq(d*d, 0)'] == 'undecided'
    assert verdicts['is_physical(e|up>)'] == 'fails'

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_diff(capsys):
    assert invoke(capsys, '--backend', 'exact', 'diff', '--expr', 'x^3', '--at', '2') == (0, '12\n', '')
    assert invoke(capsys, '--backend', 'exact', 'diff', '--expr', 'x^3', '--at', '2', '--order', '3') == (0, '6\n', '')


def test_integrate(capsys):
    assert invoke(capsys, '--backend', 'exact', 'integrate', '--expr', 'x^2', '--to', '1') == (0, '1/3\n', '')


def test_kl(capsys):
    assert invoke(capsys, '--backend', 'exact', 'kl', '--expr', 'x^2 + 3*x') == (0, '(0, 3)\n', '')
    code, out, _ = invoke(capsys, '--backend', 'exact', 'kl', '--expr', '(1 + x)^3', '--format', 'json')
    assert code == 0
    assert ujson.loads(out) == {'f0': {'std': '1', 'nil': {}}, 'b': {'std': '3', 'nil': {}}}


def test_decimal(capsys):
    assert invoke(capsys, '--backend', 'exact', 'decimal', '--expr', '1/3', '--places', '4') == (0, '0.3333\n', '')
    code, out, _ = invoke(capsys, '--backend', 'exact', 'decimal', '--expr', '1/3', '--places', '1', '--overlap', '10')
    assert code == 0
    assert out.splitlines() == ['0.3', 'cover indices: 3, 4']


def test_logic(capsys):
    code, out, _ = invoke(capsys, 'logic', 'check', '--algebra', 'chain(3)', '--formula', 'p | ~p')
    assert (code, out) == (0, 'not valid; counterexample p=m\n')
    code, out, _ = invoke(capsys, 'logic', 'check', '--algebra', 'chain(3)', '--formula', 'p -> ~~p')
    assert (code, out) == (0, 'valid\n')
    code, out, _ = invoke(capsys, 'logic', 'axioms', '--algebra', 'boolean(2)')
    assert code == 0
    assert all(line.endswith(': valid') for line in out.splitlines())

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_domain_errors_exit_with_one(capsys):
    code, out, err = invoke(capsys, '--backend', 'exact', 'decimal', '--expr', 'x', '--places', '2')
    assert (code, out) == (1, '')
    assert err.startswith('NotGlobalError:')

    code, _, err = invoke(capsys, 'logic', 'check', '--algebra', 'lattice', '--formula', 'p')
    assert code == 1
    assert err.startswith('MalformedInputError:')

    code, _, err = invoke(capsys, 'demo', 'eigen', '--alpha', '0')
    assert code == 1


def test_usage_errors_exit_with_two(capsys):
    assert invoke(capsys, 'transmogrify')[0] == 2
    assert invoke(capsys, 'diff', '--expr', 'x', '--at', 'abc')[0] == 2
    assert invoke(capsys, '--backend', 'quantum', 'diff', '--expr', 'x', '--at', '1')[0] == 2
    assert invoke(capsys, 'demo', 'eigen', '--format', 'xml')[0] == 2
    assert invoke(capsys, '--backend', 'exact', 'decimal', '--expr', '1/3', '--places', '-1')[0] == 2
    assert invoke(capsys, '--backend', 'exact', 'decimal', '--expr', '1/3', '--places', '1', '--overlap', '0')[0] == 2
    assert invoke(capsys, '--backend', 'exact', 'diff', '--expr', 'x^3', '--at', '2', '--order', '0')[0] == 2
    assert invoke(capsys, 'demo', 'evolve', '--steps', '0')[0] == 2
    assert invoke(capsys, 'demo', 'evolve', '--steps', 'many')[0] == 2


def test_unknown_environment_backend_is_a_domain_error(capsys, monkeypatch):
    monkeypatch.setattr(cli, 'DefaultBackend', 'quantum')
    code, out, err = invoke(capsys, 'diff', '--expr', 'x^3', '--at', '2')
    assert (code, out) == (1, '')
    assert err.startswith('MalformedInputError:')
    assert invoke(capsys, '--backend', 'exact', 'diff', '--expr', 'x^3', '--at', '2')[0] == 0


def test_pi_under_the_exact_backend(capsys):
    code, _, err = invoke(capsys, '--backend', 'exact', 'decimal', '--expr', 'pi', '--places', '3')
    assert code == 1
    assert err.startswith('UnsupportedExactError:')
    assert invoke(capsys, '--backend', 'approx', 'decimal', '--expr', 'pi', '--places', '3') == (0, '3.142\n', '')
