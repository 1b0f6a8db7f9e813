'''Command-line surface of the smooth toolkit.

    demo eigen        two-spin eigen-table (json, csv or md)
    demo evolve       Born probabilities along a Schrodinger trajectory
    demo infinitesimal  internal-truth verdicts for a square-zero e
    diff, integrate, kl, decimal   calculus on one-variable expressions
    logic check, logic axioms      Heyting semantics of propositional formulas

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
'''

import argparse
import logging
import sys
from fractions import Fraction

import ujson

import logic
import quantum
import weil
from errors import MalformedInputError, SmoothError
from expressions import compile_program
from formats import Renderers, jet_to_json
from lie import PhysicalConstants
from linalg import JetVector
from smooth_config import DefaultBackend, LoggingLevel
from type_hintings import Backend
from weil import AlgebraSpec, Jet


renderers = Renderers()


def _rational(text: str) -> str:
    '''Argument type for scalars: keeps the text, rejects anything Fraction cannot read.'''

    try:
        Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'{text!r} is not a number') from None
    return text.strip()


def _counting(minimum: int):
    '''Argument type for whole numbers no smaller than `minimum`.'''

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f'{text!r} is not a whole number') from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f'{value} is below {minimum}')
        return value

    return parse


def _backend(text: str) -> Backend:

    try:
        return Backend.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'Unknown backend {text!r}; use exact or approx') from None


def _default_backend() -> Backend:

    try:
        return Backend.parse(DefaultBackend)
    except ValueError:
        raise MalformedInputError(f'SMOOTH_BACKEND={DefaultBackend!r} is neither exact nor approx') from None


def _closed_value(text: str, backend: Backend):
    '''Value of an expression without free variables, as a scalar of the backend.'''

    program = compile_program(text)
    if program.variable is not None:
        raise MalformedInputError(f'Expression {text!r} must not contain the variable {program.variable!r}')
    return program(Jet.constant(0, AlgebraSpec.scalars(backend))).standard_part


def _constants(args, backend: Backend) -> PhysicalConstants:
    return PhysicalConstants.create(args.hbar, args.alpha, args.e1, args.e2, backend)


def _add_constants(parser: argparse.ArgumentParser):

    parser.add_argument('--hbar', type = _rational, default = '1')
    parser.add_argument('--alpha', type = _rational, default = '1')
    parser.add_argument('--e1', type = _rational, default = '0')
    parser.add_argument('--e2', type = _rational, default = '0')


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(prog = 'smooth', description = 'Jet model of smooth reals, Heyting logic and two-spin quantum mechanics.')
    parser.add_argument('--backend', type = _backend, default = None, help = 'exact or approx (default from SMOOTH_BACKEND)')
    commands = parser.add_subparsers(dest = 'command', required = True)

    demo = commands.add_parser('demo', help = 'reproduce the eigen-table, evolution and infinitesimal showcase')
    demos = demo.add_subparsers(dest = 'demo', required = True)

    eigen = demos.add_parser('eigen')
    _add_constants(eigen)
    eigen.add_argument('--format', choices = ('json', 'csv', 'md'), default = 'json')

    evolve = demos.add_parser('evolve')
    _add_constants(evolve)
    evolve.add_argument('--state', choices = ('ud', 'du', 'uu', 'dd', 'singlet', 'triplet'), default = 'ud')
    evolve.add_argument('--t', default = 'pi', help = 'final time, a closed expression')
    evolve.add_argument('--steps', type = _counting(1), default = 8)

    demos.add_parser('infinitesimal')

    diff = commands.add_parser('diff', help = 'k-th derivative of a one-variable expression')
    diff.add_argument('--expr', required = True)
    diff.add_argument('--at', required = True, type = _rational)
    diff.add_argument('--order', type = _counting(1), default = 1)

    integrate = commands.add_parser('integrate', help = 'integral from 0 of a one-variable expression')
    integrate.add_argument('--expr', required = True)
    integrate.add_argument('--to', required = True, type = _rational)

    kl = commands.add_parser('kl', help = 'f(d) = f(0) + d*b for a square-zero d')
    kl.add_argument('--expr', required = True)
    kl.add_argument('--format', choices = ('text', 'json'), default = 'text')

    decimal = commands.add_parser('decimal', help = 'decimal expansion of a closed expression')
    decimal.add_argument('--expr', required = True, help = 'a free variable is bound to a square-zero infinitesimal')
    decimal.add_argument('--places', type = _counting(0), required = True)
    decimal.add_argument('--overlap', type = _counting(1), default = None, help = 'also list the cover indices for overlap 1/q')

    logic_parser = commands.add_parser('logic', help = 'intuitionistic propositional logic over finite Heyting algebras')
    logic_commands = logic_parser.add_subparsers(dest = 'logic', required = True)
    check = logic_commands.add_parser('check')
    check.add_argument('--algebra', required = True)
    check.add_argument('--formula', required = True)
    axioms = logic_commands.add_parser('axioms')
    axioms.add_argument('--algebra', required = True)

    return parser

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def _demo_eigen(args, backend: Backend) -> str:

    table = quantum.eigentable(_constants(args, backend))
    match args.format:

        case 'csv':
            return renderers.eigentable_to_csv(table)

        case 'md':
            return renderers.eigentable_to_markdown(table)

        case _:
            return renderers.eigentable_to_json(table)


def _demo_evolve(args, backend: Backend) -> str:

    c = _constants(args, backend)
    T = _closed_value(args.t, backend)
    samples = quantum.trajectory(quantum.named_state(args.state, c), c, T, args.steps)
    return renderers.trajectory_to_json(samples, ['uu', 'ud', 'du', 'dd'])


def _demo_infinitesimal(backend: Backend) -> str:

    D = AlgebraSpec.first_order('e', backend)
    D2 = AlgebraSpec.truncated(2, 'd', backend)
    e, d = weil.generator(D), weil.generator(D2)
    c = PhysicalConstants.create(backend = backend)
    tiny_up = JetVector([e, 0])

    verdicts = [
        ('eq(e, 0)', weil.eq(e, 0)),
        ('apart(e, 0)', weil.apart(e, 0)),
        ('less_than(e, 1/10)', weil.less_than(e, Fraction(1, 10))),
        ('less_than(e, 1/1000)', weil.less_than(e, Fraction(1, 1000))),
        ('less_than(0, e)', weil.less_than(Jet.constant(0, D), e)),
        ('eq(e*e, 0)', weil.eq(e * e, 0)),
        ('eq(d*d, 0)', weil.eq(d * d, 0)),
        ('is_physical(e|up>)', quantum.is_physical(quantum.StateVector(tiny_up, c))),
        ('is_zero(e|up>)', quantum.is_zero(quantum.StateVector(tiny_up, c))),
    ]
    return renderers.verdicts_to_text(verdicts)


def _decimal(args, backend: Backend) -> str:

    program = compile_program(args.expr)
    point = weil.generator(AlgebraSpec.first_order(program.variable, backend)) if program.variable else Jet.constant(0, AlgebraSpec.scalars(backend))
    value = program(point)

    lines = [weil.decimal_expand(value, args.places)]
    if args.overlap is not None:
        indices = weil.cover_indices(value, args.places, args.overlap)
        lines.append('cover indices: ' + ', '.join(str(index) for index in indices))
    return '\n'.join(lines)


def _logic(args) -> str:

    algebra = logic.make_algebra(args.algebra)
    match args.logic:

        case 'check':
            formula = logic.parse_formula(args.formula)
            counterexample = logic.find_counterexample(formula, algebra)
            if counterexample is None:
                return 'valid'
            return 'not valid; counterexample ' + ', '.join(f'{name}={value}' for name, value in counterexample.items())

        case _:
            report = logic.check_axioms(algebra)
            lines = [f'{result.name}: {"valid" if result.valid else "not valid"}' for result in report.schemas + report.classical]
            return '\n'.join(lines)


def dispatch(args) -> str:
    '''Takes parsed arguments, returns the stdout payload; domain failures propagate as SmoothError.'''

    backend = args.backend or _default_backend()
    match args.command:

        case 'demo':
            match args.demo:

                case 'eigen':
                    return _demo_eigen(args, backend)

                case 'evolve':
                    return _demo_evolve(args, args.backend or Backend.Approx)

                case _:
                    return _demo_infinitesimal(backend)

        case 'diff':
            return weil.format_scalar(weil.derivative(args.expr, weil.coerce_scalar(args.at, backend), args.order, backend))

        case 'integrate':
            return weil.format_jet(weil.integrate(args.expr, weil.coerce_scalar(args.to, backend), backend))

        case 'kl':
            a, b = weil.kl_decompose(args.expr, backend)
            if args.format == 'json':
                return ujson.dumps({'f0': jet_to_json(a), 'b': jet_to_json(b)})
            return f'({weil.format_jet(a)}, {weil.format_jet(b)})'

        case 'decimal':
            return _decimal(args, backend)

        case _:
            return _logic(args)


def run(argv: list[str] | None = None) -> int:
    '''Runs one invocation; returns the exit code.'''

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        output = dispatch(args)
    except SmoothError as exc:
        logging.info(f'{type(exc).__name__} while running {args.command}')
        print(f'{type(exc).__name__}: {exc}', file = sys.stderr)
        return 1

    print(output)
    return 0


def main():

    logging.basicConfig(level = LoggingLevel.upper(), stream = sys.stderr)
    sys.exit(run())


if __name__ == '__main__':
    main()
