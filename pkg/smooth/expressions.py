'''Parses arithmetic expressions into ring-generic programs over jets.

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := "-" factor | base ("^" UINT)?
    base   := NUMBER | FUNC "(" expr ")" | IDENT | "(" expr ")"

A rational "p/q" is read as a division of two numbers, which denotes the same value.
Unary minus binds looser than "^" and tighter than "*" and "/".
'''

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from pyparsing import Forward, Optional, ParseException, Regex, Suppress, Word, ZeroOrMore
from pyparsing import alphanums, alphas, one_of

import weil
from errors import MalformedInputError, ParseError, UnboundVariableError, UnsupportedExactError
from type_hintings import Backend
from weil import AlgebraSpec, Jet


FUNCTIONS = {
    'sqrt': weil.sqrt,
    'exp': weil.exp,
    'sin': weil.sin,
    'cos': weil.cos,
    'log': weil.log,
    'inv': weil.invert,
}

NAMED_CONSTANTS = {'pi': 3.141592653589793}


@dataclass(frozen = True)
class Number:
    value: Fraction


@dataclass(frozen = True)
class Name:
    name: str


@dataclass(frozen = True)
class Negate:
    operand: object


@dataclass(frozen = True)
class BinaryOp:
    op: str
    left: object
    right: object


@dataclass(frozen = True)
class Power:
    base: object
    exponent: int


@dataclass(frozen = True)
class Call:
    function: str
    argument: object


def _fold_left(tokens):

    node = tokens[0]
    for op, operand in zip(tokens[1::2], tokens[2::2]):
        node = BinaryOp(op, node, operand)
    return node


def _make_power(tokens):

    if len(tokens) == 1:
        return tokens[0]
    return Power(tokens[0], int(tokens[1]))


@lru_cache(maxsize = 1)
def _grammar():

    expr = Forward()
    factor = Forward()

    number = Regex(r'\d+(\.\d*)?|\.\d+').set_parse_action(lambda t: Number(Fraction(t[0])))
    function_name = Regex(r'(%s)(?=\s*\()' % '|'.join(FUNCTIONS))
    call = (function_name + Suppress('(') + expr + Suppress(')')).set_parse_action(lambda t: Call(t[0], t[1]))
    variable = Word(alphas + '_', alphanums + '_').set_parse_action(lambda t: Name(t[0]))
    base = number | call | variable | (Suppress('(') + expr + Suppress(')'))

    power = (base + Optional(Suppress('^') + Regex(r'\d+'))).set_parse_action(_make_power)
    factor <<= (Suppress('-') + factor).set_parse_action(lambda t: Negate(t[0])) | power
    term = (factor + ZeroOrMore(one_of('* /') + factor)).set_parse_action(_fold_left)
    expr <<= (term + ZeroOrMore(one_of('+ -') + term)).set_parse_action(_fold_left)
    return expr


def parse_expression(text: str):
    '''Takes expression text, returns its syntax tree; raises `ParseError` with the failing position.'''

    try:
        return _grammar().parse_string(text, parse_all = True)[0]
    except ParseException as exc:
        raise ParseError(f'Malformed expression {text!r}: {exc.msg}', exc.loc) from exc


def free_variables(node) -> set[str]:

    match node:

        case Name(name) if name not in NAMED_CONSTANTS:
            return {name}

        case Negate(operand) | Power(operand, _) | Call(_, operand):
            return free_variables(operand)

        case BinaryOp(_, left, right):
            return free_variables(left) | free_variables(right)

    return set()


def evaluate_expression(node, env: dict, algebra: AlgebraSpec) -> Jet:
    '''Structural evaluation; numbers become constants of `algebra`.'''

    match node:

        case Number(value):
            return Jet.constant(value, algebra)

        case Name(name) if name in env:
            return weil.as_jet(env[name], algebra)

        case Name(name) if name in NAMED_CONSTANTS and algebra.backend is Backend.Exact:
            raise UnsupportedExactError(f'Constant {name!r} is irrational and only exists in the approx backend')

        case Name(name) if name in NAMED_CONSTANTS:
            return Jet.constant(NAMED_CONSTANTS[name], algebra)

        case Name(name):
            raise UnboundVariableError(f'Variable {name!r} has no value')

        case Negate(operand):
            return -evaluate_expression(operand, env, algebra)

        case Power(base, exponent):
            return evaluate_expression(base, env, algebra) ** exponent

        case Call(function, argument):
            return FUNCTIONS[function](evaluate_expression(argument, env, algebra))

        case BinaryOp(op, left, right):
            left, right = evaluate_expression(left, env, algebra), evaluate_expression(right, env, algebra)
            match op:

                case '+':
                    return left + right

                case '-':
                    return left - right

                case '*':
                    return left * right

                case '/':
                    return left / right

    raise MalformedInputError(f'Unknown expression node {node!r}')


@dataclass(frozen = True)
class Program:
    '''Unary ring-generic program compiled from expression text.'''

    text: str
    tree: object
    variable: str | None

    def __call__(self, x) -> Jet:

        algebra = x.algebra if isinstance(x, Jet) else AlgebraSpec.scalars()
        env = {self.variable: x} if self.variable else {}
        return evaluate_expression(self.tree, env, algebra)


def compile_program(text: str) -> Program:
    '''Takes expression text with at most one free variable, returns a callable over jets.'''

    tree = parse_expression(text)
    variables = free_variables(tree)
    if len(variables) > 1:
        raise MalformedInputError(f'Expression {text!r} must use a single variable, found {sorted(variables)}')
    return Program(text, tree, next(iter(variables), None))
