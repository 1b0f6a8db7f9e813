'''Represents propositional intuitionistic logic over finite Heyting algebras.

Formula grammar (ASCII connectives, Unicode aliases accepted):

    formula := implic
    implic  := disj ("->" implic)?
    disj    := conj ("|" conj)*
    conj    := neg ("&" neg)*
    neg     := "~" neg | atom
    atom    := IDENT | "1" | "0" | "(" formula ")"

Classes:

    Var, Top, Bottom, Not, And, Or, Implies
    HeytingAlgebra

Functions:

    parse_formula(text: str) -> formula
    print_formula(formula) -> str
    evaluate(formula, algebra, assignment) -> element
    check_axioms(algebra) -> AxiomReport [class from module `type_hintings.py`]
    make_algebra(kind) -> HeytingAlgebra
'''

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path

import ujson
from pyparsing import Forward, Optional, ParseException, Suppress, Word, ZeroOrMore
from pyparsing import alphanums, alphas, one_of

from errors import MalformedInputError, NoImplicationError, NotDistributiveError
from errors import ParseError, UnboundVariableError
from type_hintings import AxiomReport, AxiomResult


@dataclass(frozen = True)
class Var:
    name: str


@dataclass(frozen = True)
class Top:
    pass


@dataclass(frozen = True)
class Bottom:
    pass


@dataclass(frozen = True)
class Not:
    operand: object


@dataclass(frozen = True)
class And:
    left: object
    right: object


@dataclass(frozen = True)
class Or:
    left: object
    right: object


@dataclass(frozen = True)
class Implies:
    left: object
    right: object


def _fold(connective):

    def fold(tokens):
        node = tokens[0]
        for operand in tokens[1:]:
            node = connective(node, operand)
        return node

    return fold


@lru_cache(maxsize = 1)
def _grammar():

    formula = Forward()
    negation = Forward()
    implication = Forward()

    variable = Word(alphas + '_', alphanums + '_').set_parse_action(lambda t: Var(t[0]))
    top = one_of('1 ⊤').set_parse_action(lambda t: Top())
    bottom = one_of('0 ⊥').set_parse_action(lambda t: Bottom())
    atom = variable | top | bottom | (Suppress('(') + formula + Suppress(')'))

    negation <<= (Suppress(one_of('~ ¬')) + negation).set_parse_action(lambda t: Not(t[0])) | atom
    conjunction = (negation + ZeroOrMore(Suppress(one_of('& ∧')) + negation)).set_parse_action(_fold(And))
    disjunction = (conjunction + ZeroOrMore(Suppress(one_of('| ∨')) + conjunction)).set_parse_action(_fold(Or))
    implication <<= (disjunction + Optional(Suppress(one_of('-> → ⇒')) + implication)).set_parse_action(_fold(Implies))
    formula <<= implication
    return formula


def parse_formula(text: str):
    '''Takes formula text, returns the formula tree; `->` associates to the right.'''

    try:
        return _grammar().parse_string(text, parse_all = True)[0]
    except ParseException as exc:
        raise ParseError(f'Malformed formula {text!r}: {exc.msg}', exc.loc) from exc


_LEVELS = {Implies: 1, Or: 2, And: 3, Not: 4}


def _print(node, level: int) -> str:

    match node:

        case Var(name):
            return name

        case Top():
            return '1'

        case Bottom():
            return '0'

        case Not(operand):
            text = f'~{_print(operand, 4)}'

        case Implies(left, right):
            text = f'{_print(left, 2)} -> {_print(right, 1)}'

        case Or(left, right):
            text = f'{_print(left, 2)} | {_print(right, 3)}'

        case And(left, right):
            text = f'{_print(left, 3)} & {_print(right, 4)}'

        case _:
            raise MalformedInputError(f'Unknown formula node {node!r}')

    return f'({text})' if _LEVELS[type(node)] < level else text


def print_formula(node) -> str:
    '''Minimal-parenthesis rendering; `parse_formula(print_formula(f)) == f`.'''
    return _print(node, 1)


def free_variables(node) -> set[str]:

    match node:

        case Var(name):
            return {name}

        case Not(operand):
            return free_variables(operand)

        case And(left, right) | Or(left, right) | Implies(left, right):
            return free_variables(left) | free_variables(right)

    return set()

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

@dataclass(frozen = True)
class HeytingAlgebra:
    '''Finite bounded distributive lattice with relative pseudo-complement, stored as operation tables.'''

    name: str
    elements: tuple[str, ...]
    order: frozenset
    meets: dict = field(compare = False)
    joins: dict = field(compare = False)
    implications: dict = field(compare = False)
    top: str
    bottom: str

    @classmethod
    def from_order(cls, elements, le_pairs, name: str = 'custom') -> 'HeytingAlgebra':
        '''Takes elements and (a, b) pairs meaning a <= b; closes the order and derives every table.'''

        elements = tuple(str(element) for element in elements)
        if not elements or len(set(elements)) != len(elements):
            raise MalformedInputError(f'Elements must be a non-empty list of distinct names: {elements}')

        order = {(a, a) for a in elements}
        for a, b in le_pairs:
            a, b = str(a), str(b)
            if a not in elements or b not in elements:
                raise MalformedInputError(f'Order pair ({a}, {b}) names an unknown element')
            order.add((a, b))
        for middle in elements:
            for a, b in product(elements, repeat = 2):
                if (a, middle) in order and (middle, b) in order:
                    order.add((a, b))

        for a, b in combinations(elements, 2):
            if (a, b) in order and (b, a) in order:
                raise MalformedInputError(f'Order is not antisymmetric: {a} <= {b} <= {a}')

        def greatest(candidates):
            found = [c for c in candidates if all((d, c) in order for d in candidates)]
            return found[0] if found else None

        def least(candidates):
            found = [c for c in candidates if all((c, d) in order for d in candidates)]
            return found[0] if found else None

        meets, joins = {}, {}
        for a, b in product(elements, repeat = 2):
            meet = greatest([c for c in elements if (c, a) in order and (c, b) in order])
            join = least([c for c in elements if (a, c) in order and (b, c) in order])
            if meet is None or join is None:
                raise MalformedInputError(f'Order is not a lattice: {a} and {b} lack a meet or a join')
            meets[a, b], joins[a, b] = meet, join

        top, bottom = greatest(elements), least(elements)

        for a, b, c in product(elements, repeat = 3):
            if meets[a, joins[b, c]] != joins[meets[a, b], meets[a, c]]:
                raise NotDistributiveError(f'{a} & ({b} | {c}) differs from ({a} & {b}) | ({a} & {c})')

        implications = {}
        for a, b in product(elements, repeat = 2):
            implication = greatest([c for c in elements if (meets[c, a], b) in order])
            if implication is None:
                raise NoImplicationError(f'No greatest c with c & {a} <= {b}')
            implications[a, b] = implication

        algebra = cls(name, elements, frozenset(order), meets, joins, implications, top, bottom)
        algebra._check_adjunction()
        logging.debug(f'Built Heyting algebra {name} with {len(elements)} elements')
        return algebra

    def _check_adjunction(self):

        for a, b, c in product(self.elements, repeat = 3):
            if self.leq(c, self.implies(a, b)) != self.leq(self.meet(c, a), b):
                raise NoImplicationError(f'Adjunction fails at a={a}, b={b}, c={c}')

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.order

    def meet(self, a: str, b: str) -> str:
        return self.meets[a, b]

    def join(self, a: str, b: str) -> str:
        return self.joins[a, b]

    def implies(self, a: str, b: str) -> str:
        return self.implications[a, b]

    def negate(self, a: str) -> str:
        return self.implies(a, self.bottom)

    def is_boolean(self) -> bool:
        return all(self.join(a, self.negate(a)) == self.top for a in self.elements)


def chain(n: int) -> HeytingAlgebra:
    '''Linear order 0 < ... < 1 with n elements; n = 2 is the Boolean algebra.'''

    if n < 2:
        raise MalformedInputError(f'A chain needs at least 2 elements, got {n}')

    match n:

        case 2:
            middle = []

        case 3:
            middle = ['m']

        case _:
            middle = [f'm{i}' for i in range(1, n - 1)]

    elements = ['0', *middle, '1']
    return HeytingAlgebra.from_order(elements, zip(elements, elements[1:]), f'chain({n})')


def boolean(atoms: int = 1) -> HeytingAlgebra:
    '''Power set of `atoms` atoms, labelled by their letters; the empty set is 0 and the full set is 1.'''

    if atoms < 1 or atoms > 6:
        raise MalformedInputError(f'Boolean algebras are built from 1 to 6 atoms, got {atoms}')

    letters = 'abcdef'[:atoms]
    subsets = [frozenset(letter for index, letter in enumerate(letters) if mask >> index & 1) for mask in range(2 ** atoms)]

    def label(subset):
        if not subset:
            return '0'
        if len(subset) == atoms:
            return '1'
        return ''.join(sorted(subset))

    pairs = [(label(small), label(large)) for small, large in product(subsets, repeat = 2) if small <= large]
    return HeytingAlgebra.from_order([label(subset) for subset in subsets], pairs, f'boolean({atoms})')


def make_algebra(kind) -> HeytingAlgebra:
    '''Takes `chain(n)`, `chainN`, `bool`, `boolean(k)`, a path to a JSON file or a decoded JSON dict.'''

    if isinstance(kind, dict):
        try:
            return HeytingAlgebra.from_order(kind['elements'], kind['le'], kind.get('name', 'custom'))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f'Custom algebra needs "elements" and "le": {exc}') from exc

    text = str(kind).strip()
    if match := re.fullmatch(r'chain\(?(\d+)\)?', text):
        return chain(int(match.group(1)))
    if match := re.fullmatch(r'boolean\((\d+)\)', text):
        return boolean(int(match.group(1)))
    if text in ('bool', 'boolean'):
        return chain(2)

    path = Path(text)
    if path.suffix == '.json':
        try:
            return make_algebra(ujson.loads(path.read_text()))
        except (OSError, ValueError) as exc:
            raise MalformedInputError(f'Cannot read algebra file {text}: {exc}') from exc

    raise MalformedInputError(f'Unknown algebra {text!r}')

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def evaluate(node, algebra: HeytingAlgebra, assignment: dict) -> str:
    '''Structural evaluation through the algebra's tables.'''

    match node:

        case Var(name) if name in assignment:
            value = str(assignment[name])
            if value not in algebra.elements:
                raise MalformedInputError(f'{value!r} is not an element of {algebra.name}')
            return value

        case Var(name):
            raise UnboundVariableError(f'Variable {name!r} is not assigned')

        case Top():
            return algebra.top

        case Bottom():
            return algebra.bottom

        case Not(operand):
            return algebra.negate(evaluate(operand, algebra, assignment))

        case And(left, right):
            return algebra.meet(evaluate(left, algebra, assignment), evaluate(right, algebra, assignment))

        case Or(left, right):
            return algebra.join(evaluate(left, algebra, assignment), evaluate(right, algebra, assignment))

        case Implies(left, right):
            return algebra.implies(evaluate(left, algebra, assignment), evaluate(right, algebra, assignment))

    raise MalformedInputError(f'Unknown formula node {node!r}')


def find_counterexample(node, algebra: HeytingAlgebra) -> dict | None:
    '''First assignment (variables sorted, elements in algebra order) not evaluating to top.'''

    variables = sorted(free_variables(node))
    for values in product(algebra.elements, repeat = len(variables)):
        assignment = dict(zip(variables, values))
        if evaluate(node, algebra, assignment) != algebra.top:
            return assignment
    return None


def is_valid(node, algebra: HeytingAlgebra) -> bool:
    return find_counterexample(node, algebra) is None


AXIOM_SCHEMAS = (
    ('conjunction duplication', 'a -> (a & a)'),
    ('conjunction commutes', '(a & b) -> (b & a)'),
    ('conjunction monotone', '(a -> b) -> ((a & c) -> (b & c))'),
    ('implication transitive', '((a -> b) & (b -> c)) -> (a -> c)'),
    ('weakening', 'b -> (a -> b)'),
    ('modus ponens', '(a & (a -> b)) -> b'),
    ('disjunction introduction', 'a -> (a | b)'),
    ('disjunction commutes', '(a | b) -> (b | a)'),
    ('disjunction elimination', '((a -> c) & (b -> c)) -> ((a | b) -> c)'),
    ('ex falso', '~a -> (a -> b)'),
    ('reductio', '((a -> b) & (a -> ~b)) -> ~a'),
)

CLASSICAL_LAWS = (
    ('excluded middle', 'a | ~a'),
    ('double negation elimination', '~~a -> a'),
)


def _check(schemas, algebra: HeytingAlgebra) -> tuple[AxiomResult, ...]:

    results = []
    for name, text in schemas:
        counterexample = find_counterexample(parse_formula(text), algebra)
        results.append(AxiomResult(name, text, counterexample is None, counterexample))
    return tuple(results)


def check_axioms(algebra: HeytingAlgebra) -> AxiomReport:
    '''Exhaustively instantiates the eleven schemas plus excluded middle and double negation elimination.'''

    report = AxiomReport(algebra.name, _check(AXIOM_SCHEMAS, algebra), _check(CLASSICAL_LAWS, algebra))
    logging.info(f'{algebra.name}: {sum(r.valid for r in report.schemas)}/{len(report.schemas)} schemas valid')
    return report
