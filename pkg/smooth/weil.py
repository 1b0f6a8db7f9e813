'''Represents the smooth real line as elements of Weil algebras.

A Weil algebra here is a polynomial ring over the rationals (or floats) in finitely
many nilpotent generators, divided by a monomial ideal: per-generator power caps
and pairwise annihilations. Reduction modulo a monomial ideal is dropping every
monomial divisible by an ideal generator, so it is confluent by construction.

Classes:

    AlgebraSpec(NamedTuple)
    Jet

Functions:

    ring_arith, invert, sqrt, exp, sin, cos, log
    eq, apart, less_than, classify, std, decimal_expand
    cover_interval, cover_indices, unit_witness
    kl_decompose, taylor_coefficients, derivative, integrate
'''

import logging
import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, NamedTuple

import ujson
from scipy import integrate as scipy_integrate

from errors import MixedAlgebrasError, MixedBackendsError, MalformedInputError
from errors import NotInvertibleError, NotPositiveError, UnsupportedExactError
from errors import EvaluationError, QuadratureFailureError, NotGlobalError, DerivativeOrderError
from smooth_config import ApproxTolerance, DerivativeOrderCap, ExactPolynomialDegreeLimit
from smooth_config import QuadratureTolerance, QuadratureRelativeTolerance, QuadratureSubdivisionLimit
from type_hintings import Backend, InternalTruth, JetKind, GlobalReal


Monomial = tuple[int, ...]
Scalar = Fraction | float


class AlgebraSpec(NamedTuple):
    '''
    Presentation of a Weil algebra by nilpotent generators and monomial relations.

    :parameter `generators`: generator names
    :parameter `powers`: `powers[i] = k_i + 1` such that `generators[i]^(k_i+1) = 0`
    :parameter `annihilating_pairs`: index pairs `(i, j)` with `generators[i]*generators[j] = 0`
    :parameter `backend`: `Backend.Exact` or `Backend.Approx`
    '''

    generators: tuple[str, ...]
    powers: tuple[int, ...]
    annihilating_pairs: frozenset = frozenset()
    backend: Backend = Backend.Exact

    @classmethod
    def create(cls, generators: Iterable[tuple[str, int]], annihilating_pairs: Iterable[tuple[str, str]] = (),
               backend: Backend | str = Backend.Exact) -> 'AlgebraSpec':
        '''Takes `(name, power)` pairs and name pairs, validates them and returns the spec.'''

        generators = tuple(generators)
        names = tuple(name for name, _ in generators)
        powers = tuple(int(power) for _, power in generators)

        if len(set(names)) != len(names):
            raise MalformedInputError(f'Generator names must be unique: {names}')
        for name, power in zip(names, powers):
            if not name.isidentifier():
                raise MalformedInputError(f'Generator name {name!r} is not an identifier')
            if power < 2:
                raise MalformedInputError(f'Generator {name} needs a power cap of at least 2, got {power}')

        pairs = set()
        for first, second in annihilating_pairs:
            if first not in names or second not in names:
                raise MalformedInputError(f'Unknown generator in annihilating pair ({first}, {second})')
            if first == second:
                raise MalformedInputError(f'Use a power cap of 2 instead of the pair ({first}, {first})')
            i, j = sorted((names.index(first), names.index(second)))
            pairs.add((i, j))

        return cls(names, powers, frozenset(pairs), Backend.parse(backend))

    @classmethod
    def scalars(cls, backend: Backend | str = Backend.Exact) -> 'AlgebraSpec':
        '''The algebra without generators: the global reals.'''
        return cls((), (), frozenset(), Backend.parse(backend))

    @classmethod
    def first_order(cls, name: str = 'e', backend: Backend | str = Backend.Exact) -> 'AlgebraSpec':
        '''D: one generator with square zero.'''
        return cls.create([(name, 2)], backend = backend)

    @classmethod
    def truncated(cls, order: int, name: str = 'd', backend: Backend | str = Backend.Exact) -> 'AlgebraSpec':
        '''D_k: one generator `d` with `d^(order+1) = 0`; `order = 0` gives the scalars.'''

        if order == 0:
            return cls.scalars(backend)
        return cls.create([(name, order + 1)], backend = backend)

    @classmethod
    def first_order_neighbourhood(cls, names: Iterable[str], backend: Backend | str = Backend.Exact) -> 'AlgebraSpec':
        '''D(n): n square-zero generators with all pairwise products zero.'''

        names = tuple(names)
        pairs = [(names[i], names[j]) for i in range(len(names)) for j in range(i + 1, len(names))]
        return cls.create([(name, 2) for name in names], pairs, backend)

    @classmethod
    def from_json(cls, payload: str | dict) -> 'AlgebraSpec':
        '''Takes the JSON serialization (text or decoded dict), returns the spec.'''

        if isinstance(payload, str):
            try:
                payload = ujson.loads(payload)
            except ValueError as exc:
                raise MalformedInputError(f'Algebra spec is not valid JSON: {exc}') from exc

        try:
            generators = [(entry['name'], entry['power']) for entry in payload['generators']]
            pairs = [tuple(pair) for pair in payload.get('annihilating_pairs', [])]
            backend = payload.get('backend', Backend.Exact.value)
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f'Algebra spec is missing a field: {exc}') from exc

        return cls.create(generators, pairs, backend)

    def to_json(self) -> dict:

        return {'generators': [{'name': name, 'power': power} for name, power in zip(self.generators, self.powers)],
                'annihilating_pairs': [[self.generators[i], self.generators[j]] for i, j in sorted(self.annihilating_pairs)],
                'backend': self.backend.value}

    @property
    def unit(self) -> Monomial:
        return (0,) * len(self.generators)

    def is_reduced(self, monomial: Monomial) -> bool:
        '''True iff the monomial is not divisible by any generator of the ideal.'''

        if any(exponent >= power for exponent, power in zip(monomial, self.powers)):
            return False
        return not any(monomial[i] and monomial[j] for i, j in self.annihilating_pairs)

    def basis(self) -> tuple[Monomial, ...]:
        '''Standard monomials, sorted by total degree; the unit comes first.'''
        return _standard_monomials(self)

    def nilpotency_order(self) -> int:
        '''Least N with (augmentation ideal)^N = 0.'''
        return max(sum(monomial) for monomial in self.basis()) + 1

    def generator_monomial(self, name: str) -> Monomial:

        if name not in self.generators:
            raise MalformedInputError(f'Algebra has no generator {name!r}')
        index = self.generators.index(name)
        return tuple(1 if i == index else 0 for i in range(len(self.generators)))

    def monomial_name(self, monomial: Monomial) -> str:

        factors = []
        for name, exponent in zip(self.generators, monomial):
            match exponent:

                case 0:
                    continue

                case 1:
                    factors.append(name)

                case _:
                    factors.append(f'{name}^{exponent}')

        return '*'.join(factors) or '1'

    def parse_monomial(self, text: str) -> Monomial:

        exponents = [0] * len(self.generators)
        if text.strip() == '1':
            return tuple(exponents)

        for factor in text.split('*'):
            name, _, exponent = factor.strip().partition('^')
            if name not in self.generators:
                raise MalformedInputError(f'Unknown generator {name!r} in monomial {text!r}')
            exponents[self.generators.index(name)] += int(exponent or 1)

        return tuple(exponents)


@lru_cache(maxsize = None)
def _standard_monomials(algebra: AlgebraSpec) -> tuple[Monomial, ...]:

    candidates = product(*(range(power) for power in algebra.powers))
    reduced = (monomial for monomial in candidates if algebra.is_reduced(monomial))
    return tuple(sorted(reduced, key = lambda monomial: (sum(monomial), tuple(-e for e in monomial))))


def coerce_scalar(value, backend: Backend) -> Scalar:
    '''Converts a python number (or "p/q" string) into the backend's scalar type.'''

    match backend, value:

        case _, bool():
            raise TypeError('Booleans are not scalars')

        case Backend.Exact, float():
            raise MixedBackendsError(f'Float {value!r} cannot enter the exact backend; pass a Fraction or a string')

        case Backend.Exact, int() | Fraction():
            return Fraction(value)

        case Backend.Exact, str():
            return Fraction(value.strip())

        case Backend.Approx, int() | Fraction() | float():
            return float(value)

        case Backend.Approx, str():
            return float(Fraction(value.strip()))

    raise TypeError(f'Cannot use {type(value).__name__} as a scalar')


def _negligible(value: Scalar, backend: Backend) -> bool:

    match backend:

        case Backend.Exact:
            return value == 0

        case _:
            return abs(value) <= ApproxTolerance


def format_scalar(value: Scalar) -> str:
    '''"p/q" (or "p") for rationals, shortest round-trip repr for floats.'''

    match value:

        case Fraction():
            return str(value)

        case float():
            return repr(value)

    return str(value)


class Jet:
    '''Element of a Weil algebra: standard part plus finitely many nilpotent coefficients.

    Jets are immutable; arithmetic returns new jets. Python numbers are promoted to
    constants of the algebra, and a jet of the generator-free algebra is promoted
    into any algebra of the same backend.'''

    __slots__ = ('algebra', '_coefficients')

    def __init__(self, algebra: AlgebraSpec, coefficients: dict | None = None):

        cleaned = {}
        for monomial, value in (coefficients or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != len(algebra.generators):
                raise MalformedInputError(f'Monomial {monomial} does not match generators {algebra.generators}')
            if not algebra.is_reduced(monomial):
                continue
            value = coerce_scalar(value, algebra.backend)
            if value != 0:
                cleaned[monomial] = value

        object.__setattr__(self, 'algebra', algebra)
        object.__setattr__(self, '_coefficients', cleaned)

    def __setattr__(self, name, value):
        raise AttributeError('Jet is immutable')

    @classmethod
    def constant(cls, value, algebra: AlgebraSpec) -> 'Jet':
        return cls(algebra, {algebra.unit: value})

    @property
    def backend(self) -> Backend:
        return self.algebra.backend

    @property
    def coefficients(self) -> dict:
        return dict(self._coefficients)

    @property
    def standard_part(self) -> Scalar:
        return self._coefficients.get(self.algebra.unit, coerce_scalar(0, self.backend))

    @property
    def nilpotent_part(self) -> 'Jet':
        return Jet(self.algebra, {m: c for m, c in self._coefficients.items() if m != self.algebra.unit})

    def coefficient(self, monomial: Monomial | str) -> Scalar:

        if isinstance(monomial, str):
            monomial = self.algebra.parse_monomial(monomial)
        return self._coefficients.get(tuple(monomial), coerce_scalar(0, self.backend))

    def is_zero(self) -> bool:
        '''Structurally zero, up to the backend's tolerance.'''
        return all(_negligible(value, self.backend) for value in self._coefficients.values())

    def is_global(self) -> bool:
        '''True iff no nilpotent coefficient survives (a nameable element of R).'''
        return self.nilpotent_part.is_zero()

    def rehome(self, algebra: AlgebraSpec) -> 'Jet':
        '''Embeds a global jet into another algebra of the same backend.'''

        if algebra.backend is not self.backend:
            raise MixedBackendsError(f'Cannot move a {self.backend.value} jet into a {algebra.backend.value} algebra')
        if self._coefficients.keys() - {self.algebra.unit}:
            raise MixedAlgebrasError('Only jets without nilpotent part can change algebra')
        return Jet.constant(self.standard_part, algebra)

    def map_coefficients(self, function: Callable[[Scalar], Scalar]) -> 'Jet':
        return Jet(self.algebra, {m: function(c) for m, c in self._coefficients.items()})

    def _align(self, other) -> tuple['Jet', 'Jet'] | None:

        match other:

            case Jet():
                pass

            case bool():
                return None

            case int() | Fraction() | float():
                return self, Jet.constant(other, self.algebra)

            case _:
                return None

        if self.algebra == other.algebra:
            return self, other
        if self.backend is not other.backend:
            raise MixedBackendsError(f'Cannot combine {self.backend.value} and {other.backend.value} jets')
        if not other.algebra.generators:
            return self, other.rehome(self.algebra)
        if not self.algebra.generators:
            return self.rehome(other.algebra), other
        raise MixedAlgebrasError(f'Jets live in different algebras: {self.algebra.generators} and {other.algebra.generators}')

    def __add__(self, other):

        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        left, right = aligned
        total = dict(left._coefficients)
        for monomial, value in right._coefficients.items():
            total[monomial] = total.get(monomial, 0) + value
        return Jet(left.algebra, total)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return self.map_coefficients(lambda value: -value)

    def __pos__(self):
        return self

    def __sub__(self, other):

        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        left, right = aligned
        return left + (-right)

    def __rsub__(self, other):

        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        left, right = aligned
        return right + (-left)

    def __mul__(self, other):

        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        left, right = aligned
        algebra = left.algebra

        product_coefficients = {}
        for first, a in left._coefficients.items():
            for second, b in right._coefficients.items():
                monomial = tuple(x + y for x, y in zip(first, second))
                if algebra.is_reduced(monomial):
                    product_coefficients[monomial] = product_coefficients.get(monomial, 0) + a * b
        return Jet(algebra, product_coefficients)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):

        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        left, right = aligned
        return left * invert(right)

    def __rtruediv__(self, other):

        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        left, right = aligned
        return right * invert(left)

    def __pow__(self, exponent: int):

        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return invert(self) ** -exponent

        result = Jet.constant(1, self.algebra)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        '''Structural identity, not the internal equality predicate (see `eq`).'''

        try:
            aligned = self._align(other)
        except (MixedAlgebrasError, MixedBackendsError):
            return False
        if aligned is None:
            return NotImplemented
        left, right = aligned
        return left._coefficients == right._coefficients

    def __hash__(self):

        if not self._coefficients.keys() - {self.algebra.unit}:
            return hash(self.standard_part)
        return hash((self.algebra, frozenset(self._coefficients.items())))

    def __repr__(self):
        return f'Jet({format_jet(self)})'


def format_jet(x: Jet) -> str:

    terms = []
    for monomial in x.algebra.basis():
        value = x._coefficients.get(monomial)
        if value is None:
            continue
        if monomial == x.algebra.unit:
            terms.append(format_scalar(value))
        else:
            terms.append(f'{format_scalar(value)}*{x.algebra.monomial_name(monomial)}')
    return ' + '.join(terms) or '0'


def constant(value, algebra: AlgebraSpec | None = None) -> Jet:
    return Jet.constant(value, algebra or AlgebraSpec.scalars())


def generator(algebra: AlgebraSpec, name: str | None = None) -> Jet:
    '''The jet of a named generator (the first one when no name is given).'''

    name = name or algebra.generators[0]
    return Jet(algebra, {algebra.generator_monomial(name): 1})


def as_jet(value, algebra: AlgebraSpec) -> Jet:

    if isinstance(value, Jet):
        return value
    return Jet.constant(value, algebra)


def ring_arith(op: str, x: Jet, y: Jet | None = None) -> Jet:
    '''Dispatches `add`, `sub`, `mul` or `neg` on jets of a shared algebra.'''

    match op:

        case 'add':
            return x + y

        case 'sub':
            return x - y

        case 'mul':
            return x * y

        case 'neg':
            return -x

    raise ValueError(f'Unknown ring operation {op!r}')

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def _series(x: Jet, taylor: list) -> Jet:
    '''Evaluates sum_k taylor[k] * n^k with n the nilpotent part of x; finite because n^N = 0.'''

    nilpotent = x.nilpotent_part
    result = Jet.constant(taylor[-1], x.algebra)
    for coefficient in reversed(taylor[:-1]):
        result = result * nilpotent + coefficient
    return result


def _require_approx(x: Jet, name: str):

    if x.backend is Backend.Exact:
        raise UnsupportedExactError(f'{name} is transcendental and only available in the approx backend')


def invert(x: Jet) -> Jet:
    '''Returns y with x*y = 1; raises `NotInvertibleError` when the standard part vanishes.'''

    s = x.standard_part
    if _negligible(s, x.backend):
        raise NotInvertibleError(f'{format_jet(x)} has zero standard part and no inverse')

    order = x.algebra.nilpotency_order()
    taylor = [(-1) ** k / s ** (k + 1) for k in range(order)]
    return _series(x, taylor)


def _binomial_half(k: int) -> Fraction:

    value = Fraction(1)
    for j in range(k):
        value *= (Fraction(1, 2) - j) / (j + 1)
    return value


def _exact_root(value: Fraction) -> Fraction | None:

    if value < 0:
        return None
    numerator, denominator = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if numerator * numerator == value.numerator and denominator * denominator == value.denominator:
        return Fraction(numerator, denominator)
    return None


def sqrt(x: Jet) -> Jet:
    '''Square root by the finite binomial series around a positive standard part.'''

    s = x.standard_part
    if s <= 0 or _negligible(s, x.backend):
        raise NotPositiveError(f'sqrt needs a positive standard part, got {format_scalar(s)}')

    match x.backend:

        case Backend.Exact:
            root = _exact_root(s)
            if root is None:
                raise UnsupportedExactError(f'{format_scalar(s)} is not a perfect rational square')

        case _:
            root = math.sqrt(s)

    order = x.algebra.nilpotency_order()
    taylor = [root * _binomial_half(k) / s ** k for k in range(order)]
    if x.backend is Backend.Approx:
        taylor = [float(value) for value in taylor]
    return _series(x, taylor)


def exp(x: Jet) -> Jet:

    _require_approx(x, 'exp')
    value = math.exp(x.standard_part)
    return _series(x, [value / math.factorial(k) for k in range(x.algebra.nilpotency_order())])


def sin(x: Jet) -> Jet:

    _require_approx(x, 'sin')
    s = x.standard_part
    cycle = (math.sin(s), math.cos(s), -math.sin(s), -math.cos(s))
    return _series(x, [cycle[k % 4] / math.factorial(k) for k in range(x.algebra.nilpotency_order())])


def cos(x: Jet) -> Jet:

    _require_approx(x, 'cos')
    s = x.standard_part
    cycle = (math.cos(s), -math.sin(s), -math.cos(s), math.sin(s))
    return _series(x, [cycle[k % 4] / math.factorial(k) for k in range(x.algebra.nilpotency_order())])


def log(x: Jet) -> Jet:

    _require_approx(x, 'log')
    s = x.standard_part
    if s <= ApproxTolerance:
        raise NotPositiveError(f'log needs a positive standard part, got {format_scalar(s)}')
    taylor = [math.log(s)] + [(-1) ** (k + 1) / (k * s ** k) for k in range(1, x.algebra.nilpotency_order())]
    return _series(x, taylor)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def _difference(x: Jet, y) -> Jet:
    return x - y


def eq(x: Jet, y) -> InternalTruth:
    '''Holds iff x - y vanishes, Fails iff x - y is apart from 0, Undecided for a nonzero nilpotent difference.'''

    difference = _difference(x, y)
    if difference.is_zero():
        return InternalTruth.Holds
    if _negligible(difference.standard_part, difference.backend):
        return InternalTruth.Undecided
    return InternalTruth.Fails


def apart(x: Jet, y) -> InternalTruth:
    '''Holds iff the standard parts differ; a nilpotent difference is decidedly not apart.'''

    difference = _difference(x, y)
    if _negligible(difference.standard_part, difference.backend):
        return InternalTruth.Fails
    return InternalTruth.Holds


def less_than(x: Jet, y) -> InternalTruth:
    '''Strict order on standard parts; nilpotent perturbations are never strictly ordered.'''

    difference = _difference(y, x)
    gap = difference.standard_part
    if gap > 0 and not _negligible(gap, difference.backend):
        return InternalTruth.Holds
    return InternalTruth.Fails


def classify(x: Jet) -> JetKind:

    if x.is_zero():
        return JetKind.Zero
    if not _negligible(x.standard_part, x.backend):
        return JetKind.Invertible
    if (x * x).is_zero():
        return JetKind.FirstOrder
    return JetKind.Nilpotent


def is_unit(x: Jet) -> bool:
    return apart(x, 0) is InternalTruth.Holds


def unit_witness(xs: Iterable[Jet]) -> int | None:
    '''Index of the first invertible member, `None` when every member fails apartness from 0.'''

    for index, x in enumerate(xs):
        if is_unit(x):
            return index
    return None


def std(x) -> GlobalReal:
    '''External readout of the standard part; not a ring homomorphism of the internal theory.'''

    if isinstance(x, Jet):
        return x.standard_part
    return x


def _global_value(x) -> Fraction:

    if isinstance(x, Jet):
        if not x.is_global():
            raise NotGlobalError(f'{format_jet(x)} has a nilpotent part and names no decimal expansion')
        x = x.standard_part
    return Fraction(x)


def _round_half_up(value: Fraction) -> int:
    return math.floor(value + Fraction(1, 2))


def decimal_expand(x, places: int) -> str:
    '''Rounded decimal string with error at most 0.5 * 10^-places; ties round up, so the digits name a member of the cover family.'''

    if places < 0:
        raise ValueError('places must be a natural number')

    scaled = _round_half_up(_global_value(x) * 10 ** places)
    sign = '-' if scaled < 0 else ''
    digits = str(abs(scaled)).rjust(places + 1, '0')
    if places == 0:
        return f'{sign}{digits}'
    return f'{sign}{digits[:-places]}.{digits[-places:]}'


def cover_interval(n: int, places: int, overlap: int) -> tuple[Fraction, Fraction]:
    '''Open interval ((n - 1/2) * 10^-p - 1/q, (n + 1/2) * 10^-p) of the decimal cover family.'''

    if overlap < 1:
        raise ValueError('overlap must be a positive natural number')
    step = Fraction(1, 10 ** places)
    return (n - Fraction(1, 2)) * step - Fraction(1, overlap), (n + Fraction(1, 2)) * step


def cover_indices(x, places: int, overlap: int) -> list[int]:
    '''Every n whose cover interval contains the global element x; one or two indices for overlap large enough.'''

    if overlap < 1:
        raise ValueError('overlap must be a positive natural number')
    value = _global_value(x)
    scale = 10 ** places
    lowest = math.floor(value * scale - Fraction(1, 2)) + 1
    highest = math.ceil((value + Fraction(1, overlap)) * scale + Fraction(1, 2)) - 1
    return list(range(lowest, highest + 1))

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def _as_program(f) -> Callable:

    if callable(f):
        return f
    from expressions import compile_program
    return compile_program(f)


def _evaluate(f: Callable, point: Jet) -> Jet:
    '''Applies a ring-generic program, turning partial-operation failures into `EvaluationError`.'''

    try:
        value = f(point)
    except (NotInvertibleError, NotPositiveError, ZeroDivisionError, ValueError) as exc:
        raise EvaluationError(f'Program left the domain of a partial operation: {exc}') from exc
    return as_jet(value, point.algebra)


def kl_decompose(f, backend: Backend | str = Backend.Exact) -> tuple[Jet, Jet]:
    '''Returns (f(0), b) with f(d) = f(0) + d*b for a fresh square-zero generator d.'''

    algebra = AlgebraSpec.first_order('d', backend)
    d = generator(algebra)
    value = _evaluate(_as_program(f), d)

    a = Jet.constant(value.standard_part, algebra)
    b = Jet.constant(value.coefficient(algebra.generator_monomial('d')), algebra)
    residual = value - a - d * b
    if not residual.is_zero():
        raise EvaluationError(f'Program escaped the square-zero algebra, residual {format_jet(residual)}')

    logging.debug(f'Square-zero decomposition: a = {format_jet(a)}, b = {format_jet(b)}')
    return a, b


def _taylor(f: Callable, x0, order: int, backend: Backend) -> list[Scalar]:

    algebra = AlgebraSpec.truncated(order, 'd', backend)
    point = Jet.constant(std(x0), algebra)
    if order:
        point = point + generator(algebra)

    value = _evaluate(f, point)
    return [value.coefficient((k,) if order else ()) for k in range(order + 1)]


def taylor_coefficients(f, x0, order: int, backend: Backend | str = Backend.Exact) -> list[Scalar]:
    '''Coefficients c_k = f^(k)(x0) / k! for k = 0..order, read off f(x0 + d) with d^(order+1) = 0.'''

    if order < 0 or order > DerivativeOrderCap:
        raise DerivativeOrderError(f'Order {order} outside 0..{DerivativeOrderCap}')
    return _taylor(_as_program(f), x0, order, Backend.parse(backend))


def derivative(f, x0, order: int = 1, backend: Backend | str = Backend.Exact) -> GlobalReal:
    '''k-th derivative at x0 as k! times the coefficient of d^k in f(x0 + d).'''

    if order < 1:
        raise DerivativeOrderError(f'Derivative order must be positive, got {order}')
    coefficients = taylor_coefficients(f, x0, order, backend)
    return math.factorial(order) * coefficients[order]


def _polynomial_coefficients(f: Callable, s: Fraction) -> list[Fraction]:
    '''Coefficients of f as a polynomial, truncating at doubling degrees until f agrees with the truncation.'''

    scalars = AlgebraSpec.scalars(Backend.Exact)
    checkpoints = (s, Fraction(1), Fraction(-2), Fraction(1, 3), Fraction(7, 2), Fraction(-5, 11))
    values = [_evaluate(f, Jet.constant(point, scalars)).standard_part for point in checkpoints]

    degree = DerivativeOrderCap
    while degree <= ExactPolynomialDegreeLimit:
        coefficients = _taylor(f, 0, degree, Backend.Exact)
        if all(sum(c * point ** k for k, c in enumerate(coefficients)) == value for point, value in zip(checkpoints, values)):
            logging.debug(f'Exact antiderivative of a polynomial of degree <= {degree}')
            return coefficients
        degree *= 2

    raise UnsupportedExactError(f'Program is not a polynomial of degree <= {ExactPolynomialDegreeLimit}; use the approx backend')


def _antiderivative_exact(f: Callable, s: Fraction) -> Fraction:

    coefficients = _polynomial_coefficients(f, s)
    return sum(c * s ** (k + 1) / (k + 1) for k, c in enumerate(coefficients))


def _antiderivative_approx(f: Callable, s: float) -> float:

    if s == 0:
        return 0.0

    scalars = AlgebraSpec.scalars(Backend.Approx)
    def integrand(t: float) -> float:
        return _evaluate(f, Jet.constant(float(t), scalars)).standard_part

    result = scipy_integrate.quad(integrand, 0.0, s,
                                  epsabs = QuadratureTolerance,
                                  epsrel = QuadratureRelativeTolerance,
                                  limit = QuadratureSubdivisionLimit,
                                  full_output = 1)

    value, error = result[0], result[1]
    if len(result) > 3:
        raise QuadratureFailureError(f'Quadrature on [0, {s}] did not converge: {result[3]}')
    logging.debug(f'Quadrature on [0, {s}]: {value} +- {error}')
    return value


def integrate(f, a, backend: Backend | str | None = None) -> Jet:
    '''F(a) with F' = f and F(0) = 0: F(s) by quadrature or exact antiderivative, then
    F(s + n) = F(s) + sum_k n^k / k * c_(k-1) with c the Taylor coefficients of f at s.'''

    if not isinstance(a, Jet):
        a = Jet.constant(a, AlgebraSpec.scalars(backend or Backend.Exact))
    program = _as_program(f)
    s = a.standard_part

    match a.backend:

        case Backend.Exact:
            result = Jet.constant(_antiderivative_exact(program, s), a.algebra)

        case _:
            result = Jet.constant(_antiderivative_approx(program, s), a.algebra)

    order = a.algebra.nilpotency_order()
    if order > 1:
        coefficients = _taylor(program, s, order - 2, a.backend)
        nilpotent = a.nilpotent_part
        power = Jet.constant(1, a.algebra)
        for k in range(1, order):
            power = power * nilpotent
            result = result + power * (coefficients[k - 1] / k)

    return result
