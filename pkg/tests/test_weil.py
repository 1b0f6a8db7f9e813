'''Tests for jets, internal truth and jet calculus.'''

import math
from fractions import Fraction

import pytest
import ujson
from hypothesis import given, settings
from hypothesis import strategies as st

import weil
from errors import DerivativeOrderError, EvaluationError, MixedAlgebrasError, MixedBackendsError
from errors import NotGlobalError, NotInvertibleError, NotPositiveError, UnsupportedExactError, MalformedInputError
from expressions import compile_program
from type_hintings import Backend, InternalTruth, JetKind
from weil import AlgebraSpec, Jet


D = AlgebraSpec.first_order('e')
D2 = AlgebraSpec.truncated(2, 'd')
MIXED = AlgebraSpec.create([('e', 2), ('f', 3)])

e = weil.generator(D)
d = weil.generator(D2)

rationals = st.fractions(min_value = -20, max_value = 20, max_denominator = 12)
positive_rationals = st.fractions(min_value = Fraction(1, 1000), max_value = 100, max_denominator = 1000)


def jets(algebra: AlgebraSpec):
    size = len(algebra.basis())
    return st.lists(rationals, min_size = size, max_size = size).map(lambda cs: Jet(algebra, dict(zip(algebra.basis(), cs))))


def nilpotents(algebra: AlgebraSpec):
    return jets(algebra).map(lambda x: x.nilpotent_part)


def approx_value(text: str, x: float) -> float:
    return compile_program(text)(Jet.constant(x, AlgebraSpec.scalars(Backend.Approx))).standard_part

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

@given(jets(MIXED), jets(MIXED), jets(MIXED))
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + 0 == x
    assert x * 1 == x
    assert x - x == 0


def test_square_zero_reduction():
    assert (1 + e) * (1 + e) == 1 + 2 * e


def test_annihilating_pair():
    algebra = AlgebraSpec.first_order_neighbourhood(['e1', 'e2'])
    product = weil.generator(algebra, 'e1') * weil.generator(algebra, 'e2')
    assert product.is_zero()
    assert weil.generator(algebra, 'e1') ** 2 == 0


def test_additive_inverse():
    assert ((2 + e) - (2 + e)).is_zero()


def test_ring_arith_dispatch():
    assert weil.ring_arith('mul', 1 + e, 1 + e) == 1 + 2 * e
    assert weil.ring_arith('neg', e) == -e
    with pytest.raises(ValueError):
        weil.ring_arith('pow', e, e)


def test_mixed_algebras_and_backends():
    other = weil.generator(AlgebraSpec.first_order('f'))
    with pytest.raises(MixedAlgebrasError):
        e + other
    with pytest.raises(MixedBackendsError):
        e + weil.generator(AlgebraSpec.first_order('e', Backend.Approx))
    with pytest.raises(MixedBackendsError):
        Jet.constant(0.5, D)


def test_scalars_embed_into_any_algebra():
    assert weil.constant(3) + e == 3 + e
    assert (weil.constant(3) * e).coefficient('e') == 3

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_invert():
    assert weil.invert(2 + e) == Fraction(1, 2) - e / 4
    assert weil.invert(weil.constant(1)) == 1
    with pytest.raises(NotInvertibleError):
        weil.invert(e)


@given(jets(MIXED))
def test_invert_is_exact(x):
    if weil.apart(x, 0) is InternalTruth.Holds:
        assert x * weil.invert(x) == 1


def test_sqrt():
    assert weil.sqrt(4 + e) == 2 + e / 4
    assert weil.sqrt(weil.constant(1)) == 1
    assert weil.sqrt(Fraction(9, 4) + d) ** 2 == Fraction(9, 4) + d
    with pytest.raises(NotPositiveError):
        weil.sqrt(e)
    with pytest.raises(UnsupportedExactError):
        weil.sqrt(weil.constant(2))


def test_sqrt_approx_squares_back():
    x = 2 + weil.generator(AlgebraSpec.truncated(3, 'd', Backend.Approx))
    difference = weil.sqrt(x) ** 2 - x
    assert all(abs(value) <= 1e-12 for value in difference.coefficients.values())


def test_transcendentals_are_approx_only():
    with pytest.raises(UnsupportedExactError):
        weil.exp(e)
    x = weil.generator(AlgebraSpec.first_order('e', Backend.Approx))
    assert weil.exp(x).coefficient('e') == pytest.approx(1.0)
    assert weil.sin(x).coefficient('e') == pytest.approx(1.0)
    assert weil.cos(x).coefficient('e') == pytest.approx(0.0)
    with pytest.raises(NotPositiveError):
        weil.log(x)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_equality_and_apartness():
    assert weil.eq(e, 0) is InternalTruth.Undecided
    assert weil.apart(e, 0) is InternalTruth.Fails
    assert weil.eq(weil.constant(1), 1) is InternalTruth.Holds
    assert weil.apart(1 + e, 1) is InternalTruth.Fails
    assert weil.eq(1 + e, 1) is InternalTruth.Undecided
    assert weil.eq(weil.constant(1), 2) is InternalTruth.Fails
    assert weil.apart(weil.constant(1), 2) is InternalTruth.Holds


def test_less_than():
    assert weil.less_than(e, Fraction(1, 1000)) is InternalTruth.Holds
    assert weil.less_than(e, Fraction(1, 10)) is InternalTruth.Holds
    assert weil.less_than(e, 0) is InternalTruth.Fails
    assert weil.less_than(Jet.constant(0, D), e) is InternalTruth.Fails
    assert weil.less_than(weil.constant(0), 1) is InternalTruth.Holds


def test_negation_of_verdicts():
    assert ~InternalTruth.Holds is InternalTruth.Fails
    assert ~InternalTruth.Fails is InternalTruth.Holds
    assert ~InternalTruth.Undecided is InternalTruth.Undecided


def test_classify():
    assert weil.classify(e) is JetKind.FirstOrder
    assert weil.classify(d) is JetKind.Nilpotent
    assert weil.classify(2 + e) is JetKind.Invertible
    assert weil.classify(e - e) is JetKind.Zero


@given(nilpotents(MIXED))
def test_nonzero_nilpotents_are_undecided_but_not_apart(x):
    if not x.is_zero():
        assert weil.eq(x, 0) is InternalTruth.Undecided
        assert weil.apart(x, 0) is InternalTruth.Fails


@given(nilpotents(MIXED), positive_rationals)
def test_nilpotents_are_below_every_positive_rational(x, q):
    assert weil.less_than(x, q) is InternalTruth.Holds


@given(jets(MIXED))
def test_locality(x):
    successes = 0
    for candidate in (x, 1 - x):
        try:
            weil.invert(candidate)
            successes += 1
        except NotInvertibleError:
            pass
    assert successes >= 1
    if 0 < x.standard_part < 1:
        assert successes == 2


@given(jets(MIXED))
def test_open_cover(x):
    assert InternalTruth.Holds in (weil.less_than(x, 1), weil.less_than(0, x))


@given(jets(MIXED))
def test_apartness_witnesses_invertibility(x):
    try:
        weil.invert(x)
        invertible = True
    except NotInvertibleError:
        invertible = False
    assert (weil.apart(x, 0) is InternalTruth.Holds) == invertible


def test_unit_witness():
    assert weil.unit_witness([e, Jet.constant(0, D), 3 + e]) == 2
    assert weil.unit_witness([e, 2 * e]) is None

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_kl_decompose_examples():
    a, b = weil.kl_decompose('5 + 3*d')
    assert (a, b) == (5, 3)
    a, b = weil.kl_decompose('(1 + d)^2')
    assert (a, b) == (1, 2)


def test_kl_decompose_transcendental():
    a, b = weil.kl_decompose('sin(d)', Backend.Approx)
    h = 1e-5
    assert a.standard_part == pytest.approx(0.0, abs = 1e-12)
    assert b.standard_part == pytest.approx((math.sin(h) - math.sin(-h)) / (2 * h), rel = 1e-6)


@settings(max_examples = 50)
@given(st.lists(rationals, min_size = 1, max_size = 6))
def test_kl_uniqueness_for_random_programs(coefficients):

    def program(x):
        return sum((c * x ** k for k, c in enumerate(coefficients)), Jet.constant(0, x.algebra))

    a, b = weil.kl_decompose(program)
    d_jet = weil.generator(AlgebraSpec.first_order('d'))
    residual = program(d_jet) - a - d_jet * b
    assert residual.is_zero()
    assert a == coefficients[0]
    assert b == (coefficients[1] if len(coefficients) > 1 else 0)


def test_kl_decompose_reports_partial_operations():
    with pytest.raises(EvaluationError):
        weil.kl_decompose('inv(x)')


def test_derivative_examples():
    assert weil.derivative('x^3', 2) == 12
    assert weil.derivative('x^3', 2, order = 2) == 12
    assert weil.derivative('exp(x)', 1.0, backend = Backend.Approx) == pytest.approx(math.e, abs = 1e-9)


def test_derivative_order_cap():
    with pytest.raises(DerivativeOrderError):
        weil.derivative('x^3', 2, order = 9)
    with pytest.raises(DerivativeOrderError):
        weil.derivative('x^3', 2, order = 0)


def test_taylor_coefficients():
    coefficients = weil.taylor_coefficients('exp(x)', 0.0, 3, Backend.Approx)
    assert coefficients == pytest.approx([1.0, 1.0, 0.5, 1 / 6])
    assert weil.taylor_coefficients('x^2 + 1', 3, 0) == [10]


@pytest.mark.parametrize('text', [
    'sin(x)', 'cos(x)', 'exp(x)', 'log(x)', 'sqrt(x)', 'inv(x)',
    'x^3 - 2*x', 'exp(sin(x))', 'x*exp(x)', 'log(1 + x^2)', 'sqrt(1 + x^2)', 'sin(x)/x',
])
def test_derivative_matches_central_difference(text):
    x0, h = 0.7, 1e-5
    jet = weil.derivative(text, x0, backend = Backend.Approx)
    finite = (approx_value(text, x0 + h) - approx_value(text, x0 - h)) / (2 * h)
    assert abs(jet - finite) <= 1e-6 * max(1.0, abs(finite))

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_integrate_examples():
    assert weil.integrate('x^2', 1) == Fraction(1, 3)
    assert weil.integrate('x^2', 1 + e) == Fraction(1, 3) + e
    assert weil.integrate('x^2', 1 + d) == Fraction(1, 3) + d + d * d
    assert weil.integrate('3*x^2', 2) == 8


def test_integrate_vanishes_at_zero():
    assert weil.integrate('x^2 + 7', 0) == 0
    assert weil.integrate('exp(x)', 0.0, Backend.Approx).standard_part == 0.0


def test_integrate_rejects_non_polynomials_in_exact_mode():
    with pytest.raises(UnsupportedExactError):
        weil.integrate('inv(1 + x^2)', 1)


def test_integrate_polynomials_past_the_derivative_cap():
    assert weil.integrate('x^9', 1) == Fraction(1, 10)
    assert weil.integrate('(1 + x)^20', 1) == Fraction(2 ** 21 - 1, 21)


def test_integrate_at_a_long_nilpotent_tail():
    d12 = weil.generator(AlgebraSpec.truncated(12, 'd'))
    assert weil.integrate('x^2', 1 + d12) == Fraction(1, 3) + d12 + d12 ** 2 + d12 ** 3 / 3


@pytest.mark.parametrize('x0', [0.1, 0.4, 0.9, 1.3, 1.7, 2.2, 2.6, 3.1, 3.5, 4.0])
def test_derivative_of_integral_round_trip(x0):
    text, h = 'cos(x) * exp(x/4)', 1e-3
    algebra = AlgebraSpec.first_order('e', Backend.Approx)
    F = weil.integrate(text, x0 + weil.generator(algebra))
    above = weil.integrate(text, x0 + h, Backend.Approx).standard_part
    below = weil.integrate(text, x0 - h, Backend.Approx).standard_part
    assert F.coefficient('e') == pytest.approx((above - below) / (2 * h), abs = 1e-5)
    assert F.standard_part == pytest.approx((above + below) / 2, abs = 1e-5)


def test_quadrature_matches_closed_form():
    assert weil.integrate('cos(x)', 1.2, Backend.Approx).standard_part == pytest.approx(math.sin(1.2), abs = 1e-8)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_decimal_expand():
    assert weil.decimal_expand(Fraction(1, 3), 4) == '0.3333'
    assert weil.decimal_expand(Fraction(2, 3), 2) == '0.67'
    assert weil.decimal_expand(Fraction(-7, 4), 1) == '-1.7'
    assert weil.decimal_expand(weil.constant(5), 0) == '5'
    with pytest.raises(NotGlobalError):
        weil.decimal_expand(e, 4)


def test_std_is_an_external_readout():
    assert weil.std(2 + e) == 2


def test_cover_indices_examples():
    assert weil.cover_indices(Fraction(1, 4), 1, 100) == [3]
    assert weil.cover_indices(Fraction(248, 1000), 1, 100) == [2, 3]
    assert weil.cover_interval(3, 1, 100) == (Fraction(24, 100), Fraction(35, 100))
    with pytest.raises(ValueError):
        weil.cover_indices(Fraction(1, 4), 1, 0)


@given(st.fractions(min_value = -50, max_value = 50, max_denominator = 10000), st.integers(0, 4), st.integers(1, 1000))
def test_decimal_digits_name_a_cover_member(x, places, overlap):
    indices = weil.cover_indices(x, places, overlap)
    for index in indices:
        low, high = weil.cover_interval(index, places, overlap)
        assert low < x < high
    scaled = Fraction(weil.decimal_expand(x, places)) * 10 ** places
    assert scaled in indices

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_algebra_spec_json():
    spec = AlgebraSpec.create([('e1', 2), ('e2', 3)], [('e1', 'e2')], Backend.Approx)
    assert AlgebraSpec.from_json(ujson.dumps(spec.to_json())) == spec
    assert spec.to_json()['annihilating_pairs'] == [['e1', 'e2']]


def test_algebra_spec_validation():
    with pytest.raises(MalformedInputError):
        AlgebraSpec.create([('e', 1)])
    with pytest.raises(MalformedInputError):
        AlgebraSpec.create([('e', 2), ('e', 3)])
    with pytest.raises(MalformedInputError):
        AlgebraSpec.from_json('{"generators": [{"name": "e"}]}')


def test_basis_and_nilpotency_order():
    assert D2.basis() == ((0,), (1,), (2,))
    assert D2.nilpotency_order() == 3
    assert AlgebraSpec.first_order_neighbourhood(['a', 'b']).nilpotency_order() == 2
