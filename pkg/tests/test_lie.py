import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import weil
from errors import MalformedInputError, MixedGroupsError, NotAtIdentityError, NotInGroupError
from errors import UnsupportedExactError, WrongShapeError
from lie import AlgebraElement, Group, GroupElement, PhysicalConstants
from lie import check_membership, commutator, exp_map, lie_integrate, so3_basis, spin_homomorphism, spin_rep, tangent_at_identity
from linalg import JetMatrix, matrix_eq, to_complex
from type_hintings import Backend, InternalTruth
from weil import AlgebraSpec


D = AlgebraSpec.first_order('e')
APPROX_D = AlgebraSpec.first_order('e', Backend.Approx)

L = so3_basis()
L_APPROX = so3_basis(Backend.Approx)


def levi_civita(i: int, j: int, k: int) -> int:
    return (i - j) * (j - k) * (k - i) // 2


def matrix_within(A: JetMatrix, B: JetMatrix, tolerance):
    for entry in (A - B).entries:
        for part in (entry.re, entry.im):
            assert all(abs(value) <= tolerance for value in part.coefficients.values())

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

@pytest.mark.parametrize('i, j', list(product(range(3), repeat = 2)))
def test_so3_brackets(i, j):
    expected = AlgebraElement(Group.so3(), JetMatrix.zeros(3, 3))
    for k in range(3):
        expected = expected + L[k] * levi_civita(i, j, k)
    assert commutator(L[i], L[j]) == expected


@pytest.mark.parametrize('hbar', [1, Fraction(3, 7)])
def test_spin_brackets(hbar):
    c = PhysicalConstants.create(hbar = hbar)
    S = spin_rep(c)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        assert commutator(S[i], S[j]) == S[k] * (to_complex(1j) * hbar)
        assert commutator(S[j], S[i]) == S[k] * (to_complex(-1j) * hbar)


def test_brackets_need_one_group():
    unitary = AlgebraElement(Group.unitary(3), L[0].matrix)
    with pytest.raises(MixedGroupsError):
        commutator(L[0], unitary)
    with pytest.raises(MixedGroupsError):
        L[0] + unitary

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_tangent_of_a_first_order_rotation():
    X = tangent_at_identity(lambda d: JetMatrix.identity(3) + L[2].matrix * d, Group.so3())
    assert X == L[2]


def test_tangent_is_linear_in_the_curve():
    X = tangent_at_identity(lambda d: JetMatrix.identity(3) + (L[0].matrix + L[1].matrix * 2) * d, Group.so3())
    assert X == L[0] + L[1] * 2


@settings(max_examples = 20)
@given(st.tuples(*[st.fractions(-5, 5, max_denominator = 9)] * 3))
def test_tangent_round_trip(coordinates):
    X = L[0] * coordinates[0] + L[1] * coordinates[1] + L[2] * coordinates[2]
    assert tangent_at_identity(lambda d: JetMatrix.identity(3) + X.matrix * d, Group.so3()) == X


def test_tangent_of_a_trigonometric_rotation():

    def rotation(d):
        cos, sin = weil.cos(d), weil.sin(d)
        return JetMatrix.from_rows([[cos, -sin, 0], [sin, cos, 0], [0, 0, 1]])

    X = tangent_at_identity(rotation, Group.so3(), Backend.Approx)
    assert matrix_eq(X.matrix, L_APPROX[2].matrix) is InternalTruth.Holds


def test_tangent_in_the_unitary_group():
    generator = JetMatrix.from_rows([[1j, 0], [0, -1j]])
    X = tangent_at_identity(lambda d: JetMatrix.identity(2) + generator * d, Group.unitary(2))
    assert X.matrix == generator


def test_tangent_errors():
    symmetric = JetMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    with pytest.raises(NotInGroupError):
        tangent_at_identity(lambda d: JetMatrix.identity(3) + symmetric * d, Group.so3())
    with pytest.raises(NotAtIdentityError):
        tangent_at_identity(lambda d: JetMatrix.identity(3) * 2 + L[2].matrix * d, Group.so3())
    with pytest.raises(WrongShapeError):
        tangent_at_identity(lambda d: JetMatrix.identity(2) + JetMatrix.zeros(2, 2) * d, Group.so3())


def test_membership():
    e = weil.generator(D)
    assert check_membership(JetMatrix.identity(3), Group.so3()) is InternalTruth.Holds
    assert check_membership(JetMatrix.identity(3) + L[0].matrix * e, Group.so3()) is InternalTruth.Holds
    assert check_membership(JetMatrix.from_rows([[2, 0, 0], [0, 1, 0], [0, 0, 1]]), Group.so3()) is InternalTruth.Fails
    assert check_membership(JetMatrix.from_rows([[0, 1j], [1j, 0]]), Group.unitary(2)) is InternalTruth.Holds
    with pytest.raises(WrongShapeError):
        check_membership(JetMatrix.identity(2), Group.so3())

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

@pytest.mark.parametrize('hbar', [1, Fraction(3, 7)])
def test_spin_homomorphism_images(hbar):
    c = PhysicalConstants.create(hbar = hbar)
    for X, S in zip(L, spin_rep(c)):
        image = spin_homomorphism(X, c)
        assert image.group == Group.unitary(2)
        assert image.matrix == S * (to_complex(-1j) * (1 / Fraction(hbar)))


@pytest.mark.parametrize('hbar', [1, Fraction(3, 7)])
def test_spin_homomorphism_preserves_brackets(hbar):
    c = PhysicalConstants.create(hbar = hbar)
    for i, j in product(range(3), repeat = 2):
        assert spin_homomorphism(commutator(L[i], L[j]), c) == commutator(spin_homomorphism(L[i], c), spin_homomorphism(L[j], c))


def test_spin_homomorphism_needs_so3():
    with pytest.raises(MixedGroupsError):
        spin_homomorphism(AlgebraElement(Group.unitary(3), L[0].matrix), PhysicalConstants.create())


def test_physical_constants_validation():
    with pytest.raises(MalformedInputError):
        PhysicalConstants.create(hbar = 0)
    with pytest.raises(MalformedInputError):
        PhysicalConstants.create(alpha = -1)
    assert PhysicalConstants.create(alpha = 0).alpha == 0
    assert PhysicalConstants.create(hbar = '3/7').hbar == Fraction(3, 7)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_exp_of_zero_is_the_identity():
    zero = AlgebraElement(Group.so3(), JetMatrix.zeros(3, 3))
    assert exp_map(zero).matrix == JetMatrix.identity(3)


def test_exact_exp_of_a_nilpotent_generator():
    e = weil.generator(D)
    assert exp_map(L[2] * e).matrix == JetMatrix.identity(3) + L[2].matrix * e
    with pytest.raises(UnsupportedExactError):
        exp_map(L[2])


def test_quarter_turn():
    R = exp_map(L_APPROX[2] * (math.pi / 2))
    image = R @ JetMatrix.identity(3, AlgebraSpec.scalars(Backend.Approx)).column(0)
    assert np.allclose([entry.standard_complex() for entry in image], [0, 1, 0], atol = 1e-12)


def test_exp_stays_in_the_group():
    R = exp_map(L_APPROX[0] * 1.3 + L_APPROX[1] * 0.4)
    assert check_membership(R.matrix, Group.so3()) is InternalTruth.Holds


def test_exp_along_a_jet_flow():
    epsilon = weil.generator(APPROX_D)
    X = L_APPROX[0] * 0.5 + L_APPROX[2]
    left = exp_map(X * (weil.constant(0.7, APPROX_D) + epsilon)).matrix
    right = (JetMatrix.identity(3, APPROX_D) + X.matrix * epsilon) @ exp_map(X * 0.7).matrix
    matrix_within(left, right, 1e-10)


def test_group_elements_compose():
    quarter = exp_map(L_APPROX[2] * (math.pi / 2))
    half = quarter @ quarter
    assert isinstance(half, GroupElement)
    assert np.allclose(half.matrix.standard_array(), np.diag([-1, -1, 1]), atol = 1e-12)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def test_integrating_a_constant_generator():
    X = L_APPROX[0] * 0.3 + L_APPROX[1] * 1.1
    F = lie_integrate(lambda t: X, 2.0, 16)
    assert np.allclose(F.matrix.standard_array(), exp_map(X * 2.0).matrix.standard_array(), atol = 1e-8)


def test_midpoint_rule_is_second_order():
    exact = exp_map(L_APPROX[2] * (1 / 3)).matrix.standard_array()

    def error(steps):
        F = lie_integrate(lambda t: L_APPROX[2] * (t * t), 1.0, steps)
        return np.abs(F.matrix.standard_array() - exact).max()

    ratio = error(10) / error(20)
    assert 2.7 <= ratio <= 6


def test_integration_needs_a_step():
    with pytest.raises(MalformedInputError):
        lie_integrate(lambda t: L_APPROX[0], 1.0, 0)


def test_spin_generator_linear_in_time():
    c = PhysicalConstants.create(backend = Backend.Approx)
    generator = spin_homomorphism(L_APPROX[2], c)
    F = lie_integrate(lambda t: generator * t, 2.0, 64)
    closed_form = exp_map(generator * 2.0).matrix.standard_array()
    assert np.allclose(F.matrix.standard_array(), closed_form, atol = 1e-10)
    assert F.group == Group.unitary(2)
