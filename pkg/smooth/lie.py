'''Matrix groups SO(3) and U(n) probed by jets: tangent vectors at the identity, brackets,
the spin representation, the exponential map and product integration of time-dependent generators.

Classes:

    Group(NamedTuple)
    PhysicalConstants(NamedTuple)
    AlgebraElement
    GroupElement

Functions:

    so3_basis, commutator, tangent_at_identity, check_membership
    spin_rep, spin_homomorphism, exp_map, lie_integrate
'''

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np
from scipy import linalg as scipy_linalg

import weil
from errors import MalformedInputError, MixedGroupsError, NotAtIdentityError, NotInGroupError
from errors import UnsupportedExactError, WrongShapeError
from linalg import JetMatrix, SmoothComplex, complex_eq, determinant, matrix_eq, to_complex
from type_hintings import Backend, GroupKind, InternalTruth, GlobalReal
from weil import AlgebraSpec, Jet


class Group(NamedTuple):
    '''
    Matrix group tag.

    :parameter `kind`: `GroupKind.SO` (real orthogonal, det 1) or `GroupKind.U` (unitary)
    :parameter `n`: matrix size
    '''

    kind: GroupKind
    n: int

    @classmethod
    def so3(cls) -> 'Group':
        return cls(GroupKind.SO, 3)

    @classmethod
    def unitary(cls, n: int) -> 'Group':
        return cls(GroupKind.U, n)

    @property
    def name(self) -> str:
        return f'{self.kind.value}({self.n})'


class PhysicalConstants(NamedTuple):
    '''
    Parameters of the two-spin model.

    :parameter `hbar`: reduced Planck constant, positive
    :parameter `alpha`: spin-spin coupling, non-negative
    :parameter `e1`: rest energy of the first particle
    :parameter `e2`: rest energy of the second particle
    :parameter `backend`: backend all four scalars live in
    '''

    hbar: GlobalReal
    alpha: GlobalReal
    e1: GlobalReal
    e2: GlobalReal
    backend: Backend = Backend.Exact

    @classmethod
    def create(cls, hbar = 1, alpha = 1, e1 = 0, e2 = 0, backend: Backend | str = Backend.Exact) -> 'PhysicalConstants':

        backend = Backend.parse(backend)
        hbar, alpha, e1, e2 = (weil.coerce_scalar(value, backend) for value in (hbar, alpha, e1, e2))
        if hbar <= 0:
            raise MalformedInputError(f'hbar must be positive, got {weil.format_scalar(hbar)}')
        if alpha < 0:
            raise MalformedInputError(f'alpha must not be negative, got {weil.format_scalar(alpha)}')
        return cls(hbar, alpha, e1, e2, backend)

    @property
    def algebra(self) -> AlgebraSpec:
        return AlgebraSpec.scalars(self.backend)


@dataclass(frozen = True)
class AlgebraElement:
    '''Tangent vector at the identity: antisymmetric for SO(n), anti-hermitian for U(n).'''

    group: Group
    matrix: JetMatrix

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        _same_group(self, other)
        return AlgebraElement(self.group, self.matrix + other.matrix)

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        _same_group(self, other)
        return AlgebraElement(self.group, self.matrix - other.matrix)

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement(self.group, -self.matrix)

    def __mul__(self, scalar) -> 'AlgebraElement':
        return AlgebraElement(self.group, self.matrix * scalar)

    def __rmul__(self, scalar) -> 'AlgebraElement':
        return self.__mul__(scalar)


@dataclass(frozen = True)
class GroupElement:

    group: Group
    matrix: JetMatrix

    def __matmul__(self, other):

        match other:

            case GroupElement():
                _same_group(self, other)
                return GroupElement(self.group, self.matrix @ other.matrix)

            case _:
                return self.matrix @ other


def _same_group(a, b):

    if a.group != b.group:
        raise MixedGroupsError(f'Cannot combine elements of {a.group.name} and {b.group.name}')

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def so3_basis(backend: Backend | str = Backend.Exact) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    '''Infinitesimal rotations about the three coordinate axes.'''

    algebra = AlgebraSpec.scalars(backend)
    rows = (
        [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
        [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
        [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
    )
    return tuple(AlgebraElement(Group.so3(), JetMatrix.from_rows(matrix, algebra)) for matrix in rows)


def commutator(A, B):
    '''[A, B] = AB - BA for algebra elements of one group, or for bare matrices.'''

    match A, B:

        case AlgebraElement(), AlgebraElement():
            _same_group(A, B)
            return AlgebraElement(A.group, A.matrix @ B.matrix - B.matrix @ A.matrix)

        case JetMatrix(), JetMatrix():
            return A @ B - B @ A

    raise TypeError(f'Cannot bracket {type(A).__name__} with {type(B).__name__}')


def check_membership(U: JetMatrix, group: Group) -> InternalTruth:
    '''Conjunction of the defining equations of the group, evaluated by the internal equality.'''

    if U.shape != (group.n, group.n):
        raise WrongShapeError(f'{group.name} needs a {group.n}x{group.n} matrix, got {U.shape}')

    identity = JetMatrix.identity(group.n, U.algebra)
    match group.kind:

        case GroupKind.SO:
            real = InternalTruth.conjunction(weil.eq(entry.im, 0) for entry in U.entries)
            orthogonal = matrix_eq(U @ U.transpose(), identity)
            return InternalTruth.conjunction((real, orthogonal, complex_eq(determinant(U), 1)))

        case GroupKind.U:
            return matrix_eq(U @ U.dagger(), identity)

    raise MalformedInputError(f'Unknown group kind {group.kind!r}')


def _coefficient_matrix(U: JetMatrix, monomial) -> JetMatrix:

    scalars = AlgebraSpec.scalars(U.backend)
    return JetMatrix(U.rows.n, U.cols.n, [SmoothComplex(Jet.constant(entry.re.coefficient(monomial), scalars),
                                                        Jet.constant(entry.im.coefficient(monomial), scalars))
                                          for entry in U.entries])


def tangent_at_identity(t: Callable[[Jet], JetMatrix], group: Group, backend: Backend | str = Backend.Exact) -> AlgebraElement:
    '''Takes a jet program d -> t(d) into the group with t(0) = 1, returns the unique X with t(d) = 1 + d*X.'''

    algebra = AlgebraSpec.first_order('d', backend)
    d = weil.generator(algebra)
    U = t(d)
    if U.shape != (group.n, group.n):
        raise WrongShapeError(f'{group.name} needs a {group.n}x{group.n} matrix, got {U.shape}')

    if matrix_eq(U.standard(), JetMatrix.identity(group.n, algebra)) is not InternalTruth.Holds:
        raise NotAtIdentityError(f'Curve does not pass through the identity of {group.name}')

    verdict = check_membership(U, group)
    if verdict is not InternalTruth.Holds:
        raise NotInGroupError(f'Curve leaves {group.name} to first order (membership {verdict.value})')

    X = _coefficient_matrix(U, algebra.generator_monomial('d'))
    structural = X + X.transpose() if group.kind is GroupKind.SO else X + X.dagger()
    if matrix_eq(structural, JetMatrix.zeros(group.n, group.n, X.algebra)) is not InternalTruth.Holds:
        raise NotInGroupError(f'Tangent vector violates the structure of the Lie algebra of {group.name}')

    logging.debug(f'Tangent vector at the identity of {group.name}: {X!r}')
    return AlgebraElement(group, X)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def spin_rep(c: PhysicalConstants) -> tuple[JetMatrix, JetMatrix, JetMatrix]:
    '''Spin operators S_i = (hbar/2) sigma_i on C^2 with up = e_0, down = e_1.'''

    paulis = (
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    )
    half_hbar = c.hbar / 2
    return tuple(JetMatrix.from_rows(sigma, c.algebra) * half_hbar for sigma in paulis)


def spin_homomorphism(X: AlgebraElement, c: PhysicalConstants) -> AlgebraElement:
    '''Linear extension of L_i -> -(i/hbar) S_i from so(3) to u(2).'''

    if X.group != Group.so3():
        raise MixedGroupsError(f'Spin homomorphism is defined on so(3), got {X.group.name}')

    coordinates = (X.matrix[2, 1], X.matrix[0, 2], X.matrix[1, 0])
    factor = to_complex(-1j, c.algebra) * (1 / c.hbar)
    image = JetMatrix.zeros(2, 2, c.algebra)
    for coordinate, spin in zip(coordinates, spin_rep(c)):
        image = image + spin * (coordinate * factor)
    return AlgebraElement(Group.unitary(2), image)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

@lru_cache(maxsize = None)
def _basis_elements(algebra: AlgebraSpec) -> tuple[Jet, ...]:
    return tuple(Jet(algebra, {monomial: 1}) for monomial in algebra.basis())


def _multiplication_matrix(z: SmoothComplex, algebra: AlgebraSpec) -> np.ndarray:
    '''Matrix of w -> z*w on the monomial basis of the algebra, with complex scalars.'''

    basis = algebra.basis()
    re, im = weil.as_jet(z.re, algebra), weil.as_jet(z.im, algebra)
    if re.algebra != algebra:
        re, im = re.rehome(algebra), im.rehome(algebra)

    block = np.zeros((len(basis), len(basis)), dtype = complex)
    for column, element in enumerate(_basis_elements(algebra)):
        real, imaginary = re * element, im * element
        for row, monomial in enumerate(basis):
            block[row, column] = complex(float(real.coefficient(monomial)), float(imaginary.coefficient(monomial)))
    return block


def _regular_representation(X: JetMatrix, algebra: AlgebraSpec) -> np.ndarray:

    k, n = len(algebra.basis()), X.rows.n
    big = np.zeros((n * k, n * k), dtype = complex)
    for i in range(n):
        for j in range(n):
            big[i * k:(i + 1) * k, j * k:(j + 1) * k] = _multiplication_matrix(X[i, j], algebra)
    return big


def _exp_approx(X: JetMatrix) -> JetMatrix:
    '''Exponential through the regular representation: each jet entry becomes its multiplication matrix,
    scipy's scaling-and-squaring exponential runs on the block matrix, and column 0 of each block
    reads the resulting jet back.'''

    algebra = X.algebra
    basis = algebra.basis()
    k, n = len(basis), X.rows.n
    exponential = scipy_linalg.expm(_regular_representation(X, algebra))

    entries = []
    for i in range(n):
        for j in range(n):
            column = exponential[i * k:(i + 1) * k, j * k]
            entries.append(SmoothComplex(Jet(algebra, {monomial: float(value.real) for monomial, value in zip(basis, column)}),
                                         Jet(algebra, {monomial: float(value.imag) for monomial, value in zip(basis, column)})))
    return JetMatrix(n, n, entries)


def _exp_nilpotent(X: JetMatrix) -> JetMatrix:
    '''Finite exponential series of a matrix whose entries have zero standard part.'''

    n = X.rows.n
    result = JetMatrix.identity(n, X.algebra)
    power = result
    for k in range(1, X.algebra.nilpotency_order()):
        power = power @ X
        result = result + power * Fraction(1, math.factorial(k))
    return result


def exp_map(X: AlgebraElement) -> GroupElement:
    '''exp(X) for jet-valued generators; the exact backend covers generators without standard part.'''

    matrix = X.matrix
    match matrix.backend:

        case Backend.Approx:
            result = _exp_approx(matrix)

        case _:
            if not all(weil._negligible(entry.re.standard_part, Backend.Exact) and weil._negligible(entry.im.standard_part, Backend.Exact)
                       for entry in matrix.entries):
                raise UnsupportedExactError('exp of a generator with nonzero standard part is transcendental; use the approx backend')
            result = _exp_nilpotent(matrix)

    return GroupElement(X.group, result)


def lie_integrate(f: Callable[[float], AlgebraElement], T: float, steps: int) -> GroupElement:
    '''Solves F' = f(t) F, F(0) = 1 on [0, T] by the exponential midpoint rule
    F_(k+1) = exp(h f(t_k + h/2)) F_k, which is second order in h.'''

    if steps < 1:
        raise MalformedInputError(f'steps must be at least 1, got {steps}')

    h = T / steps
    F = None
    for k in range(steps):
        generator = f(k * h + h / 2)
        step = exp_map(generator * h)
        F = step if F is None else step @ F

    logging.debug(f'Product integral over [0, {T}] with {steps} midpoint steps')
    return F
