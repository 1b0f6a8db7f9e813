'''Finite-dimensional linear algebra over the smooth complex ring C = R^2.

Vectors and matrices are indexed by finite cardinals [n] = {0, ..., n-1}; entries are
`SmoothComplex` numbers whose real and imaginary parts are jets. Tensor products use the
row-major index convention (i, j) -> i*m + j.

Classes:

    SmoothComplex
    CardinalIndex(NamedTuple)
    JetVector
    JetMatrix

Functions:

    finite_sum, inner_product, gram_matrix, determinant, solve
    linearly_independent, gram_schmidt, is_hermitian, eigen_hermitian
    tensor, matrix_of, change_of_basis, dimension
'''

import logging
import operator
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Iterable, NamedTuple

import numpy as np

import weil
from errors import EmptyFamilyError, MixedDimensionsError, MixedBackendsError, NotInvertibleError
from errors import NotInvertibleNormError, NotSquareError, NotHermitianError, DegenerateStandardPartError
from errors import NotLinearError, NotABasisError, NotOrthonormalError, UnsupportedExactError
from smooth_config import EigenDegeneracyTolerance, LinearityProbeScalar
from type_hintings import Backend, EigenPair, InternalTruth
from weil import AlgebraSpec, Jet


class SmoothComplex:
    '''Pair of jets (re, im) of a shared algebra.'''

    __slots__ = ('re', 'im')

    def __init__(self, re: Jet, im: Jet | None = None):

        if im is None:
            im = Jet.constant(0, re.algebra)
        re, im = re._align(im)
        object.__setattr__(self, 're', re)
        object.__setattr__(self, 'im', im)

    def __setattr__(self, name, value):
        raise AttributeError('SmoothComplex is immutable')

    @property
    def algebra(self) -> AlgebraSpec:
        return self.re.algebra

    @property
    def backend(self) -> Backend:
        return self.re.backend

    def conj(self) -> 'SmoothComplex':
        return SmoothComplex(self.re, -self.im)

    def abs2(self) -> Jet:
        return self.re * self.re + self.im * self.im

    def invert(self) -> 'SmoothComplex':

        norm = self.abs2()
        if weil.apart(norm, 0) is not InternalTruth.Holds:
            raise NotInvertibleError(f'{self!r} is not apart from 0')
        inverse = weil.invert(norm)
        return SmoothComplex(self.re * inverse, -self.im * inverse)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_global(self) -> bool:
        return self.re.is_global() and self.im.is_global()

    def standard_complex(self) -> complex:
        return complex(float(self.re.standard_part), float(self.im.standard_part))

    def standard(self) -> 'SmoothComplex':
        return SmoothComplex(Jet.constant(self.re.standard_part, self.algebra), Jet.constant(self.im.standard_part, self.algebra))

    def _lift(self, other) -> 'SmoothComplex | None':

        match other:

            case SmoothComplex():
                return other

            case Jet():
                return SmoothComplex(other)

            case bool():
                return None

            case int() | Fraction() | float() | complex():
                return to_complex(other, self.algebra)

        return None

    def __add__(self, other):

        other = self._lift(other)
        if other is None:
            return NotImplemented
        return SmoothComplex(self.re + other.re, self.im + other.im)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return SmoothComplex(-self.re, -self.im)

    def __sub__(self, other):

        other = self._lift(other)
        if other is None:
            return NotImplemented
        return SmoothComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):

        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):

        other = self._lift(other)
        if other is None:
            return NotImplemented
        return SmoothComplex(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):

        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):

        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, exponent: int):

        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = to_complex(1, self.algebra)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):

        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self.re == lifted.re and self.im == lifted.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f'SmoothComplex({weil.format_jet(self.re)}, {weil.format_jet(self.im)})'


def to_complex(value, algebra: AlgebraSpec | None = None) -> SmoothComplex:
    '''Lifts numbers, jets and python complex values; exact algebras accept complex values with integral parts.'''

    algebra = algebra or AlgebraSpec.scalars()
    match value:

        case SmoothComplex():
            return value

        case Jet():
            return SmoothComplex(value)

        case complex():
            parts = (value.real, value.imag)
            if algebra.backend is Backend.Exact:
                if not all(float(part).is_integer() for part in parts):
                    raise MixedBackendsError(f'Complex {value!r} has non-integral parts; use SmoothComplex with Fractions')
                parts = tuple(int(part) for part in parts)
            return SmoothComplex(Jet.constant(parts[0], algebra), Jet.constant(parts[1], algebra))

        case _:
            return SmoothComplex(Jet.constant(value, algebra))


def complex_eq(z: SmoothComplex, w) -> InternalTruth:
    difference = z - w
    return weil.eq(difference.re, 0) & weil.eq(difference.im, 0)


def complex_apart(z: SmoothComplex, w) -> InternalTruth:
    difference = z - w
    return weil.apart(difference.re, 0) | weil.apart(difference.im, 0)


class CardinalIndex(NamedTuple):
    '''The finite cardinal [n] = {0, ..., n-1}.'''

    n: int

    def indices(self) -> range:
        return range(self.n)

    def product(self, other: 'CardinalIndex') -> 'CardinalIndex':
        return CardinalIndex(self.n * other.n)


def _infer_algebra(values, algebra: AlgebraSpec | None) -> AlgebraSpec:

    if algebra is not None:
        return algebra
    found = [value.algebra for value in values if isinstance(value, (Jet, SmoothComplex))]
    with_generators = [spec for spec in found if spec.generators]
    return (with_generators or found or [AlgebraSpec.scalars()])[0]

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

class JetVector:
    '''Element of C^[n]; immutable, componentwise arithmetic.'''

    __slots__ = ('entries',)

    def __init__(self, entries: Iterable, algebra: AlgebraSpec | None = None):

        entries = tuple(entries)
        algebra = _infer_algebra(entries, algebra)
        object.__setattr__(self, 'entries', tuple(to_complex(entry, algebra) for entry in entries))

    def __setattr__(self, name, value):
        raise AttributeError('JetVector is immutable')

    @property
    def index(self) -> CardinalIndex:
        return CardinalIndex(len(self.entries))

    @property
    def algebra(self) -> AlgebraSpec:
        return _infer_algebra(self.entries, None)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> SmoothComplex:
        return self.entries[i]

    def _check(self, other: 'JetVector'):

        if not isinstance(other, JetVector):
            return False
        if len(other) != len(self):
            raise MixedDimensionsError(f'Vectors of dimension {len(self)} and {len(other)}')
        return True

    def __add__(self, other):

        if not self._check(other):
            return NotImplemented
        return JetVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):

        if not self._check(other):
            return NotImplemented
        return JetVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return JetVector(-a for a in self)

    def __mul__(self, scalar):

        if isinstance(scalar, (JetVector, JetMatrix)):
            return NotImplemented
        return JetVector(a * scalar for a in self)

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def conj(self) -> 'JetVector':
        return JetVector(a.conj() for a in self)

    def standard(self) -> 'JetVector':
        return JetVector(a.standard() for a in self)

    def standard_array(self) -> np.ndarray:
        return np.array([a.standard_complex() for a in self], dtype = complex)

    def is_global(self) -> bool:
        return all(a.is_global() for a in self)

    def __eq__(self, other):

        if not isinstance(other, JetVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f'JetVector({list(self.entries)})'


class JetMatrix:
    '''Element of C^([rows] x [cols]) stored row-major.'''

    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, rows: int, cols: int, entries: Iterable, algebra: AlgebraSpec | None = None):

        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise MixedDimensionsError(f'{len(entries)} entries do not fill a {rows}x{cols} matrix')
        algebra = _infer_algebra(entries, algebra)
        object.__setattr__(self, 'rows', CardinalIndex(rows))
        object.__setattr__(self, 'cols', CardinalIndex(cols))
        object.__setattr__(self, 'entries', tuple(to_complex(entry, algebra) for entry in entries))

    def __setattr__(self, name, value):
        raise AttributeError('JetMatrix is immutable')

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], algebra: AlgebraSpec | None = None) -> 'JetMatrix':

        rows = [list(row) for row in rows]
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise MixedDimensionsError(f'Ragged rows of widths {sorted(widths)}')
        return cls(len(rows), widths.pop(), [entry for row in rows for entry in row], algebra)

    @classmethod
    def from_columns(cls, columns: Iterable[JetVector]) -> 'JetMatrix':

        columns = list(columns)
        return cls.from_rows([[column[i] for column in columns] for i in range(len(columns[0]))])

    @classmethod
    def from_numpy(cls, array: np.ndarray, algebra: AlgebraSpec) -> 'JetMatrix':
        return cls(array.shape[0], array.shape[1], [complex(value) for value in array.ravel()], algebra)

    @classmethod
    def identity(cls, n: int, algebra: AlgebraSpec | None = None) -> 'JetMatrix':
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)], algebra)

    @classmethod
    def zeros(cls, rows: int, cols: int, algebra: AlgebraSpec | None = None) -> 'JetMatrix':
        return cls(rows, cols, [0] * (rows * cols), algebra)

    @property
    def algebra(self) -> AlgebraSpec:
        return _infer_algebra(self.entries, None)

    @property
    def backend(self) -> Backend:
        return self.entries[0].backend

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.n, self.cols.n

    def is_square(self) -> bool:
        return self.rows.n == self.cols.n

    def __getitem__(self, position: tuple[int, int]) -> SmoothComplex:
        i, j = position
        return self.entries[i * self.cols.n + j]

    def row(self, i: int) -> JetVector:
        return JetVector(self[i, j] for j in self.cols.indices())

    def column(self, j: int) -> JetVector:
        return JetVector(self[i, j] for i in self.rows.indices())

    def map_entries(self, function: Callable[[SmoothComplex], SmoothComplex]) -> 'JetMatrix':
        return JetMatrix(self.rows.n, self.cols.n, [function(entry) for entry in self.entries])

    def transpose(self) -> 'JetMatrix':
        return JetMatrix(self.cols.n, self.rows.n, [self[i, j] for j in self.cols.indices() for i in self.rows.indices()])

    def dagger(self) -> 'JetMatrix':
        return self.transpose().map_entries(SmoothComplex.conj)

    def trace(self) -> SmoothComplex:

        if not self.is_square():
            raise NotSquareError(f'Trace of a {self.shape} matrix')
        return reduce(operator.add, (self[i, i] for i in self.rows.indices()))

    def standard(self) -> 'JetMatrix':
        return self.map_entries(SmoothComplex.standard)

    def standard_array(self) -> np.ndarray:
        return np.array([entry.standard_complex() for entry in self.entries], dtype = complex).reshape(self.shape)

    def is_global(self) -> bool:
        return all(entry.is_global() for entry in self.entries)

    def _same_shape(self, other) -> bool:

        if not isinstance(other, JetMatrix):
            return False
        if other.shape != self.shape:
            raise MixedDimensionsError(f'Matrices of shape {self.shape} and {other.shape}')
        return True

    def __add__(self, other):

        if not self._same_shape(other):
            return NotImplemented
        return JetMatrix(self.rows.n, self.cols.n, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):

        if not self._same_shape(other):
            return NotImplemented
        return JetMatrix(self.rows.n, self.cols.n, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map_entries(operator.neg)

    def __mul__(self, scalar):

        if isinstance(scalar, (JetVector, JetMatrix)):
            return NotImplemented
        return self.map_entries(lambda entry: entry * scalar)

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __matmul__(self, other):

        match other:

            case JetVector():
                if len(other) != self.cols.n:
                    raise MixedDimensionsError(f'{self.shape} matrix applied to a {len(other)}-vector')
                return JetVector(_dot(self.row(i).entries, other.entries) for i in self.rows.indices())

            case JetMatrix():
                if other.rows.n != self.cols.n:
                    raise MixedDimensionsError(f'Cannot multiply {self.shape} by {other.shape}')
                columns = [other.column(j).entries for j in other.cols.indices()]
                rows = [self.row(i).entries for i in self.rows.indices()]
                return JetMatrix(self.rows.n, other.cols.n, [_dot(row, column) for row in rows for column in columns])

        return NotImplemented

    def __eq__(self, other):

        if not isinstance(other, JetMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f'JetMatrix({self.rows.n}x{self.cols.n}, {list(self.entries)})'


def _dot(left, right) -> SmoothComplex:
    return reduce(operator.add, (a * b for a, b in zip(left, right)))


def unit_vector(n: int, k: int, algebra: AlgebraSpec | None = None) -> JetVector:
    return JetVector([1 if i == k else 0 for i in range(n)], algebra)


def matrix_eq(A: JetMatrix, B: JetMatrix) -> InternalTruth:

    if A.shape != B.shape:
        raise MixedDimensionsError(f'Matrices of shape {A.shape} and {B.shape}')
    return InternalTruth.conjunction(complex_eq(a, b) for a, b in zip(A.entries, B.entries))


def vector_eq(x: JetVector, y: JetVector) -> InternalTruth:

    if len(x) != len(y):
        raise MixedDimensionsError(f'Vectors of dimension {len(x)} and {len(y)}')
    return InternalTruth.conjunction(complex_eq(a, b) for a, b in zip(x, y))


def commutator(A: JetMatrix, B: JetMatrix) -> JetMatrix:
    return A @ B - B @ A

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def finite_sum(family: Iterable[JetVector]) -> JetVector:
    '''Left fold of a non-empty family over a common cardinal index.'''

    family = list(family)
    if not family:
        raise EmptyFamilyError('Cannot sum an empty family')
    if len({len(vector) for vector in family}) != 1:
        raise MixedDimensionsError(f'Family mixes dimensions {sorted({len(v) for v in family})}')
    return reduce(operator.add, family)


def inner_product(x: JetVector, y: JetVector) -> SmoothComplex:
    '''<x, y> = sum conj(x_i) y_i; conjugate-linear in x, linear in y.'''

    if len(x) != len(y):
        raise MixedDimensionsError(f'Inner product of dimensions {len(x)} and {len(y)}')
    return _dot([a.conj() for a in x], y.entries)


def gram_matrix(vectors: list[JetVector]) -> JetMatrix:
    return JetMatrix.from_rows([[inner_product(u, v) for v in vectors] for u in vectors])


def determinant(A: JetMatrix) -> SmoothComplex:
    '''Laplace expansion along rows with memoized minors; exact over any Weil algebra.'''

    if not A.is_square():
        raise NotSquareError(f'Determinant of a {A.shape} matrix')
    n = A.rows.n

    @lru_cache(maxsize = None)
    def minor(row: int, columns: tuple[int, ...]) -> SmoothComplex:

        if row == n:
            return to_complex(1, A.algebra)
        total = None
        for position, column in enumerate(columns):
            if A[row, column].is_zero():
                continue
            rest = columns[:position] + columns[position + 1:]
            term = A[row, column] * minor(row + 1, rest)
            term = -term if position % 2 else term
            total = term if total is None else total + term
        return total if total is not None else to_complex(0, A.algebra)

    return minor(0, tuple(range(n)))


def solve(A: JetMatrix, b: JetVector) -> JetVector:
    '''Gauss-Jordan elimination choosing pivots apart from 0; raises `NotInvertibleError` when none exists.'''

    if not A.is_square() or A.rows.n != len(b):
        raise MixedDimensionsError(f'Cannot solve a {A.shape} system against a {len(b)}-vector')

    n = A.rows.n
    rows = [[A[i, j] for j in range(n)] + [b[i]] for i in range(n)]
    for k in range(n):
        candidates = [i for i in range(k, n) if complex_apart(rows[i][k], 0) is InternalTruth.Holds]
        if not candidates:
            raise NotInvertibleError(f'No pivot apart from 0 in column {k}')
        pivot = max(candidates, key = lambda i: abs(rows[i][k].standard_complex()))
        rows[k], rows[pivot] = rows[pivot], rows[k]

        inverse = rows[k][k].invert()
        rows[k] = [entry * inverse for entry in rows[k]]
        for i in range(n):
            if i != k and not rows[i][k].is_zero():
                factor = rows[i][k]
                rows[i] = [entry - factor * pivot_entry for entry, pivot_entry in zip(rows[i], rows[k])]

    return JetVector(row[n] for row in rows)


def linearly_independent(vectors: Iterable[JetVector]) -> InternalTruth:
    '''Holds iff the Gram determinant is apart from 0, Fails iff it is identically 0, else Undecided.'''

    vectors = list(vectors)
    if not vectors:
        return InternalTruth.Holds
    if len({len(v) for v in vectors}) != 1:
        raise MixedDimensionsError(f'Collection mixes dimensions {sorted({len(v) for v in vectors})}')

    gram_determinant = determinant(gram_matrix(vectors))
    if complex_apart(gram_determinant, 0) is InternalTruth.Holds:
        return InternalTruth.Holds
    if complex_eq(gram_determinant, 0) is InternalTruth.Holds:
        return InternalTruth.Fails
    return InternalTruth.Undecided


def gram_schmidt(basis: Iterable[JetVector]) -> list[JetVector]:
    '''Orthonormalizes in order; a squared norm not apart from 0 cannot be normalized.'''

    orthonormal = []
    for vector in basis:
        residual = vector
        for unit in orthonormal:
            residual = residual - unit * inner_product(unit, vector)

        norm_squared = inner_product(residual, residual).re
        if weil.apart(norm_squared, 0) is not InternalTruth.Holds:
            raise NotInvertibleNormError(f'Squared norm {weil.format_jet(norm_squared)} is not apart from 0')
        orthonormal.append(residual * weil.invert(weil.sqrt(norm_squared)))

    return orthonormal


def is_hermitian(A: JetMatrix) -> InternalTruth:

    if not A.is_square():
        raise NotSquareError(f'Hermiticity of a {A.shape} matrix')
    return matrix_eq(A, A.dagger())

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def check_orthonormal(vectors: list[JetVector]):

    for i, u in enumerate(vectors):
        for j, v in enumerate(vectors):
            if complex_eq(inner_product(u, v), 1 if i == j else 0) is not InternalTruth.Holds:
                raise NotOrthonormalError(f'Vectors {i} and {j} are not orthonormal')


def _standard_eigenpairs(A0: JetMatrix, basis: list[JetVector] | None) -> list[tuple]:
    '''Eigenpairs (value, vector) of a matrix without nilpotent entries.'''

    n = A0.rows.n
    algebra = A0.algebra

    if basis is not None:
        basis = [vector.standard() for vector in basis]
        check_orthonormal(basis)
        pairs = []
        for vector in basis:
            value = inner_product(vector, A0 @ vector)
            if vector_eq(A0 @ vector, vector * value) is not InternalTruth.Holds:
                raise NotABasisError('Supplied vector is not an eigenvector of the standard part')
            pairs.append((value.re.standard_part, vector))
        return pairs

    off_diagonal = [A0[i, j] for i in range(n) for j in range(n) if i != j]
    if all(entry.is_zero() for entry in off_diagonal):
        return [(A0[i, i].re.standard_part, unit_vector(n, i, algebra)) for i in range(n)]

    if A0.backend is Backend.Approx:
        values, vectors = np.linalg.eigh(A0.standard_array())
        return [(float(values[k]), JetVector([complex(c) for c in vectors[:, k]], algebra)) for k in range(n)]

    if n != 2:
        raise UnsupportedExactError('Exact standard-part eigensolver covers diagonal and 2x2 matrices; supply a basis')

    a, d, b = A0[0, 0].re.standard_part, A0[1, 1].re.standard_part, A0[0, 1]
    root = weil._exact_root(((a - d) / 2) ** 2 + b.abs2().standard_part)
    if root is None:
        raise UnsupportedExactError('Eigenvalues of the standard part are irrational')

    pairs = []
    for value in ((a + d) / 2 - root, (a + d) / 2 + root):
        vector = JetVector([b, to_complex(value - a, algebra)])
        norm = weil._exact_root(inner_product(vector, vector).re.standard_part)
        if norm is None:
            raise UnsupportedExactError('Eigenvector norms of the standard part are irrational')
        pairs.append((value, vector * (1 / norm)))
    return pairs


def eigen_hermitian(A: JetMatrix, basis: list[JetVector] | None = None) -> list[EigenPair]:
    '''Standard-part eigendecomposition plus Rayleigh-Schrodinger corrections, which terminate by nilpotency.

    With intermediate normalization <v0_i, v_i> = 1 the corrections solve
        lambda_i = <v0_i, A v_i>
        v_i = v0_i + sum_(j != i) v0_j <v0_j, N v_i - (lambda_i - lambda0_i) v_i> / (lambda0_i - lambda0_j)
    where N = A - std(A); each sweep gains one order, so nilpotency order many sweeps are exact.
    Eigenvectors are renormalized at the end.
    '''

    if not A.is_square():
        raise NotSquareError(f'Eigen-decomposition of a {A.shape} matrix')
    if is_hermitian(A) is InternalTruth.Fails:
        raise NotHermitianError('Matrix is decidedly not hermitian')

    A0 = A.standard()
    N = A - A0
    pairs = sorted(_standard_eigenpairs(A0, basis), key = lambda pair: pair[0])
    values = [value for value, _ in pairs]

    if basis is None:
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                if abs(values[i] - values[j]) <= (EigenDegeneracyTolerance if A.backend is Backend.Approx else 0):
                    raise DegenerateStandardPartError(f'Standard-part eigenvalues {values[i]} and {values[j]} collide')

    sweeps = A.algebra.nilpotency_order()
    results = []
    for i, (value0, vector0) in enumerate(pairs):
        value, vector = to_complex(value0, A.algebra), vector0
        for sweep in range(sweeps):
            value = inner_product(vector0, A @ vector)
            defect = N @ vector - vector * (value - value0)
            correction = vector0
            for j, (other_value, other_vector) in enumerate(pairs):
                if j == i:
                    continue
                overlap = inner_product(other_vector, defect)
                gap = value0 - other_value
                if (gap == 0 if A.backend is Backend.Exact else abs(gap) <= EigenDegeneracyTolerance):
                    if complex_eq(overlap, 0) is not InternalTruth.Holds:
                        raise DegenerateStandardPartError(f'Perturbation couples degenerate eigenvectors {i} and {j}')
                    continue
                correction = correction + other_vector * (overlap * (1 / gap))
            vector = correction
            logging.debug(f'Eigenpair {i}, sweep {sweep}: value {value!r}')

        value = inner_product(vector0, A @ vector)
        norm = weil.sqrt(inner_product(vector, vector).re)
        results.append(EigenPair(SmoothComplex(value.re), vector * weil.invert(norm)))

    return results

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def tensor(x, y):
    '''Kronecker product of two vectors or two matrices, row-major index i*m + j.'''

    match x, y:

        case JetVector(), JetVector():
            return JetVector(a * b for a in x for b in y)

        case JetMatrix(), JetMatrix():
            rows, cols = x.rows.product(y.rows).n, x.cols.product(y.cols).n
            entries = [x[i1, j1] * y[i2, j2]
                       for i1 in x.rows.indices() for i2 in y.rows.indices()
                       for j1 in x.cols.indices() for j2 in y.cols.indices()]
            return JetMatrix(rows, cols, entries)

    raise TypeError(f'Cannot tensor {type(x).__name__} with {type(y).__name__}')


def _probe_scalar(backend: Backend):

    match backend:

        case Backend.Exact:
            return LinearityProbeScalar

        case _:
            return float(LinearityProbeScalar)


def matrix_of(linear_map: Callable[[JetVector], JetVector], basis_in: list[JetVector], basis_out: list[JetVector]) -> JetMatrix:
    '''Column j holds the coordinates of linear_map(basis_in[j]) in basis_out.'''

    basis_in, basis_out = list(basis_in), list(basis_out)
    first, last = basis_in[0], basis_in[-1]
    scalar = _probe_scalar(first[0].backend)
    imaginary = to_complex(1j, first.algebra)

    probes = (
        ('additivity', linear_map(first + last), linear_map(first) + linear_map(last)),
        ('homogeneity', linear_map(first * scalar), linear_map(first) * scalar),
        ('complex homogeneity', linear_map(first * imaginary), linear_map(first) * imaginary),
    )
    for name, left, right in probes:
        if vector_eq(left, right) is not InternalTruth.Holds:
            raise NotLinearError(f'Map fails the {name} probe')

    output = JetMatrix.from_columns(basis_out)
    columns = [solve(output, linear_map(vector)) for vector in basis_in]
    return JetMatrix.from_columns(columns)


def change_of_basis(basis_a: list[JetVector], basis_b: list[JetVector]) -> JetMatrix:
    return matrix_of(lambda vector: vector, basis_a, basis_b)


def dimension(basis: list[JetVector]) -> CardinalIndex:
    '''The n with V = C^[n] presented by this basis; raises `NotABasisError` unless it is independent and spanning.'''

    basis = list(basis)
    if not basis:
        raise NotABasisError('Empty collection')
    if linearly_independent(basis) is not InternalTruth.Holds:
        raise NotABasisError('Collection is not decidedly linearly independent')
    if len(basis) != len(basis[0]):
        raise NotABasisError(f'{len(basis)} vectors do not span C^[{len(basis[0])}]')
    return CardinalIndex(len(basis))
