'''Two spin-1/2 particles with a spin-spin interaction.

The product basis of C^4 is ordered |uu>, |ud>, |du>, |dd> (row-major tensor index),
with up = e_0 and down = e_1 on each factor.

Classes:

    StateVector

Functions:

    named_state, build_hamiltonian, total_spin_ops, eigentable
    evolve, is_physical, is_zero, born, rotation, trajectory
'''

import logging
from dataclasses import dataclass
from fractions import Fraction

import weil
from errors import MalformedInputError, MixedDimensionsError, NotGlobalError, NotPhysicalError
from lie import AlgebraElement, Group, GroupElement, PhysicalConstants, exp_map, so3_basis, spin_homomorphism, spin_rep
from linalg import JetMatrix, JetVector, check_orthonormal, complex_eq, inner_product, tensor, to_complex, vector_eq
from type_hintings import EigenRow, EigenTable, GlobalReal, InternalTruth
from weil import Jet


ENERGY_NOTE = ('Energies are computed by applying H to each printed eigenvector. The printed column gives '
               'E1 + E2 - alpha*hbar/2 (triplet) and E1 + E2 + 3*alpha*hbar/2 (singlet); with S = hbar*sigma/2 the '
               'computed values are E1 + E2 - alpha*hbar^2/4 and E1 + E2 + 3*alpha*hbar^2/4.')


@dataclass(frozen = True)
class StateVector:
    '''Ket in C^2 or C^4 together with the constants of the model it belongs to.'''

    vector: JetVector
    constants: PhysicalConstants

    def __add__(self, other: 'StateVector') -> 'StateVector':
        return StateVector(self.vector + other.vector, self.constants)

    def __sub__(self, other: 'StateVector') -> 'StateVector':
        return StateVector(self.vector - other.vector, self.constants)

    def __mul__(self, scalar) -> 'StateVector':
        return StateVector(self.vector * scalar, self.constants)

    def __rmul__(self, scalar) -> 'StateVector':
        return self.__mul__(scalar)

    def __len__(self):
        return len(self.vector)

    def tensor(self, other: 'StateVector') -> 'StateVector':
        return StateVector(tensor(self.vector, other.vector), self.constants)

    def norm_squared(self) -> Jet:
        return inner_product(self.vector, self.vector).re


def _vector_of(state) -> JetVector:
    return state.vector if isinstance(state, StateVector) else state


def named_state(name: str, c: PhysicalConstants) -> StateVector:
    '''Kets by name: `up`, `down`, product states `uu`, `ud`, `du`, `dd`, `singlet` and `triplet`
    (the symmetric combination |ud> + |du>), unnormalized as they are usually written.'''

    match name.strip().lower():

        case 'up' | 'u':
            entries = [1, 0]

        case 'down' | 'd':
            entries = [0, 1]

        case 'uu':
            entries = [1, 0, 0, 0]

        case 'ud':
            entries = [0, 1, 0, 0]

        case 'du':
            entries = [0, 0, 1, 0]

        case 'dd':
            entries = [0, 0, 0, 1]

        case 'triplet':
            entries = [0, 1, 1, 0]

        case 'singlet':
            entries = [0, 1, -1, 0]

        case _:
            raise MalformedInputError(f'Unknown state {name!r}')

    return StateVector(JetVector(entries, c.algebra), c)


def product_basis(c: PhysicalConstants, particles: int = 2) -> list[StateVector]:

    names = ('up', 'down') if particles == 1 else ('uu', 'ud', 'du', 'dd')
    return [named_state(name, c) for name in names]

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def _two_particle_spins(c: PhysicalConstants) -> tuple[list[JetMatrix], list[JetMatrix]]:

    identity = JetMatrix.identity(2, c.algebra)
    spins = spin_rep(c)
    return [tensor(S, identity) for S in spins], [tensor(identity, S) for S in spins]


def build_hamiltonian(c: PhysicalConstants) -> JetMatrix:
    '''H = (E1 + E2) 1 - alpha * sum_i (S_i x 1)(1 x S_i) on C^4.'''

    first, second = _two_particle_spins(c)
    coupling = JetMatrix.zeros(4, 4, c.algebra)
    for S1, S2 in zip(first, second):
        coupling = coupling + S1 @ S2
    return JetMatrix.identity(4, c.algebra) * (c.e1 + c.e2) - coupling * c.alpha


def total_spin_ops(c: PhysicalConstants) -> tuple[JetMatrix, JetMatrix]:
    '''Returns (S^2, S_z) of the total spin S = S_1 + S_2.'''

    first, second = _two_particle_spins(c)
    totals = [S1 + S2 for S1, S2 in zip(first, second)]
    squared = JetMatrix.zeros(4, 4, c.algebra)
    for S in totals:
        squared = squared + S @ S
    return squared, totals[2]


def _eigenvalue_of(M: JetMatrix, v: JetVector) -> GlobalReal:
    '''Eigenvalue read from the first nonzero component of v, checked on the whole residual.'''

    image = M @ v
    pivot = next(i for i, entry in enumerate(v) if not entry.is_zero())
    value = (image[pivot] / v[pivot]).re.standard_part
    if vector_eq(image, v * value) is not InternalTruth.Holds:
        raise MalformedInputError(f'Vector is not an eigenvector, residual {image - v * value!r}')
    return value


def eigentable(c: PhysicalConstants) -> EigenTable:
    '''Energy, total spin squared and total S_z for the triplet and singlet kets.'''

    if c.alpha == 0:
        raise MalformedInputError('The eigen-table needs a coupling alpha apart from 0')

    H = build_hamiltonian(c)
    S_sq, S_z = total_spin_ops(c)
    printed = (
        ('|↑⟩|↑⟩', 'uu', 'E1 + E2 - αħ/2'),
        ('|↑⟩|↓⟩ + |↓⟩|↑⟩', 'triplet', 'E1 + E2 - αħ/2'),
        ('|↓⟩|↓⟩', 'dd', 'E1 + E2 - αħ/2'),
        ('|↑⟩|↓⟩ - |↓⟩|↑⟩', 'singlet', 'E1 + E2 + 3αħ/2'),
    )

    rows = []
    for label, name, printed_energy in printed:
        state = named_state(name, c)
        rows.append(EigenRow(label, state,
                             _eigenvalue_of(H, state.vector),
                             _eigenvalue_of(S_sq, state.vector),
                             _eigenvalue_of(S_z, state.vector),
                             printed_energy))
        logging.info(f'Eigen-table row {label}: energy {weil.format_scalar(rows[-1].energy)}')

    return EigenTable(tuple(rows), ENERGY_NOTE)

#------------------------------------------------------------------------------------------------------------------------------------------------------------------------------

def _time_jet(t, c: PhysicalConstants) -> Jet:
    return t if isinstance(t, Jet) else Jet.constant(t, c.algebra)


def propagator(c: PhysicalConstants, t) -> GroupElement:
    '''U(t) = exp(-(i/hbar) t H); t may be a jet.'''

    factor = to_complex(-1j, c.algebra) * _time_jet(t, c) * (1 / c.hbar)
    return exp_map(AlgebraElement(Group.unitary(4), build_hamiltonian(c) * factor))


def evolve(psi0: StateVector, c: PhysicalConstants, t) -> StateVector:
    '''Schrodinger evolution psi_t = U(t) psi_0 of a two-spin state.'''

    if len(psi0) != 4:
        raise MixedDimensionsError(f'Evolution acts on two-spin states in C^4, got dimension {len(psi0)}')
    return StateVector(propagator(c, t) @ psi0.vector, c)


def is_physical(psi) -> InternalTruth:
    '''A state is physical iff its squared length is invertible.'''

    vector = _vector_of(psi)
    return weil.apart(inner_product(vector, vector).re, 0)


def is_zero(psi) -> InternalTruth:
    return InternalTruth.conjunction(complex_eq(entry, 0) for entry in _vector_of(psi))


def born(psi, basis) -> list[GlobalReal]:
    '''Outcome probabilities |<e_i, psi>|^2 / <psi, psi> of a specified experiment.

    Exact inputs give exact rationals. Raises `NotPhysicalError`, `NotGlobalError` when a
    nilpotent coefficient makes the experiment ill-defined, and `NotOrthonormalError`.'''

    vector = _vector_of(psi)
    basis = [_vector_of(element) for element in basis]

    if is_physical(vector) is not InternalTruth.Holds:
        raise NotPhysicalError('State has no invertible squared length')
    if not vector.is_global() or not all(element.is_global() for element in basis):
        raise NotGlobalError('Nilpotent coefficients leave the experiment unspecified; no global probabilities exist')
    check_orthonormal(basis)

    norm = inner_product(vector, vector).re.standard_part
    return [inner_product(element, vector).abs2().standard_part / norm for element in basis]


def rotation(axis: int | str, angle, c: PhysicalConstants) -> GroupElement:
    '''Spin-1/2 rotation exp(angle * mu(L_axis)) on C^2; the angle may be a jet.'''

    index = axis
    if isinstance(axis, str):
        index = {'x': 1, 'y': 2, 'z': 3, '1': 1, '2': 2, '3': 3}.get(axis.strip().lower())
    if index not in (1, 2, 3):
        raise MalformedInputError(f'Rotation axis must be 1, 2, 3 or x, y, z, got {axis!r}')

    generator = spin_homomorphism(so3_basis(c.backend)[index - 1], c)
    return exp_map(generator * _time_jet(angle, c))


def trajectory(psi0: StateVector, c: PhysicalConstants, T, steps: int, basis=None) -> list[tuple[GlobalReal, list[GlobalReal]]]:
    '''Born probabilities in `basis` (the product basis by default) at t_k = k*T/steps, k = 0..steps.'''

    if steps < 1:
        raise MalformedInputError(f'steps must be at least 1, got {steps}')

    basis = basis or product_basis(c)
    step = Fraction(T) / steps if isinstance(T, (int, Fraction)) else T / steps
    samples = []
    for k in range(steps + 1):
        t = weil.coerce_scalar(k * step, c.backend)
        samples.append((t, born(evolve(psi0, c, t), basis)))
    return samples
