'''Represents typehintings shared by the smooth modules.

Classes:

    Backend(Enum)
    InternalTruth(Enum)
    JetKind(Enum)
    GroupKind(Enum)
    AxiomResult(NamedTuple)
    AxiomReport(NamedTuple)
    EigenPair(NamedTuple)
    EigenRow(NamedTuple)
    EigenTable(NamedTuple)'''

from fractions import Fraction
from typing import Iterable, NamedTuple
from enum import Enum


GlobalReal = Fraction | float


class Backend(Enum):
    '''
    Numeric backend of a Weil algebra.

    :parameter `Exact`: arbitrary-precision rationals (`fractions.Fraction`)
    :parameter `Approx`: 64-bit floats
    '''

    Exact = 'exact'
    Approx = 'approx'

    @classmethod
    def parse(cls, name: 'str | Backend') -> 'Backend':

        if isinstance(name, Backend):
            return name
        return cls(name.strip().lower())


class InternalTruth(Enum):
    '''
    Externalized verdict of an internal predicate.

    `Undecided` is reserved for differences that are nonzero but nilpotent:
    such a difference is neither provably zero nor apart from zero.
    '''

    Holds = 'holds'
    Fails = 'fails'
    Undecided = 'undecided'

    def __invert__(self) -> 'InternalTruth':

        match self:

            case InternalTruth.Holds:
                return InternalTruth.Fails

            case InternalTruth.Fails:
                return InternalTruth.Holds

            case _:
                return InternalTruth.Undecided

    def __and__(self, other: 'InternalTruth') -> 'InternalTruth':
        return InternalTruth.conjunction((self, other))

    def __or__(self, other: 'InternalTruth') -> 'InternalTruth':
        return InternalTruth.disjunction((self, other))

    @staticmethod
    def conjunction(verdicts: Iterable['InternalTruth']) -> 'InternalTruth':
        '''Fails if any verdict fails, Holds if all hold, else Undecided.'''

        verdicts = tuple(verdicts)
        if InternalTruth.Fails in verdicts:
            return InternalTruth.Fails
        if all(verdict is InternalTruth.Holds for verdict in verdicts):
            return InternalTruth.Holds
        return InternalTruth.Undecided

    @staticmethod
    def disjunction(verdicts: Iterable['InternalTruth']) -> 'InternalTruth':

        verdicts = tuple(verdicts)
        if InternalTruth.Holds in verdicts:
            return InternalTruth.Holds
        if all(verdict is InternalTruth.Fails for verdict in verdicts):
            return InternalTruth.Fails
        return InternalTruth.Undecided


class JetKind(Enum):

    Zero = 'zero'
    FirstOrder = 'first-order'
    Nilpotent = 'nilpotent'
    Invertible = 'invertible'


class GroupKind(Enum):

    SO = 'SO'
    U = 'U'


class AxiomResult(NamedTuple):
    '''
    Outcome of checking one schema over a finite Heyting algebra.

    :parameter `name`: human readable name of the schema
    :parameter `formula`: schema text in the formula grammar, variables `a`, `b`, `c`
    :parameter `valid`: True if every instance evaluates to top
    :parameter `counterexample`: first failing assignment, `None` when valid
    '''

    name: str
    formula: str
    valid: bool
    counterexample: dict | None = None


class AxiomReport(NamedTuple):


    algebra: str
    schemas: tuple[AxiomResult, ...]
    classical: tuple[AxiomResult, ...]

    @property
    def all_schemas_valid(self) -> bool:
        return all(result.valid for result in self.schemas)


class EigenPair(NamedTuple):


    value: 'SmoothComplex'
    vector: 'JetVector'


class EigenRow(NamedTuple):
    '''
    One row of the two-electron eigen-table.

    :parameter `label`: ket notation of the printed eigenvector
    :parameter `eigenvector`: `StateVector`, unnormalized as printed
    :parameter `energy`: energy computed by applying the Hamiltonian
    :parameter `s_squared`: eigenvalue of total spin squared
    :parameter `s_z`: eigenvalue of total spin along z
    :parameter `printed_energy`: the energy expression as conventionally printed
    '''

    label: str
    eigenvector: 'StateVector'
    energy: GlobalReal
    s_squared: GlobalReal
    s_z: GlobalReal
    printed_energy: str


class EigenTable(NamedTuple):


    rows: tuple[EigenRow, ...]
    note: str
