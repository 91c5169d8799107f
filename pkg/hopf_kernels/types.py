import enum
import functools
from typing import *

if TYPE_CHECKING:
    from hopf_kernels.exactmath.field import CycloField, FieldElem

Vector = Tuple['FieldElem', ...]  # coordinates of an element of H (or of a functional on H) in the fixed basis


class Matrix(NamedTuple):
    field: 'CycloField'
    nrows: int
    ncols: int
    entries: Tuple[Tuple['FieldElem', ...], ...]  # row-major


class Subspace(NamedTuple):
    """Subspace is a subspace of :math:`K^n` given by its canonical reduced row-echelon basis.

    Two subspaces are equal iff their bases are equal entrywise, so ``==`` on this tuple is the mathematical equality.
    """

    field: 'CycloField'
    ambient_dim: int
    basis: Matrix
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> List[Vector]:
        return [row for row in self.basis.entries]


class HopfAlgebraData:
    """HopfAlgebraData is a finite-dimensional Hopf algebra given by structure constants in a fixed basis :math:`b_0, \\dots, b_{n-1}`.

    - ``mult[i][j][k]``: :math:`b_i b_j = \\sum_k m_{ijk} b_k`
    - ``unit[i]``: :math:`1 = \\sum_i u_i b_i`
    - ``comult[i][j][k]``: :math:`\\Delta(b_i) = \\sum_{j,k} c_{ijk} b_j \\otimes b_k`
    - ``counit[i]``: :math:`\\varepsilon(b_i)`
    - ``antipode``: the row ``i`` is :math:`S(b_i)`
    """

    field: 'CycloField'
    dim: int
    mult: Tuple[Tuple[Vector, ...], ...]
    unit: Vector
    comult: Tuple[Tuple[Vector, ...], ...]
    counit: Vector
    antipode: Matrix
    name: str

    def __init__(self, *, field: 'CycloField', dim: int, mult: Sequence[Sequence[Sequence['FieldElem']]], unit: Sequence['FieldElem'], comult: Sequence[Sequence[Sequence['FieldElem']]], counit: Sequence['FieldElem'], antipode: Matrix, name: str = 'H'):
        self.field = field
        self.dim = dim
        self.mult = tuple(tuple(tuple(row) for row in plane) for plane in mult)
        self.unit = tuple(unit)
        self.comult = tuple(tuple(tuple(row) for row in plane) for plane in comult)
        self.counit = tuple(counit)
        self.antipode = antipode
        self.name = name

    def __repr__(self) -> str:
        return f"""HopfAlgebraData(name={self.name!r}, dim={self.dim}, N={self.field.order})"""

    @functools.cached_property
    def mult_table(self) -> Tuple[Tuple[Tuple[Tuple[int, 'FieldElem'], ...], ...], ...]:
        """``mult_table[i][j]`` lists the nonzero ``(k, m[i][j][k])``."""

        return tuple(tuple(tuple((k, c) for k, c in enumerate(self.mult[i][j]) if c) for j in range(self.dim)) for i in range(self.dim))

    @functools.cached_property
    def comult_table(self) -> Tuple[Tuple[Tuple[int, int, 'FieldElem'], ...], ...]:
        """``comult_table[i]`` lists the nonzero ``(j, k, c[i][j][k])``."""

        return tuple(tuple((j, k, c) for j in range(self.dim) for k, c in enumerate(self.comult[i][j]) if c) for i in range(self.dim))

    @functools.cached_property
    def antipode_table(self) -> Tuple[Tuple[Tuple[int, 'FieldElem'], ...], ...]:
        return tuple(tuple((j, c) for j, c in enumerate(row) if c) for row in self.antipode.entries)


class HopfMorphism(NamedTuple):
    source: HopfAlgebraData
    target: HopfAlgebraData
    matrix: Matrix  # row i is the image of the i-th basis element of source


class SubalgebraFlags(NamedTuple):
    is_subalgebra: bool
    is_subcoalgebra: bool
    contains_unit: bool
    antipode_stable: bool
    is_normal: bool

    @property
    def is_hopf(self) -> bool:
        return self.is_subalgebra and self.is_subcoalgebra and self.contains_unit and self.antipode_stable


class HopfSubalgebraHandle(NamedTuple):
    parent: HopfAlgebraData
    space: Subspace
    flags: SubalgebraFlags

    @property
    def dim(self) -> int:
        return self.space.dim


class QuotientData(NamedTuple):
    parent: HopfAlgebraData
    ideal: Subspace
    quotient: HopfAlgebraData
    projection: Matrix  # dim(parent) x dim(quotient)
    section: Matrix  # dim(quotient) x dim(parent)


class AxiomCheck(NamedTuple):
    name: str
    passed: bool
    witness: Optional[Tuple[int, ...]]


class AxiomReport(NamedTuple):
    algebra: str
    checks: List[AxiomCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if not check.passed]


class Character(NamedTuple):
    """Character is a linear functional on ``algebra`` given by its values on the basis.

    A character of :math:`H^*` is stored with ``algebra`` the dual of :math:`H`, so ``values`` are the coordinates of an element of :math:`H`.
    """

    algebra: HopfAlgebraData
    values: Vector
    degree: 'FieldElem'


class IrrBlock(NamedTuple):
    idempotent: Vector
    degree: int
    character: Character


class IrrData(NamedTuple):
    algebra: HopfAlgebraData
    blocks: List[IrrBlock]

    @property
    def characters(self) -> List[Character]:
        return [block.character for block in self.blocks]


class Representation(NamedTuple):
    algebra: HopfAlgebraData
    module_dim: int
    matrices: Tuple[Matrix, ...]  # matrices[i][s][r] is the s-th coordinate of b_i . e_r


class KernelReport(NamedTuple):
    character_index: int
    character: Character
    ker_set: Tuple[int, ...]
    kernel_space: Subspace
    sm_space: Subspace
    oracle_space: Subspace
    ideal_space: Subspace
    hker_space: Subspace
    quotient_kernel_space: Subspace
    matches_hopf_kernel: bool
    matches_sm_oracle: bool
    matches_quotient_kernel: bool
    is_normal: bool

    @property
    def passed(self) -> bool:
        return self.matches_hopf_kernel and self.matches_sm_oracle and self.matches_quotient_kernel


class CentralData(NamedTuple):
    z_hat_dual: Subspace  # in the coordinates of H^*
    z_hat: Subspace  # in the coordinates of H
    partition_y: List[Tuple[int, ...]]  # indices into Irr(H^*)
    partition_x: List[Tuple[int, ...]]  # indices into Irr(H)
    e_idempotents: List[Vector]  # elements of H^*
    e_hats: List[Vector]  # elements of H
    f_elements: List[Vector]  # elements of H^*
    f_images: List[Vector]  # phi(f_i), elements of H


class LatticeData(NamedTuple):
    algebra: HopfAlgebraData
    subalgebras: List[HopfSubalgebraHandle]
    normal_flags: List[bool]
    dual_correspondence: Dict[int, int]  # index of normal K -> index of (H//K)^* in the lattice of the dual


class PropertyNResult(NamedTuple):
    holds: bool
    non_normal: Tuple[int, ...]  # indices into Irr(H) whose kernel is not normal


class Finding(NamedTuple):
    name: str
    passed: bool
    witness: Dict[str, Any]
    gating: bool = True


class GroupTable(NamedTuple):
    name: str
    order: int
    table: Tuple[Tuple[int, ...], ...]  # table[a][b] is the index of a * b; index 0 is the identity
    inverse: Tuple[int, ...]
    exponent: int


class OutputFormat(enum.Enum):
    TEXT = 'text'
    JSON = 'json'


class HopfKernelsError(RuntimeError):
    pass


class ExactMathError(HopfKernelsError):
    pass


class FieldMismatchError(ExactMathError):
    pass


class FieldDivisionError(ExactMathError, ZeroDivisionError):
    pass


class ShapeError(ExactMathError, ValueError):
    pass


class InputError(HopfKernelsError):
    """InputError and its subclasses mean that the given algebra or arguments are invalid.
    """

    pass


class ParseError(InputError):
    pass


class AxiomError(InputError):
    report: Optional[AxiomReport]

    def __init__(self, message: str, *, report: Optional[AxiomReport] = None):
        super().__init__(message)
        self.report = report


class NotSemisimpleError(InputError):
    pass


class IntegralError(InputError):
    pass


class HopfIdealError(InputError):
    conditions: List[str]

    def __init__(self, message: str, *, conditions: Sequence[str] = ()):
        super().__init__(message)
        self.conditions = list(conditions)


class MorphismError(InputError):
    condition: str
    witness: Tuple[int, ...]

    def __init__(self, message: str, *, condition: str, witness: Tuple[int, ...] = ()):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class InvalidGroupTableError(InputError):
    pass


class NotHopfSubalgebraError(InputError):
    pass


class NotNormalError(InputError):
    pass


class DimensionLimitError(InputError):
    pass


class DecompositionError(InputError):
    pass


class FieldTooSmallError(HopfKernelsError):
    def __init__(self, order: int, detail: str = ''):
        message = f"""field Q(zeta_{order}) too small; re-supply the algebra with larger N"""
        if detail:
            message += f""" ({detail})"""
        super().__init__(message)
        self.order = order


class NumericLocationError(HopfKernelsError):
    pass


class CertificationError(HopfKernelsError):
    pass
