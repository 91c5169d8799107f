"""
the module for irreducible characters and the character ring

The irreducible characters of :math:`H` come from the blocks :math:`H \\xi` of the central primitive idempotents.
The irreducible characters of :math:`H^*` are computed on the dual algebra, so that their values are the coordinates of elements of :math:`H`.

For example, for the group algebra of :math:`C_2` with the basis :math:`(1, g)`
::

    trivial: (1, 1)
    sign:    (1, -1)
"""

import math
from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.hopf.dual import dual
from hopf_kernels.hopf.quotient import ideal_generated_by_positive_part
from hopf_kernels.rep.eigen import DEFAULT_PRECISION
from hopf_kernels.rep.idempotents import central_primitive_idempotents
from hopf_kernels.rep.modules import quotient_module_representation, representation_character
from hopf_kernels.types import *

logger = getLogger(__name__)


def make_character(h: HopfAlgebraData, values: Sequence[FieldElem]) -> Character:
    values = tuple(values)
    if len(values) != h.dim:
        raise ShapeError(f"""a character of {h.name} needs {h.dim} values, got {len(values)}""")
    return Character(algebra=h, values=values, degree=linalg.vec_dot(h.unit, values))


def _block_character(h: HopfAlgebraData, xi: Vector) -> Tuple[int, Character]:
    block = linalg.span(h.field, h.dim, [alg.multiply(h, alg.basis(h, i), xi) for i in range(h.dim)])
    degree = math.isqrt(block.dim)
    if degree * degree != block.dim:
        raise FieldTooSmallError(h.field.order, f"""a block of {h.name} has dimension {block.dim}, which is not a square""")
    basis = block.vectors()
    values = []
    for i in range(h.dim):
        b = alg.basis(h, i)
        trace = h.field.zero()
        for e, p in zip(basis, block.pivots):
            trace = trace + alg.multiply(h, b, e)[p]
        values.append(trace / degree)
    return degree, make_character(h, values)


def irr_characters(h: HopfAlgebraData, *, precision: int = DEFAULT_PRECISION) -> IrrData:
    """irr_characters returns the blocks of a semisimple ``h``: the trivial block first, then by degree.

    :raises FieldTooSmallError:
    :raises NumericLocationError:
    """

    blocks = []
    for xi in central_primitive_idempotents(h, precision=precision):
        degree, character = _block_character(h, xi)
        blocks.append(IrrBlock(idempotent=xi, degree=degree, character=character))

    def key(block: IrrBlock) -> Tuple[Any, ...]:
        trivial = block.character.values == h.counit
        return (not trivial, block.degree, tuple(c.sort_key() for c in block.idempotent))

    blocks.sort(key=key)
    if sum(block.degree**2 for block in blocks) != h.dim:
        raise CertificationError(f"""{h.name}: the squares of the degrees do not add up to the dimension""")
    logger.info('%s: Irr degrees = %s', h.name, [block.degree for block in blocks])
    return IrrData(algebra=h, blocks=blocks)


def irr_cocharacters(h: HopfAlgebraData, *, precision: int = DEFAULT_PRECISION) -> IrrData:
    """irr_cocharacters returns the irreducible characters of the dual; the ``values`` of each character are the coordinates of an element of ``h``.
    """

    return irr_characters(dual(h), precision=precision)


def char_eval(chi: Character, d: Sequence[FieldElem]) -> FieldElem:
    return linalg.vec_dot(d, chi.values)


def char_product(a: Character, b: Character) -> Character:
    """char_product is :math:`(ab)(x) = \\sum a(x_1) b(x_2)`."""

    h = a.algebra
    values = []
    for i in range(h.dim):
        acc = h.field.zero()
        for j, k, c in h.comult_table[i]:
            if a.values[j] and b.values[k]:
                acc = acc + c * a.values[j] * b.values[k]
        values.append(acc)
    return make_character(h, values)


def char_star(a: Character) -> Character:
    """char_star is :math:`a \\circ S`."""

    h = a.algebra
    return make_character(h, linalg.mat_vec(h.antipode, a.values))


def char_sum(a: Character, b: Character) -> Character:
    return make_character(a.algebra, linalg.vec_add(a.values, b.values))


def char_power(a: Character, k: int) -> Character:
    result = make_character(a.algebra, a.algebra.counit)
    for _ in range(k):
        result = char_product(result, a)
    return result


def char_ops(a: Character, b: Optional[Character], op: str) -> Character:
    if op == 'product':
        assert b is not None
        return char_product(a, b)
    elif op == 'star':
        return char_star(a)
    elif op == 'sum':
        assert b is not None
        return char_sum(a, b)
    else:
        raise ValueError(f"""invalid operation: {repr(op)}""")


def combination(irr: IrrData, multiplicities: Sequence[int]) -> Character:
    """
    :raises DecompositionError: if the multiplicities are not nonnegative integers of the right length
    """

    h = irr.algebra
    if len(multiplicities) != len(irr.blocks) or any(m < 0 for m in multiplicities):
        raise DecompositionError(f"""{h.name}: expected {len(irr.blocks)} nonnegative multiplicities, got {list(multiplicities)}""")
    values = linalg.linear_combination(h.field, h.dim, [h.field.rational(m) for m in multiplicities], [chi.values for chi in irr.characters])
    return make_character(h, values)


def decompose(c: Character, irr: IrrData) -> List[int]:
    """decompose writes ``c`` as a combination of the irreducible characters.

    :raises DecompositionError: if the coefficients are not nonnegative integers
    """

    h = irr.algebra
    # chi_j(xi_i) is deg_i if i == j and 0 otherwise
    solution = [char_eval(c, block.idempotent) / block.degree for block in irr.blocks]
    expected = linalg.linear_combination(h.field, h.dim, solution, [chi.values for chi in irr.characters])
    if expected != c.values:
        raise DecompositionError(f"""{h.name}: not in the span of the irreducible characters""")
    result = []
    for m in solution:
        if not m.is_rational() or m.rational_value().denominator != 1 or m.rational_value() < 0:
            raise DecompositionError(f"""{h.name}: the multiplicity {m} is not a nonnegative integer""")
        result.append(int(m.rational_value()))
    return result


def regular_character(h: HopfAlgebraData, irr: Optional[IrrData] = None) -> Character:
    """regular_character is :math:`x \\mapsto \\mathrm{tr}(L_x)`; when ``irr`` is given, it is certified to equal :math:`\\sum \\chi(1) \\chi`.

    :raises CertificationError:
    """

    values = []
    for i in range(h.dim):
        acc = h.field.zero()
        for k in range(h.dim):
            acc = acc + h.mult[i][k][k]
        values.append(acc)
    result = make_character(h, values)
    if irr is not None:
        expected = combination(irr, [block.degree for block in irr.blocks])
        if expected.values != result.values:
            raise CertificationError(f"""{h.name}: the regular character is not the sum of degree times irreducible character""")
    return result


def induced_trivial_character(h: HopfAlgebraData, k: HopfSubalgebraHandle) -> Character:
    """induced_trivial_character is the character of the left module :math:`H / H K^+`.
    """

    left, _ = ideal_generated_by_positive_part(h, k)
    return make_character(h, representation_character(quotient_module_representation(h, left)))


def character_of_representation(r: Representation) -> Character:
    return make_character(r.algebra, representation_character(r))


def pullback(chi: Character, q: QuotientData) -> Character:
    """pullback returns :math:`\\chi \\circ \\pi` for a character of the quotient."""

    return make_character(q.parent, linalg.mat_vec(q.projection, chi.values))
