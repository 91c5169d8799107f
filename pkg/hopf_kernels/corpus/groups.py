"""
the module for finite groups given by multiplication tables, their group algebras and the duals of their group algebras

The built-in tables are generated from :mod:`sympy.combinatorics` permutation groups.
The elements are sorted by their array forms with the identity first, so the tables are the same in every run.
"""

import functools
import math
from logging import getLogger
from typing import *

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import AbelianGroup, AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.exactmath.field import field_make
from hopf_kernels.hopf.dual import dual
from hopf_kernels.types import *

logger = getLogger(__name__)


def _element_orders(table: Sequence[Sequence[int]]) -> List[int]:
    orders = []
    for a in range(len(table)):
        k = 1
        x = a
        while x != 0:
            x = table[x][a]
            k += 1
            if k > len(table):
                raise InvalidGroupTableError(f"""the element {a} has no finite order""")
        orders.append(k)
    return orders


def group_table_from_permutations(name: str, group: PermutationGroup) -> GroupTable:
    elements = sorted(group.elements, key=lambda p: (not p.is_Identity, p.array_form))
    index = {p: i for i, p in enumerate(elements)}
    table = tuple(tuple(index[p * q] for q in elements) for p in elements)
    inverse = tuple(index[p**-1] for p in elements)
    exponent = functools.reduce(lambda a, b: a * b // math.gcd(a, b), _element_orders(table), 1)
    return GroupTable(name=name, order=len(elements), table=table, inverse=inverse, exponent=exponent)


def quaternion_group() -> PermutationGroup:
    """quaternion_group returns :math:`Q_8` as the regular permutation representation generated by :math:`i` and :math:`j`."""

    i = Permutation([[0, 1, 2, 3], [4, 5, 6, 7]])
    j = Permutation([[0, 4, 2, 6], [1, 7, 3, 5]])
    return PermutationGroup([i, j])


def builtin_groups() -> Dict[str, Callable[[], PermutationGroup]]:
    return {
        'C2': lambda: CyclicGroup(2),
        'C4': lambda: CyclicGroup(4),
        'C2xC2': lambda: AbelianGroup(2, 2),
        'S3': lambda: SymmetricGroup(3),
        'D4': lambda: DihedralGroup(4),
        'Q8': quaternion_group,
        'A4': lambda: AlternatingGroup(4),
    }


@functools.lru_cache(maxsize=None)
def builtin_group_table(name: str) -> GroupTable:
    """
    :raises KeyError:
    """

    return group_table_from_permutations(name, builtin_groups()[name]())


def validate_group_table(t: GroupTable) -> None:
    """validate_group_table checks the shape, the identity at index 0, the inverses and the associativity exhaustively.

    :raises InvalidGroupTableError:
    """

    g = t.order
    if g < 1 or len(t.table) != g or any(len(row) != g for row in t.table) or len(t.inverse) != g:
        raise InvalidGroupTableError(f"""{t.name}: the table is not {g} x {g}""")
    if any(not 0 <= x < g for row in t.table for x in row):
        raise InvalidGroupTableError(f"""{t.name}: an entry is out of range""")
    for a in range(g):
        if t.table[0][a] != a or t.table[a][0] != a:
            raise InvalidGroupTableError(f"""{t.name}: the element 0 is not the identity at {a}""")
        if t.table[a][t.inverse[a]] != 0 or t.table[t.inverse[a]][a] != 0:
            raise InvalidGroupTableError(f"""{t.name}: the inverse of {a} is wrong""")
    for a in range(g):
        for b in range(g):
            ab = t.table[a][b]
            for c in range(g):
                if t.table[ab][c] != t.table[a][t.table[b][c]]:
                    raise InvalidGroupTableError(f"""{t.name}: not associative at ({a}, {b}, {c})""")


def group_algebra(t: GroupTable, *, cyclotomic_order: int = 1, name: Optional[str] = None) -> HopfAlgebraData:
    """group_algebra returns :math:`\\mathbb{C}G` on the basis of group elements, with :math:`\\Delta(g) = g \\otimes g` and :math:`S(g) = g^{-1}`.

    :raises InvalidGroupTableError:
    """

    validate_group_table(t)
    field = field_make(cyclotomic_order)
    g = t.order
    zero = field.zero()
    one = field.one()
    mult = [[[one if t.table[a][b] == k else zero for k in range(g)] for b in range(g)] for a in range(g)]
    comult = [[[one if a == j == k else zero for k in range(g)] for j in range(g)] for a in range(g)]
    antipode = linalg.matrix_make(field, [linalg.basis_vector(field, g, t.inverse[a]) for a in range(g)], ncols=g)
    return HopfAlgebraData(
        field=field,
        dim=g,
        mult=mult,
        unit=linalg.basis_vector(field, g, 0),
        comult=comult,
        counit=[one] * g,
        antipode=antipode,
        name=name or t.name,
    )


def dual_group_algebra(t: GroupTable, *, cyclotomic_order: int = 1, name: Optional[str] = None) -> HopfAlgebraData:
    """dual_group_algebra returns the algebra of functions on :math:`G` on the basis :math:`\\delta_g`.

    :raises InvalidGroupTableError:
    """

    return dual(group_algebra(t, cyclotomic_order=cyclotomic_order, name=name))
