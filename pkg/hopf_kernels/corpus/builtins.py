"""
the module for the built-in example algebras

The corpus has the group algebras of :math:`C_2, C_4, C_2 \\times C_2, S_3, D_4, Q_8, A_4`, their duals ``Fun-<name>``, and the Kac-Paljutkin algebra ``KP8`` with its dual ``Fun-KP8``.
Each algebra is given over the smallest cyclotomic field that splits it.
"""

from logging import getLogger
from typing import *

from hopf_kernels.corpus.groups import builtin_group_table, dual_group_algebra, group_algebra
from hopf_kernels.corpus.kac_paljutkin import CYCLOTOMIC_ORDER as KAC_PALJUTKIN_ORDER
from hopf_kernels.corpus.kac_paljutkin import kac_paljutkin
from hopf_kernels.hopf.dual import dual
from hopf_kernels.types import *

logger = getLogger(__name__)

GROUP_ORDERS: Dict[str, int] = {
    'C2': 1,
    'C4': 4,
    'C2xC2': 1,
    'S3': 3,
    'D4': 4,
    'Q8': 4,
    'A4': 3,
}

KAC_PALJUTKIN = 'KP8'
DUAL_PREFIX = 'Fun-'


def builtin_names() -> List[str]:
    """builtin_names returns the names in a fixed order: each group algebra followed by its dual, then ``KP8`` and ``Fun-KP8``."""

    names = []
    for name in list(GROUP_ORDERS) + [KAC_PALJUTKIN]:
        names.append(name)
        names.append(DUAL_PREFIX + name)
    return names


def cyclotomic_order_of(name: str) -> int:
    """
    :raises InputError:
    """

    base = name[len(DUAL_PREFIX):] if name.startswith(DUAL_PREFIX) else name
    if base == KAC_PALJUTKIN:
        return KAC_PALJUTKIN_ORDER
    if base not in GROUP_ORDERS:
        raise InputError(f"""unknown built-in algebra: {name} (available: {', '.join(builtin_names())})""")
    return GROUP_ORDERS[base]


def builtin_algebra(name: str) -> HopfAlgebraData:
    """
    :raises InputError: if the name is unknown
    """

    order = cyclotomic_order_of(name)
    if name == KAC_PALJUTKIN:
        return kac_paljutkin()
    if name == DUAL_PREFIX + KAC_PALJUTKIN:
        return dual(kac_paljutkin())
    if name.startswith(DUAL_PREFIX):
        return dual_group_algebra(builtin_group_table(name[len(DUAL_PREFIX):]), cyclotomic_order=order)
    return group_algebra(builtin_group_table(name), cyclotomic_order=order)
