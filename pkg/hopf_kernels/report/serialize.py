"""
the module to convert reports into JSON documents

:func:`to_jsonable` walks the records recursively.
Field elements become their coordinates, lists of :math:`\varphi(N)` rational strings as in the files of structure constants; for example :math:`1/2 - \zeta_4` becomes ``["1/2", "-1"]``.
Algebras become their names, and subspaces become their dimension and canonical basis.
"""

import enum
import json
from typing import *

from hopf_kernels.exactmath.field import FieldElem, Rational, format_rational
from hopf_kernels.types import *


def _subspace(s: Subspace) -> Dict[str, Any]:
    return {
        'dim': s.dim,
        'basis': [[x.to_json() for x in row] for row in s.basis.entries],
    }


def _kernel_report(report: KernelReport) -> Dict[str, Any]:
    """_kernel_report keeps the indices, the dimensions of :math:`H_\\chi`, the largest Hopf subalgebra in :math:`S_M` and :math:`\\mathrm{HKer}(H \\to H/I_M)`, and the flags."""

    return {
        'character_index': report.character_index,
        'ker_set': list(report.ker_set),
        'dim_kernel': report.kernel_space.dim,
        'dim_sm_oracle': report.oracle_space.dim,
        'dim_hopf_kernel': report.hker_space.dim,
        'equal_2_10': report.matches_hopf_kernel,
        'is_normal': report.is_normal,
        'passed': report.passed,
    }


def to_jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, FieldElem):
        return obj.to_json()
    if isinstance(obj, Rational):
        return format_rational(obj)
    if isinstance(obj, HopfAlgebraData):
        return obj.name
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Subspace):
        return _subspace(obj)
    if isinstance(obj, Matrix):
        return [[x.to_json() for x in row] for row in obj.entries]
    if isinstance(obj, HopfSubalgebraHandle):
        return {'space': _subspace(obj.space), 'flags': to_jsonable(obj.flags), 'is_hopf': obj.flags.is_hopf}
    if isinstance(obj, Character):
        return {'degree': obj.degree.to_json(), 'values': [x.to_json() for x in obj.values]}
    if isinstance(obj, AxiomReport):
        return {'algebra': obj.algebra, 'passed': obj.passed, 'checks': to_jsonable(obj.checks)}
    if isinstance(obj, KernelReport):
        return _kernel_report(obj)
    if isinstance(obj, tuple) and hasattr(obj, '_asdict'):
        return {key: to_jsonable(value) for key, value in obj._asdict().items() if not isinstance(value, HopfAlgebraData)}
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"""not serializable: {type(obj).__name__}""")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + '\n'
