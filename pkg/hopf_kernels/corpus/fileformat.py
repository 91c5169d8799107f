"""
the module to read and write Hopf algebras as JSON files of structure constants

The format is
::

    {
        "name": "S3",
        "cyclotomic_order": 3,
        "dim": 6,
        "mult": [[[elem, ...], ...], ...],      # mult[i][j][k]
        "unit": [elem, ...],
        "comult": [[[elem, ...], ...], ...],    # comult[i][j][k]
        "counit": [elem, ...],
        "antipode": [[elem, ...], ...],         # row i is S(b_i)
        "metadata": {...}                       # optional
    }

where each ``elem`` is a list of ``cyclotomic_order``-field coordinates written as rational strings like ``"-1/2"``.
"""

import json
from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.exactmath.field import CycloField, FieldElem, elem_from_json, field_make
from hopf_kernels.types import *

logger = getLogger(__name__)

DEFAULT_MAX_DIM = 16


def _require(data: Dict[str, Any], key: str, kind: type) -> Any:
    if key not in data:
        raise ParseError(f"""missing key: {key}""")
    if not isinstance(data[key], kind) or isinstance(data[key], bool):
        raise ParseError(f"""the key {key} must be {kind.__name__}: {repr(data[key])}""")
    return data[key]


def _vector(field: CycloField, data: Any, n: int, what: str) -> List[FieldElem]:
    if not isinstance(data, list) or len(data) != n:
        raise ParseError(f"""{what} must be a list of {n} field elements""")
    return [elem_from_json(field, x) for x in data]


def _matrix(field: CycloField, data: Any, n: int, what: str) -> List[List[FieldElem]]:
    if not isinstance(data, list) or len(data) != n:
        raise ParseError(f"""{what} must be a list of {n} rows""")
    return [_vector(field, row, n, f"""{what}[{i}]""") for i, row in enumerate(data)]


def _tensor(field: CycloField, data: Any, n: int, what: str) -> List[List[List[FieldElem]]]:
    if not isinstance(data, list) or len(data) != n:
        raise ParseError(f"""{what} must be a list of {n} matrices""")
    return [_matrix(field, plane, n, f"""{what}[{i}]""") for i, plane in enumerate(data)]


def algebra_from_dict(data: Any, *, max_dim: int = DEFAULT_MAX_DIM) -> HopfAlgebraData:
    """
    :raises ParseError:
    :raises DimensionLimitError:
    """

    if not isinstance(data, dict):
        raise ParseError('the top level must be an object')
    name = _require(data, 'name', str)
    order = _require(data, 'cyclotomic_order', int)
    n = _require(data, 'dim', int)
    if order < 1:
        raise ParseError(f"""cyclotomic_order must be positive: {order}""")
    if n < 1:
        raise ParseError(f"""dim must be positive: {n}""")
    if n > max_dim:
        raise DimensionLimitError(f"""{name}: dim {n} exceeds the limit {max_dim}""")
    field = field_make(order)
    return HopfAlgebraData(
        field=field,
        dim=n,
        mult=_tensor(field, data.get('mult'), n, 'mult'),
        unit=_vector(field, data.get('unit'), n, 'unit'),
        comult=_tensor(field, data.get('comult'), n, 'comult'),
        counit=_vector(field, data.get('counit'), n, 'counit'),
        antipode=linalg.matrix_make(field, _matrix(field, data.get('antipode'), n, 'antipode'), ncols=n),
        name=name,
    )


def parse_algebra(text: str, *, max_dim: int = DEFAULT_MAX_DIM) -> HopfAlgebraData:
    """parse_algebra reads an algebra file. The axioms are not checked here.

    :raises ParseError:
    :raises DimensionLimitError:
    """

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"""invalid JSON: {e}""")
    h = algebra_from_dict(data, max_dim=max_dim)
    logger.debug('parsed %r', h)
    return h


def algebra_to_dict(h: HopfAlgebraData, *, metadata: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    def vector(v: Sequence[FieldElem]) -> List[List[str]]:
        return [x.to_json() for x in v]

    data: Dict[str, Any] = {
        'name': h.name,
        'cyclotomic_order': h.field.order,
        'dim': h.dim,
        'mult': [[vector(row) for row in plane] for plane in h.mult],
        'unit': vector(h.unit),
        'comult': [[vector(row) for row in plane] for plane in h.comult],
        'counit': vector(h.counit),
        'antipode': [vector(row) for row in h.antipode.entries],
    }
    if metadata:
        data['metadata'] = metadata
    return data


def serialize_algebra(h: HopfAlgebraData, *, metadata: Optional[Dict[str, Any]] = None) -> str:
    """serialize_algebra writes the canonical form: sorted keys, one space of indentation and a trailing newline."""

    return json.dumps(algebra_to_dict(h, metadata=metadata), sort_keys=True, indent=1) + '\n'
