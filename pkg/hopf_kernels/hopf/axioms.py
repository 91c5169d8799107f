"""
the module to verify the Hopf algebra axioms and Hopf algebra maps exactly

:func:`verify_hopf` checks every axiom on all basis elements (pairs or triples where the axiom needs them) and returns an :class:`AxiomReport`.
A failed axiom carries the first basis indices which witness the failure.
"""

import itertools
from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.types import *

logger = getLogger(__name__)


def check_shapes(h: HopfAlgebraData) -> None:
    """
    :raises ShapeError:
    """

    n = h.dim
    if n < 1:
        raise ShapeError(f"""dimension must be positive: {n}""")
    for name, tensor in (('mult', h.mult), ('comult', h.comult)):
        if len(tensor) != n or any(len(plane) != n or any(len(row) != n for row in plane) for plane in tensor):
            raise ShapeError(f"""{name} must be a {n}x{n}x{n} tensor""")
    if len(h.unit) != n:
        raise ShapeError(f"""unit must have length {n}""")
    if len(h.counit) != n:
        raise ShapeError(f"""counit must have length {n}""")
    if (h.antipode.nrows, h.antipode.ncols) != (n, n):
        raise ShapeError(f"""antipode must be a {n}x{n} matrix""")


def foreign_entries(h: HopfAlgebraData) -> List[AxiomCheck]:
    """foreign_entries returns a failed check, with the position of the first offending entry as its witness, for each structure tensor having an entry outside ``h.field``."""

    n = h.dim
    tensors: List[Tuple[str, Iterable[Tuple[Tuple[int, ...], Any]]]] = [
        ('mult_entries_in_field', (((i, j, k), h.mult[i][j][k]) for i, j, k in itertools.product(range(n), repeat=3))),
        ('unit_entries_in_field', (((i, ), h.unit[i]) for i in range(n))),
        ('comult_entries_in_field', (((i, j, k), h.comult[i][j][k]) for i, j, k in itertools.product(range(n), repeat=3))),
        ('counit_entries_in_field', (((i, ), h.counit[i]) for i in range(n))),
        ('antipode_entries_in_field', (((i, j), h.antipode.entries[i][j]) for i, j in itertools.product(range(n), repeat=2))),
    ]
    checks = []
    for name, entries in tensors:
        witness = next((index for index, value in entries if getattr(value, 'field', None) != h.field), None)
        if witness is not None:
            logger.debug('%s: %s fails at %s', h.name, name, witness)
            checks.append(AxiomCheck(name=name, passed=False, witness=witness))
    return checks


def _first_failure(indices: Iterable[Tuple[int, ...]], predicate: Callable[..., bool]) -> Optional[Tuple[int, ...]]:
    for index in indices:
        if not predicate(*index):
            return index
    return None


def verify_hopf(h: HopfAlgebraData) -> AxiomReport:
    """verify_hopf checks the bialgebra and antipode axioms, and the involutivity of the antipode.

    When some structure constant lies outside ``h.field``, only those failures are reported.

    :raises ShapeError:
    """

    check_shapes(h)
    foreign = foreign_entries(h)
    if foreign:
        return AxiomReport(algebra=h.name, checks=foreign)
    n = h.dim
    b = [alg.basis(h, i) for i in range(n)]
    products = [[alg.multiply(h, b[i], b[j]) for j in range(n)] for i in range(n)]
    deltas = [alg.comultiply(h, b[i]) for i in range(n)]
    identity = linalg.identity_matrix(h.field, n)
    comult_matrix = linalg.matrix_make(h.field, deltas, ncols=n * n)
    counit_matrix = linalg.matrix_make(h.field, [(c, ) for c in h.counit], ncols=1)
    unit = h.unit
    one = h.field.one()
    pairs = [(i, j) for i in range(n) for j in range(n)]
    singles = [(i, ) for i in range(n)]

    def associative(i: int, j: int, k: int) -> bool:
        return alg.multiply(h, products[i][j], b[k]) == alg.multiply(h, b[i], products[j][k])

    def unital(i: int) -> bool:
        return alg.multiply(h, unit, b[i]) == b[i] and alg.multiply(h, b[i], unit) == b[i]

    def coassociative(i: int) -> bool:
        return alg.apply_legs(deltas[i], comult_matrix, identity) == alg.apply_legs(deltas[i], identity, comult_matrix)

    def counital(i: int) -> bool:
        left = alg.apply_legs(deltas[i], counit_matrix, identity)
        right = alg.apply_legs(deltas[i], identity, counit_matrix)
        return left == b[i] and right == b[i]

    def tensor_product(x: Vector, y: Vector) -> Vector:
        acc = [h.field.zero()] * (n * n)
        for p, xp in enumerate(x):
            if not xp:
                continue
            for q, yq in enumerate(y):
                if not yq:
                    continue
                for a, c in h.mult_table[p // n][q // n]:
                    for d, e in h.mult_table[p % n][q % n]:
                        acc[a * n + d] = acc[a * n + d] + xp * yq * c * e
        return tuple(acc)

    def comult_multiplicative(i: int, j: int) -> bool:
        return alg.comultiply(h, products[i][j]) == tensor_product(deltas[i], deltas[j])

    def counit_multiplicative(i: int, j: int) -> bool:
        return alg.counit(h, products[i][j]) == h.counit[i] * h.counit[j]

    def antipode_left(i: int) -> bool:
        acc = alg.zero(h)
        for j, k, c in h.comult_table[i]:
            acc = linalg.vec_add(acc, linalg.vec_scale(c, alg.multiply(h, h.antipode.entries[j], b[k])))
        return acc == linalg.vec_scale(h.counit[i], unit)

    def antipode_right(i: int) -> bool:
        acc = alg.zero(h)
        for j, k, c in h.comult_table[i]:
            acc = linalg.vec_add(acc, linalg.vec_scale(c, alg.multiply(h, b[j], h.antipode.entries[k])))
        return acc == linalg.vec_scale(h.counit[i], unit)

    def involutive(i: int) -> bool:
        return alg.antipode(h, h.antipode.entries[i]) == b[i]

    checks: List[AxiomCheck] = []

    def record(name: str, witness: Optional[Tuple[int, ...]]) -> None:
        checks.append(AxiomCheck(name=name, passed=witness is None, witness=witness))
        if witness is not None:
            logger.debug('%s: axiom %s fails at %s', h.name, name, witness)

    record('associativity', _first_failure(itertools.product(range(n), repeat=3), associative))
    record('unit', _first_failure(singles, unital))
    record('coassociativity', _first_failure(singles, coassociative))
    record('counit', _first_failure(singles, counital))
    record('comultiplication_is_multiplicative', _first_failure(pairs, comult_multiplicative))
    record('comultiplication_is_unital', None if alg.comultiply(h, unit) == alg.tensor(unit, unit) else ())
    record('counit_is_multiplicative', _first_failure(pairs, counit_multiplicative))
    record('counit_is_unital', None if alg.counit(h, unit) == one else ())
    record('antipode_left', _first_failure(singles, antipode_left))
    record('antipode_right', _first_failure(singles, antipode_right))
    record('antipode_is_involutive', _first_failure(singles, involutive))
    return AxiomReport(algebra=h.name, checks=checks)


def require_hopf(h: HopfAlgebraData) -> AxiomReport:
    """
    :raises AxiomError: if an axiom fails
    """

    report = verify_hopf(h)
    if not report.passed:
        names = ', '.join(f"""{check.name} (witness {check.witness})""" for check in report.failures())
        raise AxiomError(f"""{h.name} is not a Hopf algebra with involutive antipode: {names}""", report=report)
    return report


def morphism_check(f: Matrix, a: HopfAlgebraData, b: HopfAlgebraData) -> HopfMorphism:
    """morphism_check certifies that ``f`` (row ``i`` is the image of the ``i``-th basis element of ``a``) is a Hopf algebra map.

    :raises ShapeError:
    :raises MorphismError: with the first violated condition and its witness
    """

    if (f.nrows, f.ncols) != (a.dim, b.dim):
        raise ShapeError(f"""a map {a.name} -> {b.name} must be a {a.dim}x{b.dim} matrix, got {f.nrows}x{f.ncols}""")
    if a.field != b.field or f.field != a.field:
        raise FieldMismatchError('a Hopf algebra map needs a common field')
    n = a.dim

    def image(x: Sequence[FieldElem]) -> Vector:
        return linalg.vec_mat(x, f)

    def fail(condition: str, witness: Tuple[int, ...]) -> NoReturn:
        raise MorphismError(f"""not a Hopf algebra map {a.name} -> {b.name}: {condition} fails at {witness}""", condition=condition, witness=witness)

    for i in range(n):
        for j in range(n):
            if image(alg.multiply(a, alg.basis(a, i), alg.basis(a, j))) != alg.multiply(b, f.entries[i], f.entries[j]):
                fail('multiplicative', (i, j))
    if image(a.unit) != b.unit:
        fail('unital', ())
    for i in range(n):
        if alg.apply_legs(alg.comultiply(a, alg.basis(a, i)), f, f) != alg.comultiply(b, f.entries[i]):
            fail('comultiplicative', (i, ))
        if alg.counit(b, f.entries[i]) != a.counit[i]:
            fail('counital', (i, ))
        if image(a.antipode.entries[i]) != alg.antipode(b, f.entries[i]):
            fail('antipode', (i, ))
    return HopfMorphism(source=a, target=b, matrix=f)
