"""
the module for exact dense linear algebra over a cyclotomic field

Vectors are tuples of :class:`FieldElem`.
Matrices are :class:`Matrix` values whose ``entries`` are row tuples.
Subspaces are kept in the canonical reduced row-echelon form, so that the equality of subspaces is the equality of tuples.

The workhorse is :class:`EchelonBuilder`, which keeps a reduced row-echelon basis and accepts rows one at a time.
"""

from logging import getLogger
from typing import *

from hopf_kernels.exactmath.field import CycloField, FieldElem
from hopf_kernels.types import *

logger = getLogger(__name__)


def zero_vector(field: CycloField, n: int) -> Vector:
    return (field.zero(), ) * n


def basis_vector(field: CycloField, n: int, i: int) -> Vector:
    zero = field.zero()
    return tuple(field.one() if j == i else zero for j in range(n))


def vec_add(x: Sequence[FieldElem], y: Sequence[FieldElem]) -> Vector:
    if len(x) != len(y):
        raise ShapeError(f"""vector length mismatch: {len(x)} and {len(y)}""")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Sequence[FieldElem], y: Sequence[FieldElem]) -> Vector:
    if len(x) != len(y):
        raise ShapeError(f"""vector length mismatch: {len(x)} and {len(y)}""")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c: Union[FieldElem, int], x: Sequence[FieldElem]) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Sequence[FieldElem]) -> bool:
    return not any(x)


def vec_dot(x: Sequence[FieldElem], y: Sequence[FieldElem]) -> FieldElem:
    if len(x) != len(y):
        raise ShapeError(f"""vector length mismatch: {len(x)} and {len(y)}""")
    assert x
    acc = x[0].field.zero()
    for a, b in zip(x, y):
        if a and b:
            acc = acc + a * b
    return acc


def vec_sum(field: CycloField, n: int, vectors: Iterable[Sequence[FieldElem]]) -> Vector:
    acc = [field.zero()] * n
    for v in vectors:
        for i, a in enumerate(v):
            if a:
                acc[i] = acc[i] + a
    return tuple(acc)


def linear_combination(field: CycloField, n: int, coeffs: Sequence[FieldElem], vectors: Sequence[Sequence[FieldElem]]) -> Vector:
    acc = [field.zero()] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                acc[i] = acc[i] + c * a
    return tuple(acc)


def matrix_make(field: CycloField, rows: Sequence[Sequence[FieldElem]], *, ncols: Optional[int] = None) -> Matrix:
    """
    :raises ShapeError:
    """

    entries = tuple(tuple(row) for row in rows)
    if ncols is None:
        if not entries:
            raise ShapeError('the number of columns of an empty matrix must be given')
        ncols = len(entries[0])
    for row in entries:
        if len(row) != ncols:
            raise ShapeError(f"""ragged matrix: expected {ncols} columns, got {len(row)}""")
    return Matrix(field=field, nrows=len(entries), ncols=ncols, entries=entries)


def zero_matrix(field: CycloField, nrows: int, ncols: int) -> Matrix:
    return matrix_make(field, [zero_vector(field, ncols) for _ in range(nrows)], ncols=ncols)


def identity_matrix(field: CycloField, n: int) -> Matrix:
    return matrix_make(field, [basis_vector(field, n, i) for i in range(n)], ncols=n)


def transpose(m: Matrix) -> Matrix:
    return matrix_make(m.field, [tuple(m.entries[i][j] for i in range(m.nrows)) for j in range(m.ncols)], ncols=m.nrows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """
    :raises ShapeError:
    """

    if a.ncols != b.nrows:
        raise ShapeError(f"""cannot multiply {a.nrows}x{a.ncols} by {b.nrows}x{b.ncols}""")
    return matrix_make(a.field, [vec_mat(row, b) for row in a.entries], ncols=b.ncols)


def vec_mat(x: Sequence[FieldElem], m: Matrix) -> Vector:
    """vec_mat computes the row vector :math:`x M`, that is, the image of ``x`` under the linear map whose ``i``-th row is the image of the ``i``-th basis vector.

    :raises ShapeError:
    """

    if len(x) != m.nrows:
        raise ShapeError(f"""cannot multiply a vector of length {len(x)} by a {m.nrows}x{m.ncols} matrix""")
    return linear_combination(m.field, m.ncols, x, m.entries)


def mat_vec(m: Matrix, x: Sequence[FieldElem]) -> Vector:
    """
    :raises ShapeError:
    """

    if len(x) != m.ncols:
        raise ShapeError(f"""cannot multiply a {m.nrows}x{m.ncols} matrix by a vector of length {len(x)}""")
    return tuple(vec_dot(row, x) if m.ncols else m.field.zero() for row in m.entries)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ShapeError(f"""cannot add {a.nrows}x{a.ncols} and {b.nrows}x{b.ncols}""")
    return matrix_make(a.field, [vec_add(x, y) for x, y in zip(a.entries, b.entries)], ncols=a.ncols)


def mat_scale(c: Union[FieldElem, int], m: Matrix) -> Matrix:
    return matrix_make(m.field, [vec_scale(c, row) for row in m.entries], ncols=m.ncols)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.nrows):
        for k in range(b.nrows):
            rows.append(tuple(a.entries[i][j] * b.entries[k][l] for j in range(a.ncols) for l in range(b.ncols)))
    return matrix_make(a.field, rows, ncols=a.ncols * b.ncols)


def trace(m: Matrix) -> FieldElem:
    acc = m.field.zero()
    for i in range(min(m.nrows, m.ncols)):
        acc = acc + m.entries[i][i]
    return acc


class EchelonBuilder:
    """EchelonBuilder keeps the reduced row-echelon basis of the span of the rows added so far.

    The basis stays fully reduced after every :meth:`add`, pivots are normalized to 1, and the pivot columns are kept sorted.
    """

    field: CycloField
    ncols: int

    def __init__(self, *, field: CycloField, ncols: int):
        self.field = field
        self.ncols = ncols
        self._rows: List[List[FieldElem]] = []
        self._pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(self._pivots)

    def rows(self) -> List[Vector]:
        return [tuple(row) for row in self._rows]

    def reduce(self, v: Sequence[FieldElem]) -> List[FieldElem]:
        """reduce returns ``v`` minus its projection onto the current span along the pivot columns.
        """

        if len(v) != self.ncols:
            raise ShapeError(f"""expected a vector of length {self.ncols}, got {len(v)}""")
        w = list(v)
        for row, p in zip(self._rows, self._pivots):
            c = w[p]
            if c:
                for j in range(p, self.ncols):
                    r = row[j]
                    if r:
                        w[j] = w[j] - c * r
        return w

    def contains(self, v: Sequence[FieldElem]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[FieldElem]) -> bool:
        """add inserts ``v`` into the span.

        :returns: True iff ``v`` was not already in the span
        """

        w = self.reduce(v)
        q = next((j for j, c in enumerate(w) if c), None)
        if q is None:
            return False
        inv = w[q].inverse()
        if not w[q].is_one():
            w = [c * inv if c else c for c in w]
        for row in self._rows:
            c = row[q]
            if c:
                for j in range(q, self.ncols):
                    if w[j]:
                        row[j] = row[j] - c * w[j]
        index = 0
        while index < len(self._pivots) and self._pivots[index] < q:
            index += 1
        self._rows.insert(index, w)
        self._pivots.insert(index, q)
        return True

    def extend(self, vectors: Iterable[Sequence[FieldElem]]) -> int:
        added = 0
        for v in vectors:
            if self.rank == self.ncols:
                break
            if self.add(v):
                added += 1
        return added

    def subspace(self) -> Subspace:
        basis = matrix_make(self.field, self.rows(), ncols=self.ncols)
        return Subspace(field=self.field, ambient_dim=self.ncols, basis=basis, pivots=self.pivots)


def rref(m: Matrix) -> Tuple[Matrix, int]:
    """rref computes the reduced row-echelon form by Gauss-Jordan elimination with first-nonzero pivoting.

    The result has the same shape as ``m``; the zero rows come last.

    :returns: the reduced matrix and the rank
    """

    builder = EchelonBuilder(field=m.field, ncols=m.ncols)
    builder.extend(m.entries)
    rows = builder.rows()
    rows += [zero_vector(m.field, m.ncols)] * (m.nrows - len(rows))
    return matrix_make(m.field, rows, ncols=m.ncols), builder.rank


def rank(m: Matrix) -> int:
    return rref(m)[1]


def span(field: CycloField, ambient_dim: int, vectors: Iterable[Sequence[FieldElem]]) -> Subspace:
    builder = EchelonBuilder(field=field, ncols=ambient_dim)
    builder.extend(vectors)
    return builder.subspace()


def zero_subspace(field: CycloField, ambient_dim: int) -> Subspace:
    return span(field, ambient_dim, [])


def full_subspace(field: CycloField, ambient_dim: int) -> Subspace:
    return span(field, ambient_dim, identity_matrix(field, ambient_dim).entries)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError(f"""ambient dimension mismatch: {a.ambient_dim} and {b.ambient_dim}""")
    if a.field != b.field:
        raise FieldMismatchError(f"""field mismatch: Q(zeta_{a.field.order}) and Q(zeta_{b.field.order})""")


def builder_of(s: Subspace) -> EchelonBuilder:
    builder = EchelonBuilder(field=s.field, ncols=s.ambient_dim)
    builder._rows = [list(row) for row in s.basis.entries]
    builder._pivots = list(s.pivots)
    return builder


def reduce_vector(s: Subspace, v: Sequence[FieldElem]) -> Vector:
    return tuple(builder_of(s).reduce(v))


def contains_vector(s: Subspace, v: Sequence[FieldElem]) -> bool:
    return not any(reduce_vector(s, v))


def coordinates(s: Subspace, v: Sequence[FieldElem]) -> Vector:
    """coordinates returns the coefficients of ``v`` in the canonical basis of ``s``, assuming that ``v`` lies in ``s``.
    """

    return tuple(v[p] for p in s.pivots)


def complement_indices(s: Subspace) -> Tuple[int, ...]:
    pivots = set(s.pivots)
    return tuple(j for j in range(s.ambient_dim) if j not in pivots)


def quotient_coordinates(s: Subspace, v: Sequence[FieldElem]) -> Vector:
    """quotient_coordinates is the projection :math:`K^n \\to K^n / s` read at the non-pivot columns of ``s``.

    Its kernel is exactly ``s``.
    """

    w = reduce_vector(s, v)
    return tuple(w[j] for j in complement_indices(s))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    builder = builder_of(a)
    builder.extend(b.basis.entries)
    return builder.subspace()


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """subspace_intersect uses the Zassenhaus construction: reduce the rows :math:`(a, a)` and :math:`(b, 0)` and read off the rows whose left half vanishes.
    """

    _check_compatible(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return zero_subspace(a.field, n)
    zeros = zero_vector(a.field, n)
    builder = EchelonBuilder(field=a.field, ncols=2 * n)
    builder.extend(row + row for row in a.basis.entries)
    builder.extend(row + zeros for row in b.basis.entries)
    return span(a.field, n, [row[n:] for row, p in zip(builder.rows(), builder.pivots) if p >= n])


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """subspace_contains checks :math:`b \\subseteq a`."""

    _check_compatible(a, b)
    if b.dim > a.dim:
        return False
    builder = builder_of(a)
    return all(builder.contains(row) for row in b.basis.entries)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_compatible(a, b)
    return a.pivots == b.pivots and a.basis.entries == b.basis.entries


def subspace_ops(a: Subspace, b: Subspace, op: str) -> Union[Subspace, bool]:
    """
    :raises ShapeError: if the ambient dimensions differ
    """

    if op == 'sum':
        return subspace_sum(a, b)
    elif op == 'intersect':
        return subspace_intersect(a, b)
    elif op == 'contains':
        return subspace_contains(a, b)
    elif op == 'equal':
        return subspace_equal(a, b)
    else:
        raise ValueError(f"""invalid operation: {repr(op)}""")


def kernel(a: Matrix) -> Subspace:
    """kernel returns the null space :math:`\\{x \\mid a x = 0\\}` as a subspace of :math:`K^{ncols}`.
    """

    builder = EchelonBuilder(field=a.field, ncols=a.ncols)
    builder.extend(row for row in a.entries if any(row))
    return _null_space(builder)


def kernel_of_rows(field: CycloField, ncols: int, rows: Iterable[Sequence[FieldElem]]) -> Subspace:
    """kernel_of_rows is :func:`kernel` for equations produced lazily; it stops reading once the equations have full rank.
    """

    builder = EchelonBuilder(field=field, ncols=ncols)
    for row in rows:
        if builder.rank == ncols:
            break
        if any(row):
            builder.add(row)
    return _null_space(builder)


def _null_space(builder: EchelonBuilder) -> Subspace:
    field = builder.field
    n = builder.ncols
    pivots = builder.pivots
    rows = builder.rows()
    vectors = []
    for f in sorted(set(range(n)) - set(pivots)):
        x = [field.zero()] * n
        x[f] = field.one()
        for row, p in zip(rows, pivots):
            if row[f]:
                x[p] = -row[f]
        vectors.append(x)
    return span(field, n, vectors)


def solve_linear(a: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """solve_linear finds a particular solution :math:`X` of :math:`a X = rhs`.

    :returns: None if there is no solution
    :raises ShapeError:
    """

    if a.nrows != rhs.nrows:
        raise ShapeError(f"""cannot solve a {a.nrows}x{a.ncols} system with a {rhs.nrows}x{rhs.ncols} right-hand side""")
    field = a.field
    n = a.ncols
    builder = EchelonBuilder(field=field, ncols=n + rhs.ncols)
    builder.extend(left + right for left, right in zip(a.entries, rhs.entries))
    solution = [[field.zero()] * rhs.ncols for _ in range(n)]
    for row, p in zip(builder.rows(), builder.pivots):
        if p >= n:
            return None
        solution[p] = list(row[n:])
    return matrix_make(field, solution, ncols=rhs.ncols)


def solve_vector(a: Matrix, b: Sequence[FieldElem]) -> Optional[Vector]:
    rhs = matrix_make(a.field, [(c, ) for c in b], ncols=1)
    x = solve_linear(a, rhs)
    if x is None:
        return None
    return tuple(row[0] for row in x.entries)
