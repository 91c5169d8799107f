"""
the module to build quotient Hopf algebras

The quotient :math:`H/I` is written in the basis given by the non-pivot coordinates of the canonical basis of :math:`I`.
The projection :math:`\\pi` reads a reduced vector at those coordinates, and the section :math:`\\iota` sends the ``a``-th quotient basis vector to the corresponding basis vector of :math:`H`.
Every induced structure tensor is computed on the section and certified with :func:`verify_hopf` afterwards.
"""

from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
import hopf_kernels.hopf.algebra as alg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.hopf.axioms import morphism_check, verify_hopf
from hopf_kernels.hopf.subalgebras import is_normal, projection_matrix
from hopf_kernels.types import *

logger = getLogger(__name__)


def hopf_ideal_violations(h: HopfAlgebraData, i: Subspace) -> List[str]:
    """hopf_ideal_violations lists the Hopf ideal conditions which ``i`` fails.
    """

    builder = linalg.builder_of(i)
    basis = i.vectors()
    violations = []
    b = [alg.basis(h, k) for k in range(h.dim)]
    if not all(builder.contains(alg.multiply(h, x, w)) for x in b for w in basis):
        violations.append('left ideal')
    if not all(builder.contains(alg.multiply(h, w, x)) for x in b for w in basis):
        violations.append('right ideal')
    q = projection_matrix(i)
    if any(any(alg.apply_legs(alg.comultiply(h, w), q, q)) for w in basis):
        violations.append('coideal')
    if not all(builder.contains(alg.antipode(h, w)) for w in basis):
        violations.append('antipode stable')
    if any(alg.counit(h, w) for w in basis):
        violations.append('counit vanishes')
    return violations


def augmentation_ideal(h: HopfAlgebraData) -> Subspace:
    """augmentation_ideal returns :math:`\\ker \\varepsilon`."""

    return linalg.kernel(linalg.matrix_make(h.field, [h.counit], ncols=h.dim))


def quotient_by_ideal(h: HopfAlgebraData, i: Subspace, *, name: Optional[str] = None) -> QuotientData:
    """
    :raises HopfIdealError: with the failed conditions
    :raises CertificationError: if the induced structure is not a Hopf algebra
    """

    violations = hopf_ideal_violations(h, i)
    if violations:
        raise HopfIdealError(f"""{h.name}: not a Hopf ideal: {', '.join(violations)}""", conditions=violations)

    field = h.field
    n = h.dim
    free = linalg.complement_indices(i)
    m = len(free)
    projection = projection_matrix(i)
    section = linalg.matrix_make(field, [alg.basis(h, f) for f in free], ncols=n)

    def pi(x: Sequence[FieldElem]) -> Vector:
        return linalg.vec_mat(x, projection)

    lifts = section.entries
    mult = [[pi(alg.multiply(h, lifts[a], lifts[b])) for b in range(m)] for a in range(m)]
    comult = []
    for a in range(m):
        delta = alg.apply_legs(alg.comultiply(h, lifts[a]), projection, projection)
        comult.append([delta[j * m:(j + 1) * m] for j in range(m)])
    quotient = HopfAlgebraData(
        field=field,
        dim=m,
        mult=mult,
        unit=pi(h.unit),
        comult=comult,
        counit=tuple(alg.counit(h, lifts[a]) for a in range(m)),
        antipode=linalg.matrix_make(field, [pi(alg.antipode(h, lifts[a])) for a in range(m)], ncols=m),
        name=name or f"""{h.name}/I""",
    )
    report = verify_hopf(quotient)
    if not report.passed:
        raise CertificationError(f"""{h.name}: the induced structure on the quotient fails {[check.name for check in report.failures()]}""")
    try:
        morphism_check(projection, h, quotient)
    except MorphismError as e:
        raise CertificationError(f"""{h.name}: the projection is not a Hopf algebra map: {e}""")
    logger.debug('%s: quotient by an ideal of dimension %d has dimension %d', h.name, i.dim, m)
    return QuotientData(parent=h, ideal=i, quotient=quotient, projection=projection, section=section)


def positive_part(h: HopfAlgebraData, k: HopfSubalgebraHandle) -> Subspace:
    """positive_part returns :math:`K^+ = K \\cap \\ker \\varepsilon`."""

    return linalg.subspace_intersect(k.space, augmentation_ideal(h))


def ideal_generated_by_positive_part(h: HopfAlgebraData, k: HopfSubalgebraHandle) -> Tuple[Subspace, Subspace]:
    """
    :returns: :math:`H K^+` and :math:`K^+ H`
    """

    plus = positive_part(h, k).vectors()
    b = [alg.basis(h, j) for j in range(h.dim)]
    left = linalg.span(h.field, h.dim, [alg.multiply(h, x, w) for x in b for w in plus])
    right = linalg.span(h.field, h.dim, [alg.multiply(h, w, x) for x in b for w in plus])
    return left, right


def quotient_by_subalgebra(h: HopfAlgebraData, k: HopfSubalgebraHandle) -> QuotientData:
    """quotient_by_subalgebra builds :math:`H /\\!/ K = H / H K^+` for a normal Hopf subalgebra :math:`K`.

    :raises NotNormalError:
    :raises CertificationError: if :math:`H K^+ \\ne K^+ H` or :math:`\\dim K \\cdot \\dim H/\\!/K \\ne \\dim H`
    """

    if not is_normal(h, k):
        raise NotNormalError(f"""{h.name}: the Hopf subalgebra of dimension {k.dim} is not normal""")
    left, right = ideal_generated_by_positive_part(h, k)
    if left != right:
        raise CertificationError(f"""{h.name}: H K^+ and K^+ H differ for a normal Hopf subalgebra""")
    result = quotient_by_ideal(h, left, name=f"""{h.name}//K{k.dim}""")
    if result.quotient.dim * k.dim != h.dim:
        raise CertificationError(f"""{h.name}: dim K * dim H//K = {k.dim} * {result.quotient.dim} != {h.dim}""")
    return result
