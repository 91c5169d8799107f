"""
the module for the per-algebra cache shared by the analyzers

A :class:`HopfContext` owns one verified Hopf algebra and computes the expensive data (integral, irreducible characters, the dual and its data) at most once.
The context of the dual is built lazily and points back to this context, so ``ctx.dual.dual is ctx``.
"""

import functools
from logging import getLogger
from typing import *

import hopf_kernels.hopf.dual
import hopf_kernels.rep.characters
import hopf_kernels.rep.phi
from hopf_kernels.hopf.axioms import require_hopf
from hopf_kernels.rep.eigen import DEFAULT_PRECISION
from hopf_kernels.types import *

logger = getLogger(__name__)

T = TypeVar('T')


class HopfContext:
    algebra: HopfAlgebraData
    precision: int
    axioms: Optional[AxiomReport]

    def __init__(self, *, algebra: HopfAlgebraData, precision: int = DEFAULT_PRECISION, dual_context: Optional['HopfContext'] = None, verified: bool = False):
        self.algebra = algebra
        self.precision = precision
        self._dual = dual_context
        self._memo: Dict[Hashable, Any] = {}
        self.axioms = None if verified else require_hopf(algebra)

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def dual(self) -> 'HopfContext':
        if self._dual is None:
            algebra = hopf_kernels.hopf.dual.dual(self.algebra)
            self._dual = HopfContext(algebra=algebra, precision=self.precision, dual_context=self, verified=True)
        return self._dual

    def memoize(self, key: Hashable, fn: Callable[[], T]) -> T:
        if key not in self._memo:
            self._memo[key] = fn()
        return cast(T, self._memo[key])

    @functools.cached_property
    def integral(self) -> Vector:
        return hopf_kernels.hopf.dual.integral(self.algebra)

    @functools.cached_property
    def irr(self) -> IrrData:
        return hopf_kernels.rep.characters.irr_characters(self.algebra, precision=self.precision)

    @property
    def coirr(self) -> IrrData:
        """coirr is Irr(H^*); each character's values are an element of H."""

        return self.dual.irr

    @functools.cached_property
    def phi_matrix(self) -> Matrix:
        return hopf_kernels.rep.phi.phi_matrix(self.algebra, self.integral)
