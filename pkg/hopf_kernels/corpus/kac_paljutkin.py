"""
the module for the 8-dimensional Kac-Paljutkin Hopf algebra

The algebra is generated by :math:`x, y, z` with
::

    x^2 = y^2 = 1,  xy = yx,  zx = yz,  zy = xz,  z^2 = (1 + x + y - xy) / 2
    Delta(x) = x (x) x,  Delta(y) = y (x) y
    Delta(z) = (1 (x) 1 + 1 (x) x + y (x) 1 - y (x) x) (z (x) z) / 2
    epsilon(x) = epsilon(y) = epsilon(z) = 1,  S(x) = x,  S(y) = y,  S(z) = z

The basis is the normal words :math:`x^a y^b z^c`, numbered by :math:`a + 2b + 4c`.
The structure constants are computed once from the normal-form multiplication and are rational; the field is :math:`\\mathbb{Q}(\\zeta_8)`, which splits the 2-dimensional representation.
"""

import functools
from logging import getLogger
from typing import *

import hopf_kernels.exactmath.linalg as linalg
from hopf_kernels.exactmath.field import FieldElem, Rational, field_make
from hopf_kernels.types import *

logger = getLogger(__name__)

CYCLOTOMIC_ORDER = 8
BASIS_NAMES = ('1', 'x', 'y', 'xy', 'z', 'xz', 'yz', 'xyz')

Word = Tuple[int, int, int]
Element = Dict[Word, Rational]
HALF = Rational(1, 2)


def _index(w: Word) -> int:
    a, b, c = w
    return a + 2 * b + 4 * c


def _words() -> List[Word]:
    return [(i & 1, (i >> 1) & 1, (i >> 2) & 1) for i in range(8)]


def _add_to(acc: Element, w: Word, c: Rational) -> None:
    acc[w] = acc.get(w, Rational(0)) + c
    if not acc[w]:
        del acc[w]


def word_product(u: Word, v: Word) -> Element:
    a, b, c = u
    a2, b2, c2 = v
    if not c:
        return {((a + a2) % 2, (b + b2) % 2, c2): Rational(1)}
    # z x^a2 y^b2 = x^b2 y^a2 z
    a3 = (a + b2) % 2
    b3 = (b + a2) % 2
    if not c2:
        return {(a3, b3, 1): Rational(1)}
    result: Element = {}
    for (da, db), sign in (((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), -1)):
        _add_to(result, ((a3 + da) % 2, (b3 + db) % 2, 0), sign * HALF)
    return result


def multiply(p: Element, q: Element) -> Element:
    result: Element = {}
    for u, cu in p.items():
        for v, cv in q.items():
            for w, cw in word_product(u, v).items():
                _add_to(result, w, cu * cv * cw)
    return result


Tensor = Dict[Tuple[Word, Word], Rational]


def tensor_multiply(s: Tensor, t: Tensor) -> Tensor:
    result: Tensor = {}
    for (u1, u2), cu in s.items():
        for (v1, v2), cv in t.items():
            left = word_product(u1, v1)
            right = word_product(u2, v2)
            for w1, c1 in left.items():
                for w2, c2 in right.items():
                    key = (w1, w2)
                    result[key] = result.get(key, Rational(0)) + cu * cv * c1 * c2
                    if not result[key]:
                        del result[key]
    return result


def _generator_coproducts() -> Dict[str, Tensor]:
    one = (0, 0, 0)
    x = (1, 0, 0)
    y = (0, 1, 0)
    z = (0, 0, 1)
    xz = (1, 0, 1)
    yz = (0, 1, 1)
    return {
        'x': {(x, x): Rational(1)},
        'y': {(y, y): Rational(1)},
        'z': {(z, z): HALF, (z, xz): HALF, (yz, z): HALF, (yz, xz): -HALF},
        '1': {(one, one): Rational(1)},
    }


def coproduct_of_word(w: Word) -> Tensor:
    a, b, c = w
    generators = _generator_coproducts()
    result = generators['1']
    for name, power in (('x', a), ('y', b), ('z', c)):
        if power:
            result = tensor_multiply(result, generators[name])
    return result


def antipode_of_word(w: Word) -> Element:
    a, b, c = w
    # S is an anti-homomorphism fixing x, y and z
    result: Element = {(0, 0, 0): Rational(1)}
    for letter, power in (((0, 0, 1), c), ((0, 1, 0), b), ((1, 0, 0), a)):
        if power:
            result = multiply(result, {letter: Rational(1)})
    return result


@functools.lru_cache(maxsize=None)
def kac_paljutkin() -> HopfAlgebraData:
    """kac_paljutkin returns the 8-dimensional semisimple Hopf algebra that is neither commutative nor cocommutative."""

    field = field_make(CYCLOTOMIC_ORDER)
    words = _words()
    n = len(words)
    zero = field.zero()

    def vector(e: Element) -> List[FieldElem]:
        row = [zero] * n
        for w, c in e.items():
            row[_index(w)] = field.rational(c)
        return row

    mult = [[vector(word_product(u, v)) for v in words] for u in words]
    comult = []
    for w in words:
        plane = [[zero] * n for _ in range(n)]
        for (w1, w2), c in coproduct_of_word(w).items():
            plane[_index(w1)][_index(w2)] = field.rational(c)
        comult.append(plane)
    antipode = linalg.matrix_make(field, [vector(antipode_of_word(w)) for w in words], ncols=n)
    logger.debug('Kac-Paljutkin algebra built over Q(zeta_%d)', CYCLOTOMIC_ORDER)
    return HopfAlgebraData(
        field=field,
        dim=n,
        mult=mult,
        unit=linalg.basis_vector(field, n, 0),
        comult=comult,
        counit=[field.one()] * n,
        antipode=antipode,
        name='KP8',
    )
