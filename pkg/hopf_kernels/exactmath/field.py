"""
the module for exact arithmetic in cyclotomic fields

This module provides the scalar type of the whole package.
An element of :math:`\\mathbb{Q}(\\zeta_N)` is stored in the power basis :math:`1, \\zeta, \\dots, \\zeta^{\\varphi(N) - 1}` with coefficients of :class:`fractions.Fraction`, reduced modulo the cyclotomic polynomial :math:`\\Phi_N`.
The representation is unique, so two elements are equal iff their coefficient tuples are equal.

For example, in :math:`\\mathbb{Q}(\\zeta_3)`
::

    >>> k = field_make(3)
    >>> z = k.zeta_power(1)
    >>> str(z * z)
    '-1 - z'
"""

import fractions
import functools
import re
from logging import getLogger
from typing import *

import sympy

from hopf_kernels.types import *

logger = getLogger(__name__)

Rational = fractions.Fraction

_RATIONAL_PATTERN = re.compile(r'-?[0-9]+(/[0-9]+)?')


def parse_rational(s: str) -> Rational:
    """parse_rational reads a rational written as ``"p/q"`` or ``"p"``.

    :raises ParseError:
    """

    if not isinstance(s, str) or not _RATIONAL_PATTERN.fullmatch(s.strip()):
        raise ParseError(f"""not a rational: {repr(s)}""")
    try:
        return Rational(s.strip())
    except ZeroDivisionError:
        raise ParseError(f"""zero denominator: {repr(s)}""")


def format_rational(q: Rational) -> str:
    return str(q)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """cyclotomic_polynomial returns the coefficients of :math:`\\Phi_n` in ascending order.

    It divides :math:`x^n - 1` by :math:`\\Phi_d` for every proper divisor :math:`d` of :math:`n`.
    """

    assert n >= 1
    x = sympy.Symbol('x')
    poly = sympy.Poly(x**n - 1, x, domain=sympy.ZZ)
    for d in range(1, n):
        if n % d == 0:
            divisor = sympy.Poly(list(reversed(cyclotomic_polynomial(d))), x, domain=sympy.ZZ)
            poly = poly.exquo(divisor)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


class CycloField:
    """CycloField is the cyclotomic field :math:`\\mathbb{Q}(\\zeta_N)`.

    Instances are shared: use :func:`field_make` rather than the constructor.
    """

    order: int
    degree: int
    modulus: Tuple[int, ...]

    def __init__(self, *, order: int):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1

        # _powers[k] is the reduced coefficient vector of x^k, for 0 <= k < max(2 * degree - 1, order)
        powers: List[Tuple[Rational, ...]] = []
        current = [Rational(0)] * self.degree
        current[0] = Rational(1)
        for _ in range(max(2 * self.degree - 1, self.order, 1)):
            powers.append(tuple(current))
            top = current[-1]
            shifted = [Rational(0)] + current[:-1]
            if top:
                for i in range(self.degree):
                    shifted[i] -= top * self.modulus[i]
            current = shifted
        self._powers = powers
        self._zero = FieldElem(self, (Rational(0), ) * self.degree)
        self._one = FieldElem(self, (Rational(1), ) + (Rational(0), ) * (self.degree - 1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycloField) and self.order == other.order

    def __hash__(self) -> int:
        return hash(('CycloField', self.order))

    def __repr__(self) -> str:
        return f"""CycloField(order={self.order})"""

    def zero(self) -> 'FieldElem':
        return self._zero

    def one(self) -> 'FieldElem':
        return self._one

    def rational(self, q: Union[int, Rational]) -> 'FieldElem':
        return FieldElem(self, (Rational(q), ) + (Rational(0), ) * (self.degree - 1))

    def zeta_power(self, k: int) -> 'FieldElem':
        return FieldElem(self, self._powers[k % self.order])

    def make(self, coeffs: Sequence[Union[int, Rational]]) -> 'FieldElem':
        """make builds an element from power-basis coefficients, reducing longer sequences modulo :math:`\\Phi_N`.
        """

        reduced = [Rational(0)] * self.degree
        for k, c in enumerate(coeffs):
            if c:
                if k < self.degree:
                    reduced[k] += Rational(c)
                else:
                    for i, r in enumerate(self._power_of(k)):
                        if r:
                            reduced[i] += r * c
        return FieldElem(self, tuple(reduced))

    def _power_of(self, k: int) -> Tuple[Rational, ...]:
        if k < len(self._powers):
            return self._powers[k]
        return self._powers[k % self.order]

    def _reduce(self, product: List[Rational]) -> 'FieldElem':
        reduced = product[:self.degree]
        for k in range(self.degree, len(product)):
            c = product[k]
            if c:
                for i, r in enumerate(self._powers[k]):
                    if r:
                        reduced[i] += c * r
        return FieldElem(self, tuple(reduced))


@functools.lru_cache(maxsize=None)
def field_make(order: int) -> CycloField:
    """field_make returns the cyclotomic field of the given order.

    :raises ValueError: if order is not positive
    """

    if not isinstance(order, int) or order < 1:
        raise ValueError(f"""cyclotomic order must be a positive integer: {repr(order)}""")
    field = CycloField(order=order)
    logger.debug('cyclotomic field: N = %d, degree = %d, modulus = %s', order, field.degree, field.modulus)
    return field


Scalar = Union['FieldElem', int, Rational]


class FieldElem:
    """FieldElem is an immutable element of a :class:`CycloField`.
    """

    __slots__ = ('field', 'coeffs', '_nonzero')

    field: CycloField
    coeffs: Tuple[Rational, ...]

    def __init__(self, field: CycloField, coeffs: Tuple[Rational, ...]):
        self.field = field
        self.coeffs = coeffs
        self._nonzero = any(coeffs)

    def _coerce(self, other: Scalar) -> 'FieldElem':
        if isinstance(other, FieldElem):
            if other.field.order != self.field.order:
                raise FieldMismatchError(f"""field mismatch: Q(zeta_{self.field.order}) and Q(zeta_{other.field.order})""")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.rational(other)
        raise TypeError(f"""unsupported operand: {repr(other)}""")

    def __bool__(self) -> bool:
        return self._nonzero

    def is_zero(self) -> bool:
        return not self._nonzero

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and self.is_rational()

    def rational_value(self) -> Rational:
        """
        :raises ValueError: if the element is not rational
        """

        if not self.is_rational():
            raise ValueError(f"""not a rational: {self}""")
        return self.coeffs[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElem):
            return self.field.order == other.field.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.order, self.coeffs))

    def __neg__(self) -> 'FieldElem':
        return FieldElem(self.field, tuple(-c for c in self.coeffs))

    def __add__(self, other: Scalar) -> 'FieldElem':
        b = self._coerce(other)
        if not b._nonzero:
            return self
        if not self._nonzero:
            return b
        return FieldElem(self.field, tuple(x + y for x, y in zip(self.coeffs, b.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> 'FieldElem':
        b = self._coerce(other)
        if not b._nonzero:
            return self
        return FieldElem(self.field, tuple(x - y for x, y in zip(self.coeffs, b.coeffs)))

    def __rsub__(self, other: Scalar) -> 'FieldElem':
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> 'FieldElem':
        b = self._coerce(other)
        if not self._nonzero or not b._nonzero:
            return self.field.zero()
        degree = self.field.degree
        if degree == 1:
            return FieldElem(self.field, (self.coeffs[0] * b.coeffs[0], ))
        if b.is_rational():
            c = b.coeffs[0]
            return FieldElem(self.field, tuple(x * c for x in self.coeffs))
        if self.is_rational():
            c = self.coeffs[0]
            return FieldElem(self.field, tuple(c * y for y in b.coeffs))
        product = [Rational(0)] * (2 * degree - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        product[i + j] += x * y
        return self.field._reduce(product)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> 'FieldElem':
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> 'FieldElem':
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> 'FieldElem':
        if k < 0:
            return self.inverse()**(-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> 'FieldElem':
        """inverse computes the multiplicative inverse with the extended Euclidean algorithm against :math:`\\Phi_N`.

        :raises FieldDivisionError:
        """

        if not self._nonzero:
            raise FieldDivisionError('division by zero')
        if self.is_rational():
            return FieldElem(self.field, (1 / self.coeffs[0], ) + self.coeffs[1:])
        x = sympy.Symbol('x')
        f = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], x, domain=sympy.QQ)
        g = sympy.Poly(list(reversed(self.field.modulus)), x, domain=sympy.QQ)
        s, _, h = f.gcdex(g)
        if h.degree() != 0:
            raise CertificationError(f"""not invertible modulo the cyclotomic polynomial: {self}""")
        coeffs = [Rational(int(c.p), int(c.q)) for c in reversed(s.all_coeffs())]
        h0 = h.all_coeffs()[-1]
        scale = Rational(int(h0.p), int(h0.q))
        return self.field.make([c / scale for c in coeffs])

    def conj(self) -> 'FieldElem':
        """conj applies :math:`\\zeta \\mapsto \\zeta^{N - 1}`, which is the complex conjugation restricted to the field.
        """

        if self.is_rational():
            return self
        n = self.field.order
        acc = [Rational(0)] * self.field.degree
        for k, c in enumerate(self.coeffs):
            if c:
                for i, r in enumerate(self.field._power_of((n - k) % n)):
                    if r:
                        acc[i] += c * r
        return FieldElem(self.field, tuple(acc))

    def embed(self, ctx: Any) -> Any:
        """embed returns the complex value under :math:`\\zeta \\mapsto e^{2 \\pi i / N}` in the given mpmath context.
        """

        value = ctx.mpc(0)
        for k, c in enumerate(self.coeffs):
            if c:
                value += (ctx.mpf(c.numerator) / c.denominator) * ctx.expjpi(ctx.mpf(2 * k) / self.field.order)
        return value

    def sort_key(self) -> Tuple[Rational, ...]:
        return self.coeffs

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"""FieldElem(N={self.field.order}, {str(self)})"""

    def __str__(self) -> str:
        terms: List[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = 'z' if k == 1 else f"""z^{k}"""
                body = power if abs(c) == 1 else f"""{abs(c)}*{power}"""
            if not terms:
                terms.append(('-' if c < 0 else '') + body)
            else:
                terms.append(('- ' if c < 0 else '+ ') + body)
        return ' '.join(terms) if terms else '0'


def elem_from_json(field: CycloField, data: Sequence[str]) -> FieldElem:
    """
    :raises ParseError:
    """

    if not isinstance(data, list) or len(data) != field.degree:
        raise ParseError(f"""a field element of Q(zeta_{field.order}) needs {field.degree} rational strings: {repr(data)}""")
    return FieldElem(field, tuple(parse_rational(s) for s in data))


def elem_arith(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    """elem_arith is the named form of the arithmetic operators.

    :raises FieldDivisionError:
    :raises FieldMismatchError:
    """

    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    elif op == 'div':
        return a / b
    else:
        raise ValueError(f"""invalid operation: {repr(op)}""")


def elem_conj(a: FieldElem) -> FieldElem:
    return a.conj()
