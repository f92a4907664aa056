# -*- coding: utf-8 -*-
"""Dense univariate polynomials over a finite field"""

from __future__ import division

import numpy as np

from .field import FiniteField
from .exceptions import PolynomialError

from typing import Any, Iterator, List, Sequence, Tuple
from .typing import ArrayLike, Degree, EltLike

# degree of the zero polynomial, below every natural number
ZERO_DEGREE = float("-inf")

class Poly(object):
    """Polynomial with coefficients in a finite field, stored in ascending powers

    The coefficient tuple never ends in a zero, so the zero polynomial has no
    coefficients at all.

    :param field: coefficient field
    :param coeffs: element codes c_0, c_1, ... of c_0 + c_1 X + ...
    """
    def __init__(self, field: FiniteField, coeffs: Any = ()):
        arr = np.array(coeffs).reshape(-1)
        field.check(arr)
        arr = arr.astype(np.int64)
        nonzero = np.nonzero(arr)[0]
        top = nonzero[-1] + 1 if nonzero.size else 0
        self.field = field
        self.coeffs: Tuple[int, ...] = tuple(int(c) for c in arr[:top])

    @classmethod
    def constant(cls, field: FiniteField, c: int) -> 'Poly':
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FiniteField, e: int, c: int = 1) -> 'Poly':
        """c X^e"""
        return cls(field, [0] * e + [c])

    @classmethod
    def X(cls, field: FiniteField) -> 'Poly':
        return cls.monomial(field, 1)

    @property
    def degree(self) -> Degree:
        """Degree; ZERO_DEGREE for the zero polynomial"""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        """Leading coefficient, 0 for the zero polynomial"""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficients(self, length: int) -> ArrayLike:
        """Coefficient array padded with zeros (or truncated) to length"""
        out = np.zeros(length, dtype=np.int64)
        m = min(length, len(self.coeffs))
        out[:m] = self.coeffs[:m]
        return out

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def monic(self) -> 'Poly':
        """Scale to leading coefficient one"""
        if self.is_zero:
            raise PolynomialError("the zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.leading))

    def scale(self, c: int) -> 'Poly':
        if not self.coeffs:
            return self
        return Poly(self.field, self.field.mul(c, np.array(self.coeffs, dtype=np.int64)))

    def evaluate(self, x: EltLike) -> Any:
        """Horner evaluation; x may be a code or an array of codes"""
        F = self.field
        out: Any = F.mul(x, 0)
        for c in reversed(self.coeffs):
            out = F.add(F.mul(out, x), c)
        return out

    __call__ = evaluate

    def _check(self, other: 'Poly') -> None:
        if not isinstance(other, Poly):
            raise PolynomialError("cannot combine a polynomial with {!r}".format(other))
        if other.field != self.field:
            raise PolynomialError("polynomials over {} and {} cannot be combined".format(self.field, other.field))

    def __add__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, self.field.add(self.coefficients(m), other.coefficients(m)))

    def __sub__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, self.field.sub(self.coefficients(m), other.coefficients(m)))

    def __neg__(self) -> 'Poly':
        return Poly(self.field, self.field.neg(self.coefficients(len(self.coeffs))))

    def __mul__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(self.field)
        F = self.field
        b = np.array(other.coeffs, dtype=np.int64)
        nb = len(b)
        out = np.zeros(len(self.coeffs) + nb - 1, dtype=np.int64)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i:i+nb] = F.add(out[i:i+nb], F.mul(c, b))
        return Poly(F, out)

    def __divmod__(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        """Euclidean division: self = quotient * other + remainder, deg remainder < deg other"""
        self._check(other)
        if other.is_zero:
            raise PolynomialError("division by the zero polynomial")
        F = self.field
        db = len(other.coeffs) - 1
        dq = len(self.coeffs) - 1 - db
        if dq < 0:
            return Poly(F), self

        b = np.array(other.coeffs, dtype=np.int64)
        lead_inv = F.inv(other.leading)
        rem = np.array(self.coeffs, dtype=np.int64)
        quot = np.zeros(dq + 1, dtype=np.int64)
        for s in range(dq, -1, -1):
            c = F.mul(int(rem[s+db]), lead_inv)
            quot[s] = c
            if c:
                rem[s:s+db+1] = F.sub(rem[s:s+db+1], F.mul(c, b))
        return Poly(F, quot), Poly(F, rem[:db])

    def __floordiv__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[0]

    def __mod__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[1]

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return "Poly({!r}, {})".format(self.field, list(self.coeffs))

    def __str__(self) -> str:
        """Symbolic form with integer codes, e.g. 2*X^3+1"""
        if self.is_zero:
            return "0"
        terms: List[str] = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            power = "X" if e == 1 else "X^{}".format(e)
            terms.append(power if c == 1 else "{}*{}".format(c, power))
        return "+".join(terms)

def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by Euclid, normalizing at every step"""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise PolynomialError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    a = a.monic()
    while not b.is_zero:
        a, b = b.monic(), a % b
    return a

def tuple_gcd(fs: Sequence[Poly]) -> Poly:
    """Monic GCD of an m-tuple, ignoring zero entries"""
    nonzero = [ f for f in fs if not f.is_zero ]
    if not nonzero:
        raise PolynomialError("the GCD of an all-zero tuple is undefined")
    out = nonzero[0].monic()
    for f in nonzero[1:]:
        if out.degree == 0:
            break
        out = poly_gcd(out, f)
    return out

def tuple_coprime(fs: Sequence[Poly]) -> bool:
    """True iff the monic GCD of all entries is 1"""
    return tuple_gcd(fs).degree == 0

def monic_from_index(field: FiniteField, n: int, index: int) -> Poly:
    """The index-th monic polynomial of degree n: a_i is the i-th base-q digit of index"""
    q = field.q
    low = []
    for _ in range(n):
        index, digit = divmod(index, q)
        low.append(digit)
    return Poly(field, low + [1])

def monic_polys(field: FiniteField, n: int) -> Iterator[Poly]:
    """All q^n monic polynomials of degree exactly n

    Ordered by the code sum_i a_i q^i of the lower coefficients, so
    X^2, X^2+1, X^2+X, X^2+X+1 over GF(2).
    """
    if n < 0:
        raise PolynomialError("degree must be nonnegative, got {}".format(n))
    for index in range(field.q**n):
        yield monic_from_index(field, n, index)

def polys_below(field: FiniteField, n: int) -> Iterator[Poly]:
    """All q^n polynomials of degree < n, the zero polynomial first"""
    q = field.q
    for index in range(q**n):
        digits = []
        for _ in range(n):
            index, digit = divmod(index, q)
            digits.append(digit)
        yield Poly(field, digits)
