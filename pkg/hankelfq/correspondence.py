# -*- coding: utf-8 -*-
"""Pairs of polynomials and the Hankel matrices of their expansions at infinity

A Pade pair (u, v) has u monic of degree n and deg v < n; it is a Hermite pair
when gcd(u, v) = 1. Coprime pairs (f, g) are both monic of degree n. The map

    sigma: (f, g) -> (f, g - f) -> H_n(f, g - f) -> H_n(f, g - f) E

sends coprime pairs onto nonsingular Toeplitz matrices, and every fiber is
indexed by the next expansion coefficient a_{2n} in GF(q).
"""

from __future__ import division

import numpy as np

from .field import FiniteField
from .poly import Poly, poly_gcd, monic_polys, polys_below
from .structured import DenseMatrix, HankelMatrix, ToeplitzMatrix, bezoutian, hankel_to_toeplitz
from .exceptions import PairError, ParameterError, SingularMatrixError, InconsistencyError

from typing import Any, Iterator, List, Tuple

class PadePair(object):
    """(u, v) with u monic of degree n >= 1 and deg v < n

    :param u: monic denominator
    :param v: numerator, possibly zero
    """
    def __init__(self, u: Poly, v: Poly):
        if not isinstance(u, Poly) or not isinstance(v, Poly) or u.field != v.field:
            raise PairError("a pair needs two polynomials over the same field")
        if not u.is_monic or u.degree < 1:
            raise PairError("u = {} must be monic of positive degree".format(u))
        if not v.degree < u.degree:
            raise PairError("deg v = {} must be below deg u = {}".format(v.degree, u.degree))
        self.u = u
        self.v = v
        self.field: FiniteField = u.field
        self.n = len(u.coeffs) - 1
        self._validate()

    def _validate(self) -> None:
        pass

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, PadePair) and (self.u, self.v) == (other.u, other.v)

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __repr__(self) -> str:
        return "{}(u={}, v={})".format(self.__class__.__name__, self.u, self.v)

class HermitePair(PadePair):
    """Pade pair with gcd(u, v) = 1"""
    def _validate(self) -> None:
        if self.v.is_zero or poly_gcd(self.u, self.v).degree != 0:
            raise PairError("u = {} and v = {} are not coprime".format(self.u, self.v))

class CoprimePair(object):
    """(f, g), both monic of degree n >= 1 with gcd(f, g) = 1"""
    def __init__(self, f: Poly, g: Poly):
        if not isinstance(f, Poly) or not isinstance(g, Poly) or f.field != g.field:
            raise PairError("a pair needs two polynomials over the same field")
        if not (f.is_monic and g.is_monic) or f.degree != g.degree or f.degree < 1:
            raise PairError("f = {} and g = {} must be monic of the same positive degree".format(f, g))
        if poly_gcd(f, g).degree != 0:
            raise PairError("f = {} and g = {} are not coprime".format(f, g))
        self.f = f
        self.g = g
        self.field: FiniteField = f.field
        self.n = len(f.coeffs) - 1

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, CoprimePair) and (self.f, self.g) == (other.f, other.g)

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.f, self.g))

    def __repr__(self) -> str:
        return "CoprimePair(f={}, g={})".format(self.f, self.g)

def cpp_to_hermite(p: CoprimePair) -> HermitePair:
    """(f, g) -> (f, g - f); the difference of two monic polynomials of degree n has degree < n"""
    return HermitePair(p.f, p.g - p.f)

def hermite_to_cpp(h: HermitePair) -> CoprimePair:
    """(u, v) -> (u, u + v)"""
    if not isinstance(h, HermitePair):
        h = HermitePair(h.u, h.v)
    return CoprimePair(h.u, h.u + h.v)

def pade_expand(p: PadePair, N: int) -> Tuple[int, ...]:
    """First N coefficients of v(X)/u(X) = sum_{i>=1} a_i X^{-i}

    Comparing coefficients of X^{n-m} in v = u * sum a_i X^{-i} gives
    a_m = v_{n-m} - sum_{j=n-m+1}^{n-1} u_j a_{j-n+m}.
    """
    if N < 1:
        raise ParameterError("expansion needs at least one term, got {}".format(N))
    F = p.field
    n = p.n
    u = p.u.coefficients(n + 1)
    v = p.v.coefficients(n)

    a = np.zeros(N + 1, dtype=np.int64)
    for m in range(1, N + 1):
        vm = int(v[n-m]) if m <= n else 0
        js = np.arange(max(0, n-m+1), n)
        acc = F.dot(u[js], a[js-n+m]) if js.size else 0
        a[m] = F.sub(vm, acc)
    return tuple(int(x) for x in a[1:])

def hankel_of_pair(p: PadePair) -> HankelMatrix:
    """H_n(u, v), the Hankel matrix of a_1, ..., a_{2n-1}"""
    return HankelMatrix(p.field, pade_expand(p, 2*p.n - 1))

def barnett_triple(p: PadePair) -> Tuple[DenseMatrix, DenseMatrix, DenseMatrix]:
    """(B_n(u,v), B_n(u,1), H_n(u,v)), checked against B_n(u,v) = B_n(u,1) H_n(u,v) B_n(u,1)"""
    n = p.n
    B_uv = bezoutian(p.u, p.v, n)
    B_u1 = bezoutian(p.u, Poly.constant(p.field, 1), n)
    H = hankel_of_pair(p).dense()
    if B_u1 @ H @ B_u1 != B_uv:
        raise InconsistencyError("Barnett factorization for {!r}".format(p))
    return B_uv, B_u1, H

def sigma_hankel(h: HermitePair) -> HankelMatrix:
    """(u, v) -> H_n(u, v) on Hermite pairs"""
    return hankel_of_pair(h)

def sigma(p: CoprimePair) -> ToeplitzMatrix:
    """Coprime pair -> nonsingular Toeplitz matrix"""
    return hankel_to_toeplitz(hankel_of_pair(cpp_to_hermite(p)))

def fiber_element(B: HankelMatrix, lam: int) -> HermitePair:
    """The Hermite pair (u, v) with H_n(u, v) = B and a_{2n} = lam

    u_0, ..., u_{n-1} solve B u = -(b_{n+1}, ..., b_{2n}) with b_{2n} = lam, u_n = 1,
    and v_{i-1} = sum_{j=i}^{n} b_{j-i+1} u_j.
    """
    F = B.field
    F.check(lam)
    n = B.n
    b = np.array(B.a + (int(lam),), dtype=np.int64)

    try:
        low = B.dense().solve(F.neg(b[n:2*n]))
    except SingularMatrixError:
        raise SingularMatrixError("Hankel matrix {}".format(list(B.a)))
    u = np.append(low, 1)
    v = [ F.dot(b[:n-i+1], u[i:]) for i in range(1, n+1) ]

    return HermitePair(Poly(F, u), Poly(F, v))

def fiber(B: HankelMatrix) -> List[CoprimePair]:
    """The q coprime pairs whose image under sigma is B E, in ascending order of lam"""
    if B.rank() != B.n:
        raise SingularMatrixError("Hankel matrix {}".format(list(B.a)))
    return [ hermite_to_cpp(fiber_element(B, lam)) for lam in B.field.elements() ]

def pade_pairs(field: FiniteField, n: int) -> Iterator[PadePair]:
    """All q^{2n} Pade pairs of order n"""
    for u in monic_polys(field, n):
        for v in polys_below(field, n):
            yield PadePair(u, v)

def coprime_pairs(field: FiniteField, n: int) -> Iterator[CoprimePair]:
    """All coprime monic pairs of degree n, f-major"""
    gs = list(monic_polys(field, n))
    for f in gs:
        for g in gs:
            if poly_gcd(f, g).degree == 0:
                yield CoprimePair(f, g)
