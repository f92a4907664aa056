# -*- coding: utf-8 -*-
"""Exact arithmetic in GF(p) and small GF(p^k)

Elements are integer codes in [0, q). For an extension field the code
sum_i c_i p^i stands for sum_i c_i a^i, where a is a root of the modulus.
Every arithmetic method accepts either scalars or numpy arrays of codes and
broadcasts like the corresponding numpy operator; scalar inputs give Python
ints back.
"""

from __future__ import division

import itertools

import numpy as np

from .constants import moduli, MAX_TABLE_ORDER, MAX_CHARACTERISTIC
from .exceptions import FieldError

from typing import Any, Optional, Sequence, Tuple
from .typing import ArrayLike, EltLike

def is_prime(n: int) -> bool:
    """Trial division primality test"""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True

def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Decompose q = p^k

    :param q: candidate field order
    :returns: (p, k), or None if q is not a prime power
    """
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1 or not is_prime(p):
        return None
    return p, k

def _remainder_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[int, ...]:
    """Remainder of a divided by the monic polynomial b over GF(p), ascending coefficients"""
    rem = [ x % p for x in a ]
    db = len(b) - 1
    for s in range(len(rem) - 1 - db, -1, -1):
        c = rem[s + db]
        if c:
            for i in range(db + 1):
                rem[s + i] = (rem[s + i] - c * b[i]) % p
    return tuple(rem[:db])

def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive factor search: no monic polynomial of degree 1..k/2 divides modulus"""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            factor = tuple(reversed(low)) + (1,)
            if not any(_remainder_mod_p(modulus, factor, p)):
                return False
    return True

def _scalar(x: Any) -> Any:
    """Hand back 0-d results as Python ints"""
    x = np.asarray(x)
    return int(x) if x.ndim == 0 else x

class FiniteField(object):
    """The finite field GF(p^k)

    :param p: prime characteristic
    :param k: extension degree
    :param modulus: monic irreducible polynomial of degree k over GF(p) in ascending
                    coefficients; defaults to the built-in table when k > 1
    """
    def __init__(self, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None):
        p, k = int(p), int(k)
        if not is_prime(p):
            raise FieldError("characteristic {} is not prime".format(p))
        if p >= MAX_CHARACTERISTIC:
            raise FieldError("characteristic {} is too large".format(p))
        if k < 1:
            raise FieldError("extension degree must be at least 1, got {}".format(k))

        self.p = p
        self.k = k
        self.q = p**k
        self.modulus: Optional[Tuple[int, ...]] = None

        self._add: Optional[ArrayLike] = None
        self._neg: Optional[ArrayLike] = None
        self._mul: Optional[ArrayLike] = None
        self._inv: Optional[ArrayLike] = None

        if k == 1:
            if modulus is not None:
                raise FieldError("a prime field takes no modulus")
            return

        if modulus is None:
            if (p, k) not in moduli:
                raise FieldError("no built-in modulus for GF({}^{})".format(p, k))
            modulus = moduli[(p, k)]
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus {} is not monic of degree {}".format(modulus, k))
        if any(c < 0 or c >= p for c in modulus):
            raise FieldError("modulus {} has coefficients outside GF({})".format(modulus, p))
        if self.q > MAX_TABLE_ORDER:
            raise FieldError("GF({}^{}) is larger than the supported {} elements".format(p, k, MAX_TABLE_ORDER))
        if not is_irreducible(modulus, p):
            raise FieldError("modulus {} is reducible over GF({})".format(modulus, p))
        self.modulus = modulus

        self._build_tables()

    def _build_tables(self) -> None:
        """Addition, negation, multiplication and inversion tables on codes"""
        p, k, q = self.p, self.k, self.q
        assert self.modulus is not None

        powers = p ** np.arange(k, dtype=np.int64)
        digits = (np.arange(q, dtype=np.int64)[:,None] // powers[None,:]) % p

        self._add = ((digits[:,None,:] + digits[None,:,:]) % p) @ powers
        self._neg = ((-digits) % p) @ powers

        prod = np.zeros([q, q, 2*k-1], dtype=np.int64)
        for i in range(k):
            prod[:,:,i:i+k] += digits[:,None,i,None] * digits[None,:,:]
        prod %= p
        mod = np.array(self.modulus, dtype=np.int64)
        for e in range(2*k-2, k-1, -1):
            lead = prod[:,:,e].copy()
            prod[:,:,e-k:e+1] = (prod[:,:,e-k:e+1] - lead[:,:,None] * mod[None,None,:]) % p
        self._mul = prod[:,:,:k] @ powers

        self._inv = np.zeros(q, dtype=np.int64)
        self._inv[1:] = np.argmax(self._mul[1:,:] == 1, axis=1)

        for table in (self._add, self._neg, self._mul, self._inv):
            table.setflags(write=False)

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def check(self, a: EltLike) -> None:
        """Raise FieldError unless every code in a lies in [0, q)"""
        arr = np.asarray(a)
        if arr.size and (arr.dtype.kind not in "iu" or np.any(arr < 0) or np.any(arr >= self.q)):
            raise FieldError("element code(s) {} out of range for {}".format(a, self))

    def elements(self) -> ArrayLike:
        """All q elements in ascending code order"""
        return np.arange(self.q, dtype=np.int64)

    def random_elements(self, rng: Any, size: Any = None) -> Any:
        """Uniformly random codes drawn from a numpy Generator"""
        return _scalar(rng.integers(0, self.q, size=size))

    def _codes(self, *args: EltLike) -> Tuple[ArrayLike, ...]:
        """Validated int64 views of the operands"""
        for a in args:
            self.check(a)
        return tuple(np.asarray(a, dtype=np.int64) for a in args)

    def add(self, a: EltLike, b: EltLike) -> Any:
        a, b = self._codes(a, b)
        if self._add is None:
            return _scalar((a + b) % self.p)
        return _scalar(self._add[a, b])

    def neg(self, a: EltLike) -> Any:
        a, = self._codes(a)
        if self._neg is None:
            return _scalar((-a) % self.p)
        return _scalar(self._neg[a])

    def sub(self, a: EltLike, b: EltLike) -> Any:
        a, b = self._codes(a, b)
        if self._add is None:
            return _scalar((a - b) % self.p)
        assert self._neg is not None
        return _scalar(self._add[a, self._neg[b]])

    def mul(self, a: EltLike, b: EltLike) -> Any:
        a, b = self._codes(a, b)
        if self._mul is None:
            return _scalar((a * b) % self.p)
        return _scalar(self._mul[a, b])

    def inv(self, a: EltLike) -> Any:
        """Multiplicative inverse; inverting zero raises FieldError"""
        a, = self._codes(a)
        if np.any(a == 0):
            raise FieldError("inversion of zero in {}".format(self))
        if self._inv is not None:
            return _scalar(self._inv[a])
        if a.ndim == 0:
            return pow(int(a), -1, self.p)
        return self.pow(a, self.p - 2)

    def div(self, a: EltLike, b: EltLike) -> Any:
        return self.mul(a, self.inv(b))

    def pow(self, a: EltLike, e: int) -> Any:
        """a^e by square and multiply, e >= 0"""
        if e < 0:
            return self.pow(self.inv(a), -e)
        base, = self._codes(a)
        out = np.ones_like(base)
        while e:
            if e & 1:
                out = np.asarray(self.mul(out, base))
            base = np.asarray(self.mul(base, base))
            e >>= 1
        return _scalar(out)

    def sum(self, a: EltLike, axis: int = -1) -> Any:
        """Field sum of a along axis"""
        a, = self._codes(a)
        if a.ndim == 0:
            return int(a)
        if self._add is None:
            return _scalar(np.sum(a, axis=axis) % self.p)
        parts = np.moveaxis(a, axis, 0)
        out = np.zeros(parts.shape[1:], dtype=np.int64)
        for part in parts:
            out = self._add[out, part]
        return _scalar(out)

    def dot(self, a: EltLike, b: EltLike) -> Any:
        """Inner product along the last axis"""
        return self.sum(self.mul(a, b), axis=-1)

    def to_text(self) -> str:
        """Field specification string, e.g. q=5 or q=2^2:1,1,1"""
        if self.k == 1:
            return "q={}".format(self.p)
        assert self.modulus is not None
        return "q={}^{}:{}".format(self.p, self.k, ",".join(str(c) for c in self.modulus))

    def _key(self) -> Tuple[int, int, Optional[Tuple[int, ...]]]:
        return (self.p, self.k, self.modulus)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.k == 1:
            return "FiniteField(p={})".format(self.p)
        return "FiniteField(p={}, k={}, modulus={})".format(self.p, self.k, self.modulus)

    def __str__(self) -> str:
        return "GF({})".format(self.q)

def field_of_order(q: int, modulus: Optional[Sequence[int]] = None) -> FiniteField:
    """Field with q elements, q a prime power

    :param q: field order
    :param modulus: optional explicit modulus for extension fields
    """
    pk = prime_power(int(q))
    if pk is None:
        raise FieldError("{} is not a prime power".format(q))
    p, k = pk
    return FiniteField(p, k, modulus if k > 1 else None)
