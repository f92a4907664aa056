# -*- coding: utf-8 -*-
"""Hankel and Toeplitz matrices, rank, the leading-minor index and the Bezoutian

A Hankel or Toeplitz matrix of order n is stored as the (2n-1)-vector
a_1, ..., a_{2n-1} that determines it: entry (i,j) is a_{i+j-1} for Hankel and
a_{n+i-j} for Toeplitz (1-based). Dense forms are materialized on demand.
"""

from __future__ import division

import numpy as np
import scipy.linalg

from .field import FiniteField
from .poly import Poly
from . import linalg
from .exceptions import ParameterError, PolynomialError

from typing import Any, Iterator, Optional, Sequence, Tuple, Union
from .typing import ArrayLike, MatrixT

class DenseMatrix(object):
    """Row-major matrix of element codes

    :param field: field the entries live in
    :param entries: 2-d array-like of codes
    """
    def __init__(self, field: FiniteField, entries: Any):
        arr = np.array(entries, copy=True)
        if arr.ndim != 2:
            raise ParameterError("a dense matrix needs a 2-d grid of entries, got shape {}".format(arr.shape))
        field.check(arr)
        arr = arr.astype(np.int64)
        arr.setflags(write=False)
        self.field = field
        self.entries: ArrayLike = arr

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> 'DenseMatrix':
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> 'DenseMatrix':
        return cls(field, np.zeros([rows, cols], dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def dense(self) -> 'DenseMatrix':
        return self

    def transpose(self) -> 'DenseMatrix':
        return DenseMatrix(self.field, self.entries.T)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def rank(self) -> int:
        return linalg.rank(self.field, self.entries)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ParameterError("determinant of a non-square {}x{} matrix".format(self.rows, self.cols))
        return linalg.determinant(self.field, self.entries)

    def solve(self, b: Any) -> ArrayLike:
        """Unique x with self x = b; raises SingularMatrixError"""
        return linalg.solve(self.field, self.entries, b)

    def __matmul__(self, other: 'DenseMatrix') -> 'DenseMatrix':
        if other.field != self.field or self.cols != other.rows:
            raise ParameterError("cannot multiply {}x{} by {}x{}".format(self.rows, self.cols, other.rows, other.cols))
        return DenseMatrix(self.field, linalg.matmul(self.field, self.entries, other.entries))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return int(self.entries[ij])

    def tolist(self) -> list:
        return self.entries.tolist()

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, DenseMatrix) and self.field == other.field \
                and np.array_equal(self.entries, other.entries)

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return "DenseMatrix({}, {})".format(self.field, self.tolist())

class _Structured(object):
    """Common storage for matrices determined by a (2n-1)-vector"""
    kind = "?"

    def __init__(self, field: FiniteField, a: Sequence[int]):
        arr = np.array(a).reshape(-1)
        if arr.size % 2 != 1:
            raise ParameterError("a structured matrix of order n needs 2n-1 entries, got {}".format(arr.size))
        field.check(arr)
        self.field = field
        self.a: Tuple[int, ...] = tuple(int(x) for x in arr)
        self.n = (len(self.a) + 1) // 2

    def vector(self) -> ArrayLike:
        return np.array(self.a, dtype=np.int64)

    def dense(self) -> DenseMatrix:
        raise NotImplementedError("structured matrices need a dense function")

    def rank(self) -> int:
        return self.dense().rank()

    def det(self) -> int:
        return self.dense().det()

    def __eq__(self, other: Any) -> bool:
        return type(other) is type(self) and self.field == other.field and self.a == other.a

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.kind, self.field, self.a))

    def __repr__(self) -> str:
        return "{}({}, a={})".format(self.__class__.__name__, self.field, list(self.a))

class HankelMatrix(_Structured):
    """n x n Hankel matrix with (i,j) entry a_{i+j-1}

    :param field: field of the entries
    :param a: the 2n-1 codes a_1, ..., a_{2n-1}
    """
    kind = "H"

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        """Entry at 0-based (i, j)"""
        i, j = ij
        return self.a[i+j]

    def dense(self) -> DenseMatrix:
        v = self.vector()
        return DenseMatrix(self.field, scipy.linalg.hankel(v[:self.n], v[self.n-1:]))

    def leading(self, d: int) -> 'HankelMatrix':
        """Leading principal d x d submatrix A_d, itself Hankel"""
        if not 1 <= d <= self.n:
            raise ParameterError("leading submatrix of order {} of a {}x{} matrix".format(d, self.n, self.n))
        return HankelMatrix(self.field, self.a[:2*d-1])

class ToeplitzMatrix(_Structured):
    """n x n Toeplitz matrix with (i,j) entry a_{n+i-j}

    :param field: field of the entries
    :param a: the 2n-1 codes a_1, ..., a_{2n-1}
    """
    kind = "T"

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.a[self.n-1+i-j]

    def dense(self) -> DenseMatrix:
        v = self.vector()
        return DenseMatrix(self.field, scipy.linalg.toeplitz(v[self.n-1:], v[self.n-1::-1]))

def antidiagonal(field: FiniteField, n: int) -> DenseMatrix:
    """The matrix E with ones on the antidiagonal"""
    return DenseMatrix(field, np.fliplr(np.eye(n, dtype=np.int64)))

def hankel_to_toeplitz(A: HankelMatrix) -> ToeplitzMatrix:
    """A -> A E; reversing the columns of (a_{i+j-1}) gives (a_{n+i-j}) with the same vector"""
    return ToeplitzMatrix(A.field, A.a)

def toeplitz_to_hankel(T: ToeplitzMatrix) -> HankelMatrix:
    """Inverse of hankel_to_toeplitz, T -> T E"""
    return HankelMatrix(T.field, T.a)

def rank(M: MatrixT) -> int:
    """Exact rank of a dense, Hankel or Toeplitz matrix"""
    return M.dense().rank()

def determinant(M: MatrixT) -> int:
    return M.dense().det()

def delta(A: HankelMatrix) -> int:
    """Largest d with A_d nonsingular, 0 if every leading principal minor vanishes"""
    for d in range(A.n, 0, -1):
        if A.leading(d).det() != 0:
            return d
    return 0

def bezoutian(u: Poly, v: Poly, n: int) -> DenseMatrix:
    """n-th order Bezoutian B_n(u, v)

    Entry (i,j) is sum_{s=1}^{min(i,j)} (v_{s-1} u_{i+j-s} - u_{s-1} v_{i+j-s}),
    the coefficient of X^{i-1} Y^{j-1} in (u(X) v(Y) - v(X) u(Y)) / (X - Y).
    """
    u._check(v)
    if u.degree > n or v.degree > n:
        raise PolynomialError("Bezoutian of order {} needs degrees <= {}, got {} and {}".format(n, n, u.degree, v.degree))
    F = u.field
    if n == 0:
        return DenseMatrix.zeros(F, 0, 0)

    # index 2n holds a zero used for masked terms
    uu = u.coefficients(2*n + 1)
    vv = v.coefficients(2*n + 1)

    i, j, s = np.meshgrid(np.arange(1, n+1), np.arange(1, n+1), np.arange(1, n+1), indexing="ij")
    live = s <= np.minimum(i, j)
    low = np.where(live, s - 1, 2*n)
    high = np.where(live, i + j - s, 2*n)

    terms = F.sub(F.mul(vv[low], uu[high]), F.mul(uu[low], vv[high]))
    return DenseMatrix(F, F.sum(terms, axis=-1))

def hankel_count(field: FiniteField, n: int) -> int:
    return field.q**(2*n-1)

def hankel_matrix_at(field: FiniteField, n: int, index: int) -> HankelMatrix:
    """index-th Hankel matrix in lexicographic order of (a_1, ..., a_{2n-1}), a_1 most significant"""
    q = field.q
    digits = []
    for _ in range(2*n-1):
        index, digit = divmod(index, q)
        digits.append(digit)
    return HankelMatrix(field, digits[::-1])

def hankel_matrices(field: FiniteField, n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[HankelMatrix]:
    """All q^{2n-1} Hankel matrices of order n, or the contiguous slice [start, stop) of them"""
    if n < 1:
        raise ParameterError("Hankel matrices need order n >= 1, got {}".format(n))
    total = hankel_count(field, n)
    stop = total if stop is None else min(stop, total)
    for index in range(start, stop):
        yield hankel_matrix_at(field, n, index)
