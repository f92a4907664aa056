# -*- coding: utf-8 -*-
"""Gaussian elimination over a finite field on numpy arrays of element codes"""

from __future__ import division

import numpy as np

from .field import FiniteField
from .exceptions import SingularMatrixError

from typing import List, Tuple
from .typing import ArrayLike

def row_reduce(field: FiniteField, M: ArrayLike) -> Tuple[ArrayLike, List[int], int]:
    """Gauss-Jordan elimination, pivoting on the first nonzero entry of each column

    :param field: field the entries live in
    :param M: 2-d array of codes (left untouched)

    :returns: (reduced row echelon form, pivot columns, determinant);
              the determinant is 0 unless M is square and nonsingular
    """
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    det = 1
    pivots: List[int] = []

    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:,c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv],:] = R[[piv, r],:]
            det = field.neg(det)

        pv = int(R[r,c])
        det = field.mul(det, pv)
        R[r,:] = field.mul(field.inv(pv), R[r,:])

        others = np.nonzero(R[:,c])[0]
        others = others[others != r]
        if others.size:
            R[others,:] = field.sub(R[others,:], field.mul(R[others,c][:,None], R[r,:][None,:]))

        pivots.append(c)
        r += 1

    if rows != cols or len(pivots) < rows:
        det = 0
    return R, pivots, det

def rank(field: FiniteField, M: ArrayLike) -> int:
    """Exact rank"""
    return len(row_reduce(field, M)[1])

def determinant(field: FiniteField, M: ArrayLike) -> int:
    """Determinant of a square matrix"""
    M = np.asarray(M)
    assert M.ndim == 2 and M.shape[0] == M.shape[1]
    if M.shape[0] == 0:
        return 1
    return row_reduce(field, M)[2]

def solve(field: FiniteField, A: ArrayLike, b: ArrayLike) -> ArrayLike:
    """Unique solution x of A x = b for square nonsingular A

    :param b: right-hand side, a vector or a matrix of column vectors
    """
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n = A.shape[0]
    assert A.shape == (n, n)
    vector = b.ndim == 1
    rhs = b.reshape(n, -1)

    R, pivots, _ = row_reduce(field, np.hstack([A, rhs]))
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError()
    x = R[:,n:]
    return x[:,0] if vector else x

def matmul(field: FiniteField, A: ArrayLike, B: ArrayLike) -> ArrayLike:
    """Matrix product as a sum of outer products of columns and rows"""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    assert A.shape[1] == B.shape[0]
    out = np.zeros([A.shape[0], B.shape[1]], dtype=np.int64)
    for t in range(A.shape[1]):
        out = np.asarray(field.add(out, field.mul(A[:,t:t+1], B[t:t+1,:])))
    return out
