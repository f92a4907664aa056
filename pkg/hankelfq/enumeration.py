# -*- coding: utf-8 -*-
"""Counting formulas, stratum membership tests and the brute-force oracles that check them

Strata of n x n Hankel matrices A = (a_{i+j-1}):
  H^(k)    matrices with delta(A) = k
  H^(k)(r) matrices in H^(k) with rank(A) <= r

For 1 <= k < n and A_k nonsingular, let x solve A_k x = (a_{k+1}, ..., a_{2k}), i.e.
a_{k+t} = x_1 a_t + ... + x_k a_{t+k-1} for t = 1..k. Then A is in H^(k) exactly
when that relation keeps holding up to t = n, and in H^(k)(r) exactly when it
holds up to t = 2n-r-1.
"""

from __future__ import division

import functools
import logging
from fractions import Fraction

import numpy as np

from .field import FiniteField, prime_power
from .poly import Poly, monic_from_index, tuple_gcd
from .structured import HankelMatrix, hankel_matrices, hankel_count, rank, delta, toeplitz_to_hankel
from .correspondence import CoprimePair, sigma, fiber, coprime_pairs
from .census import CensusTable, CoprimeCensus
from .batch import BatchedCensus
from .constants import DEFAULT_BUDGET
from .exceptions import ParameterError, SingularMatrixError, BudgetExceeded

from typing import Any, Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger("hankelfq")

def _require_prime_power(q: int) -> None:
    if prime_power(q) is None:
        raise ParameterError("q = {} is not a prime power".format(q))

def _require_order(n: int) -> None:
    if n < 1:
        raise ParameterError("matrix order must be at least 1, got {}".format(n))

def _degrees(degrees: Sequence[int]) -> Tuple[int, ...]:
    out = tuple(int(d) for d in degrees)
    if not out:
        raise ParameterError("at least one degree is required")
    if min(out) < 0:
        raise ParameterError("degrees must be nonnegative, got {}".format(out))
    return out

def count_coprime_tuples(q: int, degrees: Sequence[int]) -> int:
    """Number of coprime m-tuples of monic polynomials of degrees n_1, ..., n_m

    q^{n_1+...+n_m} (1 - q^{1-m}) if every n_i >= 1, and q^{n_1+...+n_m} otherwise.
    """
    _require_prime_power(q)
    degrees = _degrees(degrees)
    s = sum(degrees)
    if min(degrees) == 0:
        return q**s
    return q**s - q**(s - len(degrees) + 1)

def coprime_probability(q: int, degrees: Sequence[int]) -> Fraction:
    """Probability that independent uniform monic polynomials of the given degrees are coprime"""
    degrees = _degrees(degrees)
    return Fraction(count_coprime_tuples(q, degrees), q**sum(degrees))

def count_coprime_pairs(q: int, n: int) -> int:
    """q^{2n-1}(q-1) ordered pairs of coprime monic polynomials of degree n >= 1"""
    _require_order(n)
    return count_coprime_tuples(q, (n, n))

def count_hankel_by_rank(q: int, n: int, r: int) -> int:
    """Number of n x n Hankel matrices of rank exactly r"""
    _require_prime_power(q)
    _require_order(n)
    if not 0 <= r <= n:
        raise ParameterError("rank {} out of range for order {}".format(r, n))
    if r == 0:
        return 1
    if r < n:
        return q**(2*r-2) * (q*q - 1)
    return q**(2*n-2) * (q - 1)

def count_stratum(q: int, n: int, k: int) -> int:
    """|H^(k)|: q^{n-1} for k = 0, q^{n+k-2}(q-1) for 1 <= k <= n"""
    _require_prime_power(q)
    _require_order(n)
    if not 0 <= k <= n:
        raise ParameterError("delta {} out of range for order {}".format(k, n))
    if k == 0:
        return q**(n-1)
    return q**(n+k-2) * (q - 1)

def count_nonsingular_hankel(q: int, n: int) -> int:
    """|HGL_n| = q^{2n-2}(q-1), which is also the number of nonsingular Toeplitz matrices"""
    return count_stratum(q, n, n)

def count_stratum_rank(q: int, n: int, k: int, r: int) -> int:
    """|H^(k)(r)|: q^r for k = 0, q^{r+k-1}(q-1) for 1 <= k <= r < n"""
    _require_prime_power(q)
    _require_order(n)
    if not 0 <= k <= r < n:
        raise ParameterError("need 0 <= k <= r < n, got k={}, r={}, n={}".format(k, r, n))
    if k == 0:
        return q**r
    return q**(r+k-1) * (q - 1)

def count_rank_at_most(q: int, n: int, r: int) -> int:
    """Number of n x n Hankel matrices of rank <= r: q^{2r} for r < n, all q^{2n-1} for r = n"""
    _require_prime_power(q)
    _require_order(n)
    if not 0 <= r <= n:
        raise ParameterError("rank {} out of range for order {}".format(r, n))
    return q**(2*r) if r < n else q**(2*n-1)

def recurrence_vector(A: HankelMatrix, k: int) -> Tuple[int, ...]:
    """The unique x with A_k x = (a_{k+1}, ..., a_{2k})"""
    if not 1 <= k <= A.n - 1:
        raise ParameterError("recurrence length {} out of range for order {}".format(k, A.n))
    try:
        x = A.leading(k).dense().solve(A.vector()[k:2*k])
    except SingularMatrixError:
        raise SingularMatrixError("leading submatrix A_{}".format(k))
    return tuple(int(c) for c in x)

def _relation_holds(A: HankelMatrix, x: Sequence[int], tmax: int) -> bool:
    """a_{k+t} = x_1 a_t + ... + x_k a_{t+k-1} for t = 1..tmax"""
    k = len(x)
    a = A.vector()
    windows = np.lib.stride_tricks.sliding_window_view(a, k)[:tmax]
    return bool(np.array_equal(a[k:k+tmax], A.field.dot(windows, np.asarray(x, dtype=np.int64))))

def in_stratum(A: HankelMatrix, k: int) -> bool:
    """delta(A) == k, decided through the recurrence rather than by minors above A_k"""
    n = A.n
    if not 0 <= k <= n:
        raise ParameterError("delta {} out of range for order {}".format(k, n))
    if k == 0:
        return not any(A.a[:n])
    if k == n:
        return A.det() != 0
    if A.leading(k).det() == 0:
        return False
    return _relation_holds(A, recurrence_vector(A, k), n)

def in_stratum_rank(A: HankelMatrix, k: int, r: int) -> bool:
    """delta(A) == k and rank(A) <= r, decided through the recurrence alone"""
    n = A.n
    if not 0 <= k <= r < n:
        raise ParameterError("need 0 <= k <= r < n, got k={}, r={}, n={}".format(k, r, n))
    if k == 0:
        return not any(A.a[:2*n-r-1])
    if A.leading(k).det() == 0:
        return False
    return _relation_holds(A, recurrence_vector(A, k), 2*n-r-1)

def stratum_chart(A: HankelMatrix, k: int, r: Optional[int] = None) -> Tuple[HankelMatrix, Tuple[int, ...]]:
    """Coordinates of A in its stratum

    Without r: A in H^(k), 1 <= k < n, maps to (A_k, (a_{2k}, a_{n+k+1}, ..., a_{2n-1})).
    With r:    A in H^(k)(r), 1 <= k <= r < n, maps to (A_k, (a_{2k}, a_{2n-r+k}, ..., a_{2n-1})).
    """
    n = A.n
    if r is None:
        if not 1 <= k < n:
            raise ParameterError("chart of H^({}) needs 1 <= k < n = {}".format(k, n))
        if not in_stratum(A, k):
            raise ParameterError("matrix is not in H^({})".format(k))
        rest = A.a[n+k:]
    else:
        if not 1 <= k <= r < n:
            raise ParameterError("chart of H^({})({}) needs 1 <= k <= r < n = {}".format(k, r, n))
        if not in_stratum_rank(A, k, r):
            raise ParameterError("matrix is not in H^({})({})".format(k, r))
        rest = A.a[2*n-r+k-1:]
    return A.leading(k), (A.a[2*k-1],) + rest

def stratum_from_chart(leading: HankelMatrix, tail: Sequence[int], n: int, r: Optional[int] = None) -> HankelMatrix:
    """Inverse of stratum_chart: extend A_k by running the recurrence forward"""
    F = leading.field
    k = leading.n
    expected = n - k if r is None else r - k + 1
    if not (k < n if r is None else k <= r < n):
        raise ParameterError("chart of order {} does not fit order {}".format(k, n))
    if len(tail) != expected:
        raise ParameterError("chart tail needs {} entries, got {}".format(expected, len(tail)))
    F.check(np.asarray(tail, dtype=np.int64))

    a: List[int] = list(leading.a) + [int(tail[0])]
    try:
        x = leading.dense().solve(np.array(a[k:2*k], dtype=np.int64))
    except SingularMatrixError:
        raise SingularMatrixError("chart leading block")

    upto = n + k if r is None else 2*n - r - 1 + k
    while len(a) < upto:
        a.append(F.dot(x, np.array(a[len(a)-k:], dtype=np.int64)))
    a.extend(int(t) for t in tail[1:])
    return HankelMatrix(F, a)

def monic_tuple_at(field: FiniteField, degrees: Sequence[int], index: int) -> Tuple[Poly, ...]:
    """index-th m-tuple of monic polynomials, the first entry most significant"""
    out: List[Poly] = []
    for d in reversed(degrees):
        index, sub = divmod(index, field.q**d)
        out.append(monic_from_index(field, d, sub))
    return tuple(reversed(out))

def hankel_census_chunk(field: FiniteField, n: int, start: int, stop: int) -> CensusTable:
    """Tally (rank, delta) by dense elimination over one index range"""
    table = CensusTable(field, n)
    for A in hankel_matrices(field, n, start, stop):
        table.add(rank(A), delta(A))
    return table

def coprime_census_chunk(field: FiniteField, degrees: Tuple[int, ...], start: int, stop: int) -> CoprimeCensus:
    """Tally GCD degrees over one index range"""
    table = CoprimeCensus(field, degrees)
    for index in range(start, stop):
        table.add(int(tuple_gcd(monic_tuple_at(field, degrees, index)).degree))
    return table

def brute_hankel_census(field: FiniteField, n: int, **options: Any) -> CensusTable:
    """Exhaustive (rank, delta) census of n x n Hankel matrices

    :param options: passed to BatchedCensus (nprocs, budget, chunks)
    """
    _require_order(n)
    logger.info("Hankel census of order {} over {}".format(n, field))
    worker = functools.partial(hankel_census_chunk, field, n)
    return BatchedCensus(worker, hankel_count(field, n), **options).compute()

def brute_coprime_census(field: FiniteField, degrees: Sequence[int], **options: Any) -> CoprimeCensus:
    """Exhaustive census of monic m-tuples by the degree of their GCD

    :param options: passed to BatchedCensus (nprocs, budget, chunks)
    """
    degrees = _degrees(degrees)
    logger.info("coprime census of degrees {} over {}".format(degrees, field))
    worker = functools.partial(coprime_census_chunk, field, degrees)
    return BatchedCensus(worker, field.q**sum(degrees), **options).compute()

class Report(object):
    """Named pass/fail checks and counts from a verification run"""
    def __init__(self, kind: str, **header: Any):
        self.kind = kind
        self.items: Dict[str, Any] = dict(header)
        self.checks: List[str] = []

    def record(self, name: str, value: Any) -> None:
        self.items[name] = value

    def check(self, name: str, ok: bool) -> bool:
        ok = bool(ok)
        self.items[name] = ok
        self.checks.append(name)
        if not ok:
            logger.warning("{} verification: check '{}' failed".format(self.kind, name))
        return ok

    @property
    def passed(self) -> bool:
        return all(self.items[c] for c in self.checks)

    def __getitem__(self, name: str) -> Any:
        return self.items[name]

    def as_dict(self) -> Dict:
        out: Dict[str, Any] = { "check" : self.kind }
        out.update(self.items)
        out["passed"] = self.passed
        return out

def verify_sigma(field: FiniteField, n: int, **options: Any) -> Report:
    """Enumerate every coprime pair of degree n and check that sigma is onto the
    nonsingular Toeplitz matrices with fibers of size q that fiber() rebuilds

    :param options: budget (default DEFAULT_BUDGET)
    """
    _require_order(n)
    q = field.q
    budget = int(options.get("budget", DEFAULT_BUDGET))
    if q**(2*n) > budget:
        raise BudgetExceeded(q**(2*n), budget)

    logger.info("verifying sigma of order {} over {}".format(n, field))
    images: Dict[Any, List[CoprimePair]] = {}
    pairs = 0
    nonsingular = True
    for p in coprime_pairs(field, n):
        T = sigma(p)
        pairs += 1
        if T.rank() != n:
            nonsingular = False
        images.setdefault(T, []).append(p)

    expected = count_nonsingular_hankel(q, n)
    sizes = { len(ps) for ps in images.values() }

    reconstructs = True
    for T, ps in images.items():
        try:
            rebuilt = fiber(toeplitz_to_hankel(T))
        except SingularMatrixError:
            reconstructs = False
            continue
        if set(rebuilt) != set(ps) or len(set(rebuilt)) != len(rebuilt):
            reconstructs = False

    report = Report("sigma", q=q, n=n)
    report.record("pairs", pairs)
    report.record("images", len(images))
    report.record("fiber_size", sizes.pop() if len(sizes) == 1 else None)
    report.check("nonsingular", nonsingular)
    report.check("surjective", nonsingular and len(images) == expected)
    report.check("fibers_uniform", report["fiber_size"] == q)
    report.check("pair_count", pairs == count_coprime_pairs(q, n) == q * expected)
    report.check("reconstructs", reconstructs)
    return report

def verify_hankel(field: FiniteField, n: int, **options: Any) -> Report:
    """Compare a brute (rank, delta) census against every closed-form count

    :param options: passed to BatchedCensus (nprocs, budget, chunks)
    """
    q = field.q
    table = brute_hankel_census(field, n, **options)

    report = Report("hankel", q=q, n=n)
    report.record("total", table.total)
    report.check("total_count", table.total == q**(2*n-1))
    report.check("rank_counts", all(table.count(rank=r) == count_hankel_by_rank(q, n, r) for r in range(n+1)))
    report.check("stratum_counts", all(table.count(delta=k) == count_stratum(q, n, k) for k in range(n+1)))
    report.check("stratum_rank_counts", all(table.count_rank_at_most(r, delta=k) == count_stratum_rank(q, n, k, r)
        for r in range(n) for k in range(r+1)))
    report.check("rank_at_most_counts", all(table.count_rank_at_most(r) == count_rank_at_most(q, n, r) for r in range(n+1)))
    report.check("delta_bounded", all(k <= r for (r, k), c in table.cells.items() if c))
    return report

def verify_coprime(field: FiniteField, degrees: Sequence[int], **options: Any) -> Report:
    """Compare a brute GCD-degree census against the closed-form count and the
    partition identity |S_d| = q^d N(n_1-d, ..., n_m-d)

    :param options: passed to BatchedCensus (nprocs, budget, chunks)
    """
    degrees = _degrees(degrees)
    q = field.q
    table = brute_coprime_census(field, degrees, **options)

    parts = all(table.by_gcd_degree.get(d, 0) == q**d * count_coprime_tuples(q, [ n - d for n in degrees ])
            for d in range(min(degrees) + 1))

    report = Report("coprime", q=q, degrees=list(degrees))
    report.record("coprime", table.coprime)
    report.record("total", table.total)
    report.check("coprime_count", table.coprime == count_coprime_tuples(q, degrees))
    report.check("partition", parts)
    report.check("total_count", table.total == q**sum(degrees))
    return report
