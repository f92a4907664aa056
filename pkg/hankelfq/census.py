# -*- coding: utf-8 -*-
"""Collect tallies from exhaustive enumerations"""

from __future__ import print_function, division

import sys

from .version import __version__
from .field import FiniteField

from typing import Any, Dict, List, Optional, Sequence, Tuple

class CensusTable(object):
    """Counts of n x n Hankel matrices keyed by (rank, delta)

    :param field: field of the entries
    :param n: matrix order
    """
    def __init__(self, field: FiniteField, n: int):
        self.field = field
        self.n = n
        self.cells: Dict[Tuple[int, int], int] = {}

    def add(self, rank: int, delta: int, count: int = 1) -> None:
        """tally count matrices with the given rank and delta"""
        key = (rank, delta)
        self.cells[key] = self.cells.get(key, 0) + count

    def merge(self, other: 'CensusTable') -> 'CensusTable':
        """add the cells of another table over the same field and order into self"""
        assert other.field == self.field and other.n == self.n
        for (r, k), c in other.cells.items():
            self.add(r, k, c)
        return self

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def count(self, rank: Optional[int] = None, delta: Optional[int] = None) -> int:
        """number of matrices with the given rank and/or delta"""
        return sum(c for (r, k), c in self.cells.items()
                if (rank is None or r == rank) and (delta is None or k == delta))

    def count_rank_at_most(self, r: int, delta: Optional[int] = None) -> int:
        return sum(c for (rr, k), c in self.cells.items()
                if rr <= r and (delta is None or k == delta))

    def rank_marginals(self) -> Dict[int, int]:
        return { r: self.count(rank=r) for r in range(self.n + 1) }

    def delta_marginals(self) -> Dict[int, int]:
        return { k: self.count(delta=k) for k in range(self.n + 1) }

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, CensusTable) and other.field == self.field \
                and other.n == self.n and other.nonzero_cells() == self.nonzero_cells()

    def nonzero_cells(self) -> Dict[Tuple[int, int], int]:
        return { key: c for key, c in self.cells.items() if c }

    def as_dict(self) -> Dict:
        return {
                "q" : self.field.q,
                "n" : self.n,
                "cells" : [ { "rank" : r, "delta" : k, "count" : c }
                    for (r, k), c in sorted(self.nonzero_cells().items()) ],
                "total" : self.total
                }

    def summarize(self, file: Any = sys.stdout) -> None:
        print("Using hankelfq (v{})".format(__version__), file=file)
        print("------------------------------------", file=file)
        print("Hankel matrices of order {} over {}: {}".format(self.n, self.field, self.total), file=file)
        print("{:>5s} {:>5s} {:>16s}".format("rank", "delta", "count"), file=file)
        for (r, k), c in sorted(self.nonzero_cells().items()):
            print("{:5d} {:5d} {:16d}".format(r, k, c), file=file)

class CoprimeCensus(object):
    """Counts of m-tuples of monic polynomials of given degrees keyed by the degree of their GCD

    :param field: coefficient field
    :param degrees: (n_1, ..., n_m)
    """
    def __init__(self, field: FiniteField, degrees: Sequence[int]):
        self.field = field
        self.degrees: Tuple[int, ...] = tuple(int(d) for d in degrees)
        self.by_gcd_degree: Dict[int, int] = {}

    def add(self, d: int, count: int = 1) -> None:
        self.by_gcd_degree[d] = self.by_gcd_degree.get(d, 0) + count

    def merge(self, other: 'CoprimeCensus') -> 'CoprimeCensus':
        assert other.field == self.field and other.degrees == self.degrees
        for d, c in other.by_gcd_degree.items():
            self.add(d, c)
        return self

    @property
    def total(self) -> int:
        return sum(self.by_gcd_degree.values())

    @property
    def coprime(self) -> int:
        """tuples whose GCD is 1"""
        return self.by_gcd_degree.get(0, 0)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, CoprimeCensus) and other.field == self.field \
                and other.degrees == self.degrees \
                and { d: c for d, c in other.by_gcd_degree.items() if c } \
                    == { d: c for d, c in self.by_gcd_degree.items() if c }

    def as_dict(self) -> Dict:
        rows: List[Dict[str, int]] = [ { "degree" : d, "count" : c }
                for d, c in sorted(self.by_gcd_degree.items()) if c ]
        return {
                "q" : self.field.q,
                "degrees" : list(self.degrees),
                "by_gcd_degree" : rows,
                "total" : self.total
                }

    def summarize(self, file: Any = sys.stdout) -> None:
        print("Using hankelfq (v{})".format(__version__), file=file)
        print("------------------------------------", file=file)
        print("monic tuples of degrees {} over {}: {}".format(
            ",".join(str(d) for d in self.degrees), self.field, self.total), file=file)
        print("{:>10s} {:>16s}".format("gcd degree", "count"), file=file)
        for d, c in sorted(self.by_gcd_degree.items()):
            print("{:10d} {:16d}".format(d, c), file=file)
