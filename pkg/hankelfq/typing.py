# -*- coding: utf-8 -*-
"""Typing prototypes"""

from typing import Any, Union
from typing_extensions import Protocol

import numpy as np

ArrayLike = np.ndarray
EltLike = Union[int, np.integer, np.ndarray]
Degree = Union[int, float]

class MatrixT(Protocol):
    """Anything that can be materialized as a dense matrix over a finite field"""
    field: Any

    def dense(self) -> Any:
        pass

class MergeableT(Protocol):
    def merge(self, other: Any) -> Any:
        pass

class CensusWorkerT(Protocol):
    def __call__(self, start: int, stop: int) -> MergeableT:
        pass
