# -*- coding: utf-8 -*-
"""Code for running exhaustive enumerations in batches"""

from __future__ import print_function, division

import functools
import logging
import multiprocessing as mp

from .constants import DEFAULT_BUDGET
from .exceptions import BudgetExceeded

from typing import Any, List, Tuple
from .typing import CensusWorkerT, MergeableT

logger = logging.getLogger("hankelfq")

def partition(total: int, chunks: int) -> List[Tuple[int, int]]:
    """Split range(total) into at most chunks contiguous, nearly equal [start, stop) ranges"""
    chunks = max(1, min(chunks, total))
    bounds = [ (total * i) // chunks for i in range(chunks + 1) ]
    return [ (bounds[i], bounds[i+1]) for i in range(chunks) if bounds[i] < bounds[i+1] ]

def _run_chunk(worker: CensusWorkerT, bounds: Tuple[int, int]) -> MergeableT:
    start, stop = bounds
    return worker(start, stop)

class BatchedCensus(object):
    """Run a census worker over the index range [0, total) and merge the partial tables

    The worker is called as worker(start, stop) and must return an object with a
    merge() method; results are merged in index order, so the final table does
    not depend on the number of processes.
    """
    def __init__(self, worker: CensusWorkerT, total: int, **inp: Any):
        """Constructor requires the worker, the size of the index space and options as kwargs
        :param worker: picklable callable tallying one contiguous index range
        :param total: number of objects to enumerate
        :param inp: input options

         Accepted keyword arguments and their defaults:
         | key                |   default                  |
         ---------------------|----------------------------|
         | nprocs             | 1                          |
         | budget             | DEFAULT_BUDGET (10**8)     |
         | chunks             | 4 * nprocs                 |
        """
        self.worker = worker
        self.total = int(total)
        self.options = {}

        self.options["nprocs"] = int(inp.get("nprocs", 1))
        self.options["budget"] = int(inp.get("budget", DEFAULT_BUDGET))
        self.options["chunks"] = int(inp.get("chunks", 4 * self.options["nprocs"]))

        # everything else just gets copied over
        for x in inp:
            if x not in self.options:
                self.options[x] = inp[x]

    def check_budget(self) -> None:
        if self.total > self.options["budget"]:
            raise BudgetExceeded(self.total, self.options["budget"])

    def compute(self) -> MergeableT:
        """Run all chunks and return the merged tally

        :returns: merged result of the worker over every chunk
        """
        self.check_budget()

        nprocs = self.options["nprocs"]
        ranges = partition(self.total, self.options["chunks"]) or [(0, 0)]
        if nprocs > len(ranges):
            logger.warning("nprocs {} specified, but only {} chunks of work exist".format(nprocs, len(ranges)))
        logger.info("enumerating {} objects in {} chunks on {} process(es)".format(self.total, len(ranges), nprocs))

        run = functools.partial(_run_chunk, self.worker)
        if nprocs > 1 and len(ranges) > 1:
            with mp.Pool(min(nprocs, len(ranges))) as pool:
                results = pool.map(run, ranges)
        else:
            results = [ run(r) for r in ranges ]

        out = results[0]
        for r in results[1:]:
            out = out.merge(r)
        return out
