#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Unit testing for counting formulas, strata and censuses"""

import unittest
import itertools
from fractions import Fraction

from hankelfq import FiniteField, field_of_order, HankelMatrix, ParameterError, SingularMatrixError, \
        BudgetExceeded, hankel_matrices, rank, delta
from hankelfq import count_coprime_tuples, coprime_probability, count_coprime_pairs, count_nonsingular_hankel, \
        count_hankel_by_rank, count_stratum, count_stratum_rank, count_rank_at_most, recurrence_vector, \
        in_stratum, in_stratum_rank, stratum_chart, stratum_from_chart, brute_coprime_census, \
        brute_hankel_census, verify_sigma, verify_hankel, verify_coprime, monic_tuple_at, Report
from hankelfq.census import CensusTable, CoprimeCensus
from hankelfq.batch import partition

class TestFormulas(unittest.TestCase):
    """Test Suite for closed-form counts"""
    def test_coprime_tuples(self):
        self.assertEqual(count_coprime_tuples(2, (2, 2)), 8)
        self.assertEqual(count_coprime_tuples(3, (2, 0)), 9)
        self.assertEqual(count_coprime_tuples(2, (1, 1, 1)), 6)
        self.assertEqual(count_coprime_tuples(2, (2, 1, 1)), 12)
        self.assertEqual(count_coprime_pairs(3, 2), 54)
        with self.assertRaises(ParameterError):
            count_coprime_tuples(6, (1, 1))
        with self.assertRaises(ParameterError):
            count_coprime_tuples(2, ())

    def test_probability(self):
        """1 - q^{1-m} exactly whenever every degree is positive"""
        for q in (2, 3, 4, 5, 7, 8, 9):
            for degrees in ((1, 1), (3, 2), (1, 2, 3), (2, 2, 2, 1)):
                with self.subTest(q=q, degrees=degrees):
                    self.assertEqual(coprime_probability(q, degrees), 1 - Fraction(1, q**(len(degrees) - 1)))
        self.assertEqual(coprime_probability(5, (3, 0)), 1)

    def test_partition_identity(self):
        """sum_d q^d N(degrees - d) = q^{sum of degrees}"""
        for q in (2, 3, 4):
            for degrees in ((1, 1), (2, 3), (3, 3, 1), (4, 2, 2)):
                with self.subTest(q=q, degrees=degrees):
                    total = sum(q**d * count_coprime_tuples(q, [ n - d for n in degrees ])
                            for d in range(min(degrees) + 1))
                    self.assertEqual(total, q**sum(degrees))

    def test_hankel_examples(self):
        self.assertEqual(count_hankel_by_rank(2, 3, 2), 12)
        self.assertEqual(count_hankel_by_rank(2, 3, 3), 16)
        self.assertEqual(count_hankel_by_rank(7, 4, 0), 1)
        self.assertEqual(count_stratum(2, 2, 0), 2)
        self.assertEqual(count_stratum(2, 2, 2), 4)
        self.assertEqual(count_stratum(2, 2, 1), 2)
        self.assertEqual(count_nonsingular_hankel(5, 3), 2500)
        self.assertEqual(count_stratum_rank(2, 3, 0, 1), 2)
        self.assertEqual(count_stratum_rank(2, 3, 1, 2), 4)
        self.assertEqual(sum(count_stratum_rank(2, 3, k, 2) for k in range(3)), 16)
        self.assertEqual(count_rank_at_most(2, 3, 2), 16)
        self.assertEqual(count_rank_at_most(2, 3, 3), 32)

    def test_ranges(self):
        with self.assertRaises(ParameterError):
            count_hankel_by_rank(2, 3, 4)
        with self.assertRaises(ParameterError):
            count_stratum(2, 3, 4)
        with self.assertRaises(ParameterError):
            count_stratum_rank(2, 3, 2, 1)
        with self.assertRaises(ParameterError):
            count_stratum_rank(2, 3, 1, 3)
        with self.assertRaises(ParameterError):
            count_hankel_by_rank(2, 0, 0)

    def test_sums(self):
        """Rank counts and stratum counts both add up to every Hankel matrix"""
        for q in (2, 3, 4, 5, 9):
            for n in range(1, 7):
                with self.subTest(q=q, n=n):
                    self.assertEqual(sum(count_hankel_by_rank(q, n, r) for r in range(n + 1)), q**(2*n-1))
                    self.assertEqual(sum(count_stratum(q, n, k) for k in range(n + 1)), q**(2*n-1))
                    for r in range(n):
                        self.assertEqual(sum(count_stratum_rank(q, n, k, r) for k in range(r + 1)),
                                count_rank_at_most(q, n, r))
                        self.assertEqual(sum(count_hankel_by_rank(q, n, s) for s in range(r + 1)),
                                count_rank_at_most(q, n, r))

    def test_rank_stability(self):
        """The number of rank r matrices does not depend on n once n > r"""
        for q in (2, 3):
            for r in range(4):
                with self.subTest(q=q, r=r):
                    values = { count_hankel_by_rank(q, n, r) for n in range(r + 1, 7) }
                    self.assertEqual(len(values), 1)

class TestStrata(unittest.TestCase):
    """Test Suite for recurrence-based stratum membership"""
    def test_recurrence_vector(self):
        GF2, GF3 = FiniteField(2), FiniteField(3)
        self.assertEqual(recurrence_vector(HankelMatrix(GF2, [1] * 5), 1), (1,))
        self.assertEqual(recurrence_vector(HankelMatrix(GF2, [1, 1, 0, 1, 1]), 2), (1, 1))
        self.assertEqual(recurrence_vector(HankelMatrix(GF3, [1, 0, 2]), 1), (0,))
        with self.assertRaises(SingularMatrixError):
            recurrence_vector(HankelMatrix(GF2, [0, 1, 0, 1, 1]), 1)
        with self.assertRaises(ParameterError):
            recurrence_vector(HankelMatrix(GF2, [1, 1, 1]), 2)

    def test_examples(self):
        GF2 = FiniteField(2)
        self.assertTrue(in_stratum(HankelMatrix(GF2, [0] * 5), 0))
        self.assertTrue(in_stratum(HankelMatrix(GF2, [1] * 5), 1))
        self.assertFalse(in_stratum(HankelMatrix(GF2, [0, 1, 0]), 1))
        self.assertTrue(in_stratum_rank(HankelMatrix(GF2, [0] * 5), 0, 2))
        self.assertTrue(in_stratum_rank(HankelMatrix(GF2, [1] * 5), 1, 1))
        A = HankelMatrix(GF2, [1, 1, 0, 1, 1])
        self.assertEqual(in_stratum_rank(A, 2, 2), delta(A) == 2 and rank(A) <= 2)
        with self.assertRaises(ParameterError):
            in_stratum_rank(A, 1, 3)

    def test_against_dense(self):
        """Membership agrees with rank and delta from dense elimination"""
        for q in (2, 3):
            F = FiniteField(q)
            for n in range(1, 4):
                with self.subTest(q=q, n=n):
                    for A in hankel_matrices(F, n):
                        d, r = delta(A), rank(A)
                        for k in range(n + 1):
                            self.assertEqual(in_stratum(A, k), d == k)
                        for s in range(n):
                            for k in range(s + 1):
                                self.assertEqual(in_stratum_rank(A, k, s), d == k and r <= s)

    def test_charts(self):
        """Stratum charts are bijections onto HGL_k times a vector space"""
        for q in (2, 3):
            F = FiniteField(q)
            for n in range(2, 4):
                members = list(hankel_matrices(F, n))
                for k in range(1, n):
                    with self.subTest(q=q, n=n, k=k):
                        images = set()
                        for A in members:
                            if delta(A) != k:
                                continue
                            lead, tail = stratum_chart(A, k)
                            self.assertNotEqual(lead.det(), 0)
                            self.assertEqual(len(tail), n - k)
                            self.assertEqual(stratum_from_chart(lead, tail, n), A)
                            images.add((lead, tail))
                        self.assertEqual(len(images), count_stratum(q, n, k))
                        self.assertEqual(len(images), count_nonsingular_hankel(q, k) * q**(n - k))
                    for r in range(k, n):
                        with self.subTest(q=q, n=n, k=k, r=r):
                            images = set()
                            for A in members:
                                if delta(A) != k or rank(A) > r:
                                    continue
                                lead, tail = stratum_chart(A, k, r)
                                self.assertEqual(len(tail), r - k + 1)
                                self.assertEqual(stratum_from_chart(lead, tail, n, r), A)
                                images.add((lead, tail))
                            self.assertEqual(len(images), count_stratum_rank(q, n, k, r))

    def test_chart_rebuilds_members(self):
        """Every chart point rebuilds a member of the stratum"""
        F = FiniteField(3)
        n, k, r = 4, 2, 3
        leads = [ A for A in hankel_matrices(F, k) if A.det() != 0 ]
        for lead in leads:
            for tail in itertools.product(range(3), repeat=r - k + 1):
                A = stratum_from_chart(lead, tail, n, r)
                self.assertEqual((delta(A), rank(A) <= r), (k, True))

    def test_chart_errors(self):
        F = FiniteField(2)
        with self.assertRaises(ParameterError):
            stratum_chart(HankelMatrix(F, [0, 1, 0]), 1)
        with self.assertRaises(ParameterError):
            stratum_from_chart(HankelMatrix(F, [1]), (1,), 3)
        with self.assertRaises(SingularMatrixError):
            stratum_from_chart(HankelMatrix(F, [0]), (1, 0), 3)

class TestCensus(unittest.TestCase):
    """Test Suite for exhaustive censuses"""
    def test_partition(self):
        self.assertEqual(partition(10, 3), [(0, 3), (3, 6), (6, 10)])
        self.assertEqual(partition(2, 4), [(0, 1), (1, 2)])
        self.assertEqual(partition(0, 4), [])

    def test_hankel_examples(self):
        F = FiniteField(2)
        table = brute_hankel_census(F, 1)
        self.assertEqual(table.nonzero_cells(), { (0, 0): 1, (1, 1): 1 })
        table = brute_hankel_census(F, 2)
        self.assertEqual(table.rank_marginals(), { 0: 1, 1: 3, 2: 4 })
        self.assertEqual(table.delta_marginals(), { 0: 2, 1: 2, 2: 4 })
        table = brute_hankel_census(F, 3)
        self.assertEqual(table.rank_marginals(), { 0: 1, 1: 3, 2: 12, 3: 16 })
        self.assertEqual(table.total, 32)

    def test_hankel_against_formulas(self):
        grid = [ (q, n) for q in (2, 3) for n in range(1, 5) ] + [ (q, n) for q in (4, 5) for n in range(1, 4) ]
        for q, n in grid:
            F = field_of_order(q)
            with self.subTest(q=q, n=n):
                table = brute_hankel_census(F, n)
                self.assertEqual(table.total, q**(2*n-1))
                for r in range(n + 1):
                    self.assertEqual(table.count(rank=r), count_hankel_by_rank(q, n, r))
                    self.assertEqual(table.count_rank_at_most(r), count_rank_at_most(q, n, r))
                for k in range(n + 1):
                    self.assertEqual(table.count(delta=k), count_stratum(q, n, k))
                for r in range(n):
                    for k in range(r + 1):
                        self.assertEqual(table.count_rank_at_most(r, delta=k), count_stratum_rank(q, n, k, r))
                self.assertTrue(all(k <= r for (r, k) in table.nonzero_cells()))
                self.assertEqual(table.count(delta=n), count_nonsingular_hankel(q, n))

    def test_coprime_examples(self):
        self.assertEqual(brute_coprime_census(FiniteField(2), (1, 1)).by_gcd_degree, { 0: 2, 1: 2 })
        self.assertEqual(brute_coprime_census(FiniteField(2), (1, 1, 1)).by_gcd_degree, { 0: 6, 1: 2 })
        self.assertEqual(brute_coprime_census(FiniteField(3), (1, 1)).by_gcd_degree, { 0: 6, 1: 3 })

    def test_coprime_against_formulas(self):
        cases = [ (2, (n, n)) for n in range(1, 5) ] + [ (3, (n, n)) for n in range(1, 4) ] + \
                [ (2, (2, 1, 1)), (2, (1, 1, 1)), (3, (2, 1, 1)), (2, (3, 2, 2)), (4, (2, 1)), (3, (2, 0)) ]
        for q, degrees in cases:
            F = field_of_order(q)
            with self.subTest(q=q, degrees=degrees):
                table = brute_coprime_census(F, degrees)
                self.assertEqual(table.coprime, count_coprime_tuples(q, degrees))
                self.assertEqual(table.total, q**sum(degrees))
                for d in range(min(degrees) + 1):
                    self.assertEqual(table.by_gcd_degree.get(d, 0),
                            q**d * count_coprime_tuples(q, [ n - d for n in degrees ]))

    def test_tuple_order(self):
        F = FiniteField(2)
        first = monic_tuple_at(F, (1, 2), 0)
        self.assertEqual([ str(f) for f in first ], [ "X", "X^2" ])
        second = monic_tuple_at(F, (1, 2), 1)
        self.assertEqual([ str(f) for f in second ], [ "X", "X^2+1" ])
        last = monic_tuple_at(F, (1, 2), 7)
        self.assertEqual([ str(f) for f in last ], [ "X+1", "X^2+X+1" ])

    def test_chunking_independent(self):
        """The merged table is the same however the work is split"""
        F = FiniteField(3)
        ref = brute_hankel_census(F, 3)
        for chunks in (1, 2, 5, 13, 500):
            with self.subTest(chunks=chunks):
                self.assertEqual(brute_hankel_census(F, 3, chunks=chunks), ref)
        ref = brute_coprime_census(F, (2, 2))
        self.assertEqual(brute_coprime_census(F, (2, 2), chunks=7), ref)

    def test_parallel(self):
        F = FiniteField(2)
        self.assertEqual(brute_hankel_census(F, 3, nprocs=2), brute_hankel_census(F, 3))
        self.assertEqual(brute_coprime_census(F, (2, 2, 1), nprocs=2), brute_coprime_census(F, (2, 2, 1)))

    def test_budget(self):
        F = FiniteField(3)
        with self.assertRaises(BudgetExceeded) as ctx:
            brute_hankel_census(F, 3, budget=100)
        self.assertEqual(ctx.exception.required, 243)
        self.assertEqual(ctx.exception.budget, 100)
        with self.assertRaises(BudgetExceeded):
            brute_coprime_census(F, (2, 2), budget=80)
        with self.assertRaises(BudgetExceeded):
            verify_sigma(F, 2, budget=80)

    def test_table_json(self):
        F = FiniteField(2)
        table = CensusTable(F, 2)
        table.add(2, 1, 3)
        table.add(0, 0)
        table.merge(CensusTable(F, 2))
        self.assertEqual(table.as_dict(), { "q": 2, "n": 2, "total": 4,
            "cells": [ { "rank": 0, "delta": 0, "count": 1 }, { "rank": 2, "delta": 1, "count": 3 } ] })
        census = CoprimeCensus(F, (1, 1))
        census.add(0, 2)
        self.assertEqual(census.as_dict()["by_gcd_degree"], [ { "degree": 0, "count": 2 } ])

class TestVerify(unittest.TestCase):
    """Test Suite for verification reports"""
    def test_sigma(self):
        for q, n, pairs, images in ((2, 1, 2, 1), (2, 2, 8, 4), (2, 3, 32, 16), (3, 1, 6, 2), (3, 2, 54, 18)):
            with self.subTest(q=q, n=n):
                report = verify_sigma(FiniteField(q), n)
                self.assertTrue(report.passed)
                self.assertEqual(report["pairs"], pairs)
                self.assertEqual(report["images"], images)
                self.assertEqual(report["fiber_size"], q)
                self.assertTrue(report["surjective"])
                self.assertTrue(report["fibers_uniform"])
                self.assertTrue(report["reconstructs"])

    def test_sigma_extension_field(self):
        report = verify_sigma(field_of_order(4), 2)
        self.assertTrue(report.passed)
        self.assertEqual(report["images"], count_nonsingular_hankel(4, 2))

    def test_hankel_and_coprime(self):
        self.assertTrue(verify_hankel(FiniteField(3), 3).passed)
        self.assertTrue(verify_hankel(field_of_order(4), 2, nprocs=2).passed)
        report = verify_coprime(FiniteField(2), (2, 1, 1))
        self.assertTrue(report.passed)
        self.assertEqual(report["coprime"], 12)

    def test_report_order(self):
        keys = list(verify_sigma(FiniteField(2), 1).as_dict())
        self.assertEqual(keys, [ "check", "q", "n", "pairs", "images", "fiber_size", "nonsingular",
            "surjective", "fibers_uniform", "pair_count", "reconstructs", "passed" ])

    def test_failed_check(self):
        """A failing check fails the report and logs a warning"""
        report = Report("demo", q=2)
        report.record("count", 3)
        self.assertTrue(report.check("fine", True))
        with self.assertLogs("hankelfq", level="WARNING"):
            self.assertFalse(report.check("broken", False))
        self.assertFalse(report.passed)
        self.assertEqual(report.as_dict(), { "check": "demo", "q": 2, "count": 3, "fine": True, "broken": False, "passed": False })

if __name__ == '__main__':
    unittest.main()
