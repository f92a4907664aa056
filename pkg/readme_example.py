#!/usr/bin/env python

import hankelfq

F = hankelfq.field_of_order(3)

# every Hankel matrix of order 3 over GF(3), tallied by rank and delta on two processes
table = hankelfq.brute_hankel_census(F, 3, nprocs=2)
for r in range(4):
    print("rank %d: %6d found, %6d predicted" % (r, table.count(rank=r), hankelfq.count_hankel_by_rank(3, 3, r)))

# the q coprime pairs sent to one nonsingular Toeplitz matrix
B = hankelfq.HankelMatrix(F, [1, 0, 2, 1, 1])
for p in hankelfq.fiber(B):
    print(p, hankelfq.sigma(p))
