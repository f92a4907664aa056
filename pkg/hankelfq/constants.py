# -*- coding: utf-8 -*-
"""Built-in moduli and enumeration defaults"""

from typing import Dict, Tuple

# Monic irreducible polynomials over GF(p), ascending coefficients, keyed by (p, k).
# The binary entries are low-weight irreducibles; the odd-characteristic quadratics are x^2 - c
# for a non-square c.
moduli: Dict[Tuple[int, int], Tuple[int, ...]] = {
        (2, 2) : (1, 1, 1),
        (2, 3) : (1, 1, 0, 1),
        (2, 4) : (1, 1, 0, 0, 1),
        (2, 5) : (1, 0, 1, 0, 0, 1),
        (2, 6) : (1, 1, 0, 0, 0, 0, 1),
        (2, 7) : (1, 1, 0, 0, 0, 0, 0, 1),
        (2, 8) : (1, 1, 0, 1, 1, 0, 0, 0, 1),
        (3, 2) : (1, 0, 1),
        (3, 3) : (1, 2, 0, 1),
        (5, 2) : (2, 0, 1),
        (7, 2) : (1, 0, 1),
        (11, 2) : (1, 0, 1)
        }

# largest extension field for which addition and multiplication tables are built
MAX_TABLE_ORDER = 256

# largest characteristic accepted for prime fields (keeps products inside int64)
MAX_CHARACTERISTIC = 2**31

# default cap on the number of objects a brute-force oracle may enumerate
DEFAULT_BUDGET = 10**8
