"""Wider-than-acceptance oracle grids; everything here is exact and fast."""

from __future__ import annotations

import itertools

from qpieri.classical import verify_monk_at_q0, verify_pieri_at_q0
from qpieri.expansion import expand_product_chain
from qpieri.permutations import Permutation, all_permutations

P = Permutation.from_one_line


def test_product_identities_at_q0_all_of_s4():
    for w in all_permutations(4):
        for k in (1, 2, 3):
            for p in range(0, k + 1):
                assert verify_pieri_at_q0(w, k, p), (w.one_line(), k, p)


def test_divisor_identities_at_q0_all_of_s4():
    for x in all_permutations(4):
        for k in (1, 2, 3):
            assert verify_monk_at_q0(x, k), (x.one_line(), k)


def test_product_identities_at_q0_s5_spots():
    for text, k, p in (("35142", 3, 3), ("24153", 3, 2), ("45312", 2, 2)):
        assert verify_pieri_at_q0(P(text), k, p), (text, k, p)


def test_commutativity_all_of_s4():
    factors = [(k, p) for k in (1, 2, 3) for p in range(0, k + 1)]
    for w in all_permutations(4):
        for f1, f2 in itertools.product(factors, repeat=2):
            assert expand_product_chain(w, [f1, f2]) == expand_product_chain(w, [f2, f1])


def test_triple_products_associate_on_a_sample():
    # left folds over permuted factor lists agree on every ordering
    factors = [(1, 1), (2, 2), (3, 1)]
    for w in all_permutations(3):
        results = [
            expand_product_chain(w, list(order))
            for order in itertools.permutations(factors)
        ]
        assert all(r == results[0] for r in results[1:])
