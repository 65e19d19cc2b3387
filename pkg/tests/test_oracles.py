from fractions import Fraction
from itertools import permutations

import pytest

from soclerank.coeffs import c_coefficient
from soclerank.exact import comb_count, multinomial
from soclerank.oracles import (
    count_a1,
    count_a4,
    count_b2,
    count_comb_linear_extensions,
    count_lemma_tool,
    count_main_claim,
    multiset_permutations,
)
from soclerank.partitions import enumerate_partitions
from soclerank.socle import mu_dprime, theta


def test_multiset_permutations():
    word = ("a", "a", "b")
    perms = list(multiset_permutations(word))
    assert len(perms) == 3
    assert len(set(perms)) == 3
    assert perms == sorted(perms)
    word = ("a", "b", "b", "c")
    perms = list(multiset_permutations(word))
    assert len(perms) == multinomial(4, (1, 2, 1))
    assert perms == sorted(set(perms))


def test_lemma_tool_pinned_values():
    assert count_lemma_tool((1, 1)) == 5
    assert count_lemma_tool((2, 1)) == 9
    assert count_lemma_tool((1, 1, 1)) == 61
    assert count_lemma_tool((1,), (1, 1)) == 12
    assert count_lemma_tool(()) == 1


def test_lemma_tool_order_independence():
    for sigma in ((2, 1), (1, 1), (2, 2), (1, 1, 1), (3, 1)):
        values = {
            count_lemma_tool(sigma, (), order)
            for order in permutations(range(len(sigma)))
        }
        assert values == {theta(sigma)}


def test_lemma_tool_matches_theta_sample():
    for s in range(0, 5):
        for sigma in enumerate_partitions(s):
            for t in range(0, 5 - s - len(sigma) + 1):
                for tau in enumerate_partitions(t):
                    assert count_lemma_tool(sigma, tau) == theta(sigma, tau)


def test_lemma_tool_bound():
    with pytest.raises(ValueError):
        count_lemma_tool((5, 4), (3, 3), max_symbols=9)


def test_main_claim_pinned_values():
    assert count_main_claim((1, 1)) == 0
    assert count_main_claim((2,)) == 1
    assert count_main_claim((1, 1), (1,)) == 16
    value = count_main_claim((2, 1), (1,))
    assert isinstance(value, Fraction) and value.denominator == 1 and value >= 0


def test_main_claim_matches_coefficient():
    # single-vertex coefficients with a kappa or psi decoration
    assert count_main_claim((2, 1), (1,)) == c_coefficient(
        (2, 1), (3,), ((1,),)
    )
    assert count_main_claim((1, 1, 1), (), (1,)) == c_coefficient(
        (1, 1, 1), (3,), ((),), ((1,),)
    )


def test_comb_linear_extensions():
    assert count_comb_linear_extensions(()) == 1
    assert count_comb_linear_extensions((1,)) == 2
    assert count_comb_linear_extensions((2,)) == 8
    assert count_comb_linear_extensions((1, 1)) == 80
    for n in range(0, 4):
        for pi in enumerate_partitions(n):
            if 2 * n + len(pi) <= 7:
                assert count_comb_linear_extensions(pi) == comb_count(pi)


def test_a4_and_b2_pinned_values():
    assert count_a4((), (1,), 1) == 8
    assert count_a4((1,), (), 0) == 1
    assert count_b2((), (1,)) == 8
    assert count_b2((1, 1), ()) == 560
    assert count_b2((), (2,)) == 48


def test_b2_matches_mu_dprime():
    for s in range(0, 3):
        for sigma in enumerate_partitions(s):
            for t in range(0, 3 - s):
                for tau in enumerate_partitions(t):
                    if 2 * (s + t) + len(sigma) + len(tau) + 1 <= 8:
                        assert count_b2(sigma, tau) == mu_dprime(sigma, tau)


def test_a1_small_value():
    # one kind with one copy, nothing else: the single word passes
    assert count_a1((1,)) == 1
    value = count_a1((1, 1), (1,))
    assert value == 16
