import random

import pytest

from soclerank.partitions import (
    automorphism_count,
    enumerate_partitions,
    enumerate_refining_functions,
    enumerate_set_partitions,
    merge,
    partition,
    restrict,
    separates,
)


def test_partition_canonicalizes():
    assert partition([1, 3, 1]) == (3, 1, 1)
    assert partition(()) == ()
    with pytest.raises(ValueError):
        partition((2, 0))
    with pytest.raises(ValueError):
        partition((-1,))
    with pytest.raises(ValueError):
        partition((True,))


def test_enumeration_order():
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(6, 2) == tuple(
        p for p in enumerate_partitions(6) if len(p) <= 2
    )


def test_partition_counts_match_recurrence():
    # p(n, k) = partitions of n into parts <= k
    limit = 20
    table = [[0] * (limit + 1) for _ in range(limit + 1)]
    for k in range(limit + 1):
        table[0][k] = 1
    for n in range(1, limit + 1):
        for k in range(1, limit + 1):
            table[n][k] = table[n][k - 1] + (table[n - k][k] if n >= k else 0)
    for n in range(limit + 1):
        assert len(enumerate_partitions(n)) == table[n][limit]


def test_set_partition_counts_match_bell_triangle():
    # bell[n] ends up being the Bell number B(n)
    bell = [1]
    prev = [1]
    for n in range(1, 9):
        row = [prev[-1]]
        for i in range(n - 1):
            row.append(row[-1] + prev[i])
        prev = row
        bell.append(row[-1])
    for n in range(0, 9):
        blocks_sets = enumerate_set_partitions(range(n))
        assert len(blocks_sets) == bell[n]
        assert len(set(blocks_sets)) == bell[n]
        for blocks in blocks_sets:
            assert sorted(i for b in blocks for i in b) == list(range(n))


def test_refinement_exists_iff_merge_reaches():
    for n in range(0, 8):
        parts = enumerate_partitions(n)
        for source in parts:
            reachable = {
                merge(source, blocks)
                for blocks in enumerate_set_partitions(range(len(source)))
            }
            for target in parts:
                has_phi = bool(enumerate_refining_functions(target, source))
                assert has_phi == (target in reachable), (source, target)


def test_refining_function_block_sums():
    for phi in enumerate_refining_functions((3, 2, 1), (2, 1, 1, 1, 1)):
        source = (2, 1, 1, 1, 1)
        target = (3, 2, 1)
        for j, t in enumerate(target):
            assert sum(source[i] for i in range(len(source)) if phi[i] == j) == t


def test_merge_and_restrict():
    assert merge((3, 2, 1), ((0,), (1,), (2,))) == (3, 2, 1)
    assert merge((3, 2, 1), ((0, 1, 2),)) == (6,)
    assert merge((3, 2, 1), ((0, 2), (1,))) == (4, 2)
    with pytest.raises(ValueError):
        merge((3, 2), ((0,),))
    assert restrict((5, 4, 3), (2, 0)) == (5, 3)
    assert restrict((5, 4, 3), ()) == ()
    with pytest.raises(ValueError):
        restrict((5, 4), (0, 0))


def test_automorphism_count():
    assert automorphism_count(()) == 1
    assert automorphism_count((2, 1)) == 1
    assert automorphism_count((1, 1, 1)) == 6
    assert automorphism_count((2, 2, 1, 1, 1)) == 12


def test_separates_is_monotone():
    rng = random.Random(11)
    ground = tuple(range(6))
    all_blocks = enumerate_set_partitions(ground)
    for _ in range(200):
        blocks = rng.choice(all_blocks)
        subset = tuple(i for i in ground if rng.random() < 0.5)
        if separates(blocks, subset):
            smaller = subset[: rng.randrange(len(subset) + 1)]
            assert separates(blocks, smaller)
        singles = sum(1 for b in blocks if len(b) == 1)
        if singles == len(ground):
            assert separates(blocks, ground)
