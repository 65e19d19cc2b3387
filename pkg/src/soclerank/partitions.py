"""Integer partitions, set partitions, and refinement maps between them.

A partition is a plain tuple of positive ints in weakly decreasing order.
Parts are addressed by position, so the index set of ``p`` is
``range(len(p))``.  A set partition of a finite index collection is a
tuple of blocks, each block a sorted tuple, with the blocks themselves
sorted; this makes every set partition hashable and order-deterministic.
A refining function from ``source`` into ``target`` is a tuple ``phi``
of length ``len(source)`` with ``phi[j]`` a target index, such that each
target part equals the sum of the source parts mapped onto it.
"""

from functools import lru_cache


def partition(parts):
    """Canonicalize an iterable of positive ints into a partition tuple."""
    t = tuple(sorted(parts, reverse=True))
    for x in t:
        if not isinstance(x, int) or isinstance(x, bool) or x <= 0:
            raise ValueError("partition parts must be positive integers, got %r" % (x,))
    return t


def _canonical_key(p):
    # shorter partitions first, then reverse-lexicographic on parts
    return (len(p), tuple(-x for x in p))


@lru_cache(maxsize=None)
def enumerate_partitions(n, max_length=None):
    """All partitions of ``n``, optionally of length <= ``max_length``.

    The order is deterministic: shorter partitions first, and within one
    length the lexicographically larger tuple first, e.g. for n = 4:
    (4,), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    bound = n if max_length is None else max_length
    if bound < 0:
        raise ValueError("max_length must be nonnegative")
    return tuple(sorted(_generate(n, n, bound), key=_canonical_key))


def _generate(n, largest, length_bound):
    if n == 0:
        yield ()
        return
    if length_bound == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first, length_bound - 1):
            yield (first,) + rest


def enumerate_set_partitions(indices):
    """All set partitions of the given collection, canonically sorted."""
    return _set_partitions(tuple(indices))


@lru_cache(maxsize=None)
def _set_partitions(indices):
    if len(set(indices)) != len(indices):
        raise ValueError("set partition ground set has repeated elements")
    if not indices:
        return ((),)
    head, rest = indices[0], indices[1:]
    result = []
    for sub in _set_partitions(rest):
        # head joins each existing block, or starts its own
        for i in range(len(sub)):
            grown = tuple(sorted(sub[i] + (head,)))
            result.append(tuple(sorted(sub[:i] + (grown,) + sub[i + 1:])))
        result.append(tuple(sorted(sub + ((head,),))))
    return tuple(sorted(set(result)))


def enumerate_refining_functions(target, source):
    """All maps phi from source indices to target indices with matching block sums.

    Both arguments are read as indexed sequences of positive ints; the
    result is a tuple of tuples ``phi`` with ``phi[j]`` the target index
    receiving source part ``j``.  Empty when no refinement exists.
    """
    target = tuple(target)
    source = tuple(source)
    if sum(target) != sum(source):
        return ()
    # equal totals and nonnegative slack mean a complete assignment drains
    # every target exactly, so no final check is needed
    remaining = list(target)
    phi = [0] * len(source)
    out = []

    def assign(j):
        if j == len(source):
            out.append(tuple(phi))
            return
        for i in range(len(target)):
            if remaining[i] >= source[j]:
                remaining[i] -= source[j]
                phi[j] = i
                assign(j + 1)
                remaining[i] += source[j]

    assign(0)
    return tuple(out)


def merge(sigma, blocks):
    """Coarsen ``sigma`` along a set partition of its index set."""
    sigma = tuple(sigma)
    seen = sorted(i for b in blocks for i in b)
    if seen != list(range(len(sigma))):
        raise ValueError("blocks must partition the index set of sigma")
    return partition(sum(sigma[i] for i in b) for b in blocks)


def restrict(sigma, indices):
    """The partition formed by the parts of ``sigma`` at the given indices."""
    sigma = tuple(sigma)
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("restriction indices must be distinct")
    if indices == ():
        return ()
    return partition(sigma[i] for i in indices)


def automorphism_count(lam):
    """Product of factorials of the part multiplicities of ``lam``."""
    from math import factorial

    lam = partition(lam)
    count = 1
    for v in set(lam):
        count *= factorial(lam.count(v))
    return count


def separates(blocks, subset):
    """True when no block of the set partition contains two elements of ``subset``."""
    subset = set(subset)
    return all(len(subset.intersection(b)) <= 1 for b in blocks)
