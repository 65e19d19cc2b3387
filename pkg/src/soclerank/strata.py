"""Compact-type boundary strata as decorated stable trees.

A stratum is a tree of vertices carrying genera, optionally decorated
with a kappa-exponent partition and a psi-exponent partition per
vertex.  Its pairing row against the kappa-monomial basis depends only
on the multiset of per-vertex data (socle remainder, kappa decoration,
psi decoration) after dropping vertices whose socle remainder is zero;
that multiset is the reduced boundary data.

Because the pairing row never sees the edge structure, the production
enumeration runs over vertex-degree multisets (partitions of 2(v-1)
into v positive parts) instead of labeled trees; the labeled-tree
route via Pruefer sequences is kept as a self-checkable cross
reference.
"""

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from itertools import product

from .partitions import enumerate_partitions, partition
from .socle import theta


def _min_genus(valence):
    # stability 2g - 2 + n > 0 at a vertex of valence n
    if valence == 0:
        return 2
    if valence <= 2:
        return 1
    return 0


@dataclass(frozen=True)
class DecoratedTree:
    """A stable tree with per-vertex genus and optional decorations."""

    genera: tuple
    edges: tuple = ()
    kappa: tuple = None
    psi: tuple = None

    def __post_init__(self):
        n = len(self.genera)
        object.__setattr__(self, "genera", tuple(self.genera))
        object.__setattr__(
            self, "edges", tuple((min(a, b), max(a, b)) for a, b in self.edges)
        )
        kappa = self.kappa if self.kappa is not None else ((),) * n
        psi = self.psi if self.psi is not None else ((),) * n
        object.__setattr__(self, "kappa", tuple(partition(p) for p in kappa))
        object.__setattr__(self, "psi", tuple(partition(p) for p in psi))
        if len(self.kappa) != n or len(self.psi) != n:
            raise ValueError("decorations must list one partition per vertex")
        if any(g < 0 for g in self.genera):
            raise ValueError("vertex genera must be nonnegative")
        self._check_tree()
        for v in range(n):
            if self.genera[v] < _min_genus(self.valence(v)):
                raise ValueError("vertex %d violates stability" % v)
            if len(self.psi[v]) > self.valence(v):
                raise ValueError(
                    "vertex %d has more psi exponents than half-edges" % v
                )

    def _check_tree(self):
        n = len(self.genera)
        if len(self.edges) != n - 1:
            raise ValueError("a tree on %d vertices needs %d edges" % (n, n - 1))
        reached = {0}
        frontier = [0]
        adjacency = {v: [] for v in range(n)}
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError("bad edge (%d, %d)" % (a, b))
            adjacency[a].append(b)
            adjacency[b].append(a)
        while frontier:
            v = frontier.pop()
            for w in adjacency[v]:
                if w not in reached:
                    reached.add(w)
                    frontier.append(w)
        if len(reached) != n:
            raise ValueError("edge set is not connected")

    def valence(self, v):
        return sum(1 for a, b in self.edges if v in (a, b))

    @property
    def genus(self):
        return sum(self.genera)


def housing_data(tree):
    """Partition of per-vertex socle dimensions 2g(v)-3+n(v), zeros dropped.

    Only defined for undecorated trees.
    """
    if any(tree.kappa) or any(tree.psi):
        raise ValueError("housing data is only defined for undecorated trees")
    dims = [
        2 * tree.genera[v] - 3 + tree.valence(v) for v in range(len(tree.genera))
    ]
    return partition(x for x in dims if x > 0)


def is_housing_partition(sigma, g, d):
    """Whether sigma occurs as the housing data of a pure boundary stratum."""
    sigma = partition(sigma)
    if sum(sigma) != d:
        raise ValueError("sigma has size %d, expected %d" % (sum(sigma), d))
    bound = 2 * g - 2 - d
    if len(sigma) < bound:
        return True
    return len(sigma) == bound and sum(1 for p in sigma if p % 2 == 0) >= 2


def build_housing_tree(sigma, g, d):
    """A stable undecorated tree whose housing data is ``sigma``.

    Constructive witness: pad sigma with zeros to length 2g-2-d; with
    2k+2 even entries, take a path of 2g-2-d-k vertices and hang k
    leaves on the path positions right after the first; even entries go
    to the odd-valence vertices, odd entries to the rest, and the genus
    at a vertex of valence n holding entry t is (t+3-n)/2.
    """
    sigma = partition(sigma)
    if not is_housing_partition(sigma, g, d):
        raise ValueError("%r is not a housing partition for g=%d, d=%d" % (sigma, g, d))
    m = 2 * g - 2 - d
    padded = list(sigma) + [0] * (m - len(sigma))
    evens = sorted((t for t in padded if t % 2 == 0), reverse=True)
    odds = sorted((t for t in padded if t % 2 == 1), reverse=True)
    assert len(evens) >= 2 and len(evens) % 2 == 0
    k = len(evens) // 2 - 1
    path_len = m - k
    edges = [(i, i + 1) for i in range(path_len - 1)]
    edges += [(1 + t, path_len + t) for t in range(k)]
    valence = [0] * m
    for a, b in edges:
        valence[a] += 1
        valence[b] += 1
    odd_vertices = [v for v in range(m) if valence[v] % 2 == 1]
    even_vertices = [v for v in range(m) if valence[v] % 2 == 0]
    assert len(odd_vertices) == len(evens)
    entry = {}
    for v, t in zip(odd_vertices, evens):
        entry[v] = t
    for v, t in zip(even_vertices, odds):
        entry[v] = t
    genera = []
    for v in range(m):
        t = entry[v]
        assert (t + 3 - valence[v]) % 2 == 0
        genera.append((t + 3 - valence[v]) // 2)
    tree = DecoratedTree(tuple(genera), tuple(edges))
    assert tree.genus == g and housing_data(tree) == sigma
    return tree


def enumerate_labeled_trees(n):
    """Edge sets of all labeled trees on n vertices, via Pruefer sequences."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        return ((),)
    if n == 2:
        return (((0, 1),),)
    return tuple(
        _prufer_decode(seq, n) for seq in product(range(n), repeat=n - 2)
    )


def _prufer_decode(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    a, b = heappop(leaves), heappop(leaves)
    edges.append((min(a, b), max(a, b)))
    return tuple(edges)


def tree_degree_multisets(v):
    """Degree multisets of trees on v vertices, weakly decreasing.

    For v >= 2 these are exactly the partitions of 2(v-1) with v parts,
    every one of which is realized by some tree.
    """
    if v < 1:
        raise ValueError("need at least one vertex")
    if v == 1:
        return ((0,),)
    return tuple(
        tuple(p + 1 for p in pad) + (1,) * (v - len(pad))
        for pad in enumerate_partitions(v - 2, v)
    )


def _genus_assignments(degrees, g):
    """Genus tuples along a weakly decreasing degree multiset.

    Stability per vertex, total genus g; within a run of equal degrees
    the genera are forced weakly decreasing to skip permuted repeats.
    """
    n = len(degrees)
    min_tail = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        min_tail[i] = min_tail[i + 1] + _min_genus(degrees[i])
    out = []

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        lo = _min_genus(degrees[i])
        hi = remaining - min_tail[i + 1]
        if i > 0 and degrees[i] == degrees[i - 1]:
            hi = min(hi, acc[-1])
        for gi in range(lo, hi + 1):
            acc.append(gi)
            rec(i + 1, remaining - gi, acc)
            acc.pop()

    rec(0, g, [])
    return tuple(out)


def enumerate_pure_housing_partitions(g, d):
    """Housing data of every pure boundary stratum of genus g in degree d.

    Enumerates vertex-degree multisets with all stable genus
    assignments and collects the resulting socle-dimension partitions.
    The vertex count is 2g-2-d; when that is 1 (d = 2g-3) the single
    undecorated vertex itself is the only stratum.
    """
    _check_gd(g, d)
    v = 2 * g - 2 - d
    found = set()
    for degrees in tree_degree_multisets(v):
        for genera in _genus_assignments(degrees, g):
            dims = [2 * gv - 3 + nv for gv, nv in zip(genera, degrees)]
            found.add(partition(x for x in dims if x > 0))
    return frozenset(found)


def enumerate_boundary_generators(g, d):
    """Reduced boundary data of every decorated boundary stratum.

    Decoration budget k runs over 0..2g-4-d so that at least one edge
    remains; a vertex of socle dimension m may carry kappa and psi
    partitions of total size at most m (negative remainders are
    skipped), psi length bounded by the valence.  Vertices with
    remainder zero are dropped after their constant theta factor is
    checked to be nonzero.  Output is deduplicated and canonically
    sorted.
    """
    _check_gd(g, d)
    found = set()
    for k in range(0, 2 * g - 3 - d):
        v = 2 * g - 2 - d - k
        for degrees in tree_degree_multisets(v):
            for genera in _genus_assignments(degrees, g):
                dims = [2 * gv - 3 + nv for gv, nv in zip(genera, degrees)]
                for decor in _decoration_assignments(dims, degrees, k):
                    data = _reduce(dims, decor)
                    if data is not None:
                        found.add(data)
    return tuple(sorted(found))


def _reduce(dims, decor):
    triples = []
    for dim, (kap, psi) in zip(dims, decor):
        remainder = dim - sum(kap) - sum(psi)
        if remainder == 0:
            if theta(kap, psi) == 0:
                return None  # cannot happen (theta >= 1), kept for honesty
        else:
            triples.append((remainder, kap, psi))
    return tuple(sorted(triples, reverse=True))


def _decoration_assignments(dims, degrees, k):
    n = len(dims)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        for budget in range(0, min(remaining, dims[i]) + 1):
            for pair in _vertex_decorations(budget, degrees[i]):
                acc.append(pair)
                yield from rec(i + 1, remaining - budget, acc)
                acc.pop()

    yield from rec(0, k, [])


def _vertex_decorations(budget, valence):
    for a in range(budget + 1):
        for kap in enumerate_partitions(a):
            for psi in enumerate_partitions(budget - a):
                if len(psi) <= valence:
                    yield (kap, psi)


def boundary_generators_via_labeled_trees(g, d):
    """Slow cross-check: the same reduced data set from labeled trees.

    Enumerates Pruefer-coded labeled trees with explicit genus and
    decoration assignments per vertex; must agree with
    enumerate_boundary_generators on small inputs.
    """
    _check_gd(g, d)
    found = set()
    for k in range(0, 2 * g - 3 - d):
        v = 2 * g - 2 - d - k
        for edges in enumerate_labeled_trees(v):
            valence = [0] * v
            for a, b in edges:
                valence[a] += 1
                valence[b] += 1
            for genera in _genus_compositions(valence, g):
                dims = [2 * gv - 3 + nv for gv, nv in zip(genera, valence)]
                for decor in _decoration_assignments(dims, valence, k):
                    data = _reduce(dims, decor)
                    if data is not None:
                        found.add(data)
    return tuple(sorted(found))


def _genus_compositions(valences, g):
    n = len(valences)
    min_tail = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        min_tail[i] = min_tail[i + 1] + _min_genus(valences[i])
    out = []

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for gi in range(_min_genus(valences[i]), remaining - min_tail[i + 1] + 1):
            acc.append(gi)
            rec(i + 1, remaining - gi, acc)
            acc.pop()

    rec(0, g, [])
    return out


def _check_gd(g, d):
    if g < 2:
        raise ValueError("genus must be at least 2")
    if not 0 <= d <= 2 * g - 3:
        raise ValueError("degree %d out of range for genus %d" % (d, g))
