"""Brute-force word-counting oracles.

Each count here re-derives, by exhaustive enumeration over words, a
quantity that the formula modules compute in closed form.  The module
deliberately imports nothing from the rest of the package and applies
no counting shortcuts, so agreement with the formula path is real
evidence.  Inputs are hard-bounded by total symbol count; the default
bound keeps every call at a few seconds.

Symbols are tuples ``(family_tag, kind_index)`` for indistinguishable
copies, or ``(family_tag, kind_index, ordinal)`` where the
interpretation distinguishes copies of one kind.
"""

from fractions import Fraction
from itertools import permutations

DEFAULT_MAX_SYMBOLS = 10


def _check_bound(n, max_symbols):
    if n > max_symbols:
        raise ValueError(
            "oracle instance needs %d symbols, bound is %d" % (n, max_symbols)
        )


def multiset_permutations(word):
    """All distinct arrangements of a multiset, by lexicographic successor."""
    items = sorted(word)
    n = len(items)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and not items[i] < items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while not items[i] < items[j]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = items[:i:-1]


def _last_first_adjacencies(word, copies):
    """Kind pairs (a, b) where the last copy of a immediately precedes the first copy of b."""
    seen = {}
    pairs = []
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        seen[a] = seen.get(a, 0) + 1
        if seen[a] == copies[a] and seen.get(b, 0) == 0:
            pairs.append((a, b))
    return pairs


def count_lemma_tool(sigma, tau=(), order=None, max_symbols=DEFAULT_MAX_SYMBOLS):
    """Word count underlying the compact-type evaluation theta(sigma, tau).

    Words use sigma[i]+1 copies of kind ('s', i) and tau[j] copies of
    kind ('t', j).  A word counts when, whenever the last copy of
    sigma-kind i is immediately followed by the first copy of
    sigma-kind j, kind i ranks below kind j in the supplied total
    order on sigma indices (default: positional order).
    """
    sigma, tau = tuple(sigma), tuple(tau)
    _check_bound(sum(sigma) + len(sigma) + sum(tau), max_symbols)
    if order is None:
        order = range(len(sigma))
    rank = {("s", i): pos for pos, i in enumerate(order)}
    if len(rank) != len(sigma):
        raise ValueError("order must be a permutation of the sigma indices")
    word0 = []
    copies = {}
    for i, s in enumerate(sigma):
        copies[("s", i)] = s + 1
        word0 += [("s", i)] * (s + 1)
    for j, t in enumerate(tau):
        copies[("t", j)] = t
        word0 += [("t", j)] * t
    total = 0
    for word in multiset_permutations(word0):
        good = True
        for a, b in _last_first_adjacencies(word, copies):
            if a in rank and b in rank and not rank[a] < rank[b]:
                good = False
                break
        if good:
            total += 1
    return total


def count_main_claim(lam, tau=(), rho=(), max_symbols=DEFAULT_MAX_SYMBOLS):
    """Averaged word count equal to the basis coefficient c(lam; (d), tau, rho).

    Words use lam[i]+1 copies of kind ('l', i), tau[j]+1 copies of
    ('t', j) and rho[k] copies of ('r', k).  For a fixed total order on
    the l- and t-kinds a word counts when
      (1) whenever the last copy of a kind is immediately followed by
          the first copy of another kind, both l- or t-kinds, the
          earlier kind ranks below the later one, and
      (2) no last copy of an l-kind is immediately followed by any
          copy of any l-kind.
    The result is the exact average over all orders ranking every
    t-kind below every l-kind.
    """
    lam, tau, rho = tuple(lam), tuple(tau), tuple(rho)
    n = sum(lam) + len(lam) + sum(tau) + len(tau) + sum(rho)
    _check_bound(n, max_symbols)
    word0 = []
    copies = {}
    for i, v in enumerate(lam):
        copies[("l", i)] = v + 1
        word0 += [("l", i)] * (v + 1)
    for j, v in enumerate(tau):
        copies[("t", j)] = v + 1
        word0 += [("t", j)] * (v + 1)
    for k, v in enumerate(rho):
        copies[("r", k)] = v
        word0 += [("r", k)] * v
    orders = []
    for perm_t in permutations(range(len(tau))):
        for perm_l in permutations(range(len(lam))):
            rank = {("t", j): pos for pos, j in enumerate(perm_t)}
            rank.update(
                {("l", i): len(tau) + pos for pos, i in enumerate(perm_l)}
            )
            orders.append(rank)
    total = 0
    for word in multiset_permutations(word0):
        if not _no_l_kind_after_last(word, copies):
            continue
        pairs = [
            (a, b)
            for a, b in _last_first_adjacencies(word, copies)
            if a[0] in "lt" and b[0] in "lt"
        ]
        for rank in orders:
            if all(rank[a] < rank[b] for a, b in pairs):
                total += 1
    return Fraction(total, len(orders))


def _no_l_kind_after_last(word, copies):
    # the last copy of an l-kind must not precede any l-kind symbol
    seen = {}
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        seen[a] = seen.get(a, 0) + 1
        if a[0] == "l" and seen[a] == copies[a] and b[0] == "l":
            return False
    return True


def _positions(word):
    return {sym: pos for pos, sym in enumerate(word)}


def _comb_ok(pos, kind_symbols):
    """Comb relations on numbered symbols s_1..s_{2m+1}: odd chain increasing, each even below the next odd."""
    m = (len(kind_symbols) - 1) // 2
    for j in range(1, m + 1):
        if not pos[kind_symbols[2 * j - 2]] < pos[kind_symbols[2 * j]]:
            return False  # s_{2j-1} < s_{2j+1}
        if not pos[kind_symbols[2 * j - 1]] < pos[kind_symbols[2 * j]]:
            return False  # s_{2j} < s_{2j+1}
    return True


def _total_order_ok(pos, kind_symbols):
    return all(
        pos[a] < pos[b] for a, b in zip(kind_symbols, kind_symbols[1:])
    )


def count_comb_linear_extensions(pi, max_symbols=DEFAULT_MAX_SYMBOLS):
    """Number of arrangements of numbered symbols with each kind comb-like.

    Kind i contributes the 2*pi[i]+1 distinct symbols ('c', i, 1) ..
    ('c', i, 2*pi[i]+1).
    """
    pi = tuple(pi)
    _check_bound(2 * sum(pi) + len(pi), max_symbols)
    kinds = [
        tuple(("c", i, j) for j in range(1, 2 * v + 2)) for i, v in enumerate(pi)
    ]
    symbols = [s for kind in kinds for s in kind]
    total = 0
    for word in permutations(symbols):
        pos = _positions(word)
        if all(_comb_ok(pos, kind) for kind in kinds):
            total += 1
    return total


def count_a1(lam, tau=(), max_symbols=DEFAULT_MAX_SYMBOLS):
    """Word count with the end-or-non-first-successor rule only.

    Words use lam[i]+1 copies of kind ('l', i) and tau[j]+1 copies of
    kind ('t', j).  A word counts when the last copy of every l-kind
    is either the final symbol or immediately followed by a copy of a
    t-kind that is not the first copy of that kind.  No ordering of
    kinds is involved.
    """
    lam, tau = tuple(lam), tuple(tau)
    _check_bound(sum(lam) + len(lam) + sum(tau) + len(tau), max_symbols)
    word0 = []
    copies = {}
    for i, v in enumerate(lam):
        copies[("l", i)] = v + 1
        word0 += [("l", i)] * (v + 1)
    for j, v in enumerate(tau):
        copies[("t", j)] = v + 1
        word0 += [("t", j)] * (v + 1)
    total = 0
    for word in multiset_permutations(word0):
        if _a1_successor_ok(word, copies):
            total += 1
    return total


def _a1_successor_ok(word, copies):
    seen = {}
    for pos, a in enumerate(word):
        seen[a] = seen.get(a, 0) + 1
        if a[0] == "l" and seen[a] == copies[a] and pos + 1 < len(word):
            b = word[pos + 1]
            # successor must be a t-kind copy other than that kind's first
            if b[0] != "t" or seen.get(b, 0) == 0:
                return False
    return True


def count_a4(sigma, tau=(), r=None, max_symbols=DEFAULT_MAX_SYMBOLS):
    """Word count for the injection interpretation of eta''.

    Symbols: ('t', i, 1..2*tau[i]+1) per t-kind, ('s', i, 1..2*sigma[i]+1)
    per s-kind, and one End symbol.  A word counts when every t-kind is
    comb-like, every s-kind appears in increasing order, and the last
    symbol of each s-kind is immediately followed by an even-numbered
    t-symbol or by End.  Successors of distinct last symbols are
    distinct, so these words are exactly the injection sum with the
    injection read off from the word.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    if r is not None and r != sum(tau):
        raise ValueError("r must equal the size of tau")
    n = 2 * sum(tau) + len(tau) + 2 * sum(sigma) + len(sigma) + 1
    _check_bound(n, max_symbols)
    t_kinds = [
        tuple(("t", i, j) for j in range(1, 2 * v + 2)) for i, v in enumerate(tau)
    ]
    s_kinds = [
        tuple(("s", i, j) for j in range(1, 2 * v + 2)) for i, v in enumerate(sigma)
    ]
    end = ("end",)
    targets = {sym for kind in t_kinds for sym in kind[1::2]}  # even ordinals
    targets.add(end)
    symbols = [s for kind in t_kinds + s_kinds for s in kind] + [end]
    total = 0
    for word in permutations(symbols):
        pos = _positions(word)
        if not all(_comb_ok(pos, kind) for kind in t_kinds):
            continue
        if not all(_total_order_ok(pos, kind) for kind in s_kinds):
            continue
        if _last_successors_in(word, pos, s_kinds, targets):
            total += 1
    return total


def _last_successors_in(word, pos, s_kinds, targets):
    for kind in s_kinds:
        p = pos[kind[-1]]
        if p + 1 >= len(word) or word[p + 1] not in targets:
            return False
    return True


def count_b2(sigma, tau=(), max_symbols=DEFAULT_MAX_SYMBOLS):
    """Word count for the star interpretation of mu''.

    Symbols: ('t', i, 1..2*tau[i]+1), ('s', i, 1..2*sigma[i]+1), and one
    star symbol.  A word counts when every kind (both families) is
    comb-like and no last symbol of an s-kind is immediately followed
    by the first symbol ('t', j, 1) of a t-kind.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    n = 2 * sum(tau) + len(tau) + 2 * sum(sigma) + len(sigma) + 1
    _check_bound(n, max_symbols)
    t_kinds = [
        tuple(("t", i, j) for j in range(1, 2 * v + 2)) for i, v in enumerate(tau)
    ]
    s_kinds = [
        tuple(("s", i, j) for j in range(1, 2 * v + 2)) for i, v in enumerate(sigma)
    ]
    star = ("star",)
    forbidden = {kind[0] for kind in t_kinds}
    symbols = [s for kind in t_kinds + s_kinds for s in kind] + [star]
    total = 0
    for word in permutations(symbols):
        pos = _positions(word)
        if not all(_comb_ok(pos, kind) for kind in t_kinds + s_kinds):
            continue
        good = True
        for kind in s_kinds:
            p = pos[kind[-1]]
            if p + 1 < len(word) and word[p + 1] in forbidden:
                good = False
                break
        if good:
            total += 1
    return total
