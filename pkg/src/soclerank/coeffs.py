"""Linear forms on the kappa-monomial basis and their expansion coefficients.

Every decorated boundary stratum pairs against the kappa monomials of
degree d, giving a linear form on P(d).  The forms attached to pure
strata, normalized to 1 on their own partition, are a triangular basis;
the coefficients of any stratum row in that basis are the c values that
the housing criterion predicts to vanish.  The eta family, the phi
transform and the block count factors connect those coefficients to the
mu integrals from the socle module.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import double_factorial, factorial
from .partitions import (
    automorphism_count,
    enumerate_partitions,
    enumerate_refining_functions,
    enumerate_set_partitions,
    merge,
    partition,
    restrict,
)
from .socle import mu_dprime, theta


@dataclass(frozen=True)
class LinearForm:
    """Values of a linear functional on P(degree), in canonical order."""

    degree: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(enumerate_partitions(self.degree)):
            raise ValueError("form must carry one value per partition")

    def __call__(self, pi):
        return self.values[_position(self.degree)[partition(pi)]]

    def items(self):
        return tuple(zip(enumerate_partitions(self.degree), self.values))


@lru_cache(maxsize=None)
def _position(d):
    return {p: i for i, p in enumerate(enumerate_partitions(d))}


def tabulate(d, func):
    return LinearForm(d, tuple(func(p) for p in enumerate_partitions(d)))


def _plain(q):
    # collapse integer-valued fractions so equality tests read naturally
    if isinstance(q, Fraction) and q.denominator == 1:
        return int(q)
    return q


def m_form(lam):
    """The normalized pure-stratum form: 1 at lam, 0 off refinements of lam."""
    lam = partition(lam)
    return _m_form(lam)


@lru_cache(maxsize=None)
def _m_form(lam):
    aut = automorphism_count(lam)

    def value(pi):
        total = 0
        for phi in enumerate_refining_functions(lam, pi):
            prod = 1
            for j in range(len(lam)):
                prod *= theta(restrict(pi, _preimage(phi, j)))
            total += prod
        return _plain(Fraction(total, aut))

    return tabulate(sum(lam), value)


def _preimage(phi, j):
    return tuple(i for i, t in enumerate(phi) if t == j)


@lru_cache(maxsize=None)
def m_basis(d):
    """The pure forms in canonical partition order."""
    return tuple((lam, m_form(lam)) for lam in enumerate_partitions(d))


def v_form(data, d):
    """Pairing row of a decorated boundary stratum against kappa monomials.

    ``data`` lists per-vertex triples (socle remainder, kappa decoration,
    psi decoration); remainders must sum to d.  A zero remainder only
    contributes its constant theta factor.
    """
    triples = []
    for m, kap, psi in data:
        if m < 0:
            raise ValueError("socle remainders must be nonnegative")
        triples.append((m, partition(kap), partition(psi)))
    if sum(m for m, _, _ in triples) != d:
        raise ValueError("remainders sum to %d, expected %d"
                         % (sum(m for m, _, _ in triples), d))
    constant = 1
    active = []
    for m, kap, psi in triples:
        if m == 0:
            constant *= theta(kap, psi)
        else:
            active.append((m, kap, psi))
    active.sort(key=lambda t: t[0], reverse=True)
    gamma = tuple(m for m, _, _ in active)

    def value(pi):
        total = 0
        for phi in enumerate_refining_functions(gamma, pi):
            prod = constant
            for j, (_, kap, psi) in enumerate(active):
                block = restrict(pi, _preimage(phi, j))
                prod *= theta(partition(block + kap), psi)
            total += prod
        return total

    return tabulate(d, value)


def c_expansion(form):
    """Coefficients of ``form`` in the pure basis, by forward substitution.

    The basis is unitriangular against refinement when walked in length
    order, so each coefficient is the residual value at its own
    partition.
    """
    solved = []
    coeffs = {}
    for lam, mlam in m_basis(form.degree):
        residual = form(lam)
        for prev, prevform in solved:
            residual -= coeffs[prev] * prevform(lam)
        coeffs[lam] = _plain(residual)
        solved.append((lam, mlam))
    return coeffs


def _stratum_data(gamma, kappas, psis):
    gamma = tuple(gamma)
    k = len(gamma)
    kappas = ((),) * k if kappas is None else tuple(partition(p) for p in kappas)
    psis = ((),) * k if psis is None else tuple(partition(p) for p in psis)
    if len(kappas) != k or len(psis) != k:
        raise ValueError("need one decoration pair per remainder")
    return tuple(zip(gamma, kappas, psis))


@lru_cache(maxsize=None)
def _expansion(data, d):
    return c_expansion(v_form(data, d))


def c_coefficient(lam, gamma, kappas=None, psis=None):
    """Coefficient of the pure form at ``lam`` in a decorated stratum row.

    ``gamma`` lists the socle remainders of the stratum; ``kappas`` and
    ``psis`` give one decoration partition per remainder (default empty).
    """
    lam = partition(lam)
    return _expansion(_stratum_data(gamma, kappas, psis), sum(lam))[lam]


def c_chain(lam, gamma, kappas=None, psis=None):
    """The same coefficient by the alternating chain sum, as a cross-check.

    Multi-vertex rows reduce to a product of single-remainder
    coefficients over the refinement maps of lam onto the remainders;
    each single-remainder value unrolls into the signed sum over
    strictly coarsening chains, evaluated here by memoized recursion.
    """
    lam = partition(lam)
    data = _stratum_data(gamma, kappas, psis)
    constant = 1
    active = []
    for m, kap, psi in data:
        if m == 0:
            constant *= theta(kap, psi)
        else:
            active.append((m, kap, psi))
    active.sort(key=lambda t: t[0], reverse=True)
    parts = tuple(m for m, _, _ in active)
    total = 0
    for phi in enumerate_refining_functions(parts, lam):
        prod = constant
        for j, (_, kap, psi) in enumerate(active):
            prod *= _chain_single(restrict(lam, _preimage(phi, j)), kap, psi)
        total += prod
    return total


@lru_cache(maxsize=None)
def _chain_single(lam, kap, psi):
    # coefficient of lam in the one-vertex row theta(pi + kap; psi)
    total = theta(partition(lam + kap), psi)
    singletons = tuple((i,) for i in range(len(lam)))
    for blocks in enumerate_set_partitions(range(len(lam))):
        if blocks == singletons:
            continue
        step = 1
        for b in blocks:
            step *= theta(restrict(lam, b))
        total -= step * _chain_single(merge(lam, blocks), kap, psi)
    return total


def phi_inverse_transform(form):
    """The alternating merge sum: value at tau sums the form over coarsenings."""

    def value(tau):
        total = 0
        for blocks in enumerate_set_partitions(range(len(tau))):
            sign = -1 if (len(tau) + len(blocks)) % 2 else 1
            total += sign * form(merge(tau, blocks))
        return _plain(total)

    return tabulate(form.degree, value)


def phi_transform(form):
    """Two-sided inverse of phi_inverse_transform, by substitution over length."""
    d = form.degree
    out = {}
    for tau in enumerate_partitions(d):
        acc = form(tau)
        singletons = tuple((i,) for i in range(len(tau)))
        for blocks in enumerate_set_partitions(range(len(tau))):
            if blocks == singletons:
                continue
            sign = -1 if (len(tau) + len(blocks)) % 2 else 1
            acc -= sign * out[merge(tau, blocks)]
        out[tau] = _plain(acc)
    return LinearForm(d, tuple(out[p] for p in enumerate_partitions(d)))


def _check_sigma(sigma, g, r):
    if not 0 <= r <= g - 2:
        raise ValueError("need 0 <= r <= g-2")
    if sum(sigma) != g - 2 - r:
        raise ValueError("sigma must have size %d" % (g - 2 - r))
    if len(sigma) > r + 1:
        raise ValueError("sigma may have at most %d parts" % (r + 1))


def eta_form(sigma, g, r):
    """Expansion coefficients of kappa-decorated one-vertex rows, as a form in tau.

    The reference partition is the odd lift of sigma padded with ones to
    length r+1; the value at tau is the coefficient of that partition in
    the one-vertex row of degree 2g-3-r carrying kappa decoration tau.
    """
    sigma = partition(sigma)
    _check_sigma(sigma, g, r)
    return _eta(sigma, g, r)


@lru_cache(maxsize=None)
def _eta(sigma, g, r):
    d = 2 * g - 3 - r
    lam = partition(tuple(2 * s + 1 for s in sigma) + (1,) * (r + 1 - len(sigma)))
    return tabulate(r, lambda tau: c_coefficient(lam, (d,), (tau,)))


def eta_prime_form(sigma, g, r):
    """The eta row pushed through the phi transform."""
    sigma = partition(sigma)
    _check_sigma(sigma, g, r)
    return _eta_prime(sigma, g, r)


@lru_cache(maxsize=None)
def _eta_prime(sigma, g, r):
    return phi_transform(_eta(sigma, g, r))


def eta_dprime_form(sigma, g, r):
    """eta_prime divided by (r+1-len(sigma))!, checked to stay integral."""
    sigma = partition(sigma)
    _check_sigma(sigma, g, r)
    return _eta_dprime(sigma, g, r)


@lru_cache(maxsize=None)
def _eta_dprime(sigma, g, r):
    k = factorial(r + 1 - len(sigma))
    vals = []
    for v in _eta_prime(sigma, g, r).values:
        q = Fraction(v, k)
        if q.denominator != 1:
            raise ArithmeticError("eta_prime value %r not divisible by %d" % (v, k))
        vals.append(int(q))
    return LinearForm(r, tuple(vals))


def block_factor(block, sigma):
    """Orderings of the comb symbols of the parts in ``block``, end marker included.

    Value (2*s + b + 1)! / prod (2*sigma_j+1)!! over j in the block,
    where s is the block sum and b the block size; always a positive
    integer.
    """
    block = tuple(block)
    if not block:
        raise ValueError("block must be nonempty")
    sigma = tuple(sigma)
    s = sum(sigma[j] for j in block)
    num = factorial(2 * s + len(block) + 1)
    den = 1
    for j in block:
        den *= double_factorial(2 * sigma[j] + 1)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise ArithmeticError("block factor is not an integer")
    return int(q)


def verify_triangular_identity(sigma, g, r):
    """Check the block-factor expansion of mu_dprime over eta_dprime rows.

    For every tau of size r, mu_dprime(sigma, tau) must equal the sum
    over set partitions of the index set of sigma of the product of
    block factors times eta_dprime at the merged sigma.
    """
    sigma = partition(sigma)
    _check_sigma(sigma, g, r)
    for tau in enumerate_partitions(r):
        rhs = 0
        for blocks in enumerate_set_partitions(range(len(sigma))):
            prod = 1
            for b in blocks:
                prod *= block_factor(b, sigma)
            rhs += prod * _eta_dprime(merge(sigma, blocks), g, r)(tau)
        if mu_dprime(sigma, tau) != rhs:
            return False
    return True
