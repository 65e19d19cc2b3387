"""Normalized top-degree evaluations of kappa-psi monomials.

All evaluations are normalized so that the corresponding pure psi-class
value plays the role of the unit; with that normalization the genus
drops out of every formula below and each function is a finite signed
sum over set partitions, exact over the rationals.

``theta`` is the compact-type evaluation of a kappa-monomial times a
psi-monomial.  The ``mu`` family is the smooth-locus analogue together
with its two partially-separated variants; the three are related by
inclusion-exclusion over merges of the kappa indices.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import double_factorial, factorial, multinomial
from .partitions import (
    enumerate_set_partitions,
    merge,
    partition,
    separates,
)


def _memo_size():
    # SOCLERANK_CACHE_SIZE bounds the shared evaluation caches; unset or
    # nonpositive means unbounded
    raw = os.environ.get("SOCLERANK_CACHE_SIZE")
    if raw is None:
        return None
    size = int(raw)
    return size if size > 0 else None


_MEMO_SIZE = _memo_size()


@dataclass(frozen=True)
class ModuliContext:
    """Consistent (genus, pairing degree, complementary degree) bookkeeping.

    The socle sits in total degree 2g-3; a pairing in degree d has
    complementary degree r = 2g-3-d.
    """

    g: int
    d: int = None
    r: int = None

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("genus must be at least 2")
        d, r = self.d, self.r
        if d is None and r is not None:
            d = 2 * self.g - 3 - r
        if r is None and d is not None:
            r = 2 * self.g - 3 - d
        if d is not None:
            if not 0 <= d <= 2 * self.g - 3:
                raise ValueError("degree %d out of range for genus %d" % (d, self.g))
            if r + d != 2 * self.g - 3:
                raise ValueError("degrees %d + %d must sum to %d" % (d, r, 2 * self.g - 3))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)


def psi_lambda_g(tau, g):
    """Normalized compact-type socle value of a pure psi-monomial.

    ``tau`` lists the psi exponents (zeros allowed); they must sum to
    the socle degree 2g-3 + len(tau).  The value is the multinomial
    coefficient (2g-3+len(tau))! / prod(tau_i!).
    """
    tau = tuple(tau)
    if any(t < 0 for t in tau):
        raise ValueError("psi exponents must be nonnegative")
    top = 2 * g - 3 + len(tau)
    if sum(tau) != top:
        raise ValueError(
            "psi exponents sum to %d, socle degree needs %d" % (sum(tau), top)
        )
    return multinomial(top, tau)


def psi_lambda_g_lambda_g1(sigma, g):
    """Normalized smooth-locus socle value of a pure psi-monomial.

    ``sigma`` must be a partition (positive parts) of g-2+len(sigma).
    Returns an exact Fraction.
    """
    sigma = partition(sigma)
    n = len(sigma)
    if sum(sigma) != g - 2 + n:
        raise ValueError(
            "psi exponents sum to %d, smooth socle needs %d" % (sum(sigma), g - 2 + n)
        )
    num = factorial(2 * g - 3 + n) * double_factorial(2 * g - 1)
    den = factorial(2 * g - 1)
    for s in sigma:
        den *= double_factorial(2 * s + 1)
    return Fraction(num, den)


def theta(sigma, tau=()):
    """Compact-type evaluation of kappa_sigma * psi^tau, normalized.

    Inclusion-exclusion over set partitions of the kappa index set;
    every summand is a multinomial coefficient, so the result is an
    integer.  Both arguments are partitions; tau may be empty.
    """
    return _theta(partition(sigma), partition(tau))


@lru_cache(maxsize=_MEMO_SIZE)
def _theta(sigma, tau):
    ell = len(sigma)
    size = sum(sigma) + sum(tau)
    total = 0
    for blocks in enumerate_set_partitions(range(ell)):
        merged = [sum(sigma[i] for i in b) + 1 for b in blocks]
        term = multinomial(size + len(blocks), merged + list(tau))
        total += term if (len(blocks) + ell) % 2 == 0 else -term
    return total


def _mu_sum(sigma, tau, separate_tau, separate_sigma):
    sigma = partition(sigma)
    tau = partition(tau)
    s_idx = tuple(("s", i) for i in range(len(sigma)))
    t_idx = tuple(("t", j) for j in range(len(tau)))
    value = dict(zip(s_idx, sigma)) | dict(zip(t_idx, tau))
    size = sum(sigma) + sum(tau)
    base_sign = (-1) ** (len(sigma) + len(tau))
    total = Fraction(0)
    for blocks in enumerate_set_partitions(s_idx + t_idx):
        if separate_tau and not separates(blocks, t_idx):
            continue
        if separate_sigma and not separates(blocks, s_idx):
            continue
        den = 1
        for b in blocks:
            den *= double_factorial(2 * sum(value[i] for i in b) + 1)
        term = Fraction(factorial(2 * size + 1 + len(blocks)), den)
        total += base_sign * (-1) ** len(blocks) * term
    return total


@lru_cache(maxsize=_MEMO_SIZE)
def _mu_cached(sigma, tau, separate_tau, separate_sigma):
    return _mu_sum(sigma, tau, separate_tau, separate_sigma)


def mu(sigma, tau=()):
    """Smooth-locus evaluation of kappa_sigma * kappa_tau, normalized."""
    return _mu_cached(partition(sigma), partition(tau), False, False)


def mu_prime(sigma, tau=()):
    """Variant of ``mu`` whose sum keeps only set partitions separating the tau indices."""
    return _mu_cached(partition(sigma), partition(tau), True, False)


def mu_dprime(sigma, tau=()):
    """Variant of ``mu`` separating both the tau indices and the sigma indices."""
    return _mu_cached(partition(sigma), partition(tau), True, True)


def mu_from_mu_prime(sigma, tau):
    """Reassemble mu(sigma, tau) from mu_prime by merging tau indices."""
    sigma = partition(sigma)
    tau = partition(tau)
    total = Fraction(0)
    for blocks in enumerate_set_partitions(range(len(tau))):
        sign = (-1) ** (len(tau) + len(blocks))
        total += sign * mu_prime(sigma, merge(tau, blocks))
    return total


def mu_prime_from_mu_dprime(sigma, tau):
    """Reassemble mu_prime(sigma, tau) from mu_dprime by merging sigma indices."""
    sigma = partition(sigma)
    tau = partition(tau)
    total = Fraction(0)
    for blocks in enumerate_set_partitions(range(len(sigma))):
        sign = (-1) ** (len(sigma) + len(blocks))
        total += sign * mu_dprime(merge(sigma, blocks), tau)
    return total
