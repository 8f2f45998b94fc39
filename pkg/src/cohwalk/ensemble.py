"""Subsequence statistics for fixed-composition sign sequences.

A length-N sequence holds exactly p*N entries equal to +1 and the rest
-1, with every arrangement equally likely.  The number of +1 entries in
a fixed length-m subsequence then follows the hypergeometric law

    P(m_plus) = C(m, m_plus) * C(N-m, pN - m_plus) / C(N, pN),

which converges to the binomial law with success probability p as N
grows with m fixed.  This module evaluates both laws (exact big-integer
rationals for moderate N, log-gamma floats beyond) and measures the
worst-case distance between them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

EXACT_N_LIMIT = 200


@dataclass(frozen=True)
class EnsembleParams:
    """Composition of a sequence and one of its subsequences.

    ``n_total`` and ``m`` are the sequence and subsequence lengths,
    ``p`` the fraction of +1 entries (p * n_total must be an integer),
    and ``m_plus`` the +1 count whose probability is wanted.
    """

    n_total: int
    p: object
    m: int
    m_plus: int

    def __post_init__(self):
        if not 0 <= self.m_plus <= self.m <= self.n_total:
            raise ValueError("need 0 <= m_plus <= m <= n_total")
        k = self.p * self.n_total
        if abs(k - round(k)) > 1e-9:
            raise ValueError(f"p * n_total = {k} is not an integer")
        if not 0 <= round(k) <= self.n_total:
            raise ValueError("p must lie in [0, 1]")

    @property
    def n_plus(self):
        return round(self.p * self.n_total)


def hypergeometric_prob_exact(params):
    """Exact rational subsequence probability (big-integer arithmetic)."""
    n, k = params.n_total, params.n_plus
    m, j = params.m, params.m_plus
    if j > k or m - j > n - k:
        return Fraction(0)
    return Fraction(math.comb(m, j) * math.comb(n - m, k - j), math.comb(n, k))


def _log_comb(n, k):
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def hypergeometric_prob(params):
    """Subsequence probability as a float.

    Exact arithmetic up to n_total = 200, log-gamma evaluation beyond
    (relative accuracy around 1e-12).  Infeasible compositions have
    probability 0 rather than raising.
    """
    n, k = params.n_total, params.n_plus
    m, j = params.m, params.m_plus
    if j > k or m - j > n - k:
        return 0.0
    if n <= EXACT_N_LIMIT:
        return float(hypergeometric_prob_exact(params))
    return math.exp(_log_comb(m, j) + _log_comb(n - m, k - j) - _log_comb(n, k))


def binomial_prob(m, m_plus, p):
    """Independent-sample probability C(m, m_plus) p^m_plus (1-p)^(m-m_plus).

    Stays exact when ``p`` is a ``fractions.Fraction``.
    """
    if not 0 <= m_plus <= m:
        return 0.0
    if isinstance(p, Fraction):
        return math.comb(m, m_plus) * p**m_plus * (1 - p) ** (m - m_plus)
    if p == 0:
        return 1.0 if m_plus == 0 else 0.0
    if p == 1:
        return 1.0 if m_plus == m else 0.0
    log_pmf = _log_comb(m, m_plus) + m_plus * math.log(p) + (m - m_plus) * math.log1p(-p)
    return math.exp(log_pmf)


def convergence_gap(n_total, p, m):
    """Worst-case |hypergeometric - binomial| over all subsequence counts.

    Requires m <= n_total / 10 so the independent-sample comparison is in
    its domain of validity.  The gap shrinks like 1/n_total for fixed
    (m, p).
    """
    if m > n_total / 10:
        raise ValueError("convergence_gap needs m <= n_total / 10")
    if m == 0:
        return 0.0
    p_float = float(p)
    gap = 0.0
    for m_plus in range(m + 1):
        params = EnsembleParams(n_total, p, m, m_plus)
        gap = max(gap, abs(hypergeometric_prob(params) - binomial_prob(m, m_plus, p_float)))
    return gap
