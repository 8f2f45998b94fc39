"""Why treating sampled shifters as independent coins is legitimate.

Drawing m positions from a fixed composition of N signs is a
hypergeometric experiment, not an independent one.  But for m much
smaller than N the subsequence law collapses onto the binomial law with
success probability p, and the worst-case distance between the two
shrinks like 1/N.  This is the license behind every 2^-m in the
decision analysis.
"""

from fractions import Fraction

from cohwalk import (
    EnsembleParams,
    binomial_prob,
    convergence_gap,
    hypergeometric_prob,
)


def main():
    n, p, m = 100, 0.5, 6
    print(f"Subsequence of m={m} from a balanced sequence of N={n}:\n")
    print(f"{'m_plus':>7} {'hypergeometric':>15} {'binomial':>10} {'diff':>10}")
    for m_plus in range(m + 1):
        hyper = hypergeometric_prob(EnsembleParams(n, p, m, m_plus))
        binom = binomial_prob(m, m_plus, p)
        print(f"{m_plus:7d} {hyper:15.6f} {binom:10.6f} {hyper - binom:+10.6f}")

    print("\nWorst-case gap as the sequence grows (m=10):\n")
    print(f"{'N':>7} {'gap p=0.5':>12} {'gap p=0.55':>12}")
    previous = None
    for n_big in (100, 400, 1600, 6400, 25600):
        g_half = convergence_gap(n_big, 0.5, 10)
        g_biased = convergence_gap(n_big, 0.55, 10)
        note = ""
        if previous is not None:
            note = f"   (x{g_half / previous:.3f} per 4x N)"
        print(f"{n_big:7d} {g_half:12.3e} {g_biased:12.3e}{note}")
        previous = g_half

    print("\nEach fourfold increase in N cuts the gap about fourfold: the")
    print("subsequence law approaches its binomial limit at rate 1/N.")

    total = sum(
        hypergeometric_prob(EnsembleParams(60, Fraction(1, 2), 11, j))
        for j in range(12)
    )
    print(f"\nSanity: the hypergeometric masses total {total} (exactly 1 in rational mode).")


if __name__ == "__main__":
    main()
