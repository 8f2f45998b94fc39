"""Spotting a small bias: one-sided quantum error vs two-sided classical.

When the promise is balanced-or-biased(eps), the walk only ever errs by
missing the bias: a balanced pattern cannot light up the exit edge, and
a biased one is missed with probability (1 - nu eps^2)^m.  The classical
mean-threshold test errs in both directions, with Chernoff bounds on
each tail.  Either way, useful discrimination needs m eps^2 of order 1.
"""

from cohwalk import (
    classical_error_bounds,
    exact_tail_probabilities,
    quantum_miss_probability,
)


def main():
    eps = 0.1
    print(f"Known bias eps = {eps}; sweeping the trial count m.\n")
    print(f"{'m':>6} {'quantum miss':>13} {'exp(-m nu eps^2)':>17} "
          f"{'P(false eps)':>13} {'chernoff':>10} {'P(false bal)':>13} {'chernoff':>10}")
    for m in (50, 100, 200, 400, 800, 1600):
        miss = quantum_miss_probability(m, eps, nu=1.0)
        tails = exact_tail_probabilities(m, eps)
        bounds = classical_error_bounds(m, eps)
        print(f"{m:6d} {miss.exact:13.6f} {miss.approx:17.6f} "
              f"{tails.false_eps:13.6f} {bounds.chernoff_false_eps:10.6f} "
              f"{tails.false_bal:13.6f} {bounds.chernoff_false_bal:10.6f}")

    print("\nThe exact tails always sit below their Chernoff envelopes.")
    print("Note the quantum column: by m ~ 1/eps^2 the bias is reliably seen,")
    print("and a balanced pattern never triggers a false alarm at all.\n")

    print("Decoherence just rescales the clock: runs needed vs nu at eps=0.1")
    for nu in (1.0, 0.5, 0.25):
        runs = round(1 / (nu * eps * eps))
        miss = quantum_miss_probability(runs, eps, nu)
        print(f"  nu={nu:4.2f}: m = 1/(nu eps^2) = {runs:5d} runs "
              f"-> miss probability {miss.exact:.4f}")


if __name__ == "__main__":
    main()
