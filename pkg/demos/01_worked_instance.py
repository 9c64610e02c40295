"""The tuple (5, 16, 19, 22) three ways: residue minima, brute force, constant terms."""
from fractions import Fraction

from frobenius import compute_nr, oracle_stats, stats_from_nr
from frobenius.ct import stats_via_ct
from frobenius.fx import fx_from_table
from frobenius.oracle import gap_set

A = (5, 16, 19, 22)

T = compute_nr(A)
print("residue minima N_r for r = 0..4:", T.values)
print("Frobenius number = max N_r - a =", T.frobenius)

gaps = gap_set(A)
print(f"{len(gaps)} gaps:", list(gaps.members))

for bundle in (
    stats_from_nr(T, 3, [Fraction(-1)]),
    oracle_stats(A, 3, [Fraction(-1)]),
    stats_via_ct(fx_from_table(T), A[0], 3, [Fraction(-1)], A),
):
    print(f"{bundle.engine:>8}: g={bundle.g} n={bundle.n} s={bundle.s} "
          f"s_mu={bundle.s_mu} shat_mu={bundle.shat_mu} s_mu^(-1)={bundle.s_mu_lambda[Fraction(-1)]}")
