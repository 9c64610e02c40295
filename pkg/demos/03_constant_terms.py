"""Statistics from f(x) = sum_r x^{N_r} by constant-term extraction."""
from fractions import Fraction

from frobenius.apery import compute_nr, stats_from_nr
from frobenius.ct import differentiate, series_t_over_one_minus_exp, stats_via_ct, value_at_one
from frobenius.families import FamilySpec
from frobenius.fx import fx_equivalence_check, fx_family

print("t/(1 - e^t) =", " + ".join(f"({c}) t^{i}" for i, c in enumerate(series_t_over_one_minus_exp(1, 6))))

spec = FamilySpec("pm", dict(a=5, h=2, d=1))
A = spec.tuple()
f = fx_family(spec)
print("tuple", A)
print("f(x) as rational terms:", f.to_json())

T = compute_nr(A)
print("expands to the residue table:", fx_equivalence_check(f, T).describe())
print("f(1) =", value_at_one(f), " f'(1) =", value_at_one(differentiate(f)))

ct = stats_via_ct(f, A[0], 3, [Fraction(1, 2)], A)
nr = stats_from_nr(T, 3, [Fraction(1, 2)])
print("ct:", ct.to_json())
print("nr:", nr.to_json())
print("differences:", ct.differences(nr) or "none")
