"""Closed forms for tuple families against the residue engine, and where the hypotheses matter."""
from frobenius.apery import compute_nr, stats_from_nr
from frobenius.families import FAMILIES, FamilySpec, a2j_guard_variant, evaluate_family

spec = FamilySpec("arith", dict(a=7, h=1, d=1, k=2))
A = spec.tuple()
print("arith a=7 h=1 d=1 k=2 ->", A)
print("  closed:", evaluate_family(spec, 2).to_dict())
print("  nr:    ", stats_from_nr(compute_nr(A), 2).to_dict())

# Sweep one family over a small grid.
fam = FAMILIES["pm"]
checked = 0
for a in range(3, 30):
    for h in range(1, 4):
        for d in range(1, 4):
            point = dict(a=a, h=h, d=d)
            if not fam.admits(point):
                continue
            spec = FamilySpec("pm", point)
            closed = evaluate_family(spec)
            nr = stats_from_nr(compute_nr(spec.tuple()))
            assert (closed.g, closed.n, closed.s) == (nr.g, nr.n, nr.s), point
            checked += 1
print(f"pm: {checked} instances agree")

# The (a, ha+d, ha+2d, ha+jd) family needs one more hypothesis than its
# weaker form one might guess. This instance passes the weaker test only.
point = dict(a=2, h=2, d=1, j=6)
print("a2j", point, "hypotheses:", a2j_guard_variant(**point))
unguarded = FAMILIES["a2j"].unguarded(**point)
truth = compute_nr(FamilySpec("a2j", point).tuple()).frobenius
print(f"  formula without the extra hypothesis gives g={unguarded.g}, true g={truth}")
