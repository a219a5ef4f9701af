"""Tour of the structure layer: twisted brackets, multiplicativity, fixtures.

Run with:  python3 demos/01_structures_and_fixtures.py
"""

from homlie import (Mat, Vec, as_hom_lie, check_hom_jacobi, check_multiplicative,
                    fixture_3dim, fixture_b, fixture_jackson_sl2, fixture_yau_sl2,
                    multiplicativity_failures, yau_twist)

# The q-deformed sl2 family: a twisted Jacobi identity holds for every q,
# but the twist is a bracket homomorphism only at the degenerate values.
print("q-deformed sl2 on basis (e, h, f), twist diag(q, q, q^2)")
for q in ("1", "2", "1/2"):
    j = fixture_jackson_sl2(q)
    print(f"  q = {q:>3}: twisted Jacobi {check_hom_jacobi(j)},"
          f" multiplicative {check_multiplicative(j)}")

print()
print("witnesses for q = 2 (twist of bracket vs bracket of twists):")
for (i, j), lhs, rhs in multiplicativity_failures(fixture_jackson_sl2(2)):
    names = "ehf"
    print(f"  pair ({names[i]}, {names[j]}): {tuple(map(str, lhs.entries))}"
          f" vs {tuple(map(str, rhs.entries))}")

# The four-parameter 3-dim family: multiplicative exactly when a = d = 0.
print()
print("3-dim family [e1,e2] = a e1 + b e3, [e1,e3] = c e2, [e2,e3] = d e1 + 2a e3:")
for a, b, c, d in [(0, 1, 1, 0), (1, 1, 1, 0), (0, 1, 1, 1)]:
    s = fixture_3dim(a, b, c, d)
    print(f"  (a,b,c,d)=({a},{b},{c},{d}):"
          f" Jacobi {check_hom_jacobi(s)}, multiplicative {check_multiplicative(s)}")

# Promoting the multiplicative member gives the workhorse fixture used by
# the rest of the demos; invalid structures are rejected at construction.
B = fixture_b()
print()
print(f"the multiplicative member (a=d=0, b=c=1) promotes fine: dim {B.dim}")
try:
    as_hom_lie(fixture_3dim(1, 0, 0, 0))
except ValueError as exc:
    print(f"promoting a non-multiplicative member fails loudly: {exc}")

# Twisting a Lie algebra along one of its endomorphisms always produces a
# multiplicative structure.
tw = fixture_yau_sl2()
print()
print("twisting classical sl2 by the automorphism diag(2, 1, 1/2):")
print(f"  twisted Jacobi {check_hom_jacobi(tw)}, multiplicative {check_multiplicative(tw)}")
e, h, f = (Vec.basis(3, i) for i in range(3))
print(f"  twisted bracket [e, f] = {tuple(map(str, tw.bracket(e, f).entries))}"
      " (the twist applied to h)")
