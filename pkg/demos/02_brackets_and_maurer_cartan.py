"""The four graded brackets and their Maurer-Cartan characterizations.

Run with:  python3 demos/02_brackets_and_maurer_cartan.py
"""

from homlie import (Mat, cup_bracket, derived_bracket, fixture_b, fn_bracket,
                    nr_bracket, operator_cochain, theta)
from homlie.structures import RawHomStructure, check_hom_jacobi
from homlie.theorems import sample_cochain, _stream

B = fixture_b()
sp = B.space
rng = _stream(0, "demo-brackets")

# The structure cochain mu is a square-zero element of the insertion
# bracket; that is the Maurer-Cartan shape of the twisted Jacobi identity.
print("insertion bracket square of the structure cochain:",
      "zero" if nr_bracket(B.mu, B.mu).is_zero() else "nonzero")

# A random compatible 2-cochain is usually not a bracket; the square-zero
# test and the direct cyclic-sum oracle agree either way.
nu = sample_cochain(sp, sp, 2, rng)
mc = nr_bracket(nu, nu).is_zero()
direct = check_hom_jacobi(RawHomStructure(sp, nu))
print(f"random 2-cochain: square-zero {mc}, cyclic-sum oracle {direct}")

# Identity-map sanity values for all four brackets.
ident = operator_cochain(sp, sp, Mat.identity(3))
print()
print("identity-cochain sanity values:")
print("  cup bracket of (id, id) equals twice the structure bracket:",
      cup_bracket(ident, ident, B) == B.mu.scale(2))
print("  theta(id) equals minus twice the structure bracket:",
      theta(B, ident) == B.mu.scale(-2))
print("  corrected cup bracket square of id vanishes:",
      fn_bracket(B, ident, ident).is_zero())
print("  derived bracket square of id:",
      "zero" if derived_bracket(B, ident, ident).is_zero() else "nonzero")

# Graded skew-symmetry with each bracket's own degree convention.
P = sample_cochain(sp, sp, 1, rng)
Q = sample_cochain(sp, sp, 2, rng)
m, n = P.arity, Q.arity
sign_shifted = (-1) ** ((m - 1) * (n - 1))
sign_plain = (-1) ** (m * n)
print()
print("graded skew-symmetry on a random (arity 1, arity 2) pair:")
print("  insertion bracket (shifted degrees):",
      nr_bracket(Q, P) == nr_bracket(P, Q).scale(-sign_shifted))
print("  cup bracket:", cup_bracket(Q, P, B) == cup_bracket(P, Q, B).scale(-sign_plain))
print("  corrected cup:", fn_bracket(B, Q, P) == fn_bracket(B, P, Q).scale(-sign_plain))
print("  derived:", derived_bracket(B, Q, P) == derived_bracket(B, P, Q).scale(-sign_plain))
