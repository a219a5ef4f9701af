"""Exact cohomology dimensions and order-by-order morphism deformations.

Run with:  python3 demos/03_cohomology_and_deformations.py
"""

from homlie import (ComplexSpec, HomMorphism, Mat, cohomology, extend, fixture_b,
                    fixture_yau_sl2, obstruction)
from homlie.cochains import cochain_matrix, flatten_cochain
from homlie.deformations import MorphismDeformation
from homlie.linalg import kernel_basis
from homlie.cochains import SkewCochain

B = fixture_b()

print("cohomology of the 3-dim multiplicative fixture, adjoint coefficients:")
spec = ComplexSpec.adjoint(B)
for degree in range(0, 4):
    r = cohomology(spec, degree)
    print(f"  degree {degree}: cochains {r.dim_cochains}, cocycles {r.dim_cocycles},"
          f" coboundaries {r.dim_coboundaries}, cohomology {r.dim_h}")

# Deformations of the identity morphism of the twisted sl2 fixture: the
# degree-2 cohomology of the twisted complex vanishes, so every finite-order
# deformation extends.
A = fixture_yau_sl2()
phi = Mat.identity(3)
mspec = ComplexSpec.morphism(HomMorphism(A, A, phi))
print()
print("identity morphism on the twisted sl2 fixture:")
print(f"  degree-2 cohomology dimension: {cohomology(mspec, 2).dim_h}")

basis = mspec.basis(1)
columns = [flatten_cochain(mspec.differential(b)) for b in basis]
direction = SkewCochain.zero(A.space, A.space, 1)
for b, c in zip(basis, kernel_basis(Mat.from_columns(columns))[0].entries):
    direction = direction + b.scale(c * 2)

d = MorphismDeformation(A, A, (phi, cochain_matrix(direction)))
print(f"  starting from an order-1 deformation along a degree-1 cocycle")
while d.order < 5:
    ob = obstruction(d)
    status = "zero" if ob.cocycle.is_zero() else "nonzero but exact"
    d = extend(d)
    assert d is not None
    print(f"  extended to order {d.order} (obstruction was {status})")
print("  final term of the order-5 family:")
for row in d.terms[-1].rows:
    print("   ", tuple(str(x) for x in row))
