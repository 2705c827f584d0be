"""From Hecke matrices to exact twisted L-value ratios of eigenforms.

The bundled fixtures express eigenforms as combinations of the R_n basis.
Diagonalizing the weight-24 Hecke matrix recovers the coefficient vectors
over Q(sqrt 144169), and pushing a quadratic twist through the combination
gives completed-L ratios as exact elements of that field.
"""

from heckeperiods import (
    char_poly,
    eigen_decompose,
    kronecker_character,
    load_fixtures,
    twisted_lambda_ratio,
)

registry = load_fixtures()

# Weight 24, level 1: the two Galois-conjugate eigenforms.
fixture = registry.matrix("t2-weight24-level1")
print("char poly (deg-desc):", [str(c.rational_value()) for c in char_poly(fixture.basis_action).coefficients])
for lam, vec in eigen_decompose(fixture.coefficient_matrix):
    print(f"  eigenvalue {lam}: coefficients ({', '.join(str(v) for v in vec)})")

# Ratios Lambda(f, chi, m1+1) / Lambda(f, chi, m2+1) for the twist mod 5.
chi = kronecker_character(5)
form = registry.eigenform("sl2z-w24-even-plus")
for m1 in (1, 3, 5, 7, 9):
    ratio = twisted_lambda_ratio(form, chi, m1, 11)
    base = ratio.base.rational_value()
    rad = ratio.radical.rational_value()
    print(f"  Lambda(chi,{m1+1})/Lambda(chi,12) = {base} + {rad} sqrt({ratio.d})")

# Weight-16 newform on Gamma_0(2): the eigenvector for eigenvalue 6252.
fixture = registry.matrix("t3-weight16-level2")
pairs = eigen_decompose(fixture.coefficient_matrix)
for lam, vec in pairs:
    tag = "  <- newform" if str(lam) == "6252" else ""
    print(f"  eigenvalue {lam}: ({', '.join(str(v) for v in vec)}){tag}")

# The central-value table for that newform: sqrt(D)-normalized and squared
# up to a factor of 2, every entry is a perfect square.
table = registry.central_values
print("central-value table discriminants:", table.discriminants)
print("D=8 entry:", table.value(8), "=", next(r.factored for r in table.rows if r.discriminant == 8))
