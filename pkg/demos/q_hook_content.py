"""The generating polynomial X(q) of pwr over tableaux, computed three ways."""
# %%
from symplectic_csp.core import kappa
from symplectic_csp.enumeration import enumerate_by_crystal
from symplectic_csp.qpoly import determinant_poly, f_sp, reduce_mod_cyclic, x_poly

shape, m = (2, 1), 2
xq = x_poly(enumerate_by_crystal(shape, m))
print("sum over tableaux :", xq)
print("q-hook-content    :", f_sp(shape, m).shift(kappa(shape)))
print("determinant ratio :", determinant_poly(shape, m))

# %% Reduced mod q^(2m) - 1 the polynomial is flat.
print(reduce_mod_cyclic(xq, 2 * m))

# %% For m = 3 it is not, and the reduction shows it.
print(reduce_mod_cyclic(f_sp(shape, 3), 6))
