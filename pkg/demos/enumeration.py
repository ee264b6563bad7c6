"""Enumerate KN tableaux two ways and compare with the hook-content count."""
# %%
from symplectic_csp.core import KNTableau
from symplectic_csp.enumeration import enumerate_by_crystal, enumerate_by_filter
from symplectic_csp.qpoly import hook_content_count

for shape, m in [((2, 1), 2), ((2, 1), 3), ((2, 2, 2), 3), ((2, 2, 1), 4)]:
    a = enumerate_by_crystal(shape, m)
    b = enumerate_by_filter(shape, m)
    print(shape, m, len(a), len(b), hook_content_count(shape, m), a.members == b.members)

# %% The filter route rejects non-admissible fillings with a reason.
bad = KNTableau.from_letters([[1], [-1]], 2, validate=False)
print(bad.violation())

# %% Weight multiplicities are symmetric under signed permutations.
s = enumerate_by_crystal((2, 1), 2)
for chi, k in sorted(s.weight_index.items()):
    print(chi, k)
