"""Check the cyclic sieving phenomenon for the rotation action sigma."""
# %%
from symplectic_csp.csp import check_orbit_theorem, hypotheses_hold, verify_csp

for shape, m in [((2, 1), 2), ((2, 2, 1), 4), ((2, 1), 3), ((4, 1), 6)]:
    h = hypotheses_hold(shape, m)
    census = check_orbit_theorem(shape, m).census.as_dict()
    report = verify_csp(shape, m)
    print(shape, m, "hypotheses" if h else h.witness(), census, "CSP" if report.verdict else "no CSP")

# %% Evaluations at roots of unity against fixed-point counts.
for e in verify_csp((2, 1), 3).evaluations:
    print(e.d, e.fixed, e.poly if e.poly is not None else f"not an integer (residue {e.residue})")
