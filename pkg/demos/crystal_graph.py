"""Walk the crystal on symplectic tableaux of shape (2,1) with m = 2.

Start from the highest-weight tableau, apply lowering operators, and export
the whole component as Graphviz DOT.
"""
# %%
from symplectic_csp.core import KNTableau
from symplectic_csp.crystal import column_reading_word, crystal_graph, e_tab, f_tab

t = KNTableau.highest_weight((2, 1), 2)
print(t.pretty())
print("weight", t.weight)

# %% Lowering operators act on the column reading word.
u = f_tab(t, 1)
print(u.pretty())
print("reading word", column_reading_word(u))
assert e_tab(u, 1) == t
print("f_2 of the highest weight:", f_tab(t, 2).signed_rows())
print("e_1 of the highest weight:", e_tab(t, 1))

# %% The connected component has 16 vertices and 18 edges.
g = crystal_graph((2, 1), 2)
print(len(g.vertices), "vertices,", len(g.edges), "edges")
print(g.to_dot()[:400], "...")
