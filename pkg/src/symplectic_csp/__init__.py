"""Crystal combinatorics on symplectic Kashiwara-Nakashima tableaux and cyclic sieving."""

from .core import InvalidTableau, KNTableau, Letter, Partition, Violation, conjugate, hook, kappa, kn_violation, r_value, weight
from .crystal import (
    CrystalGraph,
    OrbitCensus,
    Word,
    column_reading_word,
    crystal_graph,
    e_tab,
    e_word,
    epsilon,
    f_tab,
    f_word,
    orbit,
    orbit_census,
    phi,
    reflect,
    rotate,
    sigma,
    sigma_i,
)
from .csp import (
    CspReport,
    a_chi,
    check_equiv_theorem,
    check_orbit_theorem,
    check_residue_lemma,
    hypotheses_hold,
    verify_csp,
)
from .enumeration import TableauSet, enumerate_by_crystal, enumerate_by_filter, weight_multiset
from .qpoly import (
    CyclotomicContext,
    IntPoly,
    closed_form_det,
    cyclotomic,
    determinant_poly,
    eval_at_root,
    f_sp,
    hook_content_count,
    pwr_tab,
    pwr_wt,
    reduce_mod_cyclic,
    x_poly,
)

__version__ = "0.1.0"
