"""Enumeration and verification of k-vertex-critical graphs in hereditary classes.

The main entry points are re-exported here; see the submodules for details.
"""

__version__ = "0.1.0"

from .canon import CanonicalForm, are_isomorphic, canonical_form
from .coloring import (
    ColoringCertificate,
    CriticalityReport,
    chromatic_number,
    clique_number,
    independence_number,
    is_k_colorable,
    is_k_vertex_critical,
)
from .enumerate import (
    CountTable,
    EnumerationConfig,
    cross_check,
    enumerate_critical,
    iter_critical,
    verify_corpus,
)
from .graph import (
    Graph,
    connected_components,
    induced_subgraph,
    is_homogeneous_set,
    members,
    set_relation,
    vset,
)
from .graph6 import Graph6Error, parse_graph6, serialize_graph6
from .patterns import PatternFamily, contains_induced, is_family_free, named_graph
from .structure import (
    ClaimReport,
    Decomposition,
    RamseyInstance,
    check_lemma2,
    check_ramsey_lemma_degenerate,
    decompose,
    find_lemma1_violation,
    is_antichain,
    min_ell_for_P4_ellP1_freeness,
    verify_case_table,
    verify_proof_claims,
)
