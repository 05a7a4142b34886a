"""Exact workbench for weak Bruhat intervals, Schur labeled skew shape
posets, and their 0-Hecke modules.

Everything is exact: permutations and posets are combinatorial objects,
module arithmetic runs over the rationals, and every numeric claim made by
the verify suites is an equality, not an approximation.
"""

__version__ = "0.1.0"

from heckeposet.permutations import (
    LEFT,
    RIGHT,
    Permutation,
    WeakInterval,
    all_permutations,
    weak_interval,
    weak_leq,
)
from heckeposet.shapes import (
    Composition,
    GeneralizedComposition,
    SkewPartition,
    balanced_generalized_composition,
    basic_skew_shapes,
    parse_shape,
)
from heckeposet.tableaux import (
    Tableau,
    canonical_filling,
    enumerate_syt,
    reading,
    recording_tableau,
    rectify,
    rsk,
    schur_labelings,
)
from heckeposet.posets import (
    LabeledPoset,
    kp,
    poset_from_tableau,
    regular_schur_posets,
    schur_posets,
    schur_recognize,
)
from heckeposet.qsym import QSymElement, schur_expand, schur_to_f
from heckeposet.hecke import (
    HeckeModule,
    ModuleMap,
    characteristic,
    direct_sum,
    interval_module,
    is_indecomposable,
    is_isomorphic,
    poset_module,
    proj_cover_inj_hull,
    projective,
    radical_top_socle,
    simple_module,
    subset_module,
    tableau_module,
    verify_submodule,
)
from heckeposet.structure import (
    EquivClassDescriptor,
    Filtration,
    distinguished_filtration,
    dual_knuth_closure,
    equivalence_class,
)

__all__ = [
    "LEFT",
    "RIGHT",
    "Permutation",
    "WeakInterval",
    "all_permutations",
    "weak_interval",
    "weak_leq",
    "Composition",
    "GeneralizedComposition",
    "SkewPartition",
    "balanced_generalized_composition",
    "basic_skew_shapes",
    "parse_shape",
    "Tableau",
    "canonical_filling",
    "enumerate_syt",
    "reading",
    "recording_tableau",
    "rectify",
    "rsk",
    "schur_labelings",
    "LabeledPoset",
    "kp",
    "poset_from_tableau",
    "regular_schur_posets",
    "schur_posets",
    "schur_recognize",
    "QSymElement",
    "schur_expand",
    "schur_to_f",
    "HeckeModule",
    "ModuleMap",
    "characteristic",
    "direct_sum",
    "interval_module",
    "is_indecomposable",
    "is_isomorphic",
    "poset_module",
    "proj_cover_inj_hull",
    "projective",
    "radical_top_socle",
    "simple_module",
    "subset_module",
    "tableau_module",
    "verify_submodule",
    "EquivClassDescriptor",
    "Filtration",
    "distinguished_filtration",
    "dual_knuth_closure",
    "equivalence_class",
]
