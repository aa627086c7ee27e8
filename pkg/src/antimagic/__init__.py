"""Antimagic orientations of lobsters, with independent verification."""

from antimagic.graph import Arc, OrientedLabeling, Tree, TreeError, degree, is_bijective_labeling, vertex_sums
from antimagic.lobster import construct_lobster, orient_lobster
from antimagic.paths import label_path_antimagic, lemma1_construct, lemma1_label, orient_bipartite, orient_path
from antimagic.taxonomy import TreeClass, UnsupportedTreeError, classify, decompose, find_spine
from antimagic.verify import verify_antimagic, verify_band_structure, verify_lemma1

__all__ = [
    "Arc",
    "OrientedLabeling",
    "Tree",
    "TreeError",
    "TreeClass",
    "UnsupportedTreeError",
    "classify",
    "construct_lobster",
    "decompose",
    "degree",
    "find_spine",
    "is_bijective_labeling",
    "label_path_antimagic",
    "lemma1_construct",
    "lemma1_label",
    "orient_bipartite",
    "orient_lobster",
    "orient_path",
    "vertex_sums",
    "verify_antimagic",
    "verify_band_structure",
    "verify_lemma1",
]
