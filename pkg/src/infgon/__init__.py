"""Exact combinatorics of infinity-gons with finitely many limit points.

Diagonal sets are presented by explicit diagonals plus arithmetic families;
the package decides torsion-pair and cluster-tilting conditions on such
presentations, builds precovers, performs flips, and checks itself against
brute force on finite polygons.
"""
from .certificate import Certificate, Verdict
from .classify import (flip, is_cluster_tilting, precover, quiver_check,
                       same_set)
from .conditions import (EMPTY, check_PC, check_PC1, check_PC2, check_ptolemy,
                         detect_features, family_limit_data,
                         is_torsion_first_half, nc2_window_check, sup_U, sup_W)
from .cyclic import (LimitPoint, Vertex, ZModel, cyclic_ordered, in_interval,
                     pred, succ)
from .diagonals import (Diagonal, DiagonalFamily, DiagonalSet, Fixed, TailDown,
                        TailUp, crosses, crossing_pairs, family_member,
                        set_contains, truncate_window, validate_diagonal)
from .hom import ext1_dim, factors_through, hom_dim, suspend, suspend_inv
from .window import nc_window

__all__ = [
    "Certificate", "Verdict", "flip", "is_cluster_tilting", "precover",
    "quiver_check", "same_set", "EMPTY", "check_PC", "check_PC1", "check_PC2",
    "check_ptolemy", "detect_features", "family_limit_data",
    "is_torsion_first_half", "nc2_window_check", "sup_U", "sup_W",
    "LimitPoint", "Vertex", "ZModel", "cyclic_ordered", "in_interval", "pred",
    "succ", "Diagonal", "DiagonalFamily", "DiagonalSet", "Fixed", "TailDown",
    "TailUp", "crosses", "crossing_pairs", "family_member", "set_contains",
    "truncate_window", "validate_diagonal", "ext1_dim", "factors_through",
    "hom_dim", "suspend", "suspend_inv", "nc_window",
]
