"""Exact linear-algebra verdicts on finite group-scheme actions.

Finite-dimensional commutative Hopf algebras and comodule algebras are
held by structure constants over exact fields; tameness, linear
reductivity, freeness, torsors, inertia groups and slice decompositions
are all decided by rank computations, with machine-checkable witnesses.
"""

from .fields import GF, QQ, FieldSpec
from .groups import FiniteGroup, cyclic_group, symmetric_group
from .hopf import (HopfAlgebra, alpha_p, dual_hopf, function_algebra,
                   group_algebra, mu_n, validate_hopf)
from .comodule import (BAModule, Comodule, ComoduleAlgebra, cotensor_compare,
                       invariants, regular_comodule_algebra,
                       trivial_comodule_algebra)
from .tameness import (equivalence_report, is_linearly_reductive, reynold,
                       total_integral)
from .geometry import Point, galois_map, inertia_hopf, is_free, is_torsor
from .actions import (GammaAction, LocalFactor, build_gamma_action,
                      coaction_from_group_action, inertia_at, slice_decompose,
                      tame_at, trace_tame)
from .catalog import build_case, catalog_names

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "FieldSpec", "FiniteGroup", "cyclic_group", "symmetric_group",
    "HopfAlgebra", "alpha_p", "dual_hopf", "function_algebra", "group_algebra",
    "mu_n", "validate_hopf", "BAModule", "Comodule", "ComoduleAlgebra",
    "cotensor_compare", "invariants", "regular_comodule_algebra",
    "trivial_comodule_algebra", "equivalence_report", "is_linearly_reductive",
    "reynold", "total_integral", "Point", "galois_map", "inertia_hopf",
    "is_free", "is_torsor", "GammaAction", "LocalFactor", "build_gamma_action",
    "coaction_from_group_action", "inertia_at", "slice_decompose", "tame_at",
    "trace_tame", "build_case", "catalog_names",
]
