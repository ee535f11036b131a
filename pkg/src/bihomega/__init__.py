"""Exact-arithmetic checkers and constructions for finite-dimensional
semigroup-indexed algebras with twisted (BiHom-style) axioms."""

__version__ = "0.1.0"

from .checkers import (check_bihom_associative, check_dendriform,
                       check_instance, check_lie, check_morphism,
                       check_postlie, check_prelie, check_prepoisson,
                       check_rota_baxter, check_zinbiel)
from .constructions import (CONSTRUCTIONS, assoc_as_prelie, assoc_to_lie,
                            dendriform_to_prelie, dendriform_total,
                            lie_rb_to_postlie, postlie_to_lie, prelie_to_lie,
                            rb_bracket_lie, rb_lie_to_prelie,
                            rb_split_dendriform, rb_star_associative,
                            yau_twist)
from .core import (AlgebraInstance, AlgebraKind, BilinearFamily, LinearFamily,
                   RotaBaxterFamily, new_instance)
from .dsl import (Workspace, parse_workspace, serialize_workspace,
                  workspace_for_instance)
from .forge import (SearchConfig, brute_force_rb_search,
                    constant_product_instance, embed_omega_as_bihom,
                    make_endomorphism_pairs, make_two_dim_example,
                    two_dim_params, two_dim_reading_report, zero_instance)
from .linalg import Matrix, mat_inverse, mat_mul, mats_commute
from .reports import AxiomResult, CheckReport, Witness
from .semigroup import (SemigroupTable, cyclic_group, left_zero_semigroup,
                        trivial_semigroup, validate_semigroup)

__all__ = [
    "AlgebraInstance", "AlgebraKind", "AxiomResult", "BilinearFamily",
    "CheckReport", "CONSTRUCTIONS", "LinearFamily", "Matrix",
    "RotaBaxterFamily", "SearchConfig", "SemigroupTable", "Witness",
    "Workspace", "assoc_as_prelie", "assoc_to_lie", "brute_force_rb_search",
    "check_bihom_associative", "check_dendriform", "check_instance",
    "check_lie", "check_morphism", "check_postlie", "check_prelie",
    "check_prepoisson", "check_rota_baxter", "check_zinbiel",
    "constant_product_instance", "cyclic_group", "dendriform_to_prelie",
    "dendriform_total", "embed_omega_as_bihom", "left_zero_semigroup",
    "lie_rb_to_postlie", "make_endomorphism_pairs", "make_two_dim_example",
    "mat_inverse", "mat_mul", "mats_commute", "new_instance",
    "parse_workspace", "postlie_to_lie", "prelie_to_lie", "rb_bracket_lie",
    "rb_lie_to_prelie", "rb_split_dendriform", "rb_star_associative",
    "serialize_workspace", "trivial_semigroup", "two_dim_params",
    "two_dim_reading_report", "validate_semigroup", "workspace_for_instance",
    "yau_twist", "zero_instance",
]
