"""Finite-dimensional algebras, their modules and the Frobenius decisions."""
from .algebra import (Algebra, AlgebraReport, AntiAutomorphism, Radical,
                      check_algebra, ideal_generators, radical)
from .decisions import (DEFAULT_SEED, FrobeniusReport, InconclusiveIsomorphism,
                        IsoReport, character_pairing, composition_factors,
                        end_algebra, gram_oracle, is_frobenius, is_isomorphic,
                        is_projective, is_quasi_frobenius, is_semisimple_module,
                        top_character)
from .module import (ModHom, Module, check_module, cosocle_dim, direct_sum,
                     dual_module, dual_regular_module, hom_space,
                     module_closure, quotient, radical_submodule,
                     regular_module, socle, submodule)
from .examples import (group_algebra_alg, matrix_algebra, truncated_polynomial,
                       upper_triangular)

__all__ = [
    "Algebra", "AlgebraReport", "AntiAutomorphism", "Radical", "check_algebra",
    "ideal_generators", "radical", "DEFAULT_SEED", "FrobeniusReport",
    "InconclusiveIsomorphism", "IsoReport", "character_pairing",
    "composition_factors", "end_algebra", "gram_oracle", "is_frobenius",
    "is_isomorphic", "is_projective", "is_quasi_frobenius",
    "is_semisimple_module", "top_character", "ModHom", "Module",
    "check_module", "cosocle_dim", "direct_sum", "dual_module",
    "dual_regular_module", "hom_space", "module_closure", "quotient",
    "radical_submodule", "regular_module", "socle", "submodule",
    "group_algebra_alg", "matrix_algebra", "truncated_polynomial",
    "upper_triangular",
]
