"""Exact character theory of the n-qubit Clifford groups C_1, C_2 and C_3."""

__version__ = "0.1.0"

from .cyclo import Cyclotomic, format_cyclotomic, parse_cyclotomic, zeta
from .matgroup import (
    EnumerationCapExceeded,
    GroupTable,
    PhaseMatrix,
    bfs_closure,
    clifford_generators,
    clifford_group,
    evaluate_word,
    group_order_formula,
    parse_word,
)
from .classes import ClassData, class_matrix, conjugacy_classes, power_map
from .chartab import (
    CharacterTable,
    NormalSubgroupRecord,
    character_kernel,
    class_sizes_from_columns,
    dixon_character_table,
    integer_valued,
    normal_subgroups,
    verify_orthogonality,
)
from .presentation import abelianization, build_presentation, verify_relators
from .repdecomp import adjoint_character, adjoint_character_from_table, decompose_power
from .reference import load_table, match_tables, verify_embedded_c3

__all__ = [
    "Cyclotomic", "format_cyclotomic", "parse_cyclotomic", "zeta",
    "EnumerationCapExceeded", "GroupTable", "PhaseMatrix", "bfs_closure", "clifford_generators",
    "clifford_group", "evaluate_word", "group_order_formula", "parse_word",
    "ClassData", "class_matrix", "conjugacy_classes", "power_map",
    "CharacterTable", "NormalSubgroupRecord", "character_kernel", "class_sizes_from_columns",
    "dixon_character_table", "integer_valued", "normal_subgroups", "verify_orthogonality",
    "abelianization", "build_presentation", "verify_relators",
    "adjoint_character", "adjoint_character_from_table", "decompose_power",
    "load_table", "match_tables", "verify_embedded_c3",
]
