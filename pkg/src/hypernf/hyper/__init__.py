"""Second- and higher-level normalization in the P/R basis."""

from .cases import CaseTag, PartitionClass, classify_case, classify_system, partition_classify
from .complement import predicted_complement, predicted_rank
from .levels import d_ns, image_vectors, kernel_basis, level_solve, s_level_normalize
from .matrix import HomMatrix, assemble_A, bracket_matrix, build_block, rank_exact
from .recursions import asc_solve, dec_solve, special_solve_caseI, structured_solve
from .report import NormalFormReport
from .solve import GeneratorRecord, priority_order, solve_grade

__all__ = [
    "CaseTag",
    "PartitionClass",
    "classify_case",
    "classify_system",
    "partition_classify",
    "predicted_complement",
    "predicted_rank",
    "d_ns",
    "image_vectors",
    "kernel_basis",
    "level_solve",
    "s_level_normalize",
    "HomMatrix",
    "assemble_A",
    "bracket_matrix",
    "build_block",
    "rank_exact",
    "asc_solve",
    "dec_solve",
    "special_solve_caseI",
    "structured_solve",
    "NormalFormReport",
    "GeneratorRecord",
    "priority_order",
    "solve_grade",
]
