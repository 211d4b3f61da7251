"""Triangle gasket graphs from eventually periodic words.

Builds the finite levels explicitly, answers exact distance queries in
O(level) through a compiled kernel (with a pure-Python fallback selected
at import), decides isomorphism of the infinite graphs, and tabulates and
classifies the limit functions d(x_n, o) - d(x_n, .) on the standard
graph.
"""

__version__ = "0.1.0"

from .bench import BenchResult, run_bench, sample_pairs
from .gasket import (
    DEFAULT_ORACLE_CAP,
    FiniteGasket,
    bfs_distance,
    bfs_distances_from,
    build,
    degree,
    degree_in_limit,
    export_dot,
    export_json,
)
from .horofunction import (
    DEFAULT_RADII,
    Classification,
    HoroTable,
    TableReport,
    VertexSequence,
    busemann,
    classify,
    evaluate_table,
    horo_value,
    parse_sequence,
    symmetric_limit,
    table_to_csv,
    table_to_json,
)
from .isomorphism import IsoVerdict, decide_iso, degree_two_census, finite_level_check
from .kernels import BACKEND
from .metric import (
    CornerTriple,
    ball,
    corner_distances,
    distance,
    multiset_triple_equal,
    neighbors,
    project_to_ray,
    ray_vertices,
)
from .word import (
    IDENTITY,
    LETTERS,
    PERMUTATIONS,
    DomainError,
    Permutation,
    WordSpec,
    all_vertices,
    apply_permutation,
    canonicalize,
    cofinal_up_to_permutation,
    corner_address,
    identification_class,
    is_canonical,
    letter_at,
    minimal_form,
    orbit,
    pad,
    parse_address,
    partner,
    same_word,
    vertex_of,
)

__all__ = [
    "BACKEND",
    "BenchResult",
    "Classification",
    "CornerTriple",
    "DEFAULT_ORACLE_CAP",
    "DEFAULT_RADII",
    "DomainError",
    "FiniteGasket",
    "HoroTable",
    "IDENTITY",
    "IsoVerdict",
    "LETTERS",
    "PERMUTATIONS",
    "Permutation",
    "TableReport",
    "VertexSequence",
    "WordSpec",
    "all_vertices",
    "apply_permutation",
    "ball",
    "bfs_distance",
    "bfs_distances_from",
    "build",
    "busemann",
    "canonicalize",
    "classify",
    "cofinal_up_to_permutation",
    "corner_address",
    "corner_distances",
    "decide_iso",
    "degree",
    "degree_in_limit",
    "degree_two_census",
    "distance",
    "evaluate_table",
    "export_dot",
    "export_json",
    "finite_level_check",
    "horo_value",
    "identification_class",
    "is_canonical",
    "letter_at",
    "minimal_form",
    "multiset_triple_equal",
    "neighbors",
    "orbit",
    "pad",
    "parse_address",
    "parse_sequence",
    "partner",
    "project_to_ray",
    "ray_vertices",
    "run_bench",
    "same_word",
    "sample_pairs",
    "symmetric_limit",
    "table_to_csv",
    "table_to_json",
    "vertex_of",
]
