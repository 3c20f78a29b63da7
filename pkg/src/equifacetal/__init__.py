"""Equifacetal simplices: combinatorial types, constructions, embeddings, catalogues."""

from .catalog import (
    CatalogEntry,
    ColorOrbits,
    admissible_partitions,
    edge_orbit_report,
    enumerate_strong_types,
    known_table,
    vertex_uniform_colorings,
)
from .coloring import (
    ColoredGraph,
    IsoWitness,
    NotVertexUniformError,
    Partition,
    canonical_form,
    color_automorphisms,
    colored_isomorphic,
    components_congruent,
    delete_vertex,
    is_vertex_transitive,
    is_vertex_uniform,
    partitions_of,
    relabel_colors,
    relabel_vertices,
    satisfies_complementarity,
    vertex_color_degrees,
    weak_type,
)
from .construct import (
    AmbiguousExtensionError,
    FacetExtension,
    NOT_REALIZABLE,
    NotSplittableError,
    NotTransitiveError,
    REALIZABLE,
    RealizabilityVerdict,
    UNKNOWN,
    cyclic_coloring,
    elementary_abelian_coloring,
    extend_facet,
    max_odd_entries,
    merge_colors,
    orbit_coloring,
    realize_partition,
    round_robin_one_factorization,
    split_color,
)
from .geometry import (
    AmbiguousClusteringError,
    DEFAULT_TOLERANCE,
    EmbeddedSimplex,
    LengthAssignment,
    NotRealizableError,
    centers_coincide,
    centroid,
    circumcenter,
    edge_length_partition,
    edge_length_table,
    embed,
    facet_congruent,
    gram_matrix,
    incenter,
    is_equifacetal,
    is_realizable,
    isometry_group,
    realize_coloring,
)
from .perms import (
    GroupFingerprint,
    PermGroup,
    Permutation,
    fingerprint,
    is_transitive,
    orbits,
)

__version__ = "0.1.0"
