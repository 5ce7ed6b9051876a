"""Finite commutative rings, ideal-based zero-divisor graphs, and genus."""

from .catalog import by_tag, catalog, catalog_entries, catalog_ring, find_catalog
from .classify import (
    ClassificationReport,
    TheoremId,
    attached_k4_graph,
    genus_ge2_predicate,
    genus_one_clique3_predicate,
    genus_one_clique_le2_predicate,
    redmond_planar_predicate,
    synthesize,
    verify,
    verify_all,
)
from .errors import (
    BudgetExceeded,
    CliqueHypothesisViolated,
    HypothesisNotMet,
    InvalidSpec,
    NonConfluentPresentation,
    NotRadical,
    WholeRingIdeal,
    ZdgenusError,
)
from .genus import (
    EmbeddingCertificate,
    GenusBounds,
    certificate_from_json,
    certificate_to_json,
    euler_lower_bound,
    exact_genus,
    face_trace,
    genus_biclique,
    genus_complete,
    is_planar,
    k4_attachment_bound,
    random_rotation,
    subgraph_lower_bound,
)
from .graphs import (
    SimpleGraph,
    canonical_certificate,
    clique_number,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    diameter,
    expand,
    export_dot,
    export_json,
    find_biclique,
    find_complete_subgraph,
    girth,
    graph_iso,
    ideal_zero_divisor_graph,
    induced_subgraph,
    is_connected,
    make_graph,
    zero_divisor_graph,
)
from .ideals import (
    IdealSet,
    QuotientRing,
    cyclic_ideal,
    enumerate_ideals,
    ideal_from_generators,
    is_prime,
    is_radical,
    minimal_primes_over,
    quotient,
    validate_ideal,
)
from .rings import (
    RingElem,
    RingSpec,
    RingTable,
    build_ring,
    gf,
    is_local,
    iso_check,
    maximal_ideals,
    product,
    product_tables,
    quotient_algebra,
    spec_from_json,
    spec_to_json,
    units,
    zmod,
)

__version__ = "0.1.0"
