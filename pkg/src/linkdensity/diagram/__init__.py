"""Link diagrams, tangles, their constructors and structural predicates."""

from linkdensity.diagram.core import (
    END_NAMES,
    BraidWord,
    Crossing,
    LinkDiagram,
    Tangle,
    ValidationReport,
    require_connected,
    require_valid,
    validate,
)
from linkdensity.diagram.generators import (
    add_kink,
    belt_closure,
    belt_tangle,
    braid_link,
    closure,
    connected_sum,
    conway_sum,
    mirror,
    pretzel_tangle,
    single_crossing_tangle,
    trivial_tangle,
    weaving_tangle,
    weaving_word,
)
from linkdensity.diagram.predicates import (
    bigon_faces,
    canonical_form,
    is_alternating,
    is_diagrammatically_prime,
    is_isomorphic,
    is_reduced,
    nugatory_crossings,
    separating_edge_pairs,
    twist_region_classes,
    twist_regions,
)

__all__ = [name for name in dir() if not name.startswith("_")]
