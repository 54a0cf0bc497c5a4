from .core import (
    FaceStats,
    MapError,
    PlanarMap,
    build_map,
    compact,
    dual,
    face_stats,
    from_vertex_rotations,
    is_3_connected,
    medial,
    mirror,
    relabel,
)
from .canon import (
    AutomorphismGroup,
    CanonicalCode,
    automorphisms,
    canonical_code,
    canonical_form,
    code_key,
    is_isomorphic,
)
from . import catalog

__all__ = [
    "AutomorphismGroup",
    "CanonicalCode",
    "FaceStats",
    "MapError",
    "PlanarMap",
    "automorphisms",
    "build_map",
    "canonical_code",
    "canonical_form",
    "catalog",
    "code_key",
    "compact",
    "dual",
    "face_stats",
    "from_vertex_rotations",
    "is_3_connected",
    "is_isomorphic",
    "medial",
    "mirror",
    "relabel",
]
