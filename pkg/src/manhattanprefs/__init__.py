"""Manhattan (L1) preference embeddings: constructions, verification, and
an exact two-dimensional recognizer."""

from .geometry import (
    Embedding,
    Quadrant,
    Violation,
    bounding_box_contains,
    euclidean_sq,
    manhattan,
    parse_embedding,
    point,
    quadrant_contains,
    serialize_embedding,
    verify_embedding,
)
from .profiles import (
    PreferenceProfile,
    ProfileError,
    ProfileSpec,
    count_canonical,
    enumerate_canonical,
    expand_spec,
    max_rank_info,
    parse_profile,
    parse_spec,
    restrict,
    serialize_profile,
)
from .constructive import embed_m_dim, embed_n_dim
from .obstructions import (
    BECertificate,
    EXCertificate,
    ThreeVoterVerdict,
    find_be,
    find_ex,
    quadrant_necessary_violation,
    three_voter_obstruction,
)
from .recognizer import (
    RecognitionOutcome,
    SignAssignment,
    build_system,
    extract_witness,
    recognize_2d,
)

__version__ = "0.1.0"

__all__ = [
    "Embedding",
    "PreferenceProfile",
    "ProfileError",
    "ProfileSpec",
    "Quadrant",
    "RecognitionOutcome",
    "SignAssignment",
    "Violation",
    "BECertificate",
    "EXCertificate",
    "ThreeVoterVerdict",
    "bounding_box_contains",
    "build_system",
    "count_canonical",
    "embed_m_dim",
    "embed_n_dim",
    "enumerate_canonical",
    "euclidean_sq",
    "expand_spec",
    "extract_witness",
    "find_be",
    "find_ex",
    "manhattan",
    "max_rank_info",
    "parse_embedding",
    "parse_profile",
    "parse_spec",
    "point",
    "quadrant_contains",
    "quadrant_necessary_violation",
    "recognize_2d",
    "restrict",
    "serialize_embedding",
    "serialize_profile",
    "three_voter_obstruction",
    "verify_embedding",
]
