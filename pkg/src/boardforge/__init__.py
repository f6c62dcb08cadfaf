"""Board geometry: tilings, operators, relations, directions and radials for game boards."""

from .bgdl import build, elaborate, evaluate, parse, tokenize
from .errors import BoardError, EmptyResultWarning
from .graph import (BoardGraph, ElementId, Site, SiteType, Violation, build_graph, errors_only,
                    infer_faces, renumber, validate)
from .directions import AbsoluteDirection, RelativeDirection, resolve_relative
from .relations import RelationType
from .tilings import TilingKind, TilingSpec
from .traversal import Ambiguity, Radial, WalkToken, enumerate_steps, generate_radials, walk

__version__ = "0.1.0"

__all__ = [
    "AbsoluteDirection", "Ambiguity", "BoardError", "BoardGraph", "ElementId", "EmptyResultWarning",
    "Radial", "RelationType", "RelativeDirection", "Site", "SiteType", "TilingKind", "TilingSpec",
    "Violation", "WalkToken", "build", "build_graph", "elaborate", "enumerate_steps", "errors_only",
    "evaluate", "generate_radials", "infer_faces", "parse", "renumber", "resolve_relative",
    "tokenize", "validate", "walk",
]
