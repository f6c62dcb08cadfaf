"""The board description language: ``(board <graph>)`` and friends."""

from .elaborate import (BoardNode, GraphNode, KEYWORDS, OperatorNode, ShapeNode, TilingNode,
                        UNSUPPORTED, elaborate)
from .evaluate import build, evaluate
from .sexpr import Atom, KeyVal, SList, Token, parse, strip, to_text, tokenize

__all__ = [
    "Atom", "BoardNode", "GraphNode", "KEYWORDS", "KeyVal", "OperatorNode", "SList", "ShapeNode",
    "TilingNode", "Token", "UNSUPPORTED", "build", "elaborate", "evaluate", "parse", "strip",
    "to_text", "tokenize",
]
