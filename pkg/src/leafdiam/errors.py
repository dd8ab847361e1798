"""Exception hierarchy shared by all leafdiam modules."""


class LeafDiamError(Exception):
    """Base class for every error raised by this package."""


class NotATree(LeafDiamError):
    """Edge list does not describe a tree (wrong count, cycle, loop, ...)."""


class VertexOutOfRange(LeafDiamError):
    """A vertex id falls outside 0..n-1."""


class DegenerateOrder(LeafDiamError):
    """Operation requires order at least 2."""


class ParseError(LeafDiamError):
    """Malformed tree text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidStem(LeafDiamError):
    """Vertex sequence is not a path of the host tree."""


class NotALeaf(LeafDiamError):
    """Vertex passed as a leaf has degree != 1."""


class LeafOnStem(LeafDiamError):
    """Leaf lies on the stem, so it has no off-stem walk."""


class NoBigVertex(LeafDiamError):
    """Walk toward the origin met no vertex of degree >= 3 (non-diametral stem)."""


class StemNotDiametral(LeafDiamError):
    """Rewiring requires the fixed stem to stay a diametral path."""


class Infeasible(LeafDiamError):
    """No tree exists for the requested (order, diameter) or (order, leaves)."""


class EmptySpider(LeafDiamError):
    """A spider needs at least one leg."""


class EntryOutOfRange(LeafDiamError):
    """Prufer sequence entry outside 0..n-1."""


class CapExceeded(LeafDiamError):
    """Requested enumeration order exceeds the configured cap."""
