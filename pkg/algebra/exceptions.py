"""
Errors raised while building bi-labeled graphs, terms and tree decompositions
"""
from graphons.exceptions import MalformedDocument, NotSimple, WLError  # noqa: F401


class BadGeneratorIndex(WLError):
    code = 'BAD_GENERATOR_INDEX'


class ArityMismatch(WLError):
    code = 'ARITY_MISMATCH'


class LabelCollision(WLError):
    code = 'LABEL_COLLISION'


class TermSyntaxError(WLError):
    code = 'TERM_SYNTAX_ERROR'


class NotATree(WLError):
    code = 'NOT_A_TREE'


class VertexBagsDisconnected(WLError):
    code = 'VERTEX_BAGS_DISCONNECTED'


class EdgeNotCovered(WLError):
    code = 'EDGE_NOT_COVERED'


class WidthExceedsK(WLError):
    code = 'WIDTH_EXCEEDS_K'
