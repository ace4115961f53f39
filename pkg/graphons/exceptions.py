"""
Exception hierarchy shared by every app of the project.

Each error carries a stable machine-readable ``code`` that the REST views and
management commands surface to callers.
"""


class WLError(Exception):
    """Base class for all domain errors"""

    code = 'WL_ERROR'

    def __init__(self, message: str = '', **context):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.context = context

    def as_dict(self):
        return {'error': self.code, 'detail': self.message}


class MalformedDocument(WLError):
    code = 'MALFORMED_DOCUMENT'


class MassSumNotOne(WLError):
    code = 'MASS_SUM_NOT_ONE'


class ZeroMass(WLError):
    code = 'ZERO_MASS'


class WeightOutOfRange(WLError):
    code = 'WEIGHT_OUT_OF_RANGE'


class AsymmetricWeights(WLError):
    code = 'ASYMMETRIC_WEIGHTS'


class EmptyGraph(WLError):
    code = 'EMPTY_GRAPH'


class NotSimple(WLError):
    code = 'NOT_SIMPLE'


class SelfLoop(WLError):
    code = 'SELF_LOOP'


class ShapeMismatch(WLError):
    code = 'SHAPE_MISMATCH'


class SizeLimitExceeded(WLError):
    code = 'SIZE_LIMIT_EXCEEDED'


class HasOutputs(WLError):
    code = 'HAS_OUTPUTS'
