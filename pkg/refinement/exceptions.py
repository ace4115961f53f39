from graphons.exceptions import WLError


class ModeViolation(WLError):
    code = 'MODE_VIOLATION'


class NotStabilized(WLError):
    code = 'NOT_STABILIZED'


class UnknownAlgorithm(WLError):
    code = 'UNKNOWN_ALGORITHM'
