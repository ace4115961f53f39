from graphons.exceptions import WLError


class InfeasiblePresolve(WLError):
    """Raised inside presolve when a constraint cannot be met"""
    code = 'INFEASIBLE'


class UnknownVariable(WLError):
    code = 'UNKNOWN_VARIABLE'


class WitnessValidationError(WLError):
    code = 'WITNESS_VALIDATION_FAILED'


class UnknownSystem(WLError):
    code = 'UNKNOWN_SYSTEM'
