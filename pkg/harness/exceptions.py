from graphons.exceptions import WLError


class UnknownSuite(WLError):
    code = 'UNKNOWN_SUITE'


class UnknownPair(WLError):
    code = 'UNKNOWN_PAIR'
