"""Exception hierarchy shared by all modules."""


class IBSError(Exception):
    pass


class ParamsError(IBSError, ValueError):
    pass


class NotPrime(ParamsError):
    pass


class OrderMismatch(ParamsError):
    pass


class BadGenerator(ParamsError):
    pass


class ParamsMismatch(IBSError):
    pass


class ZeroInverse(IBSError, ZeroDivisionError):
    pass


class BadLength(IBSError, ValueError):
    pass


class LengthMismatch(IBSError, ValueError):
    pass


class TooLarge(IBSError, ValueError):
    pass


class SameMessage(IBSError):
    pass


class InvalidInputSignature(IBSError):
    pass


class ConfigInvalid(IBSError, ValueError):
    pass
