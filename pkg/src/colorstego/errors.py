"""Exception hierarchy shared by every module."""


class StegoError(Exception):
    """Base class for all errors raised by colorstego."""


class DomainError(StegoError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class RankOutOfRange(DomainError):
    pass


class BitLengthRequired(DomainError):
    """Paper-mode extraction cannot tell where the secret ends."""


class CapacityError(StegoError):
    pass


class CoverTooSmall(CapacityError):
    def __init__(self, required, available):
        super().__init__(
            f"cover needs {required} eligible characters, has {available}"
        )
        self.required = required
        self.available = available


class CorruptPayload(StegoError):
    pass


class CorruptStream(StegoError):
    pass


class CorruptStego(StegoError):
    pass


class ParseError(StegoError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position
