"""Exceptions raised by the structure builders and checkers."""

DEFAULT_SIZE_CAP = 4096


class RingPropsError(Exception):
    pass


class SizeCapExceeded(RingPropsError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what} has order {size}, above the cap of {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NotAnIdeal(RingPropsError):
    pass


class RingMismatch(RingPropsError):
    pass


class InvalidStructure(RingPropsError):
    """A presentation violates one of the ring or module axioms."""


class MalformedDescription(RingPropsError):
    pass


def check_cap(what, size, cap):
    if cap is not None and size > cap:
        raise SizeCapExceeded(what, size, cap)
