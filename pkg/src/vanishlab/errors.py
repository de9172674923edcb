"""Exception hierarchy shared by every vanishlab module."""


class VanishlabError(Exception):
    """Base class for all library errors."""


class NotCoprime(VanishlabError):
    pass


class NotZeroSum(VanishlabError):
    pass


class UnsupportedLength(VanishlabError):
    pass


class ConditionStarViolated(VanishlabError):
    pass


class NotAGroup(VanishlabError):
    pass


class TooLarge(VanishlabError):
    pass


class NotPrime(VanishlabError):
    pass


class NotNormal(VanishlabError):
    pass


class NotAbelian(VanishlabError):
    pass


class NotPGroup(VanishlabError):
    pass


class NotAnAction(VanishlabError):
    pass


class NoFixedPointFreeAction(VanishlabError):
    pass


class TooManyClasses(VanishlabError):
    pass


class NotMember(VanishlabError):
    pass


class PreconditionViolated(VanishlabError):
    pass


class SettingViolated(VanishlabError):
    pass


class NotApplicable(VanishlabError):
    pass


class ParseError(VanishlabError):
    """Raised by the group-file and root-list parsers.

    ``line`` is 1-based; ``field`` names the offending key when known.
    """

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
