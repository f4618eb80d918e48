"""Exception types raised across the package."""


class BrickforgeError(Exception):
    pass


class InvalidCartanType(BrickforgeError, ValueError):
    pass


class DemazureTooShort(BrickforgeError, ValueError):
    """The word does not contain a reduced word of the longest element."""


class NotClusterWord(BrickforgeError, ValueError):
    pass


class RootNotPositive(BrickforgeError, ValueError):
    pass


class DimensionMismatch(BrickforgeError, ValueError):
    pass


class NotAVertex(BrickforgeError, ValueError):
    pass


class RayAmbiguous(BrickforgeError):
    pass


class SingularCone(BrickforgeError):
    pass


class CountMismatch(BrickforgeError, ValueError):
    pass


class NonLaurent(BrickforgeError, ArithmeticError):
    pass


class NotAMonomial(BrickforgeError, ValueError):
    pass


class BudgetExceeded(BrickforgeError, RuntimeError):
    pass


class IndexMismatch(BrickforgeError, ValueError):
    pass


class SampleEscapedCone(BrickforgeError, RuntimeError):
    pass
