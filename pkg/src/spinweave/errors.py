"""Exception hierarchy shared by all spinweave modules."""


class SpinweaveError(ValueError):
    pass


class PathError(SpinweaveError):
    pass


class InvalidStart(PathError):
    pass


class InvalidStep(PathError):
    pass


class NegativeSpin(PathError):
    pass


class DimensionMismatch(SpinweaveError):
    pass


class InvalidBranch(SpinweaveError):
    pass


class SelectionRuleError(SpinweaveError):
    pass


class MOutOfRange(SpinweaveError):
    pass


class ExhaustedDetectors(SpinweaveError):
    pass


class InvalidExplicitLayout(SpinweaveError):
    pass


class CapExceeded(SpinweaveError):
    def __init__(self, n, cap):
        super().__init__(f"permutation-sum oracle capped at n={cap}, got n={n}")
        self.n = n
        self.cap = cap


class ChildInadmissible(SpinweaveError):
    pass


class EmitterIndexError(SpinweaveError, IndexError):
    pass
