"""Exception types shared across the package."""


class SpecdecError(Exception):
    """Base class for all errors raised by this package."""


class InputParseError(SpecdecError):
    """An input file or inline definition could not be interpreted."""


class OrderCapExceeded(SpecdecError):
    """An exhaustive routine was asked to run past its configured cap."""

    def __init__(self, what: str, order: int, cap: int):
        super().__init__(f"{what}: order {order} exceeds cap {cap}")
        self.what = what
        self.order = order
        self.cap = cap


class NotLatinSquare(SpecdecError):
    """A multiplication table has a repeated entry in some row or column."""


class NonAssociative(SpecdecError):
    """A multiplication table fails the associativity scan."""


class NoIdentityAtZero(SpecdecError):
    """Element 0 is not a two-sided identity."""


class NoInverse(SpecdecError):
    """Some element has no two-sided inverse."""


class InvalidPermutation(SpecdecError):
    """A generator is not a bijection on the stated points."""


class InvalidActionOrder(SpecdecError):
    """The acting unit does not have the required multiplicative order."""


class UnsupportedParameter(SpecdecError):
    """A named constructor was given a parameter outside its range."""


class NotNormal(SpecdecError):
    """A subgroup expected to be normal is not."""


class InvalidRing(SpecdecError):
    """Ring tables fail the additive-group, associativity or distributivity scans."""


class RadicalNotTrivial(SpecdecError):
    """Decomposition precondition failed; carries the offending radical."""

    def __init__(self, radical):
        elems = ",".join(str(e) for e in radical.elements)
        super().__init__(f"radical is not trivial: {{{elems}}}")
        self.radical = radical


class ReconstructionFailed(SpecdecError):
    """A decomposition certificate failed verification; carries diagnostics."""

    def __init__(self, step: str, transcript):
        super().__init__(f"certificate verification failed at: {step}")
        self.step = step
        self.transcript = list(transcript)


class ClassifierInconsistency(SpecdecError):
    """Structural recognition and the zero-divisor scan disagree."""
