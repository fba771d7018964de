"""Exception hierarchy shared by all verlie modules."""


class VerlieError(Exception):
    """Base class for all errors raised by this package."""


# -- field / linear algebra ------------------------------------------------

class NotPrime(VerlieError):
    pass


class ReduciblePolynomial(VerlieError):
    pass


class DimensionMismatch(VerlieError):
    pass


# -- root systems ----------------------------------------------------------

class UnsupportedEntry(VerlieError):
    pass


class OrbitCapExceeded(VerlieError):
    pass


class InfiniteRootSystem(VerlieError):
    pass


# -- Lie algebra construction ----------------------------------------------

class NonTerminating(VerlieError):
    pass


class NoInvariantForm(VerlieError):
    pass


class DegenerateForm(VerlieError):
    pass


# -- alpha_p representation theory -------------------------------------------

class NotNilpotentOrderP(VerlieError):
    pass


class DegenerateCase(VerlieError):
    pass


class NotEquivariant(VerlieError):
    pass


# -- semisimplification -------------------------------------------------------

class NotSL2Node(VerlieError):
    pass


class DerivationOrderViolation(VerlieError):
    pass


class PreconditionNotGood(VerlieError):
    pass


class RelationFailure(VerlieError):
    pass


class DegenerateInducedForm(VerlieError):
    pass


# -- configuration / CLI -------------------------------------------------------

class ParseError(VerlieError):
    pass


class ValidationError(VerlieError):
    pass


class GoldenMissing(VerlieError):
    pass
