"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for every error raised by this package."""


# --- fan validation ---

class NotPrimitive(ToricError):
    """A ray generator is not a primitive lattice vector."""


class NotCounterclockwise(ToricError):
    """Rays are not in strictly counterclockwise angular order."""


class NotSmooth(ToricError):
    """An adjacent pair of rays spans a cone of index > 1."""


class NotComplete(ToricError):
    """The rays do not wrap around the origin exactly once."""


class FullCycle(ToricError):
    """Every divisor has self-intersection -2; no complete smooth fan does."""


# --- polytope / Kahler data ---

class DegenerateEdge(ToricError):
    """An edge length form is identically zero."""


class InvalidKahlerData(ToricError):
    """Some edge is nonpositive at the sample point t = (1,...,1)."""


# --- Laurent algebra ---

class ParameterMismatch(ToricError):
    """Operands live over a different number of Kahler parameters."""


class OutOfRange(ToricError):
    """A specialization value is outside the open interval (0, 1)."""


# --- disks and potentials ---

class WrongMaslov(ToricError):
    """Open invariants are defined only for Maslov index two classes."""


class NotSemiFano(ToricError):
    """The operation requires every divisor to have self-intersection >= -2."""


class NonIntegralPairing(ToricError):
    """The bulk divisor must be an integer divisor class."""


class UnsupportedBulk(ToricError):
    """Point-class bulk deformations are not computed."""


# --- homology and quantum products ---

class WrongChern(ToricError):
    """The curve class has the wrong first Chern number for this invariant."""


class IsP2(ToricError):
    """Quantum Stanley-Reisner data is defined here only for surfaces != P^2."""


class NotPrimitivePair(ToricError):
    """The two rays span a cone, so they are not a primitive collection."""


class SingularPairing(ToricError):
    """The Gram matrix of the chosen divisor basis is singular."""


# --- verifier ---

class InfiniteDimensional(ToricError):
    """The Jacobian ring is not finite-dimensional at the sampled parameters."""


# --- surface files ---

class SurfaceSyntaxError(ToricError):
    """Malformed surface file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
