"""Exception types shared across the package."""


class FormcenterError(Exception):
    """Base class for errors raised by this package."""


class BothZero(FormcenterError):
    """gcd of two zero polynomials is undefined."""


class ZeroPolynomial(FormcenterError):
    """Operation requires a nonzero polynomial."""


class NotSquarefree(FormcenterError):
    """Polynomial has a repeated factor."""


class NotIrreducible(FormcenterError):
    """Polynomial is reducible over Q; carries a nontrivial factor."""

    def __init__(self, poly, factor):
        super().__init__(f"{poly} is reducible: divisible by {factor}")
        self.poly = poly
        self.factor = factor


class FormSyntaxError(FormcenterError):
    """Malformed form expression; position is a 0-based index into the input."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotHomogeneous(FormcenterError):
    """Input mixes degrees; carries two offending monomials."""

    def __init__(self, mono1, mono2):
        super().__init__(f"monomials of different degree: {mono1} and {mono2}")
        self.monomials = (mono1, mono2)


class UnknownVariable(FormcenterError):
    """Variable index outside the declared range."""


class SingularMatrix(FormcenterError):
    """Matrix is not invertible."""


class ZeroForm(FormcenterError):
    """Operation requires a nonzero form."""


class DegenerateInput(FormcenterError):
    """Form must be nondegenerate; reduce it first."""


class NotCommuting(FormcenterError):
    """Matrix family must commute pairwise."""


class NotSemisimple(FormcenterError):
    """Matrix must be semisimple (squarefree minimal polynomial)."""


class NotCompleteSystem(FormcenterError):
    """Idempotents do not form a complete orthogonal system."""


class TowerRequired(FormcenterError):
    """Splitting needs more than one independent field extension generator.

    Carries the irreducible certificates that would each require a generator.
    """

    def __init__(self, certificates):
        names = ", ".join(str(c) for c in certificates)
        super().__init__(f"splitting requires a tower of extensions; certificates: {names}")
        self.certificates = list(certificates)


class SemisimpleCenter(FormcenterError):
    """No LDS witness exists: the center has no nonzero nilpotents."""


class NotInCenter(FormcenterError):
    """Matrix fails the center condition; carries a failing slice index."""

    def __init__(self, index):
        super().__init__(f"matrix is not in the center: slice condition fails at index {index}")
        self.index = index


class DegreeMismatch(FormcenterError):
    """Forms must share the same variable count and degree."""


class UnknownFamily(FormcenterError):
    """Unrecognized generator family name."""
