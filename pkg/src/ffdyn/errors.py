"""Exception hierarchy for ffdyn.

Every library-raised error derives from FFDynError so callers can catch the
whole family. ParseError carries a source span; the CLI maps it (and argparse
usage failures) to exit code 2, and IdentityFalsifiedError to exit code 3.
"""


class FFDynError(Exception):
    pass


class FieldMismatchError(FFDynError):
    """Operands live over different coefficient fields."""


class DomainError(FFDynError):
    """Input violates a documented precondition (singular curve, off-curve
    point, non-prime characteristic, reducible modulus, ...)."""


class DegenerateMapError(FFDynError):
    """Zero homogeneous resultant: common factor or degree drop."""


class SingularBlockError(FFDynError):
    """A selected square subsystem has determinant zero."""


class DegreeCapError(FFDynError):
    """x-degree of a composed map would exceed the configured cap."""


class PrecisionCapError(FFDynError):
    """A Laurent-tail computation would exceed the configured precision cap."""


class IdentityFalsifiedError(FFDynError):
    """An identity the library asserts unconditionally failed on concrete
    input. This is reserved for exact identities; it maps to exit code 3."""


class ParseError(FFDynError):
    """Syntax or semantic error in frontend input, with a source span."""

    def __init__(self, message, text="", pos=0, length=1, expected=None):
        super().__init__(message)
        self.message = message
        self.text = text
        self.pos = pos
        self.length = length
        self.expected = tuple(expected) if expected else ()

    def location(self):
        """(line, column), both 1-based, of the span start."""
        prefix = self.text[: self.pos]
        line = prefix.count("\n") + 1
        col = self.pos - (prefix.rfind("\n") + 1) + 1
        return line, col

    def __str__(self):
        line, col = self.location()
        s = "%s at line %d, column %d" % (self.message, line, col)
        if self.expected:
            s += " (expected %s)" % ", ".join(self.expected)
        return s
