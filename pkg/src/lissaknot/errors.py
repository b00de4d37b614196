"""Exception hierarchy shared by all lissaknot modules."""


class LissaknotError(Exception):
    """Base class; every error raised on purpose by the package derives from it."""


class NonCoprimeFrequencies(LissaknotError, ValueError):
    pass


class DegenerateProjection(LissaknotError):
    pass


class SingularCrossing(LissaknotError):
    pass


class BadFrequency(LissaknotError, ValueError):
    pass


class MalformedTraversal(LissaknotError, ValueError):
    pass


class NotAKnot(LissaknotError):
    pass


class NoAssignmentFound(LissaknotError):
    pass


class BadDeterminant(LissaknotError):
    pass


class NotCoprime(LissaknotError, ValueError):
    pass


class NotCoprimeToThree(NotCoprime):
    pass


class NotADoubleLetter(LissaknotError, ValueError):
    pass


class IndexOutOfRange(LissaknotError, IndexError):
    pass


class LinkNotKnot(LissaknotError):
    pass


class PatternNotFound(LissaknotError, ValueError):
    pass


class PhaseSyntaxError(LissaknotError, ValueError):
    pass
