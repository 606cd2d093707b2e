"""Exception hierarchy shared by every layer of the engine.

Each error carries a stable machine-readable ``code`` so that the HTTP
service and the CLI can translate failures into payloads and exit codes
without matching on message strings.
"""


class EngineError(Exception):
    code = "engine-error"


class ParseError(EngineError):
    code = "parse-error"


class NotAGroup(EngineError):
    code = "not-a-group"


class SingularAntipode(EngineError):
    code = "singular-antipode"


class AxiomError(EngineError):
    code = "axiom-error"


class InvalidStructure(EngineError):
    code = "invalid-structure"


class NotStable(EngineError):
    """A map did not carry the domain subspace into the codomain subspace.

    Raised by subspace restriction; it signals a violated equivariance
    assumption somewhere upstream, not a numerical problem.
    """

    code = "not-stable"


class NotAComplex(EngineError):
    code = "not-a-complex"


class SingularMatrix(EngineError):
    code = "singular-matrix"


class CoefficientMismatch(EngineError):
    code = "coefficient-mismatch"


class DescentFailure(EngineError):
    code = "descent-failure"


class CharNotZero(EngineError):
    code = "char-not-zero"


class CapTooSmall(EngineError):
    code = "cap-too-small"


_BY_CODE = {
    cls.code: cls
    for cls in (
        ParseError,
        NotAGroup,
        SingularAntipode,
        AxiomError,
        InvalidStructure,
        NotStable,
        NotAComplex,
        SingularMatrix,
        CoefficientMismatch,
        DescentFailure,
        CharNotZero,
        CapTooSmall,
    )
}


def error_from_code(code, message):
    """Rebuild a typed error from its wire representation."""
    return _BY_CODE.get(code, EngineError)(message)
