"""
Exception hierarchy for mlat

Validation errors describe malformed input structures. A FalsificationError
means an executable theorem check failed on a concrete instance, which can
only happen through an implementation bug, so callers record it as a
falsification event rather than treat it as bad input.
"""


class MlatError(Exception):
    pass


class ValidationError(MlatError, ValueError):
    pass


class NotAPartialOrder(ValidationError):
    pass


class NotALattice(ValidationError):
    pass


class NoBounds(ValidationError):
    pass


class AxiomViolation(ValidationError):
    def __init__(self, x, y, message=None):
        self.x = x
        self.y = y
        super().__init__(
            message or f'Multiplication axiom x·y <= x∧y fails at ({x}, {y})'
        )


class SizeMismatch(ValidationError):
    pass


class MorphismError(ValidationError):
    def __init__(self, witness, message):
        self.witness = witness
        super().__init__(message)


class NotJoinPreserving(MorphismError):
    pass


class TopNotPreserved(MorphismError):
    pass


class NotSubmultiplicative(MorphismError):
    pass


class NotAGroup(ValidationError):
    pass


class NotARng(ValidationError):
    pass


class NotASkewBrace(ValidationError):
    pass


class NotAnAutomorphism(ValidationError):
    pass


class NotNormal(ValidationError):
    pass


class NotAnIdeal(ValidationError):
    pass


class NotARadicalRing(ValidationError):
    pass


class NotMDistributive(ValidationError):
    pass


class EmptySet(ValidationError):
    pass


class PreconditionFailed(ValidationError):
    pass


class UndefinedAnnihilator(ValidationError):
    pass


class OrderBound(ValidationError):
    def __init__(self, order, bound, what='structure'):
        self.order = order
        self.bound = bound
        super().__init__(
            f'The {what} has order {order} which exceeds the bound {bound}'
        )


class ParseError(MlatError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        where = f'line {line}' if line is not None else 'unknown line'
        super().__init__(f'Parse error at {where}: {reason}')


class FalsificationError(MlatError):
    def __init__(self, claim, detail=''):
        self.claim = claim
        self.detail = detail
        super().__init__(f'{claim} failed: {detail}' if detail else claim)


def verify(condition, claim, detail=''):
    """
    Raise FalsificationError unless condition holds

    :param condition: result of the executable check
    :param claim: short name of the statement being checked
    :param detail: witness or context for the failure
    """
    if not condition:
        raise FalsificationError(claim, detail)
