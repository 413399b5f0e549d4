"""
Exceptions raised by the library. Every error carries a stable code that the command line front end
turns into an exit status.
"""


class WesError(Exception):
    """Base class for all errors raised by the library"""
    code = 'WES_ERROR'

    def __str__(self) -> str:
        return f'{self.code}: {super().__str__()}'


class ShapeMismatchError(WesError):
    code = 'SHAPE_MISMATCH'


class NotWellDefinedError(WesError):
    code = 'NOT_WELL_DEFINED'


class InvalidGroupError(WesError):
    code = 'INVALID_GROUP'


class UnsupportedRankError(WesError):
    code = 'UNSUPPORTED_RANK'


class BudgetExceededError(WesError):
    code = 'BUDGET_EXCEEDED'

    def __init__(self, factor: str, candidates: int, budget: int) -> None:
        super().__init__(f'enumerating aut({factor}) needs {candidates} candidates, budget is {budget}')
        self.factor = factor
        self.candidates = candidates
        self.budget = budget


class HypothesisViolationError(WesError):
    code = 'HYPOTHESIS_VIOLATION'


class NotAutomorphismError(WesError):
    code = 'NOT_AUTOMORPHISM'


class NotInducibleError(WesError):
    code = 'NOT_INDUCIBLE'


class NotAComplexError(WesError):
    code = 'NOT_A_COMPLEX'


class DocumentError(WesError):
    code = 'PARSE_ERROR'
