"""Exception types shared across the package."""


class InputError(ValueError):
    """Bad argument: unknown vertex, empty cut side, malformed family spec."""


class BudgetError(RuntimeError):
    """A configured search or closure budget was exhausted.

    `budget` names the limit that was hit; `partial` may carry lower bounds
    computed before the budget ran out.
    """

    def __init__(self, message, budget, partial=None):
        super().__init__(message)
        self.budget = budget
        self.partial = partial


class TreeSetViolation(ValueError):
    """An axiom S1-S4 failed; carries the axiom code and the witnessing cuts."""

    def __init__(self, axiom, witness, message):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class TightnessViolation(ValueError):
    """A listed set is a cut but not tight (side or complement disconnected)."""

    def __init__(self, side, message):
        super().__init__(message)
        self.side = side


class CoverageError(InputError):
    """Vertices not covered by any cut of the family; lists the offenders."""

    def __init__(self, vertices, message):
        super().__init__(message)
        self.vertices = tuple(sorted(vertices))


class StructureError(RuntimeError):
    """A structural guarantee failed (coterminality, tree shape); names a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
