"""Exception types and the shared enumeration budget."""

from __future__ import annotations

# Default cap on elementary enumeration steps (codewords or supports).
DEFAULT_BUDGET = 1 << 24


class QsympError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(QsympError):
    """Operands live in different ambient spaces or fields."""


class CommutationError(QsympError):
    """A generating set expected to be mutually commuting is not."""

    def __init__(self, i: int, j: int, value: int):
        self.i = i
        self.j = j
        self.value = value
        super().__init__(
            f"generators {i + 1} and {j + 1} do not commute "
            f"(symplectic product {value} != 0)"
        )


class BudgetExceededError(QsympError):
    """An exhaustive computation would exceed the step budget."""

    def __init__(self, needed: int, budget: int, task: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        self.task = task
        super().__init__(f"{task} needs {needed} steps, budget is {budget}")

    def to_dict(self) -> dict:
        return {
            "error": "budget-exceeded",
            "task": self.task,
            "needed": self.needed,
            "budget": self.budget,
        }


class ParseError(QsympError):
    """Malformed input file or text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def check_budget(needed: int, budget: int, task: str = "enumeration") -> None:
    if needed > budget:
        raise BudgetExceededError(needed, budget, task)
