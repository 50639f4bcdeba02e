"""Exception types shared across the package."""

from typing import Optional


class PreBanditError(Exception):
    """Base class for all package errors."""


class InvalidInputError(PreBanditError, ValueError):
    """An argument violates an operation's precondition."""


class BudgetExceededError(InvalidInputError):
    """Exhaustive subset enumeration would exceed the configured budget."""

    def __init__(self, n: int, l: int, count: int, budget: int):
        self.n = n
        self.l = l
        self.count = count
        self.budget = budget
        super().__init__(
            f"C({n}, {l}) = {count} subsets exceeds the brute-force budget of {budget}"
        )

    def __reduce__(self):
        return (type(self), (self.n, self.l, self.count, self.budget))


class ConfigError(InvalidInputError):
    """An experiment file failed to parse or validate."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.detail = message

    def __reduce__(self):
        return (type(self), (self.detail, self.line))


class ContractViolation(PreBanditError, RuntimeError):
    """A policy or episode broke a runtime guarantee."""

    def __init__(self, message: str, replicate: Optional[int] = None):
        self.detail = message
        self.replicate = replicate
        suffix = f" (replicate {replicate})" if replicate is not None else ""
        super().__init__(f"{message}{suffix}")

    def __reduce__(self):
        return (type(self), (self.detail, self.replicate))

    def for_replicate(self, replicate: int) -> "ContractViolation":
        """Copy of this violation tagged with a replicate index (kept if already tagged)."""
        if self.replicate is not None:
            return self
        return ContractViolation(self.detail, replicate=replicate)
