"""Exception types shared across the package."""

from __future__ import annotations


class ModelDomainError(ValueError):
    """An input lies outside the domain of a model function."""


class ConfigError(ValueError):
    """A scenario configuration is invalid.

    ``problems`` holds one message per offending field so callers can report
    all of them at once instead of failing on the first.
    """

    def __init__(self, problems: list[str] | str):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
