from abc import ABC, abstractmethod
from typing import Dict

from core.Errors import PropertyViolation


class AbstractChecker(ABC):
    """
    One check of a verification suite.

    Suites list checkers by dotted path with keyword params; ``check`` returns
    a JSON-able record of what was computed and raises ``PropertyViolation``
    when a property fails.
    """

    def __init__(self, **params):
        self.params = params

    @property
    def name(self) -> str:
        return type(self).__name__

    @abstractmethod
    def check(self) -> Dict:
        pass

    def expect(self, condition: bool, message: str):
        if not condition:
            raise PropertyViolation(message, check=self.name)

    def expect_equal(self, actual, expected, what: str):
        self.expect(actual == expected, f"{what}: expected {expected}, got {actual}")
