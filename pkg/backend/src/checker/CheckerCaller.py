import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from checker.AbstractChecker import AbstractChecker
from core.Errors import InputError, LatticeError, PropertyViolation
from utils import ModuleFindTool
from utils.GlobalVarGetter import GlobalVarGetter

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    passed: bool
    elapsed: float
    details: Dict = field(default_factory=dict)
    error: str = ""

    def to_record(self) -> Dict:
        record = {"name": self.name, "passed": self.passed, "details": self.details}
        if self.error:
            record["error"] = self.error
        return record


@dataclass
class SuiteReport:
    suite: str
    results: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_record(self) -> Dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [r.to_record() for r in self.results]}


def suite_entries(name: str, config: Dict = None) -> List[Dict]:
    if config is None:
        config = GlobalVarGetter.get()
    suites = (config or {}).get("suites", {}) or {}
    if name not in suites:
        raise InputError(f"unknown suite {name!r}; configured: {', '.join(sorted(suites)) or 'none'}")
    return suites[name]


class CheckerCaller:
    """Instantiates the checkers of a suite from ``{path, params}`` entries and runs them in order."""

    def __init__(self, entries: Sequence[Dict]):
        self.checkers: List[AbstractChecker] = []
        for entry in entries:
            if not isinstance(entry, dict) or "path" not in entry:
                raise InputError(f"suite entry {entry!r} needs a 'path'")
            checker = ModuleFindTool.generate_object_by_path(entry["path"], entry.get("params"))
            if not isinstance(checker, AbstractChecker):
                raise InputError(f"{entry['path']} is not a checker")
            self.checkers.append(checker)

    def check(self, suite: str = "") -> SuiteReport:
        results = []
        for checker in self.checkers:
            logger.info("Check %s started", checker.name)
            start = time.time()
            try:
                details = checker.check()
                result = CheckResult(checker.name, True, time.time() - start, details)
            except PropertyViolation as e:
                result = CheckResult(checker.name, False, time.time() - start, error=str(e))
            except LatticeError as e:
                logger.error("Check %s raised %s: %s", checker.name, type(e).__name__, e)
                result = CheckResult(checker.name, False, time.time() - start, error=f"{type(e).__name__}: {e}")
            logger.info("Check %s %s, time used %.2fs", checker.name,
                        "passed" if result.passed else "FAILED", result.elapsed)
            results.append(result)
        return SuiteReport(suite, results)
