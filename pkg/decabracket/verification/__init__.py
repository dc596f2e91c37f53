"""
Verification suites and their reports.
"""

from decabracket.verification.report import (
    STATUSES,
    STATUS_FAIL,
    STATUS_FLAGGED,
    STATUS_INFO,
    STATUS_PASS,
    CheckOutcome,
    CheckResult,
    VerifyReport,
)
from decabracket.verification.suites import SUITE_NAMES, SUITES, run_check, run_suite, selected_checks

__all__ = [
    "STATUSES",
    "STATUS_FAIL",
    "STATUS_FLAGGED",
    "STATUS_INFO",
    "STATUS_PASS",
    "SUITES",
    "SUITE_NAMES",
    "CheckOutcome",
    "CheckResult",
    "VerifyReport",
    "run_check",
    "run_suite",
    "selected_checks",
]
