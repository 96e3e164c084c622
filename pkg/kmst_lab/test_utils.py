"""공통 유틸리티 테스트"""

import logging
import math

import pytest

from components import (
    EXIT_INFEASIBLE,
    EXIT_USAGE,
    ApplicabilityError,
    ArgumentError,
    InfeasibleError,
    MergeStall,
    ParseError,
    ResourceError,
    ValidationError,
    approx_equal,
    describe_error,
    format_number,
    setup_logging,
)


@pytest.mark.parametrize(
    "error, code, prefix",
    [
        (InfeasibleError("k too big"), EXIT_INFEASIBLE, "infeasible: "),
        (ParseError("line 3"), EXIT_USAGE, "parse error: "),
        (ArgumentError("k = 0"), EXIT_USAGE, "argument error: "),
        (ApplicabilityError("not convex"), EXIT_USAGE, "not applicable: "),
        (ResourceError("too many"), EXIT_USAGE, "budget exceeded: "),
        (ValidationError("cycle"), EXIT_USAGE, "invalid instance: "),
        (MergeStall("stuck"), EXIT_USAGE, "MergeStall: "),
        (FileNotFoundError("gone"), EXIT_USAGE, "i/o error: "),
        (RuntimeError("boom"), EXIT_USAGE, "error: "),
    ],
)
def test_describe_error(error, code, prefix):
    got_code, message = describe_error(error)
    assert got_code == code
    assert message.startswith(prefix)


def test_describe_error_context():
    assert describe_error(ArgumentError("k = 0"), "kmst approx") == (EXIT_USAGE, "kmst approx: argument error: k = 0")


@pytest.mark.parametrize(
    "value, text",
    [(2.0, "2"), (0.1, "0.1"), (-0.0, "0"), (1 / 3, "0.333333333"), (1e20, "1e+20"), (math.inf, "inf")],
)
def test_format_number(value, text):
    assert format_number(value) == text


def test_approx_equal():
    assert approx_equal(1.0, 1.0 + 1e-12)
    assert not approx_equal(1.0, 1.001)
    assert approx_equal(math.inf, math.inf)
    assert not approx_equal(math.inf, -math.inf)
    assert approx_equal(0.0, 1e-13)


def test_setup_logging_level():
    setup_logging("debug")
    assert logging.getLogger().level == logging.DEBUG
    setup_logging("nonsense")
    assert logging.getLogger().level == logging.WARNING
