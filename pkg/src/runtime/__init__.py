# -*- coding: utf-8 -*-
"""Runtime-layer helpers: JSON codec, CLI commands and the fixture harness."""

from .contracts import (
    CommandName,
    ErrorCode,
    ExitCode,
    ResultEnvelope,
    ResultPath,
)


def __getattr__(name):
    if name == "FixtureHarness":
        from .fixture_harness import FixtureHarness

        return FixtureHarness
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "CommandName",
    "ErrorCode",
    "ExitCode",
    "FixtureHarness",
    "ResultEnvelope",
    "ResultPath",
]
