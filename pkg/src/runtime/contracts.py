# -*- coding: utf-8 -*-
"""Contracts for the command-line runtime."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from src.core.errors import ErrorCode, ErrorKind

ENVELOPE_SCHEMA_VERSION = "hamilton_turns.envelope.v1"
FIXTURE_CASE_SCHEMA_VERSION = "hamilton_turns.fixture_case.v1"
FIXTURE_SUITE_SCHEMA_VERSION = "hamilton_turns.fixture_suite.v1"


class CommandName(str, Enum):
    COMPOSE = "compose"
    POLAR = "polar"
    WIGNER = "wigner"
    CLASSIFY = "classify"
    MATRICES = "matrices"


class ResultPath(str, Enum):
    GEOMETRIC = "geometric"
    DEGENERATE_FACTORIZED = "degenerate-factorized"
    ALGEBRAIC = "algebraic"


class ExitCode(int, Enum):
    OK = 0
    INPUT_ERROR = 2
    NUMERICAL_FAILURE = 3


EXIT_CODE_BY_KIND = {
    ErrorKind.INPUT: ExitCode.INPUT_ERROR,
    ErrorKind.NUMERICAL: ExitCode.NUMERICAL_FAILURE,
}


@dataclass
class ResultEnvelope:
    command: CommandName
    input: Any
    output: Dict[str, Any]
    path: ResultPath
    tolerances: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": ENVELOPE_SCHEMA_VERSION,
            "command": self.command.value,
            "input": self.input,
            "output": self.output,
            "path": self.path.value,
            "tolerances": self.tolerances,
        }


__all__ = [
    "CommandName",
    "ENVELOPE_SCHEMA_VERSION",
    "EXIT_CODE_BY_KIND",
    "ErrorCode",
    "ErrorKind",
    "ExitCode",
    "FIXTURE_CASE_SCHEMA_VERSION",
    "FIXTURE_SUITE_SCHEMA_VERSION",
    "ResultEnvelope",
    "ResultPath",
]
