"""Centralized error handling.

Problem:
- Raw stack traces confuse users of the command line.
- Scripts driving the CLI need stable exit codes.

Solution:
- A small exception hierarchy for the failure modes that matter (budget, capacity,
  dimensions, integrality, shape).
- Wrap every command with `safe_command`: print a short message, log the full trace,
  return the documented exit code.
"""

from __future__ import annotations

import sys
from typing import Any, Callable, Dict, Optional

from backend.core.logger import log_exception


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


class IceCountError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(IceCountError, ValueError):
    """Edge matrices or boundary sides do not match the lattice dimensions."""


class ShapeError(IceCountError, ValueError):
    """A partition does not have the shape a closed formula needs."""


class CapacityError(IceCountError):
    """An engine was asked for a lattice wider than it can represent."""


class IntegralityError(IceCountError, ArithmeticError):
    """An exact formula produced a value that is not the integer it must be."""


class BudgetExceededError(IceCountError):
    """A search hit its node or state cap.

    `nodes` and `states` hold the partial progress at the moment the cap was hit.
    """

    def __init__(self, message: str, nodes: int, states: int) -> None:
        super().__init__(message)
        self.nodes = nodes
        self.states = states


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (BudgetExceededError, CapacityError)):
        return EXIT_CAPACITY
    if isinstance(exc, (ValueError, KeyError)):
        return EXIT_USAGE
    return EXIT_CHECK_FAILED


def safe_command(
    command_name: str,
    context: Optional[Dict[str, Any]] = None,
) -> Callable[[Callable[..., int]], Callable[..., int]]:
    """Decorator to turn exceptions raised by a command into exit codes."""

    def _decorator(fn: Callable[..., int]) -> Callable[..., int]:
        def _wrapper(*args: Any, **kwargs: Any) -> int:
            try:
                return fn(*args, **kwargs)
            except IceCountError as exc:
                log_exception(f"Command error: {command_name}", exc, context)
                print(f"error: {exc}", file=sys.stderr)
                return exit_code_for(exc)
            except ValueError as exc:
                log_exception(f"Invalid input: {command_name}", exc, context)
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            except Exception as exc:
                log_exception(f"Unexpected failure: {command_name}", exc, context)
                print("error: unexpected failure, see the log file for details.", file=sys.stderr)
                return EXIT_CHECK_FAILED

        _wrapper.__name__ = getattr(fn, "__name__", command_name)
        _wrapper.__doc__ = fn.__doc__
        return _wrapper

    return _decorator
