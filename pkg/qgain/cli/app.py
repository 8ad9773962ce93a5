"""
Command-line application: argument parsing, logging setup and exit codes.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from ..config import get_settings
from ..core.enums import DeterminantMethod, ExitCode
from ..core.exceptions import (
    DeterminantMismatchError,
    GainGraphError,
    GraphDocumentError,
    InvalidGraphError,
    LimitExceededError,
    MatrixError,
    NonUnitGainError,
    NotRealError,
    QuaternionError,
    RouteMismatchError,
)
from .commands import CommandHandlers

logger = logging.getLogger(__name__)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive_real(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive tolerance, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="qgain",
        description="Laplacian determinants and balance of quaternion unit gain graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    parser.add_argument(
        "--log-level",
        default=settings.log_level,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        help="Logging level for stderr (default: %(default)s)",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_real, default=None, help="Tolerance (default: settings)")
    common.add_argument("--json", action="store_true", help="Emit a JSON report on stdout")

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("--input", "-i", required=True, help="Graph document (JSON)")

    commands = parser.add_subparsers(dest="command", required=True)

    det = commands.add_parser("det", parents=[common, graph_input], help="Determinant of the Laplacian")
    det.add_argument(
        "--method",
        type=DeterminantMethod,
        choices=list(DeterminantMethod),
        default=DeterminantMethod.BOTH,
        help="Expansion, reduction sum, or both (default: %(default)s)",
    )

    commands.add_parser("balanced", parents=[common, graph_input], help="Is every cycle neutral?")
    commands.add_parser("reductions", parents=[common, graph_input], help="List full vertex reductions")

    cycles = commands.add_parser("cycles", parents=[common, graph_input], help="List simple cycles and gains")
    cycles.add_argument("--max-len", type=_non_negative, default=None, help="Longest cycle to list")

    verify = commands.add_parser("verify", parents=[common], help="Cross-check routes and run the lemma suite")
    verify.add_argument("--seed", type=_non_negative, default=0)
    verify.add_argument("--trials", type=_non_negative, default=25)
    verify.add_argument("--input", "-i", default=None, help="Optional graph document to cross-check")

    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _dispatch(args: argparse.Namespace) -> ExitCode:
    handlers = CommandHandlers()
    result = getattr(handlers, args.command)(args)
    if args.json and result.payload is not None:
        print(json.dumps(result.payload, indent=2))
    else:
        print(result.text)
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line; returns the process exit code."""
    args = build_parser().parse_args(argv)
    _configure_logging(args.log_level)
    try:
        return int(_dispatch(args))
    except NonUnitGainError as e:
        logger.error(str(e))
        return int(ExitCode.NON_UNIT_GAIN)
    except (GraphDocumentError, InvalidGraphError) as e:
        logger.error(str(e))
        return int(ExitCode.INVALID_INPUT)
    except LimitExceededError as e:
        logger.error(str(e))
        return int(ExitCode.LIMIT_EXCEEDED)
    except (DeterminantMismatchError, RouteMismatchError, NotRealError) as e:
        logger.error(str(e))
        return int(ExitCode.DISAGREEMENT)
    except (GainGraphError, MatrixError, QuaternionError) as e:
        logger.error(str(e))
        return int(ExitCode.INVALID_INPUT)
