"""
Command handlers for the qgain command line.
"""

import argparse
import json
import logging
from typing import Optional

from ..config import Settings, get_settings
from ..core.enums import DeterminantMethod, ExitCode
from ..core.models.graph import GainGraph
from ..services.analysis import AnalysisService
from ..services.graph.document import load_graph
from .middleware import timed
from .output import (
    cycle_payload,
    render_cycles,
    render_determinant,
    render_reductions,
    render_verification,
    reductions_payload,
)
from .result import CommandResult

logger = logging.getLogger(__name__)


class CommandHandlers:
    """One handler per subcommand; each returns a CommandResult."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def _service(self, args: argparse.Namespace) -> AnalysisService:
        return AnalysisService(self.settings, getattr(args, "tol", None))

    @staticmethod
    def _graph(args: argparse.Namespace) -> GainGraph:
        return load_graph(args.input)

    @timed("det")
    def det(self, args: argparse.Namespace) -> CommandResult:
        graph = self._graph(args)
        report = self._service(args).determinant(graph, DeterminantMethod(args.method), args.input)
        return CommandResult(
            text=render_determinant(report),
            payload=json.loads(report.to_json()),
            exit_code=ExitCode.OK if report.agree else ExitCode.DISAGREEMENT,
        )

    @timed("balanced")
    def balanced(self, args: argparse.Namespace) -> CommandResult:
        balanced = self._service(args).balanced(self._graph(args))
        return CommandResult(
            text="balanced" if balanced else "unbalanced",
            payload={"balanced": balanced},
            exit_code=ExitCode.OK if balanced else ExitCode.FAILED,
        )

    @timed("reductions")
    def reductions(self, args: argparse.Namespace) -> CommandResult:
        graph = self._graph(args)
        entries = self._service(args).reductions(graph)
        return CommandResult(text=render_reductions(graph, entries), payload=reductions_payload(graph, entries))

    @timed("cycles")
    def cycles(self, args: argparse.Namespace) -> CommandResult:
        graph = self._graph(args)
        cycles = self._service(args).cycles(graph, args.max_len)
        return CommandResult(
            text=render_cycles(graph, cycles),
            payload={"cycles": [cycle_payload(graph, report, balance) for report, balance in cycles]},
        )

    @timed("verify")
    def verify(self, args: argparse.Namespace) -> CommandResult:
        graph = self._graph(args) if args.input else None
        report = self._service(args).verify(args.seed, args.trials, graph, args.input)
        if not report.passed:
            logger.warning(f"Verification failed: {report.failed_lemmas or 'determinant cross-check'}")
        return CommandResult(
            text=render_verification(report),
            payload=json.loads(report.to_json()),
            exit_code=ExitCode.OK if report.passed else ExitCode.FAILED,
        )
