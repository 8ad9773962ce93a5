"""
Text and JSON rendering of command results.

Reals are written as fixed-point decimal strings with trailing zeros stripped.
"""

import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..core.enums import CycleBalance
from ..core.models.graph import CycleReport, GainGraph
from ..core.models.quaternion import Quaternion
from ..core.models.reduction import ReductionComponent, ReductionEntry
from ..core.models.report import DeterminantReport, VerificationReport
from ..utils.numeric import format_real


def real_text(value: float) -> str:
    return format_real(value, get_settings().output_decimals)


def quaternion_text(q: Quaternion) -> str:
    """e.g. 0.5+0.5i-0.5j-0.5k"""
    parts = [real_text(q.w)]
    for value, symbol in ((q.x, "i"), (q.y, "j"), (q.z, "k")):
        text = real_text(value)
        parts.append(f"{text}{symbol}" if text.startswith("-") else f"+{text}{symbol}")
    return "".join(parts)


def cycle_payload(graph: GainGraph, report: CycleReport, balance: Optional[CycleBalance] = None) -> Dict[str, Any]:
    payload = {
        "vertices": [graph.vertex_labels[v] for v in report.vertices],
        "edges": [graph.edges[k].id for k in report.edges],
        "gain": [real_text(c) for c in report.gain.components()],
        "contribution": real_text(report.contribution),
    }
    if balance is not None:
        payload["balance"] = balance.value
    return payload


def cycle_line(graph: GainGraph, report: CycleReport, balance: Optional[CycleBalance] = None) -> str:
    line = (
        f"{' '.join(graph.vertex_labels[v] for v in report.vertices)}  "
        f"gain {quaternion_text(report.gain)}  contribution {real_text(report.contribution)}"
    )
    return f"{line}  {balance.value}" if balance is not None else line


def render_determinant(report: DeterminantReport) -> str:
    lines = []
    if report.det_direct is not None:
        lines.append(f"direct: {real_text(report.det_direct)}")
    if report.det_combinatorial is not None:
        lines.append(f"combinatorial: {real_text(report.det_combinatorial)}")
    if report.discrepancy is not None:
        lines.append(f"discrepancy: {report.discrepancy:.3e}")
    return "\n".join(lines)


def _component_payload(graph: GainGraph, component: ReductionComponent) -> Dict[str, Any]:
    payload = {
        "vertices": [graph.vertex_labels[v] for v in component.vertex_set],
        "edges": [graph.edges[k].id for k in component.edge_set],
        "halfEdges": [graph.edges[k].id for k in component.half_edges],
        "kind": component.kind.value,
    }
    if component.cycle is not None:
        payload["cycle"] = cycle_payload(graph, component.cycle)
    return payload


def _component_text(graph: GainGraph, component: ReductionComponent) -> str:
    labels = ",".join(graph.vertex_labels[v] for v in component.vertex_set)
    if component.cycle is not None:
        return f"{component.kind.value}[{labels}] ({cycle_line(graph, component.cycle)})"
    return f"{component.kind.value}[{labels}]"


def reduction_total(entries: Sequence[ReductionEntry]) -> float:
    return math.fsum(entry.det_combinatorial for entry in entries)


def reductions_payload(graph: GainGraph, entries: Sequence[ReductionEntry]) -> Dict[str, Any]:
    return {
        "reductions": [
            {
                "columns": [graph.edges[k].id for k in entry.reduction.col_set],
                "unicycleLike": entry.is_unicycle_like,
                "components": [_component_payload(graph, c) for c in entry.components],
                "detDirect": real_text(entry.det_direct),
                "detCombinatorial": real_text(entry.det_combinatorial),
            }
            for entry in entries
        ],
        "total": real_text(reduction_total(entries)),
    }


def render_reductions(graph: GainGraph, entries: Sequence[ReductionEntry]) -> str:
    lines = []
    for entry in entries:
        columns = ",".join(graph.edges[k].id for k in entry.reduction.col_set)
        components = "; ".join(_component_text(graph, c) for c in entry.components)
        lines.append(f"{{{columns}}}  det {real_text(entry.det_combinatorial)}  {components}")
    lines.append(f"reductions: {len(entries)}  total: {real_text(reduction_total(entries))}")
    return "\n".join(lines)


def render_cycles(graph: GainGraph, cycles: List[Tuple[CycleReport, CycleBalance]]) -> str:
    lines = [cycle_line(graph, report, balance) for report, balance in cycles]
    lines.append(f"cycles: {len(cycles)}")
    return "\n".join(lines)


def render_verification(report: VerificationReport) -> str:
    lines = []
    if report.det_direct is not None:
        lines.append(f"graph: {report.graph_descriptor}")
        lines.append(f"direct: {real_text(report.det_direct)}")
        lines.append(f"combinatorial: {real_text(report.det_combinatorial)}")
        lines.append(f"oracle squared: {real_text(report.det_oracle_squared)}")
        lines.append(f"max discrepancy: {report.max_discrepancy:.3e}")
    for result in report.lemma_results:
        status = "PASS" if result.passed else "FAIL"
        lines.append(f"{status} {result.lemma} ({result.trials} trials)")
        if result.witness is not None:
            lines.append(f"  witness: {result.witness}")
    lines.append("passed" if report.passed else "failed")
    return "\n".join(lines)
