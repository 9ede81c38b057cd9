"""Canonical text renderings used by the CLI and the golden files."""

from typing import Iterable, List, Optional

from cycles.cocycles import Bond
from optimizer.flag_algorithm import AlgorithmTrace


def render_ids(ids: Iterable[int]) -> str:
    """Ascending, space separated."""
    return " ".join(str(e) for e in sorted(ids))


def _braced(ids: Optional[Iterable[int]]) -> str:
    if ids is None:
        return "none"
    return "{" + ",".join(str(e) for e in sorted(ids)) + "}"


def render_trace(trace: AlgorithmTrace) -> str:
    """
    p=<id> E={..} F={..}
    i=<k> Copt=+{..}/-{..} t=<id> F'={..}|none removed=<id>|none
      order: <cocycle> > <cocycle> > ...
    alpha=<ids>
    """
    lines: List[str] = [f"p={trace.p} E={_braced(trace.ground)} F={_braced(trace.objective)}"]
    for step in trace.steps:
        removed = "none" if step.removed is None else str(step.removed)
        lines.append(
            f"i={step.index} Copt={step.c_opt} t={step.t} "
            f"F'={_braced(step.next_objective)} removed={removed}"
        )
        lines.append("  order: " + " > ".join(str(c) for c in step.candidates))
    if trace.tree is not None:
        lines.append(f"alpha={trace.tree}")
    return "\n".join(lines) + "\n"


def render_bond(bond: Bond) -> str:
    side = ",".join(sorted(bond.side))
    return f"{bond.signed} side={{{side}}}"
