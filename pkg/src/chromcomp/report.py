"""Single-graph analysis report shared by the CLI subcommands."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .coloring import chromatic_number
from .completion import zeta, zeta_upper_bounds
from .errors import check_cap
from .graph import Graph
from .io import GRAPH6_MAX_ORDER, to_graph6
from .jcoloring import zeta_j
from .stability import is_scc


@dataclass
class AnalysisReport:
    graph6: str | None
    order: int
    size: int
    chi: int
    zeta: int | None
    bounds: dict
    stability: dict | None = None
    jcoloring: dict | None = None
    completion: dict | None = None
    timing: dict[str, float] | None = field(default=None)

    def to_json(self) -> dict:
        out = asdict(self)
        if self.timing is None:
            del out["timing"]
        return out

    @classmethod
    def from_json(cls, data: dict) -> AnalysisReport:
        return cls(**data)

    def check(self) -> None:
        """Internal consistency between sub-reports."""
        if self.zeta is not None:
            assert self.bounds["zeta_exact"] == self.zeta
            assert self.completion is not None and self.completion["zeta"] == self.zeta
            assert self.bounds["complement"] >= self.zeta
            assert self.bounds["lucky"] >= self.zeta


def analyze(g: Graph, bounds_only: bool = False, cap: int | None = None, timing: bool = False) -> AnalysisReport:
    stamps: dict[str, float] = {}

    def timed(name, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        stamps[name] = round(time.perf_counter() - t0, 6)
        return out

    if bounds_only:
        chi = timed("chi", chromatic_number, g)
        bounds = timed("bounds", zeta_upper_bounds, g, None, chi)
        return AnalysisReport(
            graph6=_echo(g),
            order=g.n,
            size=g.edge_count,
            chi=chi,
            zeta=None,
            bounds=bounds.to_json(),
            timing=stamps if timing else None,
        )
    check_cap(g.n, cap, "analyze", "pass --bounds-only for polynomial bounds")
    result = timed("zeta", zeta, g, cap)
    bounds = timed("bounds", zeta_upper_bounds, g, result.zeta, result.chi)
    verdict = timed("scc", is_scc, g, result)
    jres = timed("jcoloring", zeta_j, g, cap, result.chi)
    return AnalysisReport(
        graph6=_echo(g),
        order=g.n,
        size=g.edge_count,
        chi=result.chi,
        zeta=result.zeta,
        bounds=bounds.to_json(),
        stability=verdict.to_json(),
        jcoloring=jres.to_json(),
        completion=result.to_json(),
        timing=stamps if timing else None,
    )


def _echo(g: Graph) -> str | None:
    return to_graph6(g) if g.n <= GRAPH6_MAX_ORDER else None
