"""Shared fixtures: exhaustive graph streams and classification results.

The expensive inputs (connected-graph class lists, the bipartite
classification) are cached in pytest's config cache as graph6 strings and
JSON rows, so repeated runs skip regeneration.  Build durations are cached
alongside so timing reports stay meaningful on cached runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from pivotcode.census import (
    OrbitRow,
    RepSet,
    classify_bipartite,
    connected_bipartite_classes,
    connected_graph_classes,
)
from pivotcode.formats import from_graph6, to_graph6

_SALT = "v1"  # bump to invalidate cached streams after format changes


class StreamBank:
    """Lazily built, cache-backed exhaustive streams of one family."""

    def __init__(self, request, kind: str, builder):
        self._request = request
        self._kind = kind
        self._builder = builder
        self._mem: dict[int, list] = {}
        self._secs: dict[int, float] = {}

    def get(self, n: int):
        if n in self._mem:
            return self._mem[n]
        key = f"pivotcode/{_SALT}/{self._kind}-{n}"
        cached = self._request.config.cache.get(key, None)
        # entries from older schemas read as a miss, not an error
        if isinstance(cached, dict):
            graphs = [from_graph6(s) for s in cached["graphs"]]
            secs = cached["secs"]
        else:
            t0 = time.perf_counter()
            graphs = self._builder(n)
            secs = time.perf_counter() - t0
            self._request.config.cache.set(
                key, {"secs": secs, "graphs": [to_graph6(g) for g in graphs]}
            )
        self._mem[n] = graphs
        self._secs[n] = secs
        return graphs

    def seconds(self, n: int) -> float:
        """Generation cost of level n, recorded at first build."""
        self.get(n)
        return self._secs[n]


@pytest.fixture(scope="session")
def connected_stream(request):
    """All isomorphism classes of connected graphs on n vertices."""
    return StreamBank(request, "connected", connected_graph_classes)


@pytest.fixture(scope="session")
def bipartite_stream(request):
    """All classes of connected bipartite graphs on n vertices."""
    return StreamBank(request, "bipartite", connected_bipartite_classes)


def _repset_to_json(reps: RepSet) -> dict:
    return {
        "n": reps.n,
        "rows": [
            [to_graph6(r.rep), r.size, r.a, r.b, r.delta_left, r.delta_right, r.isodual]
            for r in reps.rows
        ],
    }


def _repset_from_json(data: dict) -> RepSet:
    rows = tuple(
        OrbitRow(rep=from_graph6(g6), size=size, a=a, b=b,
                 delta_left=dl, delta_right=dr, isodual=iso)
        for g6, size, a, b, dl, dr, iso in data["rows"]
    )
    return RepSet(data["n"], rows)


@dataclass(frozen=True)
class BipartiteCensus:
    levels: list  # RepSet for n = 1..12
    seconds: float  # wall time of the original classification run


@pytest.fixture(scope="session")
def bipartite_levels(request) -> BipartiteCensus:
    """The full bipartite ELC classification for n = 1..12."""
    key = f"pivotcode/{_SALT}/bipartite-levels-12"
    cached = request.config.cache.get(key, None)
    if isinstance(cached, dict):
        return BipartiteCensus(
            [_repset_from_json(d) for d in cached["levels"]], cached["secs"]
        )
    t0 = time.perf_counter()
    levels = classify_bipartite(12)
    secs = time.perf_counter() - t0
    request.config.cache.set(
        key, {"secs": secs, "levels": [_repset_to_json(r) for r in levels]}
    )
    return BipartiteCensus(levels, secs)
