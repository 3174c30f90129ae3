"""Isomorph-free generation of small connected graphs and the sweep driver.

Canonical forms are computed by an exhaustive relabelling search pruned by
colour refinement: vertices are first split into an isomorphism-invariant
ordered partition (iterated degree refinement), and the canonical form is
the lexicographically smallest graph6 encoding over all labelings that
respect that partition.  Refinement-respecting minimization is a valid
canonical form (equal bytes iff isomorphic) because the partition and its
cell order are themselves isomorphism invariants.  Two further exact
prunings keep symmetric inputs tractable: branch-and-bound against the
best encoding found so far, and skipping a candidate vertex when swapping
it with an already-tried candidate is an automorphism.

The census generator grows graphs one vertex at a time (new vertex joined
to every nonempty subset of an existing connected graph) and rejects
duplicates by full canonical-form comparison.  That is slower than an
orderly algorithm but simple to audit, which matters more at this scale.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import IO, Iterable, Iterator, Sequence

from . import lemmas
from .families import Verdict, recognize
from .graphs import Graph, Graph6Error, diameter, is_reduced, parse_graph6, reduce, to_graph6
from .linalg import adjacency_matrix, nullity, rank_exact

log = logging.getLogger(__name__)

#: Above this many vertices the brute-force canonical search refuses to run
#: unless explicitly overridden.
CANONICAL_TIER_LIMIT = 10

#: The built-in census is exhaustive; beyond this order, corpora should be
#: generated externally and ingested as graph6 lines.
MAX_CENSUS_ORDER = 9


class CanonicalSizeError(ValueError):
    """Graph too large for the brute-force canonical-form tier."""


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def _refinement_cells(rows: Sequence[int]) -> list[list[int]]:
    """Ordered partition from iterated neighbour-colour refinement.

    Colours start as degrees and are re-keyed each round by the sorted
    multiset of neighbour colours, with new colour ids assigned in sorted
    key order, so the final cell order depends only on the isomorphism
    class.
    """
    n = len(rows)
    colors = [r.bit_count() for r in rows]
    ncolors = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            m = rows[v]
            nb = []
            while m:
                low = m & -m
                m ^= low
                nb.append(colors[low.bit_length() - 1])
            nb.sort()
            keys.append((colors[v], tuple(nb)))
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [order[k] for k in keys]
        if len(order) == ncolors:
            break
        ncolors = len(order)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _swap_class_ids(rows: Sequence[int]) -> list[int]:
    """Label vertices so that u, v share a label exactly when the
    transposition (u v) is an automorphism (equal neighbourhoods apart
    from each other)."""
    n = len(rows)
    ids = list(range(n))
    for u in range(n):
        if ids[u] != u:
            continue
        for v in range(u + 1, n):
            if ids[v] == v and rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                ids[v] = u
    return ids


def _min_columns(rows: Sequence[int]) -> list[int]:
    """Smallest upper-triangle column encoding over refinement-respecting
    labelings.  Entry j-1 holds the adjacency bits of position j to
    positions 0..j-1, earliest position in the highest bit (graph6 order).
    """
    n = len(rows)
    cells = _refinement_cells(rows)
    pos_cells: list[list[int]] = []
    for cell in cells:
        pos_cells.extend([cell] * len(cell))
    swap = _swap_class_ids(rows)

    best: list[int] | None = None
    cols: list[int] = []
    placed: list[int] = []
    used = 0
    version = 0

    def dfs(j: int, tight: bool) -> None:
        nonlocal best, used, version
        if j == n:
            if best is None or not tight:
                best = cols.copy()
                version += 1
            return
        cands = []
        seen_classes = set()
        for u in pos_cells[j]:
            if used >> u & 1:
                continue
            cls = swap[u]
            if cls in seen_classes:
                continue
            seen_classes.add(cls)
            c = 0
            ru = rows[u]
            for w in placed:
                c = c << 1 | (ru >> w & 1)
            cands.append((c, u))
        cands.sort()
        my_tight = tight
        for c, u in cands:
            if best is not None and my_tight and j > 0 and c > best[j - 1]:
                break
            child_tight = (
                best is not None and my_tight and (j == 0 or c == best[j - 1])
            )
            before = version
            placed.append(u)
            used |= 1 << u
            if j > 0:
                cols.append(c)
            dfs(j + 1, child_tight)
            if j > 0:
                cols.pop()
            used &= ~(1 << u)
            placed.pop()
            if version != before:
                my_tight = True

    dfs(0, True)
    assert best is not None
    return best


def _canonical_rows(rows: Sequence[int], limit: int) -> tuple[int, ...]:
    n = len(rows)
    if n > limit:
        raise CanonicalSizeError(
            f"{n} vertices exceeds the canonical search limit of {limit}"
        )
    if n <= 1:
        return tuple(rows)
    cols = _min_columns(rows)
    out = [0] * n
    for j in range(1, n):
        c = cols[j - 1]
        for i in range(j):
            if c >> (j - 1 - i) & 1:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return tuple(out)


def canonical_graph(g: Graph, limit: int = CANONICAL_TIER_LIMIT) -> Graph:
    """The canonically relabelled copy of ``g``."""
    return Graph(_canonical_rows(g.rows, limit))


def canonical_form(g: Graph, limit: int = CANONICAL_TIER_LIMIT) -> bytes:
    """Canonical graph6 bytes: equal for two graphs iff they are isomorphic."""
    return to_graph6(canonical_graph(g, limit)).encode("ascii")


# ---------------------------------------------------------------------------
# Isomorph-free census of connected graphs
# ---------------------------------------------------------------------------


def _augment_parent(rows: tuple[int, ...]) -> list[tuple[bytes, tuple[int, ...]]]:
    """All one-vertex extensions of a connected graph, canonically labelled.

    The new vertex is joined to every nonempty subset of the old ones, so
    children stay connected; every connected (k+1)-vertex class arises
    this way from some connected k-vertex parent (delete a non-cut vertex).
    Children are returned in canonical labelling, so the census emits
    graphs whose graph6 string equals their canonical form.
    """
    k = len(rows)
    out = []
    for mask in range(1, 1 << k):
        child = tuple(r | ((mask >> v & 1) << k) for v, r in enumerate(rows)) + (mask,)
        canon = _canonical_rows(child, k + 1)
        out.append((to_graph6(Graph(canon)).encode("ascii"), canon))
    return out


def _chunks(items: list, size: int) -> Iterator[list]:
    for i in range(0, len(items), size):
        yield items[i : i + size]


class _CensusBuilder:
    """Level-by-level augmentation with global canonical dedup per level."""

    def __init__(self, jobs: int = 1):
        self.jobs = max(1, jobs)
        self._pool = None

    def __enter__(self) -> "_CensusBuilder":
        if self.jobs > 1:
            self._pool = get_context().Pool(self.jobs)
        return self

    def __exit__(self, *exc) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()

    def children(self, parents: list[Graph]) -> Iterator[Graph]:
        """Deduplicated next-level graphs, in deterministic order.

        Parents are expanded in bounded chunks (synchronous map calls), so
        memory stays flat even when the final level is only streamed.
        """
        seen: set[bytes] = set()
        parent_rows = [g.rows for g in parents]
        for chunk in _chunks(parent_rows, 256):
            if self._pool is None:
                batches = [_augment_parent(r) for r in chunk]
            else:
                batches = self._pool.map(_augment_parent, chunk, chunksize=8)
            for batch in batches:
                for key, child_rows in batch:
                    if key not in seen:
                        seen.add(key)
                        yield Graph(child_rows)

    def evaluate(self, func, graphs: list, chunksize: int = 64) -> list:
        if self._pool is None:
            return [func(x) for x in graphs]
        return self._pool.map(func, graphs, chunksize=chunksize)


def connected_graphs(n: int, jobs: int = 1) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on
    exactly ``n`` vertices, streamed in deterministic order."""
    if not 1 <= n <= MAX_CENSUS_ORDER:
        raise ValueError(f"census supports 1..{MAX_CENSUS_ORDER} vertices, got {n}")
    level = [Graph((0,))]
    if n == 1:
        yield level[0]
        return
    with _CensusBuilder(jobs) as builder:
        for k in range(2, n + 1):
            if k == n:
                yield from builder.children(level)
            else:
                level = list(builder.children(level))


# ---------------------------------------------------------------------------
# graph6 stream ingestion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParsedRecord:
    """One input line: either a graph or a parse error, never both."""

    line_no: int
    text: str
    graph: Graph | None
    error: str | None


def ingest_graph6_stream(source: IO[str] | Iterable[str]) -> Iterator[ParsedRecord]:
    """Parse line-delimited graph6, collecting per-line errors.

    Blank lines are skipped; a malformed line yields an error record and
    the stream continues, so one bad byte cannot poison a corpus run.
    """
    for line_no, raw in enumerate(source, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield ParsedRecord(line_no, text, parse_graph6(text), None)
        except Graph6Error as exc:
            yield ParsedRecord(line_no, text, None, f"{exc.reason}: {exc}")


# ---------------------------------------------------------------------------
# Sweep driver
# ---------------------------------------------------------------------------


@dataclass
class SweepTotals:
    connected: int = 0
    reduced: int = 0
    extremal: int = 0
    odd_extremal: int = 0
    even_extremal: int = 0
    recognized: int = 0

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "reduced": self.reduced,
            "extremal": self.extremal,
            "odd_extremal": self.odd_extremal,
            "even_extremal": self.even_extremal,
            "recognized": self.recognized,
        }


@dataclass
class SweepReport:
    """Aggregated outcome of an exhaustive verification run.

    ``mismatches`` lists reduced even-diameter extremal graphs the
    recognizer rejected (a counterexample to the characterization if ever
    nonempty); ``unreduced_failures`` lists non-reduced extremal graphs
    whose twin reduction was not recognized.  Lemma summaries aggregate
    the per-graph checker reports for the selected suites.  Timing fields
    are informational and excluded from reproducibility comparisons.
    """

    n_min: int
    n_max: int
    suites: tuple[str, ...]
    per_n: dict[int, SweepTotals] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)
    inconclusive: list[str] = field(default_factory=list)
    recognized: list[dict] = field(default_factory=list)
    unreduced_failures: list[str] = field(default_factory=list)
    lemma_summaries: dict[str, dict] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_timings: bool = True) -> dict:
        out = {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "suites": list(self.suites),
            "per_n": {str(n): t.to_dict() for n, t in sorted(self.per_n.items())},
            "mismatches": self.mismatches,
            "inconclusive": self.inconclusive,
            "recognized": self.recognized,
            "unreduced_failures": self.unreduced_failures,
            "lemma_summaries": self.lemma_summaries,
        }
        if include_timings:
            out["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        return out


def _evaluate_graph(args: tuple[tuple[int, ...], tuple[str, ...], int]) -> dict:
    """Per-graph worker: invariants, recognition where applicable, and the
    selected lemma suites.  Takes plain tuples so it can cross a process
    boundary."""
    rows, suites, path_limit = args
    g = Graph(rows)
    d = diameter(g)
    eta = g.n - rank_exact(adjacency_matrix(g))
    reduced = is_reduced(g)
    extremal = eta == g.n - d - 1
    even_candidate = reduced and extremal and d >= 2 and d % 2 == 0
    rec = {
        "n": g.n,
        "graph6": to_graph6(g),
        "d": d,
        "eta": eta,
        "reduced": reduced,
        "extremal": extremal,
        "odd_extremal": extremal and d % 2 == 1,
        "even_candidate": even_candidate,
        "verdict": None,
        "recognition": None,
        "unreduced_failure": False,
    }
    if even_candidate:
        result = recognize(g, path_limit=path_limit)
        rec["verdict"] = result.verdict.value
        if result.verdict is Verdict.EVEN_EXTREMAL:
            rec["recognition"] = result.to_dict()
    elif extremal and not reduced and d >= 2 and d % 2 == 0:
        shrunk = reduce(g).graph
        if (
            nullity(shrunk) == shrunk.n - diameter(shrunk) - 1
            and diameter(shrunk) % 2 == 0
            and diameter(shrunk) >= 2
        ):
            rec["unreduced_failure"] = (
                recognize(shrunk, path_limit=path_limit).verdict is not Verdict.EVEN_EXTREMAL
            )
    if suites:
        rec["lemma_reports"] = {
            name: lemmas.run_suite(name, g).to_dict() for name in suites
        }
    return rec


def _fold_record(report: SweepReport, rec: dict) -> None:
    totals = report.per_n.setdefault(rec["n"], SweepTotals())
    totals.connected += 1
    totals.reduced += rec["reduced"]
    totals.extremal += rec["extremal"]
    totals.odd_extremal += rec["odd_extremal"]
    totals.even_extremal += rec["even_candidate"]
    if rec["verdict"] == Verdict.EVEN_EXTREMAL.value:
        totals.recognized += 1
        report.recognized.append(rec["recognition"])
    elif rec["verdict"] == Verdict.MISMATCH.value:
        report.mismatches.append(rec["graph6"])
    elif rec["verdict"] == Verdict.INCONCLUSIVE.value:
        report.inconclusive.append(rec["graph6"])
    if rec["unreduced_failure"]:
        report.unreduced_failures.append(rec["graph6"])
    for name, lr in rec.get("lemma_reports", {}).items():
        summary = report.lemma_summaries.setdefault(
            name,
            {"graphs": 0, "instances": 0, "violations": [], "skipped": 0, "truncated": 0},
        )
        summary["graphs"] += 1
        summary["instances"] += lr["checked"]
        summary["violations"].extend(lr["violations"])
        summary["skipped"] += lr["skipped"] is not None
        summary["truncated"] += lr["truncated"]
        if name == lemmas.SUITE_REDUCTION_EQUIVALENCE and lr["notes"].get("diameter", {}).get("changed"):
            summary.setdefault("diameter_changed", []).append(
                {"graph6": lr["graph6"], **lr["notes"]["diameter"]}
            )
        if name == lemmas.SUITE_PENDANT_DELETION:
            for inst in lr["notes"].get("instances", ()):
                key = "support_only_holds" if inst["support_only_form_holds"] else "support_only_fails"
                summary[key] = summary.get(key, 0) + 1


def verify_theorem(
    n_min: int,
    n_max: int,
    suites: Sequence[str] = (),
    jobs: int = 1,
    path_limit: int = 10_000,
) -> SweepReport:
    """Exhaustive sweep over all connected graphs with n_min <= n <= n_max.

    For every graph: invariants and reducedness; for reduced graphs with
    even diameter >= 2 and nullity n - d - 1, the recognizer must accept
    (failures are collected as mismatch witnesses).  Selected lemma suites
    run on every graph.  Results are deterministic and independent of
    ``jobs``; sharded runs fold to the same report.
    """
    unknown = set(suites) - set(lemmas.ALL_SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    if n_max > MAX_CENSUS_ORDER:
        raise ValueError(f"census supports n <= {MAX_CENSUS_ORDER}")
    report = SweepReport(n_min, n_max, tuple(suites))
    if n_min > n_max:
        return report
    started = time.perf_counter()
    suites_t = tuple(suites)

    with _CensusBuilder(jobs) as builder:
        level = [Graph((0,))]
        for k in range(1, n_max + 1):
            level_start = time.perf_counter()
            if k == 1:
                graphs: Iterable[Graph] = level
            else:
                graphs = builder.children(level)
            keep_level = k < n_max
            next_level: list[Graph] = []
            buffer: list[tuple[tuple[int, ...], tuple[str, ...], int]] = []

            def flush() -> None:
                for rec in builder.evaluate(_evaluate_graph, buffer):
                    _fold_record(report, rec)
                buffer.clear()

            for g in graphs:
                if keep_level:
                    next_level.append(g)
                if k >= n_min:
                    buffer.append((g.rows, suites_t, path_limit))
                    if len(buffer) >= 20_000:
                        flush()
            flush()
            level = next_level
            if k >= n_min:
                report.timings[f"n={k}"] = time.perf_counter() - level_start
                log.info("sweep level n=%d done in %.2fs", k, report.timings[f"n={k}"])
    report.timings["total"] = time.perf_counter() - started
    return report
