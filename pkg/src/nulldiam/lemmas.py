"""Executable checkers for the spectral deletion and reduction identities.

Each checker sweeps one structural identity over a single graph and
returns a :class:`ViolationReport` instead of asserting, so discrepancies
become data a corpus sweep can aggregate.  Checkers are deterministic
(vertices, pairs and subsets are visited in ascending order) and pure.

Two of them are expected to surface findings rather than stay empty:

* ``pendant-deletion`` checks the classical identity eta(G) = eta(G-u-w)
  for a pendant u with support w, and additionally records whether the
  weaker reading eta(G) = eta(G-w), which leaves the pendant isolated and
  is off by exactly one, happens to hold on each instance.
* ``reduction-equivalence`` tests whether "eta = n - d - 1" survives twin
  reduction in both directions.  It does not: C_4 reduces to K_2 and the
  diameter drops from 2 to 1, breaking the equivalence.  Violations where
  the diameter is preserved would contradict the identity in a stronger
  way and are flagged at high severity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .graphs import (
    DiameterPath,
    Graph,
    diameter,
    diameter_paths,
    pendant_pairs,
    reduce,
    to_graph6,
    twin_classes,
)
from .linalg import (
    adjacency_matrix,
    integer_eigenvalue_multiplicity,
    nullity,
    rank_exact,
)

SUITE_INTERLACING = "interlacing"
SUITE_TWIN_DELETION = "twin-deletion"
SUITE_PENDANT_DELETION = "pendant-deletion"
SUITE_RANK_BOUND = "rank-bound"
SUITE_TWIN_EXTENSION = "twin-extension"
SUITE_REDUCTION_EQUIVALENCE = "reduction-equivalence"
SUITE_RANK_LOWER_BOUND = "rank-lower-bound"

ALL_SUITES: tuple[str, ...] = (
    SUITE_INTERLACING,
    SUITE_TWIN_DELETION,
    SUITE_PENDANT_DELETION,
    SUITE_RANK_BOUND,
    SUITE_TWIN_EXTENSION,
    SUITE_REDUCTION_EQUIVALENCE,
    SUITE_RANK_LOWER_BOUND,
)

#: Subset sweeps over vertices outside a diameter path are exponential;
#: beyond this many outside vertices the checker reports "truncated".
MAX_OUTSIDE_SWEEP = 12

DEFAULT_MU_VALUES: tuple[int, ...] = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class Violation:
    lemma: str
    graph6: str
    witness: dict
    expected: str
    observed: str
    severity: str = "violation"

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "graph6": self.graph6,
            "witness": self.witness,
            "expected": self.expected,
            "observed": self.observed,
            "severity": self.severity,
        }


@dataclass
class ViolationReport:
    """Outcome of one checker on one graph.

    ``ok`` is true exactly when no checked instance violated the property.
    ``skipped`` carries the reason when the checker's hypothesis gate was
    not met (skipping is not a violation); ``truncated`` marks a capped
    subset sweep.  ``notes`` holds checker-specific side data such as the
    pendant checker's weak-form bookkeeping.
    """

    lemma: str
    graph6: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    skipped: str | None = None
    truncated: bool = False
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "graph6": self.graph6,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
            "skipped": self.skipped,
            "truncated": self.truncated,
            "notes": self.notes,
        }


def check_interlacing(g: Graph, mu_values: Sequence[int] = DEFAULT_MU_VALUES) -> ViolationReport:
    """Deleting one vertex moves any eigenvalue multiplicity by at most 1."""
    report = ViolationReport(SUITE_INTERLACING, to_graph6(g))
    for mu in sorted(set(mu_values)):
        m_full = integer_eigenvalue_multiplicity(g, mu)
        for v in range(g.n):
            m_del = integer_eigenvalue_multiplicity(g.without(v), mu)
            report.checked += 1
            if abs(m_full - m_del) > 1:
                report.violations.append(
                    Violation(
                        SUITE_INTERLACING,
                        report.graph6,
                        {"vertex": v, "mu": mu},
                        "|m_G(mu) - m_(G-v)(mu)| <= 1",
                        f"m_G={m_full}, m_(G-v)={m_del}",
                    )
                )
    return report


def check_twin_deletion(g: Graph) -> ViolationReport:
    """Deleting either vertex of a twin pair lowers the nullity by exactly 1."""
    report = ViolationReport(SUITE_TWIN_DELETION, to_graph6(g))
    eta = nullity(g)
    for cls in twin_classes(g):
        for i, u in enumerate(cls):
            for v in cls[i + 1 :]:
                for victim in (u, v):
                    eta_del = nullity(g.without(victim))
                    report.checked += 1
                    if eta != eta_del + 1:
                        report.violations.append(
                            Violation(
                                SUITE_TWIN_DELETION,
                                report.graph6,
                                {"twins": [u, v], "deleted": victim},
                                "eta(G) = eta(G - twin) + 1",
                                f"eta(G)={eta}, eta(G-{victim})={eta_del}",
                            )
                        )
    return report


def check_pendant_deletion(g: Graph) -> ViolationReport:
    """Removing a pendant together with its support preserves the nullity.

    The weaker per-instance reading eta(G) = eta(G - support), which keeps
    the pendant as an isolated vertex, is recorded in ``notes`` but never
    counted as the property under test.
    """
    report = ViolationReport(SUITE_PENDANT_DELETION, to_graph6(g))
    instances = []
    eta = nullity(g)
    for u, w in pendant_pairs(g):
        eta_pair = nullity(g.without(u, w))
        eta_support = nullity(g.without(w))
        report.checked += 1
        if eta != eta_pair:
            report.violations.append(
                Violation(
                    SUITE_PENDANT_DELETION,
                    report.graph6,
                    {"pendant": u, "support": w},
                    "eta(G) = eta(G - pendant - support)",
                    f"eta(G)={eta}, eta(G-u-w)={eta_pair}",
                )
            )
        instances.append(
            {
                "pendant": u,
                "support": w,
                "eta": eta,
                "eta_without_pair": eta_pair,
                "eta_without_support": eta_support,
                "support_only_form_holds": eta == eta_support,
            }
        )
    report.notes["instances"] = instances
    return report


def _extremal_gate(g: Graph, report: ViolationReport) -> tuple[int, int] | None:
    """Hypothesis gate shared by the rank-bound and twin-extension sweeps:
    the graph must be connected with eta = n - d - 1.  Returns (d, rank)
    when the gate passes, otherwise marks the report skipped."""
    if not g.is_connected():
        report.skipped = "graph is disconnected"
        return None
    d = diameter(g)
    rank = rank_exact(adjacency_matrix(g))
    if g.n - rank != g.n - d - 1:
        report.skipped = f"eta={g.n - rank} != n-d-1={g.n - d - 1}"
        return None
    return d, rank


def _outside_subsets(g: Graph, path: DiameterPath, report: ViolationReport):
    """Yield (subset, induced graph on path+subset, vertex list) for every
    subset of the vertices outside the path, or mark the report truncated."""
    on_path = set(path.vertices)
    outside = [v for v in range(g.n) if v not in on_path]
    if len(outside) > MAX_OUTSIDE_SWEEP:
        report.truncated = True
        return
    base = list(path.vertices)
    for mask in range(1 << len(outside)):
        chosen = [outside[i] for i in range(len(outside)) if mask >> i & 1]
        keep = base + chosen
        yield chosen, g.induced(keep), keep


def check_rank_bound_diam(g: Graph) -> ViolationReport:
    """On graphs with eta = n - d - 1, every induced supergraph H of a
    diameter path satisfies rank(A(H)) >= rank(A(G)) - 1."""
    report = ViolationReport(SUITE_RANK_BOUND, to_graph6(g))
    gate = _extremal_gate(g, report)
    if gate is None:
        return report
    _, rank_g = gate
    path = diameter_paths(g, limit=1)[0]
    for chosen, sub, _keep in _outside_subsets(g, path, report):
        rank_h = rank_exact(adjacency_matrix(sub))
        report.checked += 1
        if rank_h < rank_g - 1:
            report.violations.append(
                Violation(
                    SUITE_RANK_BOUND,
                    report.graph6,
                    {"path": list(path.vertices), "extra_vertices": chosen},
                    "rank(A(H)) >= rank(A(G)) - 1",
                    f"rank(H)={rank_h}, rank(G)={rank_g}",
                )
            )
    return report


def check_twin_extension(g: Graph) -> ViolationReport:
    """On graphs with eta = n - d - 1: whenever a non-adjacent vertex pair
    has equal neighbourhoods inside an induced supergraph H of a diameter
    path with rank(A(H)) >= rank(A(G)) - 1 (one vertex outside H, or both),
    the pair has equal neighbourhoods in the whole graph."""
    report = ViolationReport(SUITE_TWIN_EXTENSION, to_graph6(g))
    gate = _extremal_gate(g, report)
    if gate is None:
        return report
    _, rank_g = gate
    path = diameter_paths(g, limit=1)[0]
    for chosen, sub, keep in _outside_subsets(g, path, report):
        if rank_exact(adjacency_matrix(sub)) < rank_g - 1:
            continue
        h_mask = 0
        for v in keep:
            h_mask |= 1 << v
        in_h = sorted(keep)
        out_h = [v for v in range(g.n) if not h_mask >> v & 1]
        pairs = [(v, h) for v in out_h for h in in_h] + [
            (u, v) for i, u in enumerate(out_h) for v in out_h[i + 1 :]
        ]
        for a, b in pairs:
            if g.has_edge(a, b):
                continue
            if g.rows[a] & h_mask != g.rows[b] & h_mask:
                continue
            report.checked += 1
            if g.rows[a] != g.rows[b]:
                report.violations.append(
                    Violation(
                        SUITE_TWIN_EXTENSION,
                        report.graph6,
                        {"pair": [a, b], "subgraph": sorted(keep)},
                        "equal neighbourhoods in H imply equal neighbourhoods in G",
                        f"N({a})={g.neighbor_list(a)}, N({b})={g.neighbor_list(b)}",
                    )
                )
    return report


def check_reduction_equivalence(g: Graph) -> ViolationReport:
    """Does 'eta = n - d - 1' hold for G exactly when it holds for the
    twin-reduced graph?  Reported, never asserted: the equivalence fails
    whenever reduction shrinks the diameter (C_4 is the smallest case), and
    ``notes['diameter']`` records both diameters for every input."""
    report = ViolationReport(SUITE_REDUCTION_EQUIVALENCE, to_graph6(g))
    if g.n < 2:
        report.skipped = "needs at least two vertices"
        return report
    if not g.is_connected():
        report.skipped = "graph is disconnected"
        return report
    red = reduce(g)
    eta = nullity(g)
    eta_r = nullity(red.graph)
    lhs = eta == g.n - red.original_diameter - 1
    rhs = eta_r == red.graph.n - red.reduced_diameter - 1
    report.checked = 1
    report.notes["diameter"] = {
        "original": red.original_diameter,
        "reduced": red.reduced_diameter,
        "changed": red.original_diameter != red.reduced_diameter,
    }
    if lhs != rhs:
        severity = "violation" if red.reduced_diameter < red.original_diameter else "high"
        report.violations.append(
            Violation(
                SUITE_REDUCTION_EQUIVALENCE,
                report.graph6,
                {
                    "eta": eta,
                    "n": g.n,
                    "d": red.original_diameter,
                    "reduced_graph6": to_graph6(red.graph),
                    "eta_reduced": eta_r,
                    "n_reduced": red.graph.n,
                    "d_reduced": red.reduced_diameter,
                },
                "eta = n - d - 1 holds for G iff it holds for the reduced graph",
                f"G: {eta} vs {g.n - red.original_diameter - 1}; "
                f"reduced: {eta_r} vs {red.graph.n - red.reduced_diameter - 1}",
                severity=severity,
            )
        )
    return report


def check_rank_lower_bound(g: Graph) -> ViolationReport:
    """Odd diameter forces rank(A(G)) >= d + 1; equality cases are flagged
    as odd-extremal in ``notes`` (they are not violations)."""
    report = ViolationReport(SUITE_RANK_LOWER_BOUND, to_graph6(g))
    if not g.is_connected():
        report.skipped = "graph is disconnected"
        return report
    d = diameter(g)
    if d % 2 == 0:
        report.skipped = "diameter is even"
        return report
    rank = rank_exact(adjacency_matrix(g))
    report.checked = 1
    report.notes["odd_extremal"] = rank == d + 1
    if rank < d + 1:
        report.violations.append(
            Violation(
                SUITE_RANK_LOWER_BOUND,
                report.graph6,
                {"d": d},
                "rank(A(G)) >= d + 1",
                f"rank={rank}, d={d}",
            )
        )
    return report


_CHECKERS: dict[str, Callable[[Graph], ViolationReport]] = {
    SUITE_INTERLACING: check_interlacing,
    SUITE_TWIN_DELETION: check_twin_deletion,
    SUITE_PENDANT_DELETION: check_pendant_deletion,
    SUITE_RANK_BOUND: check_rank_bound_diam,
    SUITE_TWIN_EXTENSION: check_twin_extension,
    SUITE_REDUCTION_EQUIVALENCE: check_reduction_equivalence,
    SUITE_RANK_LOWER_BOUND: check_rank_lower_bound,
}


def run_suite(name: str, g: Graph) -> ViolationReport:
    try:
        checker = _CHECKERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(ALL_SUITES)}") from None
    return checker(g)
