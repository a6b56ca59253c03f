"""Exhaustive enumeration of nonisomorphic graphs, corpus ingestion and
theorem verification with extremal witnesses.

Enumeration grows order n from order n-1 by attaching a new vertex with every
possible neighborhood and deduplicating by canonical label.  The per-order
class list and the derived invariant table are cached for the session, since
every verifier reads from them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from . import extremal
from .graphs import (
    Graph,
    Graph6Error,
    canonical_label,
    complete,
    disjoint_union,
    empty,
    from_edges,
    join,
    parse_graph6,
)
from .invariants import (
    circumference,
    count_cliques,
    detour_order,
    is_two_connected,
)

ENUM_MAX_ORDER = 10


class SearchError(Exception):
    pass


class EnumerationBudgetError(SearchError):
    """Built-in enumeration is capped; ingest an external corpus instead."""


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def extend_shard(parent_labels, n: int, shard: int = 0, nshards: int = 1) -> set[str]:
    """Canonical labels of all order-n children of the shard's parents.

    A child attaches one new vertex to a parent of order n-1 with an arbitrary
    neighborhood.  Shards partition the parent list; merging shard outputs by
    set union reproduces the unsharded result exactly.
    """
    out: set[str] = set()
    for i, label in enumerate(parent_labels):
        if i % nshards != shard:
            continue
        parent = parse_graph6(label)
        for nb in range(1 << (n - 1)):
            rows = list(parent.adj)
            for v in range(n - 1):
                if nb >> v & 1:
                    rows[v] |= 1 << (n - 1)
            rows.append(nb)
            out.add(canonical_label(Graph(n, tuple(rows))))
    return out


@lru_cache(maxsize=None)
def all_classes(n: int) -> tuple[str, ...]:
    """Canonical graph6 labels of every isomorphism class of order n, sorted."""
    if n > ENUM_MAX_ORDER:
        raise EnumerationBudgetError(
            f"built-in enumeration is capped at order {ENUM_MAX_ORDER}"
        )
    if n == 0:
        return ("?",)
    return tuple(sorted(extend_shard(all_classes(n - 1), n)))


def brute_force_classes(n: int) -> tuple[str, ...]:
    """Independent oracle: reduce all labeled graphs by canonical label."""
    if n > 6:
        raise EnumerationBudgetError("brute-force oracle is capped at order 6")
    pairs = list(combinations(range(n), 2))
    seen: set[str] = set()
    for pattern in range(1 << len(pairs)):
        g = from_edges(n, [e for i, e in enumerate(pairs) if pattern >> i & 1])
        seen.add(canonical_label(g))
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# Invariant records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphRecord:
    g6: str
    order: int
    e: int
    mindeg: int
    mindeg_mult: int
    circ: int
    detour: int
    two_connected: bool
    hamiltonian: bool
    traceable: bool
    cliques: tuple[int, ...]

    def n_s(self, s: int) -> int:
        return self.cliques[s - 1] if s <= len(self.cliques) else 0


def graph_record(g: Graph, g6: str | None = None) -> GraphRecord:
    degs = [row.bit_count() for row in g.adj]
    mindeg = min(degs) if degs else 0
    circ = circumference(g)
    det = detour_order(g) if g.n else 0
    return GraphRecord(
        g6=g6 if g6 is not None else canonical_label(g),
        order=g.n,
        e=g.size(),
        mindeg=mindeg,
        mindeg_mult=degs.count(mindeg) if degs else 0,
        circ=circ,
        detour=det,
        two_connected=is_two_connected(g),
        hamiltonian=g.n >= 3 and circ == g.n,
        traceable=g.n >= 1 and det == g.n,
        cliques=count_cliques(g).counts,
    )


@lru_cache(maxsize=None)
def class_records(n: int) -> tuple[GraphRecord, ...]:
    return tuple(graph_record(parse_graph6(g6), g6) for g6 in all_classes(n))


# ---------------------------------------------------------------------------
# Filters and ingestion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchFilter:
    """Predicate over isomorphism classes.

    min_degree_mode is "exact" or "at_least"; circumference_mode is "exact"
    or "at_most"; three-valued flags use None for "ignore".
    """

    order: int | None = None
    min_degree: int | None = None
    min_degree_mode: str = "exact"
    circumference: int | None = None
    circumference_mode: str = "exact"
    two_connected: bool | None = None
    hamiltonian: bool | None = None
    traceable: bool | None = None
    min_degree_multiplicity: int | None = None

    def __post_init__(self) -> None:
        if self.min_degree_mode not in ("exact", "at_least"):
            raise SearchError(f"bad min_degree_mode {self.min_degree_mode!r}")
        if self.circumference_mode not in ("exact", "at_most"):
            raise SearchError(f"bad circumference_mode {self.circumference_mode!r}")
        if (
            self.min_degree_multiplicity is not None
            and self.min_degree is not None
            and self.min_degree_multiplicity > self.min_degree
        ):
            raise SearchError("multiplicity q must satisfy q <= k")

    def matches(self, rec: GraphRecord) -> bool:
        if self.order is not None and rec.order != self.order:
            return False
        if self.min_degree is not None:
            if self.min_degree_mode == "exact" and rec.mindeg != self.min_degree:
                return False
            if self.min_degree_mode == "at_least" and rec.mindeg < self.min_degree:
                return False
        if self.circumference is not None:
            if self.circumference_mode == "exact" and rec.circ != self.circumference:
                return False
            if self.circumference_mode == "at_most" and rec.circ > self.circumference:
                return False
        if self.two_connected is not None and rec.two_connected != self.two_connected:
            return False
        if self.hamiltonian is not None and rec.hamiltonian != self.hamiltonian:
            return False
        if self.traceable is not None and rec.traceable != self.traceable:
            return False
        if self.min_degree_multiplicity is not None:
            if rec.mindeg_mult < self.min_degree_multiplicity:
                return False
        return True


def enumerate_graphs(n: int, filt: SearchFilter | None = None):
    """One representative per isomorphism class of order n passing the filter."""
    for rec in class_records(n):
        if filt is None or filt.matches(rec):
            yield parse_graph6(rec.g6)


def ingest_graph6(lines, filt: SearchFilter | None = None, strict: bool = True):
    """Parse graph6 lines, yielding graphs that pass the filter.

    Malformed lines raise (strict) or are skipped (non-strict); errors carry
    1-based line numbers.
    """
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            g = parse_graph6(stripped)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            continue
        if filt is None or filt.matches(graph_record(g)):
            yield g


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    params: tuple[tuple[str, int], ...]
    empirical_max: int | None
    formula_value: int | None
    witnesses: tuple[str, ...]
    verdict: str  # match | violation | empty-class | out-of-domain
    graphs_examined: int
    elapsed: float

    def param(self, key: str) -> int:
        return dict(self.params)[key]


def _report(theorem_id, params, empirical, formula, witnesses, verdict, count, t0):
    return VerificationReport(
        theorem_id=theorem_id,
        params=tuple(sorted(params.items())),
        empirical_max=empirical,
        formula_value=formula,
        witnesses=tuple(sorted(witnesses)),
        verdict=verdict,
        graphs_examined=count,
        elapsed=time.monotonic() - t0,
    )


def _max_and_witnesses(records, value):
    best = None
    wits: list[str] = []
    for rec in records:
        v = value(rec)
        if best is None or v > best:
            best = v
            wits = [rec.g6]
        elif v == best:
            wits.append(rec.g6)
    return best, wits


def max_cliques_over_class(
    n: int,
    c: int,
    k: int,
    s: int,
    degree_mode: str = "exact",
    q: int | None = None,
    records=None,
) -> VerificationReport:
    """Empirical maximum of N_s over 2-connected nonhamiltonian graphs with
    circumference c and the requested minimum-degree constraint, against the
    matching closed form."""
    t0 = time.monotonic()
    filt = SearchFilter(
        min_degree=k,
        min_degree_mode=degree_mode,
        circumference=c,
        two_connected=True,
        hamiltonian=False,
        min_degree_multiplicity=q,
    )
    if records is None:
        records = class_records(n)
    selected = [rec for rec in records if filt.matches(rec)]
    params = {"n": n, "c": c, "k": k, "s": s}
    if q is not None:
        params["q"] = q
        formula = max(extremal.f_s(n, c, k, s), extremal.g_sq(n, c, k, q, s))
    elif degree_mode == "exact":
        formula = extremal.phi_s(n, c, k, s)
    else:
        formula = extremal.h_s_bound(n, c, k, s)
    theorem = "cor17" if q is not None else ("main8" if degree_mode == "exact" else "ning_peng7")
    if not selected:
        return _report(theorem, params, None, formula, [], "empty-class", 0, t0)
    empirical, wits = _max_and_witnesses(selected, lambda r: r.n_s(s))
    verdict = "match" if empirical == formula else "violation"
    return _report(theorem, params, empirical, formula, wits, verdict, len(selected), t0)


def _nck_tuples(n: int):
    for c in range(4, n):
        for k in range(2, c // 2 + 1):
            yield c, k


def _verify_ore(n: int) -> list[VerificationReport]:
    t0 = time.monotonic()
    recs = [r for r in class_records(n) if not r.hamiltonian]
    empirical, wits = _max_and_witnesses(recs, lambda r: r.e)
    formula = comb(n - 1, 2) + 1
    expected = {canonical_label(join(complete(1), disjoint_union(complete(n - 2), complete(1))))}
    if n == 5:
        expected.add(canonical_label(join(complete(2), empty(3))))
    verdict = "match" if empirical == formula and set(wits) == expected else "violation"
    return [_report("ore", {"n": n}, empirical, formula, wits, verdict, len(recs), t0)]


def _verify_erdos(n: int) -> list[VerificationReport]:
    out = []
    for k in range(1, (n - 1) // 2 + 1):
        t0 = time.monotonic()
        recs = [
            r for r in class_records(n) if not r.hamiltonian and r.mindeg >= k
        ]
        formula = max(extremal.erdos_h(n, k), extremal.erdos_h(n, (n - 1) // 2))
        if not recs:
            out.append(_report("erdos", {"n": n, "k": k}, None, formula, [], "empty-class", 0, t0))
            continue
        empirical, wits = _max_and_witnesses(recs, lambda r: r.e)
        verdict = "match" if empirical == formula else "violation"
        out.append(_report("erdos", {"n": n, "k": k}, empirical, formula, wits, verdict, len(recs), t0))
    return out


def _verify_erdos_gallai(n: int) -> list[VerificationReport]:
    t0 = time.monotonic()
    bad = []
    count = 0
    for rec in class_records(n):
        if rec.circ == 0:
            continue
        count += 1
        if 2 * rec.e > rec.circ * (n - 1):
            bad.append(rec.g6)
    verdict = "match" if not bad else "violation"
    return [_report("erdos_gallai", {"n": n}, None, None, bad, verdict, count, t0)]


def _verify_kopylov5(n: int) -> list[VerificationReport]:
    out = []
    for c in range(4, n):
        t0 = time.monotonic()
        recs = [r for r in class_records(n) if r.two_connected and r.circ == c]
        formula = max(extremal.f_s(n, c, 2, 2), extremal.f_s(n, c, c // 2, 2))
        if not recs:
            out.append(_report("kopylov5", {"n": n, "c": c}, None, formula, [], "empty-class", 0, t0))
            continue
        empirical, wits = _max_and_witnesses(recs, lambda r: r.e)
        verdict = "match" if empirical == formula else "violation"
        out.append(_report("kopylov5", {"n": n, "c": c}, empirical, formula, wits, verdict, len(recs), t0))
    return out


def _verify_luo6(n: int, s_values) -> list[VerificationReport]:
    out = []
    for c in range(4, n):
        recs = [r for r in class_records(n) if r.two_connected and r.circ == c]
        for s in s_values:
            t0 = time.monotonic()
            formula = max(extremal.f_s(n, c, 2, s), extremal.f_s(n, c, c // 2, s))
            if not recs:
                out.append(_report("luo6", {"n": n, "c": c, "s": s}, None, formula, [], "empty-class", 0, t0))
                continue
            empirical, wits = _max_and_witnesses(recs, lambda r: r.n_s(s))
            verdict = "match" if empirical == formula else "violation"
            out.append(_report("luo6", {"n": n, "c": c, "s": s}, empirical, formula, wits, verdict, len(recs), t0))
    return out


def _verify_ning_peng7(n: int, s_values) -> list[VerificationReport]:
    records = class_records(n)
    return [
        max_cliques_over_class(n, c, k, s, degree_mode="at_least", records=records)
        for c, k in _nck_tuples(n)
        for s in s_values
    ]


def _verify_main8(n: int, s_values) -> list[VerificationReport]:
    records = class_records(n)
    return [
        max_cliques_over_class(n, c, k, s, degree_mode="exact", records=records)
        for c, k in _nck_tuples(n)
        for s in s_values
    ]


def _verify_cor13(n: int) -> list[VerificationReport]:
    records = class_records(n)
    out = []
    for c, k in _nck_tuples(n):
        rep = max_cliques_over_class(n, c, k, 2, degree_mode="exact", records=records)
        out.append(
            VerificationReport(
                "cor13", rep.params, rep.empirical_max, rep.formula_value,
                rep.witnesses, rep.verdict, rep.graphs_examined, rep.elapsed,
            )
        )
    return out


def _verify_cor14(n: int) -> list[VerificationReport]:
    out = []
    for k in range(2, (n - 1) // 2 + 1):
        t0 = time.monotonic()
        formula, families = extremal.phi_piecewise(n, k)
        recs = [
            r
            for r in class_records(n)
            if r.two_connected and not r.hamiltonian and r.mindeg == k
        ]
        if not recs:
            out.append(_report("cor14", {"n": n, "k": k}, None, formula, [], "empty-class", 0, t0))
            continue
        empirical, wits = _max_and_witnesses(recs, lambda r: r.e)
        expected = {
            canonical_label(extremal.piecewise_family_graph(n, k, fam))
            for fam in families
        }
        verdict = (
            "match" if empirical == formula and set(wits) == expected else "violation"
        )
        out.append(_report("cor14", {"n": n, "k": k}, empirical, formula, wits, verdict, len(recs), t0))
    return out


def _verify_cor16(n: int) -> list[VerificationReport]:
    out = []
    nontraceable = [r for r in class_records(n) if not r.traceable]
    groups: dict[tuple[int, int], list[GraphRecord]] = {}
    for rec in nontraceable:
        groups.setdefault((rec.detour, rec.mindeg), []).append(rec)
    for (p, k), recs in sorted(groups.items()):
        t0 = time.monotonic()
        params = {"n": n, "p": p, "k": k}
        if k < 2 or p - 1 < 2 * k or p > n - 1:
            out.append(_report("cor16", params, None, None, [], "out-of-domain", len(recs), t0))
            continue
        formula = extremal.psi(n, p, k)
        empirical, wits = _max_and_witnesses(recs, lambda r: r.e)
        verdict = "match" if empirical == formula else "violation"
        out.append(_report("cor16", params, empirical, formula, wits, verdict, len(recs), t0))
    return out


def _verify_cor17(n: int, s_values) -> list[VerificationReport]:
    records = class_records(n)
    out = []
    for c, k in _nck_tuples(n):
        t = c // 2
        for q in range(1, k + 1):
            if q > n - c - 1 + t:
                continue
            for s in s_values:
                rep = max_cliques_over_class(
                    n, c, k, s, degree_mode="exact", q=q, records=records
                )
                out.append(rep)
    return out


_VERIFIERS = {
    "ore": lambda n, s: _verify_ore(n),
    "erdos": lambda n, s: _verify_erdos(n),
    "erdos_gallai": lambda n, s: _verify_erdos_gallai(n),
    "kopylov5": lambda n, s: _verify_kopylov5(n),
    "luo6": _verify_luo6,
    "ning_peng7": _verify_ning_peng7,
    "main8": _verify_main8,
    "cor13": lambda n, s: _verify_cor13(n),
    "cor14": lambda n, s: _verify_cor14(n),
    "cor16": lambda n, s: _verify_cor16(n),
    "cor17": _verify_cor17,
}

THEOREM_IDS = tuple(sorted(_VERIFIERS))


def verify_theorem(theorem_id: str, n_values, s_values=(2,)) -> list[VerificationReport]:
    """Run one theorem's class searches over the requested parameter ranges."""
    if theorem_id not in _VERIFIERS:
        raise SearchError(f"unknown theorem id {theorem_id!r}")
    out: list[VerificationReport] = []
    for n in n_values:
        out.extend(_VERIFIERS[theorem_id](n, tuple(s_values)))
    return out
