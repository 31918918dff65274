"""Batch experiments: G(n, rho) surveys, exhaustive small-order real-root
distributions and the real roots of complete graphs."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable

from .families import complete, erdos_renyi, trial_rng
from .formats import to_graph6
from .graph import GraphError, Multigraph, bridges, edge_connectivity, is_connected
from .poly import RatPoly, count_distinct_real_roots, isolate_real_roots, squarefree_part
from .reliability import (
    complete_graph_reliability,
    connected_subgraph_counts,
    f_to_h,
    h_polynomial,
)
from .roots import Verdict, certify_nonreal

# connected labeled graphs on n vertices, n = 1..6
CONNECTED_LABELED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


@dataclass(frozen=True)
class SurveyRow:
    graph_id: str
    n: int
    m: int
    d: int
    c1: int
    c2: int
    verdict: str
    real_rooted: bool
    n_distinct_real: int
    min_real_root: float | None = None
    edge_connectivity: int | None = None
    trial: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def forms_fast(G: Multigraph) -> tuple[list[int], list[int]]:
    """``(F, H)`` from connected-subgraph counts; ``F_i = N_{m-i}``."""
    counts = connected_subgraph_counts(G)
    d = G.corank
    F = [counts[G.m - i] for i in range(d + 1)]
    return F, f_to_h(F, d)


def survey_row(G: Multigraph, graph_id: str | None = None, trial: int | None = None,
               with_lambda: bool = True) -> SurveyRow:
    if not is_connected(G):
        raise GraphError("survey rows need connected graphs")
    F, H = forms_fast(G)
    n, m, d = G.n, G.m, G.corank
    c1 = len(bridges(G))
    c2 = comb(m, 2) - F[2] if d >= 2 else comb(m, 2)
    cert = certify_nonreal(G, c1=c1, c2=c2)
    h = RatPoly(H)
    real = isolate_real_roots(h, Fraction(1, 2**40))
    sf_deg = squarefree_part(h).degree if h.degree > 0 else 0
    rooted = len(real) == sf_deg
    if graph_id is None:
        graph_id = to_graph6(G) if G.is_simple() else _edge_id(G)
    return SurveyRow(
        graph_id=graph_id, n=n, m=m, d=d, c1=c1, c2=c2, verdict=cert.verdict.value,
        real_rooted=rooted, n_distinct_real=len(real),
        min_real_root=min((r.approx for r in real), default=None),
        edge_connectivity=edge_connectivity(G) if with_lambda else None,
        trial=trial,
    )


def _edge_id(G: Multigraph) -> str:
    return f"{G.n}:" + ";".join(f"{a}-{b}" for a, b in G.sorted_edges())


@dataclass
class SurveySummary:
    n: int
    rho: str
    trials: int
    seed: int
    connected: int = 0
    disconnected: int = 0
    certified: int = 0
    nonreal: int = 0
    real_rooted: int = 0
    contradictions: int = 0

    def fractions(self) -> dict:
        c = self.connected or 1
        return {"certified": self.certified / c, "nonreal": self.nonreal / c,
                "real_rooted": self.real_rooted / c}

    def to_json(self) -> dict:
        out = asdict(self)
        out["fractions"] = self.fractions()
        return out


@dataclass
class RandomSurvey:
    summary: SurveySummary
    rows: list[SurveyRow] = field(default_factory=list)

    def jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.rows)


def _rho_text(rho) -> str:
    r = Fraction(rho) if not isinstance(rho, float) else Fraction(str(rho))
    return f"{r.numerator}/{r.denominator}"


def random_survey(n: int, rho, trials: int, seed: int, out_dir: str | Path | None = None,
                  with_lambda: bool = True) -> RandomSurvey:
    """Sample ``trials`` graphs from G(n, rho); trial ``t`` uses ``trial_rng(seed, t)``.

    Disconnected samples are counted and skipped.  When ``out_dir`` is given,
    rows go to ``<stem>.jsonl`` and the summary to ``<stem>.summary.json``.
    """
    if not 4 <= n <= 12:
        raise ValueError("random_survey needs 4 <= n <= 12")
    rho_f = Fraction(str(rho)) if isinstance(rho, float) else Fraction(rho)
    if not 0 < rho_f <= 1:
        raise ValueError("rho must lie in (0, 1]")
    if trials < 1:
        raise ValueError("trials must be positive")
    summary = SurveySummary(n, _rho_text(rho_f), trials, seed)
    rows = []
    for t in range(trials):
        G = erdos_renyi(n, rho_f, trial_rng(seed, t))
        if not is_connected(G):
            summary.disconnected += 1
            continue
        row = survey_row(G, trial=t, with_lambda=with_lambda)
        summary.connected += 1
        certified = row.verdict == Verdict.CERTIFIED_NONREAL.value
        summary.certified += certified
        summary.nonreal += not row.real_rooted
        summary.real_rooted += row.real_rooted
        summary.contradictions += certified and row.real_rooted
        rows.append(row)
    result = RandomSurvey(summary, rows)
    if out_dir is not None:
        write_random_survey(result, out_dir)
    return result


def survey_stem(summary: SurveySummary) -> str:
    rho = summary.rho.replace("/", "_")
    return f"survey_n{summary.n}_rho{rho}_t{summary.trials}_seed{summary.seed}"


def write_random_survey(result: RandomSurvey, out_dir: str | Path) -> tuple[Path, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = survey_stem(result.summary)
    rows_path = out / f"{stem}.jsonl"
    summary_path = out / f"{stem}.summary.json"
    rows_path.write_text(result.jsonl())
    summary_path.write_text(json.dumps(result.summary.to_json(), indent=2, sort_keys=True) + "\n")
    return rows_path, summary_path


# -- exhaustive ------------------------------------------------------------------------


@dataclass
class ExhaustiveSurvey:
    n: int | None
    total: int
    histogram: dict[int, int]
    odd_corank: int
    parity_violations: int

    def to_json(self) -> dict:
        return {"n": self.n, "total": self.total,
                "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
                "odd_corank": self.odd_corank, "parity_violations": self.parity_violations}


def labeled_graphs(n: int) -> Iterable[Multigraph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Multigraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def exhaustive_survey(n: int | None = None, graphs: Iterable[Multigraph] | None = None) -> ExhaustiveSurvey:
    """Histogram of the number of distinct real roots of ``h`` over all
    connected labeled graphs of order ``n`` (1..6), or over ``graphs``.

    Also counts odd-corank graphs with no real root of ``h``; since ``h`` has
    positive coefficients, an odd degree forces a real root.
    """
    if graphs is None:
        if n is None or not 1 <= n <= 6:
            raise ValueError("exhaustive enumeration needs 1 <= n <= 6 (use a graph6 stream beyond)")
        graphs = labeled_graphs(n)
    cache: dict[tuple[int, ...], int] = {}
    hist: Counter = Counter()
    total = odd = bad = 0
    for G in graphs:
        if not is_connected(G):
            continue
        _, H = forms_fast(G)
        key = tuple(H)
        k = cache.get(key)
        if k is None:
            h = RatPoly(H)
            k = count_distinct_real_roots(h) if h.degree > 0 else 0
            cache[key] = k
        hist[k] += 1
        total += 1
        if G.corank % 2 == 1:
            odd += 1
            bad += k == 0
    return ExhaustiveSurvey(n, total, dict(hist), odd, bad)


# -- complete graphs ----------------------------------------------------------------------


@dataclass(frozen=True)
class KnTrendRow:
    """``min_root`` is an isolating interval ``[lo, hi]``; ``None`` when ``h``
    has no real root (even corank can give none, e.g. ``K_5``)."""

    n: int
    min_root: tuple[Fraction, Fraction] | None
    n_distinct_real: int

    @property
    def approx(self) -> float | None:
        if self.min_root is None:
            return None
        lo, hi = self.min_root
        return float((lo + hi) / 2)


@dataclass
class KnTrend:
    rows: list[KnTrendRow]

    def _rooted(self) -> list[KnTrendRow]:
        return [r for r in self.rows if r.min_root is not None]

    @property
    def strictly_decreasing(self) -> bool:
        return not self.violations()

    def violations(self) -> list[int]:
        """Orders whose minimum fails to drop below the previous recorded one."""
        rooted = self._rooted()
        return [b.n for a, b in zip(rooted, rooted[1:]) if not b.approx < a.approx]

    def csv(self) -> str:
        lines = ["n,min_real_root,n_distinct_real"]
        for r in self.rows:
            val = "" if r.approx is None else f"{r.approx:.12g}"
            lines.append(f"{r.n},{val},{r.n_distinct_real}")
        return "\n".join(lines) + "\n"


def kn_root_trend(n_max: int, eps=Fraction(1, 10**12)) -> KnTrend:
    """Smallest real root of ``h(K_n)`` for ``n = 3..n_max``."""
    if not 3 <= n_max <= 14:
        raise ValueError("kn_root_trend needs 3 <= n_max <= 14")
    rows = []
    for n in range(3, n_max + 1):
        h = h_polynomial(complete(n), complete_graph_reliability(n))
        real = isolate_real_roots(h, eps)
        low = (real[0].lo, real[0].hi) if real else None
        rows.append(KnTrendRow(n, low, len(real)))
    return KnTrend(rows)
