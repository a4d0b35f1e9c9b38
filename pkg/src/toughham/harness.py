"""Corpus sweeps: ingest graph6 streams, evaluate checks per graph in
parallel, and emit deterministic JSONL/CSV reports.

Per-graph work is pure, so campaigns are an order-preserving parallel map;
reports are identical for any worker count.  A Counterexample verdict for a
conjecture is a reportable finding, not a crash: campaigns always complete
and the summary carries the offending graph6 strings.
"""

from __future__ import annotations

import csv
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import combinations
from multiprocessing import Pool
from typing import IO, Iterable, Iterator, Union

from .conditions import (
    CONJECTURE_IDS,
    COUNTEREXAMPLE,
    CONSISTENT,
    CUSTOM_CHECKS,
    PREMISE_FAILS,
    GraphContext,
    Verdict,
    run_check,
)
from .graphs import (
    Graph,
    Graph6Error,
    bits,
    complete,
    complete_bipartite,
    cycle,
    empty,
    family_h,
    parse_graph6,
    to_graph6,
)
from .hamilton import INDEX_ORDER_CAP, check_lemma1, extend_cycle, spanning_cycle_on
from .invariants import INF, Rational, rational_str

GRAPH6_HEADER_LINE = b">>graph6<<"

LEMMA_CHECK_IDS = ("lemma1", "lemma2", "lemma3")
ENUMERATOR_ORDER_CAP = 7


# ---------------------------------------------------------------------------
# Input sources
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FileSource:
    path: str


@dataclass(frozen=True)
class EnumerateSource:
    """All labeled graphs on n vertices (2^(n choose 2) lines)."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= ENUMERATOR_ORDER_CAP:
            raise ValueError(f"labeled enumerator supports n <= {ENUMERATOR_ORDER_CAP}")


@dataclass(frozen=True)
class RandomSource:
    seed: int
    n: int
    edge_probability: float
    count: int

    def __post_init__(self):
        if self.seed is None:
            raise ValueError("random source requires an explicit seed")


Source = Union[FileSource, EnumerateSource, RandomSource]


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in edge-bitmap order."""
    if not 1 <= n <= ENUMERATOR_ORDER_CAP:
        raise ValueError(f"labeled enumerator supports 1 <= n <= {ENUMERATOR_ORDER_CAP}")
    pairs = list(combinations(range(n), 2))
    for bitmap in range(1 << len(pairs)):
        yield Graph(n, (pairs[i] for i in range(len(pairs)) if bitmap >> i & 1))


def random_graphs(seed: int, n: int, p: float, count: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield Graph(n, ((u, v) for u, v in combinations(range(n), 2) if rng.random() < p))


def iter_source_lines(source: Source) -> Iterator[tuple[int, bytes]]:
    """Yield (input index, graph6 line) pairs; header lines are yielded too
    and classified by the worker so the line accounting stays exact."""
    if isinstance(source, FileSource):
        with open(source.path, "rb") as fh:
            index = 0
            for raw in fh:
                line = raw.rstrip(b"\r\n")
                if not line and raw in (b"\n", b"\r\n"):
                    continue  # blank separator lines carry no record
                yield index, line
                index += 1
    elif isinstance(source, EnumerateSource):
        for index, g in enumerate(enumerate_labeled(source.n)):
            yield index, to_graph6(g)
    else:
        graphs = random_graphs(
            source.seed, source.n, source.edge_probability, source.count
        )
        for index, g in enumerate(graphs):
            yield index, to_graph6(g)


# ---------------------------------------------------------------------------
# Campaign configuration and records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CampaignConfig:
    source: Source
    checks: tuple[str, ...]
    t_policy: Union[str, Fraction] = "auto"  # "auto" | "grid" | fixed Fraction
    jobs: int = 1
    out_path: str | None = None
    out_format: str = "jsonl"
    include_timing: bool = True

    def __post_init__(self):
        if not self.checks:
            raise ValueError("campaign needs at least one check")
        if self.out_format not in ("jsonl", "csv"):
            raise ValueError(f"unknown format {self.out_format!r}")


@dataclass
class CampaignResult:
    records: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def counterexamples(self) -> list[dict]:
        return self.summary.get("counterexamples", [])


def _verdict_payload(v: Verdict) -> dict:
    payload = {
        "status": v.status,
        "t_used": rational_str(v.t_used),
        "premise_value": rational_str(v.premise_value)
        if v.premise_value is not None
        else None,
        "threshold": rational_str(v.threshold_value),
    }
    if v.witness_cycle is not None:
        payload["witness_cycle"] = list(v.witness_cycle)
    if v.witness_cut is not None:
        payload["witness_cut"] = sorted(bits(v.witness_cut))
    if v.witness_decomposition is not None:
        a, i = v.witness_decomposition
        payload["witness_decomposition"] = {
            "join_side": sorted(bits(a)),
            "independent_side": sorted(bits(i)),
        }
    return payload


def _lemma1_payload(ctx: GraphContext) -> dict:
    tau = ctx.tau.value
    report = check_lemma1(ctx.g, tau, index=ctx.index if ctx.g.n <= INDEX_ORDER_CAP else None)
    if not report.applicable:
        return {"status": PREMISE_FAILS, "reason": report.reason}
    margins = [
        {"component": sorted(bits(comp)), "margin": str(m)}
        for comp, m in report.margins
    ]
    min_margin = min((m for _, m in report.margins))
    return {
        "status": CONSISTENT if report.holds else COUNTEREXAMPLE,
        "t_used": rational_str(report.t),
        "lambda": report.lam,
        "margins": margins,
        "min_margin": str(min_margin),
    }


def _lemma2_payload(ctx: GraphContext) -> dict:
    tau = ctx.tau.value
    if tau == INF:
        return {"status": PREMISE_FAILS, "reason": "complete graph"}
    if tau == 0:
        return {"status": PREMISE_FAILS, "reason": "toughness 0 (needs t > 0)"}
    margin = ctx.g.n - ctx.alpha * (Fraction(tau) + 1)
    return {
        "status": CONSISTENT if margin >= 0 else COUNTEREXAMPLE,
        "t_used": rational_str(tau),
        "alpha": ctx.alpha,
        "margin": str(margin),
    }


def _lemma3_payload(ctx: GraphContext) -> dict:
    g = ctx.g
    tau = ctx.tau.value
    if tau != INF and tau < 1:
        return {"status": PREMISE_FAILS, "reason": "toughness below 1"}
    if g.n > INDEX_ORDER_CAP:
        return {"status": PREMISE_FAILS, "reason": "order too large for cycle index"}
    thr = Fraction(-1) if tau == INF else Fraction(g.n) / (Fraction(tau) + 1) - 1
    attempts = 0
    failures = []
    for t_mask in ctx.index.iter_flagged():
        if t_mask == g.full_mask:
            continue
        cyc = None
        for x in bits(g.full_mask & ~t_mask):
            if (g.adj[x] & t_mask).bit_count() <= thr:
                continue
            if cyc is None:
                cyc = spanning_cycle_on(g, t_mask)
            attempts += 1
            outcome = extend_cycle(g, cyc, x, tau)
            assert outcome.premise_held
            if not outcome.succeeded:
                failures.append({"cycle_set": sorted(bits(t_mask)), "vertex": x})
    payload = {
        "status": CONSISTENT if not failures else COUNTEREXAMPLE,
        "t_used": rational_str(tau),
        "attempts": attempts,
    }
    if failures:
        payload["failures"] = failures
    return payload


def evaluate_check(ctx: GraphContext, check_id: str, t_policy) -> dict:
    if check_id == "lemma1":
        return _lemma1_payload(ctx)
    if check_id == "lemma2":
        return _lemma2_payload(ctx)
    if check_id == "lemma3":
        return _lemma3_payload(ctx)
    return _verdict_payload(run_check(ctx, check_id, t=t_policy))


def compute_record(line: bytes, checks: tuple[str, ...], t_policy,
                   include_timing: bool = True) -> dict:
    """Full per-graph report record; raises Graph6Error on malformed input."""
    started = time.perf_counter()
    g = parse_graph6(line)
    ctx = GraphContext(g)
    if g.n <= INDEX_ORDER_CAP and ctx.index.flags:
        lam_threshold = ctx.lambda_analysis.threshold
    else:
        lam_threshold = None
    record = {
        "graph6": ctx.graph6,
        "n": g.n,
        "edges": g.edge_count(),
        "tau": rational_str(ctx.tau.value),
        "sigma2": rational_str(ctx.sigma2),
        "delta": ctx.delta,
        "alpha": ctx.alpha,
        "hamiltonian": ctx.ham is not None,
        "lambda_threshold": lam_threshold,
        "checks": {cid: evaluate_check(ctx, cid, t_policy) for cid in checks},
    }
    if include_timing:
        record["wall_ms"] = round((time.perf_counter() - started) * 1000, 3)
    return record


def _worker(item: tuple[int, bytes], checks: tuple[str, ...], t_policy,
            include_timing: bool) -> tuple[int, dict | None, dict | None]:
    index, line = item
    if line.startswith(GRAPH6_HEADER_LINE) and len(line) == len(GRAPH6_HEADER_LINE):
        return index, None, {"index": index, "reason": "header", "offset": 0}
    try:
        record = compute_record(line, checks, t_policy, include_timing)
    except Graph6Error as err:
        return index, None, {
            "index": index,
            "reason": str(err),
            "offset": err.offset,
            "line": line.decode("ascii", errors="replace"),
        }
    return index, record, None


def run_campaign(cfg: CampaignConfig) -> CampaignResult:
    """Process every input graph exactly once and aggregate statuses.

    Records come back ordered by input index no matter how many workers run;
    malformed lines are skipped, counted, and reported with their offsets.
    """
    checks = tuple(dict.fromkeys(cfg.checks))
    for cid in checks:
        if cid not in LEMMA_CHECK_IDS and cid not in CUSTOM_CHECKS:
            from .conditions import canonical_condition

            canonical_condition(cid)  # raises on unknown ids
    work = partial(
        _worker, checks=checks, t_policy=cfg.t_policy, include_timing=cfg.include_timing
    )
    result = CampaignResult()
    items = iter_source_lines(cfg.source)
    if cfg.jobs <= 1:
        outputs = map(work, items)
        outputs = list(outputs)
    else:
        with Pool(processes=cfg.jobs) as pool:
            outputs = list(pool.imap(work, items, chunksize=64))
    outputs.sort(key=lambda out: out[0])

    status_counts = {cid: {PREMISE_FAILS: 0, CONSISTENT: 0, COUNTEREXAMPLE: 0} for cid in checks}
    counterexamples = []
    for _, record, skip in outputs:
        if skip is not None:
            result.skipped.append(skip)
            continue
        result.records.append(record)
        for cid in checks:
            status = record["checks"][cid]["status"]
            status_counts[cid][status] += 1
            if status == COUNTEREXAMPLE:
                counterexamples.append({"check": cid, "graph6": record["graph6"]})
    result.summary = {
        "input_lines": len(outputs),
        "processed": len(result.records),
        "skipped": len(result.skipped),
        "checks": status_counts,
        "counterexamples": counterexamples,
    }
    return result


def search_counterexamples(cfg: CampaignConfig) -> list[str]:
    """The graph6 strings whose verdict is Counterexample for any requested
    check; an empty list is a meaningful (clean) result."""
    result = run_campaign(cfg)
    seen = dict.fromkeys(ce["graph6"] for ce in result.counterexamples)
    return list(seen)


# ---------------------------------------------------------------------------
# Family construction
# ---------------------------------------------------------------------------

FAMILY_IDS = ("kbip", "familyH", "complete", "cycle")


def construct_family(family: str, n: int | None = None,
                     h: Graph | None = None) -> list[Graph]:
    """Instantiate one of the named graph families as labeled graphs."""
    if family == "kbip":
        if n is None or n < 3 or n % 2 == 0:
            raise ValueError("kbip needs an odd order n >= 3")
        return [complete_bipartite((n - 1) // 2, (n + 1) // 2)]
    if family == "familyH":
        if h is None:
            if n is None or n < 3 or n % 2 == 0:
                raise ValueError("familyH needs an odd order n >= 3 or an explicit h part")
            h = empty((n - 1) // 2)
        built = family_h(h)
        if n is not None and built.n != n:
            raise ValueError(f"h part of order {h.n} yields n={built.n}, not {n}")
        return [built]
    if family == "complete":
        if n is None or n < 1:
            raise ValueError("complete needs an order n >= 1")
        return [complete(n)]
    if family == "cycle":
        if n is None or n < 3:
            raise ValueError("cycle needs an order n >= 3")
        return [cycle(n)]
    raise ValueError(f"unknown family {family!r}; choose from {FAMILY_IDS}")


# ---------------------------------------------------------------------------
# Report output
# ---------------------------------------------------------------------------


def strip_timing(record: dict) -> dict:
    return {k: v for k, v in record.items() if k != "wall_ms"}


def write_jsonl(records: Iterable[dict], fh: IO[str]) -> None:
    for record in records:
        fh.write(json.dumps(record, sort_keys=True))
        fh.write("\n")


CSV_COLUMNS = (
    "graph6", "n", "edges", "tau", "sigma2", "delta", "alpha",
    "hamiltonian", "lambda_threshold", "check", "status", "t_used",
    "premise_value", "threshold",
)


def write_csv(records: Iterable[dict], fh: IO[str]) -> None:
    """Flat projection: one row per (graph, check)."""
    writer = csv.writer(fh)
    writer.writerow(CSV_COLUMNS)
    for record in records:
        base = [record[k] for k in CSV_COLUMNS[:9]]
        for cid, payload in record["checks"].items():
            writer.writerow(base + [
                cid,
                payload.get("status"),
                payload.get("t_used"),
                payload.get("premise_value"),
                payload.get("threshold"),
            ])


def write_report(result: CampaignResult, path: str, fmt: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if fmt == "jsonl":
            write_jsonl(result.records, fh)
        else:
            write_csv(result.records, fh)
