"""Premise/conclusion checkers for the named hamiltonicity conditions.

Each check produces a Verdict with exact premise arithmetic: strict and
non-strict inequalities follow the source statements, and graphs sitting
exactly on a strict boundary are classified PremiseFails, never Consistent.
A Counterexample verdict means the premise held and the conclusion failed,
which for the established theorems would indicate a bug and for the
conjectures a genuine finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable

from .graphs import Graph, VertexSet, to_graph6
from .hamilton import (
    CycleSetIndex,
    DLambdaAnalysis,
    OrientedCycle,
    cycle_vertex_sets,
    hamiltonian_cycle,
    lambda_threshold,
)
from .invariants import (
    INF,
    Rational,
    ToughnessResult,
    alpha,
    min_degree,
    sigma2,
    toughness,
)

PREMISE_FAILS = "PremiseFails"
CONSISTENT = "Consistent"
COUNTEREXAMPLE = "Counterexample"

THEOREM_IDS = ("dirac", "ore", "bauer", "jung", "bcl", "bvms", "main")
CONJECTURE_IDS = ("conj1", "conj2")
CONDITION_IDS = THEOREM_IDS + CONJECTURE_IDS

# sigma2-or-delta premise, needs an explicit t, strict inequality, minimum n,
# and a toughness floor (value, strict) for the fixed-t statements
_SPECS = {
    "dirac": ("delta", False, False, 3, None),
    "ore": ("sigma2", False, False, 3, None),
    "bauer": ("delta", True, True, 3, None),
    "main": ("sigma2", True, True, 3, None),
    "conj1": ("sigma2", True, True, 3, None),
    "jung": ("sigma2", False, False, 11, (Fraction(1), False)),
    "bcl": ("sigma2", False, False, 30, (Fraction(1), True)),
    "bvms": ("sigma2", False, False, 3, (Fraction(2), False)),
}

_ALIASES = {"bauer_degree": "bauer"}


def canonical_condition(condition: str) -> str:
    condition = _ALIASES.get(condition, condition)
    if condition not in CONDITION_IDS:
        raise ValueError(f"unknown condition {condition!r}")
    return condition


def threshold(condition: str, n: int, t: Rational | None = None) -> Fraction:
    """Exact premise threshold of a condition at order n (and t if used)."""
    condition = canonical_condition(condition)
    if condition in ("main", "conj1", "conj2", "bauer"):
        if t is None:
            raise ValueError(f"condition {condition!r} needs t")
        t = Fraction(t)
        if t <= 0:
            raise ValueError(f"condition {condition!r} needs t > 0, got {t}")
        if condition == "main":
            return 2 * n / (t + 1) + t - 2
        if condition == "bauer":
            return Fraction(n) / (t + 1) - 1
        return 2 * n / (t + 1) - 2  # conj1 and conj2 share the boundary
    return {
        "dirac": Fraction(n, 2),
        "ore": Fraction(n),
        "jung": Fraction(n - 4),
        "bcl": Fraction(n - 7),
        "bvms": Fraction(2 * n, 3),
    }[condition]


class GraphContext:
    """Lazily computed per-graph invariants shared across checks."""

    def __init__(self, g: Graph, graph6: str | None = None):
        self.g = g
        self.graph6 = graph6 if graph6 is not None else to_graph6(g).decode("ascii")

    @cached_property
    def tau(self) -> ToughnessResult:
        return toughness(self.g)

    @cached_property
    def sigma2(self) -> int | float:
        return sigma2(self.g)

    @cached_property
    def delta(self) -> int:
        return min_degree(self.g)

    @cached_property
    def alpha(self) -> int:
        return alpha(self.g)

    @cached_property
    def ham(self) -> OrientedCycle | None:
        return hamiltonian_cycle(self.g)

    @cached_property
    def index(self) -> CycleSetIndex:
        return cycle_vertex_sets(self.g)

    @cached_property
    def lambda_analysis(self) -> DLambdaAnalysis | None:
        if self.index.flags == 0:
            return None
        return lambda_threshold(self.g, policy="A", index=self.index)


@dataclass(frozen=True)
class Verdict:
    condition: str
    graph6: str
    n: int
    t_used: Rational | None
    premise_value: int | float | None
    threshold_value: Fraction | None
    premise_holds: bool
    hamiltonian: bool
    conclusion_holds: bool
    status: str
    witness_cycle: tuple[int, ...] | None = None
    witness_cut: VertexSet | None = None
    witness_decomposition: tuple[VertexSet, VertexSet] | None = None

    def recomputed_status(self) -> str:
        """Status re-derived from the stored flags (audit helper)."""
        if not self.premise_holds:
            return PREMISE_FAILS
        return CONSISTENT if self.conclusion_holds else COUNTEREXAMPLE


def _status(premise: bool, conclusion: bool) -> str:
    if not premise:
        return PREMISE_FAILS
    return CONSISTENT if conclusion else COUNTEREXAMPLE


def _t_candidates(condition: str, n: int, tau: Fraction, policy) -> list[Fraction]:
    """The t values scanned for a t-parameterized premise.

    ``auto`` uses tau itself, which is optimal whenever the threshold is
    decreasing in t over (0, tau]; the one formula with an interior minimum
    (the +t term) additionally gets an eighth-integer grid when tau lies
    past the stationary point, i.e. when (tau+1)^2 > 2n.
    """
    if isinstance(policy, Fraction):
        return [policy]
    grid_wanted = policy == "grid" or (condition == "main" and (tau + 1) ** 2 > 2 * n)
    cands = [tau]
    if grid_wanted:
        k = 1
        while Fraction(k, 8) < tau:
            cands.append(Fraction(k, 8))
            k += 1
    return cands


def check(g: Graph, condition: str, t: Rational | str = "auto",
          ctx: GraphContext | None = None) -> Verdict:
    """Evaluate one named condition on one graph.

    ``t`` is "auto" (instantiate at the graph's exact toughness, plus the
    documented grid for the one non-monotone threshold), "grid", or a fixed
    rational; fixed t additionally requires the graph to be t-tough as part
    of the premise.
    """
    condition = canonical_condition(condition)
    if ctx is None:
        ctx = GraphContext(g)
    if condition == "conj2":
        return check_conjecture2(g, ctx=ctx)

    uses, needs_t, strict, min_n, tough_floor = _SPECS[condition]
    value = ctx.sigma2 if uses == "sigma2" else ctx.delta
    ham = ctx.ham
    hamiltonian = ham is not None
    witness_cycle = ham.vertices if ham else None
    tau = ctx.tau.value

    def verdict(premise, t_used, thr):
        return Verdict(
            condition=condition,
            graph6=ctx.graph6,
            n=g.n,
            t_used=t_used,
            premise_value=value,
            threshold_value=thr,
            premise_holds=premise,
            hamiltonian=hamiltonian,
            conclusion_holds=hamiltonian,
            status=_status(premise, hamiltonian),
            witness_cycle=witness_cycle,
            witness_cut=ctx.tau.witness_cut,
        )

    if g.n < min_n:
        return verdict(False, None, None)

    if not needs_t:
        thr = threshold(condition, g.n)
        if tough_floor is not None:
            floor, floor_strict = tough_floor
            tough_ok = tau > floor if floor_strict else tau >= floor
            if not tough_ok:
                return verdict(False, None, thr)
        holds = value > thr if strict else value >= thr
        return verdict(holds, None, thr)

    # t-parameterized premises
    if t == "auto" or t == "grid":
        if tau == INF:
            # complete graphs are t-tough for every t; the premise value is
            # infinite (or n-1 > any attainable bound for delta), so it holds
            return verdict(True, INF, None)
        if tau <= 0:
            return verdict(False, None, None)
        best = None  # (threshold, t, premise)
        for cand in _t_candidates(condition, g.n, tau, t):
            thr = threshold(condition, g.n, cand)
            if best is None or (thr, cand) < (best[0], best[1]):
                best = (thr, cand)
        thr, t_used = best
        holds = value > thr if strict else value >= thr
        return verdict(holds, t_used, thr)

    t = Fraction(t)
    if t <= 0:
        raise ValueError(f"fixed t must be positive, got {t}")
    thr = threshold(condition, g.n, t)
    tough_ok = tau >= t
    holds = tough_ok and (value > thr if strict else value >= thr)
    return verdict(holds, t, thr)


def classify_family_h(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Split V into (A, I) with I independent of size (n+1)/2 fully joined
    to A, or None.  Membership forces I to be exactly the vertices of degree
    (n-1)/2, so the test is a single degree pass."""
    n = g.n
    if n < 3 or n % 2 == 0:
        return None
    half = (n - 1) // 2
    i_mask = 0
    for v in range(n):
        if g.degree(v) == half:
            i_mask |= 1 << v
    if i_mask.bit_count() != half + 1:
        return None
    a_mask = g.full_mask & ~i_mask
    for v in range(n):
        if i_mask >> v & 1 and g.adj[v] != a_mask:
            return None
    return a_mask, i_mask


def check_conjecture2(g: Graph, ctx: GraphContext | None = None) -> Verdict:
    """Boundary classification: sigma2 exactly 2n/(tau+1) - 2 and
    non-hamiltonian should force membership in the join family."""
    if ctx is None:
        ctx = GraphContext(g)
    tau = ctx.tau.value
    value = ctx.sigma2
    ham = ctx.ham
    hamiltonian = ham is not None
    if tau == INF:
        thr = None
        premise = False  # complete: sigma2 infinite, and hamiltonian anyway
        t_used = INF
    else:
        thr = 2 * g.n / (Fraction(tau) + 1) - 2
        premise = (not hamiltonian) and value == thr
        t_used = tau
    decomposition = classify_family_h(g)
    member = decomposition is not None
    return Verdict(
        condition="conj2",
        graph6=ctx.graph6,
        n=g.n,
        t_used=t_used,
        premise_value=value,
        threshold_value=thr,
        premise_holds=premise,
        hamiltonian=hamiltonian,
        conclusion_holds=member,
        status=_status(premise, member),
        witness_cycle=ham.vertices if ham else None,
        witness_cut=ctx.tau.witness_cut,
        witness_decomposition=decomposition,
    )


# Extra checks (used by fixtures and experiments); each maps a context to a
# Verdict and is addressed by its registry id like the built-ins.
CUSTOM_CHECKS: dict[str, Callable[[GraphContext], Verdict]] = {}


def register_check(check_id: str, fn: Callable[[GraphContext], Verdict]) -> None:
    if check_id in CONDITION_IDS:
        raise ValueError(f"{check_id!r} is a built-in condition")
    CUSTOM_CHECKS[check_id] = fn


def unregister_check(check_id: str) -> None:
    CUSTOM_CHECKS.pop(check_id, None)


def run_check(ctx: GraphContext, check_id: str, t: Rational | str = "auto") -> Verdict:
    if check_id in CUSTOM_CHECKS:
        return CUSTOM_CHECKS[check_id](ctx)
    return check(ctx.g, check_id, t=t, ctx=ctx)
