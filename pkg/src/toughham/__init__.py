"""toughham: exact toughness/hamiltonicity invariants and verification sweeps."""

from .graphs import (
    Graph,
    Graph6Error,
    are_remote,
    bit,
    bits,
    complete,
    complete_bipartite,
    cycle,
    empty,
    family_h,
    join,
    mask_of,
    neighbors_in_set,
    parse_graph6,
    set_neighborhood,
    to_graph6,
)
from .invariants import (
    INF,
    InvariantBundle,
    ToughnessResult,
    alpha,
    c_lambda,
    components,
    delta_lambda,
    invariant_bundle,
    is_connected,
    is_t_tough,
    max_independent_set,
    min_degree,
    sigma2,
    toughness,
    toughness_naive,
)
from .hamilton import (
    CycleSetIndex,
    DLambdaAnalysis,
    ExtensionOutcome,
    Lemma1Report,
    OrientedCycle,
    check_lemma1,
    cycle_vertex_sets,
    extend_cycle,
    hamiltonian_cycle,
    hamiltonian_cycle_backtracking,
    has_d_lambda_cycle,
    is_2_connected,
    lambda_threshold,
    select_cycle,
    spanning_cycle_on,
)
from .surgery import (
    EdgeHop,
    PathPiece,
    Segment,
    assemble,
    dist_along,
    interior,
    is_crossing,
    l_set,
    reroute_crossing,
    reroute_detour,
)
from .conditions import (
    CONDITION_IDS,
    GraphContext,
    Verdict,
    check,
    check_conjecture2,
    classify_family_h,
    threshold,
)
from .harness import (
    CampaignConfig,
    CampaignResult,
    EnumerateSource,
    FileSource,
    RandomSource,
    construct_family,
    enumerate_labeled,
    random_graphs,
    run_campaign,
    search_counterexamples,
)

__version__ = "0.1.0"
