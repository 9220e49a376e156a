"""Context-directed swap engine, census tools, and the two-player swap game."""

from .perm import (
    Perm,
    PointerWord,
    adjacencies,
    apply_cds,
    check_permutation,
    fixed_point_index,
    format_permutation,
    identity,
    is_compatible,
    is_fixed_point,
    parse_permutation,
    pointer_word,
    pointer_word_ignoring,
    reduce_adjacency,
    reduced_pointer_word,
    rotation,
    valid_contexts,
)
from .pile import (
    StrategicPile,
    contract,
    cycle_count,
    cycle_map,
    cycles,
    duration,
    has_max_pile,
    is_sortable,
    max_pile_report,
    max_pile_size,
    reachable_fixed_points,
    strategic_pile,
    uncontract,
)
from .symmetry import (
    DifferenceSequence,
    PeriodicTriple,
    Stabilizer,
    act,
    build_periodic_permutation,
    coprime_pair_count,
    count_periodic_max_pile,
    difference_sequence,
    is_valid_difference_sequence,
    orbit,
    orbit_size,
    periodic_has_max_pile,
    permutation_from_difference,
    recover_periodic_triple,
    reduce_mod,
    stabilizer,
)
from .taxonomy import (
    CensusReport,
    census,
    classify,
    constant_diff_context_count,
    context_count,
    descending,
    divisibility_report,
    evens_then_odds,
    four_two_swap,
    halved_interleave,
    has_violating_subsequence,
    incompatibility_graph,
    iter_max_pile,
    parity_report,
    universal_pointers,
)
from .game import (
    GameState,
    GrundyCache,
    Transcript,
    all_playout_lengths,
    autoplay,
    best_moves,
    children,
    grundy,
    grundy_closed_form,
    is_excellent,
    is_good,
    minimax_wins,
    winner,
    winning_conditions_report,
)

__version__ = "0.1.0"
