"""peglab: 1D peg solitaire solvability, strategies, and duotaire values."""

from .board import (
    BoardMode,
    GameVariant,
    Hop,
    IllegalMoveError,
    Move,
    ParseError,
    Position,
    apply_move,
    mirror,
    multihop_options,
    parse_position,
    render,
    single_hops,
    unhops,
)
from .cache import CacheFormatError, CacheRecord, cache_load, cache_store
from .duotaire import (
    MemoStore,
    NimValue,
    NoWinningMoveError,
    best_moves,
    decompose,
    grundy,
    grundy_decomposed,
    grundy_word,
    is_p_position,
    nim_sum,
)
from .families import FamilyId, family_value, family_word, palindrome_p_check
from .nfa import Automaton, build_solvable_nfa
from .oracle import brute_force_min_pegs, brute_force_solvable
from .probes import (
    boundary_crossings,
    component_value,
    distinguishing_classes,
    first_position_with_value,
    pn_language_probe,
    s_member,
    xor_witness,
)
from .solver import (
    NotSolvableError,
    ReductionPlan,
    count_solvable,
    enumerate_solvable,
    is_solvable,
    min_pegs,
    solve_to_one,
)

__all__ = [name for name in dir() if not name.startswith("_")]
