"""The solvability language and its automaton.

A 1D board can be reduced to a single peg exactly when its text lies in
0* L 0*, where L is the union of the five reverse-play stages and their
mirror images plus the bases 1, 011, 110:

    L = 1 + 011 + 110
      + 11(01)* [ 00 + 00(11)+ + (11)+00 + (11)*1011 + 1101(11)* ] (10)*11
      + 11(01)*(11)*01 + 10(11)*(10)*11

The automaton is built mechanically: regex tree -> Thompson epsilon-NFA ->
epsilon elimination.  No hand minimisation; the state count is a fixed,
deterministic constant of the build.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union


@dataclass(frozen=True)
class Lit:
    symbol: str  # '0' or '1'


@dataclass(frozen=True)
class Concat:
    parts: tuple["RegexNode", ...]


@dataclass(frozen=True)
class Alt:
    parts: tuple["RegexNode", ...]


@dataclass(frozen=True)
class Star:
    child: "RegexNode"


@dataclass(frozen=True)
class Plus:
    child: "RegexNode"


RegexNode = Union[Lit, Concat, Alt, Star, Plus]


def word(text: str) -> RegexNode:
    if len(text) == 1:
        return Lit(text)
    return Concat(tuple(Lit(c) for c in text))


def seq(*parts: RegexNode) -> RegexNode:
    return Concat(tuple(parts))


def alt(*parts: RegexNode) -> RegexNode:
    return Alt(tuple(parts))


def solvable_core() -> RegexNode:
    """The language L of peg-extent solvable configurations."""
    bracket = alt(
        word("00"),
        seq(word("00"), Plus(word("11"))),
        seq(Plus(word("11")), word("00")),
        seq(Star(word("11")), word("1011")),
        seq(word("1101"), Star(word("11"))),
    )
    return alt(
        word("1"),
        word("011"),
        word("110"),
        seq(word("11"), Star(word("01")), bracket, Star(word("10")), word("11")),
        seq(word("11"), Star(word("01")), Star(word("11")), word("01")),
        seq(word("10"), Star(word("11")), Star(word("10")), word("11")),
    )


def solvable_language() -> RegexNode:
    """0* L 0* - solvable boards with any exterior holes."""
    return seq(Star(Lit("0")), solvable_core(), Star(Lit("0")))


def to_pattern(node: RegexNode) -> str:
    """Equivalent Python re pattern (independent check of the automaton)."""
    if isinstance(node, Lit):
        return node.symbol
    if isinstance(node, Concat):
        return "".join(to_pattern(p) for p in node.parts)
    if isinstance(node, Alt):
        return "(?:" + "|".join(to_pattern(p) for p in node.parts) + ")"
    if isinstance(node, Star):
        return "(?:" + to_pattern(node.child) + ")*"
    if isinstance(node, Plus):
        return "(?:" + to_pattern(node.child) + ")+"
    raise TypeError(node)


class _ThompsonBuilder:
    """Classic construction: every fragment has one start and one accept,
    the start never has incoming arcs."""

    def __init__(self) -> None:
        self.eps: list[list[int]] = []
        self.sym: list[list[tuple[str, int]]] = []

    def new_state(self) -> int:
        self.eps.append([])
        self.sym.append([])
        return len(self.eps) - 1

    def build(self, node: RegexNode) -> tuple[int, int]:
        if isinstance(node, Lit):
            s, a = self.new_state(), self.new_state()
            self.sym[s].append((node.symbol, a))
            return s, a
        if isinstance(node, Concat):
            first, last = self.build(node.parts[0])
            for part in node.parts[1:]:
                s, a = self.build(part)
                self.eps[last].append(s)
                last = a
            return first, last
        if isinstance(node, Alt):
            s, a = self.new_state(), self.new_state()
            for part in node.parts:
                ps, pa = self.build(part)
                self.eps[s].append(ps)
                self.eps[pa].append(a)
            return s, a
        if isinstance(node, Star):
            s, a = self.new_state(), self.new_state()
            ps, pa = self.build(node.child)
            self.eps[s] += [ps, a]
            self.eps[pa] += [ps, a]
            return s, a
        if isinstance(node, Plus):
            s, a = self.new_state(), self.new_state()
            ps, pa = self.build(node.child)
            self.eps[s].append(ps)
            self.eps[pa] += [ps, a]
            return s, a
        raise TypeError(node)


@dataclass(frozen=True)
class Automaton:
    """Epsilon-free NFA with a single start state and no arcs into it."""

    n_states: int
    start: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, str, int], ...]

    def successor_masks(self) -> dict[str, list[int]]:
        """Per-symbol successor sets as bitmasks, for subset simulation."""
        masks = {"0": [0] * self.n_states, "1": [0] * self.n_states}
        for a, sym, b in self.transitions:
            masks[sym][a] |= 1 << b
        return masks

    def accepts(self, text: str) -> bool:
        masks = _cached_masks(self)
        acc = 0
        for q in self.accepting:
            acc |= 1 << q
        cur = 1 << self.start
        for ch in text:
            if ch not in "01":
                raise ValueError(f"invalid board character {ch!r}")
            per_state = masks[ch]
            nxt = 0
            while cur:
                low = cur & -cur
                nxt |= per_state[low.bit_length() - 1]
                cur ^= low
            cur = nxt
            if not cur:
                return False
        return bool(cur & acc)


@lru_cache(maxsize=8)
def _cached_masks(automaton: Automaton) -> dict[str, list[int]]:
    return automaton.successor_masks()


class Matcher:
    """Subset simulation with memoised state-set transitions.

    Same semantics as Automaton.accepts, amortised to one dict lookup per
    symbol - worth it for the exhaustive board sweeps.
    """

    def __init__(self, automaton: Automaton) -> None:
        self._masks = automaton.successor_masks()
        self._accepting = 0
        for q in automaton.accepting:
            self._accepting |= 1 << q
        self._start = 1 << automaton.start
        self._step: dict[tuple[int, str], int] = {}

    def accepts(self, text: str) -> bool:
        cur = self._start
        step = self._step
        for ch in text:
            key = (cur, ch)
            nxt = step.get(key)
            if nxt is None:
                per_state = self._masks[ch]
                nxt = 0
                rest = cur
                while rest:
                    low = rest & -rest
                    nxt |= per_state[low.bit_length() - 1]
                    rest ^= low
                step[key] = nxt
            cur = nxt
            if not cur:
                return False
        return bool(cur & self._accepting)


def _eps_closures(eps: list[list[int]]) -> list[set[int]]:
    closures = []
    for s in range(len(eps)):
        seen = {s}
        stack = [s]
        while stack:
            q = stack.pop()
            for r in eps[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        closures.append(seen)
    return closures


def nfa_from_regex(node: RegexNode) -> Automaton:
    """Thompson construction followed by epsilon elimination.

    A state accepts when its closure reaches the Thompson accept; arcs are
    closure(symbol(closure(q))).  States unreachable from the start are
    dropped (renumbered in discovery order, so the build is deterministic).
    """
    builder = _ThompsonBuilder()
    start, accept = builder.build(node)
    closures = _eps_closures(builder.eps)

    n = len(builder.eps)
    arcs: dict[int, set[tuple[str, int]]] = {q: set() for q in range(n)}
    for q in range(n):
        for mid in closures[q]:
            for sym, r in builder.sym[mid]:
                for tgt in closures[r]:
                    arcs[q].add((sym, tgt))

    # keep only states reachable from the start
    order = [start]
    index = {start: 0}
    for q in order:
        for sym, r in sorted(arcs[q]):
            if r not in index:
                index[r] = len(order)
                order.append(r)

    transitions = tuple(
        sorted((index[q], sym, index[r]) for q in order for sym, r in arcs[q]
               if r in index)
    )
    accepting = frozenset(index[q] for q in order if accept in closures[q])
    automaton = Automaton(len(order), 0, accepting, transitions)
    # the DAG segmentation relies on the start having no incoming arcs
    assert all(b != automaton.start for _, _, b in transitions)
    return automaton


@lru_cache(maxsize=1)
def build_solvable_nfa() -> Automaton:
    """Automaton for 0* L 0*; recognises exactly the solvable boards."""
    return nfa_from_regex(solvable_language())
