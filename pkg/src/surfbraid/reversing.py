"""Word reversing for positive presentations and bounded completeness scans.

A reversing step either deletes ``u^-1 u`` or replaces ``u^-1 v`` by
``v' u'^-1`` where ``u v' = v u'`` is a relation.  When a cell of the
complement table holds several entries reversing is nondeterministic and
every branch is explored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from .presentations import Presentation, analyze_presentation
from .words import Alphabet, Word, format_letters, invert_letters

REVERSED_TO_EMPTY = "ReversedToEmpty"
TERMINAL = "Terminal"
STUCK = "Stuck"
BOUND_EXCEEDED = "BoundExceeded"

DEFAULT_MAX_STEPS = 200
DEFAULT_MAX_CONFIGURATIONS = 10**5


class ReversingError(ValueError):
    pass


@dataclass(frozen=True)
class ReversingLimits:
    max_steps: int = DEFAULT_MAX_STEPS
    max_configurations: int = DEFAULT_MAX_CONFIGURATIONS


@dataclass(frozen=True)
class ComplementTable:
    alphabet: Alphabet
    # (u, v) -> tuple of (v', u') with u v' = v u' a relation, u != v
    entries: dict = field(compare=False)

    def cell(self, u: int, v: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        return self.entries.get((u, v), ())


def build_complement_table(p: Presentation) -> ComplementTable:
    if not analyze_presentation(p).positive:
        raise ReversingError("word reversing needs a positive presentation")
    entries: dict[tuple[int, int], list] = {}
    for left, right in p.letter_relations():
        for l, r in ((left, right), (right, left)):
            if not l or not r or l[0] == r[0]:
                continue
            cell = entries.setdefault((l[0], r[0]), [])
            pair = (l[1:], r[1:])
            if pair not in cell:
                cell.append(pair)
    return ComplementTable(p.alphabet, {k: tuple(v) for k, v in sorted(entries.items())})


@dataclass(frozen=True)
class ReversalVerdict:
    status: str
    trace: tuple[tuple[int, ...], ...] = ()  # configurations from start to empty word
    terminals: frozenset = frozenset()
    stuck: frozenset = frozenset()  # (u, v) letter pairs with an empty table cell
    configurations: int = 0

    @property
    def reversed_to_empty(self) -> bool:
        return self.status == REVERSED_TO_EMPTY


def _first_reversible(w: tuple[int, ...]) -> int:
    for i in range(len(w) - 1):
        if w[i] < 0 and w[i + 1] > 0:
            return i
    return -1


def reversing_successors(t: ComplementTable, w: tuple[int, ...], i: int) -> list[tuple[int, ...]]:
    """All results of reversing the pair at position ``i``."""
    u, v = -w[i], w[i + 1]
    if u == v:
        return [w[:i] + w[i + 2:]]
    return [w[:i] + vp + invert_letters(up) + w[i + 2:] for vp, up in t.cell(u, v)]


def is_terminal(w: Sequence[int]) -> bool:
    """No negative letter is immediately followed by a positive one."""
    return _first_reversible(tuple(w)) < 0


def reverse_search(t: ComplementTable, w: Word | Sequence[int],
                   limits: ReversingLimits | None = None) -> ReversalVerdict:
    """Breadth-first exploration of all reversing branches of ``w``.

    Reversals at distinct positions commute and a reversible pair stays in
    place until it is reversed, so branching only over the leftmost pair
    reaches exactly the same terminal words.
    """
    limits = limits or ReversingLimits()
    start = tuple(w.letters if isinstance(w, Word) else w)
    parent: dict[tuple[int, ...], tuple[int, ...] | None] = {start: None}
    queue = deque([(start, 0)])
    terminals: set = set()
    stuck: set = set()
    exceeded = False
    while queue:
        cur, depth = queue.popleft()
        if not cur:
            trace = []
            node = cur
            while node is not None:
                trace.append(node)
                node = parent[node]
            return ReversalVerdict(REVERSED_TO_EMPTY, tuple(reversed(trace)), frozenset(terminals),
                                   frozenset(stuck), len(parent))
        i = _first_reversible(cur)
        if i < 0:
            terminals.add(cur)
            continue
        nxt = reversing_successors(t, cur, i)
        if not nxt:
            stuck.add((-cur[i], cur[i + 1]))
            continue
        if depth >= limits.max_steps:
            exceeded = True
            continue
        for nw in nxt:
            if nw in parent:
                continue
            if len(parent) >= limits.max_configurations:
                exceeded = True
                break
            parent[nw] = cur
            queue.append((nw, depth + 1))
    if exceeded:
        status = BOUND_EXCEEDED
    elif terminals:
        status = TERMINAL
    else:
        status = STUCK
    return ReversalVerdict(status, (), frozenset(terminals), frozenset(stuck), len(parent))


# -- completeness scan ------------------------------------------------------

@dataclass
class ScanReport:
    presentation: str
    length_bound: int
    equal_pairs: int = 0
    reversed_pairs: int = 0
    counterexamples: list = field(default_factory=list)  # reversing ends in nonempty terminal words
    stuck: list = field(default_factory=list)
    bound_exceeded: list = field(default_factory=list)

    def lines(self, alphabet: Alphabet) -> list[str]:
        fmt = lambda w: format_letters(w, alphabet)  # noqa: E731
        out = [
            f"presentation: {self.presentation}",
            f"length bound: {self.length_bound}",
            f"equal pairs: {self.equal_pairs}",
            f"reversed to empty: {self.reversed_pairs}",
            f"counterexamples: {len(self.counterexamples)}",
            f"stuck: {len(self.stuck)}",
            f"bound exceeded: {len(self.bound_exceeded)}",
        ]
        for tag, pairs in (("counterexample", self.counterexamples), ("stuck", self.stuck),
                           ("bound", self.bound_exceeded)):
            out.extend(f"{tag}: {fmt(u)} ; {fmt(v)}" for u, v in pairs)
        return out


def positive_words(n_letters: int, max_len: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(max_len + 1):
        out.extend(product(range(1, n_letters + 1), repeat=k))
    return out


def completeness_scan(p: Presentation, oracle_key: Callable[[tuple[int, ...]], object],
                      length_bound: int, limits: ReversingLimits | None = None,
                      name: str = "") -> ScanReport:
    """Check ``u^-1 v`` reverses to the empty word for every oracle-equal pair.

    ``oracle_key`` maps a positive word to a value that is equal for two
    words exactly when they represent the same monoid element.  Nothing is
    claimed about words longer than ``length_bound``.
    """
    t = build_complement_table(p)
    classes: dict[object, list[tuple[int, ...]]] = {}
    for w in positive_words(len(p.alphabet), length_bound):
        classes.setdefault(oracle_key(w), []).append(w)
    report = ScanReport(name, length_bound)
    for members in classes.values():
        for u, v in product(members, repeat=2):
            report.equal_pairs += 1
            verdict = reverse_search(t, invert_letters(u) + v, limits)
            if verdict.status == REVERSED_TO_EMPTY:
                report.reversed_pairs += 1
            elif verdict.status == BOUND_EXCEEDED:
                report.bound_exceeded.append((u, v))
            elif verdict.terminals:
                report.counterexamples.append((u, v))
            else:
                report.stuck.append((u, v))
    key = lambda uv: (len(uv[0]), uv[0], len(uv[1]), uv[1])  # noqa: E731
    for lst in (report.counterexamples, report.stuck, report.bound_exceeded):
        lst.sort(key=key)
    return report
