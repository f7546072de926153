"""Breadth-first rewriting search in finite presentations.

Monoid mode only replaces one side of a relation by the other.  Group mode
may also insert or delete an adjacent pair ``x x^-1``; inserted pairs are
limited by the maximal word length, which is the only approximation made.
Every reported path consists of genuine rewriting steps and can be replayed
with :func:`replay_path`.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .presentations import GROUP, MONOID, Presentation, relation_lattice
from .words import Word, exponent_vector

EQUAL = "Equal"
NOT_WITHIN_BOUNDS = "NotWithinBounds"

DEFAULT_MAX_STATES = 10**6


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchLimits:
    max_word_length: int
    max_states: int = DEFAULT_MAX_STATES

    def __post_init__(self):
        if self.max_word_length < 1 or self.max_states < 1:
            raise SearchError("search limits must be positive")


def default_limits(*words: Word) -> SearchLimits:
    """``2 * longest + 4`` letters; ``SBW_MAX_STATES`` overrides the state cap."""
    longest = max((len(w) for w in words), default=0)
    states = int(os.environ.get("SBW_MAX_STATES", DEFAULT_MAX_STATES))
    return SearchLimits(2 * longest + 4, states)


@dataclass(frozen=True)
class Step:
    kind: str  # "rel", "insert" or "delete"
    position: int
    relation: int = -1  # index into the presentation's relations
    forward: bool = True  # True: left side replaced by right side
    letter: int = 0  # for insert/delete: first letter of the pair
    result: tuple[int, ...] = ()


@dataclass(frozen=True)
class EqualityVerdict:
    status: str
    path: tuple[Step, ...] = ()
    states_explored: int = 0
    # True when the abelianization already separates the two words
    inequality_certified: bool = False

    @property
    def equal(self) -> bool:
        return self.status == EQUAL


@dataclass(frozen=True)
class CongruenceClass:
    members: frozenset[tuple[int, ...]]
    closed: bool
    states_explored: int

    def words(self, p: Presentation) -> list[Word]:
        return [Word(p.alphabet, m) for m in sorted(self.members, key=lambda m: (len(m), m))]


def _rules(p: Presentation) -> list[tuple[tuple[int, ...], tuple[int, ...], int, bool]]:
    rules = []
    for idx, (l, r) in enumerate(p.letter_relations()):
        if l == r:
            continue
        rules.append((l, r, idx, True))
        rules.append((r, l, idx, False))
    return rules


class _Mover:
    def __init__(self, p: Presentation, mode: str, max_len: int):
        if mode not in (GROUP, MONOID):
            raise SearchError(f"mode must be 'monoid' or 'group', not {mode!r}")
        self.mode = mode
        self.max_len = max_len
        self.by_first: dict[int, list] = {}
        for rule in _rules(p):
            lhs = rule[0]
            if not lhs:
                # an empty side matches everywhere; handled via position scan
                self.by_first.setdefault(0, []).append(rule)
            else:
                self.by_first.setdefault(lhs[0], []).append(rule)
        n = len(p.alphabet)
        self.letters = [x for i in range(1, n + 1) for x in (i, -i)]
        self.pruned = False

    def moves(self, w: tuple[int, ...]) -> Iterator[Step]:
        n = len(w)
        for i in range(n + 1):
            for lhs, rhs, idx, fwd in self._candidates(w, i):
                yield Step("rel", i, idx, fwd, 0, w[:i] + rhs + w[i + len(lhs):])
        if self.mode == GROUP:
            for i in range(n - 1):
                if w[i] == -w[i + 1]:
                    yield Step("delete", i, letter=w[i], result=w[:i] + w[i + 2:])
            if n + 2 <= self.max_len:
                for i in range(n + 1):
                    for x in self.letters:
                        yield Step("insert", i, letter=x, result=w[:i] + (x, -x) + w[i:])
            else:
                self.pruned = True

    def _candidates(self, w, i):
        n = len(w)
        out = []
        if i < n:
            for rule in self.by_first.get(w[i], ()):
                lhs = rule[0]
                if w[i:i + len(lhs)] == lhs:
                    out.append(rule)
        out.extend(self.by_first.get(0, ()))
        return out


def _bfs(p: Presentation, start: tuple[int, ...], mode: str, limits: SearchLimits, target=None):
    mover = _Mover(p, mode, limits.max_word_length)
    parent: dict[tuple[int, ...], tuple | None] = {start: None}
    queue = deque([start])
    exhausted = False
    while queue:
        w = queue.popleft()
        if target is not None and w == target:
            break
        for step in mover.moves(w):
            nw = step.result
            if nw in parent:
                continue
            if len(nw) > limits.max_word_length:
                mover.pruned = True
                continue
            if len(parent) >= limits.max_states:
                exhausted = True
                queue.clear()
                break
            parent[nw] = (w, step)
            queue.append(nw)
            if target is not None and nw == target:
                queue.clear()
                break
    return parent, exhausted or mover.pruned


def congruence_class(p: Presentation, w: Word, limits: SearchLimits | None = None,
                     mode: str | None = None) -> CongruenceClass:
    """Breadth-first closure of ``w`` under the relations of ``p``.

    ``closed`` is True only if nothing was cut off by the limits, in which
    case ``members`` is the whole class.
    """
    mode = mode or p.kind
    if w.alphabet != p.alphabet:
        raise SearchError("word and presentation use different alphabets")
    if mode == MONOID and not w.is_positive():
        raise SearchError("monoid mode needs a positive word")
    limits = limits or default_limits(w)
    parent, cut = _bfs(p, w.letters, mode, limits)
    return CongruenceClass(frozenset(parent), not cut, len(parent))


def _path_to(parent, end) -> tuple[Step, ...]:
    steps = []
    node = end
    while parent[node] is not None:
        prev, step = parent[node]
        steps.append(step)
        node = prev
    return tuple(reversed(steps))


def abelian_separated(p: Presentation, u: Word, v: Word) -> bool:
    """True when ``u`` and ``v`` differ already in the abelianization of ``p``."""
    d = [x - y for x, y in zip(exponent_vector(u), exponent_vector(v))]
    return d not in relation_lattice(p)


def bfs_equal(p: Presentation, u: Word, v: Word, mode: str | None = None,
              limits: SearchLimits | None = None) -> EqualityVerdict:
    mode = mode or p.kind
    if mode not in (GROUP, MONOID):
        raise SearchError(f"mode must be 'monoid' or 'group', not {mode!r}")
    for w in (u, v):
        if w.alphabet != p.alphabet:
            raise SearchError("word and presentation use different alphabets")
        if mode == MONOID and not w.is_positive():
            raise SearchError("monoid mode needs positive words")
    if abelian_separated(p, u, v):
        return EqualityVerdict(NOT_WITHIN_BOUNDS, (), 0, True)
    limits = limits or default_limits(u, v)
    parent, _ = _bfs(p, u.letters, mode, limits, target=v.letters)
    if v.letters in parent:
        return EqualityVerdict(EQUAL, _path_to(parent, v.letters), len(parent))
    return EqualityVerdict(NOT_WITHIN_BOUNDS, (), len(parent))


def replay_path(p: Presentation, u: Word | Sequence[int], path: Sequence[Step]) -> tuple[int, ...]:
    """Re-apply every step of ``path`` to ``u`` and return the final letters.

    Raises SearchError if some step is not a legal move.
    """
    w = tuple(u.letters if isinstance(u, Word) else u)
    rels = p.letter_relations()
    for k, step in enumerate(path):
        i = step.position
        if step.kind == "rel":
            l, r = rels[step.relation]
            lhs, rhs = (l, r) if step.forward else (r, l)
            if w[i:i + len(lhs)] != lhs:
                raise SearchError(f"step {k}: relation side not found at position {i}")
            nw = w[:i] + rhs + w[i + len(lhs):]
        elif step.kind == "delete":
            if i + 1 >= len(w) or w[i] != -w[i + 1] or w[i] != step.letter:
                raise SearchError(f"step {k}: no inverse pair at position {i}")
            nw = w[:i] + w[i + 2:]
        elif step.kind == "insert":
            if not 0 <= i <= len(w) or step.letter == 0:
                raise SearchError(f"step {k}: bad insertion")
            nw = w[:i] + (step.letter, -step.letter) + w[i:]
        else:
            raise SearchError(f"step {k}: unknown step kind {step.kind!r}")
        if nw != step.result:
            raise SearchError(f"step {k}: recorded result does not match")
        w = nw
    return w


def class_oracle(p: Presentation, length_bound: int, limits: SearchLimits | None = None):
    """Key function naming the monoid congruence class of a positive word.

    Classes are computed on demand; a class that fails to close within the
    limits makes the oracle unusable and raises SearchError.
    """
    cache: dict[tuple[int, ...], int] = {}

    def key(letters: tuple[int, ...]) -> int:
        letters = tuple(letters)
        if letters not in cache:
            w = Word(p.alphabet, letters)
            c = congruence_class(p, w, limits or default_limits(w), MONOID)
            if not c.closed:
                raise SearchError(f"class of {w} did not close; no exact oracle")
            cid = len(set(cache.values()))
            for m in c.members:
                cache[m] = cid
        return cache[letters]

    return key
