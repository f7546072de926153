import pytest

from surfbraid import ces_solver as cs
from surfbraid.presentations import braid, read_presentation, free_central2, torus2_complete_candidate, torus2_v2
from surfbraid.reversing import (
    BOUND_EXCEEDED,
    REVERSED_TO_EMPTY,
    STUCK,
    TERMINAL,
    ReversingError,
    ReversingLimits,
    _first_reversible,
    build_complement_table,
    completeness_scan,
    is_terminal,
    reverse_search,
    reversing_successors,
)
from surfbraid.rewrite_search import class_oracle
from surfbraid.words import Word, invert_letters

T = cs.INSTANCES["torus3"]
CAND = torus2_complete_candidate()


def L(text, p=CAND):
    return p.word(text).letters


def test_complement_table_examples():
    t = build_complement_table(CAND)
    assert set(t.cell(1, 2)) == {(L("a b"), L("a a")), (L("b b"), L("b a"))}
    assert set(t.cell(1, 3)) == {(L("a c"), L("a a")), (L("a b b"), L("c"))}
    assert t.cell(1, 1) == ()


def test_table_rejects_non_positive():
    with pytest.raises(ReversingError):
        build_complement_table(torus2_v2().as_kind("group").__class__(
            CAND.alphabet, (CAND.relations[0].__class__("X", CAND.word("a^-1"), CAND.word("b")),), "group"))


def test_reverse_examples():
    t = build_complement_table(CAND)
    assert reverse_search(t, CAND.word("a^-1 a")).status == REVERSED_TO_EMPTY
    assert reverse_search(t, CAND.word("c^-1 c")).status == REVERSED_TO_EMPTY
    v = reverse_search(t, CAND.word("a^-1 b"))
    assert v.status == TERMINAL
    assert v.terminals == {L("a b a^-1 a^-1"), L("b b a^-1 b^-1")}


def test_terminal_shape_and_step_soundness():
    for p in (CAND, torus2_v2()):
        t = build_complement_table(p)
        for text in ("a^-1 b c", "c^-1 a a b", "b^-1 a^-1 c b", "c^-1 b^-1 a a"):
            w = p.word(text).letters
            v = reverse_search(t, w, ReversingLimits(30, 2000))
            for term in v.terminals:
                assert is_terminal(term)
                assert cs.normal_form(T, Word(T.alphabet, term)) == cs.normal_form(T, Word(T.alphabet, w))
            # walk a few branches step by step
            frontier = [w]
            for _ in range(6):
                nxt = []
                for cur in frontier:
                    i = _first_reversible(cur)
                    if i < 0:
                        continue
                    for s in reversing_successors(t, cur, i):
                        assert cs.equal(T, Word(T.alphabet, s), Word(T.alphabet, cur))
                        nxt.append(s)
                frontier = nxt[:20]


def test_trace_is_a_reversing_sequence():
    t = build_complement_table(CAND)
    v = reverse_search(t, CAND.word("c^-1 c^-1 a a b b"))
    assert v.status == REVERSED_TO_EMPTY
    assert v.trace[0] == L("c^-1 c^-1 a a b b") and v.trace[-1] == ()
    for a, b in zip(v.trace, v.trace[1:]):
        assert b in reversing_successors(t, a, _first_reversible(a))


def test_stuck_and_bound_statuses():
    free = read_presentation("kind: monoid\ngens: a b\n")
    v = reverse_search(build_complement_table(free), free.word("a^-1 b"))
    assert v.status == STUCK and v.stuck == {(1, 2)}
    t = build_complement_table(CAND)
    v = reverse_search(t, CAND.word("a^-1 b"), ReversingLimits(max_steps=0))
    assert v.status == BOUND_EXCEEDED


def test_reversing_is_sound_against_the_oracle():
    p = braid(3)
    key = class_oracle(p, 4)
    t = build_complement_table(p)
    from surfbraid.reversing import positive_words
    words = positive_words(2, 3)
    for u in words:
        for v in words:
            if reverse_search(t, invert_letters(u) + v).reversed_to_empty:
                assert key(u) == key(v)


def test_scan_examples():
    b = braid(3)
    r = completeness_scan(b, class_oracle(b, 4), 4)
    assert r.counterexamples == [] and r.stuck == [] and r.bound_exceeded == []
    key = lambda w: cs.normal_form(T, Word(T.alphabet, w))  # noqa: E731
    r = completeness_scan(torus2_v2(), key, 3)
    assert r.reversed_pairs + len(r.counterexamples) + len(r.stuck) + len(r.bound_exceeded) == r.equal_pairs
    assert r.bound_exceeded == sorted(r.bound_exceeded, key=lambda uv: (len(uv[0]), uv[0], len(uv[1]), uv[1]))
    f = cs.INSTANCES["free2"]
    r = completeness_scan(free_central2(), lambda w: cs.normal_form(f, Word(f.alphabet, w)), 3)
    assert r.equal_pairs > 0
    assert r.lines(free_central2().alphabet)[0].startswith("presentation")
