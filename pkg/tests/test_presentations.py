from itertools import product

import pytest

from surfbraid.presentations import (
    CATALOG,
    GROUP,
    MONOID,
    Presentation,
    PresentationError,
    Relation,
    analyze_presentation,
    appendix_boundary,
    appendix_closed,
    boundary,
    boundary_star,
    braid,
    build_presentation,
    closed,
    closed_g2,
    free_central2,
    planar,
    read_presentation,
    torus2_complete_candidate,
    torus2_v1,
    torus2_v2,
    torus_n,
    write_presentation,
)


def rel_set(p):
    return {(str(r.left), str(r.right)) for r in p.relations}


def pairs(p, items):
    return {(str(p.word(l)), str(p.word(r))) for l, r in items}


def test_torus2_v2_relations():
    p = torus2_v2()
    assert p.generators == ("a", "b", "c")
    assert rel_set(p) == pairs(p, [("a a b", "b a a"), ("b b a", "a b b"), ("a a c", "c a a"),
                                   ("b b c", "c b b"), ("a a b b", "c c")])


def test_free_central2_relations():
    p = free_central2()
    assert p.generators == ("a", "b")
    assert rel_set(p) == pairs(p, [("a b b", "b b a"), ("b a a", "a a b")])


def test_boundary_211():
    p = boundary(2, 1, 1)
    assert p.generators == ("s1", "d1", "d2")
    assert sorted(r.label for r in p.relations) == ["CR2", "CR2", "SCR1"]
    scr1 = next(r for r in p.relations if r.label == "SCR1")
    assert (scr1.left, scr1.right) == (p.word("s1 d2 s1 d1 s1"), p.word("d1 s1 d2"))


def test_complete_candidate_adds_one_relation():
    p, q = torus2_v2(), torus2_complete_candidate()
    assert len(q.relations) == 6
    assert rel_set(q) - rel_set(p) == pairs(q, [("b b a a", "c c")])


@pytest.mark.parametrize("p,positive,homogeneous", [
    (planar(3, 3, [1, 3]), True, True),
    (boundary(2, 1, 1), True, False),
    (torus2_v2(), True, False),
    (braid(4), True, True),
])
def test_analysis_examples(p, positive, homogeneous):
    a = analyze_presentation(p)
    assert (a.positive, a.homogeneous) == (positive, homogeneous)
    assert len(a.abelianization) == len(p.relations)


@pytest.mark.parametrize("n,g,p", [(n, g, p) for n in (2, 3, 4) for g in (0, 1, 2) for p in (1, 2, 3)])
def test_boundary_generator_count(n, g, p):
    assert len(boundary(n, g, p).generators) == (n - 1) + (2 * g + p - 1)


def planar_params():
    for n in range(1, 5):
        for p in range(1, n + 2):
            for I in product(range(1, n + 1), repeat=p - 1):
                if len(set(I)) == p - 1 and list(I) == sorted(I):
                    yield n, p, I


@pytest.mark.parametrize("n,p,I", list(planar_params()))
def test_planar_is_homogeneous(n, p, I):
    assert analyze_presentation(planar(n, p, I)).homogeneous


def monoid_catalog():
    yield braid(4)
    yield boundary(3, 1, 2)
    yield boundary_star(2, 1, 2, 3)
    yield planar(4, 3, [2, 4])
    yield closed(3, 1)
    yield closed_g2(3, 2)
    yield torus_n(3)
    yield torus2_v1()
    yield torus2_v2()
    yield torus2_complete_candidate()
    yield free_central2()


@pytest.mark.parametrize("p", list(monoid_catalog()), ids=lambda p: p.provenance[0][:40])
def test_monoid_entries_are_positive_and_round_trip(p):
    assert p.kind == MONOID
    assert analyze_presentation(p).positive
    text = write_presentation(p)
    q = read_presentation(text)
    assert q == p
    assert write_presentation(q) == text


def test_group_entries_round_trip():
    for p in (appendix_boundary(3, 1, 2), appendix_closed(2, 1), appendix_closed(1, 1)):
        assert p.kind == GROUP
        assert read_presentation(write_presentation(p)) == p


def test_out_of_range_templates_are_dropped_with_a_note():
    p = braid(2)
    assert p.relations == ()
    assert any(note.startswith("dropped BR2") for note in p.provenance)


def test_build_is_deterministic():
    for family, params in (("boundary", (3, 2, 2)), ("closed", (3, 2)), ("planar", (4, 3, (1, 4)))):
        assert build_presentation(family, *params) == build_presentation(family, *params)
        assert write_presentation(build_presentation(family, *params)) == \
            write_presentation(build_presentation(family, *params))
    assert set(CATALOG) >= {"boundary", "planar", "closed", "torus2_v2", "free_central2", "braid"}


def test_boundary_star_appends_cr3k():
    base, star = boundary(2, 0, 3), boundary_star(2, 0, 3, 2)
    extra = [r.label for r in star.relations[len(base.relations):]]
    assert extra == ["CR3_1", "CR3'_1", "CR3_2", "CR3'_2"]


@pytest.mark.parametrize("bad", [
    lambda: boundary(0, 1, 1),
    lambda: planar(3, 3, [1]),
    lambda: build_presentation("nope"),
    lambda: build_presentation("braid", 1, 2, 3),
])
def test_invalid_parameters_rejected(bad):
    with pytest.raises(PresentationError):
        bad()


def test_monoid_kind_rejects_negative_relations():
    p = torus2_v2()
    with pytest.raises(PresentationError):
        Presentation(p.alphabet, (Relation("X", p.word("a^-1"), p.word("b")),), MONOID)


@pytest.mark.parametrize("text", ["gens: a\nrel X: a = a\n", "kind: monoid\ngens: a\nrel X a = a\n",
                                  "kind: monoid\ngens: a\nrel X: q = a\n", "kind: monoid\ngens: a\nbogus\n"])
def test_read_errors(text):
    with pytest.raises(PresentationError):
        read_presentation(text)
