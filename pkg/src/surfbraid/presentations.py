"""Finite presentations and the catalog of positive surface braid presentations.

Generator naming used throughout the catalog:

    s<i>    sigma_i (classical braid generators)
    d<r>    delta_r (surface loops based at the first puncture)
    rho<r>  planar generators indexed by the set I
    a<r> b<r> z<j>   generators of the non-positive boundary presentation
    t<i> b<r>        generators of the non-positive closed presentation
    a b c   generators of the two-strand torus presentations
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lattice import Lattice, hermite_lattice
from .words import Alphabet, Word, WordSyntaxError, exponent_vector, format_word, parse_word

GROUP = "group"
MONOID = "monoid"


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    label: str
    left: Word
    right: Word

    def __str__(self) -> str:
        return f"{self.label}: {format_word(self.left)} = {format_word(self.right)}"


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relations: tuple[Relation, ...]
    kind: str = GROUP
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if self.kind not in (GROUP, MONOID):
            raise PresentationError(f"unknown presentation kind {self.kind!r}")
        for rel in self.relations:
            if rel.left.alphabet != self.alphabet or rel.right.alphabet != self.alphabet:
                raise PresentationError(f"relation {rel.label} is over another alphabet")
            if self.kind == MONOID and not (rel.left.is_positive() and rel.right.is_positive()):
                raise PresentationError(f"monoid relation {rel.label} is not positive")

    @property
    def generators(self) -> tuple[str, ...]:
        return self.alphabet.names

    def word(self, text: str) -> Word:
        return parse_word(text, self.alphabet)

    def as_kind(self, kind: str) -> "Presentation":
        return Presentation(self.alphabet, self.relations, kind, self.provenance)

    def letter_relations(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return [(r.left.letters, r.right.letters) for r in self.relations]


@dataclass(frozen=True)
class Analysis:
    positive: bool
    homogeneous: bool
    abelianization: tuple[tuple[int, ...], ...]  # one column per relation


def analyze_presentation(p: Presentation) -> Analysis:
    positive = all(r.left.is_positive() and r.right.is_positive() for r in p.relations)
    homogeneous = all(len(r.left) == len(r.right) for r in p.relations)
    columns = tuple(
        tuple(x - y for x, y in zip(exponent_vector(r.left), exponent_vector(r.right)))
        for r in p.relations
    )
    return Analysis(positive, homogeneous, columns)


def relation_lattice(p: Presentation) -> Lattice:
    """Lattice of exponent vectors killed in the abelianization."""
    return hermite_lattice(analyze_presentation(p).abelianization, len(p.alphabet))


# -- text format ------------------------------------------------------------

def write_presentation(p: Presentation) -> str:
    lines = [f"# {note}" for note in p.provenance]
    lines.append(f"kind: {p.kind}")
    lines.append("gens: " + " ".join(p.alphabet.names))
    for r in p.relations:
        lines.append(f"rel {r.label}: {format_word(r.left)} = {format_word(r.right)}")
    return "\n".join(lines) + "\n"


def read_presentation(text: str) -> Presentation:
    kind = None
    alphabet = None
    notes: list[str] = []
    pending: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            notes.append(line[1:].strip())
        elif line.startswith("kind:"):
            kind = line[5:].strip()
        elif line.startswith("gens:"):
            alphabet = Alphabet(tuple(line[5:].split()))
        elif line.startswith("rel "):
            label, colon, body = line[4:].partition(":")
            left, eq, right = body.partition("=")
            if not colon or not eq or not label.strip():
                raise PresentationError(f"line {lineno}: malformed relation {raw!r}")
            pending.append((label.strip(), left, right))
        else:
            raise PresentationError(f"line {lineno}: unrecognised line {raw!r}")
    if kind is None or alphabet is None:
        raise PresentationError("presentation text needs 'kind:' and 'gens:' lines")
    try:
        rels = [Relation(lab, parse_word(l, alphabet), parse_word(r, alphabet)) for lab, l, r in pending]
    except WordSyntaxError as exc:
        raise PresentationError(str(exc)) from None
    return Presentation(alphabet, tuple(rels), kind, tuple(notes))


# -- catalog ----------------------------------------------------------------

class _Builder:
    """Collects relations; templates naming a missing generator are dropped."""

    def __init__(self, names: Sequence[str], source: str):
        self.alphabet = Alphabet(tuple(names))
        self.relations: list[Relation] = []
        self.notes: list[str] = [source]

    def rel(self, label: str, left: str, right: str, where: str = ""):
        try:
            lw = parse_word(left, self.alphabet)
            rw = parse_word(right, self.alphabet)
        except WordSyntaxError as exc:
            tag = f"{label}[{where}]" if where else label
            self.notes.append(f"dropped {tag}: {exc}")
            return
        self.relations.append(Relation(label, lw, rw))

    def build(self, kind: str) -> Presentation:
        return Presentation(self.alphabet, tuple(self.relations), kind, tuple(self.notes))


def _s(i):
    return f"s{i}"


def _d(r):
    return f"d{r}"


def _braid_relations(b: _Builder, n: int, gen=_s, labels=("BR1", "BR2")):
    for i in range(1, n):
        for j in range(i + 2, n):
            b.rel(labels[0], f"{gen(i)} {gen(j)}", f"{gen(j)} {gen(i)}", f"i={i},j={j}")
    for i in range(1, n):
        x, y = gen(i), gen(i + 1)
        b.rel(labels[1], f"{x} {y} {x}", f"{y} {x} {y}", f"i={i}")


def _require(cond: bool, message: str):
    if not cond:
        raise PresentationError(f"parameter constraint violated: {message}")


def _cr3_pairs(g: int, p: int):
    m = 2 * g + p - 1
    handles = {(p + 2 * i, p + 2 * i + 1) for i in range(g)}
    return [(r, s) for r in range(1, m + 1) for s in range(r + 1, m + 1) if (r, s) not in handles]


def boundary(n: int, g: int, p: int, kind: str = MONOID, kmax: int = 0) -> Presentation:
    _require(n >= 2, "boundary needs n >= 2")
    _require(p >= 1, "boundary needs p >= 1")
    _require(g >= 0, "boundary needs g >= 0")
    m = 2 * g + p - 1
    names = [_s(i) for i in range(1, n)] + [_d(r) for r in range(1, m + 1)]
    b = _Builder(names, f"positive presentation of B_{n}(Sigma_{g},{p})")
    _braid_relations(b, n)
    for r in range(1, m + 1):
        for i in range(2, n):
            b.rel("CR1", f"{_d(r)} {_s(i)}", f"{_s(i)} {_d(r)}", f"r={r},i={i}")
    for r in range(1, m + 1):
        d = _d(r)
        b.rel("CR2", f"{d} s1 {d} s1", f"s1 {d} s1 {d}", f"r={r}")
    for r, s in _cr3_pairs(g, p):
        dr, ds = _d(r), _d(s)
        b.rel("CR3", f"{dr} s1 {dr} {ds} s1", f"s1 {dr} {ds} s1 {dr}", f"r={r},s={s}")
    for i in range(g):
        r = p + 2 * i
        dr, dr1 = _d(r), _d(r + 1)
        b.rel("SCR1", f"s1 {dr1} s1 {dr} s1", f"{dr} s1 {dr1}", f"r={r}")
    if kmax:
        b.notes.append(f"with (CR3)_k and (CR3')_k for 1 <= k <= {kmax}")
        for k in range(1, kmax + 1):
            for r, s in _cr3_pairs(g, p):
                dr, ds = _d(r), _d(s)
                b.rel(f"CR3_{k}", f"{dr} s1 {dr} {ds}^{k} s1", f"s1 {dr} {ds}^{k} s1 {dr}", f"r={r},s={s}")
            for r, s in _cr3_pairs(g, p):
                dr, ds = _d(r), _d(s)
                b.rel(f"CR3'_{k}", f"{ds} s1 {dr}^{k} {ds} s1", f"s1 {dr}^{k} {ds} s1 {ds}", f"r={r},s={s}")
    return b.build(kind)


def boundary_star(n: int, g: int, p: int, kmax: int, kind: str = MONOID) -> Presentation:
    _require(kmax >= 1, "boundary_star needs kmax >= 1")
    return boundary(n, g, p, kind, kmax=kmax)


def planar(n: int, p: int, I: Iterable[int], kind: str = MONOID) -> Presentation:
    I = sorted(set(I))
    _require(p >= 1, "planar needs p >= 1")
    _require(n >= 1, "planar needs n >= 1")
    _require(n >= p - 1, "planar needs n >= p - 1")
    _require(len(I) == p - 1, "planar needs |I| = p - 1")
    _require(all(1 <= r <= n for r in I), "planar needs I inside {1..n}")
    rho = lambda r: f"rho{r}"  # noqa: E731
    names = [_s(i) for i in range(1, n)] + [rho(r) for r in I]
    b = _Builder(names, f"planar presentation of B_{n}(Sigma_0,{p}) with I={{{','.join(map(str, I))}}}")
    for i in range(1, n):
        for j in range(i + 2, n):
            b.rel("BR1", f"{_s(i)} {_s(j)}", f"{_s(j)} {_s(i)}", f"i={i},j={j}")
    for x, r in enumerate(I):
        for s in I[x + 1:]:
            b.rel("BR1'", f"{rho(r)} {rho(s)}", f"{rho(s)} {rho(r)}", f"r={r},s={s}")
    for r in I:
        for i in range(1, n):
            if i not in (r - 1, r):
                b.rel("BR1''", f"{rho(r)} {_s(i)}", f"{_s(i)} {rho(r)}", f"r={r},i={i}")
    for i in range(1, n):
        x, y = _s(i), _s(i + 1)
        b.rel("BR2", f"{x} {y} {x}", f"{y} {x} {y}", f"i={i}")
    for r in I:
        for i in (r - 1, r):
            x, q = _s(i), rho(r)
            b.rel("BR3", f"{x} {q} {x} {q}", f"{q} {x} {q} {x}", f"r={r},i={i}")
    for r in I:
        if r in (1, n):
            continue
        x, y, q = _s(r - 1), _s(r), rho(r)
        b.rel("BR3'", f"{x} {y} {q} {x} {q}", f"{q} {x} {y} {q} {x}", f"r={r}")
    return b.build(kind)


def _fgr_prefix(n: int) -> str:
    if n <= 2:
        return ""
    mid = [_s(i) for i in range(2, n - 1)]
    return " ".join(mid + [_s(n - 1), _s(n - 1)] + mid[::-1])


def _fgr(b: _Builder, n: int, g: int):
    deltas = [_d(r) for r in range(1, 2 * g + 1)]
    left = f"{_fgr_prefix(n)} s1 {' '.join(deltas)} s1"
    b.rel("FGR", left, " ".join(reversed(deltas)))


def closed(n: int, g: int, kind: str = MONOID) -> Presentation:
    _require(n >= 1, "closed needs n >= 1")
    _require(g >= 1, "closed needs g >= 1")
    names = [_s(i) for i in range(1, n)] + [_d(r) for r in range(1, 2 * g + 1)]
    b = _Builder(names, f"positive presentation of B_{n}(Sigma_{g},0)")
    _braid_relations(b, n)
    for i in range(3, n):
        for r in range(1, 2 * g + 1):
            b.rel("CR1", f"{_s(i)} {_d(r)}", f"{_d(r)} {_s(i)}", f"i={i},r={r}")
    for r in range(1, 2 * g + 1):
        b.rel("CR4", f"s1 {_d(r)}^2", f"{_d(r)}^2 s1", f"r={r}")
    for r in range(1, g + 1):
        d = _d(2 * r - 1)
        b.rel("CR4", f"s2 {d} s2", f"{d} s2 s1", f"r={r}")
    for r in range(1, g + 1):
        d = _d(2 * r)
        b.rel("CR4", f"s1 {d} s2", f"s2 {d} s1", f"r={r}")
    for r in range(1, 2 * g + 1):
        for t in range(r + 2, 2 * g + 1, 2):
            b.rel("SCR2", f"s1 {_d(r)} {_d(t)} s1", f"{_d(t)} {_d(r)}", f"r={r},s={(t - r) // 2}")
    for r in range(1, g + 1):
        for s in range(1, r + 1):
            d2r, dodd = _d(2 * r), _d(2 * s - 1)
            b.rel("SCR3", f"{d2r} s1 {dodd} {d2r} s1", f"{dodd} {d2r}^2", f"s={s},r={r}")
    for r in range(1, g + 1):
        for s in range(1, r):
            d2s, dodd = _d(2 * s), _d(2 * r - 1)
            b.rel("SCR3", f"s1 {d2s} {dodd} s1 {d2s}", f"{d2s}^2 {dodd}", f"s={s},r={r}")
    _fgr(b, n, g)
    return b.build(kind)


def closed_g2(n: int, g: int, kind: str = MONOID) -> Presentation:
    _require(n >= 1, "closed_g2 needs n >= 1")
    _require(g >= 2, "closed_g2 needs g >= 2")
    names = [_s(i) for i in range(1, n)] + [_d(r) for r in range(1, 2 * g + 1)]
    b = _Builder(names, f"positive presentation of B_{n}(Sigma_{g},0), genus at least 2")
    _braid_relations(b, n)
    for r in range(1, 2 * g + 1):
        for i in range(3, n):
            b.rel("CR1", f"{_d(r)} {_s(i)}", f"{_s(i)} {_d(r)}", f"r={r},i={i}")
    for r in range(1, 2 * g + 1):
        b.rel("CR4", f"{_d(r)}^2 s1", f"s1 {_d(r)}^2", f"r={r}")
    for r in range(1, g + 1):
        d = _d(2 * r - 1)
        b.rel("CR4", f"s2 {d} s2", f"{d} s2 s1", f"r={r}")
    for r in range(1, g + 1):
        d = _d(2 * r)
        b.rel("CR4", f"s1 {d} s2", f"s2 {d} s1", f"r={r}")
    for r in range(1, g + 1):
        for s in range(1, r):
            x, y = f"{_d(2 * r)} s1", f"{_d(2 * s - 1)} {_d(2 * s)}"
            b.rel("CR5", f"{x} {y}", f"{y} {x}", f"s={s},r={r}")
    for r in range(1, g + 1):
        for s in range(r + 1, g + 1):
            x, y = f"s1 {_d(2 * r)}", f"{_d(2 * s)} {_d(2 * s - 1)}"
            b.rel("CR5", f"{x} {y}", f"{y} {x}", f"r={r},s={s}")
    for r in range(1, g + 1):
        for s in range(1, r):
            x, y = f"{_d(2 * r)} s1", f"{_d(2 * r - 1)} {_d(2 * s)}"
            b.rel("CR5", f"{x} {y}", f"{y} {x}", f"s={s},r={r}")
    for r in range(1, g + 1):
        for s in range(r + 1, g + 1):
            x, y = f"s1 {_d(2 * r - 1)}", f"{_d(2 * s - 1)} {_d(2 * r)}"
            b.rel("CR5", f"{x} {y}", f"{y} {x}", f"r={r},s={s}")
    for r in range(1, 2 * g + 1):
        for t in range(r + 2, 2 * g + 1, 2):
            b.rel("SCR2", f"s1 {_d(r)} {_d(t)} s1", f"{_d(t)} {_d(r)}", f"r={r},s={(t - r) // 2}")
    _fgr(b, n, g)
    return b.build(kind)


def torus_n(n: int, kind: str = MONOID) -> Presentation:
    _require(n >= 2, "torus_n needs n >= 2")
    names = [_s(i) for i in range(1, n)] + ["d1", "d2"]
    b = _Builder(names, f"positive presentation of B_{n}(Sigma_1,0)")
    _braid_relations(b, n)
    for i in range(3, n):
        for r in (1, 2):
            b.rel("CR1", f"{_d(r)} {_s(i)}", f"{_s(i)} {_d(r)}", f"r={r},i={i}")
    for r in (1, 2):
        b.rel("CR4", f"{_d(r)}^2 s1", f"s1 {_d(r)}^2", f"r={r}")
    b.rel("CR4", "s2 d1 s2", "d1 s2 s1")
    b.rel("CR4", "s1 d2 s2", "s2 d2 s1")
    b.rel("SCR4", "d2 s1 d1 d2 s1", "d1 d2^2")
    _fgr(b, n, 1)
    return b.build(kind)


def torus2_v1(kind: str = MONOID) -> Presentation:
    b = _Builder(["s1", "d1", "d2"], "presentation of B_2(Sigma_1,0) with central squares")
    b.rel("CR4", "d1^2 s1", "s1 d1^2")
    b.rel("CR4", "d2^2 s1", "s1 d2^2")
    b.rel("CEN", "d1^2 d2", "d2 d1^2")
    b.rel("CEN", "d2^2 d1", "d1 d2^2")
    b.rel("FGR", "s1 d1 d2 s1", "d2 d1")
    return b.build(kind)


def _torus_abc(b: _Builder):
    b.rel("CEN", "a^2 b", "b a^2")
    b.rel("CEN", "b^2 a", "a b^2")
    b.rel("CEN", "a^2 c", "c a^2")
    b.rel("CEN", "b^2 c", "c b^2")
    b.rel("SQR", "a^2 b^2", "c^2")


def torus2_v2(kind: str = MONOID) -> Presentation:
    b = _Builder(["a", "b", "c"], "presentation of B_2(Sigma_1,0) on a = d2, b = d1, c = d2 d1 s1^-1")
    _torus_abc(b)
    return b.build(kind)


def torus2_complete_candidate(kind: str = MONOID) -> Presentation:
    b = _Builder(["a", "b", "c"], "torus presentation with the extra relation b^2 a^2 = c^2")
    _torus_abc(b)
    b.rel("SQR", "b^2 a^2", "c^2")
    return b.build(kind)


def free_central2(kind: str = MONOID) -> Presentation:
    b = _Builder(["a", "b"], "two generators with central squares")
    b.rel("CEN", "a b^2", "b^2 a")
    b.rel("CEN", "b a^2", "a^2 b")
    return b.build(kind)


def braid(n: int, kind: str = MONOID) -> Presentation:
    _require(n >= 2, "braid needs n >= 2")
    b = _Builder([_s(i) for i in range(1, n)], f"Artin presentation of B_{n}")
    _braid_relations(b, n)
    return b.build(kind)


def appendix_boundary(n: int, g: int, p: int) -> Presentation:
    _require(n >= 2, "appendix_boundary needs n >= 2")
    _require(p >= 1, "appendix_boundary needs p >= 1")
    _require(g >= 0, "appendix_boundary needs g >= 0")
    A = [f"a{r}" for r in range(1, g + 1)]
    B = [f"b{r}" for r in range(1, g + 1)]
    Z = [f"z{j}" for j in range(1, p)]
    names = [_s(i) for i in range(1, n)] + A + B + Z
    b = _Builder(names, f"non-positive presentation of B_{n}(Sigma_{g},{p})")
    _braid_relations(b, n)
    S = "s1^-1"
    for fam in (A, B):
        for r, x in enumerate(fam, 1):
            for i in range(2, n):
                b.rel("R1", f"{x} {_s(i)}", f"{_s(i)} {x}", f"r={r},i={i}")
    for fam in (A, B):
        for r, x in enumerate(fam, 1):
            b.rel("R2", f"{S} {x} {S} {x}", f"{x} {S} {x} {S}", f"r={r}")
    for fs, fr in ((A, A), (B, B), (A, B), (B, A)):
        for r in range(1, g + 1):
            for s in range(1, r):
                xs, xr = fs[s - 1], fr[r - 1]
                b.rel("R3", f"{S} {xs} s1 {xr}", f"{xr} {S} {xs} s1", f"s={s},r={r}")
    for r in range(1, g + 1):
        a, bb = A[r - 1], B[r - 1]
        b.rel("R4", f"{S} {a} {S} {bb}", f"{bb} {S} {a} s1", f"r={r}")
    for j, z in enumerate(Z, 1):
        for i in range(2, n):
            b.rel("R5", f"{z} {_s(i)}", f"{_s(i)} {z}", f"j={j},i={i}")
    for fam in (A, B):
        for r, x in enumerate(fam, 1):
            for i, z in enumerate(Z, 1):
                b.rel("R6", f"{S} {z} s1 {x}", f"{x} {S} {z} s1", f"r={r},i={i}")
    for j, zj in enumerate(Z, 1):
        for l, zl in enumerate(Z, 1):
            if j < l:
                b.rel("R7", f"{S} {zj} s1 {zl}", f"{zl} {S} {zj} s1", f"j={j},l={l}")
    for j, z in enumerate(Z, 1):
        b.rel("R8", f"{S} {z} {S} {z}", f"{z} {S} {z} {S}", f"j={j}")
    return b.build(GROUP)


def appendix_closed(n: int, g: int) -> Presentation:
    _require(n >= 1, "appendix_closed needs n >= 1")
    _require(g >= 1, "appendix_closed needs g >= 1")
    T = lambda i: f"t{i}"  # noqa: E731
    Bg = [f"b{r}" for r in range(1, 2 * g + 1)]
    names = [T(i) for i in range(1, n)] + Bg
    b = _Builder(names, f"non-positive presentation of B_{n}(Sigma_{g},0)")
    for i in range(1, n):
        for j in range(i + 2, n):
            b.rel("BR1", f"{T(i)} {T(j)}", f"{T(j)} {T(i)}", f"i={i},j={j}")
    for i in range(1, n - 1):
        b.rel("BR2", f"{T(i)} {T(i + 1)} {T(i)}", f"{T(i + 1)} {T(i)} {T(i + 1)}", f"i={i}")
    for r, x in enumerate(Bg, 1):
        for i in range(2, n):
            b.rel("R1", f"{x} {T(i)}", f"{T(i)} {x}", f"r={r},i={i}")
    for r in range(1, 2 * g + 1):
        for s in range(1, r):
            br, bs = Bg[r - 1], Bg[s - 1]
            b.rel("R2", f"{bs} t1^-1 {br} t1^-1", f"t1 {br} t1^-1 {bs}", f"s={s},r={r}")
    for r, x in enumerate(Bg, 1):
        b.rel("R3", f"{x} t1^-1 {x} t1^-1", f"t1^-1 {x} t1^-1 {x}", f"r={r}")
    first = [x if k % 2 == 0 else f"{x}^-1" for k, x in enumerate(Bg)]
    second = [f"{x}^-1" if k % 2 == 0 else x for k, x in enumerate(Bg)]
    if n == 1:
        right = "1"
        b.notes.append("TR right side is the empty product for n = 1")
    else:
        up = [T(i) for i in range(1, n - 1)]
        right = " ".join(up + [T(n - 1), T(n - 1)] + up[::-1])
    b.rel("TR", " ".join(first + second), right)
    return b.build(GROUP)


CATALOG = {
    "boundary": boundary,
    "boundary_star": boundary_star,
    "planar": planar,
    "closed": closed,
    "closed_g2": closed_g2,
    "torus_n": torus_n,
    "torus2_v1": torus2_v1,
    "torus2_v2": torus2_v2,
    "torus2_complete_candidate": torus2_complete_candidate,
    "free_central2": free_central2,
    "braid": braid,
    "appendix_boundary": appendix_boundary,
    "appendix_closed": appendix_closed,
}


def build_presentation(family: str, *params, **kwargs) -> Presentation:
    try:
        builder = CATALOG[family]
    except KeyError:
        raise PresentationError(f"unknown catalog family {family!r}; known: {', '.join(CATALOG)}") from None
    try:
        return builder(*params, **kwargs)
    except TypeError as exc:
        raise PresentationError(f"bad parameters for {family}: {exc}") from None
