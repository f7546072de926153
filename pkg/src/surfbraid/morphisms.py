"""Generator substitutions between presentations and relator checks.

Built-in maps:

``psi(n,g,p)``        non-positive boundary generators -> positive ones
``psibar(n,g,p)``     positive boundary generators -> non-positive ones
``closed_theta(n,g)`` non-positive closed generators (t, b) -> (s, d)
``torus_abc``         a, b, c -> s1, d1, d2 (a = d2, b = d1, c = d2 d1 s1^-1)
``torus_abc_inverse`` s1, d1, d2 -> a, b, c (s1 = c^-1 a b)
``planar_rho(n,p,I)`` planar generators -> positive boundary generators, g = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .ces_solver import INSTANCES, SolverInstance, normal_form
from .presentations import (
    GROUP,
    Presentation,
    PresentationError,
    appendix_boundary,
    appendix_closed,
    boundary,
    closed,
    planar,
)
from .rewrite_search import SearchLimits, bfs_equal, replay_path
from .words import Alphabet, Word, free_reduce, invert_letters, parse_word, reduce_letters

VERIFIED = "Verified"
UNKNOWN = "Unknown"
REFUTED = "Refuted"  # only from an exact solver


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorMap:
    name: str
    source: Alphabet
    target: Alphabet
    images: tuple[tuple[int, ...], ...]  # letters over target, one per source generator
    provenance: str = ""

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise MapError("every source generator needs an image")
        n = len(self.target)
        for img in self.images:
            if any(x == 0 or abs(x) > n for x in img):
                raise MapError("image letter outside the target alphabet")

    def image(self, name: str) -> Word:
        return Word(self.target, self.images[self.source.index(name)])

    @classmethod
    def from_texts(cls, name: str, source: Alphabet, target: Alphabet,
                   texts: Mapping[str, str], provenance: str = "") -> "GeneratorMap":
        missing = [g for g in source.names if g not in texts]
        if missing:
            raise MapError(f"no image given for {missing}")
        images = tuple(parse_word(texts[g], target).letters for g in source.names)
        return cls(name, source, target, images, provenance)


def apply_letters(m: GeneratorMap, letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        img = m.images[abs(x) - 1]
        out.extend(img if x > 0 else invert_letters(img))
    return reduce_letters(out)


def apply_map(m: GeneratorMap, w: Word) -> Word:
    if w.alphabet != m.source:
        raise MapError(f"word over {w.alphabet.names} given to map with source {m.source.names}")
    return Word(m.target, apply_letters(m, w.letters))


def compose(first: GeneratorMap, second: GeneratorMap) -> GeneratorMap:
    """The map ``second . first`` (apply ``first``, then ``second``)."""
    if first.target != second.source:
        raise MapError("maps do not compose: alphabets differ")
    images = tuple(apply_letters(second, img) for img in first.images)
    return GeneratorMap(f"{second.name}.{first.name}", first.source, second.target, images,
                        f"{first.provenance}; then {second.provenance}")


def identity_map(alphabet: Alphabet) -> GeneratorMap:
    return GeneratorMap("identity", alphabet, alphabet,
                        tuple((i,) for i in range(1, len(alphabet) + 1)), "identity")


# -- built-in maps -----------------------------------------------------------

def psi(n: int, g: int, p: int) -> GeneratorMap:
    src = appendix_boundary(n, g, p).alphabet
    dst = boundary(n, g, p).alphabet
    texts = {f"s{i}": f"s{i}" for i in range(1, n)}
    for r in range(1, g + 1):
        texts[f"a{r}"] = f"d{p + 2 * (r - 1)}^-1"
        texts[f"b{r}"] = f"d{p + 2 * (r - 1) + 1}^-1"
    for j in range(1, p):
        texts[f"z{j}"] = f"d{j}^-1"
    return GeneratorMap.from_texts(f"psi({n},{g},{p})", src, dst, texts,
                                   "non-positive to positive boundary generators")


def psibar(n: int, g: int, p: int) -> GeneratorMap:
    src = boundary(n, g, p).alphabet
    dst = appendix_boundary(n, g, p).alphabet
    texts = {f"s{i}": f"s{i}" for i in range(1, n)}
    for j in range(1, p):
        texts[f"d{j}"] = f"z{j}^-1"
    for r in range(1, g + 1):
        texts[f"d{p + 2 * (r - 1)}"] = f"a{r}^-1"
        texts[f"d{p + 2 * (r - 1) + 1}"] = f"b{r}^-1"
    return GeneratorMap.from_texts(f"psibar({n},{g},{p})", src, dst, texts,
                                   "positive to non-positive boundary generators")


def closed_theta(n: int, g: int) -> GeneratorMap:
    # s_i = t_i^-1, d_2r = b_2r t_1^-1, d_2r-1 = t_1 b_2r-1^-1, solved for t and b
    src = appendix_closed(n, g).alphabet
    dst = closed(n, g).alphabet
    texts = {f"t{i}": f"s{i}^-1" for i in range(1, n)}
    for r in range(1, g + 1):
        texts[f"b{2 * r}"] = f"d{2 * r} s1^-1"
        texts[f"b{2 * r - 1}"] = f"d{2 * r - 1}^-1 s1^-1"
    return GeneratorMap.from_texts(f"closed_theta({n},{g})", src, dst, texts,
                                   "non-positive to positive closed-surface generators")


_ABC = INSTANCES["torus3"].alphabet
_SD = Alphabet(("s1", "d1", "d2"))


def torus_abc() -> GeneratorMap:
    return GeneratorMap.from_texts("torus_abc", _ABC, _SD,
                                   {"a": "d2", "b": "d1", "c": "d2 d1 s1^-1"},
                                   "a = d2, b = d1, c = d2 d1 s1^-1")


def torus_abc_inverse() -> GeneratorMap:
    return GeneratorMap.from_texts("torus_abc_inverse", _SD, _ABC,
                                   {"s1": "c^-1 a b", "d1": "b", "d2": "a"},
                                   "s1 = c^-1 a b, d1 = b, d2 = a")


def planar_rho(n: int, p: int, I: Iterable[int]) -> GeneratorMap:
    """rho_{r_j} -> (s_{r_j-1} ... s_1) d_{p-j} (s_{r_j-1} ... s_1)^-1, reading r as r_j."""
    I = sorted(set(I))
    src = planar(n, p, I).alphabet
    dst = boundary(n, 0, p).alphabet if n >= 2 else None
    if dst is None:
        raise MapError("planar_rho needs n >= 2")
    texts = {f"s{i}": f"s{i}" for i in range(1, n)}
    for j, r in enumerate(I, 1):
        down = [f"s{i}" for i in range(r - 1, 0, -1)]
        up_inv = [f"s{i}^-1" for i in range(1, r)]
        texts[f"rho{r}"] = " ".join(down + [f"d{p - j}"] + up_inv) or "1"
    return GeneratorMap.from_texts(f"planar_rho({n},{p},{I})", src, dst, texts,
                                   "planar generators as conjugates of boundary loops")


BUILTIN_MAPS = {
    "psi": psi,
    "psibar": psibar,
    "closed_theta": closed_theta,
    "torus_abc": torus_abc,
    "torus_abc_inverse": torus_abc_inverse,
    "planar_rho": planar_rho,
}


def builtin_map(name: str, *params) -> GeneratorMap:
    try:
        factory = BUILTIN_MAPS[name]
    except KeyError:
        raise MapError(f"unknown map {name!r}; known: {', '.join(BUILTIN_MAPS)}") from None
    try:
        return factory(*params)
    except (TypeError, PresentationError) as exc:
        raise MapError(f"invalid parameters for {name}: {exc}") from None


# -- verification -------------------------------------------------------------

@dataclass(frozen=True)
class RelatorCheck:
    index: int
    label: str
    status: str
    left_image: Word
    right_image: Word
    detail: str = ""


def verify_map(m: GeneratorMap, source: Presentation,
               prover: SolverInstance | Presentation,
               limits: SearchLimits | None = None) -> list[RelatorCheck]:
    """Check each relation of ``source`` holds after substitution.

    With a solver instance the check is exact and a failing relator is
    Refuted.  With a target presentation a group-mode breadth-first search
    is run and exhaustion gives Unknown, never a refutation.
    """
    if source.alphabet != m.source:
        raise MapError("source presentation does not match the map's source alphabet")
    if isinstance(prover, SolverInstance):
        if prover.alphabet != m.target:
            raise MapError(f"solver {prover.name} does not act on the map's target alphabet")
    elif isinstance(prover, Presentation):
        if prover.alphabet != m.target:
            raise MapError("target presentation does not match the map's target alphabet")
    else:
        raise MapError("prover must be a solver instance or a presentation")
    out = []
    for idx, rel in enumerate(source.relations):
        l, r = apply_map(m, rel.left), apply_map(m, rel.right)
        if isinstance(prover, SolverInstance):
            nl, nr = normal_form(prover, l), normal_form(prover, r)
            if nl == nr:
                status, detail = VERIFIED, f"normal form {nl.format(prover)}"
            else:
                status, detail = REFUTED, f"normal forms differ: {nl.format(prover)} vs {nr.format(prover)}"
        else:
            verdict = bfs_equal(prover, l, r, GROUP, limits)
            if verdict.equal and replay_path(prover, l, verdict.path) == r.letters:
                status, detail = VERIFIED, f"rewriting path of {len(verdict.path)} steps"
            else:
                status = UNKNOWN
                detail = ("abelianization differs" if verdict.inequality_certified
                          else f"search exhausted after {verdict.states_explored} states")
        out.append(RelatorCheck(idx, rel.label, status, l, r, detail))
    return out
