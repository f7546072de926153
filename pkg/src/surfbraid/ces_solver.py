"""Exact arithmetic in central extensions of universal Coxeter groups.

A group element is written ``prod(x^(2*k_x)) [w]`` where the ``x`` run over
the central basis and ``w`` is a word with no two equal adjacent letters.
Every generator square is central and the squares satisfy the lattice
relations of the instance.  Two built-in instances are provided:

``torus3``  generators a, b, c with c^2 = a^2 b^2 (the two-strand torus
            braid group in its a, b, c presentation);
``free2``   generators a, b with central squares and no further relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .lattice import hermite_lattice
from .words import Alphabet, Word, format_letters


class SolverError(ValueError):
    pass


@dataclass(frozen=True)
class SolverInstance:
    name: str
    alphabet: Alphabet
    lattice_relations: tuple[tuple[int, ...], ...]
    central_basis: tuple[str, ...]
    # basis coordinates of the square of each generator
    square_image: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.alphabet)
        basis = [self.alphabet.index(x) for x in self.central_basis]
        if len(set(basis)) != len(basis):
            raise SolverError("central basis has repeated generators")
        rels = tuple(tuple(r) for r in self.lattice_relations)
        object.__setattr__(self, "lattice_relations", rels)
        others = [i for i in range(n) if i not in basis]
        order = others + basis
        lat = hermite_lattice([[r[i] for i in order] for r in rels], n)
        m = len(others)
        if lat.rank != m or lat.pivots != tuple(range(m)) or any(c[p] != 1 for c, p in zip(lat.basis, lat.pivots)):
            raise SolverError(
                f"squares modulo the lattice relations are not free on {self.central_basis}"
            )
        images = []
        for x in range(n):
            e = [0] * n
            e[order.index(x)] = 1
            res = lat.residue(e)
            assert not any(res[:m])
            images.append(tuple(res[m:]))
        object.__setattr__(self, "square_image", tuple(images))

    @property
    def rank(self) -> int:
        return len(self.central_basis)

    def weight_values(self, x: str) -> tuple[int, ...]:
        """Generator values of the weight homomorphism that kills ``x``."""
        if x not in self.central_basis:
            raise SolverError(f"weights are defined for the central basis, not {x!r}")
        idx = self.alphabet.index(x)
        vals = tuple(0 if i == idx else 1 for i in range(len(self.alphabet)))
        for r in self.lattice_relations:
            if sum(a * b for a, b in zip(r, vals)):
                raise SolverError(f"weight killing {x!r} is not compatible with the lattice relations")
        return vals


TORUS3 = SolverInstance("torus3", Alphabet(("a", "b", "c")), ((-1, -1, 1),), ("a", "b"))
FREE2 = SolverInstance("free2", Alphabet(("a", "b")), (), ("a", "b"))
INSTANCES = {"torus3": TORUS3, "free2": FREE2}


@dataclass(frozen=True)
class NormalForm:
    instance: str
    central: tuple[int, ...]
    word: tuple[int, ...]

    def format(self, inst: SolverInstance) -> str:
        squares = " ".join(f"{x}^{2 * k}" for x, k in zip(inst.central_basis, self.central))
        return f"{squares} [{format_letters(self.word, inst.alphabet, raw=True) if self.word else ''}]"


def _check(inst: SolverInstance, *gs: NormalForm):
    for g in gs:
        if g.instance != inst.name or len(g.central) != inst.rank:
            raise SolverError(f"normal form of instance {g.instance!r} used with {inst.name!r}")


def _add(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(u, v))


def identity(inst: SolverInstance) -> NormalForm:
    return NormalForm(inst.name, (0,) * inst.rank, ())


def central_element(inst: SolverInstance, coords: Sequence[int]) -> NormalForm:
    coords = tuple(coords)
    if len(coords) != inst.rank:
        raise SolverError(f"expected {inst.rank} central coordinates")
    return NormalForm(inst.name, coords, ())


def _reduce_onto(inst: SolverInstance, stack: list[int], central: list[int], letters: Sequence[int]):
    image = inst.square_image
    for x in letters:
        if x < 0:
            x = -x
            for i, c in enumerate(image[x - 1]):
                central[i] -= c
        if stack and stack[-1] == x:
            stack.pop()
            for i, c in enumerate(image[x - 1]):
                central[i] += c
        else:
            stack.append(x)


def normal_form(inst: SolverInstance, w: Word | str) -> NormalForm:
    if isinstance(w, str):
        w = inst.alphabet.word(w)
    if w.alphabet != inst.alphabet:
        raise SolverError(f"word over {w.alphabet.names} given to instance {inst.name}")
    stack: list[int] = []
    central = [0] * inst.rank
    _reduce_onto(inst, stack, central, w.letters)
    return NormalForm(inst.name, tuple(central), tuple(stack))


def multiply(inst: SolverInstance, g: NormalForm, h: NormalForm) -> NormalForm:
    _check(inst, g, h)
    stack = list(g.word)
    central = list(_add(g.central, h.central))
    _reduce_onto(inst, stack, central, h.word)
    return NormalForm(inst.name, tuple(central), tuple(stack))


def invert(inst: SolverInstance, g: NormalForm) -> NormalForm:
    _check(inst, g)
    central = [-k for k in g.central]
    for x in g.word:
        for i, c in enumerate(inst.square_image[x - 1]):
            central[i] -= c
    return NormalForm(inst.name, tuple(central), tuple(reversed(g.word)))


def to_word(inst: SolverInstance, g: NormalForm) -> Word:
    """A signed word representing ``g``: basis powers followed by the reduced word."""
    _check(inst, g)
    letters: list[int] = []
    for x, k in zip(inst.central_basis, g.central):
        letters.extend([inst.alphabet.letter(x, 1 if k > 0 else -1)] * (2 * abs(k)))
    letters.extend(g.word)
    return Word(inst.alphabet, tuple(letters))


def equal(inst: SolverInstance, u: Word | str, v: Word | str) -> bool:
    return normal_form(inst, u) == normal_form(inst, v)


# -- weights ----------------------------------------------------------------

def weights(inst: SolverInstance, g: NormalForm) -> dict[str, int]:
    """Value of each weight homomorphism, keyed by the generator it kills."""
    _check(inst, g)
    out = {}
    for x in inst.central_basis:
        vals = inst.weight_values(x)
        total = sum(vals[y - 1] for y in g.word)
        for y, k in zip(inst.central_basis, g.central):
            total += 2 * k * vals[inst.alphabet.index(y)]
        out[x] = total
    return out


def word_weights(inst: SolverInstance, w: Word) -> dict[str, int]:
    """Weights read directly off the letters of a free-group word."""
    out = {}
    for x in inst.central_basis:
        vals = inst.weight_values(x)
        out[x] = sum(vals[abs(y) - 1] * (1 if y > 0 else -1) for y in w.letters)
    return out


def l_word_from_weights(inst: SolverInstance, wt: Mapping[str, int]) -> Word:
    """``a^(weight killing b) b^(weight killing a)`` for a two-element basis."""
    if inst.rank != 2:
        raise SolverError("the L-word needs a central basis of size two")
    x, y = inst.central_basis
    letters = []
    for gen, k in ((x, wt[y]), (y, wt[x])):
        letters.extend([inst.alphabet.letter(gen, 1 if k > 0 else -1)] * abs(k))
    return Word(inst.alphabet, tuple(letters))


def l_word(inst: SolverInstance, g: NormalForm) -> Word:
    return l_word_from_weights(inst, weights(inst, g))


# -- universal Coxeter group ------------------------------------------------

def coxeter_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    """Delete adjacent equal letters until none remain (signs are ignored)."""
    stack: list[int] = []
    for x in letters:
        x = abs(x)
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def _cyclic_reduce(w: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(core, t)`` with ``t w t^-1 = core`` and core cyclically reduced."""
    w = tuple(w)
    conj: list[int] = []  # t as a letter list, innermost letter last
    while len(w) >= 2 and w[0] == w[-1]:
        conj.append(w[0])
        w = w[1:-1]
    return w, conj[::-1]


def coxeter_conjugate(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...] | None:
    """Witness ``w`` with ``w u w^-1 = v`` in the universal Coxeter group, or None."""
    u, v = tuple(u), tuple(v)
    if coxeter_reduce(u) != u or coxeter_reduce(v) != v:
        raise SolverError("coxeter_conjugate expects reduced words")
    cu, tu = _cyclic_reduce(u)
    cv, tv = _cyclic_reduce(v)
    if len(cu) != len(cv):
        return None
    rot = None
    if len(cu) <= 1:
        if cu == cv:
            rot = ()
    else:
        for i in range(len(cu)):
            if cu[i:] + cu[:i] == cv:
                rot = cu[i:] if i else ()  # conjugating by the suffix rotates it to the front
                break
    if rot is None:
        return None
    # v = tv^-1 cv tv,  cv = rot cu rot^-1,  cu = tu u tu^-1; in W, x^-1 = x
    return coxeter_reduce(tuple(reversed(tv)) + rot + tuple(tu))


def conjugacy(inst: SolverInstance, g: NormalForm, h: NormalForm) -> NormalForm | None:
    """Conjugator ``r`` with ``r g r^-1 = h``, taken as the minimal lift of a Coxeter witness."""
    _check(inst, g, h)
    if weights(inst, g) != weights(inst, h):
        return None
    w = coxeter_conjugate(g.word, h.word)
    if w is None:
        return None
    return NormalForm(inst.name, (0,) * inst.rank, w)


def conjugate_by(inst: SolverInstance, r: NormalForm, g: NormalForm) -> NormalForm:
    return multiply(inst, multiply(inst, r, g), invert(inst, r))


# -- positivity and divisibility -------------------------------------------

def is_positive(inst: SolverInstance, g: NormalForm) -> bool:
    """Whether ``g`` lies in the image of the positive monoid."""
    _check(inst, g)
    return all(k >= 0 for k in g.central)


def divides(inst: SolverInstance, d: NormalForm, g: NormalForm, side: str = "left") -> bool:
    if not (is_positive(inst, d) and is_positive(inst, g)):
        raise SolverError("divisibility is defined between positive elements")
    if side == "left":
        q = multiply(inst, invert(inst, d), g)
    elif side == "right":
        q = multiply(inst, g, invert(inst, d))
    else:
        raise SolverError(f"side must be 'left' or 'right', not {side!r}")
    return is_positive(inst, q)


def garside_decompose(inst: SolverInstance, G: NormalForm) -> tuple[int, NormalForm]:
    """Split ``G = Delta^-j g`` with ``g`` positive and not divisible by Delta.

    Delta is the product of the squares of the central basis, which for
    torus3 is a^2 b^2 = c^2.
    """
    _check(inst, G)
    j = -min(G.central) if G.central else 0
    return j, NormalForm(inst.name, tuple(k + j for k in G.central), G.word)


def enumerate_positive(
    inst: SolverInstance,
    bounds: Mapping[str, int] | None = None,
    total: int | None = None,
) -> list[NormalForm]:
    """All positive elements whose weights respect ``bounds`` (and ``total``).

    ``bounds`` maps a central basis generator to an upper bound on the weight
    killing it; ``total`` bounds the sum of all basis weights.  Output is
    sorted by (word length, word, central).
    """
    bounds = dict(bounds or {})
    for x, b in bounds.items():
        if x not in inst.central_basis:
            raise SolverError(f"no weight attached to {x!r}")
        if b < 0:
            raise SolverError("weight bounds must be nonnegative")
    if total is not None and total < 0:
        raise SolverError("weight bounds must be nonnegative")
    keys = list(inst.central_basis)
    vals = {x: inst.weight_values(x) for x in keys}
    letter_wt = [tuple(vals[x][i] for x in keys) for i in range(len(inst.alphabet))]
    square_wt = [tuple(2 * vals[x][inst.alphabet.index(y)] for x in keys) for y in keys]
    cap = [bounds.get(x) for x in keys]

    def fits(wt):
        if total is not None and sum(wt) > total:
            return False
        return all(c is None or v <= c for v, c in zip(wt, cap))

    def grows(wt):
        return (total is not None and sum(wt) > 0) or any(c is not None and v > 0 for v, c in zip(wt, cap))

    if not all(grows(wt) for wt in letter_wt + square_wt):
        raise SolverError("bounds leave some generator unbounded; enumeration would be infinite")

    words: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    stack = [((), (0,) * len(keys))]
    while stack:
        w, wt = stack.pop()
        words.append((w, wt))
        for x in range(1, len(inst.alphabet) + 1):
            if w and w[-1] == x:
                continue
            nwt = _add(wt, letter_wt[x - 1])
            if fits(nwt):
                stack.append((w + (x,), nwt))

    out = []

    def central_parts(i, k, cur, w):
        if i == len(keys):
            out.append(NormalForm(inst.name, tuple(k), w))
            return
        e = 0
        while True:
            nxt = tuple(c + e * s for c, s in zip(cur, square_wt[i]))
            if not fits(nxt):
                break
            central_parts(i + 1, k + [e], nxt, w)
            e += 1

    for w, wt in words:
        central_parts(0, [], wt, w)
    out.sort(key=lambda g: (len(g.word), g.word, g.central))
    return out
