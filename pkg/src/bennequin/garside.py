"""Word problem and conjugacy in braid groups via Garside normal form.

Uses the classical Garside structure on B_n: the Garside element is the
half twist Delta, simple elements are permutation braids (positive braids
in which each pair of strands crosses at most once), and every braid has a
unique left-greedy normal form Delta^p x_1 ... x_k with each x_i a simple
element other than the identity or Delta and each consecutive pair
left-weighted.  Two words are equal in B_n iff their normal forms match.

Conjugacy is decided through super summit sets: cycling and decycling walk
a braid to maximal infimum and minimal canonical length, and the set of
such conjugates is finite, closed under the conjugations by simple
elements that preserve (inf, sup), and connected under them, so a breadth
first search decides membership and produces an explicit conjugator.

Permutation braids are encoded as image tuples on 0-based positions; the
composition convention is "apply left factor first", matching how braid
words read.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .braid import BraidWord, concat, exponent_sum, free_reduce, inverse_word

Perm = tuple[int, ...]


class SearchBudgetExceeded(RuntimeError):
    """Conjugacy orbit search hit its node cap before finishing."""


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    power: int
    factors: tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)


@dataclass(frozen=True)
class ConjugacyCertificate:
    """Witness that two words are conjugate: w2 = c * w1 * c^-1."""

    conjugator: BraidWord


def _identity_perm(n: int) -> Perm:
    return tuple(range(n))


def _half_twist(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _transposition(n: int, i: int) -> Perm:
    """Permutation of generator sigma_i (1-based), swapping i-1 and i."""
    img = list(range(n))
    img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def _mul(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def _inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _starting_set(p: Perm) -> list[int]:
    """Generators that can be pulled off the front of a permutation braid."""
    return [i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]]


def _finishing_set(p: Perm) -> list[int]:
    """Generators that can be pulled off the back."""
    return _starting_set(_inv(p))


def _tau(p: Perm) -> Perm:
    """Conjugation by the half twist: flip positions and values."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _perm_letters(p: Perm) -> tuple[int, ...]:
    """A positive word spelling the permutation braid, left to right."""
    img = list(p)
    letters: list[int] = []
    while True:
        descent = next(
            (i for i in range(len(img) - 1) if img[i] > img[i + 1]), None
        )
        if descent is None:
            return tuple(letters)
        letters.append(descent + 1)
        img[descent], img[descent + 1] = img[descent + 1], img[descent]


def _left_weight_pair(n: int, x: Perm, y: Perm) -> tuple[Perm, Perm, bool]:
    """Slide initial letters of y into x until S(y) is contained in F(x)."""
    changed = False
    while True:
        finishing = set(_finishing_set(x))
        movable = [s for s in _starting_set(y) if s not in finishing]
        if not movable:
            return x, y, changed
        t = _transposition(n, movable[0])
        x = _mul(x, t)
        y = _mul(t, y)
        changed = True


def _normalize_factors(
    n: int, power: int, factors: list[Perm]
) -> tuple[int, tuple[Perm, ...]]:
    ident = _identity_perm(n)
    delta = _half_twist(n)
    work = list(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(work) - 1):
            x, y, moved = _left_weight_pair(n, work[i], work[i + 1])
            if moved:
                work[i], work[i + 1] = x, y
                changed = True
    lo = 0
    hi = len(work)
    while lo < hi and work[lo] == delta:
        lo += 1
    while lo < hi and work[hi - 1] == ident:
        hi -= 1
    return power + lo, tuple(work[lo:hi])


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """Left-greedy Delta-normal form; equal words get identical forms."""
    n = w.strands
    if n == 1:
        return GarsideNormalForm(1, 0, ())
    delta = _half_twist(n)
    pieces: list[tuple[int, Perm]] = []
    for k in w.letters:
        t = _transposition(n, abs(k))
        if k > 0:
            pieces.append((0, t))
        else:
            pieces.append((-1, _mul(delta, t)))
    total_power = sum(e for e, _ in pieces)
    factors: list[Perm] = []
    suffix = 0
    for e, x in reversed(pieces):
        factors.append(_tau(x) if suffix % 2 else x)
        suffix += e
    factors.reverse()
    power, normalized = _normalize_factors(n, total_power, factors)
    return GarsideNormalForm(n, power, normalized)


def normal_form_word(nf: GarsideNormalForm) -> BraidWord:
    """Spell a normal form back as a braid word."""
    n = nf.strands
    letters: list[int] = []
    if n > 1:
        delta_letters = _perm_letters(_half_twist(n))
        if nf.power >= 0:
            letters.extend(delta_letters * nf.power)
        else:
            undo = tuple(-k for k in reversed(delta_letters))
            letters.extend(undo * (-nf.power))
    for factor in nf.factors:
        letters.extend(_perm_letters(factor))
    return BraidWord(n, tuple(letters))


def words_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality in the braid group, decided by normal forms."""
    if w1.strands != w2.strands:
        raise ValueError("strand counts differ")
    return normal_form(w1) == normal_form(w2)


def _cycle(nf: GarsideNormalForm) -> tuple[GarsideNormalForm, tuple[int, ...]]:
    """Conjugate by the initial factor: Delta^p x1..xk -> Delta^p x2..xk x1'."""
    first = nf.factors[0]
    moved = _tau(first) if nf.power % 2 else first
    power, factors = _normalize_factors(
        nf.strands, nf.power, list(nf.factors[1:]) + [moved]
    )
    return GarsideNormalForm(nf.strands, power, factors), _perm_letters(moved)


def _decycle(nf: GarsideNormalForm) -> tuple[GarsideNormalForm, tuple[int, ...]]:
    """Conjugate by the inverse of the final factor, moving it to the front."""
    last = nf.factors[-1]
    moved = _tau(last) if nf.power % 2 else last
    power, factors = _normalize_factors(
        nf.strands, nf.power, [moved] + list(nf.factors[:-1])
    )
    conj = tuple(-k for k in reversed(_perm_letters(last)))
    return GarsideNormalForm(nf.strands, power, factors), conj


def _summit(nf: GarsideNormalForm) -> tuple[GarsideNormalForm, list[int]]:
    """Cycle/decycle to maximal infimum, then minimal canonical length."""
    conjugator: list[int] = []
    while True:
        start = (nf.power, nf.canonical_length)
        seen: set[tuple[int, tuple[Perm, ...]]] = set()
        while nf.factors:
            key = (nf.power, nf.factors)
            if key in seen:
                break
            seen.add(key)
            nxt, letters = _cycle(nf)
            conjugator.extend(letters)
            if nxt.power > nf.power:
                seen.clear()
            nf = nxt
        seen.clear()
        while nf.factors:
            key = (nf.power, nf.factors)
            if key in seen:
                break
            seen.add(key)
            nxt, letters = _decycle(nf)
            conjugator.extend(letters)
            if nxt.canonical_length < nf.canonical_length:
                seen.clear()
            nf = nxt
        if (nf.power, nf.canonical_length) == start:
            return nf, conjugator


def _nontrivial_simples(n: int) -> list[Perm]:
    ident = _identity_perm(n)
    return [p for p in permutations(range(n)) if p != ident]


def _conjugate_nf(
    nf: GarsideNormalForm, simple: Perm
) -> GarsideNormalForm:
    """Normal form of s^-1 * nf * s for a simple element s."""
    n = nf.strands
    word = normal_form_word(nf)
    s_letters = _perm_letters(simple)
    conj = BraidWord(
        n,
        tuple(-k for k in reversed(s_letters)) + word.letters + s_letters,
    )
    return normal_form(conj)


def conjugacy_decide(
    w1: BraidWord, w2: BraidWord, node_cap: int = 10**6
) -> ConjugacyCertificate | None:
    """Decide conjugacy; on success return c with w2 = c * w1 * c^-1.

    Explores the super summit set of w1 while tracking conjugators.  The
    node cap turns pathological inputs into :class:`SearchBudgetExceeded`
    rather than an unbounded search.
    """
    if w1.strands != w2.strands:
        raise ValueError("strand counts differ")
    if exponent_sum(w1) != exponent_sum(w2):
        return None
    if words_equal(w1, w2):
        return ConjugacyCertificate(BraidWord(w1.strands, ()))

    summit1, path1 = _summit(normal_form(w1))
    summit2, path2 = _summit(normal_form(w2))
    if (summit1.power, summit1.canonical_length) != (
        summit2.power,
        summit2.canonical_length,
    ):
        return None

    n = w1.strands
    simples = _nontrivial_simples(n)
    key1 = (summit1.power, summit1.factors)
    target = (summit2.power, summit2.factors)
    reached: dict[tuple[int, tuple[Perm, ...]], tuple[int, ...]] = {key1: ()}
    queue: deque[tuple[int, tuple[Perm, ...]]] = deque([key1])
    relative: tuple[int, ...] | None = () if key1 == target else None
    expanded = 0
    while queue and relative is None:
        key = queue.popleft()
        expanded += 1
        if expanded > node_cap:
            raise SearchBudgetExceeded(
                f"super summit exploration exceeded {node_cap} nodes"
            )
        current = GarsideNormalForm(n, key[0], key[1])
        for simple in simples:
            neighbor = _conjugate_nf(current, simple)
            if (neighbor.power, neighbor.canonical_length) != (
                summit1.power,
                summit1.canonical_length,
            ):
                continue
            nkey = (neighbor.power, neighbor.factors)
            if nkey in reached:
                continue
            reached[nkey] = reached[key] + _perm_letters(simple)
            if nkey == target:
                relative = reached[nkey]
                break
            queue.append(nkey)
    if relative is None:
        return None

    # w2 = g2 * g1^-1 * w1 * g1 * g2^-1 with g1 = path1 + relative, g2 = path2
    g1 = BraidWord(n, tuple(path1) + relative)
    g2 = BraidWord(n, tuple(path2))
    conjugator = free_reduce(concat(g2, inverse_word(g1)))
    return ConjugacyCertificate(conjugator)


def verify_certificate(w1: BraidWord, w2: BraidWord, c: BraidWord) -> bool:
    """True iff w2 = c * w1 * c^-1 in the braid group."""
    if not (w1.strands == w2.strands == c.strands):
        raise ValueError("strand counts differ")
    return words_equal(w2, concat(concat(c, w1), inverse_word(c)))
