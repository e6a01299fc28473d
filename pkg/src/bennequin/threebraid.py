"""Murasugi Type-1 recognition for 3-braids and its consequences.

A 3-braid is of Type 1 (in the sense used here) when it is conjugate to

    h^d  sigma_1^{b_1} sigma_2^{-a_1} ... sigma_1^{b_k} sigma_2^{-a_k}

with h = (sigma_1 sigma_2)^3 the full twist, d >= 1, every b_i >= 1 and
every a_i >= 0.  For closures of such braids with d > 0 and some a_i > 0,
Martin's theorem computes the Rasmussen invariant from the diagram:
s = writhe - 2.  Sharpness of that bound (self-linking = s - 1) in turn
forces Plamenevskaya's Khovanov class, right-veeringness, the knot Floer
transverse class, and the contact class of the branched double cover to be
nonzero; the detectors below check those sufficient conditions.

Recognition enumerates candidate normal forms whose exponent sum matches
the input, bounded by the input length, and tests each with the Garside
conjugacy machinery; a braid outside the bounds is reported as
unclassified (None) rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, closure_components, closure_permutation, exponent_sum
from .garside import (
    ConjugacyCertificate,
    SearchBudgetExceeded,
    conjugacy_decide,
)

FULL_TWIST = (1, 2, 1, 2, 1, 2)


@dataclass(frozen=True)
class Type1Form:
    """Recognized normal form h^d * prod sigma_1^{b_i} sigma_2^{-a_i}.

    ``certificate.conjugator`` conjugates the spelled normal form onto the
    input word.
    """

    d: int
    blocks: tuple[tuple[int, int], ...]
    certificate: ConjugacyCertificate

    def word(self) -> BraidWord:
        return type1_word(self.d, self.blocks)


def type1_word(d: int, blocks) -> BraidWord:
    """Spell out the Type-1 normal form as a braid word."""
    if d < 1:
        raise ValueError("full twist power must be >= 1")
    letters = FULL_TWIST * d
    for b, a in blocks:
        if b < 1 or a < 0:
            raise ValueError("blocks need b >= 1 and a >= 0")
        letters += (1,) * b + (-2,) * a
    return BraidWord(3, letters)


def _compositions(total: int, parts: int):
    """Ways to write total as an ordered sum of ``parts`` positive integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def type1_recognize(
    w: BraidWord,
    candidate_cap: int = 10**5,
    node_cap: int = 10**6,
) -> Type1Form | None:
    """Search for a Type-1 normal form conjugate to w.

    Candidates are enumerated with the full-twist power d ascending, then
    total sigma_1 exponent, then block count; the sigma_2 total is forced
    by the exponent sum.  Returns the first conjugate candidate with its
    verified certificate, or None if the bounded family holds no match.
    Raises :class:`SearchBudgetExceeded` when the candidate cap is hit, a
    distinct outcome from a completed no-match search.
    """
    if w.strands != 3:
        raise ValueError("Type-1 recognition applies to 3-braids only")
    length = len(w.letters)
    e = exponent_sum(w)
    cycle_type = tuple(sorted(_cycle_lengths(w)))
    # Candidates are capped at the input length plus the full twists' worth
    # of slack: a form h^d B has 12d + 2*sum(b_i) - e letters, so sum(b_i)
    # is at most (length + e - 6d) / 2.
    d_max = max(0, (length + e - 2) // 6)
    tested = 0
    for d in range(1, d_max + 1):
        for b_total in range(1, (length + e - 6 * d) // 2 + 1):
            a_total = 6 * d + b_total - e
            if a_total < 0:
                continue
            for k in range(1, b_total + 1):
                for bs in _compositions(b_total, k):
                    for surplus in _weak_compositions(a_total, k):
                        tested += 1
                        if tested > candidate_cap:
                            raise SearchBudgetExceeded(
                                f"Type-1 search exceeded {candidate_cap} candidates"
                            )
                        blocks = tuple(zip(bs, surplus))
                        candidate = type1_word(d, blocks)
                        if tuple(sorted(_cycle_lengths(candidate))) != cycle_type:
                            continue
                        cert = conjugacy_decide(candidate, w, node_cap=node_cap)
                        if cert is not None:
                            return Type1Form(d, blocks, cert)
    return None


def _cycle_lengths(w: BraidWord) -> list[int]:
    image = closure_permutation(w).image
    seen = [False] * len(image)
    lengths = []
    for start in range(len(image)):
        if seen[start]:
            continue
        count = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = image[p] - 1
            count += 1
        lengths.append(count)
    return lengths


def s_invariant_type1(
    w: BraidWord,
    candidate_cap: int = 10**5,
    node_cap: int = 10**6,
) -> int | None:
    """Rasmussen invariant of the closure via Martin's Type-1 rule.

    Applies only when recognition succeeds with d > 0 and some a_i > 0;
    then s = writhe - 2 with the writhe read off as the exponent sum.
    Returns None when the rule does not apply.
    """
    if w.strands != 3:
        raise ValueError("Type-1 recognition applies to 3-braids only")
    if closure_components(w) != 1:
        raise ValueError("closure has more than one component")
    form = type1_recognize(w, candidate_cap=candidate_cap, node_cap=node_cap)
    if form is None:
        return None
    if form.d > 0 and any(a > 0 for _, a in form.blocks):
        return exponent_sum(w) - 2
    return None


def psi_nonzero(w: BraidWord, s: int) -> bool:
    """Sufficient condition for Plamenevskaya's class: s - 1 = writhe - strands.

    ``s`` is the Rasmussen invariant of the closure, supplied by the
    caller.  False means the criterion is inconclusive, not that the class
    vanishes.
    """
    return s - 1 == exponent_sum(w) - w.strands


@dataclass(frozen=True)
class TransverseFlags:
    right_veering: bool
    theta_nonzero: bool
    contact_nonzero: bool


def theta_and_contact_flags(w: BraidWord, s: int) -> TransverseFlags:
    """Flags implied by sharpness of the s-bound: self-linking = s - 1.

    When the diagram attains the bound, the closure is right-veering, the
    knot Floer transverse class is nonzero, and so is the contact class of
    the associated contact structure.  False flags mean inconclusive.
    """
    sharp = -w.strands + exponent_sum(w) == s - 1
    return TransverseFlags(
        right_veering=sharp, theta_nonzero=sharp, contact_nonzero=sharp
    )
