"""Type-1 recognition, Martin's s-invariant rule, transverse detectors."""

import random

import pytest

from bennequin.braid import (
    BraidWord,
    conjugate,
    exponent_sum,
    family_type1_word,
    family_word,
    free_reduce,
)
from bennequin.garside import SearchBudgetExceeded, verify_certificate
from bennequin.threebraid import (
    psi_nonzero,
    s_invariant_type1,
    theta_and_contact_flags,
    type1_recognize,
    type1_word,
)

FULL_TWIST_WORD = BraidWord(3, (1, 2, 1, 2, 1, 2))


def test_type1_word_spelling():
    w = type1_word(1, [(1, 7)])
    assert w == family_type1_word(1)
    with pytest.raises(ValueError):
        type1_word(0, [(1, 1)])
    with pytest.raises(ValueError):
        type1_word(1, [(0, 1)])
    with pytest.raises(ValueError):
        type1_word(1, [(1, -1)])


def test_family_recognition():
    for n in (1, 2, 3):
        form = type1_recognize(family_word(n))
        assert form is not None
        assert form.d == 1
        assert form.blocks == ((1, 2 * n + 5),)
        assert verify_certificate(form.word(), family_word(n), form.certificate.conjugator)


def test_type1_conjugate_spelling_recognized_identically():
    form = type1_recognize(family_type1_word(2))
    assert form is not None
    assert (form.d, form.blocks) == (1, ((1, 9),))


def test_recognition_exponent_sum_consistency():
    for n in (1, 2, 4):
        form = type1_recognize(family_word(n))
        total = 6 * form.d + sum(b for b, _ in form.blocks) - sum(
            a for _, a in form.blocks
        )
        assert total == exponent_sum(family_word(n))


def test_full_twist_alone_is_unclassified():
    assert type1_recognize(FULL_TWIST_WORD) is None


def test_recognition_requires_three_strands():
    with pytest.raises(ValueError):
        type1_recognize(BraidWord(2, (1,)))
    with pytest.raises(ValueError):
        s_invariant_type1(BraidWord(4, (1, 2, 3)))


def test_candidate_cap_is_distinct_from_no_match():
    with pytest.raises(SearchBudgetExceeded):
        type1_recognize(family_word(1), candidate_cap=0)


def test_s_invariant_family():
    for n in (1, 2, 3):
        assert s_invariant_type1(family_word(n)) == -2 * n


def test_s_invariant_unrecognized_word():
    # knot closure, but no Type-1 form inside the search bounds
    w = BraidWord(3, (1, -2))
    assert s_invariant_type1(w) is None


def test_s_invariant_rejects_links():
    with pytest.raises(ValueError, match="component"):
        s_invariant_type1(BraidWord(3, (1, 1, 2, 2)))


def test_s_invariant_constant_under_conjugation():
    rng = random.Random(71)
    for n in (1, 2):
        w = family_word(n)
        assert s_invariant_type1(family_type1_word(n)) == -2 * n
        for _ in range(3):
            c = BraidWord(3, tuple(rng.choice((1, -1, 2, -2)) for _ in range(4)))
            moved = free_reduce(conjugate(w, c))
            assert s_invariant_type1(moved) == -2 * n


def test_psi_detector():
    for n in (1, 2, 5, 8):
        assert psi_nonzero(family_word(n), -2 * n)
    assert psi_nonzero(BraidWord(1, ()), 0)
    assert not psi_nonzero(BraidWord(2, (1, -1)), 0)


def test_theta_and_contact_flags():
    for n in (1, 2, 5, 8):
        flags = theta_and_contact_flags(family_word(n), -2 * n)
        assert flags.right_veering
        assert flags.theta_nonzero
        assert flags.contact_nonzero
    unknot_flags = theta_and_contact_flags(BraidWord(1, ()), 0)
    assert unknot_flags.right_veering
    stabilized = theta_and_contact_flags(BraidWord(2, (1, -1)), 0)
    assert not stabilized.right_veering
    assert not stabilized.theta_nonzero
    assert not stabilized.contact_nonzero


def test_detectors_never_fire_when_equalities_fail():
    # psi criterion and sharpness flags are tied to exact equalities
    w = family_word(1)
    assert not psi_nonzero(w, -2 + 2)  # wrong s
    assert not theta_and_contact_flags(w, 0).theta_nonzero
