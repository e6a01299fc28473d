"""Garside normal forms, the word problem, and conjugacy certificates."""

import random

import pytest

from bennequin.braid import (
    BraidWord,
    conjugate,
    family_type1_word,
    family_word,
    free_reduce,
)
from bennequin.garside import (
    SearchBudgetExceeded,
    conjugacy_decide,
    normal_form,
    normal_form_word,
    verify_certificate,
    words_equal,
)
from bennequin.rewrite import rewriting_equal
from oracles import random_words


def test_defining_relation():
    assert words_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))


def test_free_cancellation():
    assert words_equal(BraidWord(3, (1, -1)), BraidWord(3, ()))


def test_distinct_generators_differ():
    assert not words_equal(BraidWord(3, (1,)), BraidWord(3, (2,)))


def test_strand_mismatch():
    with pytest.raises(ValueError):
        words_equal(BraidWord(2, (1,)), BraidWord(3, (1,)))


def test_normal_form_factors_are_proper_simples():
    rng = random.Random(17)
    for w in random_words(rng, 60, strands=4, max_len=10):
        nf = normal_form(w)
        ident = tuple(range(w.strands))
        delta = tuple(range(w.strands - 1, -1, -1))
        for factor in nf.factors:
            assert factor != ident
            assert factor != delta


def test_normal_form_idempotent():
    rng = random.Random(23)
    for w in random_words(rng, 60, strands=3, max_len=10):
        nf = normal_form(w)
        assert normal_form(normal_form_word(nf)) == nf


def test_central_full_twist():
    # Delta^2 commutes with every word, checked through both product orders
    rng = random.Random(31)
    delta2 = BraidWord(3, (1, 2, 1, 1, 2, 1))
    for w in random_words(rng, 40, strands=3, max_len=8):
        left = BraidWord(3, delta2.letters + w.letters)
        right = BraidWord(3, w.letters + delta2.letters)
        assert words_equal(left, right)
        assert normal_form(left) == normal_form(right)


def test_equality_invariant_under_relation_insertion():
    rng = random.Random(41)
    relation = (1, 2, 1, -2, -1, -2)  # trivial in the group
    for w in random_words(rng, 40, strands=3, max_len=8):
        pos = rng.randint(0, len(w.letters))
        padded = BraidWord(3, w.letters[:pos] + relation + w.letters[pos:])
        assert words_equal(w, padded)
        assert words_equal(w, free_reduce(padded))


def test_words_equal_agrees_with_rewriting_oracle():
    rng = random.Random(53)
    for w1 in random_words(rng, 30, strands=3, max_len=8):
        w2 = random_words(rng, 1, strands=3, max_len=8)[0]
        assert rewriting_equal(w1, w2) == words_equal(w1, w2)


def test_family_conjugacy_certificates():
    for n in (1, 2, 3):
        w, u = family_word(n), family_type1_word(n)
        cert = conjugacy_decide(w, u)
        assert cert is not None
        assert verify_certificate(w, u, cert.conjugator)


def test_exponent_sum_fast_reject():
    assert conjugacy_decide(BraidWord(2, (1, 1, 1)), BraidWord(2, (-1, -1, -1))) is None


def test_equal_words_get_empty_conjugator():
    w = BraidWord(3, (1, 2, 1))
    cert = conjugacy_decide(w, BraidWord(3, (2, 1, 2)))
    assert cert is not None
    assert cert.conjugator.letters == ()


def test_random_conjugate_pairs_certified():
    rng = random.Random(67)
    for _ in range(50):
        w = random_words(rng, 1, strands=3, max_len=10)[0]
        c = random_words(rng, 1, strands=3, max_len=6)[0]
        u = free_reduce(conjugate(w, c))
        cert = conjugacy_decide(w, u)
        assert cert is not None
        assert verify_certificate(w, u, cert.conjugator)


def test_non_conjugate_same_exponent_sum():
    # both have exponent sum 6 but different conjugacy classes
    full_twist = BraidWord(3, (1, 2, 1, 2, 1, 2))
    power = BraidWord(3, (1, 1, 1, 1, 1, 1))
    assert conjugacy_decide(full_twist, power) is None


def test_conjugacy_strand_mismatch():
    with pytest.raises(ValueError):
        conjugacy_decide(BraidWord(2, (1,)), BraidWord(3, (1,)))


def test_verify_certificate_basics():
    w = BraidWord(3, (1, 2))
    empty = BraidWord(3, ())
    assert verify_certificate(w, w, empty)
    assert not verify_certificate(BraidWord(3, (1,)), BraidWord(3, (2,)), empty)


def test_node_cap_raises_distinct_error():
    w, u = family_word(1), family_type1_word(1)
    with pytest.raises(SearchBudgetExceeded):
        conjugacy_decide(w, u, node_cap=0)
