import random

import pytest

from common.errors import InputError, NotRightAngledError, UnknownGeneratorError
from coxeter.system import CoxeterSystem
from coxeter.word_problem import (
    racg_equal,
    racg_length,
    racg_normal_form,
    random_rewrite,
    verify_presentation_hom,
)
from presentations.presentation import Presentation
from presentations.words import Word


@pytest.fixture
def square():
    """Four-cycle a-b-c-d: opposite corners generate free products."""
    return CoxeterSystem.build("abcd", [("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2)])


def test_involutions_cancel(square):
    assert racg_normal_form(square, Word.parse("aa")) == Word()
    assert racg_normal_form(square, Word.parse("aA")) == Word()
    assert racg_normal_form(square, Word.parse("aba")) == Word.parse("b")


def test_cancellation_needs_commuting_letters(square):
    assert racg_normal_form(square, Word.parse("aca")) == Word.parse("aca")
    assert racg_length(square, Word.parse("acac")) == 4


def test_normal_form_is_least_commutation_representative(square):
    assert racg_normal_form(square, Word.parse("ba")) == Word.parse("ab")
    assert racg_equal(square, Word.parse("cb"), Word.parse("bc"))
    assert not racg_equal(square, Word.parse("ca"), Word.parse("ac"))


def test_unknown_letter(square):
    with pytest.raises(UnknownGeneratorError):
        racg_normal_form(square, Word.parse("ax"))


def test_general_systems_are_rejected():
    sys = CoxeterSystem.build("ab", [("a", "b", 3)])
    with pytest.raises(NotRightAngledError):
        racg_normal_form(sys, Word.parse("ab"))


def test_random_rewrites_preserve_the_element(bowtie_system, rp2_eleven_system):
    rng = random.Random(2718)
    for sys in (bowtie_system, rp2_eleven_system):
        for _ in range(200):
            word = Word.from_generators(rng.choice(sys.vertices) for _ in range(rng.randint(0, 10)))
            assert racg_equal(sys, word, random_rewrite(sys, word, rng, 40))


def test_word_times_reverse_is_trivial(rp2_eleven_system):
    rng = random.Random(5)
    for _ in range(100):
        word = Word.from_generators(rng.choice(rp2_eleven_system.vertices) for _ in range(rng.randint(0, 15)))
        assert not racg_normal_form(rp2_eleven_system, word * Word(tuple(reversed(word.letters))))


def test_normal_form_is_idempotent(rp2_eleven_system):
    rng = random.Random(9)
    for _ in range(100):
        word = Word.from_generators(rng.choice(rp2_eleven_system.vertices) for _ in range(12))
        nf = racg_normal_form(rp2_eleven_system, word)
        assert racg_normal_form(rp2_eleven_system, nf) == nf
        assert len(nf) <= len(word)


def test_verify_presentation_hom(square):
    pres = Presentation.build(["x", "y"], ["xyXY", "xx"])
    partial = verify_presentation_hom(pres, square, {"x": Word.parse("ac"), "y": Word.parse("b")})
    assert not partial
    assert partial.failing_index == 1
    assert partial.failing_relator == Word.parse("xx")

    commuting = verify_presentation_hom(
        Presentation.build(["x", "y"], ["xyXY"]), square, {"x": Word.parse("ac"), "y": Word.parse("b")}
    )
    assert commuting

    check = verify_presentation_hom(
        Presentation.build(["x", "y"], ["xyXY"]), square, {"x": Word.parse("a"), "y": Word.parse("c")}
    )
    assert not check
    assert check.failing_index == 0
    assert check.image_normal_form == Word.parse("acac")


def test_verify_presentation_hom_needs_every_image(square):
    with pytest.raises(InputError, match="no image"):
        verify_presentation_hom(Presentation.build(["x", "y"], ["xy"]), square, {"x": Word.parse("a")})
