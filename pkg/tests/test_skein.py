"""Conway skein evaluator: anchor values, degree formula, recursion shape."""

import pytest
from hypothesis import given, settings

from conftest import any_words, homogeneous_connected
from homolink.errors import DisconnectedWordError, InhomogeneousWordError
from homolink.skein import (
    SkeinStep,
    complexity,
    complexity_less,
    conway_skein,
    degree_and_leading,
    reduction_step,
)
from homolink.words import (
    BraidWord,
    component_count,
    cyclic_permute,
    is_homogeneous,
    parse_word,
    weak_indices,
)


def conway(text):
    return conway_skein(parse_word(text)).as_dict()


def test_anchor_values():
    assert conway("") == {0: 1}
    assert conway("1") == {0: 1}
    assert conway("1 1") == {1: 1}
    assert conway("1 1 1") == {2: 1, 0: 1}
    assert conway("1 -2 1 -2") == {2: -1, 0: 1}
    assert conway("1 1 1 1") == {3: 1, 1: 2}
    assert conway("1 1 2 2") == {2: 1}
    assert conway("1 1 1 2 2") == {3: 1, 1: 1}
    assert conway("1 1 2 2 3 3") == {3: 1}
    assert conway("1 1 -2 1 -2") == {3: -1}


def test_mirror_images():
    assert conway("-1 -1 -1") == {2: 1, 0: 1}
    assert conway("-1 -1") == {1: -1}


def test_empty_word_on_wide_braid_is_a_split_unlink():
    assert conway_skein(BraidWord(3, ())).as_dict() == {}


def test_errors():
    with pytest.raises(InhomogeneousWordError):
        conway_skein(parse_word("1 -1 2"))
    with pytest.raises(DisconnectedWordError) as err:
        conway_skein(parse_word("1 1 3 3", strands=4))
    assert err.value.factors


def test_degree_and_leading_examples():
    assert degree_and_leading(parse_word("1 1 1")) == (2, 1)
    assert degree_and_leading(parse_word("1 -2 1 -2")) == (2, -1)
    assert degree_and_leading(parse_word("1 1")) == (1, 1)
    assert degree_and_leading(parse_word("-1 -1")) == (1, -1)
    with pytest.raises(ValueError):
        degree_and_leading(parse_word(""))


def test_degree_and_leading_matches_polynomial():
    for text in ["1 1 1", "1 -2 1 -2", "1 1 2 2", "-1 -1 -2 -2 -2",
                 "1 1 1 2 2", "1 1 -2 -2 -2"]:
        w = parse_word(text)
        p = conway_skein(w)
        d, lead = degree_and_leading(w)
        assert p.degree == d
        assert p.leading_coefficient == lead


def test_complexity_order():
    w = parse_word("1 1 2")
    assert complexity(w) == (1, 2)
    assert complexity_less((1, 1), (2, 1))
    assert complexity_less((2, 1), (1, 1, 1))
    assert not complexity_less((2, 1), (2, 1))


def test_reduction_step_kinds():
    assert reduction_step(parse_word("")).kind == "unknot"
    assert reduction_step(parse_word("1 1 3 3", strands=4)).kind == "split"
    assert reduction_step(parse_word("1 2 2")).kind == "destabilize"
    step = reduction_step(parse_word("1 1 1 2 2"))
    assert step.kind in {"smooth", "slide", "exchange"}
    assert isinstance(step, SkeinStep)
    assert all(isinstance(c, BraidWord) for c in step.children)


def test_reduction_children_are_smaller():
    w = parse_word("1 1 1 2 2 2")
    seen = 0
    stack = [w]
    while stack and seen < 20000:
        cur = stack.pop()
        seen += 1
        step = reduction_step(cur)
        if step.kind in {"unknot", "split"}:
            continue
        for child in step.children:
            assert complexity_less(complexity(child), complexity(cur))
            stack.append(child)
    assert not stack, "recursion did not bottom out in 20000 nodes"


@given(homogeneous_connected(max_n=4, max_m=7))
@settings(max_examples=120, deadline=None)
def test_cyclic_invariance(w):
    base = conway_skein(w)
    assert conway_skein(cyclic_permute(w, 1)) == base
    assert conway_skein(cyclic_permute(w, len(w.letters) // 2 or 1)) == base


@given(homogeneous_connected(max_n=4, max_m=7))
@settings(max_examples=120, deadline=None)
def test_mirror_flips_odd_coefficients(w):
    mirror = BraidWord(w.strands, tuple(-x for x in w.letters))
    a = conway_skein(w).as_dict()
    b = conway_skein(mirror).as_dict()
    assert b == {e: c if e % 2 == 0 else -c for e, c in a.items()}


@given(homogeneous_connected(max_n=4, max_m=7))
@settings(max_examples=120, deadline=None)
def test_degree_formula(w):
    p = conway_skein(w)
    assert p.degree == len(w.letters) - w.strands + 1
    d, lead = degree_and_leading(w)
    assert (p.degree, p.leading_coefficient) == (d, lead)


@given(any_words(max_n=4, max_m=6))
@settings(max_examples=80, deadline=None)
def test_parity_matches_components(w):
    if not is_homogeneous(w):
        return
    try:
        p = conway_skein(w)
    except DisconnectedWordError:
        return
    if not p:
        return
    # degrees present in the Conway polynomial share the parity of c - 1
    parity = (component_count(w) - 1) % 2
    assert all(e % 2 == parity for e in p.as_dict())


@given(homogeneous_connected(max_n=4, max_m=7, min_count=2))
@settings(max_examples=60, deadline=None)
def test_nonweak_recursion_never_destabilizes(w):
    if weak_indices(w):
        return
    step = reduction_step(w)
    assert step.kind in {"unknot", "smooth", "slide", "exchange"}
