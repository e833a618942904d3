"""Property tests over randomly generated braid-closure diagrams.

Braid words give a cheap source of genuinely planar knot diagrams of
varied shape, so the parse/rebuild/mirror machinery gets exercised well
beyond the hand-picked examples.
"""

from hypothesis import given, settings
from hypothesis import strategies as st

from knotfish.diagram import (connect_sum, mirror, parse_gauss, parse_pd,
                              to_gauss, to_pd_text, writhe)
from knotfish.generators import braid_closure
from knotfish.jones import jones, v2_v3

STRANDS = 4


def _components(word):
    perm = list(range(STRANDS))
    for g in word:
        j = abs(g) - 1
        perm[j], perm[j + 1] = perm[j + 1], perm[j]
    comp = {}
    for start in range(STRANDS):
        if start in comp:
            continue
        i = start
        while i not in comp:
            comp[i] = start
            i = perm[i]
    return comp


def _repair(word):
    """Append letters until the closure has a single component.

    Joining two strands that sit in different closure components always
    merges them, so at most STRANDS-1 letters get added.
    """
    word = list(word)
    while True:
        comp = _components(word)
        if len(set(comp.values())) == 1:
            return word
        j = next(j for j in range(STRANDS - 1) if comp[j] != comp[j + 1])
        word.append(j + 1)


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]),
                 min_size=2, max_size=8).map(_repair)
small_words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]),
                       min_size=2, max_size=4).map(_repair)


def closure_or_skip(word, strands=STRANDS):
    return braid_closure(word, strands)


@settings(deadline=None)
@given(words)
def test_pd_text_round_trip(word):
    d = closure_or_skip(word)
    assert parse_pd(to_pd_text(d)) == d


@settings(deadline=None)
@given(words)
def test_gauss_round_trip_preserves_diagram(word):
    d = closure_or_skip(word)
    again = parse_gauss(to_gauss(d).text())
    assert again == d


@settings(deadline=None)
@given(words)
def test_mirror_involution_and_writhe(word):
    d = closure_or_skip(word)
    assert mirror(mirror(d)) == d
    assert writhe(mirror(d)) == -writhe(d)


@settings(max_examples=40, deadline=None)
@given(words)
def test_mirror_flips_v3(word):
    d = closure_or_skip(word)
    v = v2_v3(d)
    m = v2_v3(mirror(d))
    assert (m.v2, m.v3) == (v.v2, -v.v3)


@settings(max_examples=25, deadline=None)
@given(small_words, small_words)
def test_connect_sum_is_additive(word1, word2):
    d1 = closure_or_skip(word1)
    d2 = closure_or_skip(word2)
    s = connect_sum(d1, d2)
    assert s.crossing_count == d1.crossing_count + d2.crossing_count
    assert writhe(s) == writhe(d1) + writhe(d2)
    a, b = v2_v3(d1), v2_v3(d2)
    assert tuple(v2_v3(s)) == (a.v2 + b.v2, a.v3 + b.v3)
    assert jones(s) == jones(d1) * jones(d2)


@settings(max_examples=40, deadline=None)
@given(words)
def test_jones_of_reversed_word_mirrors(word):
    d = closure_or_skip(word)
    md = closure_or_skip([-g for g in word])
    v = v2_v3(d)
    m = v2_v3(md)
    assert (m.v2, m.v3) == (v.v2, -v.v3)


@settings(deadline=None)
@given(words)
def test_bracket_loop_count_positive(word):
    d = closure_or_skip(word)
    # the all-A state of any braid closure leaves at least one circle
    from knotfish.jones import kauffman_bracket
    br = kauffman_bracket(d)
    assert br  # never the zero polynomial
