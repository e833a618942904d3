from math import gcd

import pytest

from knotfish.diagram import writhe
from knotfish.errors import InputError, ValidationError
from knotfish.generators import (TorusParams, WhiteheadIndex, braid_closure,
                                 torus_pd, whitehead_closed_form, whitehead_pd)
from knotfish.jones import v2_v3
from knotfish.torus import torus_v2v3


def all_small_torus_params(max_braid_crossings=14):
    """Coprime (p, q), both >= 2, with |q|(|p|-1) braid crossings in range."""
    out = []
    for p in range(2, 9):
        for q in range(2, 15):
            if gcd(p, q) == 1 and q * (p - 1) <= max_braid_crossings:
                out.append((p, q))
    return out


def test_torus_params_validation():
    with pytest.raises(InputError):
        TorusParams(0, 5)
    with pytest.raises(InputError):
        TorusParams(4, 6)
    assert TorusParams(2, 3).is_unknot is False
    assert TorusParams(1, 7).is_unknot is True


def test_unknot_parameters_give_empty_diagram():
    assert torus_pd((2, 1)).crossing_count == 0
    assert torus_pd((1, 9)).crossing_count == 0
    assert torus_pd((-1, 2)).crossing_count == 0


def test_torus_braid_shape():
    d = torus_pd((3, 4))
    assert d.crossing_count == 8          # |q| (|p|-1)
    assert writhe(d) == 8
    assert tuple(v2_v3(d)) == (5, 10)


def test_trefoil_anchor():
    assert tuple(v2_v3(torus_pd((2, 3)))) == (1, 1)


@pytest.mark.parametrize("pq", all_small_torus_params())
def test_torus_diagrams_match_closed_forms(pq):
    assert v2_v3(torus_pd(pq)) == torus_v2v3(pq)


def test_torus_parameter_symmetry():
    for pq in [(2, 3), (3, 4), (2, 5), (3, 5)]:
        swapped = (pq[1], pq[0])
        assert v2_v3(torus_pd(pq)) == v2_v3(torus_pd(swapped))
        both_neg = (-pq[0], -pq[1])
        assert v2_v3(torus_pd(pq)) == v2_v3(torus_pd(both_neg))


def test_torus_mirror_parameters():
    for pq in [(2, 3), (3, 4), (2, 7)]:
        v = v2_v3(torus_pd(pq))
        m = v2_v3(torus_pd((pq[0], -pq[1])))
        assert (m.v2, m.v3) == (v.v2, -v.v3)


def test_whitehead_crossing_counts():
    for i in range(-4, 5):
        assert whitehead_pd(i).crossing_count == 2 * abs(i) + 2


def test_whitehead_zero_is_unknot_as_drawn():
    d = whitehead_pd(0)
    assert d.crossing_count == 2
    assert tuple(v2_v3(d)) == (0, 0)


@pytest.mark.parametrize("i", range(-5, 7))
def test_whitehead_matches_closed_form(i):
    assert v2_v3(whitehead_pd(i)) == whitehead_closed_form(i)


def test_whitehead_closed_form_values():
    assert tuple(whitehead_closed_form(0)) == (0, 0)
    assert tuple(whitehead_closed_form(-3)) == (-3, 3)
    assert tuple(whitehead_closed_form(2)) == (2, 3)
    assert tuple(whitehead_closed_form(WhiteheadIndex(4))) == (4, 10)


def test_whitehead_pd_accepts_index_object():
    assert whitehead_pd(WhiteheadIndex(-1)) == whitehead_pd(-1)


def test_braid_closure_figure_eight():
    # (s1 s2^-1)^2 closes to the figure-eight knot
    d = braid_closure([1, -2, 1, -2], 3)
    assert d.crossing_count == 4
    assert tuple(v2_v3(d)) == (-1, 0)


def test_braid_closure_rejects_links():
    with pytest.raises(ValidationError):
        braid_closure([1, 1], 2)          # Hopf link
    with pytest.raises(ValidationError):
        braid_closure([1], 3)             # untouched strand splits off
    with pytest.raises(ValidationError):
        braid_closure([], 2)


def test_braid_closure_rejects_bad_letters():
    with pytest.raises(InputError):
        braid_closure([3], 3)
    with pytest.raises(InputError):
        braid_closure([0], 2)


def test_braid_closure_single_strand_unknot():
    assert braid_closure([], 1).crossing_count == 0
