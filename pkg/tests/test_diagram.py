from math import gcd

import pytest

from bbknots.diagram import (
    BACKSLASH,
    SLASH,
    DiagramError,
    Tangle,
    integer_tangle,
    opposite,
    rational_tangle,
)
from bbknots.rational import standard_cf


def two_bridge(cf):
    return rational_tangle(cf).close([("NW", "SW"), ("NE", "SE")])


def test_opposite_slots():
    assert [opposite(s) for s in range(4)] == [3, 2, 1, 0]


def test_torus_link_diagram():
    for n in range(2, 9):
        d = two_bridge((n,))
        assert d.n_crossings == n
        assert len(d.components()) == (2 if n % 2 == 0 else 1)
        od = d.orient([False] * len(d.components()))
        assert abs(od.writhe()) == n
        # closed 2-braid: two Seifert circles
        assert len(od.seifert_circles()) == 2


def test_determinant_is_alpha():
    for alpha in range(2, 80):
        for beta in range(1, alpha):
            if gcd(alpha, beta) == 1:
                assert two_bridge(standard_cf((alpha, beta))).determinant() == alpha


def test_standard_diagrams_alternate():
    for f in [(5, 2), (17426, 5075), (13, 5)]:
        assert two_bridge(standard_cf(f)).is_alternating()


def test_crossing_type_flips_signs():
    up = rational_tangle((3,), SLASH).close([("NW", "SW"), ("NE", "SE")])
    down = rational_tangle((3,), BACKSLASH).close([("NW", "SW"), ("NE", "SE")])
    assert up.orient([False]).writhe() == -down.orient([False]).writhe()


def test_regions_recorded():
    t = rational_tangle((2, 1, 3), tangle=4)
    assert sorted(c.region for c in t.crossings) == [1, 1, 2, 3, 3, 3]
    assert {c.tangle for c in t.crossings} == {4}


def test_reversing_a_component_flips_mixed_crossings():
    d = two_bridge((4,))
    a = d.orient([False, False]).signs()
    b = d.orient([False, True]).signs()
    assert all(x == -y for x, y in zip(a, b))


def test_integer_tangle_sum_closes():
    t = integer_tangle(2).then(integer_tangle(3))
    d = t.close([("NE", "NW"), ("SE", "SW")])
    assert d.n_crossings == 5


def test_crossingless_closure_rejected():
    with pytest.raises(DiagramError):
        Tangle.infinity().close([("NW", "SW"), ("NE", "SE")])


def test_odd_length_required():
    with pytest.raises(DiagramError):
        rational_tangle((1, 2))
