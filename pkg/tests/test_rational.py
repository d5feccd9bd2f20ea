from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bbknots.diagram import rational_tangle
from bbknots.rational import (
    InvalidFraction,
    Orientation,
    RationalLink,
    SignedVector,
    braid_index_oriented,
    braid_index_unoriented,
    component_count,
    evaluate_cf,
    is_bb_2bridge,
    mirror,
    orient_and_sign,
    orientations,
    signed_vectors,
    standard_cf,
)


@st.composite
def fractions(draw, max_alpha=10**5):
    alpha = draw(st.integers(2, max_alpha))
    beta = draw(st.integers(1, alpha - 1).filter(lambda b: gcd(alpha, b) == 1))
    return RationalLink(alpha, beta)


def diagram_signed_vectors(cf):
    """Signed vectors read off the full planar diagram, one per orientation."""
    d = rational_tangle(cf).close([("NW", "SW"), ("NE", "SE")])
    ncomp = len(d.components())
    out = set()
    for bits in ([False] * ncomp, [False] * (ncomp - 1) + [True]):
        od = d.orient(bits)
        signs = od.signs()
        vec = []
        for k, a in enumerate(cf, 1):
            region = {signs[c] for c, x in enumerate(d.crossings) if x.region == k}
            assert len(region) == 1, "a twist region must carry a single sign"
            vec.append(region.pop() * a)
        out.add(tuple(vec))
    return out


class TestStandardCF:
    @pytest.mark.parametrize(
        "alpha,beta,expected",
        [((17426), 5075, (3, 2, 3, 3, 1, 2, 3, 4, 4)), (2, 1, (2,)), (3, 2, (1, 1, 1))],
    )
    def test_examples(self, alpha, beta, expected):
        assert standard_cf((alpha, beta)) == expected

    @pytest.mark.parametrize("alpha,beta", [(4, 2), (5, 5), (5, 0), (3, 7)])
    def test_rejects_invalid(self, alpha, beta):
        with pytest.raises(InvalidFraction):
            standard_cf((alpha, beta))

    @given(fractions())
    @settings(max_examples=300)
    def test_round_trip(self, f):
        cf = standard_cf(f)
        assert len(cf) % 2 == 1 and all(a >= 1 for a in cf)
        assert evaluate_cf(cf) == Fraction(f.beta, f.alpha)

    def test_round_trip_exhaustive_small(self):
        for alpha in range(2, 400):
            for beta in range(1, alpha):
                if gcd(alpha, beta) == 1:
                    assert evaluate_cf(standard_cf((alpha, beta))) == Fraction(beta, alpha)

    def test_interior_zero_evaluates(self):
        # (1, 0, 1) collapses to (2)
        assert evaluate_cf((1, 0, 1)) == Fraction(1, 2)


class TestSignedVectors:
    def test_worked_example(self):
        cf = standard_cf((17426, 5075))
        default = orient_and_sign(cf, Orientation.DEFAULT)
        reversed_ = orient_and_sign(cf, Orientation.REVERSED)
        assert default.entries == (3, 2, 3, 3, -1, -2, -3, 4, -4)
        assert default.component_count == 2
        assert braid_index_oriented(default) == 10
        assert braid_index_oriented(reversed_) == 9
        assert braid_index_unoriented((17426, 5075)) == 9

    def test_tracker_matches_diagram_engine(self):
        checked = 0
        for alpha in range(2, 60):
            for beta in range(1, alpha):
                if gcd(alpha, beta) != 1:
                    continue
                cf = standard_cf((alpha, beta))
                fast = {orient_and_sign(cf, o).entries for o in orientations(cf)}
                assert fast == diagram_signed_vectors(cf), (alpha, beta)
                checked += 1
        assert checked > 1000

    def test_component_count_is_alpha_parity(self):
        for alpha in range(2, 200):
            for beta in range(1, alpha):
                if gcd(alpha, beta) == 1:
                    assert component_count(standard_cf((alpha, beta))) == (2 if alpha % 2 == 0 else 1)

    def test_knot_has_single_orientation(self):
        cf = standard_cf((5, 2))
        assert orientations(cf) == [Orientation.DEFAULT]
        with pytest.raises(ValueError):
            orient_and_sign(cf, Orientation.REVERSED)

    def test_vector_validation(self):
        with pytest.raises(ValueError):
            SignedVector((1, 2), 1)
        with pytest.raises(ValueError):
            SignedVector((1, 0, 1), 1)

    @given(fractions(max_alpha=10**4))
    @settings(max_examples=400)
    def test_sign_structure(self, f):
        for sv in signed_vectors(f):
            b = sv.entries
            if len(b) >= 2:
                assert (b[0] > 0) == (b[1] > 0)
            if len(b) >= 3 and b[2] > 0:
                assert abs(b[1]) % 2 == 0

    def test_sign_structure_violations_are_even_negative_b1(self):
        # the only departures from the lemma have b1 negative and even with b2 > 0
        for alpha in range(2, 300):
            for beta in range(1, alpha):
                if gcd(alpha, beta) != 1:
                    continue
                for sv in signed_vectors((alpha, beta)):
                    b = sv.entries
                    first = len(b) >= 2 and (b[0] > 0) != (b[1] > 0)
                    second = len(b) >= 3 and b[2] > 0 and abs(b[1]) % 2 == 1
                    if first or second:
                        assert b[0] < 0 and b[0] % 2 == 0 and b[1] > 0, b

    def test_figure_eight_forces_lemma_violation(self):
        # every sign pattern on (2,1,1) reaching braid index 3 breaks the lemma
        from itertools import product

        hits = []
        for signs in product((1, -1), repeat=3):
            vec = tuple(s * a for s, a in zip(signs, (2, 1, 1)))
            try:
                if braid_index_oriented(vec) == 3:
                    hits.append(vec)
            except ArithmeticError:
                pass
        assert hits and all((v[0] > 0) != (v[1] > 0) for v in hits)
        assert orient_and_sign((2, 1, 1), Orientation.DEFAULT).entries in hits

    @pytest.mark.parametrize(
        "alpha,beta,index",
        [(3, 1, 2), (5, 2, 3), (5, 1, 2), (7, 2, 3), (9, 2, 4), (11, 3, 3), (13, 5, 3),
         (7, 1, 2), (11, 2, 4), (13, 3, 3), (15, 4, 4), (17, 5, 3), (19, 7, 4), (21, 8, 4)],
    )
    def test_knot_table(self, alpha, beta, index):
        # braid indices of the 2-bridge knots through seven crossings
        assert braid_index_unoriented((alpha, beta)) == index

    @given(fractions(max_alpha=5000))
    @settings(max_examples=300)
    def test_braid_index_positive_integer(self, f):
        for sv in signed_vectors(f):
            assert braid_index_oriented(sv) >= 2

    def test_non_integral_vector_raises(self):
        # not produced by any orientation; the formula gives a half integer
        with pytest.raises(ArithmeticError):
            braid_index_oriented((1, 1, -1))


class TestBB:
    @pytest.mark.parametrize("alpha,beta,expected", [(3, 1, 2), (5, 2, 3), (7, 1, 2)])
    def test_unoriented_examples(self, alpha, beta, expected):
        assert braid_index_unoriented((alpha, beta)) == expected

    def test_examples(self):
        assert is_bb_2bridge((7, 1))
        assert not is_bb_2bridge((5, 2))
        for n in range(2, 60):
            assert is_bb_2bridge((n, n - 1))

    def test_mirror_keeps_braid_index(self):
        for alpha in range(3, 120):
            for beta in range(1, alpha):
                if gcd(alpha, beta) == 1:
                    assert braid_index_unoriented((alpha, beta)) == braid_index_unoriented(mirror((alpha, beta)))

    def test_torus_criterion_exhaustive(self):
        for alpha in range(2, 201):
            for beta in range(1, alpha):
                if gcd(alpha, beta) == 1:
                    assert is_bb_2bridge((alpha, beta)) == (beta in (1, alpha - 1))
