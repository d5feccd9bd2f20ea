import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import fd_gradient, random_curve, relative_error

from bbknots.braidcensus import BraidWord, closure_components
from bbknots.elastic import (
    ENERGY_COLUMNS,
    GuardError,
    PolygonalCurve,
    SimParams,
    TorusBraidInit,
    bending_energy,
    braid_torus_init,
    gradient,
    meridian_crossings,
    minimize,
    read_obj,
    regular_polygon,
    ropelength,
    thickness,
    total_curvature,
    total_energy,
    write_csv,
    write_energy_log,
    write_obj,
)

FOUR_PI_SQ = (4 * math.pi) ** 2


class TestCurve:
    def test_validation(self):
        with pytest.raises(ValueError):
            PolygonalCurve(np.zeros((5, 3)))
        with pytest.raises(ValueError):
            PolygonalCurve(np.zeros((10, 2)))
        x = regular_polygon(10).vertices.copy()
        x[3] = x[2]
        with pytest.raises(ValueError):
            PolygonalCurve(x)
        x[3, 0] = np.nan
        with pytest.raises(ValueError):
            PolygonalCurve(x)

    def test_vertices_are_read_only(self):
        c = regular_polygon(12)
        with pytest.raises(ValueError):
            c.vertices[0, 0] = 5.0

    def test_normalize_and_resample(self):
        c = random_curve(np.random.default_rng(1))
        assert c.length() == pytest.approx(1.0)
        r = c.resampled(50)
        assert r.n == 50
        lens = r.edge_lengths()
        assert lens.std() / lens.mean() < 0.05


class TestEnergies:
    def test_regular_polygon_exact(self):
        for n in (16, 64, 257):
            c = regular_polygon(n).normalized()
            assert bending_energy(c) == pytest.approx((2 * math.pi) ** 2, rel=1e-12)
            assert total_curvature(c) == pytest.approx(2 * math.pi, rel=1e-12)

    def test_double_cover(self):
        c = regular_polygon(101, cover=2).normalized()
        assert bending_energy(c) == pytest.approx(FOUR_PI_SQ, rel=1e-12)
        assert total_curvature(c) == pytest.approx(4 * math.pi, rel=1e-12)
        assert ropelength(c) == math.inf
        assert thickness(c).kind == "touching"

    def test_k_cover_curvature(self):
        for k in (3, 4):
            c = regular_polygon(7 * k + 1, cover=k)
            assert total_curvature(c) == pytest.approx(2 * math.pi * k, rel=1e-12)

    @given(st.floats(0.1, 10.0))
    @settings(max_examples=25)
    def test_scaling(self, lam):
        c = random_curve(np.random.default_rng(3))
        assert bending_energy(c.scaled(lam)) == pytest.approx(bending_energy(c) / lam, rel=1e-9)
        assert ropelength(c.scaled(lam)) == pytest.approx(ropelength(c), rel=1e-9)

    def test_circle_ropelength_limit(self):
        assert ropelength(regular_polygon(512)) == pytest.approx(2 * math.pi, rel=1e-4)

    def test_circle_total_energy(self):
        c = regular_polygon(256).normalized()
        e = total_energy(c, 1.0)
        assert e.e_theta == pytest.approx((2 * math.pi) ** 2 + 2 * math.pi, rel=0.01)
        assert total_energy(c, 1e-9).e_theta == pytest.approx(e.e_bend, rel=1e-9)
        assert total_energy(c, 0.5).e_theta < e.e_theta
        with pytest.raises(ValueError):
            total_energy(c, 0.0)

    def test_pair_thickness_between_far_strands(self):
        # two parallel lines joined by wide arcs: the gap controls thickness
        t = np.linspace(0, 1, 20, endpoint=False)
        top = np.column_stack([t * 4, np.full_like(t, 0.1), np.zeros_like(t)])
        bottom = np.column_stack([4 - t * 4, np.full_like(t, -0.1), np.zeros_like(t)])
        c = PolygonalCurve(np.vstack([top, bottom]))
        th = thickness(c)
        assert th.value <= 0.1 + 1e-12

    @given(st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_cauchy_schwarz(self, seed):
        c = random_curve(np.random.default_rng(seed))
        assert total_curvature(c) ** 2 <= bending_energy(c) * c.length() * (1 + 1e-12)


class TestGradient:
    def test_regular_polygon_bending_gradient_is_radial(self):
        c = regular_polygon(40).normalized()
        g = gradient(c, 1e-12)
        x = c.vertices
        tangent = np.roll(x, -1, axis=0) - np.roll(x, 1, axis=0)
        tangent /= np.linalg.norm(tangent, axis=1)[:, None]
        tang = np.einsum("ij,ij->i", g, tangent)
        assert np.max(np.abs(tang)) < 1e-9 * np.max(np.linalg.norm(g, axis=1))

    def test_translation_invariance(self):
        for seed in range(5):
            g = gradient(random_curve(np.random.default_rng(seed)), 1e-2)
            assert np.linalg.norm(g.sum(axis=0)) < 1e-8 * np.linalg.norm(g)

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_finite_differences(self, seed):
        c = random_curve(np.random.default_rng(seed))
        for theta in (1e-2, 1.0):
            assert relative_error(gradient(c, theta), fd_gradient(c, theta)) < 1e-4

    def test_touching_has_no_gradient(self):
        with pytest.raises(GuardError):
            gradient(regular_polygon(21, cover=2), 1e-3)


class TestInit:
    def test_trefoil_torus(self):
        c = braid_torus_init(TorusBraidInit(rho=0.3, torus=(2, 3)))
        assert c.n == 128 and c.length() == pytest.approx(1.0)
        assert meridian_crossings(c) == 2
        assert total_curvature(c) > 4 * math.pi

    def test_small_rho_limit(self):
        for pq, k in (((2, 3), 2), ((3, 4), 3)):
            c = braid_torus_init(TorusBraidInit(rho=0.01, torus=pq, n=512))
            assert bending_energy(c) == pytest.approx((2 * math.pi * k) ** 2, rel=0.02)

    def test_figure_eight_word(self):
        spec = TorusBraidInit(rho=0.3, word="aBaB")
        assert closure_components(BraidWord.parse("aBaB")) == 1
        c = braid_torus_init(spec)
        assert meridian_crossings(c) == 3
        assert thickness(c).kind != "touching"

    def test_signed_integer_word(self):
        a = braid_torus_init(TorusBraidInit(word="aBaB"))
        b = braid_torus_init(TorusBraidInit(word=(1, -2, 1, -2)))
        assert np.allclose(a.vertices, b.vertices)

    def test_rejections(self):
        with pytest.raises(ValueError):
            braid_torus_init(TorusBraidInit(rho=1.5, torus=(2, 3)))
        with pytest.raises(ValueError):
            braid_torus_init(TorusBraidInit(torus=(2, 4)))
        with pytest.raises(ValueError):
            braid_torus_init(TorusBraidInit(word="aa"))  # a two-component closure
        with pytest.raises(ValueError):
            braid_torus_init(TorusBraidInit(word="axB"))
        with pytest.raises(ValueError):
            braid_torus_init(TorusBraidInit())


class TestParams:
    def test_defaults(self):
        p = SimParams()
        assert p.theta_schedule == (1e-2, 1e-3, 1e-4) and p.n == 128

    @pytest.mark.parametrize("schedule", [(), (1e-3, 1e-2), (1e-2, 0.0), (1e-2, 1e-2)])
    def test_bad_schedule(self, schedule):
        with pytest.raises(ValueError):
            SimParams(theta_schedule=schedule)

    def test_from_file(self, tmp_path):
        f = tmp_path / "sim.cfg"
        f.write_text("# run settings\ntheta_schedule = 1e-2, 1e-3\nmax_steps = 50  # short\nn = 64\n")
        p = SimParams.from_file(f)
        assert p.theta_schedule == (1e-2, 1e-3) and p.max_steps == 50 and p.n == 64

    def test_from_file_errors(self, tmp_path):
        f = tmp_path / "bad.cfg"
        f.write_text("colour = red\n")
        with pytest.raises(ValueError, match="unknown key"):
            SimParams.from_file(f)
        f.write_text("max_steps 5\n")
        with pytest.raises(ValueError, match="key = value"):
            SimParams.from_file(f)


@pytest.fixture(scope="module")
def run():
    c0 = braid_torus_init(TorusBraidInit(rho=0.3, torus=(2, 3), n=64))
    p = SimParams(theta_schedule=(1e-2, 1e-3), max_steps=150, n=64, record_every=1)
    seen = []
    r = minimize(c0, p, bridge=2, callback=lambda step, e: seen.append(step))
    return c0, r, seen


class TestMinimize:
    def test_energy_monotone_within_stage(self, run):
        _, r, _ = run
        for theta in (1e-2, 1e-3):
            es = [h["e_theta"] for h in r.history if h["theta"] == theta]
            assert all(b <= a + 1e-12 for a, b in zip(es, es[1:]))

    def test_guards_hold_along_trajectory(self, run):
        _, r, _ = run
        for h in r.history:
            assert h["total_curvature"] > 4 * math.pi - 1e-3
            assert h["total_curvature"] ** 2 <= h["e_bend"] * (1 + 1e-9)
            assert h["min_thickness"] > 1e-4

    def test_energy_drops(self, run):
        c0, r, seen = run
        assert r.final.e_bend < bending_energy(c0)
        assert r.curve.length() == pytest.approx(1.0)
        assert len(r.stages) == 2 and seen

    def test_deterministic(self, run):
        c0, r, _ = run
        p = SimParams(theta_schedule=(1e-2, 1e-3), max_steps=150, n=64, record_every=1)
        again = minimize(c0, p, bridge=2)
        assert np.array_equal(again.curve.vertices, r.curve.vertices)

    def test_rejects_touching_start(self):
        with pytest.raises(GuardError):
            minimize(regular_polygon(63, cover=2))

    def test_curvature_guard_trips(self):
        # a round circle cannot represent a bridge-2 class
        p = SimParams(theta_schedule=(1e-2,), max_steps=5, n=64)
        with pytest.raises(GuardError):
            minimize(regular_polygon(64), p, bridge=2)


class TestExport:
    def test_obj_round_trip(self, tmp_path):
        c = random_curve(np.random.default_rng(7))
        write_obj(c, tmp_path / "c.obj")
        back = read_obj(tmp_path / "c.obj")
        assert np.allclose(back.vertices, c.vertices, atol=1e-11)
        text = (tmp_path / "c.obj").read_text()
        assert text.strip().splitlines()[-1].endswith(" 1")

    def test_csv_and_log_deterministic(self, tmp_path):
        c = random_curve(np.random.default_rng(7))
        write_csv(c, tmp_path / "a.csv")
        write_csv(c, tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
        assert (tmp_path / "a.csv").read_text().splitlines()[0] == "x,y,z"
        row = {"step": 1, **total_energy(c, 1e-3).as_row()}
        write_energy_log([row], tmp_path / "log.csv")
        assert (tmp_path / "log.csv").read_text().splitlines()[0] == ",".join(ENERGY_COLUMNS)
