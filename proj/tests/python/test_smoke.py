"""Smoke tests for the python bindings."""

import math

import pytest

import spherequant as sq


def test_closed_form_matches_reference():
    assert sq.closed_form_error(2 * math.pi, 3) == pytest.approx(math.pi**2 / 27, rel=1e-12)
    assert sq.closed_form_error(math.pi, 4) == pytest.approx(math.pi**2 / 192, rel=1e-12)


def test_geometry_roundtrip():
    p = sq.geo_to_cartesian(sq.GeoCoord(math.pi / 3, math.pi / 2), 1.0)
    assert p.y == pytest.approx(0.5, rel=1e-12)
    g = sq.cartesian_to_geo(p)
    assert not g.pole_degenerate
    assert g.geo.lat == pytest.approx(math.pi / 3, rel=1e-12)

    mid = sq.slerp(sq.SpherePoint(1, 0, 0), sq.SpherePoint(0, 1, 0), 0.5)
    assert mid.x == pytest.approx(1 / math.sqrt(2), rel=1e-12)
    assert sq.geodesic_distance(sq.SpherePoint(1, 0, 0), sq.SpherePoint(-1, 0, 0)) == pytest.approx(
        math.pi
    )


def test_supports_and_sampling():
    circle = sq.CurveSupport.great_circle()
    assert circle.length == pytest.approx(2 * math.pi)
    mu = sq.sample_equally_spaced(circle, 3)
    assert len(mu) == 3
    assert sum(mu.weights) == 1.0

    arc = sq.CurveSupport.great_arc(math.pi)
    cm = sq.sample_on_support(arc, 2)
    assert cm.arclen == pytest.approx([math.pi / 4, 3 * math.pi / 4])


def test_lloyd_and_dp_agree_on_the_equator():
    circle = sq.CurveSupport.great_circle()
    cm = sq.sample_on_support(circle, 60)
    dp = sq.circular_contiguous_dp(cm, 3)
    res = sq.lloyd(cm.to_measure(), 3, restarts=10)
    assert res.distortion == pytest.approx(dp.distortion, rel=1e-9)
    assert res.converged


def test_frechet_means():
    mu = sq.DiscreteMeasure(
        [sq.SpherePoint(1, 0, 0), sq.SpherePoint(0, 1, 0), sq.SpherePoint(0, 0, 1)],
        [1 / 3, 1 / 3, 1 / 3],
    )
    ext = sq.extrinsic_centroid(mu)
    a = 1 / math.sqrt(3)
    assert sq.geodesic_distance(ext.point, sq.SpherePoint(a, a, a)) < 1e-12

    pair = sq.DiscreteMeasure([sq.SpherePoint(1, 0, 0), sq.SpherePoint(-1, 0, 0)], [0.5, 0.5])
    assert sq.extrinsic_centroid(pair).degenerate
    assert sq.frechet_functional(pair, sq.SpherePoint(0, 1, 0)) == pytest.approx(math.pi**2 / 4)


def test_dimension_estimate():
    entries = [sq.ErrorEntry(n, (2 * math.pi) ** 2 / (12 * n * n), 2.0) for n in range(2, 129)]
    est = sq.estimate_dimension(entries)
    assert est.dimension == pytest.approx(1.0, abs=1e-9)
    coeff = sq.estimate_coefficient(entries, 1.0)
    assert coeff.lower == pytest.approx(math.pi**2 / 3, abs=1e-9)


def test_reference_cases_all_pass():
    rows = sq.run_reference_cases()
    assert len(rows) >= 20
    assert all(r["pass"] for r in rows)


def test_errors_are_raised():
    with pytest.raises(ValueError):
        sq.SpherePoint(2, 0, 0, 1.0)
    with pytest.raises(ValueError):
        sq.closed_form_error(1.0, 2, 0.5)
