"""Smoke tests for the python bindings."""

import math

import pytest

hd = pytest.importorskip("harmonicduality")


def test_cos_fixture_transform():
    data = hd.AnnulusBoundaryData(
        0.5,
        2.0,
        hd.PeriodicFunction.harmonic_cos(1, 4.0),
        hd.PeriodicFunction.harmonic_cos(1),
        hd.BoundaryKind.NEUMANN,
    )
    assert hd.check_neumann_compatibility(data).ok
    U = hd.neumann_from_dirichlet_annulus(data)
    mode = U.field.mode(1)
    assert mode.C == pytest.approx(0.8, abs=1e-12)
    assert mode.D == pytest.approx(-0.8, abs=1e-12)
    assert U.field.eval(1.0, 0.0) == pytest.approx(0.0, abs=1e-12)
    assert U.field.deriv(2.0, 0.3, 1, 0) == pytest.approx(math.cos(0.3), abs=1e-12)


def test_dirichlet_round_trip():
    data = hd.AnnulusBoundaryData(
        0.5,
        2.0,
        hd.PeriodicFunction.harmonic_cos(1, 4.0),
        hd.PeriodicFunction.harmonic_cos(1),
        hd.BoundaryKind.NEUMANN,
    )
    U = hd.neumann_from_dirichlet_annulus(data)
    u = hd.dirichlet_from_neumann(U)
    assert u.mode(1).C == pytest.approx(0.8, abs=1e-12)
    assert u.mode(1).D == pytest.approx(0.8, abs=1e-12)
    assert hd.roundtrip_report(data) < 1e-11


def test_disk_corollary():
    U = hd.neumann_from_dirichlet_disk(hd.PeriodicFunction.harmonic_cos(2))
    assert U.field.mode(2).C == pytest.approx(0.5, abs=1e-14)
    with pytest.raises(ValueError):
        hd.neumann_from_dirichlet_disk(hd.PeriodicFunction.constant(1.0))


def test_joukowsky_identities():
    for z in (0.3 + 0.4j, -2.0 + 0.0j, 1.5 - 2.2j):
        w = hd.t_plus(z)
        assert abs(hd.joukowsky(w) - z) < 1e-13
        assert abs(w) >= 1.0 - 1e-12
        assert abs(hd.t_minus(z)) <= 1.0 + 1e-12


def test_ellipse_solution_matches_exact_field():
    rho = 2.0
    E = hd.EllipseRegion(rho)
    a, b = E.semi_major, E.semi_minor

    def f(z):  # outward normal y-component: exact data for U = Im z
        n = complex(z.real / a**2, z.imag / b**2)
        return (n / abs(n)).imag

    U = hd.neumann_on_ellipse(f, rho)
    assert U.eval(1.0 + 0.0j) == pytest.approx(0.0, abs=1e-10)
    assert U.eval(0.3 + 0.5j) == pytest.approx(0.5, abs=1e-8)


def test_json_round_trip():
    data = hd.AnnulusBoundaryData(
        0.5,
        2.0,
        hd.PeriodicFunction.harmonic_sin(2),
        hd.PeriodicFunction.harmonic_cos(1),
        hd.BoundaryKind.DIRICHLET,
    )
    text = data.to_json()
    back = hd.AnnulusBoundaryData.from_json(text)
    u = hd.solve_dirichlet_annulus(back)
    u2 = hd.AnnulusHarmonicSeries.from_json(u.to_json())
    assert u2.eval(1.3, 0.7) == pytest.approx(u.eval(1.3, 0.7), abs=1e-14)


def test_fd_oracle_close_to_series():
    data = hd.AnnulusBoundaryData(
        0.5,
        2.0,
        hd.PeriodicFunction.harmonic_cos(1),
        hd.PeriodicFunction.harmonic_cos(1),
        hd.BoundaryKind.DIRICHLET,
    )
    u = hd.solve_dirichlet_annulus(data)
    g = hd.fd_dirichlet_solve(data, 24, 48)
    worst = max(
        abs(g.at(i, j) - u.eval(g.r(i), g.theta(j)))
        for i in range(g.nr)
        for j in range(g.ntheta)
    )
    assert worst < 5e-3
