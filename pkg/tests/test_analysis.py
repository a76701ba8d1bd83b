"""The two-route reconciliation layer."""
import pytest

from mainspec.analysis import (
    GraphAnalysis,
    RouteDisagreementError,
    analyze_graph,
    analyze_pair,
    resolve_spectrum,
)
from mainspec.graphs import (
    cycle,
    double_star,
    enumerate_graphs,
    harmonic_tree,
    path,
    pendant_decorated,
    star,
)
from mainspec.spectra import EigenGroup, MainSpectrum


def test_routes_agree_exhaustively_n4():
    for g in enumerate_graphs(4):
        a = analyze_graph(g)  # strict: would raise on disagreement
        assert a.s_float == a.rank
        assert not a.used_fallback


@pytest.mark.parametrize(
    "g,count",
    [
        (path(6), 3),
        (cycle(6), 1),
        (star(6), 2),
        (double_star(2, 3), 4),
        (double_star(3, 3), 2),
        (harmonic_tree(2), 2),
        (pendant_decorated(cycle(5), 2), 2),
    ],
    ids=["P6", "C6", "K_1_5", "T23", "T33", "HT2", "H2_2"],
)
def test_family_main_counts(g, count):
    a = analyze_graph(g)
    assert a.main_count == count
    assert a.rank == count


def test_path6_main_values():
    a = analyze_graph(path(6))
    expected = [1.801937735804838, 0.445041867912629, -1.246979603717467]
    got = a.spectrum.main_values()
    assert len(got) == 3
    for v, e in zip(got, expected):
        assert abs(v - e) < 1e-10


def test_pendant_cycle_mains():
    # two-main family: values 1 +- sqrt(1+q) for q pendants on a 2-regular base
    a = analyze_graph(pendant_decorated(cycle(5), 2))
    v1, v2 = a.spectrum.main_values()
    assert abs(v1 - 2.732050807568877) < 1e-10
    assert abs(v2 + 0.732050807568877) < 1e-10


def test_harmonic_levels():
    assert analyze_graph(harmonic_tree(3)).harmonic_level == 3
    assert analyze_graph(cycle(5)).harmonic_level == 2
    assert analyze_graph(path(4)).harmonic_level is None
    assert analyze_graph(path(4)).is_harmonic is False


def test_eigenvalue_by_position():
    a = analyze_graph(cycle(4))  # spectrum 2, 0, 0, -2
    assert a.eigenvalue(0) == a.lambda_max
    assert abs(a.eigenvalue(1)) < 1e-12
    assert abs(a.eigenvalue(2)) < 1e-12
    assert a.eigenvalue(3) == a.lambda_min
    with pytest.raises(IndexError):
        a.eigenvalue(4)


def test_gray_zone_uses_fallback():
    # P_39: one projection sits inside the gray band, so the float route
    # abstains and the exact rank decides.  Still strict-safe.
    a = analyze_graph(path(39))
    assert a.used_fallback
    assert a.s_float is None
    assert a.main_count == a.rank == 20


def test_fallback_keeps_path_parity():
    a = analyze_graph(path(39))
    # mains must still be exactly the odd-index eigenvalues
    for idx, grp in enumerate(a.spectrum.groups):
        assert grp.is_main == ((idx + 1) % 2 == 1)


def test_double_star_14_15_fallback_consistent():
    a = analyze_graph(double_star(14, 15))
    assert a.main_count == a.rank == 4


def test_keep_decomposition():
    a = analyze_graph(path(3), keep_decomposition=True)
    assert a.decomposition is not None
    assert analyze_graph(path(3)).decomposition is None


def test_analyze_pair_orders():
    a, c = analyze_pair(path(4))
    assert a.graph.m + c.graph.m == 6
    assert a.main_count == c.main_count  # complement preserves the count


def test_resolve_spectrum_disagreement_surfaces():
    spectrum = MainSpectrum((
        EigenGroup(2.0, 1, 4.0),
        EigenGroup(-1.0, 1, 1e-30),
    ))
    final, s_float, used_fallback = resolve_spectrum(spectrum, [True, False], [], 2)
    # the resolver reports the float count as-is; strict analyze_graph would
    # turn this mismatch into RouteDisagreementError
    assert s_float == 1
    assert not used_fallback
    assert final.classified


def test_strict_flag_difference():
    fake = MainSpectrum((
        EigenGroup(2.0, 1, 4.0),
        EigenGroup(-1.0, 1, 1e-30),
    ))
    err = RouteDisagreementError(1, 2)
    assert err.s_float == 1 and err.rank == 2
    assert "walk-matrix rank" in str(err)
    # analyze_graph(strict=False) never raises on real graphs here; exercised
    # end to end by the sweeps.
    a = analyze_graph(path(5), strict=False)
    assert isinstance(a, GraphAnalysis)
