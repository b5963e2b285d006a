"""Smoke tests for the krongraph python module."""

import math

import pytest

import krongraph as kg

GRAPH500 = kg.GeneratorMatrix(0.57, 0.19, 0.19, 0.05)


def test_version():
    assert kg.__version__


def test_validate_rejects_bad_sum():
    with pytest.raises(ValueError):
        kg.GeneratorMatrix(0.5, 0.5, 0.5, 0.5)


def test_presets_include_graph500():
    names = {p.name for p in kg.presets()}
    assert {"graph500", "soc-epinions", "ca-hepth", "cit-hepph"} <= names
    graph500 = next(p for p in kg.presets() if p.name == "graph500")
    assert graph500.default_levels == 18
    assert graph500.edge_count(18) == 16 * 2**18


def test_single_level_entries_are_the_matrix():
    assert kg.skg_entry(GRAPH500, 1, 0, 0) == pytest.approx(0.57)
    assert kg.skg_entry(GRAPH500, 1, 1, 1) == pytest.approx(0.05)


def test_generate_and_symmetrize():
    edges = kg.generate_skg(GRAPH500, levels=8, edges=4096, seed=1)
    assert len(edges) == 4096
    g = kg.symmetrize(edges, 2**8)
    assert g.edge_count + g.duplicates_dropped + g.self_loops_dropped == 4096
    histogram = kg.degree_distribution(g)
    assert sum(histogram.values()) == 2**8


def test_generation_is_deterministic():
    a = kg.generate_skg(GRAPH500, levels=6, edges=512, seed=9)
    b = kg.generate_skg(GRAPH500, levels=6, edges=512, seed=9)
    assert a == b


def test_nskg_zero_noise_matches_skg():
    schedule, edges = kg.generate_nskg(GRAPH500, levels=6, edges=512, noise=0.0, seed=9)
    assert edges == kg.generate_skg(GRAPH500, levels=6, edges=512, seed=9)
    assert len(schedule) == 6


def test_associated_cl_and_sampling():
    degrees = kg.associated_cl(GRAPH500, 6, 1024)
    assert sum(degrees.out_weights) == pytest.approx(1024.0)
    assert kg.cl_entry(degrees, 0, 0) == pytest.approx(kg.cl_entry_closed(GRAPH500, 6, 0, 0))
    edges = kg.generate_cl(degrees, 1024, seed=3)
    assert len(edges) == 1024


def test_spectrum_totals_and_theorem_gap():
    spectrum = kg.skg_spectrum(GRAPH500, 18)
    assert spectrum.total_multiplicity() == 4**18  # exact python int
    assert spectrum.total_mass() == pytest.approx(1.0, abs=1e-9)
    assert kg.mass_below(spectrum, 1e-20) < 1e-5

    ratio = kg.GeneratorMatrix(0.4, 0.2, 4.0 / 15.0, 2.0 / 15.0)
    assert kg.check_ratio_condition(ratio, 1e-12)
    assert kg.theorem_gap(ratio, 20) <= 1e-12
    assert kg.theorem_gap(GRAPH500, 18) > 0.0


def test_binning_conserves_counts():
    rows = kg.bin_skg_into_cl(kg.skg_spectrum(GRAPH500, 10), kg.cl_spectrum(GRAPH500, 10))
    assert sum(r[2] for r in rows) == 4**10


def test_metrics_on_a_triangle():
    g = kg.symmetrize([(0, 1), (1, 2), (2, 0)], 3)
    cc = kg.clustering_by_degree(g)
    assert cc[2] == (pytest.approx(1.0), 3)
    core_numbers, core_sizes = kg.core_decomposition(g)
    assert core_numbers == [2, 2, 2]
    assert core_sizes == {1: 3, 2: 3}
    values = kg.top_eigenvalues(g, 3)
    assert values[0] == pytest.approx(2.0, abs=1e-8)


def test_star_eigenvalue_pair():
    g = kg.symmetrize([(0, i) for i in range(1, 10)], 10)
    values = kg.top_eigenvalues(g, 2)
    assert values[0] == pytest.approx(3.0, abs=1e-8)
    assert values[1] == pytest.approx(-3.0, abs=1e-8)


def test_spy_raster_counts():
    grid = kg.spy_raster([(0, 0), (3, 3)], 4, 2)
    assert grid == [[1, 0], [0, 1]]
