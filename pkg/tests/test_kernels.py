"""Compiled and pure-Python kernels must agree exactly."""

from itertools import combinations

import numpy as np
import pytest

from oracles import brute_covers, brute_lattice, count_by_ranges
from schubcycle import _pykernels, kernels


def all_gammas(max_n):
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for g in combinations(range(1, n + 1), m):
                yield n, np.array(g, dtype=np.int64)


def test_enumeration_matches_brute_force(backend):
    for n, g in all_gammas(7):
        got = backend.enumerate_minors(n, g)
        assert [tuple(r) for r in got.tolist()] == brute_lattice(n, tuple(g))


def test_covers_match_definition(backend):
    for n, g in all_gammas(6):
        entries = backend.enumerate_minors(n, g)
        rows = [tuple(r) for r in entries.tolist()]
        edges = backend.cover_edges(n, g, entries)
        assert {(rows[a], rows[b]) for a, b in edges.tolist()} == brute_covers(rows)
        assert edges.tolist() == sorted(edges.tolist())


def test_induced_covers_on_full_lattice_equal_cover_edges(backend):
    for n, g in all_gammas(6):
        entries = backend.enumerate_minors(n, g)
        assert backend.induced_covers(entries).tolist() == backend.cover_edges(n, g, entries).tolist()


@pytest.mark.skipif("compiled" not in kernels.available_backends(), reason="extension not built")
@pytest.mark.parametrize("n, g", [(12, (1, 3, 4, 8, 9)), (14, (2, 4, 5, 9, 10, 12, 13)), (16, tuple(range(1, 9)))])
def test_backends_agree_on_larger_instances(n, g):
    compiled = kernels.get_backend("compiled")
    g = np.array(g, dtype=np.int64)
    a = compiled.enumerate_minors(n, g)
    b = _pykernels.enumerate_minors(n, g)
    assert np.array_equal(a, b)
    assert len(a) == count_by_ranges(n, tuple(g.tolist()))
    ea, eb = compiled.cover_edges(n, g, a), _pykernels.cover_edges(n, g, b)
    assert np.array_equal(ea, eb)
    for x, y in zip(compiled.chain_lengths(len(a), ea), _pykernels.chain_lengths(len(b), eb)):
        assert np.array_equal(x, y)


def test_chain_lengths_small(backend):
    # diamond 0 < 1,2 < 3 plus a pendant 0 < 4 < 3 via two steps: 0->4->5->3
    edges = np.array([[0, 1], [0, 2], [0, 4], [1, 3], [2, 3], [4, 5], [5, 3]], dtype=np.int64)
    longest, shortest = backend.chain_lengths(6, edges)
    assert longest.tolist() == [3, 1, 1, 0, 2, 1]
    assert shortest.tolist() == [2, 1, 1, 0, 2, 1]


def test_empty_inputs(backend):
    longest, shortest = backend.chain_lengths(0, np.zeros((0, 2), dtype=np.int64))
    assert longest.shape == shortest.shape == (0,)
    assert backend.induced_covers(np.zeros((0, 3), dtype=np.int64)).shape == (0, 2)


def test_backend_selection(monkeypatch):
    assert kernels.get_backend("python") is _pykernels
    assert kernels.BACKEND in ("compiled", "python")
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
    monkeypatch.setenv("SCHUBCYCLE_BACKEND", "python")
    assert kernels.get_backend() is _pykernels
