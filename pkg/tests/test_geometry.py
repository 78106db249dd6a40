"""Tests for affine circuit geometry and Newton-polytope helpers."""

import pytest

from sparsefeas.geometry import (
    affine_dim,
    caged_alternation,
    facet_normals,
    find_circuit,
    initial_form,
    interior_point,
)
from sparsefeas.sparsepoly import parse, support


def test_affine_dim():
    assert affine_dim([(0, 0), (1, 0), (0, 1)]) == 2
    assert affine_dim([(0, 0), (2, 2), (5, 5)]) == 1
    assert affine_dim([(3, 3)]) == 0


def test_find_circuit_quartic():
    pts = [(0, 0), (4, 0), (0, 4), (1, 1)]
    circuit, idx = find_circuit(pts)
    assert sorted(idx) == [0, 1, 2, 3]
    rel = list(circuit.relation)
    if rel[-1] > 0:
        rel = [-x for x in rel]
    assert rel == [2, 1, 1, -4]
    assert sum(rel) == 0


def test_find_circuit_relation_annihilates_points():
    pts = [(0,), (3,), (7,)]
    circuit, idx = find_circuit(pts)
    rel = circuit.relation
    assert sum(rel) == 0
    assert sum(m * pts[i][0] for m, i in zip(rel, idx)) == 0


def test_find_circuit_absent_for_simplex():
    assert find_circuit([(0, 0), (1, 0), (0, 1)]) is None


def test_interior_point_is_unique_sign():
    pts = [(0, 0), (4, 0), (0, 4), (1, 1)]
    circuit, idx = find_circuit(pts)
    inner = interior_point(circuit)
    assert pts[idx[inner]] == (1, 1)


def test_interior_point_none_for_degenerate_circuit():
    # (0,), (1,), (2,), relation (1,-2,1): two signs twice -> both
    # orientations have two entries, but the unique-sign rule needs one
    pts = [(0, 0), (1, 1), (2, 0), (1, -1)]
    circuit, _ = find_circuit(pts)
    assert interior_point(circuit) is None


def test_facet_normals_square():
    pts = [(0, 0), (2, 0), (0, 2), (2, 2)]
    normals = facet_normals(pts, 2)
    assert set(normals) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_facet_normals_triangle():
    pts = [(0, 0), (4, 0), (0, 4), (1, 1)]
    normals = facet_normals(pts, 2)
    assert set(normals) == {(1, 0), (0, 1), (-1, -1)}


def test_facet_normals_segment():
    assert set(facet_normals([(0,), (5,)], 1)) == {(1,), (-1,)}


def test_initial_form_selects_face():
    f = parse("1 + x1^4 + x2^4 - 3*x1*x2")
    g = initial_form(f, (-1, -1))
    # the face minimizing <(-1,-1), a> is {(4,0),(0,4)}... actually the
    # maximizing convention keeps the terms supported on the chosen face
    pts = support(g).points
    assert all(p in support(f).points for p in pts)
    assert len(pts) < len(support(f).points)


def test_caged_alternation():
    pts = [(0, 0), (4, 0), (0, 4), (1, 1)]
    circuit, idx = find_circuit(pts)
    coeffs = {(0, 0): 1, (4, 0): 1, (0, 4): 1, (1, 1): -3}
    signs = [1 if coeffs[pts[i]] > 0 else -1 for i in idx]
    assert caged_alternation(circuit, signs)
    signs_bad = [1, 1, 1, 1]
    assert not caged_alternation(circuit, signs_bad)
