"""Tests for the independent brute-force verification tools."""

import random
from fractions import Fraction

import pytest

from sparsefeas.errors import ScaleLimitError
from sparsefeas.oracle import (
    exact_product_compare,
    grid_scan,
    multiple_root_count,
    sturm_count,
)
from sparsefeas.sparsepoly import evaluate, make_polynomial, parse


def test_sturm_known_counts():
    assert sturm_count(parse("x1^2 - 3*x1 + 2")) == 2  # roots 1, 2
    assert sturm_count(parse("x1^2 - 3*x1 + 2"), 0, None) == 2
    assert sturm_count(parse("x1^3 - 1")) == 1
    assert sturm_count(parse("x1^2 + 1")) == 0
    assert sturm_count(parse("x1^2 - 2")) == 2
    assert sturm_count(parse("x1^2 - 2"), 0, None) == 1


def test_sturm_interval_endpoints():
    f = parse("x1^2 - 3*x1 + 2")
    # (l, r] convention: root at the upper endpoint counts, at the lower
    # endpoint it does not
    assert sturm_count(f, 1, 2) == 1
    assert sturm_count(f, 0, 1) == 1
    assert sturm_count(f, 1, Fraction(3, 2)) == 0
    assert sturm_count(f, 2, None) == 0


def test_sturm_counts_distinct_roots_once():
    f = parse("x1^2 - 2*x1 + 1")
    assert sturm_count(f) == 1
    assert multiple_root_count(f) == 1


def test_sturm_against_factored_random():
    rng = random.Random(2024)
    for _ in range(100):
        roots = sorted(rng.sample(range(-8, 9), rng.randint(1, 4)))
        # expand prod (x - r) exactly
        coeffs = [1]
        for r in roots:
            new = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                new[i + 1] += c
                new[i] -= r * c
            coeffs = new
        f = make_polynomial(1, [((i,), c) for i, c in enumerate(coeffs) if c])
        assert sturm_count(f) == len(roots)
        assert sturm_count(f, 0, None) == len([r for r in roots if r > 0])
        assert multiple_root_count(f) == 0


def test_multiple_root_count_squares():
    # (x-1)^2 (x-2): one multiple root
    f = parse("x1^3 - 4*x1^2 + 5*x1 - 2")
    assert multiple_root_count(f) == 1
    assert sturm_count(f) == 2


def test_grid_scan_finds_sign_change():
    f = parse("x1*x2 - x1 - x2 + 1")
    box = [(Fraction(0), Fraction(3)), (Fraction(0), Fraction(3))]
    hit = grid_scan(f, box, Fraction(1, 4))
    assert hit is not None
    if "zero" in hit:
        assert evaluate(f, hit["zero"]) == 0
    else:
        p, q = hit["sign_change"]
        assert evaluate(f, p) * evaluate(f, q) < 0


def test_grid_scan_no_root():
    f = parse("x1^2 + x2^2 + 1")
    box = [(Fraction(-2), Fraction(2)), (Fraction(-2), Fraction(2))]
    assert grid_scan(f, box, Fraction(1, 3)) is None


def test_grid_scan_exact_zero():
    f = parse("x1^2 - 1")
    box = [(Fraction(0), Fraction(2))]
    hit = grid_scan(f, box, Fraction(1, 4))
    assert hit is not None


def test_exact_product_compare_matches_expansion():
    rng = random.Random(55)
    for _ in range(100):
        alphas = [rng.randint(1, 50) for _ in range(2)]
        betas = [rng.randint(1, 50) for _ in range(2)]
        us = [rng.randint(1, 20) for _ in range(2)]
        vs = [rng.randint(1, 20) for _ in range(2)]
        left = alphas[0] ** us[0] * alphas[1] ** us[1]
        right = betas[0] ** vs[0] * betas[1] ** vs[1]
        truth = (left > right) - (left < right)
        assert exact_product_compare(alphas, betas, us, vs) == truth


def test_exact_product_compare_guards():
    with pytest.raises(ScaleLimitError):
        exact_product_compare([2000], [3], [2], [2])
    with pytest.raises(ScaleLimitError):
        exact_product_compare([2], [3], [100001], [2])
