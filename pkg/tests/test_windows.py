import pytest
from hypothesis import given, strategies as st

from bigolin import build_complex
from bigolin.forms import parse_structure_equations
from bigolin.windows import (
    UnsupportedStructureError,
    build_window,
    degree_range,
    window_blocks,
    window_space_identity_check,
)


def test_example_windows_n3(iwasawa_complexes):
    w = build_window(iwasawa_complexes["i"], 1, 1)
    assert w.blocks(1) == [(1, 0), (0, 1)]
    assert w.blocks(2) == [(1, 1)]
    assert w.blocks(3) == [(2, 2)]
    d1 = w.delta(1)
    assert d1.rows == w.space(2) and d1.cols == w.space(1)
    c = w.complex
    # middle map is the composite ∂∂̄
    assert w.delta(2) == c.ddbar(1, 1)


def test_extremal_windows_are_de_rham(torus3):
    c = torus3
    for p, q, shift in ((3, 3, 0), (-1, -1, 1)):
        w = build_window(c, p, q)
        for k in range(0, 7):
            assert sorted(w.blocks(k - shift)) == sorted(c.degree_blocks(k))


@given(n=st.integers(1, 6), p=st.integers(0, 6), q=st.integers(0, 6))
def test_corner_is_single_block(n, p, q):
    if p <= n and q <= n:
        assert window_blocks(n, p, q, p + q) == [(p, q)]


def _expected_range(n, p, q):
    if {p, q} == {-1, n}:
        return range(0)  # both windows are empty
    if p == q == -1:
        return range(-1, 2 * n)
    if p == q == n:
        return range(0, 2 * n + 1)
    if min(p, q) == -1:
        return range(max(p, q), 2 * n)
    if max(p, q) == n:
        return range(0, p + q + 1)
    return range(0, 2 * n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nonzero_range(n):
    for p in range(-1, n + 1):
        for q in range(-1, n + 1):
            nonzero = [k for k in range(-3, 2 * n + 3) if window_blocks(n, p, q, k)]
            assert nonzero == list(_expected_range(n, p, q)), (p, q)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hodge_block_duality(n):
    for p in range(-1, n + 1):
        for q in range(-1, n + 1):
            for k in range(-2, 2 * n + 2):
                image = sorted((n - s, n - r) for r, s in window_blocks(n, p, q, k))
                assert image == sorted(window_blocks(n, n - q - 1, n - p - 1, 2 * n - k - 1))


def test_delta_squares_to_zero(iwasawa_complexes):
    for c in iwasawa_complexes.values():
        for p in range(-1, 4):
            for q in range(-1, 4):
                w = build_window(c, p, q)
                for k in degree_range(3):
                    assert (w.delta(k) @ w.delta(k - 1)).is_zero(), (c.name, p, q, k)


def test_identity_check_examples():
    assert window_space_identity_check(5, 1, 2, 5)
    assert sorted(window_blocks(5, 1, 2, 5)) == [(2, 4), (3, 3)]
    assert window_space_identity_check(3, 1, 1, 3)
    with pytest.raises(ValueError):
        window_space_identity_check(3, 1, 1, 2)


def test_identity_holds_wherever_defined():
    for n in range(2, 6):
        for p in range(n + 1):
            for q in range(n + 1):
                for k in range(p + q + 1, 2 * n - 1):
                    if k - q <= n and k - p <= n:
                        assert window_space_identity_check(n, p, q, k)


def test_window_rejects_almost_complex_and_bad_bidegree(torus3):
    ac = build_complex(parse_structure_equations("n = 3\ndf1 = 1*c2c3\n"))
    with pytest.raises(UnsupportedStructureError):
        build_window(ac, 1, 1)
    with pytest.raises(ValueError):
        build_window(torus3, 4, 0)
    with pytest.raises(ValueError):
        build_window(torus3, -2, 0)


def test_windows_are_cached(torus3):
    assert build_window(torus3, 1, 2) is build_window(torus3, 1, 2)
