import pytest
from hypothesis import given, settings, strategies as st

from bigolin import build_complex, torus
from bigolin.double_complex import ComplexError, DoubleComplex, direct_sum, zero_complex
from bigolin.forms import spec_from_terms
from bigolin.linalg import LabeledMatrix


def test_presets_satisfy_axioms(iwasawa_complexes, torus3):
    for c in [*iwasawa_complexes.values(), torus3]:
        assert c.verify_axioms().ok, c.name


def test_dimensions_are_binomial(torus3):
    from math import comb

    for p in range(4):
        for q in range(4):
            assert torus3.dim(p, q) == comb(3, p) * comb(3, q)
    assert torus3.total_dim == 64


def test_missing_blocks_are_empty_matrices():
    c = zero_complex(2)
    m = c.partial(0, 0)
    assert m.shape == (0, 0)
    assert c.partial(2, 2).shape == (0, 0)


def test_corrupted_block_is_located(iwasawa_complexes):
    c = iwasawa_complexes["i"]
    m = c.partial(1, 2)
    flipped = LabeledMatrix(m.rows, m.cols, [[-x for x in row] for row in m.entries])
    report = c.with_map("partial", (1, 2), flipped).verify_axioms()
    assert not report.ok
    hit = [v for v in report if v.identity == "∂∂̄ + ∂̄∂ = 0"]
    assert hit and hit[0].bidegree == (1, 1)
    assert hit[0].witness == "f3c3"


def test_bad_shapes_rejected():
    with pytest.raises(ComplexError):
        DoubleComplex(1, {(0, 0): ["a"], (1, 0): ["b"]}, {"partial": {(0, 0): LabeledMatrix(["x"], ["a"], [[1]])}})
    with pytest.raises(ComplexError):
        DoubleComplex(1, {(2, 0): ["a"]})
    with pytest.raises(ComplexError):
        DoubleComplex(1, {(0, 0): ["a"], (1, 0): ["a"]})


def test_direct_sum_mismatched_dimension():
    with pytest.raises(ComplexError):
        direct_sum([zero_complex(2), zero_complex(3)])
    with pytest.raises(ComplexError):
        direct_sum([])


_coeffs = st.sampled_from([0, 1, -1, 2, "i", "1/2"])


@settings(max_examples=15, deadline=None)
@given(a=_coeffs, b=_coeffs)
def test_direct_sum_dimensions_add(a, b):
    # two small nilpotent algebras; dimensions and axioms must add up
    eqs = {3: [(x, "f1", "f2") for x in (a,) if x != 0]}
    left = build_complex(spec_from_terms(3, eqs))
    right = build_complex(spec_from_terms(3, {3: [(x, "f1", "c1") for x in (b,) if x != 0]}))
    s = direct_sum([left, right])
    assert s.verify_axioms().ok
    for p in range(4):
        for q in range(4):
            assert s.dim(p, q) == left.dim(p, q) + right.dim(p, q)
            assert s.partial(p, q).rank() == left.partial(p, q).rank() + right.partial(p, q).rank()


def test_total_differential_squares_to_zero(iwasawa_complexes):
    c = iwasawa_complexes["iii.b"]
    for k in range(6):
        assert (c.total_differential(k + 1) @ c.total_differential(k)).is_zero()


def test_conjugation_is_an_involution(torus3):
    sigma = torus3.conjugation(1, 2)
    back = torus3.conjugation(2, 1)
    assert (back @ sigma.conjugate()) == LabeledMatrix.identity(torus3.basis(1, 2))
