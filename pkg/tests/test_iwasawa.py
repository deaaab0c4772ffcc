import pytest
from hypothesis import given, settings, strategies as st

from bigolin import iwasawa
from bigolin.cohomology import betti, bigolin
from bigolin.iwasawa import SigmaParams, classify, in_deformation_family
from bigolin.zigzag import REFERENCE_IIB


@pytest.mark.parametrize(
    "values, label",
    [
        ((-1, 0, 0, 0, 0), "i"),
        ((-1, 1, 0, 0, 0), "ii.a"),
        ((-1, 1, "i", 0, 0), "ii.b"),
        ((-1, 0, 1, -1, 0), "iii.a"),
        ((-1, 0, 1, 2, 0), "iii.b"),
    ],
)
def test_classify_examples(values, label):
    assert classify(SigmaParams.of(*values)) == label


def test_sigma_12_must_be_nonzero():
    with pytest.raises(ValueError):
        SigmaParams.of(0, 1, 0, 0, 0)


def test_presets_classify_and_stay_in_family():
    for label in iwasawa.CLASSES:
        s = iwasawa.preset_sigma(label)
        assert classify(s) == label
        assert in_deformation_family(s)
    with pytest.raises(ValueError):
        iwasawa.preset_sigma("iv")


def test_large_barred_terms_leave_the_family():
    s = SigmaParams.of(-1, 1, "i", 0, 0)
    assert classify(s) == "ii.b"
    assert not in_deformation_family(s)
    # a different real Lie algebra shows up in b2
    from bigolin import build_complex

    assert betti(build_complex(s.spec()), 2) != 8


_small = st.sampled_from([0, "1/8", "-1/8", "1/8i", "1/16+1/16i"])


@settings(max_examples=25, deadline=None)
@given(values=st.tuples(_small, _small, _small, _small))
def test_small_deformations_keep_betti_numbers(values):
    s = SigmaParams.of(-1, *values)
    assert in_deformation_family(s)
    from bigolin import build_complex

    c = build_complex(s.spec())
    assert [betti(c, k) for k in range(4)] == [1, 4, 8, 10]


def test_golden_examples(iwasawa_complexes):
    assert bigolin(iwasawa_complexes["ii.b"], 1, 1, 1) == 4
    assert bigolin(iwasawa_complexes["iii.a"], 1, 3, 3) == 5


def test_golden_table_and_zigzags(monkeypatch):
    monkeypatch.setenv(iwasawa.JOBS_ENV, "2")
    table = iwasawa.golden_table()
    assert iwasawa.table_mismatches(table) == []
    zz = iwasawa.golden_zigzags()
    assert zz["ii.b"].inversion.multiplicities == REFERENCE_IIB
    assert all(res.reproduces_invariants for res in zz.values())


def test_bad_jobs_value_falls_back(monkeypatch):
    monkeypatch.setenv(iwasawa.JOBS_ENV, "many")
    assert iwasawa._jobs() == 1
