import warnings

import pytest
from hypothesis import given, settings, strategies as st

from bigolin import build_complex, torus
from bigolin.field import GaussianRational
from bigolin.forms import (
    AxiomError,
    ExteriorDerivative,
    ParseError,
    SpecError,
    format_structure_equations,
    parse_structure_equations,
    spec_from_terms,
    wedge_forms,
)

IWASAWA = "n = 3\ndf1 = 0\ndf2 = 0\ndf3 = -1*f1f2\n"


def test_parse_iwasawa():
    spec = parse_structure_equations(IWASAWA)
    assert spec.n == 3
    (t,) = spec.terms(3)
    assert t.coeff == GaussianRational(-1) and (t.left, t.right) == ("f1", "f2")
    assert spec.is_integrable


def test_comments_blank_lines_and_order():
    text = "# header\n\nn = 2\ndf2 = 1/2*f1c1   # trailing\n"
    spec = parse_structure_equations(text)
    assert spec.terms(2)[0].coeff == GaussianRational.parse("1/2")


def test_factor_order_is_canonicalized():
    spec = parse_structure_equations("n = 3\ndf3 = 1*f2f1\n")
    t = spec.terms(3)[0]
    assert (t.left, t.right) == ("f1", "f2") and t.coeff == GaussianRational(-1)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("n = 3\ndf3 = -1*f1f2 +\n", 2, 15),
        ("df1 = 0\n", 1, 1),
        ("n = 3\ndf4 = 0\n", 2, 1),
        ("n = 3\ndf3 = x*f1f2\n", 2, 7),
        ("n = 3\ndf3 = 1*f1f1\n", 2, 9),
        ("n = 3\ndf3 = 1*f1f9\n", 2, 9),
        ("n = 3\nfoo\n", 2, 1),
        ("n = three\n", 1, 5),
        ("n = 3\ndf3 = 1*f1f2 * 1*f1c1\n", 2, 14),
    ],
)
def test_parse_errors_are_located(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_structure_equations(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}:")


def test_duplicate_equation_rejected():
    with pytest.raises(ParseError):
        parse_structure_equations("n = 3\ndf3 = 0\ndf3 = 0\n")


def test_format_round_trip():
    text = "n = 3\ndf2 = 1/2*f1c1\ndf3 = -1*f1f2 + 1/2i*f1c2\n"
    spec = parse_structure_equations(text)
    again = parse_structure_equations(format_structure_equations(spec))
    assert again.equations == spec.equations


def test_is_integrable_detects_02_terms():
    assert not parse_structure_equations("n = 3\ndf1 = 1*c2c3\n").is_integrable


def test_jacobi_failure_raises():
    with pytest.raises(AxiomError) as info:
        build_complex(parse_structure_equations("n = 3\ndf1 = 1*f2f3\ndf2 = 1*f1f2\n"))
    assert any(v.identity == "∂² = 0" for v in info.value.report)


def test_inconsistent_override_is_reported():
    spec = parse_structure_equations("n = 3\ndf3 = -1*f1f2\ndc3 = 1*c1c2\n")
    with pytest.raises(AxiomError) as info:
        build_complex(spec)
    first = [v for v in info.value.report if "intertwines ∂ with" in v.identity][0]
    assert first.bidegree == (1, 0) and first.witness == "f3"


def test_large_dimension_warns():
    # the warning comes before any work, so escalating it keeps this fast
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        with pytest.raises(UserWarning, match="soft limit"):
            build_complex(torus(7), check=False)


def test_bad_spec_construction():
    with pytest.raises(SpecError):
        spec_from_terms(3, {4: [(1, "f1", "f2")]})


_gens = st.sampled_from(["f1", "f2", "c1", "c2"])


@settings(max_examples=40, deadline=None)
@given(
    coeffs=st.lists(st.sampled_from([0, 1, -1, 2, "i", "1/2-i"]), min_size=5, max_size=5),
    a=st.lists(st.integers(0, 5), min_size=1, max_size=3, unique=True),
    b=st.lists(st.integers(0, 5), min_size=1, max_size=3, unique=True),
)
def test_leibniz_rule(coeffs, a, b):
    # a 2-step nilpotent family: d is a derivation of the wedge product
    pairs = [("f1", "f2"), ("f1", "c1"), ("f1", "c2"), ("f2", "c1"), ("f2", "c2")]
    terms = [(c, x, y) for c, (x, y) in zip(coeffs, pairs) if c != 0]
    d = ExteriorDerivative(spec_from_terms(3, {3: terms}))
    ma, mb = tuple(sorted(a)), tuple(sorted(b))
    lhs = d.of_form(wedge_forms({ma: 1}, {mb: 1}))
    sign = -1 if len(ma) % 2 else 1
    rhs = wedge_forms(d.of_monomial(ma), {mb: 1})
    for m, v in wedge_forms({ma: 1}, d.of_monomial(mb)).items():
        rhs[m] = rhs.get(m, 0) + sign * v
    clean = lambda f: {m: v for m, v in f.items() if v}  # noqa: E731
    assert clean(lhs) == clean(rhs)
