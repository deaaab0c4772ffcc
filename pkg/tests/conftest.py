from fractions import Fraction

import pytest
from hypothesis import strategies as st

from bigolin import build_complex, iwasawa, torus
from bigolin.field import GaussianRational

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(bool)


@pytest.fixture(scope="session")
def iwasawa_complexes():
    return {label: iwasawa.preset_complex(label) for label in iwasawa.CLASSES}


@pytest.fixture(scope="session")
def torus3():
    return build_complex(torus(3))


# acceptance lines, printed once at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


__all__ = ["Fraction", "gaussians", "nonzero_gaussians", "ACCEPTANCE"]
