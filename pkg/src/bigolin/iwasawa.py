"""The Iwasawa manifold and its small deformations.

The deformed structure equations are ``dφ¹ = dφ² = 0`` and

    dφ³ = σ12 φ¹² + σ11̄ φ¹¹̄ + σ12̄ φ¹²̄ + σ21̄ φ²¹̄ + σ22̄ φ²²̄

Classes (i), (ii.a), (ii.b), (iii.a), (iii.b) are read off ``σ``. The presets
are small exact representatives of each class. They stay inside the
deformation family, which :func:`in_deformation_family` checks.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import bigolin
from .double_complex import DoubleComplex
from .field import GaussianRational, Scalar, gq
from .forms import ExteriorDerivative, LieAlgebraSpec, build_complex, spec_from_terms, wedge_forms
from .linalg import LabeledMatrix
from .zigzag import (
    BIGOLIN_ROWS,
    Inversion,
    apply_T,
    invariant_vector22,
    multiplicities_from_cohomology,
    restrict17,
)

CLASSES = ("i", "ii.a", "ii.b", "iii.a", "iii.b")
TRIPLES = tuple(BIGOLIN_ROWS.values())
TRIPLE_NAMES = tuple(BIGOLIN_ROWS)

EXPECTED_TABLE = {
    "i": (6, 5, 8, 7, 8, 9, 6),
    "ii.a": (5, 4, 7, 6, 8, 9, 6),
    "ii.b": (4, 4, 7, 6, 8, 9, 6),
    "iii.a": (5, 4, 7, 5, 8, 9, 6),
    "iii.b": (4, 4, 7, 5, 8, 9, 6),
}

JOBS_ENV = "BIGOLIN_JOBS"


@dataclass(frozen=True)
class SigmaParams:
    sigma_12: GaussianRational
    sigma_1_1b: GaussianRational
    sigma_1_2b: GaussianRational
    sigma_2_1b: GaussianRational
    sigma_2_2b: GaussianRational

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, gq(getattr(self, name)))
        if not self.sigma_12:
            raise ValueError("sigma_12 must be nonzero")

    @classmethod
    def of(cls, *values: Scalar | str) -> "SigmaParams":
        return cls(*(gq(v) for v in values))

    @property
    def barred(self) -> tuple[GaussianRational, ...]:
        return (self.sigma_1_1b, self.sigma_1_2b, self.sigma_2_1b, self.sigma_2_2b)

    def d_tilde(self) -> GaussianRational:
        return self.sigma_2_1b * self.sigma_1_2b - self.sigma_2_2b * self.sigma_1_1b

    def s_matrix(self) -> LabeledMatrix:
        s11, s12, s21, s22 = self.barred
        return LabeledMatrix(
            ["conj", "plain"],
            ["c1", "c2", "c3", "c4"],
            [[s11.conj(), s22.conj(), s12.conj(), s21.conj()], [s11, s22, s21, s12]],
        )

    def spec(self, name: str = "") -> LieAlgebraSpec:
        pairs = [
            (self.sigma_12, "f1", "f2"),
            (self.sigma_1_1b, "f1", "c1"),
            (self.sigma_1_2b, "f1", "c2"),
            (self.sigma_2_1b, "f2", "c1"),
            (self.sigma_2_2b, "f2", "c2"),
        ]
        return spec_from_terms(3, {3: [t for t in pairs if t[0]]}, name=name)


def classify(s: SigmaParams) -> str:
    if not any(s.barred):
        return "i"
    sub = "a" if s.s_matrix().rank() == 1 else "b"
    return ("ii." if not s.d_tilde() else "iii.") + sub


def in_deformation_family(s: SigmaParams) -> bool:
    """Whether the real Lie algebra is still the one of the Iwasawa manifold.

    The real 2-forms ``λ dφ³ + conj(λ dφ³)`` must all be nondegenerate on the
    span of ``φ¹, φ², φ̄¹, φ̄²``. Writing ``ω = dφ³``, that holds exactly when
    ``|ω∧ω| < |ω∧ω̄|`` (top coefficients). Large barred coefficients leave
    the family and change b², for example.
    """
    spec = s.spec()
    d = ExteriorDerivative(spec)
    omega, omega_bar = d.of_monomial((2,)), d.of_monomial((5,))
    top = (0, 1, 3, 4)
    a = gq(wedge_forms(omega, omega).get(top, 0))
    b = gq(wedge_forms(omega, omega_bar).get(top, 0))
    return a.norm() < b.norm()


_PRESETS = {
    "i": SigmaParams.of(-1, 0, 0, 0, 0),
    "ii.a": SigmaParams.of(-1, 1, 0, 0, 0),
    "ii.b": SigmaParams.of(-1, Fraction(1, 2), "1/2i", 0, 0),
    "iii.a": SigmaParams.of(-1, 0, Fraction(1, 4), Fraction(-1, 4), 0),
    "iii.b": SigmaParams.of(-1, 0, Fraction(1, 4), Fraction(1, 2), 0),
}


def preset_sigma(label: str) -> SigmaParams:
    try:
        return _PRESETS[label]
    except KeyError:
        raise ValueError(f"unknown class {label!r}; expected one of {', '.join(CLASSES)}") from None


def preset(label: str) -> LieAlgebraSpec:
    return preset_sigma(label).spec(name=f"iwasawa:{label}")


def preset_complex(label: str) -> DoubleComplex:
    return build_complex(preset(label))


def _jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn, labels):
    jobs = _jobs()
    if jobs == 1:
        return [fn(x) for x in labels]
    with ProcessPoolExecutor(max_workers=min(jobs, len(labels))) as pool:
        return list(pool.map(fn, labels))


def _row(label: str) -> tuple[int, ...]:
    c = preset_complex(label)
    return tuple(bigolin(c, *t) for t in TRIPLES)


def golden_table() -> dict[str, tuple[int, ...]]:
    """The seven window invariants for each class, computed from the presets."""
    return dict(zip(CLASSES, _map(_row, CLASSES)))


def table_mismatches(table: dict[str, tuple[int, ...]]) -> list[str]:
    out = []
    for label in CLASSES:
        for name, got, want in zip(TRIPLE_NAMES, table[label], EXPECTED_TABLE[label]):
            if got != want:
                out.append(f"class {label}, {name}: computed {got}, expected {want}")
    return out


@dataclass
class ZigzagResult:
    label: str
    v22: dict[str, int]
    inversion: Inversion

    @property
    def reproduces_invariants(self) -> bool:
        return self.inversion.ok and apply_T(self.inversion.multiplicities) == self.v22


def _zigzags(label: str) -> ZigzagResult:
    v22 = invariant_vector22(preset_complex(label))
    return ZigzagResult(label, v22, multiplicities_from_cohomology(restrict17(v22)))


def golden_zigzags() -> dict[str, ZigzagResult]:
    return dict(zip(CLASSES, _map(_zigzags, CLASSES)))
