"""Double complexes of left-invariant forms from structure equations.

A Lie algebra with a (possibly non-integrable) complex structure is given by
the differentials of a coframe of (1,0)-forms ``f1..fn``; their conjugates
are ``c1..cn``. Each ``d fi`` is a combination of wedge products of two
generators. The differential is extended to the whole exterior algebra as a
degree-one derivation and split by bidegree.

Generators are ordered ``f1 < ... < fn < c1 < ... < cn``; a basis monomial is
a strictly increasing word in that order, so the holomorphic block always
comes first. Its label is the word itself, e.g. ``"f1f3c2"``; the constant
function is labelled ``"1"``.

Structure-equation files look like::

    # Iwasawa manifold
    n = 3
    df3 = -1*f1f2

Conjugate equations are derived automatically. A ``dc<i>`` line overrides the
derived conjugate of ``df<i>``; that is only useful to feed deliberately
inconsistent data to the axiom checker.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .double_complex import OFFSETS, AxiomReport, DoubleComplex
from .field import GaussianRational, Scalar
from .linalg import LabeledMatrix

Monomial = tuple[int, ...]

SOFT_DIMENSION_LIMIT = 6

_TOKEN_RE = re.compile(r"([fc])(\d+)")


class SpecError(ValueError):
    """Malformed structure equations."""


class ParseError(SpecError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class AxiomError(ValueError):
    """The structure equations do not give d² = 0 (or a consistent conjugation)."""

    def __init__(self, report: AxiomReport):
        first = report.violations[0]
        super().__init__(f"structure equations violate {first}")
        self.report = report


def parse_factor(token: str, n: int) -> tuple[str, int]:
    m = _TOKEN_RE.fullmatch(token)
    if not m:
        raise SpecError(f"bad generator {token!r}")
    idx = int(m.group(2))
    if not 1 <= idx <= n:
        raise SpecError(f"generator {token!r} out of range 1..{n}")
    return m.group(1), idx


def generator_id(token: str, n: int) -> int:
    kind, idx = parse_factor(token, n)
    return idx - 1 if kind == "f" else n + idx - 1


def generator_token(gid: int, n: int) -> str:
    return f"f{gid + 1}" if gid < n else f"c{gid - n + 1}"


def conjugate_id(gid: int, n: int) -> int:
    return gid + n if gid < n else gid - n


@dataclass(frozen=True)
class Term:
    """``coeff * left ∧ right`` with ``left`` before ``right`` in generator order."""

    coeff: GaussianRational
    left: str
    right: str

    def __str__(self) -> str:
        return f"{self.coeff}*{self.left}{self.right}"


def make_term(coeff: Scalar | str, left: str, right: str, n: int) -> Term:
    """Build a canonical term, swapping the factors (and the sign) if needed."""
    coeff = GaussianRational.coerce(coeff)
    a, b = generator_id(left, n), generator_id(right, n)
    if a == b:
        raise SpecError(f"repeated factor {left}{right}")
    if a > b:
        a, b, coeff = b, a, -coeff
    return Term(coeff, generator_token(a, n), generator_token(b, n))


@dataclass(frozen=True)
class LieAlgebraSpec:
    """Structure equations ``d f_i = sum of terms`` for ``i = 1..n``.

    ``equations`` maps a generator index to its terms; absent indices are
    closed. ``conjugate_overrides`` replaces derived ``d c_i`` equations.
    """

    n: int
    equations: Mapping[int, tuple[Term, ...]] = field(default_factory=dict)
    name: str = ""
    conjugate_overrides: Mapping[int, tuple[Term, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise SpecError("n must be nonnegative")
        for table in (self.equations, self.conjugate_overrides):
            for i, terms in table.items():
                if not 1 <= i <= self.n:
                    raise SpecError(f"equation for generator {i} out of range 1..{self.n}")
                for t in terms:
                    a, b = generator_id(t.left, self.n), generator_id(t.right, self.n)
                    if a >= b:
                        raise SpecError(f"term {t} is not in canonical order")

    def terms(self, i: int) -> tuple[Term, ...]:
        return tuple(self.equations.get(i, ()))

    @property
    def is_integrable(self) -> bool:
        """True when no ``d f_i`` has a (0,2) component."""
        return not any(t.left.startswith("c") for terms in self.equations.values() for t in terms)


def conjugate_term(term: Term, n: int) -> Term:
    """Conjugate of ``coeff * a ∧ b``: ``conj(coeff) * conj(a) ∧ conj(b)``, re-ordered."""
    a = conjugate_id(generator_id(term.left, n), n)
    b = conjugate_id(generator_id(term.right, n), n)
    return make_term(term.coeff.conj(), generator_token(a, n), generator_token(b, n), n)


def conjugate_equations(spec: LieAlgebraSpec) -> dict[int, tuple[Term, ...]]:
    """Equations for ``d c_i`` (overrides win over the derived ones)."""
    out = {i: tuple(conjugate_term(t, spec.n) for t in terms) for i, terms in spec.equations.items()}
    out.update({i: tuple(ts) for i, ts in spec.conjugate_overrides.items()})
    return out


# exterior algebra on generator ids


def wedge(m1: Monomial, m2: Monomial) -> tuple[int, Monomial]:
    """``m1 ∧ m2`` as (sign, sorted monomial); sign 0 when a factor repeats."""
    if set(m1) & set(m2):
        return 0, ()
    return _sort_sign(tuple(m1) + tuple(m2))


def bidegree(m: Monomial, n: int) -> tuple[int, int]:
    holo = sum(1 for g in m if g < n)
    return holo, len(m) - holo


def monomial_label(m: Monomial, n: int) -> str:
    if not m:
        return "1"
    return "".join(generator_token(g, n) for g in m)


def parse_monomial(label: str, n: int) -> tuple[int, Monomial]:
    """Inverse of :func:`monomial_label`, accepting any order (sign returned)."""
    if label == "1":
        return 1, ()
    pos, word = 0, []
    for m in _TOKEN_RE.finditer(label):
        if m.start() != pos:
            raise SpecError(f"bad monomial {label!r}")
        word.append(generator_id(m.group(0), n))
        pos = m.end()
    if pos != len(label) or not word:
        raise SpecError(f"bad monomial {label!r}")
    if len(set(word)) != len(word):
        return 0, ()
    return _sort_sign(word)


def _sort_sign(word: Sequence[int]) -> tuple[int, Monomial]:
    # parity of the sorting permutation, by counting inversions
    inversions = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return (-1 if inversions % 2 else 1), tuple(sorted(word))


def basis_monomials(n: int, p: int, q: int) -> list[Monomial]:
    """Basis of ``A^{p,q}``: holomorphic subsets (lexicographic) times anti ones."""
    return [
        tuple(h) + tuple(n + j for j in a)
        for h in combinations(range(n), p)
        for a in combinations(range(n), q)
    ]


FormDict = dict[Monomial, GaussianRational]


def _add(acc: FormDict, m: Monomial, c: GaussianRational) -> None:
    v = acc.get(m)
    v = c if v is None else v + c
    if v:
        acc[m] = v
    else:
        acc.pop(m, None)


class ExteriorDerivative:
    """The derivation ``d`` on monomials induced by structure equations."""

    def __init__(self, spec: LieAlgebraSpec):
        n = self.n = spec.n
        self.gen_d: dict[int, FormDict] = {}
        conj_eqs = conjugate_equations(spec)
        for i in range(1, n + 1):
            for gid, terms in ((i - 1, spec.terms(i)), (n + i - 1, conj_eqs.get(i, ()))):
                form: FormDict = {}
                for t in terms:
                    a, b = generator_id(t.left, n), generator_id(t.right, n)
                    _add(form, (a, b), t.coeff)
                self.gen_d[gid] = form
        self._cache: dict[Monomial, FormDict] = {}

    def of_monomial(self, m: Monomial) -> FormDict:
        """Graded Leibniz rule: d(g1...gk) = sum_j (-1)^j g1..d(gj)..gk."""
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        out: FormDict = {}
        for j, g in enumerate(m):
            dg = self.gen_d.get(g)
            if not dg:
                continue
            head, tail = m[:j], m[j + 1:]
            sgn_j = -1 if j % 2 else 1
            for two, c in dg.items():
                s1, w = wedge(head, two)
                if not s1:
                    continue
                s2, w = wedge(w, tail)
                if not s2:
                    continue
                _add(out, w, c * (sgn_j * s1 * s2))
        self._cache[m] = out
        return out

    def of_form(self, form: Mapping[Monomial, Scalar]) -> FormDict:
        out: FormDict = {}
        for m, c in form.items():
            c = GaussianRational.coerce(c)
            for w, v in self.of_monomial(m).items():
                _add(out, w, c * v)
        return out


def wedge_forms(a: Mapping[Monomial, Scalar], b: Mapping[Monomial, Scalar]) -> FormDict:
    out: FormDict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            s, w = wedge(m1, m2)
            if s:
                _add(out, w, GaussianRational.coerce(c1) * GaussianRational.coerce(c2) * s)
    return out


def conjugate_monomial(m: Monomial, n: int) -> tuple[int, Monomial]:
    """``conj(f^I ∧ c^J) = c^I ∧ f^J = (-1)^{|I||J|} f^J ∧ c^I``."""
    return _sort_sign([conjugate_id(g, n) for g in m])


def build_complex(spec: LieAlgebraSpec, check: bool = True) -> DoubleComplex:
    """The double complex of invariant forms, with its real structure.

    Raises :class:`AxiomError` if the result is not a double complex (for
    instance when the structure constants violate the Jacobi identity).
    """
    n = spec.n
    if n > SOFT_DIMENSION_LIMIT:
        warnings.warn(f"n = {n} exceeds the soft limit {SOFT_DIMENSION_LIMIT}; spaces grow quickly", stacklevel=2)
    d = ExteriorDerivative(spec)
    monomials = {(p, q): basis_monomials(n, p, q) for p in range(n + 1) for q in range(n + 1)}
    basis = {bd: [monomial_label(m, n) for m in ms] for bd, ms in monomials.items()}
    index = {bd: {m: i for i, m in enumerate(ms)} for bd, ms in monomials.items()}
    maps: dict[str, dict] = {op: {} for op in OFFSETS}
    by_offset = {off: op for op, off in OFFSETS.items()}
    for (p, q), ms in monomials.items():
        grids: dict[str, list[list]] = {}
        for j, m in enumerate(ms):
            for w, c in d.of_monomial(m).items():
                wp, wq = bidegree(w, n)
                op = by_offset.get((wp - p, wq - q))
                if op is None:
                    raise SpecError(f"d of {monomial_label(m, n)} has a component of bidegree {(wp, wq)}")
                tgt = (wp, wq)
                grid = grids.get(op)
                if grid is None:
                    grid = grids[op] = [[0] * len(ms) for _ in monomials[tgt]]
                grid[index[tgt][w]][j] = c
        for op, grid in grids.items():
            dp, dq = OFFSETS[op]
            maps[op][(p, q)] = LabeledMatrix(basis[(p + dp, q + dq)], basis[(p, q)], grid)
    real = {}
    for (p, q), ms in monomials.items():
        grid = [[0] * len(ms) for _ in monomials[(q, p)]]
        for j, m in enumerate(ms):
            s, w = conjugate_monomial(m, n)
            grid[index[(q, p)][w]][j] = s
        real[(p, q)] = LabeledMatrix(basis[(q, p)], basis[(p, q)], grid)
    c = DoubleComplex(n, basis, maps, real, name=spec.name)
    if check:
        report = c.verify_axioms()
        if not report.ok:
            raise AxiomError(report)
    return c


# structure-equation text format


def _parse_terms(rhs: str, n: int, line: int, col0: int) -> tuple[Term, ...]:
    """Parse ``<term> (+|-) <term> ...``; a lone ``0`` means closed."""
    tokens = [(m.group(0), col0 + m.start() + 1) for m in re.finditer(r"\S+", rhs)]
    if not tokens:
        raise ParseError("missing right-hand side", line, col0 + 1)
    if len(tokens) == 1 and tokens[0][0] == "0":
        return ()
    terms: list[Term] = []
    sign = 1
    for pos, (tok, col) in enumerate(tokens):
        if pos % 2 == 1:
            if tok not in ("+", "-"):
                raise ParseError(f"expected '+' or '-', got {tok!r}", line, col)
            sign = 1 if tok == "+" else -1
            continue
        coeff_txt, star, mono = tok.rpartition("*")
        if not star:
            raise ParseError(f"expected <coeff>*<gen><gen>, got {tok!r}", line, col)
        try:
            coeff = GaussianRational.parse(coeff_txt)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {coeff_txt!r}: {exc}", line, col) from None
        factors = [m.group(0) for m in _TOKEN_RE.finditer(mono)]
        if "".join(factors) != mono or len(factors) != 2:
            raise ParseError(f"expected two generators like f1f2, got {mono!r}", line, col + len(coeff_txt) + 1)
        try:
            terms.append(make_term(coeff * sign, factors[0], factors[1], n))
        except SpecError as exc:
            raise ParseError(str(exc), line, col + len(coeff_txt) + 1) from None
    if len(tokens) % 2 == 0:
        raise ParseError("dangling operator", line, tokens[-1][1])
    return tuple(terms)


def parse_structure_equations(text: str, name: str = "") -> LieAlgebraSpec:
    """Parse the structure-equation format into a :class:`LieAlgebraSpec`."""
    n = None
    raw: list[tuple[str, int, int, str, int, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        lhs, eq, rhs = body.partition("=")
        if not eq:
            col = len(body) - len(body.lstrip()) + 1
            raise ParseError("expected '<name> = <value>'", lineno, col)
        key = lhs.strip()
        key_col = len(lhs) - len(lhs.lstrip()) + 1
        if key == "n":
            value_col = len(lhs) + 2 + len(rhs) - len(rhs.lstrip())
            if n is not None:
                raise ParseError("n given twice", lineno, key_col)
            try:
                n = int(rhs.strip())
            except ValueError:
                raise ParseError(f"n must be an integer, got {rhs.strip()!r}", lineno, value_col) from None
            if n < 0:
                raise ParseError("n must be nonnegative", lineno, value_col)
            continue
        m = re.fullmatch(r"d([fc])(\d+)", key)
        if not m:
            raise ParseError(f"expected 'n' or 'd<generator>', got {key!r}", lineno, key_col)
        raw.append((m.group(1), int(m.group(2)), lineno, rhs, len(lhs) + 1, key_col))
    if n is None:
        raise ParseError("missing 'n = <int>' record", 1, 1)
    eqs: dict[int, tuple[Term, ...]] = {}
    overrides: dict[int, tuple[Term, ...]] = {}
    for kind, idx, lineno, rhs, col0, key_col in raw:
        if not 1 <= idx <= n:
            raise ParseError(f"generator index {idx} out of range 1..{n}", lineno, key_col)
        table = eqs if kind == "f" else overrides
        if idx in table:
            raise ParseError(f"d{kind}{idx} given twice", lineno, key_col)
        table[idx] = _parse_terms(rhs, n, lineno, col0)
    return LieAlgebraSpec(n, eqs, name=name, conjugate_overrides=overrides)


def format_structure_equations(spec: LieAlgebraSpec) -> str:
    lines = [f"n = {spec.n}"]
    for kind, table in (("f", spec.equations), ("c", spec.conjugate_overrides)):
        for i in sorted(table):
            parts = []
            for t in table[i]:
                if t.coeff.is_real() and t.coeff.re < 0:
                    parts.append(("-", Term(-t.coeff, t.left, t.right)))
                else:
                    parts.append(("+", t))
            if not parts:
                rhs = "0"
            else:
                first_sign, first = parts[0]
                rhs = ("-" if first_sign == "-" else "") + str(first)
                rhs += "".join(f" {s} {t}" for s, t in parts[1:])
            lines.append(f"d{kind}{i} = {rhs}")
    return "\n".join(lines) + "\n"


def torus(n: int) -> LieAlgebraSpec:
    """The abelian Lie algebra (complex torus): every differential vanishes."""
    return LieAlgebraSpec(n, {}, name=f"torus:{n}")


def spec_from_terms(n: int, equations: Mapping[int, Iterable[tuple[Scalar | str, str, str]]], name: str = "") -> LieAlgebraSpec:
    """Convenience constructor: ``{i: [(coeff, "f1", "f2"), ...]}``."""
    return LieAlgebraSpec(
        n, {i: tuple(make_term(c, a, b, n) for c, a, b in terms) for i, terms in equations.items()}, name=name
    )


__all__ = [
    "AxiomError",
    "ExteriorDerivative",
    "LieAlgebraSpec",
    "ParseError",
    "SpecError",
    "Term",
    "basis_monomials",
    "build_complex",
    "conjugate_equations",
    "conjugate_monomial",
    "conjugate_term",
    "format_structure_equations",
    "make_term",
    "monomial_label",
    "parse_monomial",
    "parse_structure_equations",
    "spec_from_terms",
    "torus",
    "wedge",
    "wedge_forms",
]
