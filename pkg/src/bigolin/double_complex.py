"""Bounded double complexes ``A^{p,q}`` (0 <= p, q <= n) with labelled bases.

The differentials are stored per bidegree as :class:`LabeledMatrix` objects:

=============  ==================  =====================
operator       source              target
=============  ==================  =====================
partial        (p, q)              (p + 1, q)
partial_bar    (p, q)              (p, q + 1)
mu             (p, q)              (p + 2, q - 1)
mu_bar         (p, q)              (p - 1, q + 2)
=============  ==================  =====================

``mu`` and ``mu_bar`` are only present for almost complex (non-integrable)
structures. An optional real structure gives, for every (p, q), the matrix of
the conjugation ``A^{p,q} -> A^{q,p}``; it is antilinear, so it acts as
``R @ conj(x)`` on coordinate vectors ``x``.

Missing bidegrees have dimension zero, and every operator query returns a
(possibly empty) matrix, never ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .linalg import LabeledMatrix, block_matrix, compose

Bidegree = tuple[int, int]

OFFSETS: dict[str, Bidegree] = {
    "partial": (1, 0),
    "partial_bar": (0, 1),
    "mu": (2, -1),
    "mu_bar": (-1, 2),
}

SYMBOLS = {"partial": "∂", "partial_bar": "∂̄", "mu": "μ", "mu_bar": "μ̄"}


class ComplexError(ValueError):
    """Structural problem with a double complex (bad shapes, mismatched n...)."""


@dataclass(frozen=True)
class Violation:
    """One failed identity: where it fails and a basis vector witnessing it."""

    identity: str
    bidegree: Bidegree
    witness: str

    def __str__(self) -> str:
        return f"{self.identity} fails at {self.bidegree} (witness {self.witness})"


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self):
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def __str__(self) -> str:
        if self.ok:
            return "all axioms hold"
        return "\n".join(str(v) for v in self.violations)


class DoubleComplex:
    """A finite double complex, immutable after construction.

    Parameters
    ----------
    n:
        Complex dimension; the grid is ``0..n x 0..n``.
    basis:
        Ordered basis labels per bidegree. Labels must be unique across the
        whole complex so that block matrices can be assembled unambiguously.
    maps:
        ``{operator: {(p, q): matrix}}`` with operator names as in
        :data:`OFFSETS`. Omitted entries are zero.
    real_structure:
        Optional ``{(p, q): matrix A^{p,q} -> A^{q,p}}``.
    """

    def __init__(
        self,
        n: int,
        basis: Mapping[Bidegree, Sequence[str]],
        maps: Mapping[str, Mapping[Bidegree, LabeledMatrix]] | None = None,
        real_structure: Mapping[Bidegree, LabeledMatrix] | None = None,
        name: str = "",
    ):
        if n < 0:
            raise ComplexError(f"complex dimension must be >= 0, got {n}")
        self.n = n
        self.name = name
        self._basis: dict[Bidegree, tuple[str, ...]] = {}
        seen: set[str] = set()
        for (p, q), labels in basis.items():
            labels = tuple(labels)
            if not labels:
                continue
            if not (0 <= p <= n and 0 <= q <= n):
                raise ComplexError(f"bidegree {(p, q)} outside the grid for n={n}")
            dup = seen.intersection(labels)
            if dup:
                raise ComplexError(f"basis label {min(dup)!r} used twice")
            seen.update(labels)
            self._basis[(p, q)] = labels
        maps = maps or {}
        unknown = set(maps) - set(OFFSETS)
        if unknown:
            raise ComplexError(f"unknown operator(s) {sorted(unknown)}")
        self._maps: dict[str, dict[Bidegree, LabeledMatrix]] = {}
        for op in OFFSETS:
            table = {}
            for bd, m in (maps.get(op) or {}).items():
                self._check_shape(op, bd, m)
                if not m.is_zero():
                    table[bd] = m
            self._maps[op] = table
        self.almost_complex = bool(self._maps["mu"] or self._maps["mu_bar"])
        self._real: dict[Bidegree, LabeledMatrix] | None = None
        if real_structure is not None:
            self._real = {}
            for (p, q), m in real_structure.items():
                if m.cols != self.basis(p, q) or m.rows != self.basis(q, p):
                    raise ComplexError(f"real structure at {(p, q)} has the wrong shape")
                self._real[(p, q)] = m
        # memo for cohomology computations, keyed by query tuples
        self.memo: dict = {}

    def _check_shape(self, op: str, bd: Bidegree, m: LabeledMatrix) -> None:
        dp, dq = OFFSETS[op]
        src = self.basis(*bd)
        tgt = self.basis(bd[0] + dp, bd[1] + dq)
        if m.cols != src or m.rows != tgt:
            raise ComplexError(
                f"{op} at {bd}: expected {len(tgt)}x{len(src)} matrix on the complex bases, got {m.shape}"
            )

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<DoubleComplex{label} n={self.n} total_dim={self.total_dim}>"

    # spaces

    def bidegrees(self) -> list[Bidegree]:
        return [(p, q) for p in range(self.n + 1) for q in range(self.n + 1)]

    def basis(self, p: int, q: int) -> tuple[str, ...]:
        return self._basis.get((p, q), ())

    def dim(self, p: int, q: int) -> int:
        return len(self.basis(p, q))

    @property
    def total_dim(self) -> int:
        return sum(len(b) for b in self._basis.values())

    def dims(self) -> dict[Bidegree, int]:
        return {bd: self.dim(*bd) for bd in self.bidegrees()}

    @property
    def has_real_structure(self) -> bool:
        return self._real is not None

    # operators

    def op(self, name: str, p: int, q: int) -> LabeledMatrix:
        dp, dq = OFFSETS[name]
        m = self._maps[name].get((p, q))
        if m is not None:
            return m
        return LabeledMatrix.zeros(self.basis(p + dp, q + dq), self.basis(p, q))

    def partial(self, p: int, q: int) -> LabeledMatrix:
        return self.op("partial", p, q)

    def partial_bar(self, p: int, q: int) -> LabeledMatrix:
        return self.op("partial_bar", p, q)

    def mu(self, p: int, q: int) -> LabeledMatrix:
        return self.op("mu", p, q)

    def mu_bar(self, p: int, q: int) -> LabeledMatrix:
        return self.op("mu_bar", p, q)

    def ddbar(self, p: int, q: int) -> LabeledMatrix:
        """``∂∂̄ : A^{p,q} -> A^{p+1,q+1}``, computed as ∂ after ∂̄."""
        return compose(self.partial(p, q + 1), self.partial_bar(p, q))

    def conjugation(self, p: int, q: int) -> LabeledMatrix:
        if self._real is None:
            raise ComplexError("complex has no real structure")
        m = self._real.get((p, q))
        if m is None:
            return LabeledMatrix.zeros(self.basis(q, p), self.basis(p, q))
        return m

    def degree_blocks(self, k: int) -> list[Bidegree]:
        """Bidegrees of total degree k, in descending p."""
        return [(p, k - p) for p in range(min(k, self.n), -1, -1) if 0 <= k - p <= self.n]

    def total_differential(self, k: int) -> LabeledMatrix:
        """``d : A^k -> A^{k+1}`` on the total complex, all components included."""
        src = self.degree_blocks(k)
        tgt = self.degree_blocks(k + 1)
        tindex = {bd: i for i, bd in enumerate(tgt)}
        blocks = {}
        for j, (p, q) in enumerate(src):
            for op, (dp, dq) in OFFSETS.items():
                t = (p + dp, q + dq)
                if t in tindex and (p, q) in self._maps[op]:
                    blocks[(tindex[t], j)] = self._maps[op][(p, q)]
        return block_matrix([self.basis(*b) for b in tgt], [self.basis(*b) for b in src], blocks)

    def total_complex_slice(self, k: int) -> tuple[tuple[str, ...], LabeledMatrix]:
        """The degree-k space of the total complex and ``d`` out of it."""
        if not 0 <= k <= 2 * self.n:
            raise ValueError(f"degree {k} outside 0..{2 * self.n}")
        space = tuple(lab for bd in self.degree_blocks(k) for lab in self.basis(*bd))
        return space, self.total_differential(k)

    # derived complexes

    def with_map(self, op: str, bidegree: Bidegree, matrix: LabeledMatrix) -> "DoubleComplex":
        """Copy with one operator block replaced (used to build corrupted inputs)."""
        maps = {name: dict(table) for name, table in self._maps.items()}
        maps[op][bidegree] = matrix
        return DoubleComplex(self.n, self._basis, maps, self._real, name=self.name)

    def without_real_structure(self) -> "DoubleComplex":
        return DoubleComplex(self.n, self._basis, self._maps, None, name=self.name)

    def maps(self) -> dict[str, dict[Bidegree, LabeledMatrix]]:
        return {name: dict(table) for name, table in self._maps.items()}

    def real_structure(self) -> dict[Bidegree, LabeledMatrix] | None:
        return None if self._real is None else dict(self._real)

    # axioms

    def verify_axioms(self) -> AxiomReport:
        return verify_axioms(self)


def _sum_of_composites(c: DoubleComplex, terms: Iterable[tuple[str, str]], p: int, q: int, target: Bidegree):
    """Sum of ``second ∘ first`` over ``terms`` on A^{p,q}, landing in ``target``."""
    total = LabeledMatrix.zeros(c.basis(*target), c.basis(p, q))
    for first, second in terms:
        dp, dq = OFFSETS[first]
        mid = (p + dp, q + dq)
        if not (0 <= mid[0] <= c.n and 0 <= mid[1] <= c.n):
            continue
        total = total + compose(c.op(second, *mid), c.op(first, p, q))
    return total


# identity name -> (list of (first, second) compositions, bidegree shift)
_INTEGRABLE_IDENTITIES = {
    "∂² = 0": ([("partial", "partial")], (2, 0)),
    "∂̄² = 0": ([("partial_bar", "partial_bar")], (0, 2)),
    "∂∂̄ + ∂̄∂ = 0": ([("partial_bar", "partial"), ("partial", "partial_bar")], (1, 1)),
}

_ALMOST_COMPLEX_IDENTITIES = {
    "μ² = 0": ([("mu", "mu")], (4, -2)),
    "μ∂ + ∂μ = 0": ([("partial", "mu"), ("mu", "partial")], (3, -1)),
    "∂² + μ∂̄ + ∂̄μ = 0": ([("partial", "partial"), ("partial_bar", "mu"), ("mu", "partial_bar")], (2, 0)),
    "∂∂̄ + ∂̄∂ + μμ̄ + μ̄μ = 0": (
        [("partial_bar", "partial"), ("partial", "partial_bar"), ("mu_bar", "mu"), ("mu", "mu_bar")],
        (1, 1),
    ),
    "∂̄² + μ̄∂ + ∂μ̄ = 0": ([("partial_bar", "partial_bar"), ("partial", "mu_bar"), ("mu_bar", "partial")], (0, 2)),
    "μ̄∂̄ + ∂̄μ̄ = 0": ([("partial_bar", "mu_bar"), ("mu_bar", "partial_bar")], (-1, 3)),
    "μ̄² = 0": ([("mu_bar", "mu_bar")], (-2, 4)),
}


def verify_axioms(c: DoubleComplex) -> AxiomReport:
    """Check d² = 0 componentwise and, if present, the real structure.

    Every failing identity is reported once per bidegree with the first basis
    vector on which it fails.
    """
    report = AxiomReport()
    identities = _ALMOST_COMPLEX_IDENTITIES if c.almost_complex else _INTEGRABLE_IDENTITIES
    for p, q in c.bidegrees():
        if not c.dim(p, q):
            continue
        for name, (terms, (sp, sq)) in identities.items():
            target = (p + sp, q + sq)
            if not (0 <= target[0] <= c.n and 0 <= target[1] <= c.n):
                continue
            bad = _sum_of_composites(c, terms, p, q, target).nonzero_columns()
            if bad:
                report.violations.append(Violation(name, (p, q), bad[0]))
    if c.has_real_structure:
        _verify_real_structure(c, report)
    return report


def _verify_real_structure(c: DoubleComplex, report: AxiomReport) -> None:
    for p, q in c.bidegrees():
        if not c.dim(p, q):
            continue
        # sigma is antilinear: sigma(sigma(x)) = R_{qp} conj(R_{pq}) x
        sq = compose(c.conjugation(q, p), c.conjugation(p, q).conjugate())
        diff = sq - LabeledMatrix.identity(c.basis(p, q))
        bad = diff.nonzero_columns()
        if bad:
            report.violations.append(Violation("conjugation is an involution", (p, q), bad[0]))
        # sigma ∘ op = conj_op ∘ sigma, i.e. R' conj(M) = M' R
        for op, partner in (("partial", "partial_bar"), ("partial_bar", "partial"), ("mu", "mu_bar"), ("mu_bar", "mu")):
            dp, dq = OFFSETS[op]
            t = (p + dp, q + dq)
            if not (0 <= t[0] <= c.n and 0 <= t[1] <= c.n):
                continue
            lhs = compose(c.conjugation(*t), c.op(op, p, q).conjugate())
            rhs = compose(c.op(partner, q, p), c.conjugation(p, q))
            bad = (lhs - rhs).nonzero_columns()
            if bad:
                name = f"conjugation intertwines {SYMBOLS[op]} with {SYMBOLS[partner]}"
                report.violations.append(Violation(name, (p, q), bad[0]))


def direct_sum(complexes: Sequence[DoubleComplex], name: str = "") -> DoubleComplex:
    """Block-diagonal direct sum; basis labels get a ``s<i>:`` prefix."""
    if not complexes:
        raise ComplexError("direct sum of an empty list")
    n = complexes[0].n
    for c in complexes:
        if c.n != n:
            raise ComplexError(f"cannot sum complexes of dimensions {n} and {c.n}")
    if len(complexes) == 1:
        return complexes[0]

    def relabel(i: int, labels: Sequence[str]) -> tuple[str, ...]:
        return tuple(f"s{i}:{lab}" for lab in labels)

    bidegrees = complexes[0].bidegrees()
    basis = {bd: tuple(lab for i, c in enumerate(complexes) for lab in relabel(i, c.basis(*bd))) for bd in bidegrees}

    def diagonal(getter, src: Bidegree, tgt: Bidegree) -> LabeledMatrix:
        rows = [relabel(i, c.basis(*tgt)) for i, c in enumerate(complexes)]
        cols = [relabel(i, c.basis(*src)) for i, c in enumerate(complexes)]
        blocks = {}
        for i, c in enumerate(complexes):
            m = getter(c)
            if rows[i] and cols[i] and not m.is_zero():
                blocks[(i, i)] = LabeledMatrix(rows[i], cols[i], m.entries)
        return block_matrix(rows, cols, blocks)

    maps: dict[str, dict[Bidegree, LabeledMatrix]] = {}
    for op, (dp, dq) in OFFSETS.items():
        table = {}
        for p, q in bidegrees:
            t = (p + dp, q + dq)
            if not (0 <= t[0] <= n and 0 <= t[1] <= n):
                continue
            if any((p, q) in c._maps[op] for c in complexes):
                table[(p, q)] = diagonal(lambda c, p=p, q=q, op=op: c.op(op, p, q), (p, q), t)
        maps[op] = table
    real = None
    if all(c.has_real_structure for c in complexes):
        real = {(p, q): diagonal(lambda c, p=p, q=q: c.conjugation(p, q), (p, q), (q, p)) for p, q in bidegrees}
    return DoubleComplex(n, basis, maps, real, name=name)


def zero_complex(n: int, name: str = "zero") -> DoubleComplex:
    return DoubleComplex(n, {}, name=name)
