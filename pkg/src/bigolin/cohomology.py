"""Cohomology dimensions of double complexes.

Every group here is a quotient ``ker(outgoing) / im(incoming)`` and goes
through :func:`quotient_dim`, which first checks that ``outgoing ∘ incoming``
vanishes. Results are cached on the complex (``c.memo``), which is safe
because complexes are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .double_complex import DoubleComplex
from .linalg import LabeledMatrix, compose, hconcat, vconcat
from .windows import UnsupportedStructureError, build_window, degree_range, window_blocks, window_space_identity_check


class CompositeNotZeroError(ValueError):
    """``outgoing ∘ incoming`` is not zero, so the quotient is undefined."""

    def __init__(self, message: str, witness: str):
        super().__init__(f"{message} (witness {witness})")
        self.witness = witness


def quotient_dim(incoming: LabeledMatrix, outgoing: LabeledMatrix) -> int:
    """``dim ker(outgoing) - rank(incoming)`` after checking the composite."""
    if incoming.rows != outgoing.cols:
        # align the middle space by label
        incoming = incoming.select(rows=outgoing.cols)
    bad = compose(outgoing, incoming).nonzero_columns()
    if bad:
        raise CompositeNotZeroError("composite of consecutive maps is nonzero", bad[0])
    return len(outgoing.cols) - outgoing.rank() - incoming.rank()


def _cached(c: DoubleComplex, key, compute):
    memo = c.memo.setdefault("cohomology", {})
    if key not in memo:
        memo[key] = compute()
    return memo[key]


def _require_integrable(c: DoubleComplex, what: str) -> None:
    if c.almost_complex:
        raise UnsupportedStructureError(f"{what} needs an integrable structure (no μ, μ̄)")


def _in_grid(c: DoubleComplex, p: int, q: int) -> bool:
    return 0 <= p <= c.n and 0 <= q <= c.n


def betti(c: DoubleComplex, k: int) -> int:
    """de Rham number ``b^k`` of the total complex."""
    if not 0 <= k <= 2 * c.n:
        return 0
    return _cached(c, ("betti", k), lambda: quotient_dim(c.total_differential(k - 1), c.total_differential(k)))


def dolbeault(c: DoubleComplex, p: int, q: int) -> int:
    _require_integrable(c, "Dolbeault cohomology")
    if not _in_grid(c, p, q):
        return 0
    return _cached(c, ("dbar", p, q), lambda: quotient_dim(c.partial_bar(p, q - 1), c.partial_bar(p, q)))


def partial_cohom(c: DoubleComplex, p: int, q: int) -> int:
    _require_integrable(c, "∂-cohomology")
    if not _in_grid(c, p, q):
        return 0
    return _cached(c, ("d", p, q), lambda: quotient_dim(c.partial(p - 1, q), c.partial(p, q)))


def aeppli(c: DoubleComplex, p: int, q: int) -> int:
    _require_integrable(c, "Aeppli cohomology")
    if not _in_grid(c, p, q):
        return 0

    def compute():
        incoming = hconcat(c.partial(p - 1, q), c.partial_bar(p, q - 1))
        return quotient_dim(incoming, c.ddbar(p, q))

    return _cached(c, ("A", p, q), compute)


def bott_chern(c: DoubleComplex, p: int, q: int) -> int:
    _require_integrable(c, "Bott-Chern cohomology")
    if not _in_grid(c, p, q):
        return 0

    def compute():
        outgoing = vconcat(c.partial(p, q), c.partial_bar(p, q))
        return quotient_dim(c.ddbar(p - 1, q - 1), outgoing)

    return _cached(c, ("BC", p, q), compute)


def bigolin(c: DoubleComplex, p: int, q: int, k: int) -> int:
    """``h^k_{p,q}``, the cohomology of the window complex at degree k."""
    w = build_window(c, p, q)
    return _cached(c, ("B", p, q, k), lambda: quotient_dim(w.delta(k - 1), w.delta(k)))


def _h1_maps(c: DoubleComplex) -> tuple[LabeledMatrix, LabeledMatrix]:
    incoming = c.total_differential(0)
    # ∂̄ on A^{1,0} and ∂ on A^{0,1}, both into A^{1,1}
    outgoing = hconcat(c.partial_bar(1, 0), c.partial(0, 1))
    return incoming, outgoing


def h1_B(c: DoubleComplex) -> int:
    """First cohomology of ``A^0 -> A^{1,0}⊕A^{0,1} -> A^{1,1}``; μ, μ̄ allowed."""
    return _cached(c, ("h1B",), lambda: quotient_dim(*_h1_maps(c)))


def h1_B_composite(c: DoubleComplex) -> LabeledMatrix:
    """The composite whose vanishing makes :func:`h1_B` well defined."""
    incoming, outgoing = _h1_maps(c)
    return compose(outgoing, incoming.select(rows=outgoing.cols))


def h_top_B(c: DoubleComplex) -> int:
    """Cohomology of ``A^{n-1,n-1} -> A^{n-1,n}⊕A^{n,n-1} -> A^{n,n}``."""
    n = c.n

    def compute():
        if n == 0:
            return 0
        incoming = vconcat(c.partial(n - 1, n - 1), c.partial_bar(n - 1, n - 1))
        outgoing = hconcat(c.partial_bar(n, n - 1), c.partial(n - 1, n))
        return quotient_dim(incoming, outgoing)

    return _cached(c, ("htopB",), compute)


class InducedMapError(ValueError):
    """The identity does not induce a map between the two window cohomologies."""


def induced_map_rank(c: DoubleComplex, p: int, q: int, k: int) -> int:
    """Rank of ``H^k_{p,q} -> H^{k+1}_{k-q,k-p}`` induced by the identity."""
    if not window_space_identity_check(c.n, p, q, k):
        raise InducedMapError(f"B^{k}_({p},{q}) and B^{k + 1}_({k - q},{k - p}) differ")
    src = build_window(c, p, q)
    tgt = build_window(c, k - q, k - p)
    space = src.space(k)
    ker_cols = src.delta(k).kernel_basis()
    ker = LabeledMatrix(space, [f"z{i}" for i in range(len(ker_cols))], list(zip(*ker_cols)) if ker_cols else ())
    im_tgt = tgt.delta(k).select(rows=space)
    im_src = src.delta(k - 1)
    # well defined: closed goes to closed, exact to exact
    if compose(tgt.delta(k + 1).select(cols=space), ker).nonzero_columns():
        raise InducedMapError("a δ-closed class of the source is not closed in the target")
    if hconcat(im_tgt, im_src).rank() != im_tgt.rank():
        raise InducedMapError("an exact class of the source is not exact in the target")
    return hconcat(ker, im_tgt).rank() - im_tgt.rank()


# profiles and Euler characteristics


@dataclass
class CohomologyProfile:
    n: int
    betti: dict[int, int]
    dolbeault: dict[tuple[int, int], int]
    partial: dict[tuple[int, int], int]
    aeppli: dict[tuple[int, int], int]
    bott_chern: dict[tuple[int, int], int]
    bigolin: dict[tuple[int, int, int], int]

    def to_json(self) -> dict:
        def keyed(d):
            return {",".join(map(str, key)): v for key, v in sorted(d.items())}

        return {
            "n": self.n,
            "betti": {str(k): v for k, v in sorted(self.betti.items())},
            "dolbeault": keyed(self.dolbeault),
            "partial": keyed(self.partial),
            "aeppli": keyed(self.aeppli),
            "bott_chern": keyed(self.bott_chern),
            "bigolin": keyed(self.bigolin),
        }


def profile(c: DoubleComplex) -> CohomologyProfile:
    n = c.n
    grid = [(p, q) for p in range(n + 1) for q in range(n + 1)]
    wide = range(-1, n + 1)
    return CohomologyProfile(
        n=n,
        betti={k: betti(c, k) for k in range(2 * n + 1)},
        dolbeault={bd: dolbeault(c, *bd) for bd in grid},
        partial={bd: partial_cohom(c, *bd) for bd in grid},
        aeppli={bd: aeppli(c, *bd) for bd in grid},
        bott_chern={bd: bott_chern(c, *bd) for bd in grid},
        bigolin={(p, q, k): bigolin(c, p, q, k) for p, q in product(wide, wide) for k in degree_range(n)},
    )


@dataclass
class EulerData:
    chi_pq: dict[tuple[int, int], int]
    chi_p: dict[int, int]


def euler_range(n: int) -> list[tuple[int, int]]:
    """Bidegrees with a meaningful window Euler characteristic."""
    return [(p, q) for p in range(-1, n + 1) for q in range(-1, n + 1) if p + q not in (-2, 2 * n)]


def euler_data(c: DoubleComplex) -> EulerData:
    n = c.n
    chi_pq = {(p, q): sum((-1) ** k * bigolin(c, p, q, k) for k in degree_range(n)) for p, q in euler_range(n)}
    chi_p = {p: sum((-1) ** q * dolbeault(c, p, q) for q in range(n + 1)) for p in range(n + 1)}
    return EulerData(chi_pq, chi_p)


# counting invariants


def enumerate_invariants(n: int) -> list[tuple[int, int, int]]:
    """Triples (p, q, k) left after removing every known coincidence.

    Starts from the lower window with p <= q and drops, in order: the Aeppli
    corner, de Rham and Dolbeault coincidences, the (n, n) corner, the de Rham
    case ``k = min(p, q) = n - 1``, and the two window identifications.
    The chain is applied from n = 3 on; for n <= 2 the list is empty.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return []
    out = []
    for p in range(n + 1):
        for q in range(p, n + 1):
            for k in range(p + q + 1):
                if k == p + q or k < min(p, q):
                    continue
                if p == 0 and k < q:
                    continue
                if p + q == 2 * n:
                    continue
                if k == min(p, q) == n - 1:
                    continue
                if p <= k <= q - 2:
                    continue
                if q == n and k == n - 1 and p <= n - 1:
                    continue
                out.append((p, q, k))
    return sorted(out)


def invariant_count(n: int) -> int:
    if n < 3:
        return 0
    return 2 * n - 3 + (n + 9) * (n - 1) * (n - 2) // 6


# relation audit


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    detail: str
    lhs: int
    rhs: int
    kind: str = "="  # "=", ">=", "<=" or "report"

    @property
    def passed(self) -> bool:
        if self.kind == "=":
            return self.lhs == self.rhs
        if self.kind == ">=":
            return self.lhs >= self.rhs
        if self.kind == "<=":
            return self.lhs <= self.rhs
        return True

    def __str__(self) -> str:
        op = {"report": "vs"}.get(self.kind, self.kind)
        status = "ok" if self.passed else "FAIL"
        return f"[{status}] {self.relation}: {self.detail}  {self.lhs} {op} {self.rhs}"


@dataclass
class AuditReport:
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def failures(self) -> list[RelationCheck]:
        return [ch for ch in self.checks if not ch.passed]

    def by_relation(self, prefix: str) -> list[RelationCheck]:
        return [ch for ch in self.checks if ch.relation.startswith(prefix)]

    def add(self, relation: str, detail: str, lhs: int, rhs: int, kind: str = "=") -> None:
        self.checks.append(RelationCheck(relation, detail, lhs, rhs, kind))

    def summary(self) -> str:
        names = sorted({ch.relation for ch in self.checks})
        lines = []
        for name in names:
            group = [ch for ch in self.checks if ch.relation == name]
            bad = sum(not ch.passed for ch in group)
            lines.append(f"{'FAIL' if bad else 'ok':4}  {name}  ({len(group) - bad}/{len(group)})")
        return "\n".join(lines)


def _h(p: int, q: int, k: int) -> str:
    return f"h^{k}_({p},{q})"


def relation_audit(c: DoubleComplex) -> AuditReport:
    """Evaluate the known identities between window cohomology and the classical ones.

    Needs an integrable complex. Conjugation symmetries are checked only when
    a real structure is present.
    """
    _require_integrable(c, "relation audit")
    n = c.n
    r = AuditReport()
    B = lambda p, q, k: bigolin(c, p, q, k)  # noqa: E731
    wide = range(-1, n + 1)
    grid = range(n + 1)
    degrees = degree_range(n)

    # window cohomology at the corner and just above it
    for p, q in product(grid, grid):
        r.add("corner = Aeppli", _h(p, q, p + q), B(p, q, p + q), aeppli(c, p, q))
    for p, q in product(range(-1, n), range(-1, n)):
        r.add("corner+1 = Bott-Chern", _h(p, q, p + q + 1), B(p, q, p + q + 1), bott_chern(c, p + 1, q + 1))

    # de Rham and Dolbeault coincidences
    for p, q in product(grid, grid):
        for k in degrees:
            if 0 <= k < min(p, q):
                r.add("dR below min(p,q)", _h(p, q, k), B(p, q, k), betti(c, k))
            if k > n + max(p, q):
                r.add("dR above n+max(p,q)", _h(p, q, k), B(p, q, k), betti(c, k + 1))
        k = min(p, q)
        r.add("contains dR at min(p,q)", _h(p, q, k), B(p, q, k), betti(c, k), ">=")
    for k in range(n + 1):
        r.add("Dolbeault (0,n) window", _h(0, n, k), B(0, n, k), dolbeault(c, 0, k))
        r.add("Dolbeault (0,n) window, conj", _h(n, 0, k), B(n, 0, k), partial_cohom(c, k, 0))
    for q in range(n):
        for k in range(q):
            r.add("Dolbeault (0,q) window", _h(0, q, k), B(0, q, k), dolbeault(c, 0, k))
            r.add("Dolbeault (0,q) window, conj", _h(q, 0, k), B(q, 0, k), partial_cohom(c, k, 0))
    for k in range(n - 1, 2 * n):
        r.add("Dolbeault (n-1,-1) window", _h(n - 1, -1, k), B(n - 1, -1, k), dolbeault(c, n, k + 1 - n))
        r.add("Dolbeault (n-1,-1) window, conj", _h(-1, n - 1, k), B(-1, n - 1, k), partial_cohom(c, k + 1 - n, n))
    for q in range(n - 1):
        for k in range(n + q + 1, 2 * n):
            r.add("Dolbeault (n-1,q) window", _h(n - 1, q, k), B(n - 1, q, k), dolbeault(c, n, k + 1 - n))
            r.add("Dolbeault (n-1,q) window, conj", _h(q, n - 1, k), B(q, n - 1, k), partial_cohom(c, k + 1 - n, n))

    # shifts of the window that leave the cohomology unchanged (p <= q and conjugate)
    for p, q in product(wide, wide):
        if p > q:
            continue
        for k in degrees:
            if p <= k <= q - 2:
                r.add("shrink q", f"{_h(p, q, k)} = {_h(p, q - 1, k)}", B(p, q, k), B(p, q - 1, k))
                r.add("shrink q, conj", f"{_h(q, p, k)} = {_h(q - 1, p, k)}", B(q, p, k), B(q - 1, p, k))
            if n + p + 2 <= k <= 2 * n - 1 and p + 1 <= n:
                r.add("grow p", f"{_h(p, q, k)} = {_h(p + 1, q, k)}", B(p, q, k), B(p + 1, q, k))
                r.add("grow p, conj", f"{_h(q, p, k)} = {_h(q, p + 1, k)}", B(q, p, k), B(q, p + 1, k))

    # coincidences forced by the corner rule
    for p, q in product(wide, wide):
        if min(p, q) == n - 1:
            r.add("corner rule: dR at n-1", _h(p, q, n - 1), B(p, q, n - 1), betti(c, n - 1))
        if max(p, q) == 0:
            r.add("corner rule: dR at n", _h(p, q, n), B(p, q, n), betti(c, n + 1))
    r.add("corner rule: Dolbeault (0,n-1)", _h(0, n - 1, n - 1), B(0, n - 1, n - 1), dolbeault(c, 0, n - 1))
    r.add("corner rule: Dolbeault (0,n-1), conj", _h(n - 1, 0, n - 1), B(n - 1, 0, n - 1), partial_cohom(c, n - 1, 0))
    r.add("corner rule: Dolbeault (n-1,0)", _h(n - 1, 0, n), B(n - 1, 0, n), dolbeault(c, n, 1))
    r.add("corner rule: Dolbeault (n-1,0), conj", _h(0, n - 1, n), B(0, n - 1, n), partial_cohom(c, 1, n))
    for p in range(n):
        r.add("corner rule: drop q=n", f"{_h(p, n, n - 1)} = {_h(p, n - 1, n - 1)}", B(p, n, n - 1), B(p, n - 1, n - 1))
        r.add("corner rule: drop q=n, conj", f"{_h(n, p, n - 1)} = {_h(n - 1, p, n - 1)}", B(n, p, n - 1), B(n - 1, p, n - 1))
        r.add("corner rule: p=-1 to 0", f"{_h(-1, p, n)} = {_h(0, p, n)}", B(-1, p, n), B(0, p, n))
        r.add("corner rule: p=-1 to 0, conj", f"{_h(p, -1, n)} = {_h(p, 0, n)}", B(p, -1, n), B(p, 0, n))

    # symmetries
    for p, q in product(wide, wide):
        for k in degrees:
            dual = (n - q - 1, n - p - 1, 2 * n - k - 1)
            if all(-1 <= x <= n for x in dual[:2]):
                r.add("duality", f"{_h(p, q, k)} = {_h(*dual)}", B(p, q, k), B(*dual))
            if c.has_real_structure:
                r.add("conjugation", f"{_h(p, q, k)} = {_h(q, p, k)}", B(p, q, k), B(q, p, k))
    for p, q in product(wide, wide):
        for k in degrees:
            src = sorted((n - s, n - rr) for rr, s in window_blocks(n, p, q, k))
            tgt = sorted(window_blocks(n, n - q - 1, n - p - 1, 2 * n - k - 1))
            if src != tgt:
                r.add("duality of window blocks", f"B^{k}_({p},{q})", 0, 1)

    # Euler characteristics
    e = euler_data(c)
    for (p, q), chi in e.chi_pq.items():
        dual = (n - q - 1, n - p - 1)
        if dual in e.chi_pq:
            r.add("Euler: duality", f"chi_({p},{q}) = -chi_{dual}", chi, -e.chi_pq[dual])
        if (q, p) in e.chi_pq and c.has_real_structure:
            r.add("Euler: conjugation", f"chi_({p},{q}) = chi_({q},{p})", chi, e.chi_pq[(q, p)])
        if p + q == n - 1:
            r.add("Euler: vanishing at p+q=n-1", f"chi_({p},{q})", chi, 0)
        if p + q <= n - 2:
            rhs = sum((-1) ** (k + 1) * e.chi_p[k] for k in range(p + 1, n - q))
            r.add("Euler: Dolbeault expression", f"chi_({p},{q})", chi, rhs)

    # first and top cohomology of the almost complex version
    b1 = betti(c, 1)
    r.add("h1_B contains b1", "h1_B >= b1", h1_B(c), b1, ">=")
    r.add("h1_B vs h_top_B (reported only)", "h1_B, h^{2n-1}_B", h1_B(c), h_top_B(c), "report")
    return r


def strictness_witness(c: DoubleComplex) -> tuple[int, int]:
    """``(h^1_{1,1}, b^1)``; the inclusion of de Rham classes can be strict."""
    return bigolin(c, 1, 1, 1), betti(c, 1)
