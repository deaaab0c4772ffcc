"""The windowed complexes ``(B^•_{p,q}, δ^•_{p,q})`` cut out of a double complex.

For ``k <= p + q`` the space ``B^k_{p,q}`` is the sum of ``A^{r,s}`` with
``r + s = k`` inside the lower rectangle ``0 <= r <= p, 0 <= s <= q``; for
``k > p + q`` it is the sum with ``r + s = k + 1`` inside the upper rectangle
``p < r <= n, q < s <= n``. The differential is ``d`` followed by projection
below the corner, ``∂∂̄`` at ``k = p + q``, and plain ``d`` above.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .double_complex import Bidegree, DoubleComplex
from .linalg import LabeledMatrix, block_matrix


class UnsupportedStructureError(ValueError):
    """Windows are only defined for integrable double complexes."""


def window_blocks(n: int, p: int, q: int, k: int) -> list[Bidegree]:
    """Blocks of ``B^k_{p,q}``, listed by descending first index."""
    if k <= p + q:
        return [(r, k - r) for r in range(min(p, k, n), -1, -1) if 0 <= k - r <= min(q, n)]
    return [(r, k + 1 - r) for r in range(n, p, -1) if q < k + 1 - r <= n and r >= 0]


def in_lower_window(p: int, q: int, r: int, s: int) -> bool:
    return 0 <= r <= p and 0 <= s <= q


def in_upper_window(n: int, p: int, q: int, r: int, s: int) -> bool:
    return p < r <= n and q < s <= n


def window_degree(n: int, p: int, q: int, r: int, s: int) -> int | None:
    """Degree k with ``A^{r,s}`` a block of ``B^k_{p,q}``, or None if outside."""
    if in_lower_window(p, q, r, s):
        return r + s
    if in_upper_window(n, p, q, r, s):
        return r + s - 1
    return None


def degree_range(n: int) -> range:
    return range(-1, 2 * n + 1)


@dataclass
class BigolinWindow:
    """``(B^•_{p,q}, δ^•_{p,q})`` for one bidegree of one complex."""

    complex: DoubleComplex
    p: int
    q: int
    _deltas: dict[int, LabeledMatrix] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.complex.n

    def blocks(self, k: int) -> list[Bidegree]:
        return window_blocks(self.n, self.p, self.q, k)

    def space(self, k: int) -> tuple[str, ...]:
        return tuple(lab for bd in self.blocks(k) for lab in self.complex.basis(*bd))

    def dim(self, k: int) -> int:
        return len(self.space(k))

    @property
    def spaces(self) -> dict[int, list[Bidegree]]:
        return {k: self.blocks(k) for k in degree_range(self.n)}

    def delta(self, k: int) -> LabeledMatrix:
        """``δ^k_{p,q} : B^k -> B^{k+1}``."""
        m = self._deltas.get(k)
        if m is None:
            m = self._deltas[k] = self._build_delta(k)
        return m

    @property
    def deltas(self) -> dict[int, LabeledMatrix]:
        return {k: self.delta(k) for k in degree_range(self.n)}

    def _build_delta(self, k: int) -> LabeledMatrix:
        c, p, q = self.complex, self.p, self.q
        src, tgt = self.blocks(k), self.blocks(k + 1)
        tindex = {bd: i for i, bd in enumerate(tgt)}
        parts = {}
        if k == p + q:
            if (p, q) in src and (p + 1, q + 1) in tindex:
                parts[(tindex[(p + 1, q + 1)], src.index((p, q)))] = c.ddbar(p, q)
        else:
            for j, (r, s) in enumerate(src):
                if (r + 1, s) in tindex:
                    parts[(tindex[(r + 1, s)], j)] = c.partial(r, s)
                if (r, s + 1) in tindex:
                    parts[(tindex[(r, s + 1)], j)] = c.partial_bar(r, s)
        return block_matrix([c.basis(*b) for b in tgt], [c.basis(*b) for b in src], parts)


def build_window(c: DoubleComplex, p: int, q: int) -> BigolinWindow:
    if c.almost_complex:
        raise UnsupportedStructureError("windowed complexes need an integrable structure (no μ, μ̄)")
    if not (-1 <= p <= c.n and -1 <= q <= c.n):
        raise ValueError(f"bidegree ({p}, {q}) outside -1..{c.n}")
    cache = c.memo.setdefault("windows", {})
    w = cache.get((p, q))
    if w is None:
        w = cache[(p, q)] = BigolinWindow(c, p, q)
    return w


def window_space_identity_check(n: int, p: int, q: int, k: int) -> bool:
    """Whether ``B^k_{p,q}`` and ``B^{k+1}_{k-q,k-p}`` have the same blocks."""
    if not (0 <= p <= n and 0 <= q <= n and p + q < k <= 2 * n - 2 and k - q <= n and k - p <= n):
        raise ValueError(
            f"(p, q, k) = ({p}, {q}, {k}) needs 0 <= p, q <= n, p+q < k <= 2n-2 and k-q, k-p <= n (n = {n})"
        )
    return sorted(window_blocks(n, p, q, k)) == sorted(window_blocks(n, k - q, k - p, k + 1))
