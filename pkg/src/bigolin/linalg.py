"""Dense exact matrices over Q(i) whose rows and columns carry basis labels.

Elimination is plain Gauss-Jordan with the first nonzero entry (in row order)
taken as pivot for each column, so the reduced form is a deterministic
function of the input. Internally rows are held sparsely during elimination;
matrices built from forms and zigzags are mostly zeros. When every entry is
real the elimination runs over :class:`~fractions.Fraction` directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import ONE, ZERO, GaussianRational, Scalar


class LabelMismatchError(ValueError):
    """Raised when two matrices are combined along incompatible bases."""

    def __init__(self, message: str, label: str | None = None):
        super().__init__(message)
        self.label = label


def _check_labels(labels: Sequence[str], what: str) -> tuple[str, ...]:
    labels = tuple(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise LabelMismatchError(f"duplicate {what} label {lab!r}", lab)
        seen.add(lab)
    return labels


def _first_difference(a: Sequence[str], b: Sequence[str]) -> str | None:
    for x, y in zip(a, b):
        if x != y:
            return x
    if len(a) != len(b):
        longer = a if len(a) > len(b) else b
        return longer[min(len(a), len(b))]
    return None


class LabeledMatrix:
    """Immutable matrix with labelled rows (codomain) and columns (domain)."""

    __slots__ = ("rows", "cols", "_entries", "_rank")

    def __init__(self, rows: Sequence[str], cols: Sequence[str], entries: Iterable[Iterable[Scalar]] = ()):
        self.rows = _check_labels(rows, "row")
        self.cols = _check_labels(cols, "column")
        grid = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in entries)
        if not grid and self.rows and self.cols:
            grid = tuple((ZERO,) * len(self.cols) for _ in self.rows)
        elif not grid and self.rows:
            grid = tuple(() for _ in self.rows)
        if len(grid) != len(self.rows) or any(len(r) != len(self.cols) for r in grid):
            raise ValueError(
                f"entry grid does not match labels: expected {len(self.rows)}x{len(self.cols)}"
            )
        self._entries = grid
        self._rank: int | None = None

    # construction helpers

    @classmethod
    def zeros(cls, rows: Sequence[str], cols: Sequence[str]) -> "LabeledMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, labels: Sequence[str]) -> "LabeledMatrix":
        labels = tuple(labels)
        n = len(labels)
        return cls(labels, labels, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_dict(cls, rows: Sequence[str], cols: Sequence[str], entries: dict[tuple[str, str], Scalar]) -> "LabeledMatrix":
        """Build from ``{(row_label, col_label): value}``; missing entries are zero."""
        ri = {lab: i for i, lab in enumerate(rows)}
        ci = {lab: j for j, lab in enumerate(cols)}
        grid = [[ZERO] * len(ci) for _ in ri]
        for (r, c), v in entries.items():
            if r not in ri:
                raise LabelMismatchError(f"unknown row label {r!r}", r)
            if c not in ci:
                raise LabelMismatchError(f"unknown column label {c!r}", c)
            grid[ri[r]][ci[c]] = GaussianRational.coerce(v)
        return cls(rows, cols, grid)

    # basic accessors

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def entries(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._entries

    def __getitem__(self, key: tuple[int, int]) -> GaussianRational:
        i, j = key
        return self._entries[i][j]

    def entry(self, row: str, col: str) -> GaussianRational:
        return self._entries[self.rows.index(row)][self.cols.index(col)]

    def column(self, j: int) -> tuple[GaussianRational, ...]:
        return tuple(row[j] for row in self._entries)

    def is_zero(self) -> bool:
        return not any(x for row in self._entries for x in row)

    def nonzero_columns(self) -> list[str]:
        return [c for j, c in enumerate(self.cols) if any(row[j] for row in self._entries)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"LabeledMatrix({len(self.rows)}x{len(self.cols)})"

    def __str__(self) -> str:
        """Aligned text grid, for debugging."""
        cells = [[""] + list(self.cols)]
        for lab, row in zip(self.rows, self._entries):
            cells.append([lab] + [str(x) for x in row])
        widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)

    # algebra

    def transpose(self) -> "LabeledMatrix":
        return LabeledMatrix(self.cols, self.rows, list(zip(*self._entries)) if self.rows else [() for _ in self.cols])

    def conjugate(self) -> "LabeledMatrix":
        """Entrywise complex conjugate."""
        return LabeledMatrix(self.rows, self.cols, [[x.conj() for x in row] for row in self._entries])

    def scale(self, c: Scalar) -> "LabeledMatrix":
        c = GaussianRational.coerce(c)
        return LabeledMatrix(self.rows, self.cols, [[c * x for x in row] for row in self._entries])

    def __neg__(self) -> "LabeledMatrix":
        return self.scale(-1)

    def __add__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if self.rows != other.rows:
            raise LabelMismatchError("row labels differ in sum", _first_difference(self.rows, other.rows))
        if self.cols != other.cols:
            raise LabelMismatchError("column labels differ in sum", _first_difference(self.cols, other.cols))
        return LabeledMatrix(
            self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)]
        )

    def __sub__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        return self + (-other)

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        return compose(self, other)

    def apply(self, vector: Sequence[Scalar]) -> tuple[GaussianRational, ...]:
        if len(vector) != len(self.cols):
            raise ValueError(f"vector of length {len(vector)} for {len(self.cols)} columns")
        vec = [GaussianRational.coerce(v) for v in vector]
        out = []
        for row in self._entries:
            acc = ZERO
            for a, v in zip(row, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def select(self, rows: Sequence[str] | None = None, cols: Sequence[str] | None = None) -> "LabeledMatrix":
        """Submatrix (or reordering) by label."""
        rows = self.rows if rows is None else tuple(rows)
        cols = self.cols if cols is None else tuple(cols)
        ri = {lab: i for i, lab in enumerate(self.rows)}
        ci = {lab: j for j, lab in enumerate(self.cols)}
        for lab in rows:
            if lab not in ri:
                raise LabelMismatchError(f"unknown row label {lab!r}", lab)
        for lab in cols:
            if lab not in ci:
                raise LabelMismatchError(f"unknown column label {lab!r}", lab)
        return LabeledMatrix(rows, cols, [[self._entries[ri[r]][ci[c]] for c in cols] for r in rows])

    # elimination

    def rank(self) -> int:
        if self._rank is None:
            self._rank = len(_eliminate(self._entries, len(self.cols), full=False)[1])
        return self._rank

    def rref(self) -> tuple["LabeledMatrix", tuple[int, ...]]:
        """Reduced row echelon form (zero rows dropped) and pivot column indices."""
        rows, pivots = _eliminate(self._entries, len(self.cols), full=True)
        grid = [[GaussianRational.coerce(r.get(j, 0)) for j in range(len(self.cols))] for r in rows]
        return LabeledMatrix([f"r{i}" for i in range(len(grid))], self.cols, grid), tuple(pivots)

    def kernel_basis(self) -> list[tuple[GaussianRational, ...]]:
        """Basis of the right null space, one vector per free column."""
        ncols = len(self.cols)
        rows, pivots = _eliminate(self._entries, ncols, full=True)
        pivot_set = set(pivots)
        basis = []
        for f in range(ncols):
            if f in pivot_set:
                continue
            vec = [ZERO] * ncols
            vec[f] = ONE
            for row, pc in zip(rows, pivots):
                v = row.get(f)
                if v:
                    vec[pc] = -GaussianRational.coerce(v)
            basis.append(tuple(vec))
        return basis


def _eliminate(entries, ncols: int, full: bool):
    """Gauss(-Jordan) elimination on sparse copies of ``entries``.

    Returns (pivot rows as {col: value} with unit pivots, pivot columns).
    """
    real = all(not x.im for row in entries for x in row)
    if real:
        work = [{j: x.re for j, x in enumerate(row) if x} for row in entries]
    else:
        work = [{j: x for j, x in enumerate(row) if x} for row in entries]
    work = [r for r in work if r]
    done: list[dict] = []
    pivots: list[int] = []
    for col in range(ncols):
        if not work:
            break
        idx = next((i for i, r in enumerate(work) if col in r), None)
        if idx is None:
            continue
        prow = work.pop(idx)
        inv = 1 / prow[col] if real else prow[col].inverse()
        prow = {j: v * inv for j, v in prow.items()}
        targets = work + done if full else work
        for r in targets:
            f = r.get(col)
            if not f:
                continue
            for j, v in prow.items():
                nv = r.get(j, 0) - f * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
        work = [r for r in work if r]
        done.append(prow)
        pivots.append(col)
    return done, pivots


def rank(m: LabeledMatrix) -> int:
    return m.rank()


def kernel_basis(m: LabeledMatrix) -> list[tuple[GaussianRational, ...]]:
    return m.kernel_basis()


def hconcat(m1: LabeledMatrix, m2: LabeledMatrix) -> LabeledMatrix:
    """``[m1 | m2]``: same rows, the column bases joined."""
    if m1.rows != m2.rows:
        raise LabelMismatchError("hconcat needs identical row labels", _first_difference(m1.rows, m2.rows))
    clash = set(m1.cols) & set(m2.cols)
    if clash:
        lab = min(clash)
        raise LabelMismatchError(f"column label {lab!r} appears in both blocks", lab)
    return LabeledMatrix(m1.rows, m1.cols + m2.cols, [a + b for a, b in zip(m1.entries, m2.entries)])


def vconcat(m1: LabeledMatrix, m2: LabeledMatrix) -> LabeledMatrix:
    """``[m1 ; m2]``: same columns, the row bases joined."""
    if m1.cols != m2.cols:
        raise LabelMismatchError("vconcat needs identical column labels", _first_difference(m1.cols, m2.cols))
    clash = set(m1.rows) & set(m2.rows)
    if clash:
        lab = min(clash)
        raise LabelMismatchError(f"row label {lab!r} appears in both blocks", lab)
    return LabeledMatrix(m1.rows + m2.rows, m1.cols, m1.entries + m2.entries)


def compose(m1: LabeledMatrix, m2: LabeledMatrix) -> LabeledMatrix:
    """The product ``m1 * m2`` (apply ``m2`` first)."""
    if m1.cols != m2.rows:
        raise LabelMismatchError(
            "compose needs cols(m1) == rows(m2)", _first_difference(m1.cols, m2.rows)
        )
    inner = len(m1.cols)
    right = m2.entries
    grid = []
    for row in m1.entries:
        out = [ZERO] * len(m2.cols)
        for t in range(inner):
            a = row[t]
            if not a:
                continue
            for j, b in enumerate(right[t]):
                if b:
                    out[j] = out[j] + a * b
        grid.append(out)
    return LabeledMatrix(m1.rows, m2.cols, grid)


def block_matrix(
    row_blocks: Sequence[Sequence[str]],
    col_blocks: Sequence[Sequence[str]],
    blocks: dict[tuple[int, int], LabeledMatrix],
) -> LabeledMatrix:
    """Assemble a block matrix; ``blocks[(i, j)]`` maps column block j to row block i."""
    rows = tuple(lab for blk in row_blocks for lab in blk)
    cols = tuple(lab for blk in col_blocks for lab in blk)
    ri = {lab: i for i, lab in enumerate(rows)}
    ci = {lab: j for j, lab in enumerate(cols)}
    grid = [[ZERO] * len(cols) for _ in rows]
    for (bi, bj), m in blocks.items():
        if m.rows != tuple(row_blocks[bi]):
            raise LabelMismatchError(
                f"block ({bi},{bj}) rows do not match", _first_difference(m.rows, tuple(row_blocks[bi]))
            )
        if m.cols != tuple(col_blocks[bj]):
            raise LabelMismatchError(
                f"block ({bi},{bj}) columns do not match", _first_difference(m.cols, tuple(col_blocks[bj]))
            )
        for r, row in zip(m.rows, m.entries):
            gi = grid[ri[r]]
            for c, v in zip(m.cols, row):
                if v:
                    gi[ci[c]] = gi[ci[c]] + v
    return LabeledMatrix(rows, cols, grid)


def column_space_rank(vectors: Sequence[Sequence[Scalar]], dim: int) -> int:
    """Rank of a list of coordinate vectors in a space of dimension ``dim``."""
    if not vectors:
        return 0
    labels = [f"v{i}" for i in range(dim)]
    m = LabeledMatrix(labels, [f"c{j}" for j in range(len(vectors))], list(zip(*vectors)) if dim else [])
    return m.rank()


def as_fraction_grid(m: LabeledMatrix) -> list[list[Fraction]]:
    """Real parts as fractions; raises if any entry is non-real."""
    if any(x.im for row in m.entries for x in row):
        raise ValueError("matrix has non-real entries")
    return [[x.re for x in row] for row in m.entries]
