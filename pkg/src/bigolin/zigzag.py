"""Zigzags of compact complex threefolds and the cohomological invariants they carry.

The seventeen shapes ``A..S`` (there is no J or K) generate, under conjugation
and duality, every zigzag that can occur away from the corner dots. A
multiplicity vector ``m`` determines the invariants linearly, ``v = T m``, and
seventeen of the rows of ``T`` form an invertible matrix ``U`` whose inverse
recovers ``m`` from cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cohomology import aeppli, betti, bigolin, bott_chern, dolbeault, partial_cohom
from .double_complex import DoubleComplex, direct_sum
from .linalg import LabeledMatrix
from .windows import window_degree

N = 3
LETTERS = tuple("ABCDEFGHILMNOPQRS")

Dot = tuple[int, int]
Arrow = tuple[Dot, Dot, str]  # (source, target, "d" or "dbar")

INVARIANTS22 = (
    "h01_dbar", "h01_d", "h01_BC", "h01_A", "b1", "h1_11", "h1_12",
    "h02_dbar", "h02_d", "b2", "h11_dbar", "h11_BC", "h11_A", "h2_12",
    "h03_dbar", "h12_dbar", "h12_BC", "b3", "h3_13", "h3_22", "h3_23", "h4_23",
)  # fmt: skip
BIGOLIN_ROWS = {
    "h1_11": (1, 1, 1), "h1_12": (1, 2, 1), "h2_12": (1, 2, 2), "h3_13": (1, 3, 3),
    "h3_22": (2, 2, 3), "h3_23": (2, 3, 3), "h4_23": (2, 3, 4),
}  # fmt: skip
DROPPED = ("b3", "h2_12", "h3_13", "h3_22", "h3_23")
INVARIANTS17 = tuple(name for name in INVARIANTS22 if name not in DROPPED)


@dataclass(frozen=True)
class ZigzagShape:
    dots: tuple[Dot, ...]
    arrows: tuple[Arrow, ...] = ()
    name: str = ""

    def __post_init__(self):
        dots = tuple(sorted(set(self.dots)))
        arrows = tuple(sorted(set(self.arrows)))
        for src, tgt, kind in arrows:
            step = (1, 0) if kind == "d" else (0, 1)
            if kind not in ("d", "dbar") or (tgt[0] - src[0], tgt[1] - src[1]) != step:
                raise ValueError(f"bad arrow {src}->{tgt} of kind {kind}")
            if src not in dots or tgt not in dots:
                raise ValueError(f"arrow {src}->{tgt} leaves the dot set")
        if len(dots) != len(arrows) + 1:
            raise ValueError("a zigzag has one more dot than arrows")
        object.__setattr__(self, "dots", dots)
        object.__setattr__(self, "arrows", arrows)

    @property
    def key(self) -> tuple:
        return (self.dots, self.arrows)

    def degrees(self) -> list[int]:
        return [p + q for p, q in self.dots]


def _shape(name: str, dots: Sequence[Dot], arrows: Sequence[tuple[Dot, Dot, str]] = ()) -> ZigzagShape:
    return ZigzagShape(tuple(dots), tuple(arrows), name)


_B = [((0, 1), (0, 2), "dbar")]
_C = _B + [((0, 1), (1, 1), "d")]
_D = _C + [((1, 0), (1, 1), "dbar")]
_E = _D + [((1, 0), (2, 0), "d")]
_F = [((0, 1), (1, 1), "d")]
_G = _F + [((1, 0), (1, 1), "dbar")]
_I = [((0, 2), (1, 2), "d")]
_L = _I + [((1, 1), (1, 2), "dbar")]
_M = _L + [((1, 1), (2, 1), "d")]
_N = _M + [((2, 0), (2, 1), "dbar")]
_P = [((1, 1), (1, 2), "dbar")]
_Q = _P + [((1, 1), (2, 1), "d")]


def _from_arrows(name: str, arrows: list) -> ZigzagShape:
    dots = {a for a, _, _ in arrows} | {b for _, b, _ in arrows}
    return _shape(name, dots, arrows)


_SHAPES = {
    "A": _shape("A", [(0, 1)]),
    "B": _from_arrows("B", _B),
    "C": _from_arrows("C", _C),
    "D": _from_arrows("D", _D),
    "E": _from_arrows("E", _E),
    "F": _from_arrows("F", _F),
    "G": _from_arrows("G", _G),
    "H": _shape("H", [(0, 2)]),
    "I": _from_arrows("I", _I),
    "L": _from_arrows("L", _L),
    "M": _from_arrows("M", _M),
    "N": _from_arrows("N", _N),
    "O": _shape("O", [(1, 1)]),
    "P": _from_arrows("P", _P),
    "Q": _from_arrows("Q", _Q),
    "R": _shape("R", [(0, 3)]),
    "S": _shape("S", [(1, 2)]),
}


def canonical_shapes() -> list[ZigzagShape]:
    return [_SHAPES[x] for x in LETTERS]


def shape(letter: str) -> ZigzagShape:
    return _SHAPES[letter]


def conjugate_shape(z: ZigzagShape) -> ZigzagShape:
    swap = {"d": "dbar", "dbar": "d"}
    return ZigzagShape(
        tuple((q, p) for p, q in z.dots),
        tuple(((a[1], a[0]), (b[1], b[0]), swap[k]) for a, b, k in z.arrows),
        z.name + "'" if z.name else "",
    )


def dual_shape(z: ZigzagShape, n: int = N) -> ZigzagShape:
    """Point reflection ``(p, q) -> (n-p, n-q)``; arrows reverse and keep their kind."""

    def refl(d: Dot) -> Dot:
        return (n - d[0], n - d[1])

    return ZigzagShape(
        tuple(refl(d) for d in z.dots),
        tuple((refl(b), refl(a), k) for a, b, k in z.arrows),
        z.name + "*" if z.name else "",
    )


def orbit(z: ZigzagShape, n: int = N) -> list[ZigzagShape]:
    """Distinct shapes among z, its conjugate, its dual and the conjugate dual."""
    out: dict[tuple, ZigzagShape] = {}
    for s in (z, conjugate_shape(z), dual_shape(z, n), conjugate_shape(dual_shape(z, n))):
        out.setdefault(s.key, s)
    return list(out.values())


# synthetic complexes


def _shape_complex(members: Sequence[ZigzagShape], prefix: str, n: int = N) -> DoubleComplex:
    """One copy of an orbit: a basis vector per dot, arrows equal to 1, conjugation pairing the members."""
    index = {m.key: j for j, m in enumerate(members)}
    label = {}
    basis: dict[Dot, list[str]] = {}
    for j, m in enumerate(members):
        for d in m.dots:
            lab = f"{prefix}.{j}@{d[0]}{d[1]}"
            label[(j, d)] = lab
            basis.setdefault(d, []).append(lab)
    entries: dict[str, dict[Dot, dict]] = {"partial": {}, "partial_bar": {}}
    for j, m in enumerate(members):
        for a, b, kind in m.arrows:
            op = "partial" if kind == "d" else "partial_bar"
            entries[op].setdefault(a, {})[(label[(j, b)], label[(j, a)])] = 1
    maps = {
        op: {
            bd: LabeledMatrix.from_dict(basis[(bd[0] + dp, bd[1] + dq)], basis[bd], e)
            for bd, e in table.items()
        }
        for (op, table), (dp, dq) in zip(entries.items(), ((1, 0), (0, 1)))
    }
    real: dict[Dot, dict] = {}
    for j, m in enumerate(members):
        jc = index[conjugate_shape(m).key]
        for p, q in m.dots:
            real.setdefault((p, q), {})[(label[(jc, (q, p))], label[(j, (p, q))])] = 1
    real_structure = {
        (p, q): LabeledMatrix.from_dict(basis[(q, p)], basis[(p, q)], e) for (p, q), e in real.items()
    }
    return DoubleComplex(n, basis, maps, real_structure, name=prefix)


def synthetic_complex(m: Mapping[str, int], n: int = N) -> DoubleComplex:
    """Direct sum of ``m[X]`` copies of the full orbit of each shape X."""
    parts = []
    for x in LETTERS:
        count = int(m.get(x, 0))
        if count < 0:
            raise ValueError(f"negative multiplicity for {x}")
        members = orbit(_SHAPES[x], n)
        parts.extend(_shape_complex(members, f"{x}{i}", n) for i in range(count))
    unknown = set(m) - set(LETTERS)
    if unknown:
        raise ValueError(f"unknown zigzag letter(s) {sorted(unknown)}")
    if not parts:
        return DoubleComplex(n, {}, real_structure={}, name="synthetic")
    return _merge(parts, n)


def _merge(parts: list[DoubleComplex], n: int) -> DoubleComplex:
    # labels are already unique, so the direct sum needs no relabelling
    c = direct_sum(parts, name="synthetic")
    if len(parts) == 1:
        return c
    strip = lambda lab: lab.split(":", 1)[1]  # noqa: E731
    basis = {bd: [strip(x) for x in c.basis(*bd)] for bd in c.bidegrees()}

    def relabel(mat: LabeledMatrix) -> LabeledMatrix:
        return LabeledMatrix([strip(x) for x in mat.rows], [strip(x) for x in mat.cols], mat.entries)

    maps = {op: {bd: relabel(mat) for bd, mat in table.items()} for op, table in c.maps().items()}
    real = {bd: relabel(mat) for bd, mat in c.real_structure().items()}
    return DoubleComplex(n, basis, maps, real, name="synthetic")


# contributions to the window cohomology


def _components(dots: set[Dot], arrows: Sequence[Arrow]) -> list[set[Dot]]:
    parent = {d: d for d in dots}

    def find(d):
        while parent[d] != d:
            parent[d] = parent[parent[d]]
            d = parent[d]
        return d

    for a, b, _ in arrows:
        if a in parent and b in parent:
            parent[find(a)] = find(b)
    groups: dict[Dot, set[Dot]] = {}
    for d in dots:
        groups.setdefault(find(d), set()).add(d)
    return list(groups.values())


def contribution(z: ZigzagShape, p: int, q: int, k: int, n: int = N) -> int:
    """Contribution of one zigzag to ``h^k_{p,q}`` for ``k <= p + q``.

    The zigzag is cut down to the dots lying in the window; each connected
    piece with an odd number of dots, most of them in window degree k,
    contributes one.
    """
    if k > p + q:
        raise ValueError("the contribution rule is stated for k <= p + q")
    kept = {d: window_degree(n, p, q, *d) for d in z.dots}
    kept = {d: deg for d, deg in kept.items() if deg is not None}
    total = 0
    for comp in _components(set(kept), z.arrows):
        if len(comp) % 2 == 0:
            continue
        if 2 * sum(kept[d] == k for d in comp) > len(comp):
            total += 1
    return total


def orbit_contribution(letter: str, p: int, q: int, k: int) -> int:
    return sum(contribution(s, p, q, k) for s in orbit(_SHAPES[letter]))


# the constant tables

# fmt: off
_T = {
    "h01_dbar": (1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "h01_d":    (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "h01_BC":   (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "h01_A":    (1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "b1":       (2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "h1_11":    (2, 2, 0, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "h1_12":    (2, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "h02_dbar": (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0),
    "h02_d":    (0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "b2":       (0, 0, 2, 0, 1, 0, 0, 2, 0, 2, 0, 1, 1, 0, 0, 0, 0),
    "h11_dbar": (0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0),
    "h11_BC":   (0, 0, 2, 2, 1, 2, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "h11_A":    (0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 1, 1, 2, 1, 0, 0),
    "h2_12":    (0, 0, 1, 0, 0, 0, 0, 1, 0, 2, 1, 1, 1, 1, 0, 0, 0),
    "h03_dbar": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "h12_dbar": (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1),
    "h12_BC":   (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 0, 1, 1, 0, 1),
    "b3":       (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2),
    "h3_13":    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1),
    "h3_22":    (0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 1, 0, 0, 2, 0, 2),
    "h3_23":    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 1, 2),
    "h4_23":    (0, 0, 2, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0),
}

# columns in INVARIANTS17 order
_U_INV = {
    "A": (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "B": (0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "C": (-1, 0, 0, 1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "D": (0, -1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "E": (0, 0, 0, 0, 1, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "F": (1, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "G": (0, 0, -2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "H": (1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "I": (-1, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 1, -1, 0),
    "L": (0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 1),
    "M": (0, 0, -1, -1, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 1),
    "N": (0, 0, 2, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -2),
    "O": (0, 0, 0, -2, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "P": (0, -1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1),
    "Q": (0, 2, 0, 2, -1, -1, 0, 0, -2, 1, -2, 0, 1, 0, 2, -2, 0),
    "R": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "S": (1, -1, 0, -2, 0, 1, 0, -1, 1, 0, 1, 0, -1, 0, -1, 2, 0),
}
# fmt: on

REFERENCE_IIB = {"A": 2, "B": 0, "C": 1, "D": 0, "E": 0, "F": 0, "G": 0, "H": 1, "I": 0,
              "L": 1, "M": 0, "N": 0, "O": 2, "P": 1, "Q": 0, "R": 1, "S": 4}  # fmt: skip


def table_T() -> LabeledMatrix:
    """Contribution of each zigzag (columns) to each invariant (rows)."""
    return LabeledMatrix(INVARIANTS22, LETTERS, [_T[r] for r in INVARIANTS22])


def table_U_inv() -> LabeledMatrix:
    return LabeledMatrix(LETTERS, INVARIANTS17, [_U_INV[x] for x in LETTERS])


def table_U() -> LabeledMatrix:
    return table_T().select(rows=INVARIANTS17)


def apply_T(m: Mapping[str, int]) -> dict[str, int]:
    return {r: sum(c * int(m.get(x, 0)) for c, x in zip(_T[r], LETTERS)) for r in INVARIANTS22}


# invariants of an actual complex


def invariant_vector22(c: DoubleComplex) -> dict[str, int]:
    """The 22 invariants, computed from the complex by the cohomology engine."""
    if c.n != N:
        raise ValueError(f"the zigzag invariants are defined for n = 3, got n = {c.n}")
    v = {
        "h01_dbar": dolbeault(c, 0, 1),
        "h01_d": partial_cohom(c, 0, 1),
        "h01_BC": bott_chern(c, 0, 1),
        "h01_A": aeppli(c, 0, 1),
        "b1": betti(c, 1),
        "h02_dbar": dolbeault(c, 0, 2),
        "h02_d": partial_cohom(c, 0, 2),
        "b2": betti(c, 2),
        "h11_dbar": dolbeault(c, 1, 1),
        "h11_BC": bott_chern(c, 1, 1),
        "h11_A": aeppli(c, 1, 1),
        "h03_dbar": dolbeault(c, 0, 3),
        "h12_dbar": dolbeault(c, 1, 2),
        "h12_BC": bott_chern(c, 1, 2),
        "b3": betti(c, 3),
    }
    v.update({name: bigolin(c, *pqk) for name, pqk in BIGOLIN_ROWS.items()})
    return {name: v[name] for name in INVARIANTS22}


def restrict17(v22: Mapping[str, int]) -> dict[str, int]:
    return {name: v22[name] for name in INVARIANTS17}


@dataclass
class Inversion:
    """Result of ``U^{-1} v``: exact multiplicities and any realizability findings."""

    values: dict[str, Fraction]
    findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    @property
    def multiplicities(self) -> dict[str, int]:
        if not self.ok:
            raise ValueError("; ".join(self.findings))
        return {x: int(v) for x, v in self.values.items()}


def multiplicities_from_cohomology(v17: Mapping[str, int]) -> Inversion:
    missing = [name for name in INVARIANTS17 if name not in v17]
    if missing:
        raise KeyError(f"missing invariant(s) {missing}")
    values = {x: Fraction(sum(c * v17[name] for c, name in zip(_U_INV[x], INVARIANTS17))) for x in LETTERS}
    findings = []
    for x, val in values.items():
        if val.denominator != 1:
            findings.append(f"multiplicity of {x} is not an integer ({val})")
        elif val < 0:
            findings.append(f"multiplicity of {x} is negative ({val})")
    return Inversion(values, findings)


# dependent relations


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: int
    rhs: int
    kind: str = "="

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs if self.kind == "=" else self.lhs <= self.rhs

    def __str__(self) -> str:
        return f"[{'ok' if self.passed else 'FAIL'}] {self.name}: {self.lhs} {self.kind} {self.rhs}"


# Bigolin numbers left out of U, as combinations of the 17 kept invariants
_EXPRESSIONS = {
    "h2_12": {"h01_d": -1, "h01_A": -1, "h1_12": 1, "h02_d": 1, "h11_dbar": 1, "h12_dbar": -1, "h12_BC": 1},
    "h3_13": {"h01_dbar": 1, "h01_A": -1, "h02_dbar": -1, "h02_d": 1, "h03_dbar": 1, "h12_BC": 1},
    "h3_22": {"h01_d": 2, "b1": -1, "h02_d": -2, "b2": 1, "h11_dbar": -2, "h11_BC": 1, "h12_dbar": 2},
    "h3_23": {"h01_dbar": 1, "h01_d": 2, "h01_BC": -1, "b1": -1, "h02_dbar": -1, "h02_d": -2, "b2": 1,
              "h11_dbar": -2, "h03_dbar": 1, "h12_dbar": 2, "h4_23": 1},
}  # fmt: skip


def hodge_sums(v: Mapping[str, int]) -> dict[int, int]:
    """``h^k = sum of h^{p,q}_∂̄ over p+q = k``, using the conjugation and duality symmetries."""
    return {
        1: v["h01_dbar"] + v["h01_d"],
        2: v["h02_dbar"] + v["h11_dbar"] + v["h02_d"],
        3: 2 * v["h03_dbar"] + 2 * v["h12_dbar"],
    }


def consistency_relations(v22: Mapping[str, int]) -> list[Relation]:
    out = []
    for name, combo in _EXPRESSIONS.items():
        out.append(Relation(f"{name} from the other invariants", v22[name], sum(c * v22[k] for k, c in combo.items())))
    h = hodge_sums(v22)
    out.append(
        Relation(
            "b3 - h^3 = 2(b2 - h^2) + 2(h^1 - b1)",
            v22["b3"] - h[3],
            2 * v22["b2"] - 2 * h[2] + 2 * h[1] - 2 * v22["b1"],
        )
    )
    for k in (1, 2, 3):
        out.append(Relation(f"Frölicher b{k} <= h^{k}", v22[f"b{k}"], h[k], "<="))
    return out


def D_expression(v: Mapping[str, int]) -> int:
    """Multiplicity of D read off four invariants."""
    return -v["h01_d"] + v["h01_BC"] - v["b1"] + v["h1_12"]


# rank facts about the tables


@dataclass(frozen=True)
class RankFact:
    name: str
    shape: tuple[int, int]
    computed: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def __str__(self) -> str:
        return f"[{'ok' if self.passed else 'FAIL'}] {self.name} {self.shape[0]}x{self.shape[1]}: {self.computed} (expected {self.expected})"


def rank_facts() -> list[RankFact]:
    T = table_T()
    U = table_U()
    V = T.select(rows=[r for r in INVARIANTS22 if r not in BIGOLIN_ROWS])
    U1 = U.select(rows=[r for r in INVARIANTS17 if r != "h1_12"], cols=[x for x in LETTERS if x != "D"])
    U2 = U1.select(rows=[r for r in U1.rows if r not in ("h1_11", "h4_23")])
    W = T.select(rows=[r for r in INVARIANTS22 if r not in ("h01_d", "h11_dbar", "h12_dbar")])
    prod = U @ table_U_inv()
    identity = LabeledMatrix.identity(INVARIANTS17)
    facts = [
        RankFact("rank T", T.shape, T.rank(), 17),
        RankFact("rank V (T without Bigolin rows)", V.shape, V.rank(), 14),
        RankFact("rank U1", U1.shape, U1.rank(), 16),
        RankFact("rank U2", U2.shape, U2.rank(), 14),
        RankFact("kernel dimension of U2", U2.shape, len(U2.kernel_basis()), 2),
        RankFact("rank T without h01_d, h11_dbar, h12_dbar", W.shape, W.rank(), 15),
        RankFact("U U^-1 = I (mismatched entries)", prod.shape, _count_differences(prod, identity), 0),
    ]
    return facts


def _count_differences(a: LabeledMatrix, b: LabeledMatrix) -> int:
    return sum(x != y for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb))


__all__ = [
    "LETTERS", "INVARIANTS22", "INVARIANTS17", "BIGOLIN_ROWS", "REFERENCE_IIB", "ZigzagShape",
    "canonical_shapes", "shape", "conjugate_shape", "dual_shape", "orbit", "synthetic_complex",
    "contribution", "orbit_contribution", "table_T", "table_U", "table_U_inv", "apply_T",
    "invariant_vector22", "restrict17", "Inversion", "multiplicities_from_cohomology", "Relation",
    "consistency_relations", "hodge_sums", "D_expression", "RankFact", "rank_facts",
]  # fmt: skip
