"""G-crossed modular data: S-blocks on commuting sectors, twists, and the
scaling relations satisfied by zested S-blocks and twists.

Fixed-point isomorphisms are identities (skeletal convention), so every
block entry is a sum over fusion channels of double-braiding eigenvalues
weighted by pivotal dimensions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .catdata import SkeletalGxBFC, global_dim_e
from .scalars import ZERO, CycScalar, sqrt_rational
from .zesting import ZestingDatum, invertible_module, twist_of_invertible, zest

__all__ = [
    "Block",
    "GCrossedModularData",
    "TwistComparison",
    "hopf_trace",
    "NotSpherical",
    "SectorComparison",
    "ZestedComparison",
    "s_blocks",
    "twists",
    "zested_s_tilde",
    "zested_theta_tilde",
]

CONVENTIONS = ("hopf", "dual")
NORMALIZATIONS = ("e", "global")


class NotSpherical(ValueError):
    pass


@dataclass
class Block:
    rows: list[int]
    cols: list[int]
    matrix: list[list[CycScalar]]

    def entry(self, x: int, y: int) -> CycScalar:
        return self.matrix[self.rows.index(x)][self.cols.index(y)]


@dataclass
class GCrossedModularData:
    """S^{(g,h)} maps the (h, g^-1) sector space to the (g, h) one."""

    category: str
    group_names: list[str]
    labels: list[str]
    sectors: list[tuple[int, int]]
    blocks: dict[tuple[int, int], Block]
    twists: dict[int, CycScalar]
    convention: str = "hopf"
    normalization: str = "e"
    inverse: list[int] = field(default_factory=list)

    def index(self) -> list[tuple[tuple[int, int], int]]:
        """Basis of the full sector space: (sector, fixed label), lexicographic."""
        out = []
        for sec in sorted(self.sectors):
            out.extend((sec, x) for x in self.blocks[sec].rows)
        return out

    def full_matrix(self) -> tuple[list, list[list[CycScalar]]]:
        idx = self.index()
        pos = {key: i for i, key in enumerate(idx)}
        mat = [[ZERO] * len(idx) for _ in idx]
        for (g, h), blk in self.blocks.items():
            col_sector = (h, self.inverse[g])
            for i, x in enumerate(blk.rows):
                for j, y in enumerate(blk.cols):
                    mat[pos[((g, h), x)]][pos[(col_sector, y)]] = blk.matrix[i][j]
        return idx, mat

    def is_monomial(self) -> bool:
        _, mat = self.full_matrix()
        return all(sum(1 for v in row if not v.is_zero()) == 1 for row in mat)


def _dim(C: SkeletalGxBFC, a: int) -> CycScalar:
    return C.pivotal[a] * C.qdim[a]


def _total_dim(C: SkeletalGxBFC) -> CycScalar:
    total = ZERO
    for a in range(C.size):
        total = total + C.qdim[a] * C.qdim[a]
    return sqrt_rational(total.rational_value())


def _fixed(C: SkeletalGxBFC, g: int, h: int) -> list[int]:
    return [x for x in C.component(g) if C.act(x, h) == x]


def _require_spherical(C: SkeletalGxBFC):
    for a in range(C.size):
        if _dim(C, a) != _dim(C, C.dual[a]):
            raise NotSpherical(f"dim of {C.labels[a]} differs from its dual")


def hopf_trace(C: SkeletalGxBFC, x: int, y: int) -> CycScalar:
    """Trace of the double braiding on x (x) y, assuming x and y are fixed."""
    C.require_multiplicity_free()
    total = ZERO
    for c in C.fuse(x, y):
        total = total + _dim(C, c) * C.r(x, y, c) * C.r(y, x, c)
    return total


def s_blocks(C: SkeletalGxBFC, convention: str = "hopf", normalization: str = "e",
             with_twists: bool = True) -> GCrossedModularData:
    """All S^{(g,h)} for commuting (g, h).

    ``convention="hopf"`` traces c_{Y,X} c_{X,Y}; ``"dual"`` uses X* in
    place of X.  ``normalization`` divides by D_e or by the global dimension.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    _require_spherical(C)
    G = C.group
    D = global_dim_e(C) if normalization == "e" else _total_dim(C)
    inv_D = D.inv()
    sectors = [(g, h) for g, h in itertools.product(G, repeat=2) if G.m(g, h) == G.m(h, g)]
    blocks = {}
    for g, h in sectors:
        g_inv = int(G.inv[g])
        rows = _fixed(C, g, h)
        cols = _fixed(C, h, g_inv)
        mat = []
        for x in rows:
            xx = C.dual[x] if convention == "dual" else x
            mat.append([hopf_trace(C, xx, y) * inv_D for y in cols])
        blocks[(g, h)] = Block(rows, cols, mat)
    return GCrossedModularData(
        category=C.name, group_names=list(G.names), labels=list(C.labels), sectors=sectors,
        blocks=blocks, twists=twists(C) if with_twists else {}, convention=convention,
        normalization=normalization, inverse=[int(G.inv[g]) for g in G])


def twists(C: SkeletalGxBFC) -> dict[int, CycScalar]:
    """theta_x for every label fixed by its own grade."""
    _require_spherical(C)
    out = {}
    for x in range(C.size):
        if C.act(x, C.grade[x]) != x:
            continue
        out[x] = hopf_trace_self(C, x) / _dim(C, x)
    return out


def hopf_trace_self(C: SkeletalGxBFC, x: int) -> CycScalar:
    total = ZERO
    for c in C.fuse(x, x):
        total = total + _dim(C, c) * C.r(x, x, c)
    return total


# zested relations -------------------------------------------------------------


@dataclass
class SectorComparison:
    sector: tuple[int, int]
    status: str  # "agree", "differ", or "structurally-changed"
    predicted: Block | None
    direct: Block | None
    factor: CycScalar | None


@dataclass
class ZestedComparison:
    kind: str
    rows: list
    invariant: bool = False  # these tables are not equivalence invariants
    note: str = "fixed-point isomorphisms are identities; direct traces valid only in that gauge"

    @property
    def agree(self) -> bool:
        return all(r.status in ("agree", "structurally-changed") for r in self.rows)

    @property
    def compared(self) -> int:
        return sum(1 for r in self.rows if r.status != "structurally-changed")


def _lam_label(C: SkeletalGxBFC, D: ZestingDatum):
    _, labels = invertible_module(C)
    return lambda g, h: labels[D.lam(g, h)]


def zested_s_tilde(C: SkeletalGxBFC, D: ZestingDatum, Z: SkeletalGxBFC | None = None,
                   convention: str = "hopf", normalization: str = "e") -> ZestedComparison:
    """Predicted S^{(g,h)} * theta_{lambda(k^-1, k)}, k = h^-1 g, against the
    S-blocks computed directly in the zested category."""
    if Z is None:
        Z = zest(C, D)
    G = C.group
    lam = _lam_label(C, D)
    base = s_blocks(C, convention, normalization, with_twists=False)
    new = s_blocks(Z, convention, normalization, with_twists=False)
    rows = []
    for sec in sorted(base.sectors):
        g, h = sec
        k = G.m(int(G.inv[h]), g)
        factor = twist_of_invertible(C, lam(int(G.inv[k]), k))
        b, n = base.blocks[sec], new.blocks[sec]
        if b.rows != n.rows or b.cols != n.cols:
            rows.append(SectorComparison(sec, "structurally-changed", None, n, factor))
            continue
        pred = Block(b.rows, b.cols, [[v * factor for v in row] for row in b.matrix])
        status = "agree" if pred.matrix == n.matrix else "differ"
        rows.append(SectorComparison(sec, status, pred, n, factor))
    return ZestedComparison("S", rows)


@dataclass
class TwistComparison:
    label: int
    status: str
    predicted: CycScalar | None
    direct: CycScalar | None
    factor: CycScalar | None


def zested_theta_tilde(C: SkeletalGxBFC, D: ZestingDatum,
                       Z: SkeletalGxBFC | None = None) -> ZestedComparison:
    """Predicted theta_x * theta_{lambda(g^2, g^-2)} against zested twists."""
    if Z is None:
        Z = zest(C, D)
    G = C.group
    lam = _lam_label(C, D)
    base, new = twists(C), twists(Z)
    rows = []
    for x in sorted(set(base) | set(new)):
        g = C.grade[x]
        g2 = G.m(g, g)
        factor = twist_of_invertible(C, lam(g2, int(G.inv[g2])))
        if x not in base or x not in new:
            rows.append(TwistComparison(x, "structurally-changed", None, new.get(x), factor))
            continue
        pred = base[x] * factor
        rows.append(TwistComparison(x, "agree" if pred == new[x] else "differ", pred, new[x], factor))
    return ZestedComparison("theta", rows)

