"""Skeletal G-crossed braided fusion categories and their coherence checks.

Conventions (splitting trees, right action):

* ``F[a,b,c,d,e,f]``: the associator sends the splitting vector
  ``((a b)_e c)_d`` to ``sum_f F[..e,f] (a (b c)_f)_d``.
* ``R[a,b,c]``: the crossed braiding ``a (x) b -> b (x) a^h`` (``h`` the grade
  of ``b``) sends ``(a b)_c`` to ``R (b a^h)_c``.
* ``U[g,a,b,c]``: the functor ``T_g`` followed by its tensorator inverse sends
  ``(a b)_c`` to ``U (a^g b^g)_{c^g}``.
* ``eta[a,g,h]``: the compositor ``a^{gh} -> (a^g)^h`` as a scalar.

Tables are sparse: an admissible entry that is not stored equals 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .groupcoh import Cochain, FinGroup, cyclic_group, direct_product
from .scalars import ONE, ZERO, CycScalar, make_root, sqrt_rational

__all__ = [
    "SkeletalGxBFC",
    "CheckReport",
    "InvariantViolation",
    "UnsupportedMultiplicity",
    "InvalidParams",
    "check_pentagon",
    "check_action_coherence",
    "check_heptagons",
    "check_all",
    "global_dim_e",
    "spherical_check",
    "vec_g_omega",
    "pointed_braided",
    "tambara_yamagami",
    "builtin",
    "BUILTINS",
    "vect_q",
    "su33_pointed",
    "ty_default",
    "mat_inverse",
]


class InvariantViolation(ValueError):
    """A structural invariant of the category data fails."""


class UnsupportedMultiplicity(ValueError):
    """Symbol-level operation on data with a fusion multiplicity above one."""


class InvalidParams(ValueError):
    pass


def mat_inverse(mat: list[list[CycScalar]]) -> list[list[CycScalar]]:
    """Exact Gauss-Jordan inverse of a square matrix of scalars."""
    n = len(mat)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pinv = aug[col][col].inv()
        aug[col] = [v * pinv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass
class CheckReport:
    """Outcome of one verifier: failing index tuples are sorted."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    limit: int = 20

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, witness):
        if len(self.failures) < self.limit:
            self.failures.append(witness)

    def finish(self) -> CheckReport:
        self.failures.sort(key=lambda w: tuple(map(str, w)))
        return self

    def __bool__(self):
        return self.passed

    def __str__(self):
        verdict = "pass" if self.passed else f"FAIL ({len(self.failures)} witnesses, first {self.failures[0]})"
        return f"{self.name}: {verdict} [{self.checked} instances]"


class SkeletalGxBFC:
    """Skeletal data of a G-crossed braided fusion category."""

    def __init__(self, *, name: str, group: FinGroup, labels, grade, fusion, action,
                 F=None, R=None, U=None, eta=None, qdim=None, pivotal=None,
                 twists=None, unit: int = 0, dual=None, meta=None):
        self.name = name
        self.group = group
        self.labels = list(labels)
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise InvariantViolation("labels must be distinct")
        self.grade = [int(g) for g in grade]
        self.unit = unit
        self.N: dict[tuple[int, int, int], int] = {}
        for key, mult in (fusion.items() if isinstance(fusion, dict) else fusion):
            if mult:
                self.N[tuple(key)] = int(mult)
        self.products = [[[] for _ in range(n)] for _ in range(n)]
        for (a, b, c), mult in sorted(self.N.items()):
            self.products[a][b].append(c)
        self.action = np.asarray(action, dtype=np.int64)
        self.action.setflags(write=False)
        self.F = dict(F or {})
        self.R = dict(R or {})
        self.U = dict(U or {})
        self.eta = dict(eta or {})
        self.qdim = list(qdim) if qdim is not None else [ONE] * n
        self.pivotal = list(pivotal) if pivotal is not None else [ONE] * n
        self.twists = dict(twists or {})
        self.meta = dict(meta or {})
        if dual is None:
            dual = []
            for a in range(n):
                cands = [b for b in range(n) if self.N.get((a, b, unit), 0) == 1]
                if len(cands) != 1:
                    raise InvariantViolation(f"label {self.labels[a]} has no unique dual")
                dual.append(cands[0])
        self.dual = list(dual)
        self._finv_cache: dict = {}
        self.validate()

    # structure ----------------------------------------------------------

    def __repr__(self):
        return f"SkeletalGxBFC({self.name!r}, {len(self.labels)} labels, |G|={len(self.group)})"

    @property
    def size(self) -> int:
        return len(self.labels)

    def label_index(self, name: str) -> int:
        return self.labels.index(name)

    def validate(self):
        G, n = self.group, self.size
        if self.grade[self.unit] != G.e:
            raise InvariantViolation("unit must have trivial grade")
        if any(not 0 <= g < len(G) for g in self.grade):
            raise InvariantViolation("grade out of range")
        for (a, b, c) in self.N:
            if G.mul[self.grade[a], self.grade[b]] != self.grade[c]:
                raise InvariantViolation(
                    f"grading does not respect fusion on {self.labels[a]} x {self.labels[b]} -> {self.labels[c]}")
        for a in range(n):
            if self.products[self.unit][a] != [a] or self.products[a][self.unit] != [a]:
                raise InvariantViolation(f"unit does not act as identity on {self.labels[a]}")
        if set(self.grade) != set(range(len(G))):
            raise InvariantViolation("grading is not faithful")
        for a in range(n):
            d = self.dual[a]
            if self.dual[d] != a:
                raise InvariantViolation("dual is not an involution")
            if self.N.get((a, d, self.unit), 0) != 1:
                raise InvariantViolation(f"{self.labels[a]} x dual does not contain the unit once")
            if self.qdim[a] != self.qdim[d]:
                raise InvariantViolation("dual labels must share quantum dimensions")
            if self.is_invertible(a) and self.qdim[a] != ONE:
                raise InvariantViolation("invertible labels must have dimension 1")
        act = self.action
        if act.shape != (len(G), n):
            raise InvariantViolation("action table has wrong shape")
        if not (act[G.e] == np.arange(n)).all():
            raise InvariantViolation("identity must act trivially")
        for g in G:
            if sorted(act[g].tolist()) != list(range(n)):
                raise InvariantViolation("action is not a permutation")
            for h in G:
                if not (act[h][act[g]] == act[G.mul[g, h]]).all():
                    raise InvariantViolation("action is not a right action")
            for a in range(n):
                if self.grade[act[g, a]] != G.conj(self.grade[a], g):
                    raise InvariantViolation("action does not conjugate grades")
        for (a, b, c), mult in self.N.items():
            for g in G:
                if self.N.get((act[g, a], act[g, b], act[g, c]), 0) != mult:
                    raise InvariantViolation("action does not preserve fusion")

    def is_invertible(self, a: int) -> bool:
        return all(len(self.products[a][b]) == 1 and self.N[(a, b, self.products[a][b][0])] == 1
                   for b in range(self.size))

    @property
    def multiplicity_free(self) -> bool:
        return all(v <= 1 for v in self.N.values())

    def require_multiplicity_free(self):
        if not self.multiplicity_free:
            raise UnsupportedMultiplicity("fusion multiplicities above one are not supported")

    def fuse(self, a: int, b: int) -> list[int]:
        return self.products[a][b]

    def admissible(self, a: int, b: int, c: int) -> bool:
        return (a, b, c) in self.N

    def act(self, a: int, g: int) -> int:
        return int(self.action[g, a])

    def component(self, g: int) -> list[int]:
        return [a for a in range(self.size) if self.grade[a] == g]

    def invertibles(self, g: int | None = None) -> list[int]:
        return [a for a in range(self.size) if self.is_invertible(a) and (g is None or self.grade[a] == g)]

    # symbols ------------------------------------------------------------

    def f(self, a, b, c, d, e, f_) -> CycScalar:
        return self.F.get((a, b, c, d, e, f_), ONE)

    def r(self, a, b, c) -> CycScalar:
        return self.R.get((a, b, c), ONE)

    def u(self, g, a, b, c) -> CycScalar:
        return self.U.get((g, a, b, c), ONE)

    def et(self, a, g, h) -> CycScalar:
        return self.eta.get((a, g, h), ONE)

    def f_rows(self, a, b, c, d) -> list[int]:
        return [e for e in self.fuse(a, b) if self.admissible(e, c, d)]

    def f_cols(self, a, b, c, d) -> list[int]:
        return [f_ for f_ in self.fuse(b, c) if self.admissible(a, f_, d)]

    def f_inv(self, a, b, c, d, f_, e) -> CycScalar:
        """Entry [f, e] of the inverse associator matrix."""
        key = (a, b, c, d)
        if key not in self._finv_cache:
            rows, cols = self.f_rows(*key), self.f_cols(*key)
            if len(rows) != len(cols):
                raise InvariantViolation("associator block is not square")
            if len(rows) == 1:
                inv = [[self.f(a, b, c, d, rows[0], cols[0]).inv()]]
            else:
                inv = mat_inverse([[self.f(a, b, c, d, e_, g) for g in cols] for e_ in rows])
            self._finv_cache[key] = {(cols[i], rows[j]): inv[i][j]
                                     for i in range(len(cols)) for j in range(len(rows))}
        return self._finv_cache[key][(f_, e)]

    def trees3(self):
        """All admissible (a, b, c, d, e, f) for associator entries."""
        n = self.size
        for a, b, c in itertools.product(range(n), repeat=3):
            for e in self.fuse(a, b):
                for d in self.fuse(e, c):
                    for f_ in self.f_cols(a, b, c, d):
                        yield a, b, c, d, e, f_

    def replace(self, **changes) -> SkeletalGxBFC:
        kw = dict(name=self.name, group=self.group, labels=self.labels, grade=self.grade,
                  fusion=self.N, action=self.action, F=self.F, R=self.R, U=self.U, eta=self.eta,
                  qdim=self.qdim, pivotal=self.pivotal, twists=self.twists, unit=self.unit,
                  dual=self.dual, meta=self.meta)
        if "fusion" in changes or "unit" in changes:
            kw["dual"] = None
        kw.update(changes)
        return SkeletalGxBFC(**kw)

    def relabel(self, perm) -> SkeletalGxBFC:
        """Transport all data along the label permutation ``a -> perm[a]``."""
        p = list(perm)
        n = self.size
        inv = [0] * n
        for a, b in enumerate(p):
            inv[b] = a
        labels = [self.labels[inv[b]] for b in range(n)]
        grade = [self.grade[inv[b]] for b in range(n)]
        if any(self.grade[a] != grade[p[a]] for a in range(n)):
            raise InvariantViolation("relabeling must preserve grades")
        action = [[p[self.action[g, inv[b]]] for b in range(n)] for g in self.group]
        return SkeletalGxBFC(
            name=self.name, group=self.group, labels=labels, grade=grade,
            fusion={(p[a], p[b], p[c]): m for (a, b, c), m in self.N.items()},
            action=action,
            F={tuple(p[x] for x in k): v for k, v in self.F.items()},
            R={tuple(p[x] for x in k): v for k, v in self.R.items()},
            U={(k[0],) + tuple(p[x] for x in k[1:]): v for k, v in self.U.items()},
            eta={(p[k[0]], k[1], k[2]): v for k, v in self.eta.items()},
            qdim=[self.qdim[inv[b]] for b in range(n)],
            pivotal=[self.pivotal[inv[b]] for b in range(n)],
            twists={p[a]: v for a, v in self.twists.items()},
            unit=p[self.unit], meta=self.meta)

    def same_symbols(self, other: SkeletalGxBFC) -> bool:
        """Symbol-for-symbol equality (defaults of 1 made explicit)."""
        if (self.labels != other.labels or self.grade != other.grade or self.N != other.N
                or not np.array_equal(self.action, other.action) or self.group != other.group):
            return False
        G = self.group
        for t in self.trees3():
            if self.f(*t) != other.f(*t):
                return False
        for (a, b, c) in self.N:
            if self.r(a, b, c) != other.r(a, b, c):
                return False
            for g in G:
                if self.u(g, a, b, c) != other.u(g, a, b, c):
                    return False
        for a in range(self.size):
            for g in G:
                for h in G:
                    if self.et(a, g, h) != other.et(a, g, h):
                        return False
        return self.qdim == other.qdim


# verifiers ------------------------------------------------------------------


def check_pentagon(C: SkeletalGxBFC) -> CheckReport:
    C.require_multiplicity_free()
    rep = CheckReport("pentagon")
    n = C.size
    for a, b, c, d in itertools.product(range(n), repeat=4):
        for f_ in C.fuse(a, b):
            for g in C.fuse(f_, c):
                for e in C.fuse(g, d):
                    for l in C.fuse(c, d):
                        if not C.admissible(f_, l, e):
                            continue
                        for k in C.fuse(b, l):
                            if not C.admissible(a, k, e):
                                continue
                            rep.checked += 1
                            lhs = C.f(f_, c, d, e, g, l) * C.f(a, b, l, e, f_, k)
                            rhs = ZERO
                            for h in C.fuse(b, c):
                                if C.admissible(a, h, g) and C.admissible(h, d, k):
                                    rhs = rhs + (C.f(a, b, c, g, f_, h) * C.f(a, h, d, e, g, k)
                                                 * C.f(b, c, d, k, h, l))
                            if lhs != rhs:
                                rep.fail((a, b, c, d, e, f_, g, k, l))
    return rep.finish()


def check_action_coherence(C: SkeletalGxBFC) -> CheckReport:
    """Tensorator/associator, compositor cocycle, and compositor monoidality."""
    C.require_multiplicity_free()
    rep = CheckReport("action-coherence")
    G = C.group
    act = C.act
    for g in G:
        for x, y, z, d, e, f_ in C.trees3():
            rep.checked += 1
            lhs = C.u(g, x, y, e) * C.u(g, e, z, d) * C.f(
                act(x, g), act(y, g), act(z, g), act(d, g), act(e, g), act(f_, g))
            rhs = C.f(x, y, z, d, e, f_) * C.u(g, y, z, f_) * C.u(g, x, f_, d)
            if lhs != rhs:
                rep.fail(("tensorator", g, x, y, z, d, e, f_))
    for x in range(C.size):
        for k, h, g in itertools.product(G, repeat=3):
            rep.checked += 1
            kh, hg = G.m(k, h), G.m(h, g)
            if C.et(x, k, h) * C.et(x, kh, g) != C.et(act(x, k), h, g) * C.et(x, k, hg):
                rep.fail(("compositor", x, k, h, g))
    for (x, y, d) in sorted(C.N):
        for g, h in itertools.product(G, repeat=2):
            rep.checked += 1
            lhs = C.et(x, g, h) * C.et(y, g, h) * C.u(G.m(g, h), x, y, d)
            rhs = C.et(d, g, h) * C.u(g, x, y, d) * C.u(h, act(x, g), act(y, g), act(d, g))
            if lhs != rhs:
                rep.fail(("monoidal-compositor", x, y, d, g, h))
    return rep.finish()


def check_heptagons(C: SkeletalGxBFC) -> CheckReport:
    """Braiding/action compatibility and the two crossed hexagons."""
    C.require_multiplicity_free()
    rep = CheckReport("heptagons")
    G = C.group
    act, gr = C.act, C.grade
    n = C.size
    for (x, y, d) in sorted(C.N):
        h = gr[y]
        for g in G:
            rep.checked += 1
            lhs = C.r(x, y, d) * C.u(g, y, act(x, h), d) * C.et(x, g, G.conj(h, g))
            rhs = C.u(g, x, y, d) * C.r(act(x, g), act(y, g), act(d, g)) * C.et(x, h, g)
            if lhs != rhs:
                rep.fail(("action", x, y, d, g))
    for x, y, z in itertools.product(range(n), repeat=3):
        k = gr[z]
        xk, yk = act(x, k), act(y, k)
        for e in C.fuse(x, y):
            for d in C.fuse(e, z):
                # first hexagon: braiding a product past z
                for e2 in C.fuse(xk, yk):
                    if not C.admissible(z, e2, d):
                        continue
                    rep.checked += 1
                    lhs = C.r(e, z, d) * C.u(k, x, y, e) if e2 == act(e, k) else ZERO
                    if lhs != hexagon1_rhs(C, x, y, z, d, e, e2):
                        rep.fail(("hexagon-1", x, y, z, d, e, e2))
                # second hexagon: braiding x past a product
                xhk = act(x, G.m(gr[y], k))
                for l in C.fuse(z, xhk):
                    if not C.admissible(y, l, d):
                        continue
                    rep.checked += 1
                    lhs = hexagon2_lhs(C, x, y, z, d, e, l) * C.et(x, gr[y], k)
                    if lhs != hexagon2_rhs(C, x, y, z, d, e, l):
                        rep.fail(("hexagon-2", x, y, z, d, e, l))
    return rep.finish()


def hexagon1_rhs(C: SkeletalGxBFC, x, y, z, d, e, e2) -> CycScalar:
    """Coefficient of (z (x^k y^k)_{e2})_d after braiding x and y past z in turn."""
    k = C.grade[z]
    xk, yk = C.act(x, k), C.act(y, k)
    out = ZERO
    for f_ in C.f_cols(x, y, z, d):
        for g in C.f_rows(x, z, yk, d):
            if not C.admissible(z, xk, g):
                continue
            out = out + (C.f(x, y, z, d, e, f_) * C.r(y, z, f_) * C.f_inv(x, z, yk, d, f_, g)
                         * C.r(x, z, g) * C.f(z, xk, yk, d, g, e2))
    return out


def hexagon2_lhs(C: SkeletalGxBFC, x, y, z, d, e, l) -> CycScalar:
    """Braiding x past (y z) at once, without the compositor factor."""
    xhk = C.act(x, C.group.m(C.grade[y], C.grade[z]))
    out = ZERO
    for f_ in C.f_cols(x, y, z, d):
        if C.admissible(f_, xhk, d):
            out = out + C.f(x, y, z, d, e, f_) * C.r(x, f_, d) * C.f(y, z, xhk, d, f_, l)
    return out


def hexagon2_rhs(C: SkeletalGxBFC, x, y, z, d, e, l) -> CycScalar:
    """Braiding x past y, then past z."""
    xh = C.act(x, C.grade[y])
    if C.admissible(y, xh, e) and C.admissible(xh, z, l):
        return C.r(x, y, e) * C.f(y, xh, z, d, e, l) * C.r(xh, z, l)
    return ZERO


def check_all(C: SkeletalGxBFC) -> list[CheckReport]:
    return [check_pentagon(C), check_action_coherence(C), check_heptagons(C)]


def global_dim_e(C: SkeletalGxBFC) -> CycScalar:
    """Positive square root of the sum of squared dimensions over the trivial component."""
    total = ZERO
    for a in C.component(C.group.e):
        total = total + C.qdim[a] * C.qdim[a]
    value = total.rational_value()
    if value is None:
        raise InvariantViolation("global dimension squared is not rational")
    return sqrt_rational(value)


def spherical_check(C: SkeletalGxBFC) -> bool:
    return all(C.qdim[a] == C.qdim[C.dual[a]] for a in range(C.size))


# builtins -------------------------------------------------------------------


def vec_g_omega(G: FinGroup, omega: Cochain | None = None, name: str | None = None) -> SkeletalGxBFC:
    """Vec_G^omega with conjugation action, identity crossed braiding.

    ``omega`` is a scalar 3-cocycle; the tensorator and compositor are the
    standard ones making the braiding coherent.
    """
    n = len(G)
    if omega is not None:
        from .groupcoh import is_cocycle
        ok, witness = is_cocycle(omega)
        if not ok:
            raise InvalidParams(f"omega is not a 3-cocycle (fails at {witness})")

    def w(a, b, c):
        return omega.scalar(a, b, c) if omega is not None else ONE

    F, U, eta = {}, {}, {}
    for a, b, c in itertools.product(range(n), repeat=3):
        v = w(a, b, c)
        if v != ONE:
            F[(a, b, c, G.m(a, b, c), G.m(a, b), G.m(b, c))] = v
    cj = G.conj
    if omega is not None:
        for g, h, k in itertools.product(range(n), repeat=3):
            v = w(h, k, g) * w(g, cj(h, g), cj(k, g)) / w(h, g, cj(k, g))
            if v != ONE:
                U[(g, h, k, G.m(h, k))] = v
        for k, g, h in itertools.product(range(n), repeat=3):
            v = w(g, cj(k, g), h) / (w(g, h, cj(k, G.m(g, h))) * w(k, g, h))
            if v != ONE:
                eta[(k, g, h)] = v
    action = [[cj(x, g) for x in range(n)] for g in range(n)]
    return SkeletalGxBFC(
        name=name or "vec_g_omega", group=G, labels=list(G.names), grade=list(range(n)),
        fusion={(a, b, G.m(a, b)): 1 for a in range(n) for b in range(n)},
        action=action, F=F, U=U, eta=eta, unit=G.e)


def pointed_braided(A: FinGroup, braid_exp, M: int, grading=None, G: FinGroup | None = None,
                    name: str | None = None) -> SkeletalGxBFC:
    """Pointed category Vec_A with trivial associator, trivial action, and
    braiding ``R[a,b] = exp(2 pi i braid_exp(a, b) / M)``.

    The grading defaults to A itself; otherwise ``grading`` maps each element
    of A to an element of ``G`` and must be a surjective homomorphism.  The
    braiding must be a bicharacter for the hexagons to hold.
    """
    n = len(A)
    if grading is None:
        G, grade = A, list(range(n))
    else:
        if G is None:
            raise InvalidParams("grading group required")
        grade = [grading(a) for a in range(n)]
    R = {}
    for a, b in itertools.product(range(n), repeat=2):
        k = braid_exp(a, b) % M
        if k:
            R[(a, b, A.m(a, b))] = make_root(k, M)
    return SkeletalGxBFC(
        name=name or "pointed_braided", group=G, labels=list(A.names), grade=grade,
        fusion={(a, b, A.m(a, b)): 1 for a in range(n) for b in range(n)},
        action=[list(range(n)) for _ in G], R=R, unit=A.e)


def tambara_yamagami(A: FinGroup, chi_exp, q_exp, M: int, tau_sign: int = 1,
                     alpha_sign: int = 1, name: str | None = None) -> SkeletalGxBFC:
    """TY(A, chi, tau) as a Z/2-crossed category with the inversion action.

    ``chi(a,b) = zeta_M^chi_exp(a,b)``, ``q(a) = zeta_M^q_exp(a)``.  The pair
    must satisfy chi(a,b) = q(a) q(b) / q(ab); alpha is the square root of
    tau * sum q selected by ``alpha_sign``.
    """
    n = len(A)
    if not A.is_abelian:
        raise InvalidParams("A must be abelian")
    chi = {(a, b): make_root(chi_exp(a, b), M) for a in range(n) for b in range(n)}
    q = [make_root(q_exp(a), M) for a in range(n)]
    for a, b in itertools.product(range(n), repeat=2):
        if chi[(a, b)] != chi[(b, a)]:
            raise InvalidParams("chi must be symmetric")
        if chi[(a, A.m(b, b))] != chi[(a, b)] * chi[(a, b)]:
            raise InvalidParams("chi must be a bicharacter")
        if chi[(a, b)] != q[a] * q[b] / q[A.m(a, b)]:
            raise InvalidParams("chi is not the bicharacter associated with q")
    for a in range(n):
        if a != A.e and all(chi[(a, b)] == ONE for b in range(n)):
            raise InvalidParams("chi is degenerate")
    if tau_sign not in (1, -1) or alpha_sign not in (1, -1):
        raise InvalidParams("signs must be +1 or -1")
    tau = sqrt_rational(Fraction(1, n)) * tau_sign
    sum_q = ZERO
    for v in q:
        sum_q = sum_q + v
    alpha = _sqrt_unit(tau * sum_q) * alpha_sign
    Z2 = cyclic_group(2)
    m = n
    labels = list(A.names) + ["m"]
    grade = [0] * n + [1]
    fusion = {(a, b, A.m(a, b)): 1 for a in range(n) for b in range(n)}
    for a in range(n):
        fusion[(a, m, m)] = 1
        fusion[(m, a, m)] = 1
        fusion[(m, m, a)] = 1
    F, R = {}, {}
    for a, b in itertools.product(range(n), repeat=2):
        # associator in the (xy)z -> x(yz) direction: the usual TY entries inverted
        F[(a, m, b, m, m, m)] = chi[(a, b)].inv()
        F[(m, a, m, b, m, m)] = chi[(a, b)].inv()
        F[(m, m, m, m, a, b)] = tau * chi[(a, b)]
        R[(a, b, A.m(a, b))] = chi[(a, b)]
    for a in range(n):
        R[(a, m, m)] = q[a]
        R[(m, a, m)] = q[a]
        R[(m, m, a)] = alpha * q[a].inv()
    inv_perm = [int(A.inv[a]) for a in range(n)] + [m]
    d_m = sqrt_rational(n)
    return SkeletalGxBFC(
        name=name or "tambara_yamagami", group=Z2, labels=labels, grade=grade, fusion=fusion,
        action=[list(range(n + 1)), inv_perm], F=F, R=R, unit=A.e,
        qdim=[ONE] * n + [d_m],
        meta={"alpha": alpha.to_text(), "tau_sign": tau_sign})


def _sqrt_unit(x: CycScalar) -> CycScalar:
    """A square root of a root of unity."""
    from .scalars import root_exponent
    found = root_exponent(x)
    if found is None:
        raise InvalidParams("tau * sum q must be a root of unity")
    k, order = found
    return make_root(k, 2 * order)


def vect_q(n: int, k: int = 1) -> SkeletalGxBFC:
    """Vect_{Z/n}^q graded by itself, trivial action, q(a) = zeta_n^(k a^2)."""
    A = cyclic_group(n)
    return pointed_braided(A, lambda a, b: k * a * b, n, name=f"vect_q(Z{n},{k})")


def su33_pointed() -> SkeletalGxBFC:
    """Pointed stand-in for SU(3)_3 as a Z/3-crossed braided category.

    Labels ``(x,i)`` in Z/3 x Z/3 are graded by ``i``; the invertibles
    ``(x,0)`` of the trivial component form a Tannakian Z/3, and
    ``R[(x,i),(y,j)] = zeta_3^(x j)`` detects the grading.
    """
    Z3 = cyclic_group(3)
    A = direct_product(Z3, Z3)
    return pointed_braided(A, lambda a, b: A.coords(a)[0] * A.coords(b)[1], 3,
                           grading=lambda a: A.coords(a)[1], G=Z3, name="su33_pointed")


def ty_default(A: FinGroup, tau_sign: int = 1, alpha_sign: int = 1) -> SkeletalGxBFC:
    """TY(A) with a standard nondegenerate quadratic form.

    Odd cyclic A: q(a) = zeta_n^(-a^2/2); even cyclic: q(a) = zeta_2n^(a^2);
    products of cyclic groups: the orthogonal sum of those forms.
    """
    if A.factors is None:
        raise InvalidParams("TY defaults need a product of cyclic groups")
    M = 1
    for n in A.factors:
        M = math.lcm(M, n if n % 2 else 2 * n)

    def q_exp(a):
        total = 0
        for x, n in zip(A.coords(a), A.factors):
            if n % 2:
                total += (M // n) * (-x * x * pow(2, -1, n))
            else:
                total += (M // (2 * n)) * x * x
        return total

    def chi_exp(a, b):
        return q_exp(a) + q_exp(b) - q_exp(A.m(a, b))

    name = "tambara_yamagami(" + "x".join(f"Z{n}" for n in A.factors) + ")"
    return tambara_yamagami(A, chi_exp, q_exp, M, tau_sign, alpha_sign, name=name)


BUILTINS = ("vec_g_omega", "vect_q", "pointed_braided", "tambara_yamagami", "su33_pointed")


def builtin(name: str, group: str | None = None, b: int = 0, k: int = 1,
            tau_sign: int = 1, alpha_sign: int = 1) -> SkeletalGxBFC:
    """Build a named example from string-friendly parameters.

    ``vec_g_omega``: omega = xi_b on a cyclic group, or the sign pullback of
    xi_b on a group with a sign map; ``vect_q``/``pointed_braided``: cyclic
    Z/n with q(a) = zeta_n^(k a^2); ``tambara_yamagami``: ``ty_default``.
    """
    from .groupcoh import cyclic_xi, group_from_name, pullback, sign_hom

    if name == "su33_pointed":
        return su33_pointed()
    G = group_from_name(group or "Z3")
    if name == "vec_g_omega":
        cyclic = G.factors == (len(G),)
        omega = None
        if cyclic and b % len(G):
            omega = cyclic_xi(G, b)
        elif not cyclic and b % 2:
            if not all(ch.isdigit() for n in G.names for ch in n):
                raise InvalidParams("omega_b needs a cyclic group or a permutation group")
            omega = pullback(cyclic_xi(cyclic_group(2), 1), sign_hom(G), G)
        return vec_g_omega(G, omega, name=f"vec_g_omega({group or 'Z3'},{b})")
    if name in ("vect_q", "pointed_braided"):
        if G.factors != (len(G),):
            raise InvalidParams("vect_q needs a cyclic group")
        return vect_q(len(G), k)
    if name == "tambara_yamagami":
        return ty_default(G, tau_sign, alpha_sign)
    raise InvalidParams(f"unknown builtin {name!r}")
