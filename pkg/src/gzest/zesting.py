"""Zesting data, the lifting obstruction, and the zested category.

Symbols of the zested category are obtained by pushing splitting trees of the
base category through the defining morphisms (associators, crossed
braidings, the scalar ``nu`` on pairs of invertible legs) and reading off
coefficients.  Tensorators and compositors of the zested action are then the
unique solutions of the two crossed hexagons, and the result is verified.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .catdata import (
    CheckReport,
    InvariantViolation,
    SkeletalGxBFC,
    check_heptagons,
    hexagon1_rhs,
    hexagon2_lhs,
    hexagon2_rhs,
)
from .groupcoh import (
    Cochain,
    FinGroup,
    GModule,
    NoSolution,
    coboundary_solve,
    cyclic_cohomology,
    cyclic_xi,
    is_cocycle,
    roots_module,
)
from .scalars import ONE, ZERO, CycScalar, make_root, root_exponent

__all__ = [
    "ZestingDatum",
    "ObstructionClass",
    "Promotion",
    "DatumInvalid",
    "LambdaNotInvertible",
    "LambdaNotCocycle",
    "NonCyclicGrading",
    "NotTannakian",
    "NonAbelianGroup",
    "invertible_module",
    "verify_datum",
    "pw_obstruction",
    "zest",
    "enumerate_cyclic",
    "braided_promotions",
    "check_trivialization",
    "trivial_datum",
    "twist_of_invertible",
    "TreeEngine",
    "ZETA9",
]

# the ninth root of unity used in the braided-promotion table
ZETA9 = make_root(-1, 9)


class DatumInvalid(ValueError):
    pass


class LambdaNotInvertible(DatumInvalid):
    pass


class LambdaNotCocycle(DatumInvalid):
    pass


class NonCyclicGrading(ValueError):
    pass


class NotTannakian(ValueError):
    pass


class NonAbelianGroup(ValueError):
    pass


# invertible objects of the trivial component ---------------------------------


def invertible_module(C: SkeletalGxBFC) -> tuple[GModule, list[int]]:
    """Inv(C_e) as a module over the grading group, plus element -> label map.

    Elements are ordered by mixed-radix coordinates of a cyclic decomposition,
    so cohomology of the module can be computed on lattices.
    """
    found = C.invertibles(C.group.e)
    gens, orders = _cyclic_decomposition(C, found)
    labels = []
    for coords in itertools.product(*(range(n) for n in orders)):
        x = C.unit
        for g, k in zip(gens, coords):
            for _ in range(k):
                x = C.fuse(x, g)[0]
        labels.append(x)
    index = {a: i for i, a in enumerate(labels)}
    table = [[index[C.fuse(a, b)[0]] for b in labels] for a in labels]
    base = FinGroup(table, names=[C.labels[a] for a in labels], identity=index[C.unit],
                    factors=orders)
    act = [[index[C.act(a, g)] for a in labels] for g in C.group]
    return GModule(base, C.group, act), labels


def _label_order(C, a):
    x, k = a, 1
    while x != C.unit:
        x = C.fuse(x, a)[0]
        k += 1
    return k


def _cyclic_decomposition(C, elems):
    """Generators and orders with elems = product of the cyclic subgroups."""
    n = len(elems)
    if n == 1:
        return [], ()
    ordered = sorted(elems, key=lambda a: (-_label_order(C, a), a))
    for r in range(1, n.bit_length() + 1):
        for gens in itertools.combinations(ordered, r):
            orders = tuple(_label_order(C, g) for g in gens)
            if math.prod(orders) != n:
                continue
            seen = set()
            for coords in itertools.product(*(range(k) for k in orders)):
                x = C.unit
                for g, k in zip(gens, coords):
                    for _ in range(k):
                        x = C.fuse(x, g)[0]
                seen.add(x)
            if len(seen) == n:
                return list(gens), orders
    raise InvariantViolation("invertibles do not form an abelian group")


@dataclass(frozen=True, eq=False)
class ZestingDatum:
    """A pair (lambda, nu), optionally with braided-promotion data t.

    ``lam`` takes values in ``invertible_module(C)`` element indices; ``nu`` and
    ``t`` are root-of-unity cochains.  ``tag`` records enumeration indices.
    """

    lam: Cochain
    nu: Cochain
    t: Cochain | None = None
    tag: tuple = ()

    @property
    def lambda_normalized(self) -> bool:
        return self.lam.normalized

    @property
    def nu_normalized(self) -> bool:
        G = self.nu.group
        return all(self.nu(a, G.e, b) == 0 for a in G for b in G)

    def __repr__(self):
        return f"ZestingDatum(tag={self.tag})"


@dataclass(frozen=True, eq=False)
class ObstructionClass:
    """O = LHS/RHS of the zesting condition for a candidate nu.

    When ``trivializer`` beta is present, d(beta) = O and ``nu / beta``
    satisfies the condition.
    """

    cocycle: Cochain
    trivializer: Cochain | None
    nu: Cochain | None = None

    @property
    def vanishes(self) -> bool:
        return self.trivializer is not None

    @property
    def repaired_nu(self) -> Cochain | None:
        if self.trivializer is None or self.nu is None:
            return None
        return multiply_nu(self.nu, self.trivializer.inverse())


def trivial_datum(C: SkeletalGxBFC, nu: Cochain | None = None) -> ZestingDatum:
    mod, _ = invertible_module(C)
    lam = Cochain.constant(mod, 2)
    if nu is None:
        nu = Cochain.constant(roots_module(C.group, 1), 3)
    return ZestingDatum(lam, nu, tag=(mod.base.e, 0))


def twist_of_invertible(C: SkeletalGxBFC, a: int) -> CycScalar:
    """theta of an invertible label of the trivial component: R[a,a]."""
    return C.r(a, a, C.fuse(a, a)[0])


# splitting-tree calculus -----------------------------------------------------


def _charge(t):
    return t if isinstance(t, int) else t[0]


def _nleaves(t):
    return 1 if isinstance(t, int) else _nleaves(t[1]) + _nleaves(t[2])


def _shape_size(s):
    return 1 if s is None else _shape_size(s[0]) + _shape_size(s[1])


def _comb(n):
    """Left comb shape on n leaves."""
    s = None
    for _ in range(n - 1):
        s = (s, None)
    return s


def _add(acc: dict, key, value):
    if value.is_zero():
        return
    cur = acc.get(key)
    acc[key] = value if cur is None else cur + value


class TreeEngine:
    """Linear maps on splitting trees of a multiplicity-free category."""

    def __init__(self, C: SkeletalGxBFC):
        C.require_multiplicity_free()
        self.C = C
        self._shape_cache: dict = {}

    # primitives on a subtree ------------------------------------------

    def assoc(self, t):
        d, (e, A, B), Cc = t
        C = self.C
        a, b, c = _charge(A), _charge(B), _charge(Cc)
        return {(d, A, (f, B, Cc)): C.f(a, b, c, d, e, f) for f in C.f_cols(a, b, c, d)}

    def assoc_inv(self, t):
        d, A, (f, B, Cc) = t
        C = self.C
        a, b, c = _charge(A), _charge(B), _charge(Cc)
        return {(d, (e, A, B), Cc): C.f_inv(a, b, c, d, f, e) for e in C.f_rows(a, b, c, d)}

    def act_tree(self, t, h):
        """Image of a splitting tree under T_h (tensorator factors included)."""
        C = self.C
        if isinstance(t, int):
            return ONE, C.act(t, h)
        d, A, B = t
        ca, ta = self.act_tree(A, h)
        cb, tb = self.act_tree(B, h)
        return ca * cb * C.u(h, _charge(A), _charge(B), d), (C.act(d, h), ta, tb)

    def braid(self, t):
        d, A, B = t
        C = self.C
        h = C.grade[_charge(B)]
        coef, Ah = self.act_tree(A, h)
        return {(d, B, Ah): C.r(_charge(A), _charge(B), d) * coef}

    # application ------------------------------------------------------

    @staticmethod
    def at(t, path, fn) -> dict:
        if not path:
            return fn(t)
        d, A, B = t
        if path[0] == 0:
            return {(d, sub, B): c for sub, c in TreeEngine.at(A, path[1:], fn).items()}
        return {(d, A, sub): c for sub, c in TreeEngine.at(B, path[1:], fn).items()}

    def apply(self, vec: dict, path, fn) -> dict:
        out: dict = {}
        for t, c in vec.items():
            for t2, c2 in self.at(t, path, fn).items():
                _add(out, t2, c * c2)
        return out

    def scale(self, vec: dict, fn) -> dict:
        """Multiply each basis tree by fn(tree) (a scalar) and optionally relabel."""
        out: dict = {}
        for t, c in vec.items():
            c2, t2 = fn(t)
            _add(out, t2, c * c2)
        return out

    # rebracketing -----------------------------------------------------

    def to_shape(self, vec: dict, shape) -> dict:
        out: dict = {}
        for t, c in vec.items():
            for t2, c2 in self._tree_to_shape(t, shape).items():
                _add(out, t2, c * c2)
        return out

    def _tree_to_shape(self, t, s) -> dict:
        key = (t, s)
        hit = self._shape_cache.get(key)
        if hit is not None:
            return hit
        if s is None:
            if not isinstance(t, int):
                raise ValueError("shape has fewer leaves than tree")
            res = {t: ONE}
        else:
            if isinstance(t, int):
                raise ValueError("shape has more leaves than tree")
            d, A, B = t
            n_left, m = _shape_size(s[0]), _nleaves(A)
            res = {}
            if m > n_left:
                for A2, c in self._tree_to_shape(A, (_comb(m - 1), None)).items():
                    for t3, c3 in self.assoc((d, A2, B)).items():
                        for t4, c4 in self._tree_to_shape(t3, s).items():
                            _add(res, t4, c * c3 * c4)
            elif m < n_left:
                k = _nleaves(B)
                for B2, c in self._tree_to_shape(B, (None, _comb(k - 1))).items():
                    for t3, c3 in self.assoc_inv((d, A, B2)).items():
                        for t4, c4 in self._tree_to_shape(t3, s).items():
                            _add(res, t4, c * c3 * c4)
            else:
                left = self._tree_to_shape(A, s[0])
                right = self._tree_to_shape(B, s[1])
                for A2, ca in left.items():
                    for B2, cb in right.items():
                        _add(res, (d, A2, B2), ca * cb)
        self._shape_cache[key] = res
        return res


# shapes used below
_S_XY_LZ_L = (((None, None), (None, None)), None)      # ((x y)(l z)) l'
_S_XYZ_LL = (((None, None), None), (None, None))       # ((x y) z)(l l')
_S_TARGET = ((None, ((None, None), None)), None)       # (x ((y z) l)) l'
_S_R_MID = ((None, ((None, None), None)), None)        # (y ((x l) lbar)) l'


# zesting condition -----------------------------------------------------------


class _Datum:
    """Label-level view of a datum on a category."""

    def __init__(self, C: SkeletalGxBFC, D: ZestingDatum):
        mod, labels = invertible_module(C)
        if D.lam.module.base != mod.base or len(D.lam.module.base) != len(labels):
            raise LambdaNotInvertible("lambda must take values in the invertibles of the trivial component")
        if D.lam.group != C.group:
            raise DatumInvalid("lambda lives on a different group")
        self.C, self.D = C, D
        self.labels = labels
        self.M = D.nu.module.M

    def lam(self, g, h) -> int:
        return self.labels[self.D.lam(g, h)]

    def nu(self, a, b, c) -> CycScalar:
        return make_root(self.D.nu(a, b, c), self.M)


def _lambda_cocycle_witness(C: SkeletalGxBFC, D: ZestingDatum):
    ok, w = is_cocycle(D.lam)
    return None if ok else w


def _relabel(new_a, new_b, factor):
    """Replace a two-leaf node by new leaves, scaling by factor(a, b, charge)."""
    def fn(t):
        c, a, b = t
        return {(c, new_a, new_b): factor(a, b, c)}
    return fn


_LEFT3 = ((None, None), None)
_RIGHT3 = (None, (None, None))


def _condition_sides(eng: TreeEngine, X: _Datum, g1, g2, g3, g4):
    """Both sides of the associative zesting condition on the invertible legs."""
    C, G = eng.C, eng.C.group
    m, act, lam, nu = G.m, C.act, X.lam, X.nu
    L1 = act(lam(g1, g2), m(g3, g4))
    L2 = act(lam(m(g1, g2), g3), g4)
    L3 = lam(m(g1, g2, g3), g4)
    p = C.fuse(L2, L3)[0]
    start = {(C.fuse(L1, p)[0], L1, (p, L2, L3)): ONE}

    # left-hand side: act on the first pair before g4, then reassociate twice
    v = eng.scale(start, lambda t: (C.et(lam(g1, g2), g3, g4), t))
    v = eng.to_shape(v, _LEFT3)
    src_a, src_b = act(lam(g1, g2), g3), lam(m(g1, g2), g3)
    tgt_a, tgt_b = lam(g2, g3), lam(g1, m(g2, g3))
    c0 = C.fuse(tgt_a, tgt_b)[0]
    moved = (nu(g1, g2, g3) * C.u(g4, tgt_a, tgt_b, c0)
             / C.u(g4, src_a, src_b, C.fuse(src_a, src_b)[0]))
    v = eng.apply(v, (0,), _relabel(act(tgt_a, g4), act(tgt_b, g4), lambda *_: moved))
    v = eng.to_shape(v, _RIGHT3)
    v = eng.apply(v, (1,), _relabel(lam(m(g2, g3), g4), lam(g1, m(g2, g3, g4)),
                                    lambda *_: nu(g1, m(g2, g3), g4)))
    v = eng.to_shape(v, _LEFT3)
    v = eng.apply(v, (0,), _relabel(lam(g3, g4), lam(g2, m(g3, g4)),
                                    lambda *_: nu(g2, g3, g4)))
    lhs = eng.to_shape(v, _RIGHT3)

    # right-hand side: combine the last pair, braid past it, combine again
    w = eng.apply(start, (1,), _relabel(lam(g3, g4), lam(m(g1, g2), m(g3, g4)),
                                        lambda *_: nu(m(g1, g2), g3, g4)))
    w = eng.to_shape(w, _LEFT3)
    w = eng.apply(w, (0,), eng.braid)
    w = eng.to_shape(w, _RIGHT3)
    rhs = eng.apply(w, (1,), _relabel(lam(g2, m(g3, g4)), lam(g1, m(g2, g3, g4)),
                                      lambda *_: nu(g1, g2, m(g3, g4))))
    return lhs, rhs


def _ratio(lhs: dict, rhs: dict) -> CycScalar | None:
    if len(lhs) != 1 or len(rhs) != 1 or lhs.keys() != rhs.keys():
        return None
    (k,) = lhs
    return lhs[k] / rhs[k]


def verify_datum(C: SkeletalGxBFC, D: ZestingDatum) -> CheckReport:
    """Check lambda's cocycle condition and the associative zesting condition."""
    X = _Datum(C, D)
    w = _lambda_cocycle_witness(C, D)
    if w is not None:
        raise LambdaNotCocycle(f"lambda fails the 2-cocycle condition at {w}")
    if not D.lambda_normalized:
        raise DatumInvalid("lambda is not normalized")
    rep = CheckReport("zesting-condition")
    G = C.group
    if not D.nu_normalized:
        rep.fail(("nu-normalization",))
    eng = TreeEngine(C)
    for gs in itertools.product(G, repeat=4):
        rep.checked += 1
        lhs, rhs = _condition_sides(eng, X, *gs)
        r = _ratio(lhs, rhs)
        if r is None or r != ONE:
            rep.fail(gs)
    return rep.finish()


def pw_obstruction(C: SkeletalGxBFC, lam: Cochain, nu: Cochain | None = None) -> ObstructionClass:
    """The 4-cochain LHS/RHS of the zesting condition, and a 3-cochain fixing it.

    The trivializer ``beta`` satisfies d(beta) = O, so (lam, nu / beta)
    passes ``verify_datum``.  It is None when no such cochain exists.
    """
    G = C.group
    if nu is None:
        nu = Cochain.constant(roots_module(G, 1), 3)
    D = ZestingDatum(lam, nu)
    X = _Datum(C, D)
    w = _lambda_cocycle_witness(C, D)
    if w is not None:
        raise LambdaNotCocycle(f"lambda fails the 2-cocycle condition at {w}")
    eng = TreeEngine(C)
    ratios = {}
    for gs in itertools.product(G, repeat=4):
        lhs, rhs = _condition_sides(eng, X, *gs)
        r = _ratio(lhs, rhs)
        if r is None:
            raise InvariantViolation("zesting condition sides do not match in shape")
        ratios[gs] = r
    orders = []
    for r in ratios.values():
        found = root_exponent(r)
        if found is None:
            raise InvariantViolation("obstruction value is not a root of unity")
        orders.append(found[1])
    M = math.lcm(nu.module.M, *orders)
    mod = roots_module(G, M)
    vals = np.zeros((len(G),) * 4, dtype=np.int64)
    for gs, r in ratios.items():
        k, order = root_exponent(r)
        vals[gs] = k * (M // order)
    cocycle = Cochain(mod, vals)
    ok, witness = is_cocycle(cocycle)
    if not ok:
        raise InvariantViolation(f"obstruction is not a 4-cocycle (fails at {witness})")
    try:
        prim = coboundary_solve(cocycle)
    except NoSolution:
        return ObstructionClass(cocycle, None, nu)
    return ObstructionClass(cocycle, prim, nu)


def multiply_nu(nu: Cochain, beta: Cochain) -> Cochain:
    """Pointwise product of two root-of-unity cochains in a common mu_M."""
    M = math.lcm(nu.module.M, beta.module.M)
    vals = (nu.values * (M // nu.module.M) + beta.values * (M // beta.module.M)) % M
    return Cochain(roots_module(nu.group, M), vals)


# zested category -------------------------------------------------------------


def zest(C: SkeletalGxBFC, D: ZestingDatum, verify: bool = True) -> SkeletalGxBFC:
    """The zested G-crossed braided category C^(lambda, nu)."""
    C.require_multiplicity_free()
    X = _Datum(C, D)
    if verify:
        rep = verify_datum(C, D)
        if not rep.passed:
            raise DatumInvalid(f"zesting condition fails at {rep.failures[0]}")
    G, n = C.group, C.size
    gr = C.grade
    lam = X.lam
    eng = TreeEngine(C)

    def one(a, b):
        return C.fuse(a, b)[0]

    # fusion: x (x) y (x) lambda(gx, gy)
    fusion = {}
    via = {}
    for x, y in itertools.product(range(n), repeat=2):
        l12 = lam(gr[x], gr[y])
        for e in C.fuse(x, y):
            e2 = one(e, l12)
            fusion[(x, y, e2)] = 1
            via[(x, y, e2)] = e

    def act_z(x, h):
        g = gr[x]
        gh = G.conj(g, h)
        return one(one(C.act(x, h), lam(g, h)), C.dual[lam(h, gh)])

    action = [[act_z(x, h) for x in range(n)] for h in G]
    theta = {g: twist_of_invertible(C, lam(g, int(G.inv[g]))) for g in G}
    pivotal = [theta[gr[a]] for a in range(n)]
    spherical = all(theta[g] == twist_of_invertible(C, lam(int(G.inv[g]), g)) for g in G)
    skel = SkeletalGxBFC(name=f"{C.name}^zested", group=G, labels=C.labels, grade=gr,
                         fusion=fusion, action=action, qdim=C.qdim, unit=C.unit)

    # associator
    F = {}
    for x, y, z, d, e2, f2 in skel.trees3():
        g1, g2, g3 = gr[x], gr[y], gr[z]
        l12, l123 = lam(g1, g2), lam(G.m(g1, g2), g3)
        l23, l1_23 = lam(g2, g3), lam(g1, G.m(g2, g3))
        e = via[(x, y, e2)]
        d0 = one(d, C.dual[l123])
        src = {(d, (d0, (e2, (e, x, y), l12), z), l123): ONE}
        v = eng.to_shape(src, _S_XY_LZ_L)
        v = eng.apply(v, (0, 1), eng.braid)
        v = eng.to_shape(v, _S_XYZ_LL)
        nu_val = X.nu(g1, g2, g3)
        lam_g3 = C.act(l12, g3)

        def apply_nu(t, l23=l23, l1_23=l1_23, nu_val=nu_val, lam_g3=lam_g3, l123=l123):
            c, a, b = t
            if a != lam_g3 or b != l123:
                raise InvariantViolation("unexpected legs while applying nu")
            return {(c, l23, l1_23): nu_val}

        v = eng.apply(v, (1,), apply_nu)
        v = eng.to_shape(v, _S_TARGET)
        f = via[(y, z, f2)]
        d1 = one(d, C.dual[l1_23])
        target = (d, (d1, x, (f2, (f, y, z), l23)), l1_23)
        val = v.get(target, ZERO)
        if val != ONE:
            F[(x, y, z, d, e2, f2)] = val

    # crossed braiding
    R = {}
    for (x, y, d) in sorted(fusion):
        g, h = gr[x], gr[y]
        gh = G.conj(g, h)
        lgh, lp = lam(g, h), lam(h, gh)
        lbar = C.dual[lp]
        e = via[(x, y, d)]
        xh = C.act(x, h)
        xz = action[h][x]
        # braid, then split lambda(g,h) as lambda(g,h) (lbar' lambda') and absorb
        v = {(d, t, (lgh, lgh, (C.unit, lbar, lp))): c
             for t, c in eng.braid((e, x, y)).items()}
        v = eng.to_shape(v, _S_R_MID)

        def contract(t, xz=xz, xh=xh, lgh=lgh, lbar=lbar):
            c, (_, a, b), bb = t
            if c != xz or a != xh or b != lgh or bb != lbar:
                raise InvariantViolation("unexpected legs while contracting")
            return {xz: ONE}

        v = eng.apply(v, (0, 1), contract)
        val = v.get((d, (one(d, C.dual[lp]), y, xz), lp), ZERO)
        if val.is_zero():
            raise InvariantViolation("zested braiding vanished")
        if val != ONE:
            R[(x, y, d)] = val

    Z = skel.replace(F=F, R=R)
    U, eta = _solve_action(Z)
    meta = dict(C.meta)
    meta.update({"zested_by": str(D.tag), "spherical": spherical})
    return Z.replace(U=U, eta=eta, pivotal=pivotal, meta=meta, name=f"{C.name}^zested")


def _solve_action(Z: SkeletalGxBFC):
    """Tensorators from the first hexagon, compositors from the second."""
    G, n = Z.group, Z.size
    U = {}
    probe = {k: Z.component(k)[0] for k in G}
    for k in G:
        z = probe[k]
        for (x, y, e) in sorted(Z.N):
            d = Z.fuse(e, z)[0]
            e2 = Z.act(e, k)
            val = hexagon1_rhs(Z, x, y, z, d, e, e2) / Z.r(e, z, d)
            if val != ONE:
                U[(k, x, y, e)] = val
    eta = {}
    for x in range(n):
        for h, k in itertools.product(G, repeat=2):
            y, z = probe[h], probe[k]
            e = Z.fuse(x, y)[0]
            d = Z.fuse(e, z)[0]
            xhk = Z.act(x, G.m(h, k))
            val = None
            for l in Z.fuse(z, xhk):
                if not Z.admissible(y, l, d):
                    continue
                s = hexagon2_lhs(Z, x, y, z, d, e, l)
                if not s.is_zero():
                    val = hexagon2_rhs(Z, x, y, z, d, e, l) / s
                    break
            if val is None:
                raise InvariantViolation("cannot solve for the compositor")
            if val != ONE:
                eta[(x, h, k)] = val
    return U, eta


# cyclic enumeration ----------------------------------------------------------


def _cyclic_generator(C: SkeletalGxBFC) -> int:
    G = C.group
    if G.factors == (len(G),):
        return 1 if len(G) > 1 else G.e
    sigma = G.cyclic_generator()
    if sigma is None:
        raise NonCyclicGrading("grading group is not cyclic")
    return sigma


def enumerate_cyclic(C: SkeletalGxBFC, N: int | None = None) -> list[ZestingDatum]:
    """All (lambda_a, nu_a * xi_b) for a running over H^2 classes and b mod N."""
    G = C.group
    if N is not None and N != len(G):
        raise NonCyclicGrading(f"grading group has order {len(G)}, not {N}")
    N = len(G)
    if N == 1:
        return [trivial_datum(C)]
    sigma = _cyclic_generator(C)
    mod, labels = invertible_module(C)
    h2 = cyclic_cohomology(mod, 2, generator=sigma)
    out = []
    for lam in h2.representatives:
        obs = pw_obstruction(C, lam, Cochain.constant(roots_module(G, N), 3))
        if obs.trivializer is None:
            continue
        base_nu = obs.repaired_nu
        if not verify_datum(C, ZestingDatum(lam, base_nu)).passed:
            raise InvariantViolation("trivializer does not repair the zesting condition")
        g_elem = lam(sigma, G.power(sigma, N - 1))
        for b in range(N):
            nu = multiply_nu(base_nu, cyclic_xi(G, b, generator=sigma))
            out.append(ZestingDatum(lam, nu, tag=(g_elem, b)))
    return out


# trivializations and braided promotion -----------------------------------------


@dataclass
class TrivializationReport(CheckReport):
    braided: SkeletalGxBFC | None = None


def check_trivialization(Z: SkeletalGxBFC, eta_triv) -> TrivializationReport:
    """Check that ``eta_triv[(g, x)]``: x^g -> x is a monoidal trivialization
    of the action compatible with the compositors; build the induced braiding.
    """
    G = Z.group
    if not G.is_abelian:
        raise NonAbelianGroup("trivializations need an abelian grading group")
    rep = TrivializationReport("trivialization")
    n = Z.size
    for g in G:
        for x in range(n):
            if Z.act(x, g) != x:
                rep.fail(("not-fixed", g, x))
    if not rep.passed:
        return rep.finish()
    for x in range(n):
        for g, h in itertools.product(G, repeat=2):
            rep.checked += 1
            lhs = eta_triv[(G.m(g, h), x)]
            rhs = Z.et(x, g, h) * eta_triv[(g, x)] * eta_triv[(h, x)]
            if lhs != rhs:
                rep.fail(("composition", x, g, h))
    for (x, y, d) in sorted(Z.N):
        for g in G:
            rep.checked += 1
            if eta_triv[(g, d)] != Z.u(g, x, y, d) * eta_triv[(g, x)] * eta_triv[(g, y)]:
                rep.fail(("monoidal", x, y, d, g))
    if rep.passed:
        R = {}
        for (x, y, d) in Z.N:
            v = Z.r(x, y, d) * eta_triv[(Z.grade[y], x)]
            if v != ONE:
                R[(x, y, d)] = v
        B = Z.replace(R=R, U={}, eta={}, action=[list(range(n)) for _ in G],
                      name=f"{Z.name}^braided")
        hex_rep = check_heptagons(B)
        rep.checked += hex_rep.checked
        for w in hex_rep.failures:
            rep.fail(("hexagon",) + tuple(w))
        rep.braided = B
    return rep.finish()


@dataclass
class Promotion:
    """One braided promotion (a, b, s) of a cyclic zesting.

    ``b`` is reported in the braided-zesting parameterization, where the
    associator twist enters inverted: the crossed datum ``nu * xi_b`` here is
    the braided datum with index ``-b``.
    """

    a: int
    b: int
    s: CycScalar
    datum: ZestingDatum = field(repr=False)
    eta: dict = field(repr=False)
    braided: SkeletalGxBFC = field(repr=False)

    @property
    def t(self) -> Cochain:
        return self.datum.t

    def row(self) -> str:
        return f"({self.a}, {self.b}, {self.s.to_text()})"


def _is_tannakian(C: SkeletalGxBFC, labels) -> bool:
    return all(C.r(a, b, C.fuse(a, b)[0]) == ONE for a in labels for b in labels)


def braided_promotions(C: SkeletalGxBFC, D: ZestingDatum) -> list[Promotion]:
    """All t(i,j) = s^(-ij) for which eta_h(x_g) = t(g,h) trivializes the
    zested action; s runs over the N^2-th roots of unity."""
    G = C.group
    sigma = _cyclic_generator(C)
    N = len(G)
    _, inv_labels = invertible_module(C)
    if not _is_tannakian(C, inv_labels):
        raise NotTannakian("invertibles of the trivial component are not Tannakian")
    Z = zest(C, D)
    exp = _powers(G, sigma)
    a = D.lam(sigma, G.power(sigma, N - 1)) if N > 1 else 0
    b = (-D.tag[1]) % N if len(D.tag) == 2 else None
    K = N * N
    out = []
    for k in range(K):
        t_vals = np.array([[(-k * exp[g] * exp[h]) % K for h in G] for g in G], dtype=np.int64)
        eta_triv = {(h, x): make_root(int(t_vals[Z.grade[x], h]), K)
                    for h in G for x in range(Z.size)}
        rep = check_trivialization(Z, eta_triv)
        if rep.passed:
            t = Cochain(roots_module(G, K), t_vals)
            ext = ZestingDatum(D.lam, D.nu, t, tag=D.tag)
            out.append(Promotion(a, b, make_root(k, K), ext, eta_triv, rep.braided))
    return out


def _powers(G: FinGroup, sigma: int) -> dict[int, int]:
    exp, x = {}, G.e
    for i in range(len(G)):
        exp[x] = i
        x = int(G.mul[x, sigma])
    return exp
