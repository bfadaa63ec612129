"""Finite groups, modules over them, and cochains.

Group elements are integer indices into a multiplication table.  A module
:class:`GModule` is a finite abelian group ``A`` (also a table) with a right
action of an acting group ``G``: ``act[g, a]`` is ``a^g`` and
``a^(gh) = (a^g)^h``.

Scalar-valued cochains take values in a finite root-of-unity group mu_M,
modelled as the additive group Z/M acting trivially.  The value ``k`` then
stands for ``exp(2 pi i k / M)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form, invariant_factors

from .scalars import CycScalar, make_root

__all__ = [
    "FinGroup",
    "GModule",
    "Cochain",
    "GroupError",
    "NonCyclicActor",
    "NotFixedPoint",
    "NotACocycle",
    "NoSolution",
    "cyclic_group",
    "direct_product",
    "symmetric_group",
    "group_from_name",
    "roots_module",
    "units_module",
    "differential",
    "is_cocycle",
    "coboundary_solve",
    "cyclic_cohomology",
    "cyclic_lambda",
    "cyclic_xi",
    "CohomologyGroup",
    "pullback",
    "sign_hom",
    "solve_mod",
]


class GroupError(ValueError):
    """Invalid group or module data."""


class NonCyclicActor(GroupError):
    pass


class NotFixedPoint(GroupError):
    pass


class NotACocycle(ValueError):
    pass


class NoSolution(ValueError):
    pass


# groups ---------------------------------------------------------------------


class FinGroup:
    """A finite group given by its multiplication table.

    ``factors`` optionally records a decomposition Z/n1 x ... x Z/nr for
    abelian groups built as products of cyclic groups; element ``i`` then has
    mixed-radix coordinates (last factor fastest).
    """

    def __init__(self, table, names=None, identity: int | None = None, factors=None):
        mul = np.asarray(table, dtype=np.int64)
        n = mul.shape[0]
        if mul.shape != (n, n) or n == 0:
            raise GroupError("multiplication table must be square and nonempty")
        if mul.min() < 0 or mul.max() >= n:
            raise GroupError("table entries out of range")
        for row in mul:
            if len(set(row.tolist())) != n:
                raise GroupError("table rows must be permutations")
        if identity is None:
            candidates = [e for e in range(n) if (mul[e] == np.arange(n)).all()]
            if not candidates:
                raise GroupError("no identity element")
            identity = candidates[0]
        e = identity
        if not ((mul[e] == np.arange(n)).all() and (mul[:, e] == np.arange(n)).all()):
            raise GroupError("identity law fails")
        left = mul[mul, :]  # (ab)c as left[a, b, c]
        right = mul[:, mul]  # a(bc) as right[a, b, c]
        if not (left == right).all():
            raise GroupError("table is not associative")
        inv = np.array([int(np.nonzero(mul[g] == e)[0][0]) for g in range(n)], dtype=np.int64)
        self.mul = mul
        self.mul.setflags(write=False)
        self.inv = inv
        self.inv.setflags(write=False)
        self.e = e
        self.names = list(names) if names is not None else [str(i) for i in range(n)]
        if len(self.names) != n:
            raise GroupError("wrong number of element names")
        self.factors = tuple(factors) if factors is not None else None

    def __len__(self):
        return self.mul.shape[0]

    @property
    def order(self) -> int:
        return len(self)

    def __iter__(self):
        return iter(range(len(self)))

    def __eq__(self, other):
        return isinstance(other, FinGroup) and np.array_equal(self.mul, other.mul)

    def __hash__(self):
        return hash(self.mul.tobytes())

    def __repr__(self):
        return f"FinGroup(order={len(self)}, names={self.names})"

    def m(self, *gs: int) -> int:
        """Product of the given elements, left to right."""
        out = self.e
        for g in gs:
            out = int(self.mul[out, g])
        return out

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return int(self.mul[self.mul[self.inv[g], x], g])

    def power(self, g: int, k: int) -> int:
        out = self.e
        base = g if k >= 0 else int(self.inv[g])
        for _ in range(abs(k)):
            out = int(self.mul[out, base])
        return out

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.e:
            x = int(self.mul[x, g])
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(g) for g in self))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def coords(self, a: int) -> tuple[int, ...]:
        if self.factors is None:
            raise GroupError("group has no cyclic decomposition")
        out = []
        for n in reversed(self.factors):
            out.append(a % n)
            a //= n
        return tuple(reversed(out))

    def from_coords(self, coords) -> int:
        if self.factors is None:
            raise GroupError("group has no cyclic decomposition")
        a = 0
        for c, n in zip(coords, self.factors):
            a = a * n + (c % n)
        return a

    def cyclic_generator(self) -> int | None:
        for g in self:
            if self.element_order(g) == len(self):
                return g
        return None


def cyclic_group(n: int) -> FinGroup:
    if n < 1:
        raise GroupError("cyclic order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FinGroup(table, names=[str(i) for i in range(n)], identity=0, factors=(n,))


def direct_product(g1: FinGroup, g2: FinGroup) -> FinGroup:
    n1, n2 = len(g1), len(g2)
    table = [[int(g1.mul[a // n2, b // n2]) * n2 + int(g2.mul[a % n2, b % n2])
              for b in range(n1 * n2)] for a in range(n1 * n2)]
    names = [f"({x},{y})" for x in g1.names for y in g2.names]
    factors = g1.factors + g2.factors if g1.factors and g2.factors else None
    return FinGroup(table, names=names, identity=g1.e * n2 + g2.e, factors=factors)


def symmetric_group(n: int) -> FinGroup:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = q(p(x)): apply p first, matching right actions
    table = [[index[tuple(q[p[x]] for x in range(n))] for q in perms] for p in perms]
    names = ["".join(str(v + 1) for v in p) for p in perms]
    return FinGroup(table, names=names, identity=0)


def group_from_name(name: str) -> FinGroup:
    """Parse names like ``Z3``, ``Z2xZ2``, ``Z3xZ3``, ``S3``, ``1``."""
    key = name.replace(" ", "").replace("×", "x")
    if key in ("1", "Z1", "trivial"):
        return cyclic_group(1)
    if key.startswith("S") and key[1:].isdigit():
        return symmetric_group(int(key[1:]))
    parts = key.split("x")
    try:
        orders = [int(p[1:]) for p in parts if p.startswith("Z")]
    except ValueError:
        orders = []
    if len(orders) != len(parts) or not orders:
        raise GroupError(f"unknown group name {name!r}")
    out = cyclic_group(orders[0])
    for n in orders[1:]:
        out = direct_product(out, cyclic_group(n))
    return out


# modules --------------------------------------------------------------------


class GModule:
    """Finite abelian group ``base`` with a right action of ``actor``.

    ``units`` marks mu_M standing in for the nonzero scalars; cohomology is
    then computed in the direct limit over M.
    """

    def __init__(self, base: FinGroup, actor: FinGroup, act=None, units: bool = False):
        if not base.is_abelian:
            raise GroupError("module base must be abelian")
        n = len(base)
        if act is None:
            act = np.tile(np.arange(n), (len(actor), 1))
        act = np.asarray(act, dtype=np.int64)
        if act.shape != (len(actor), n):
            raise GroupError("action table has wrong shape")
        if not (act[actor.e] == np.arange(n)).all():
            raise GroupError("identity must act trivially")
        for g in actor:
            row = act[g]
            if len(set(row.tolist())) != n:
                raise GroupError("action is not bijective")
            if not (row[base.mul] == base.mul[row][:, row]).all():
                raise GroupError("action is not by automorphisms")
            for h in actor:
                if not (act[h][row] == act[actor.mul[g, h]]).all():
                    raise GroupError("action is not a right action")
        self.base = base
        self.actor = actor
        self.act = act
        self.act.setflags(write=False)
        self.units = units

    @property
    def is_trivial(self) -> bool:
        return bool((self.act == np.arange(len(self.base))).all())

    def __repr__(self):
        return f"GModule(|A|={len(self.base)}, |G|={len(self.actor)}, trivial={self.is_trivial})"

    @property
    def M(self) -> int:
        """Order of the root-of-unity group for scalar modules."""
        return len(self.base)

    def to_scalar(self, value: int) -> CycScalar:
        if not self.units:
            raise GroupError("not a scalar module")
        return make_root(int(value), self.M)


def roots_module(actor: FinGroup, M: int) -> GModule:
    """mu_M with trivial action, values stored as exponents."""
    return GModule(cyclic_group(M), actor, units=True)


units_module = roots_module


# cochains -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Cochain:
    """A k-cochain G^k -> A, stored as a dense integer array of shape (|G|,)*k."""

    module: GModule
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64)
        n = len(self.module.actor)
        if any(s != n for s in vals.shape):
            raise GroupError("cochain array has wrong shape")
        if vals.size and (vals.min() < 0 or vals.max() >= len(self.module.base)):
            raise GroupError("cochain values out of range")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def degree(self) -> int:
        return self.values.ndim

    @property
    def group(self) -> FinGroup:
        return self.module.actor

    def __call__(self, *gs: int) -> int:
        return int(self.values[tuple(gs)])

    def scalar(self, *gs: int) -> CycScalar:
        return self.module.to_scalar(self(*gs))

    @classmethod
    def constant(cls, module: GModule, degree: int, value: int | None = None) -> Cochain:
        v = module.base.e if value is None else value
        return cls(module, np.full((len(module.actor),) * degree, v, dtype=np.int64))

    @classmethod
    def from_function(cls, module: GModule, degree: int, fn) -> Cochain:
        n = len(module.actor)
        vals = np.empty((n,) * degree, dtype=np.int64)
        for idx in itertools.product(range(n), repeat=degree):
            vals[idx] = fn(*idx)
        return cls(module, vals)

    @property
    def normalized(self) -> bool:
        e, a_e = self.group.e, self.module.base.e
        for axis in range(self.degree):
            if (np.take(self.values, e, axis=axis) != a_e).any():
                return False
        return True

    def is_trivial(self) -> bool:
        return bool((self.values == self.module.base.e).all())

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.module is other.module
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash(self.values.tobytes())

    def __mul__(self, other: Cochain) -> Cochain:
        if other.module is not self.module:
            raise GroupError("cochains live in different modules")
        return Cochain(self.module, self.module.base.mul[self.values, other.values])

    def inverse(self) -> Cochain:
        return Cochain(self.module, self.module.base.inv[self.values])

    def with_value(self, idx, value: int) -> Cochain:
        vals = self.values.copy()
        vals[tuple(idx)] = value
        return Cochain(self.module, vals)

    def items(self):
        for idx in itertools.product(range(len(self.group)), repeat=self.degree):
            yield idx, int(self.values[idx])


def _embed_roots(c: Cochain, M: int) -> Cochain:
    """Reinterpret a mu_m-valued cochain inside mu_M (m | M)."""
    m = c.module.M
    if M % m:
        raise GroupError("target root order must be a multiple")
    return Cochain(roots_module(c.group, M), c.values * (M // m))


def differential(c: Cochain) -> Cochain:
    """Coboundary with respect to the right action.

    (d c)(g1..g_{n+1}) = c(g2..g_{n+1})
                         * prod_i c(.., g_i g_{i+1}, ..)^((-1)^i)
                         * (c(g1..g_n)^{g_{n+1}})^((-1)^(n+1))
    """
    mod, G = c.module, c.group
    A_mul, A_inv, act = mod.base.mul, mod.base.inv, mod.act
    n = c.degree
    N = len(G)
    grid = np.indices((N,) * (n + 1), dtype=np.int64)
    vals = c.values
    if n == 0:
        first = np.full((N,), int(vals), dtype=np.int64)
        out = A_mul[first, A_inv[act[grid[0], int(vals)]]]
        return Cochain(mod, out)
    out = vals[tuple(grid[1:])]
    for i in range(1, n + 1):
        merged = list(grid[: i - 1]) + [G.mul[grid[i - 1], grid[i]]] + list(grid[i + 1:])
        term = vals[tuple(merged)]
        if i % 2:
            term = A_inv[term]
        out = A_mul[out, term]
    last = act[grid[n], vals[tuple(grid[:n])]]
    if (n + 1) % 2:
        last = A_inv[last]
    out = A_mul[out, last]
    return Cochain(mod, out)


def is_cocycle(c: Cochain) -> tuple[bool, tuple[int, ...] | None]:
    """(True, None) or (False, first failing tuple in lexicographic order)."""
    d = differential(c)
    bad = np.argwhere(d.values != c.module.base.e)
    if len(bad) == 0:
        return True, None
    return False, tuple(int(x) for x in bad[0])


# linear algebra over Z/M ----------------------------------------------------


def _factor(n: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _valuation(x: np.ndarray, p: int, cap: int) -> np.ndarray:
    v = np.zeros(x.shape, dtype=np.int64)
    y = x.copy()
    live = y != 0
    v[~live] = cap
    for _ in range(cap):
        step = live & (y % p == 0)
        if not step.any():
            break
        v[step] += 1
        y[step] //= p
        live = step
    return v


def _solve_prime_power(A: np.ndarray, b: np.ndarray, p: int, e: int) -> np.ndarray | None:
    """Solve A x = b over Z/p^e with full pivoting; None if unsolvable."""
    q = p ** e
    A = A % q
    b = b % q
    rows, cols = A.shape
    perm = np.arange(cols)
    pivots = []
    r = 0
    while r < rows and r < cols:
        sub = A[r:, r:]
        if not sub.any():
            break
        val = _valuation(sub, p, e)
        i, j = np.unravel_index(np.argmin(val), val.shape)
        v = int(val[i, j])
        i, j = i + r, j + r
        A[[r, i]] = A[[i, r]]
        b[[r, i]] = b[[i, r]]
        A[:, [r, j]] = A[:, [j, r]]
        perm[[r, j]] = perm[[j, r]]
        unit = int(A[r, r]) // p ** v
        uinv = pow(unit, -1, q)
        below = A[r + 1:, r]
        nz = np.nonzero(below)[0] + r + 1
        if len(nz):
            f = (A[nz, r] // p ** v) * uinv % q
            A[nz] = (A[nz] - np.outer(f, A[r])) % q
            b[nz] = (b[nz] - f * b[r]) % q
        pivots.append(v)
        r += 1
    if b[r:].any():
        return None
    x = np.zeros(cols, dtype=np.int64)
    for k in range(r - 1, -1, -1):
        v = pivots[k]
        rhs = (int(b[k]) - int(A[k, k + 1:] @ x[k + 1:] % q)) % q
        if rhs % p ** v:
            return None
        unit = int(A[k, k]) // p ** v
        mod = p ** (e - v)
        x[k] = (rhs // p ** v) * pow(unit, -1, mod) % mod if mod > 1 else 0
    out = np.zeros(cols, dtype=np.int64)
    out[perm] = x
    return out


def solve_mod(A: np.ndarray, b: np.ndarray, M: int) -> np.ndarray | None:
    """Solve A x = b over Z/M (CRT over prime powers); None if unsolvable."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if M == 1:
        return np.zeros(A.shape[1], dtype=np.int64)
    x = np.zeros(A.shape[1], dtype=np.int64)
    modulus = 1
    for p, e in _factor(M):
        q = p ** e
        part = _solve_prime_power(A.copy(), b.copy(), p, e)
        if part is None:
            return None
        # CRT combine
        t = ((part - x) % q) * pow(modulus, -1, q) % q
        x = x + modulus * t
        modulus *= q
    return x % M


def _differential_matrix(G: FinGroup, k: int, normalized: bool):
    """Integer matrix of d: C^{k-1}(G, Z) -> C^k(G, Z) for the trivial module."""
    N = len(G)
    src = list(itertools.product(range(N), repeat=k - 1))
    if normalized:
        src = [s for s in src if G.e not in s]
    col = {s: i for i, s in enumerate(src)}
    rows = list(itertools.product(range(N), repeat=k))
    A = np.zeros((len(rows), len(src)), dtype=np.int64)
    for r, gs in enumerate(rows):
        terms = [(gs[1:], 1)]
        for i in range(1, k):
            merged = gs[: i - 1] + (int(G.mul[gs[i - 1], gs[i]]),) + gs[i + 1:]
            terms.append((merged, (-1) ** i))
        terms.append((gs[:k - 1], (-1) ** k))
        for t, s in terms:
            j = col.get(t)
            if j is not None:
                A[r, j] += s
    return A, src, rows


def coboundary_solve(target: Cochain, extend: int = 2) -> Cochain:
    """Find a (k-1)-cochain mu with d(mu) = target in a scalar module.

    The root-of-unity group is enlarged by factors of |G| (up to ``extend``
    times) since a class trivial over all scalars may need deeper roots.
    """
    mod = target.module
    if not mod.units or not mod.is_trivial:
        raise GroupError("coboundary_solve expects trivial-action root-of-unity values")
    ok, witness = is_cocycle(target)
    if not ok:
        raise NotACocycle(f"target fails the cocycle condition at {witness}")
    k = target.degree
    G = target.group
    if k == 0:
        if target.is_trivial():
            raise NoSolution("degree-0 cochains have no primitive")
        raise NoSolution("degree-0 target")
    if target.is_trivial():
        return Cochain.constant(mod, k - 1)
    normalized = target.normalized
    A, src, rows = _differential_matrix(G, k, normalized)
    M = mod.M
    for _ in range(extend + 1):
        b = np.array([target.values[r] for r in rows], dtype=np.int64) * (M // mod.M)
        x = solve_mod(A, b, M)
        if x is not None:
            vals = np.zeros((len(G),) * (k - 1), dtype=np.int64)
            for s, v in zip(src, x):
                vals[s] = v
            sol = Cochain(roots_module(G, M), vals)
            if not (differential(sol).values == _embed_roots(target, M).values).all():
                raise ArithmeticError("internal solver produced a wrong primitive")
            return sol
        M *= len(G)
    raise NoSolution("target is not a coboundary")


# cyclic groups --------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyGroup:
    """A finite abelian group by invariant factors plus optional representatives."""

    invariants: tuple[int, ...]
    representatives: tuple = ()

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __str__(self):
        if not self.invariants:
            return "0"
        return " x ".join(f"Z/{n}" for n in self.invariants)


def _endo_images(mod: GModule, sigma: int):
    A, G = mod.base, mod.actor
    n = len(G)
    one_minus = np.array([A.mul[a, A.inv[mod.act[sigma, a]]] for a in A], dtype=np.int64)
    norm = np.empty(len(A), dtype=np.int64)
    for a in A:
        acc, x = A.e, a
        for _ in range(n):
            acc = A.mul[acc, x]
            x = mod.act[sigma, x]
        norm[a] = acc
    return one_minus, norm


def _quotient_invariants(A: FinGroup, kernel: set[int], image: set[int]) -> tuple[int, ...]:
    """Invariant factors of kernel/image, both subgroups of A, via lattice SNF."""
    if A.factors is None:
        raise GroupError("module base needs a cyclic decomposition")
    r = len(A.factors)
    rel = [tuple(n if i == j else 0 for j in range(r)) for i, n in enumerate(A.factors)]
    k_gens = [A.coords(a) for a in sorted(kernel)] + rel
    i_gens = [A.coords(a) for a in sorted(image)] + rel
    basis = hermite_normal_form(Matrix(k_gens).T)
    coeff = basis.inv() * Matrix(i_gens).T
    if any(not c.is_integer for c in coeff):
        raise GroupError("image is not contained in kernel")
    return tuple(int(f) for f in invariant_factors(coeff) if abs(int(f)) != 1)


def cyclic_cohomology(mod: GModule, n: int, generator: int | None = None) -> CohomologyGroup:
    """H^n(C_m, A) from the periodic resolution.

    Odd n: ker(N)/im(1-sigma); even n > 0: ker(1-sigma)/im(N); n = 0: fixed points.
    For degree 2 the result carries one ``cyclic_lambda`` cocycle per class.
    """
    G = mod.actor
    sigma = G.cyclic_generator() if generator is None else generator
    if sigma is None or G.element_order(sigma) != len(G):
        raise NonCyclicActor("acting group is not cyclic")
    m = len(G)
    if mod.units:
        return _units_cohomology(mod, n, m)
    one_minus, norm = _endo_images(mod, sigma)
    A = mod.base
    if n == 0:
        return CohomologyGroup(_quotient_invariants(A, {a for a in A if one_minus[a] == A.e}, {A.e}))
    if n % 2:
        kernel = {a for a in A if norm[a] == A.e}
        image = set(one_minus.tolist())
    else:
        kernel = {a for a in A if one_minus[a] == A.e}
        image = set(norm.tolist())
    inv = _quotient_invariants(A, kernel, image)
    reps = ()
    if n == 2:
        seen, chosen = set(), []
        for a in sorted(kernel):
            coset = frozenset(int(A.mul[a, i]) for i in image)
            if coset not in seen:
                seen.add(coset)
                chosen.append(cyclic_lambda(mod, a, generator=sigma))
        reps = tuple(chosen)
    return CohomologyGroup(inv, reps)


def _units_cohomology(mod: GModule, n: int, m: int) -> CohomologyGroup:
    # trivial action on the divisible group of all roots of unity
    if not mod.is_trivial:
        raise GroupError("only the trivial action is supported on scalars")
    if n == 0:
        return CohomologyGroup((0,))  # the scalars themselves; not finite
    if n % 2:
        return CohomologyGroup((m,) if m > 1 else ())
    return CohomologyGroup(())


def _cyclic_exponent(G: FinGroup, sigma: int) -> list[int]:
    """Map element index -> i with element = sigma^i."""
    out = [0] * len(G)
    x = G.e
    for i in range(len(G)):
        out[x] = i
        x = int(G.mul[x, sigma])
    return out


def cyclic_lambda(mod: GModule, g: int, generator: int | None = None) -> Cochain:
    """lambda_g(s^i, s^j) = g if i + j >= N else identity, for g fixed by the action."""
    G = mod.actor
    sigma = G.cyclic_generator() if generator is None else generator
    if sigma is None:
        raise NonCyclicActor("acting group is not cyclic")
    if int(mod.act[sigma, g]) != g:
        raise NotFixedPoint(f"element {mod.base.names[g]} is moved by the action")
    N = len(G)
    exp = _cyclic_exponent(G, sigma)
    e = mod.base.e
    return Cochain.from_function(mod, 2, lambda a, b: g if exp[a] + exp[b] >= N else e)


def cyclic_xi(G: FinGroup, b: int, generator: int | None = None) -> Cochain:
    """xi_b(s^i, s^j, s^k) = q^(b k) if i + j >= N else 1, with q = exp(2 pi i / N)."""
    sigma = G.cyclic_generator() if generator is None else generator
    if sigma is None:
        raise NonCyclicActor("group is not cyclic")
    N = len(G)
    exp = _cyclic_exponent(G, sigma)
    mod = roots_module(G, N)
    return Cochain.from_function(
        mod, 3, lambda x, y, z: (b * exp[z]) % N if exp[x] + exp[y] >= N else 0)


def pullback(c: Cochain, hom, source: FinGroup) -> Cochain:
    """Pull a trivial-action cochain back along a homomorphism ``source -> c.group``."""
    if not c.module.is_trivial:
        raise GroupError("pullback needs a trivial-action module")
    mod = GModule(c.module.base, source, units=c.module.units)
    images = [hom(g) for g in source]
    return Cochain.from_function(mod, c.degree, lambda *gs: c(*(images[g] for g in gs)))


def sign_hom(G: FinGroup):
    """Sign of a permutation group element built by ``symmetric_group``."""
    def sgn(g: int) -> int:
        perm = [int(ch) - 1 for ch in G.names[g]]
        inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        return inversions % 2
    return sgn
