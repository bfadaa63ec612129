"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A :class:`CycScalar` is stored as a sparse sum ``sum c_k zeta_M^k`` that is
not necessarily reduced.  Reduction against the M-th cyclotomic polynomial
happens lazily (equality tests, hashing, printing), which keeps products of
roots of unity cheap.  The canonical form uses the smallest conductor that
contains the value and the power basis ``1, zeta, ..., zeta^(phi-1)``.
"""

from __future__ import annotations

import cmath
import math
import re
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "CycScalar",
    "DivisionByZero",
    "ConductorOverflow",
    "ScalarParseError",
    "make_root",
    "rational",
    "sqrt_rational",
    "root_exponent",
    "get_max_conductor",
    "set_max_conductor",
    "max_conductor",
    "ZERO",
    "ONE",
]

_max_conductor = 360


class DivisionByZero(ZeroDivisionError):
    """Raised when inverting the zero scalar."""


class ConductorOverflow(ArithmeticError):
    """Raised when a result would need a conductor above the configured cap."""


class ScalarParseError(ValueError):
    """Raised for malformed ``cyc(...)`` text."""


def get_max_conductor() -> int:
    return _max_conductor


def set_max_conductor(n: int) -> None:
    global _max_conductor
    if n < 1:
        raise ValueError("conductor cap must be positive")
    _max_conductor = int(n)


@contextmanager
def max_conductor(n: int):
    """Temporarily change the conductor cap."""
    old = _max_conductor
    set_max_conductor(n)
    try:
        yield
    finally:
        set_max_conductor(old)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _lcm(a: int, b: int) -> int:
    m = a * b // math.gcd(a, b)
    if m > _max_conductor:
        raise ConductorOverflow(f"conductor {m} exceeds cap {_max_conductor}")
    return m


# cyclotomic polynomial tables ------------------------------------------------


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, list(_cyclotomic(d)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        coef = num[i + len(den) - 1] // lead
        q[i] = coef
        if coef:
            for j, dj in enumerate(den):
                num[i + j] -= coef * dj
    return q


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(_cyclotomic(n)) - 1


@lru_cache(maxsize=None)
def _root_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced power-basis vectors of zeta_m^k for 0 <= k < m."""
    phi = _phi(m)
    cyc = _cyclotomic(m)
    rows = []
    vec = [0] * phi
    vec[0] = 1
    for _ in range(m):
        rows.append(tuple(vec))
        # multiply by x and reduce the overflow term with the monic Phi_m
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(phi):
                vec[j] -= top * cyc[j]
    return tuple(rows)


def _reduce(m: int, terms) -> tuple:
    """Reduce a sparse sum to a dense power-basis coefficient tuple."""
    table = _root_table(m)
    out = [0] * _phi(m)
    for k, c in terms:
        row = table[k]
        for j, r in enumerate(row):
            if r:
                out[j] += r * c
    return tuple(_norm_coeff(c) for c in out)


@lru_cache(maxsize=None)
def _subfield_solver(m: int, p: int):
    """Left inverse for the embedding Q(zeta_{m/p}) -> Q(zeta_m)."""
    sub = m // p
    step = p
    cols = [_root_table(m)[j * step] for j in range(_phi(sub))]
    n_rows, n_cols = _phi(m), len(cols)
    # Solve via normal equations E^T E y = E^T x; E has full column rank.
    ete = [[Fraction(sum(cols[a][r] * cols[b][r] for r in range(n_rows))) for b in range(n_cols)]
           for a in range(n_cols)]
    inv = _invert_rational(ete)
    return sub, step, cols, inv


def _invert_rational(mat):
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class CycScalar:
    """An element of the cyclotomic field Q(zeta_M); immutable."""

    __slots__ = ("_m", "_terms", "_vec", "_canon")

    def __init__(self, m: int, terms=()):
        if m < 1:
            raise ValueError("conductor must be positive")
        if m > _max_conductor:
            raise ConductorOverflow(f"conductor {m} exceeds cap {_max_conductor}")
        acc: dict[int, object] = {}
        for k, c in (terms.items() if isinstance(terms, dict) else terms):
            if not isinstance(c, (int, Fraction)):
                c = Fraction(c)
            k %= m
            acc[k] = acc.get(k, 0) + c
        self._m = m
        self._terms = tuple(sorted((k, _norm_coeff(c)) for k, c in acc.items() if c != 0))
        self._vec = None
        self._canon = None

    # construction -------------------------------------------------------

    @classmethod
    def _raw(cls, m: int, terms: tuple) -> CycScalar:
        obj = object.__new__(cls)
        obj._m = m
        obj._terms = terms
        obj._vec = None
        obj._canon = None
        return obj

    @classmethod
    def coerce(cls, x) -> CycScalar:
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return cls(1, ((0, Fraction(x)),))
        raise TypeError(f"cannot convert {type(x).__name__} to CycScalar")

    # accessors ----------------------------------------------------------

    @property
    def conductor(self) -> int:
        """Conductor of the canonical form."""
        return self.canonical()[0]

    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Canonical power-basis coefficients {k: c}."""
        return dict(self.canonical()[1])

    def _dense(self) -> tuple:
        if self._vec is None:
            self._vec = _reduce(self._m, self._terms)
        return self._vec

    def _lifted(self, m: int) -> tuple:
        f = m // self._m
        return tuple((k * f, c) for k, c in self._terms)

    def is_zero(self) -> bool:
        if not self._terms:
            return True
        if len(self._terms) == 1:
            return False
        return not any(self._dense())

    def canonical(self) -> tuple[int, tuple]:
        """(minimal conductor, sorted nonzero power-basis coefficients)."""
        if self._canon is None:
            m, vec = self._m, self._dense()
            changed = True
            while changed and m > 1:
                changed = False
                for p in _prime_factors(m):
                    sub = _to_subfield(m, p, vec)
                    if sub is not None:
                        m, vec = m // p, sub
                        changed = True
                        break
            self._canon = (m, tuple((k, c) for k, c in enumerate(vec) if c != 0))
        return self._canon

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        m = self._m if self._m == other._m else _lcm(self._m, other._m)
        acc: dict[int, object] = {}
        for k, c in self._lifted(m) + other._lifted(m):
            acc[k] = acc.get(k, 0) + c
        terms = tuple(sorted((k, _norm_coeff(c)) for k, c in acc.items() if c != 0))
        return CycScalar._shrink(m, terms)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(self._m, tuple((k, -c) for k, c in self._terms))

    def __sub__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CycScalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return CycScalar._raw(self._m, tuple((k, _norm_coeff(c * other)) for k, c in self._terms))
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        m = self._m if self._m == other._m else _lcm(self._m, other._m)
        a, b = self._lifted(m), other._lifted(m)
        if len(a) == 1 and len(b) == 1:
            (k1, c1), (k2, c2) = a[0], b[0]
            return CycScalar._raw(m, (((k1 + k2) % m, _norm_coeff(c1 * c2)),))
        acc: dict[int, object] = {}
        for k1, c1 in a:
            for k2, c2 in b:
                k = (k1 + k2) % m
                acc[k] = acc.get(k, 0) + c1 * c2
        terms = tuple(sorted((k, _norm_coeff(c)) for k, c in acc.items() if c != 0))
        return CycScalar._shrink(m, terms)

    __rmul__ = __mul__

    @staticmethod
    def _shrink(m: int, terms: tuple) -> CycScalar:
        if len(terms) > _phi(m):
            vec = _reduce(m, terms)
            terms = tuple((k, c) for k, c in enumerate(vec) if c != 0)
            out = CycScalar._raw(m, terms)
            out._vec = vec
            return out
        return CycScalar._raw(m, terms)

    def conj(self) -> CycScalar:
        """Complex conjugate."""
        return CycScalar._raw(self._m, tuple(sorted(((-k) % self._m, c) for k, c in self._terms)))

    def galois(self, j: int) -> CycScalar:
        """Apply zeta_M -> zeta_M^j for j coprime to the representation conductor."""
        if math.gcd(j, self._m) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        return CycScalar(self._m, tuple((k * j, c) for k, c in self._terms))

    def inv(self) -> CycScalar:
        if not self._terms:
            raise DivisionByZero("inverse of zero")
        if len(self._terms) == 1:
            k, c = self._terms[0]
            return CycScalar._raw(self._m, (((-k) % self._m, _norm_coeff(Fraction(1) / c)),))
        m, canon = self.canonical()
        if not canon:
            raise DivisionByZero("inverse of zero")
        x = CycScalar(m, canon)
        if len(canon) == 1:
            return x.inv()
        others = ONE
        for j in range(2, m):
            if math.gcd(j, m) == 1:
                others = others * x.galois(j)
        norm = x * others
        nm, nvec = norm.canonical()
        if nm != 1 or len(nvec) != 1:
            raise ArithmeticError("norm computation did not land in Q")
        return others * (Fraction(1) / Fraction(nvec[0][1]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (Fraction(1) / Fraction(other))
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return CycScalar.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        n = abs(n)
        out = ONE
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.coerce(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        if self._m == other._m:
            if self._terms == other._terms:
                return True
            return self._dense() == other._dense()
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.canonical())

    def __bool__(self):
        return not self.is_zero()

    # embeddings and text ------------------------------------------------

    def to_complex(self) -> complex:
        """Numerical value under zeta_M -> exp(2 pi i / M).  Display only."""
        return sum((float(c) * cmath.exp(2j * math.pi * k / self._m) for k, c in self._terms), 0j)

    def rational_value(self) -> Fraction | None:
        m, vec = self.canonical()
        if m != 1:
            return None
        return Fraction(vec[0][1]) if vec else Fraction(0)

    def to_text(self) -> str:
        m, vec = self.canonical()
        body = ", ".join(f"{k}:{_fmt_rational(c)}" for k, c in vec)
        return f"cyc({m}; {body})" if body else f"cyc({m};)"

    @classmethod
    def from_text(cls, text: str) -> CycScalar:
        match = _CYC_RE.fullmatch(text.strip())
        if not match:
            raise ScalarParseError(f"not a cyc(...) literal: {text!r}")
        m = int(match.group(1))
        if m < 1:
            raise ScalarParseError("conductor must be positive")
        terms = []
        body = match.group(2).strip()
        if body:
            for part in body.split(","):
                try:
                    k, c = part.split(":")
                    k = int(k)
                    c = Fraction(c.strip())
                except ValueError as exc:
                    raise ScalarParseError(f"bad term {part!r}") from exc
                if not 0 <= k < m:
                    raise ScalarParseError(f"exponent {k} out of range for conductor {m}")
                terms.append((k, c))
        return cls(m, terms)

    def __repr__(self):
        return self.to_text()

    __str__ = __repr__


_CYC_RE = re.compile(r"cyc\(\s*(\d+)\s*;([^)]*)\)")


def _fmt_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _to_subfield(m: int, p: int, vec: tuple):
    sub, step, cols, inv = _subfield_solver(m, p)
    rhs = [sum(col[r] * vec[r] for r in range(len(vec))) for col in cols]
    y = [sum(inv[i][j] * rhs[j] for j in range(len(rhs))) for i in range(len(rhs))]
    back = [sum(cols[j][r] * y[j] for j in range(len(y))) for r in range(len(vec))]
    if any(b != v for b, v in zip(back, vec)):
        return None
    return tuple(_norm_coeff(Fraction(v)) for v in y)


ZERO = CycScalar(1)
ONE = CycScalar(1, ((0, 1),))


def make_root(k: int, m: int) -> CycScalar:
    """zeta_m^k."""
    if m < 1:
        raise ValueError("M must be positive")
    return CycScalar(m, ((k % m, 1),))


def rational(p, q=1) -> CycScalar:
    return CycScalar.coerce(Fraction(p, q))


def _legendre(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CycScalar:
    if p == 2:
        return make_root(1, 8) + make_root(7, 8)
    gauss = CycScalar(p, tuple((a, _legendre(a, p)) for a in range(1, p)))
    if p % 4 == 1:
        return gauss
    return gauss * make_root(3, 4)  # gauss = i sqrt(p)


def _sqrt_int(n: int) -> CycScalar:
    if n < 0:
        return make_root(1, 4) * _sqrt_int(-n)
    if n == 0:
        return ZERO
    square, free = 1, 1
    rest = n
    for p in _prime_factors(n):
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        square *= p ** (e // 2)
        if e % 2:
            free *= p
    out = CycScalar.coerce(square)
    for p in _prime_factors(free):
        out = out * _sqrt_prime(p)
    return out


def sqrt_rational(x) -> CycScalar:
    """Principal square root of a rational number, as a cyclotomic."""
    x = Fraction(x)
    return _sqrt_int(x.numerator * x.denominator) * Fraction(1, x.denominator)


def root_exponent(x: CycScalar, bound: int | None = None) -> tuple[int, int] | None:
    """Return (k, M) with x == zeta_M^k, M minimal, or None if x is not a root of unity."""
    x = CycScalar.coerce(x)
    if x.is_zero():
        return None
    z = x.to_complex()
    if abs(abs(z) - 1) > 1e-9:
        return None
    m, _ = x.canonical()
    order = 2 * m if m % 2 else m
    if bound is not None:
        order = math.lcm(order, bound)
    k = round(cmath.phase(z) / (2 * math.pi) * order) % order
    if make_root(k, order) != x:
        return None
    g = math.gcd(k, order)
    return (k // g, order // g) if k else (0, 1)
