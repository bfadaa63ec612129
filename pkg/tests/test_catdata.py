import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gzest.catdata import (
    InvalidParams,
    InvariantViolation,
    SkeletalGxBFC,
    UnsupportedMultiplicity,
    builtin,
    check_all,
    check_heptagons,
    check_pentagon,
    global_dim_e,
    pointed_braided,
    spherical_check,
    su33_pointed,
    tambara_yamagami,
    ty_default,
    vec_g_omega,
    vect_q,
)
from gzest.groupcoh import Cochain, cyclic_group, direct_product, group_from_name, roots_module
from gzest.scalars import make_root, rational, sqrt_rational


def numeric_pentagon_failures(C):
    """Independent floating-point pentagon over every 4-tuple of labels."""
    L = range(C.size)
    f = {}

    def F(*k):
        if k not in f:
            f[k] = C.f(*k).to_complex()
        return f[k]

    bad = 0
    for a, b, c, d in itertools.product(L, repeat=4):
        for e in C.fuse(a, b):
            for fl in C.fuse(e, c):
                for x in C.fuse(fl, d):
                    for g in C.fuse(c, d):
                        for h in C.fuse(b, g):
                            # missing symbols default to 1, so admissibility is explicit
                            if x not in C.fuse(a, h) or x not in C.fuse(e, g):
                                continue
                            lhs = F(e, c, d, x, fl, g) * F(a, b, g, x, e, h)
                            rhs = sum((F(a, b, c, fl, e, k) * F(a, k, d, x, fl, h) * F(b, c, d, h, k, g)
                                       for k in C.fuse(b, c) if fl in C.fuse(a, k) and h in C.fuse(k, d)),
                                      0j)
                            bad += abs(lhs - rhs) > 1e-9
    return bad


COHERENT = {
    "vec_z3_b0": lambda: builtin("vec_g_omega", "Z3", b=0),
    "vec_z3_b1": lambda: builtin("vec_g_omega", "Z3", b=1),
    "vec_z3_b2": lambda: builtin("vec_g_omega", "Z3", b=2),
    "vec_s3": lambda: builtin("vec_g_omega", "S3", b=0),
    "vec_s3_sign": lambda: builtin("vec_g_omega", "S3", b=1),
    "vect_q_trivial": lambda: vect_q(3, 0),
    "vect_q": lambda: vect_q(3, 1),
    "ty_z3_plus": lambda: ty_default(cyclic_group(3), 1),
    "ty_z3_minus": lambda: ty_default(cyclic_group(3), -1),
    "ty_z2": lambda: ty_default(cyclic_group(2)),
    "ty_z4": lambda: ty_default(cyclic_group(4)),
    "ty_z2xz2": lambda: ty_default(group_from_name("Z2xZ2")),
    "su33": su33_pointed,
}


@pytest.mark.parametrize("name", sorted(COHERENT))
def test_builtins_are_coherent(name):
    C = COHERENT[name]()
    reports = check_all(C)
    assert [r.name for r in reports] == ["pentagon", "action-coherence", "heptagons"]
    assert all(r.passed and r.checked > 0 for r in reports), [str(r) for r in reports]


@pytest.mark.parametrize("name", ["vec_s3_sign", "ty_z3_minus", "ty_z2xz2"])
def test_pentagon_against_numeric_oracle(name):
    assert numeric_pentagon_failures(COHERENT[name]()) == 0


def test_ty_frozen_symbols():
    T = ty_default(cyclic_group(2))
    m = 2
    s = sqrt_rational(2).inv()
    # the m,m,m -> m block is tau * chi with tau = 1/sqrt 2
    block = [[T.f(m, m, m, m, a, b) for b in range(2)] for a in range(2)]
    assert block == [[s, s], [s, -s]]
    assert T.qdim[m] == sqrt_rational(2)
    assert global_dim_e(T) == sqrt_rational(2)
    assert spherical_check(T)


def test_corrupted_associator_fails_with_witness():
    T = ty_default(cyclic_group(3))
    key = (3, 3, 3, 3, 1, 1)
    broken = T.replace(F={**T.F, key: T.F[key] * make_root(1, 3)})
    rep = check_pentagon(broken)
    assert not rep.passed
    assert rep.failures == sorted(rep.failures, key=lambda w: tuple(map(str, w)))
    assert numeric_pentagon_failures(broken) > 0


def test_trivial_compositor_on_twisted_s3_fails():
    C = builtin("vec_g_omega", "S3", b=1)
    stripped = C.replace(eta={}, U={})
    names = [r.name for r in check_all(stripped) if not r.passed]
    assert names


def test_vec_g_omega_symbols():
    G = cyclic_group(3)
    C = builtin("vec_g_omega", "Z3", b=1)
    # omega_1(a, b, c) = q^(c) when a + b >= 3
    for a, b, c in itertools.product(G, repeat=3):
        expected = make_root(c, 3) if a + b >= 3 else rational(1)
        assert C.f(a, b, c, (a + b + c) % 3, (a + b) % 3, (b + c) % 3) == expected


# invariants ------------------------------------------------------------------


def z2_fusion(extra=None):
    fusion = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1}
    fusion.update(extra or {})
    return fusion


def test_invariant_violations():
    G = cyclic_group(2)
    with pytest.raises(InvariantViolation):
        SkeletalGxBFC(name="x", group=G, labels=["0", "1"], grade=[1, 1],
                      fusion=z2_fusion(), action=[[0, 1], [0, 1]])
    with pytest.raises(InvariantViolation):
        SkeletalGxBFC(name="x", group=G, labels=["0", "1"], grade=[0, 1],
                      fusion=z2_fusion(), action=[[0, 1], [1, 0]])
    with pytest.raises(InvariantViolation):
        SkeletalGxBFC(name="x", group=G, labels=["0", "0"], grade=[0, 1],
                      fusion=z2_fusion(), action=[[0, 1], [0, 1]])


def test_multiplicity_rejected():
    G = cyclic_group(1)
    fusion = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1, (1, 1, 1): 2}
    C = SkeletalGxBFC(name="x", group=G, labels=["1", "x"], grade=[0, 0], fusion=fusion,
                      action=[[0, 1]], qdim=[rational(1), rational(3)])
    with pytest.raises(UnsupportedMultiplicity):
        C.require_multiplicity_free()


def test_invalid_params():
    Z3 = cyclic_group(3)
    with pytest.raises(InvalidParams):
        tambara_yamagami(Z3, lambda a, b: 0, lambda a: 0, 3)
    with pytest.raises(InvalidParams):
        vec_g_omega(Z3, Cochain.constant(roots_module(Z3, 3), 3).with_value((1, 1, 1), 1))
    with pytest.raises(InvalidParams):
        builtin("vect_q", "S3")


# bicharacter-twisted braidings on Vec_A ----------------------------------------

ABELIAN = [(2,), (3,), (4,), (5,), (6,), (2, 2), (2, 4), (3, 3)]


def abelian(factors):
    G = cyclic_group(factors[0])
    for n in factors[1:]:
        G = direct_product(G, cyclic_group(n))
    return G


GROUPS = {f: abelian(f) for f in ABELIAN}


@st.composite
def bicharacters(draw):
    factors = draw(st.sampled_from(ABELIAN))
    r = len(factors)
    M = math.lcm(*factors)
    B = [[draw(st.integers(0, M - 1)) for _ in range(r)] for _ in range(r)]
    return factors, B


def bicharacter_exp(A, factors, B):
    M = math.lcm(*factors)

    def exp(a, b):
        ca, cb = A.coords(a), A.coords(b)
        return sum(ca[i] * cb[j] * B[i][j] * (M // math.gcd(factors[i], factors[j]))
                   for i in range(len(factors)) for j in range(len(factors)))
    return exp, M


@given(bicharacters())
def test_bicharacter_twisted_braidings_pass_heptagons(data):
    factors, B = data
    A = GROUPS[factors]
    exp, M = bicharacter_exp(A, factors, B)
    C = pointed_braided(A, exp, M)
    assert check_heptagons(C).passed


def test_non_bicharacter_fails_heptagons():
    A = cyclic_group(3)
    C = pointed_braided(A, lambda a, b: a * a * b, 9)
    assert not check_heptagons(C).passed
