import itertools

import numpy as np
import pytest

from gzest.catdata import builtin, check_all, pointed_braided, su33_pointed, ty_default, vect_q
from gzest.groupcoh import (
    Cochain,
    cyclic_group,
    cyclic_lambda,
    cyclic_xi,
    direct_product,
    group_from_name,
    is_cocycle,
    pullback,
    roots_module,
    sign_hom,
    symmetric_group,
)
from gzest.scalars import make_root
from gzest.zesting import (
    ZETA9,
    DatumInvalid,
    LambdaNotCocycle,
    NonCyclicGrading,
    NotTannakian,
    ZestingDatum,
    braided_promotions,
    enumerate_cyclic,
    invertible_module,
    pw_obstruction,
    trivial_datum,
    verify_datum,
    zest,
)


@pytest.fixture(scope="module")
def su33():
    return su33_pointed()


@pytest.fixture(scope="module")
def su33_data(su33):
    return enumerate_cyclic(su33, 3)


def graded_pointed(n, self_braid):
    """Vec_{Z_n x Z_n} graded by the second factor; C_e = Z_n."""
    Zn = cyclic_group(n)
    A = direct_product(Zn, Zn)

    def exp(a, b):
        x, y = A.coords(a), A.coords(b)
        return x[0] * y[1] + self_braid * x[0] * y[0]
    return pointed_braided(A, exp, n, grading=lambda a: A.coords(a)[1], G=Zn)


# zested fusion and the identity case ---------------------------------------------


@pytest.mark.parametrize("group, b", [("Z3", 1), ("Z3", 2), ("S3", 1)])
def test_zest_vec_g_by_omega_is_vec_g_omega(group, b):
    C = builtin("vec_g_omega", group, b=0)
    target = builtin("vec_g_omega", group, b=b)
    G = C.group
    if group == "S3":
        omega = pullback(cyclic_xi(cyclic_group(2), 1), sign_hom(G), G)
    else:
        omega = cyclic_xi(G, b)
    assert zest(C, trivial_datum(C, omega)).same_symbols(target)


def test_zested_fusion_rule(su33, su33_data):
    _, labels = invertible_module(su33)
    for D in su33_data:
        Z = zest(su33, D)
        for x, y in itertools.product(range(su33.size), repeat=2):
            gx, gy = su33.grade[x], su33.grade[y]
            (xy,) = su33.fuse(x, y)
            expected = su33.fuse(xy, labels[D.lam(gx, gy)])
            assert Z.fuse(x, y) == expected


def test_trivial_datum_is_identity():
    C = vect_q(3)
    assert zest(C, trivial_datum(C)).same_symbols(C)


# enumeration and promotion ---------------------------------------------------------


def test_su33_enumerates_nine_data(su33, su33_data):
    assert sorted(D.tag for D in su33_data) == [(a, b) for a in range(3) for b in range(3)]
    for D in su33_data:
        assert verify_datum(su33, D).passed
        assert is_cocycle(D.lam)[0] and D.lambda_normalized


def test_su33_closure(su33, su33_data):
    for D in su33_data:
        assert all(r.passed for r in check_all(zest(su33, D)))


# rows (a, b, j) with s = zeta^j, zeta = exp(-2 pi i / 9)
SU33_TABLE = sorted([(0, 0, 0), (0, 0, 3), (0, 0, 6),
                     (1, 2, 2), (1, 2, 8), (1, 2, 5),
                     (2, 1, 7), (2, 1, 4), (2, 1, 1)])


def test_su33_promotions_match_table(su33, su33_data):
    rows = []
    for D in su33_data:
        for P in braided_promotions(su33, D):
            j = next(j for j in range(9) if ZETA9 ** j == P.s)
            rows.append((P.a, P.b, j))
            # t(i, j) = s^(-ij) on sigma^i, sigma^j
            for g, h in itertools.product(range(3), repeat=2):
                assert P.t.scalar(g, h) == P.s ** (-(g * h))
            assert check_all(P.braided)[2].passed
    assert sorted(rows) == SU33_TABLE


def test_zeta_sign():
    assert ZETA9 == make_root(-1, 9)
    assert abs(ZETA9.to_complex().imag + 0.6427876096865393) < 1e-12


def test_promotion_needs_tannakian():
    C = graded_pointed(3, 1)
    D = enumerate_cyclic(C)[0]
    with pytest.raises(NotTannakian):
        braided_promotions(C, D)


def test_noncyclic_grading():
    with pytest.raises(NonCyclicGrading):
        enumerate_cyclic(builtin("vec_g_omega", "Z2xZ2"))
    with pytest.raises(NonCyclicGrading):
        enumerate_cyclic(vect_q(3), 4)


def test_vect_q_data():
    C = vect_q(3)
    data = enumerate_cyclic(C)
    # C_e is trivial, so lambda is forced and nu ranges over xi_b
    assert sorted(D.tag for D in data) == [(0, 0), (0, 1), (0, 2)]
    for D in data:
        assert D.lam.is_trivial()
        assert all(r.passed for r in check_all(zest(C, D)))


# obstruction -------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("self_braid", [0, 1])
def test_obstruction_trivializes(n, self_braid):
    C = graded_pointed(n, self_braid)
    mod, _ = invertible_module(C)
    for g in mod.base:
        lam = cyclic_lambda(mod, g)
        obs = pw_obstruction(C, lam)
        assert is_cocycle(obs.cocycle)[0]
        assert obs.vanishes
        assert verify_datum(C, ZestingDatum(lam, obs.repaired_nu)).passed


def test_obstruction_is_nontrivial_with_self_braiding():
    C = graded_pointed(3, 1)
    mod, _ = invertible_module(C)
    assert not pw_obstruction(C, cyclic_lambda(mod, 1)).cocycle.is_trivial()
    assert pw_obstruction(graded_pointed(3, 0), cyclic_lambda(mod, 1)).cocycle.is_trivial()


def test_obstruction_klein_grading():
    Z2 = cyclic_group(2)
    V = direct_product(Z2, Z2)
    A = direct_product(Z2, V)

    def exp(a, b):
        x, y = A.coords(a), A.coords(b)
        return x[0] * (y[1] + y[2]) + x[0] * y[0]
    C = pointed_braided(A, exp, 2, grading=lambda a: V.from_coords(A.coords(a)[1:]), G=V)
    mod, _ = invertible_module(C)
    gen = next(i for i in mod.base if i != mod.base.e)
    lam = Cochain.from_function(
        mod, 2, lambda g, h: gen if V.coords(g)[0] * V.coords(h)[1] else mod.base.e)
    assert is_cocycle(lam)[0]
    obs = pw_obstruction(C, lam)
    assert is_cocycle(obs.cocycle)[0]
    assert not obs.cocycle.is_trivial()
    if obs.vanishes:
        assert verify_datum(C, ZestingDatum(lam, obs.repaired_nu)).passed


# Tambara-Yamagami constraint -----------------------------------------------------------


def ty_admissible(T, M):
    """{h: [nu(m,m,m) values that pass]} for lambda supported at (m, m)."""
    G = T.group
    mod, labels = invertible_module(T)
    m_label = T.size - 1
    out = {}
    for h in mod.base:
        lam = Cochain.from_function(mod, 2, lambda a, b: h if (a, b) == (1, 1) else mod.base.e)
        if not is_cocycle(lam)[0]:
            continue
        ok = []
        for k in range(M):
            nu = Cochain.from_function(roots_module(G, M), 3,
                                       lambda a, b, c: k if (a, b, c) == (1, 1, 1) else 0)
            if verify_datum(T, ZestingDatum(lam, nu)).passed:
                ok.append(make_root(k, M))
        out[labels[h]] = (ok, T.r(labels[h], m_label, m_label))
    return out


@pytest.mark.parametrize("A", ["Z2", "Z4", "Z2xZ2"])
def test_ty_even(A):
    grp = group_from_name(A)
    T = ty_default(grp)
    found = ty_admissible(T, 16)
    order_two = sorted(a for a in grp if grp.m(a, a) == grp.e)
    assert sorted(found) == order_two
    for h, (ok, q) in found.items():
        assert sorted(ok, key=str) == sorted([q, -q], key=str)


@pytest.mark.parametrize("A", ["Z3", "Z5"])
def test_ty_odd(A):
    T = ty_default(group_from_name(A))
    found = ty_admissible(T, 24 if A == "Z3" else 40)
    assert sorted(found) == [0]
    assert sorted(found[0][0], key=str) == sorted([make_root(0, 1), make_root(1, 2)], key=str)


# rejected data --------------------------------------------------------------------------


def test_bad_data_rejected(su33):
    mod, _ = invertible_module(su33)
    G = su33.group
    bad_lam = Cochain.constant(mod, 2).with_value((1, 1), 1)
    nu = Cochain.constant(roots_module(G, 3), 3)
    with pytest.raises(LambdaNotCocycle):
        verify_datum(su33, ZestingDatum(bad_lam, nu))
    good = cyclic_lambda(mod, 1)
    rep = verify_datum(su33, ZestingDatum(good, nu.with_value((1, 1, 1), 1)))
    assert not rep.passed and rep.failures
    with pytest.raises(DatumInvalid):
        zest(su33, ZestingDatum(good, nu.with_value((1, 1, 1), 1)))


def test_s3_vec_zesting_by_nonabelian_omega():
    S3 = symmetric_group(3)
    C = builtin("vec_g_omega", "S3", b=0)
    omega = pullback(cyclic_xi(cyclic_group(2), 1), sign_hom(S3), S3)
    Z = zest(C, trivial_datum(C, omega))
    assert all(r.passed for r in check_all(Z))
    assert not np.array_equal(np.array([Z.f(*t).to_text() for t in Z.trees3()]),
                              np.array([C.f(*t).to_text() for t in C.trees3()]))
