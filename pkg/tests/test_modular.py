import math

import pytest

from gzest.catdata import builtin, pointed_braided, ty_default, vect_q
from gzest.groupcoh import cyclic_group, direct_product
from gzest.modular import (
    NotSpherical,
    hopf_trace,
    s_blocks,
    twists,
    zested_s_tilde,
    zested_theta_tilde,
)
from gzest.scalars import ONE, ZERO, make_root, sqrt_rational
from gzest.zesting import enumerate_cyclic, invertible_module

q = make_root(1, 3)

# basis ordered (g, h) lexicographically; one label per sector
VECT_Q_S = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, q * q, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, q],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, q, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, q * q, 0],
]


def as_scalar(v):
    return ONE if v == 1 else ZERO if v == 0 else v


def test_vect_q_full_matrix():
    md = s_blocks(vect_q(3))
    idx, mat = md.full_matrix()
    assert [sec for sec, _ in idx] == [(g, h) for g in range(3) for h in range(3)]
    assert mat == [[as_scalar(v) for v in row] for row in VECT_Q_S]
    assert md.is_monomial()
    assert md.twists == {0: ONE, 1: q, 2: q}


def test_trivial_q_gives_permutation():
    md = s_blocks(vect_q(3, 0))
    _, mat = md.full_matrix()
    assert all(v in (ZERO, ONE) for row in mat for v in row)
    assert all(t == ONE for t in md.twists.values())


def test_vec_s3_commuting_sectors():
    C = builtin("vec_g_omega", "S3")
    md = s_blocks(C, normalization="global")
    G = C.group
    inv_sqrt6 = sqrt_rational(6).inv()
    assert abs(inv_sqrt6.to_complex() - 1 / math.sqrt(6)) < 1e-12
    commuting = [(g, h) for g in G for h in G if G.m(g, h) == G.m(h, g)]
    assert sorted(md.sectors) == sorted(commuting)
    assert len(commuting) == 18
    for g, h in commuting:
        blk = md.blocks[(g, h)]
        assert blk.rows == [g] and blk.cols == [h]
        assert blk.entry(g, h) == inv_sqrt6
    assert all(t == ONE for t in md.twists.values())


def test_ty_z3_twists():
    T = ty_default(cyclic_group(3))
    th = twists(T)
    m = 3
    alpha = make_root(*_alpha_exp(T))
    # theta_a = chi(a, a) and theta_m = alpha / sqrt 3 * sum q(a)^-1
    for a in range(3):
        assert th[a] == T.r(a, a, 2 * a % 3)
    total = ZERO
    for a in range(3):
        total = total + T.r(a, m, m).inv()
    assert th[m] == alpha * sqrt_rational(3).inv() * total


def _alpha_exp(T):
    from gzest.scalars import CycScalar, root_exponent
    return root_exponent(CycScalar.from_text(T.meta["alpha"]))


def test_ty_dual_block_formula():
    T = ty_default(cyclic_group(3))
    md = s_blocks(T, convention="dual")
    blk = md.blocks[(0, 0)]
    s3 = sqrt_rational(3)
    for a in blk.rows:
        for b in blk.cols:
            if a == 3 or b == 3:
                continue
            chi = T.r((-a) % 3, b, (b - a) % 3) * T.r(b, (-a) % 3, (b - a) % 3)
            assert blk.entry(a, b) == chi / s3


def test_hopf_trace_oracle():
    # for pointed categories the double braiding is a single product of R symbols
    C = vect_q(5, 2)
    for x in range(5):
        for y in range(5):
            assert hopf_trace(C, x, y) == make_root(4 * x * y, 5)


def test_zested_relations_vect_q():
    C = vect_q(3)
    for D in enumerate_cyclic(C):
        s_cmp = zested_s_tilde(C, D)
        t_cmp = zested_theta_tilde(C, D)
        assert not s_cmp.invariant
        assert s_cmp.agree and t_cmp.agree
        assert s_cmp.compared == 9 and t_cmp.compared == 3


def test_zested_relations_report_differences():
    # C_e with nontrivial twists: the comparison is reported, not forced
    Z4 = cyclic_group(4)
    A = direct_product(Z4, Z4)
    C = pointed_braided(A, lambda a, b: A.coords(a)[0] * A.coords(b)[1]
                        + A.coords(a)[0] * A.coords(b)[0], 4,
                        grading=lambda a: A.coords(a)[1], G=Z4)
    statuses = set()
    for D in enumerate_cyclic(C):
        cmp = zested_theta_tilde(C, D)
        statuses |= {r.status for r in cmp.rows}
        for r in cmp.rows:
            assert r.status in ("agree", "differ", "structurally-changed")
    assert "agree" in statuses


def test_not_spherical():
    C = vect_q(3)
    bad = C.replace(pivotal=[ONE, -ONE, ONE])
    with pytest.raises(NotSpherical):
        s_blocks(bad)


def test_invalid_convention():
    with pytest.raises(ValueError):
        s_blocks(vect_q(3), convention="bogus")
    assert invertible_module(vect_q(3))[1] == [0]
