import pytest

import weilmod

W = [[0, -1], [1, 0]]


def test_hilbert():
    assert weilmod.hilbert("qp:5", 5, 2) == -1
    assert weilmod.hilbert("qp:5", 2, 3) == 1
    assert weilmod.hilbert("fq:3", 2, 2) == 1


def test_omega_and_epsilon():
    assert weilmod.epsilon("fq:3") == -1
    assert weilmod.epsilon("fq:5") == 1
    w = weilmod.omega("fq:3", [1])
    assert w.order == 3
    assert w.coeffs == (1, 2)
    assert weilmod.hasse_product_holds("qp:3", [3, 1, "2/9"])


def test_cocycle():
    assert weilmod.cocycle_formula("qp:3", W, W) == weilmod.hilbert("qp:3", -1, -1)
    assert weilmod.cocycle_operator("qp:5", W, W) == weilmod.cocycle_formula("qp:5", W, W)
    assert weilmod.cocycle_operator("fq:3", W, [[1, 1], [0, 1]]) == 1
    assert weilmod.bruhat_cell("fq:5", W) == 1


def test_weil_and_theta():
    for q in (3, 5, 7):
        assert sorted(weilmod.weil_sp2_dims(q)) == [(q - 1) // 2, (q + 1) // 2]
    assert weilmod.theta_dims("fq:3", [[1]]) == {"trivial": 2, "det": 1}
    r = weilmod.congruence_check("fq:3", [[1]], "trivial", 7)
    assert r["brauer_match"] and r["idempotent_match"] and r["irreducible_ell"]


def test_errors():
    with pytest.raises(weilmod.WeilmodError):
        weilmod.congruence_check("fq:3", [[1]], "trivial", 2)
    with pytest.raises(ValueError):
        weilmod.cocycle_formula("qp:3", [[1, 1], [1, 1]], W)


def test_selfcheck_quick_suite():
    rows = weilmod.selfcheck(seed=7, quick=True, suites=["theta", "weil_decomposition"])
    assert [r["suite"] for r in rows] == ["theta", "weil_decomposition"]
    assert all(r["pass"] for r in rows)
    assert "finite_cocycle" in weilmod.selfcheck_suites()
