from fractions import Fraction

import stabkit


def frac(s):
    return Fraction(s)


def test_gram_matrices():
    g3 = stabkit.gram("clifford3")
    assert g3 == [
        ["1", "3", "7", "14"],
        ["0", "1", "3", "7"],
        ["-1", "0", "1", "3"],
        ["-3", "-1", "0", "1"],
    ]
    g2 = stabkit.gram("clifford2")
    assert g2 == [["2", "3", "6"], ["3", "2", "3"], ["6", "3", "2"]]
    assert stabkit.gram("kappaY") == [["-1", "-1"], ["0", "-1"]]


def test_characters_and_todd():
    assert stabkit.chern("C0") == ["8", "-12", "12", "-9"]
    assert stabkit.chern("C1") == ["8", "-8", "7", "-13/3"]
    assert stabkit.todd("Y5") == ["1", "2", "25/12", "3/2", "73/90", "1/3"]
    assert stabkit.delta("C2") == "0"


def test_tilt_values():
    assert stabkit.nu("C1", "1/64", "-5/4") == "3/32"
    assert Fraction(stabkit.nu("C1", "1/64", "-5/4")) == Fraction(3, 32)
    assert stabkit.z_tilt("C1", "1/64", "-5/4") == ("-3/16", "2")
    assert stabkit.v_point("C0") == ("-1/4", "1/32")
    assert stabkit.v_point("psi_P_Pi") == ("inf", "0")


def test_projection_and_orbit():
    assert stabkit.project_ku("I_Pi") == ("0", "1")
    assert stabkit.project_ku("I_Pi(1)") == ("-1", "0")
    orbit = stabkit.serre_orbit(1, 0)
    assert len(orbit) == 6
    assert ("0", "1") in orbit


def test_walls():
    walls = stabkit.walls("psi_P_Pi", "-5/4", 5)
    assert len(walls) == 1
    assert walls[0]["alpha_sq"] == "1/16"
    subs = {r["sub_char"] for r in walls[0]["realizers"]}
    assert subs == {("8", "2", "1/4")}
    assert stabkit.walls("C1", "-5/4", 3) == []


def test_pick_tree():
    tree = stabkit.pick_tree(2, 1)
    assert not tree["leaf"]
    assert tree["minus"]["v"] == ("1", "0")
    assert tree["plus"]["v"] == ("1", "1")
    assert tree["plus"]["orbit"] == "kappa1+kappa2-orbit"


def test_gepner_and_plots():
    assert stabkit.gepner_check("1/100")
    hexagon = stabkit.plot_hexagon()
    assert hexagon.startswith("<svg")
    assert stabkit.plot_hexagon() == hexagon
    xieta = stabkit.plot_xieta(["C0", "C1"], True)
    assert "ell0" in xieta


def test_verify_suite():
    report = stabkit.verify()
    # Exactly one recorded failure: the stated P2 Gram determinant, which
    # contradicts its own matrix (true determinant 8).
    failing = [c["id"] for c in report["checks"] if not c["pass"]]
    assert failing == ["gram_p2_det_stated"]
    assert report["failures"] == 1
    ids = {c["id"] for c in report["checks"]}
    assert "gram_p3" in ids and "pick_suite" in ids
