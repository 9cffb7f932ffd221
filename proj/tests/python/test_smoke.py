import math

import hendo


def test_chi_identity():
    a = hendo.FuzzySet.from_point_cuts(1, [1.0], [[[0.0], [2.0]]])
    b = hendo.FuzzySet.from_point_cuts(1, [1.0], [[[0.5]]])
    # characteristic functions: the distance is the Hausdorff gap capped at 1
    assert math.isclose(hendo.endograph_dist(a, b), min(1.5, 1.0))
    assert hendo.endograph_dist(a, a) == 0.0


def test_interval_cuts_and_membership():
    u = hendo.FuzzySet.from_interval_cuts([0.5, 1.0], [(0.0, 4.0), (1.0, 3.0)])
    assert u.height() == 1.0
    assert u.levels() == [0.5, 1.0]
    assert u.membership_real(2.0) == 1.0
    assert u.membership_real(0.5) == 0.5
    assert u.membership_real(9.0) == 0.0
    assert u == u


def test_variants_sandwich():
    u = hendo.FuzzySet.from_interval_cuts([0.8], [(0.0, 1.0)])
    v = hendo.FuzzySet.from_interval_cuts([0.6], [(0.5, 2.0)])
    s = hendo.endograph_dist(u, v, variant="sum")
    m = hendo.endograph_dist(u, v, variant="max")
    assert m <= s <= 2 * m + 1e-12


def test_gamma_and_escaping():
    seq = hendo.gen_escaping(12, 5.0)
    assert hendo.gamma_limit_check(seq, 2, seq[0], 0.1)
    assert hendo.endograph_dist(seq[5], seq[0]) == 1.0


def test_tb_audit():
    fam = hendo.gen_random_family(8, 3)
    grid = [i / 10 for i in range(1, 11)]
    rep = hendo.tb_audit(fam, 0.1, grid, 64)
    assert rep["pass"] and rep["family_net_ok"]

    esc = hendo.gen_escaping(20, 10.0)
    bad = hendo.tb_audit(esc, 0.2, grid, 4)
    assert not bad["family_net_ok"]


def test_diagonal_extract():
    member = hendo.FuzzySet.from_interval_cuts([1.0], [(0.0, 1.0)])
    rep = hendo.diagonal_extract([member] * 30, 1.0, [0.5, 0.25], [0.1, 0.05], 16)
    assert rep["ok"]
    assert len(rep["subsequence"]) == 2
    assert max(rep["final_residuals"]) <= 0.5


def test_classify():
    u = hendo.FuzzySet.from_interval_cuts([0.7], [(0.0, 2.0)])
    rep = hendo.classify(u)
    assert rep["is_usc"] and rep["is_uscg"] and rep["is_uscb"]
    assert not rep["is_normal"]


def test_rnce_distances():
    members, limit = hendo.gen_example_rnce(0.5, 4, 1e-2)
    for n in (1, 2, 4):
        d = hendo.endograph_dist(members[n - 1], limit)
        assert abs(d - min(1.0 / n, 0.5)) <= 1e-2


def test_determinism():
    a = hendo.gen_random_family(6, 9)
    b = hendo.gen_random_family(6, 9)
    assert all(x == y for x, y in zip(a, b))
