from fractions import Fraction

from djd import double, weyl

W = weyl.a2s_presentation()
G = {name: W.gen(name) for name in W.names}
D = double.dj_presentation()


def test_weyl_pairs():
    z, zp, q, p, t, xi = (G[n] for n in ("z", "zp", "q", "p", "t", "xi"))
    assert p * q - q * p == 1
    assert xi * t - t * xi == 1
    qi, ti = W.gen("q^-1"), W.gen("t^-1")
    assert p * qi - qi * p == -(qi * qi)
    assert xi * ti - ti * xi == -(ti * ti)
    assert z * p == p * z and zp * xi == xi * zp


def test_u_image_matches_raw_substitution():
    assert weyl.raw_u_image() == weyl.phi_gen("u")


def test_phi_of_q_collapses_to_q():
    assert weyl.phi(double.distinguished().q) == G["q"]


def test_phi_trivial_values():
    assert weyl.phi(D.one()) == 1
    assert weyl.phi(D.gen("g") * D.gen("g^-1")) == 1


def test_verify_phi():
    report = weyl.verify_phi()
    assert report.ok, report.failures
    # 17 relations + 49 ordered letter pairs at least
    assert len(report.checks) >= 66


def test_center_map():
    report = weyl.center_map_check()
    assert report.ok, report.failures


def test_phi_z_theta_minus_omega_squared():
    dist = double.distinguished()
    assert not weyl.phi(dist.z * dist.theta - dist.omega * dist.omega)


def test_degree0_consistency():
    report = weyl.degree0_consistency(count=10, seed=3)
    assert report.ok, report.failures


def test_f_hat_has_no_negative_p():
    assert all(m[W.index["p"]] >= 0 for m in weyl.f_hat().terms)
    assert weyl.phi_gen("y") == Fraction(-1, 2) * W.gen("t^-1") * G["q"] * G["q"] * G["p"]
