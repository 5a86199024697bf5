import math

import pytest

import wseq


def test_tabulate_factorials():
    v = wseq.tabulate("gevrey:s=1", 8)
    assert len(v) == 9
    assert v[7] == pytest.approx(math.log(5040))


def test_roundtrip_and_fixed_point():
    for j in (0, 2, 10, 40):
        assert wseq.reconstruct("gevrey:s=1", j, 128) == pytest.approx(math.lgamma(j + 1), abs=1e-6)
    m2 = wseq.multi_index("gevrey:s=1", 2.0, 20)
    for j, v in enumerate(m2):
        assert v == pytest.approx(math.lgamma(2 * j + 1) / 2, abs=1e-6)


def test_omega_point_value():
    assert wseq.omega("gevrey:s=1", math.e, 64) == pytest.approx(2 - math.log(2))


def test_phi_star_power_weight():
    # sup_y (x y - (e^y - 1)) = x log x - x + 1 for x >= 1
    xs = [1.0, 2.0, 5.0]
    got = wseq.phi_star("power:rho=1", xs)
    for x, v in zip(xs, got):
        assert v == pytest.approx(x * math.log(x) - x + 1, abs=1e-9)


def test_condition_and_index():
    assert wseq.check("L-roumieu", "gevrey:s=1")["verdict"] == "false"
    assert wseq.check("L-roumieu", "gevrey-matrix:xs=1,2")["verdict"] == "true"
    b = wseq.index("beta-L", "gevrey:s=1", "geom-shift:C=4")
    assert b["state"] == "infinite" and b["value"] == math.inf
    r = wseq.reciprocity("L", "gevrey:s=1", "gevrey:s=1")
    assert 0.9 <= r["product"] <= 1.1


def test_suite_deterministic():
    a = wseq._wseq.run_suite_json("thm32-I", "gevrey-matrix:xs=1,2", 0)
    b = wseq._wseq.run_suite_json("thm32-I", "gevrey-matrix:xs=1,2", 0)
    assert a == b
    assert wseq.run_suite("thm32-I", "gevrey-matrix:xs=1,2")["agreement"] == "true"


def test_errors():
    with pytest.raises(ValueError):
        wseq.tabulate("gevrey:s=-1", 8)
    with pytest.raises(ValueError):
        wseq.check("nonsense", "gevrey:s=1")
    assert "gevrey:s=1" in wseq.catalog()


def test_cli_exit_codes(tmp_path):
    out = tmp_path / "g.json"
    assert wseq.cli(["tabulate", "--family", "gevrey:s=1", "--J", "8", "--out", str(out)]) == 0
    assert out.exists()
    assert wseq.cli(["matrix", "--family", "gevrey:s=1", "--format", "csv", "--out", str(out)]) == 1
