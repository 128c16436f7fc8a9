import seshcert


def test_arithmetic():
    assert seshcert.q_sign("-7/5", "1", 2) == 1
    assert seshcert.q_sign("-3/2", "1", 2) == -1
    assert seshcert.ceil_sqrt(50) == 8
    assert seshcert.k_cutoff("1/100") == 50


def test_verify_pass_and_fail():
    ok = seshcert.verify_delta(2, "31/1000")
    assert ok["verdict"] == "PASS"
    assert ok["survivors"] == []
    bad = seshcert.verify_delta(2, "1/100")
    assert bad["verdict"] == "FAIL"
    witness = {(s["k"], s["m"], s["M"], s["case"], s["f"]) for s in bad["survivors"]}
    assert (7, 5, 5, "F1", -2) in witness


def test_table_and_compare():
    rows = seshcert.comparison_table(10, 10)
    assert rows[0]["r"] == 10
    assert seshcert.compare_thm_vs_szsz(22, "13/1000") == 1
    assert seshcert.compare_thm_vs_szsz(23, "13/1000") == -1


def test_tail_and_cli():
    assert seshcert.tail_threshold(49) == 2398
    status, out, _ = seshcert.run_cli(["cutoff", "--delta", "0.01"])
    assert (status, out) == (0, "50\n")
    status, _, _ = seshcert.run_cli(["verify", "--r", "4", "--delta", "0.01"])
    assert status == 2
