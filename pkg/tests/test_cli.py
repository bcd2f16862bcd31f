import json

import pytest

from cusp_hierarchy.cli import (Report, cmd_classify, cmd_potential, cmd_report,
                                cmd_verify, main)


class TestClassify:
    def test_222(self):
        rep = cmd_classify(2, 2, 2)
        assert rep.status == "pass"
        assert rep.payload["type"] == "D4"
        assert rep.payload["kappa"] == 4
        assert rep.payload["positive_count"] == 12
        assert rep.payload["exponents"]["1.1"] == 2

    def test_235(self):
        rep = cmd_classify(2, 3, 5)
        assert rep.payload["type"] == "E8"
        assert rep.payload["kappa"] == 60

    def test_non_fano_exit_code(self, capsys):
        assert main(["classify", "3", "3", "3"]) == 2
        err = capsys.readouterr().err
        assert "chi" in err

    def test_exit_zero_on_pass(self, capsys):
        assert main(["classify", "2", "2", "2", "--json"]) == 0
        out = capsys.readouterr().out
        data = json.loads(out)
        assert data["schema"] == "cusp-hierarchy/1"
        assert data["payload"]["chi"] == "1/2"


class TestVerify:
    @pytest.mark.parametrize("suite", ["roots", "cocycle", "periods", "hqe", "gamma"])
    def test_222_suites_pass(self, suite):
        rep = cmd_verify(2, 2, 2, suite=suite)
        assert rep.status == "pass", rep.failures

    def test_hqe_names_the_constant(self):
        rep = cmd_verify(2, 2, 2, suite="hqe")
        check = next(c for c in rep.payload["checks"] if "sum_a_alpha" in c["identity"])
        assert check["value"] == "3/8"

    def test_all_on_degenerate_triple(self):
        rep = cmd_verify(1, 1, 1, suite="all")
        assert rep.status == "pass", rep.failures

    def test_roots_234(self):
        rep = cmd_verify(2, 3, 4, suite="roots")
        assert rep.status == "pass"
        assert rep.payload["root_count"] == 126

    def test_unknown_suite_is_usage_error(self):
        assert main(["verify", "2", "2", "2", "--suite", "roots", "--seed", "7"]) == 0
        with pytest.raises(SystemExit):
            main(["verify", "2", "2", "2", "--suite", "bogus"])

    def test_bad_triple_exit_2(self):
        assert main(["verify", "2", "4", "4"]) == 2


class TestPotential:
    def test_degree4_pass(self):
        rep = cmd_potential(4)
        assert rep.status == "pass"
        assert all(v["match"] for v in rep.payload["degrees"].values())

    def test_degree8_with_wdvv(self):
        rep = cmd_potential(8, wdvv=True)
        assert rep.status == "pass"
        assert rep.payload["wdvv"]["ok"]
        for d in ("5", "6", "7", "8"):
            assert rep.payload["degrees"][d]["value"] == "0"

    def test_degree0_rejected(self):
        assert main(["potential", "--max-degree", "0"]) == 2


class TestReportRoundTrip:
    @pytest.mark.parametrize("make", [
        lambda: cmd_classify(2, 3, 3),
        lambda: cmd_verify(2, 2, 2, suite="cocycle"),
        lambda: cmd_potential(4, wdvv=True),
        lambda: cmd_report(2, 2, 2),
    ])
    def test_json_round_trip(self, make):
        rep = make()
        again = Report.from_json(rep.to_json())
        assert again == rep
        assert json.loads(rep.to_json())["schema"] == "cusp-hierarchy/1"

    def test_report_payload_contents(self):
        rep = cmd_report(2, 2, 2)
        assert rep.payload["constant_term"] == "3/8"
        assert rep.payload["kappa"] == 4

    def test_deterministic_output(self):
        a = cmd_verify(2, 2, 3, suite="cocycle").to_json()
        b = cmd_verify(2, 2, 3, suite="cocycle").to_json()
        assert a == b


class TestOrderCap:
    def test_cap_blocks_large_order(self, monkeypatch):
        monkeypatch.setenv("CUSP_MAX_CYCLOTOMIC_ORDER", "16")
        assert main(["classify", "2", "3", "5"]) == 2

    def test_cap_can_be_raised(self, monkeypatch):
        monkeypatch.setenv("CUSP_MAX_CYCLOTOMIC_ORDER", "1024")
        rep = cmd_classify(2, 3, 5)
        assert rep.payload["kappa"] == 60
