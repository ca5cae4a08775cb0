import json
import subprocess
import sys

import pytest

from gkmloc.cli import run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


class TestSubcommands:
    def test_chern_byte_exact(self, capsys):
        code, out = capture(capsys, ["chern", "--a", "2", "--b", "1", "--monomial", "c1^3"])
        assert code == 0
        assert out == '{"value":"64"}\n'

    def test_chern_c1c2(self, capsys):
        code, out = capture(capsys, ["chern", "--a", "1", "--b", "3", "--monomial", "c1c2"])
        assert code == 0
        assert out == '{"value":"24"}\n'

    def test_weights(self, capsys):
        code, out = capture(capsys, ["weights", "--a", "7", "--b", "2", "--point", "x40"])
        assert code == 0
        assert out == '{"weights":[-12,-7,-5]}\n'

    def test_betti(self, capsys):
        code, out = capture(capsys, ["betti", "--a", "2", "--b", "1"])
        assert code == 0
        assert out == '{"betti":[1,0,2,0,2,0,1]}\n'

    def test_coprime_witness(self, capsys):
        code, out = capture(capsys, ["coprime", "--a", "3", "--b", "2"])
        assert code == 0
        assert json.loads(out) == {
            "coprime": False,
            "witness": {"point": "x03", "weights": [1], "reason": "unit_weight"},
        }

    def test_coprime_success(self, capsys):
        code, out = capture(capsys, ["coprime", "--a", "7", "--b", "2"])
        assert code == 0
        assert json.loads(out) == {"coprime": True}

    def test_spheres(self, capsys):
        code, out = capture(capsys, ["spheres", "--a", "7", "--b", "2"])
        assert code == 0
        payload = json.loads(out)
        assert len(payload["spheres"]) == 9
        orders = sorted(rec["order"] for rec in payload["spheres"])
        assert orders == [2, 2, 5, 5, 7, 7, 7, 9, 12]

    def test_graph_dump(self, capsys):
        code, out = capture(capsys, ["graph"])
        assert code == 0
        payload = json.loads(out)
        assert [p["id"] for p in payload["points"]] == \
            ["x00", "x03", "x11", "x13", "x21", "x40"]
        assert len(payload["edges"]) == 9

    def test_dh_volume(self, capsys):
        code, out = capture(capsys, ["dh-volume", "--a", "2", "--b", "1"])
        assert code == 0
        payload = json.loads(out)
        assert payload["volume"] == [
            {"i": 3, "j": 0, "c": "2"},
            {"i": 2, "j": 1, "c": "3"},
            {"i": 1, "j": 2, "c": "3"},
        ]
        rows = {rec["point"]: rec for rec in payload["table"]}
        assert rows["x00"]["weight_product"] == 6
        assert rows["x40"]["weights"] == [-3, -2, -1]

    def test_ring(self, capsys):
        code, out = capture(capsys, ["ring", "--k1", "-1", "--k2", "-1"])
        assert code == 0
        payload = json.loads(out)
        assert payload["c1"] == {"eta": "2", "xi": "2"}
        assert payload["c2"] == {"eta^2": "0", "eta*xi": "6"}
        assert payload["c1_cubed"] == 64
        assert payload["w2"] == [0, 0]
        assert payload["c1_even"] is True
        assert payload["jupp"]["trilinear"] == [[[2, 1], [1, 1]], [[1, 1], [1, 0]]]
        assert payload["jupp"]["p1_pairings"] == [8, 0]

    def test_jupp_defaults_match(self, capsys):
        code, out = capture(capsys, ["jupp"])
        assert code == 0
        payload = json.loads(out)
        assert payload["equivalent"] is True
        assert payload["trilinear_ok"] and payload["w2_ok"] and payload["p1_ok"]
        assert payload["graph_invariants"] == payload["bundle_invariants"]

    def test_jupp_mismatch_reported(self, capsys):
        code, out = capture(capsys, ["jupp", "--k2", "0"])
        assert code == 0
        payload = json.loads(out)
        assert payload["equivalent"] is False
        assert payload["trilinear_ok"] is False

    def test_toric_glue(self, capsys):
        code, out = capture(capsys, ["toric-glue"])
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["tilde"] == ["x00", "x11", "x21", "x40"]
        assert payload["hat"] == ["x03", "x13"]
        assert payload["problems"] == []

    def test_kahler_cone_obstructed(self, capsys):
        code, out = capture(capsys, ["kahler-cone", "--l1", "1", "--l2", "2"])
        assert code == 0
        assert json.loads(out) == {
            "verdict": "Obstructed", "n": 2, "pairing": "0", "certificate": "0"}

    def test_kahler_cone_rational_parameters(self, capsys):
        code, out = capture(capsys, ["kahler-cone", "--l1", "1", "--l2", "19/10"])
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "Obstructed"
        assert payload["certificate"] == "-1/10"

    def test_kahler_cone_unobstructed(self, capsys):
        code, out = capture(capsys, ["kahler-cone", "--l1", "1", "--l2", "3"])
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "NotObstructedByThisTest"
        assert payload["certificate"] is None


class TestErrorPaths:
    def test_invalid_kahler_parameters(self, capsys):
        code, out = capture(capsys, ["kahler-cone", "--l1", "2", "--l2", "1"])
        assert code == 1
        payload = json.loads(out)
        assert payload["error"]["code"] == "InvalidKahlerParameters"

    def test_unknown_point(self, capsys):
        code, out = capture(capsys, ["weights", "--a", "2", "--b", "1", "--point", "x99"])
        assert code == 1
        assert json.loads(out)["error"]["code"] == "NoSuchFixedPoint"

    def test_degenerate_subcircle(self, capsys):
        code, out = capture(capsys, ["betti", "--a", "1", "--b", "1"])
        assert code == 1
        assert json.loads(out)["error"]["code"] == "DegenerateWeight"

    def test_non_coprime_spheres(self, capsys):
        code, out = capture(capsys, ["spheres", "--a", "2", "--b", "1"])
        assert code == 1
        assert json.loads(out)["error"]["code"] == "NotCoprime"

    def test_axis_subcircle(self, capsys):
        code, out = capture(capsys, ["coprime", "--a", "0", "--b", "5"])
        assert code == 1
        assert json.loads(out)["error"]["code"] == "AxisSubcircle"

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            run(["chern", "--a", "2", "--b", "1", "--monomial", "c2^2"])
        assert err.value.code == 2

    def test_missing_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            run([])
        assert err.value.code == 2


class TestReproduceAll:
    def test_all_checks_pass(self, capsys):
        code, out = capture(capsys, ["reproduce-all"])
        assert code == 0
        payload = json.loads(out)
        results = payload["results"]
        assert results["failed"] == 0
        assert results["passed"] == results["total"] == len(payload["checks"])
        assert results["total"] >= 60
        assert all(rec["pass"] for rec in payload["checks"])

    def test_output_is_deterministic(self, capsys):
        _, first = capture(capsys, ["reproduce-all"])
        _, second = capture(capsys, ["reproduce-all"])
        assert first == second
        _, third = capture(capsys, ["ring", "--k1", "2", "--k2", "-3"])
        _, fourth = capture(capsys, ["ring", "--k1", "2", "--k2", "-3"])
        assert third == fourth


class TestConsoleEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "gkmloc", "chern", "--a", "2", "--b", "1",
             "--monomial", "c1^3"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == '{"value":"64"}\n'
