import json

import pytest

from masseybrauer.cli import _js_int, run


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestJsInt:
    def test_small_stay_ints(self):
        assert _js_int(7) == 7
        assert _js_int(-(2**53) + 1) == -(2**53) + 1

    def test_big_become_strings(self):
        assert _js_int(2**53) == str(2**53)
        assert _js_int(-(2**60)) == str(-(2**60))


class TestGroupCommands:
    def test_cohomology_klein(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "cohomology", "--group", "elab:2:2", "--p", "2", "--degree", "2"],
        )
        assert code == 0
        assert data["group_order"] == 4 and data["dim"] == 3
        assert len(data["representatives"]) == 3

    def test_massey_z3(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "massey", "--group", "cyclic:3", "--p", "3",
             "--chars", "[[1], [1], [1]]"],
        )
        assert code == 0
        assert data["defined"] is True
        assert data["contains_zero"] is False
        assert data["indeterminacy"] == []

    def test_massey_undefined(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "massey", "--group", "elab:2:2", "--p", "2",
             "--chars", "[[1, 0], [0, 1], [1, 0]]"],
        )
        assert code == 0
        assert data == {"defined": False}

    def test_scan_vanishing(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "scan-vanishing", "--group", "cyclic:3", "--p", "3",
             "--jobs", "2"],
        )
        assert code == 0
        assert data["holds"] is False
        assert {"triple": [[1], [1], [1]]} in data["witnesses"]
        assert len(data["triples"]) == 27

    def test_cup_res(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "cup-res", "--group", "elab:2:2", "--p", "2",
             "--chars", "[[1, 0], [0, 1]]"],
        )
        assert code == 0
        assert data["holds"] is True
        assert data["dim_image"] == data["dim_kernel"] == 3

    def test_u_hom(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "u-hom", "--group", "cyclic:4", "--p", "2",
             "--chars", "[[1], [1]]", "--n", "2"],
        )
        assert code == 0
        assert data["found"] is True and data["surjective"] is False
        for mat in data["generator_images"]:
            assert len(mat) == 3 and all(len(row) == 3 for row in mat)

    def test_u_hom_bar_absent_full(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "u-hom", "--group", "elab:2:2", "--p", "2",
             "--chars", "[[1, 0], [0, 1]]", "--n", "2"],
        )
        assert code == 0 and data == {"found": False}
        code, data = run_json(
            capsys,
            ["group", "u-hom", "--group", "elab:2:2", "--p", "2",
             "--chars", "[[1, 0], [0, 1]]", "--n", "2", "--bar"],
        )
        assert code == 0 and data["found"] is True

    def test_inline_table_group(self, capsys):
        table = json.dumps({"table": [[0, 1], [1, 0]]})
        code, data = run_json(
            capsys,
            ["group", "cohomology", "--group", table, "--p", "2", "--degree", "1"],
        )
        assert code == 0 and data["dim"] == 1

    def test_perm_group(self, capsys):
        spec = json.dumps({"perm_degree": 3, "generators": [[2, 3, 1]]})
        code, data = run_json(
            capsys,
            ["group", "cohomology", "--group", spec, "--p", "3", "--degree", "1"],
        )
        assert code == 0
        assert data["group_order"] == 3 and data["dim"] == 1

    def test_group_file(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"table": [[0, 1], [1, 0]]}))
        code, data = run_json(
            capsys,
            ["group", "cohomology", "--group", f"@{path}", "--p", "2", "--degree", "2"],
        )
        assert code == 0 and data["group_order"] == 2


class TestQCommands:
    def test_hilbert(self, capsys):
        code, data = run_json(
            capsys, ["q", "hilbert", "--a", "2", "--b", "3", "--place", "2"]
        )
        assert code == 0 and data == {"symbol": -1}
        code, data = run_json(
            capsys, ["q", "hilbert", "--a", "-1", "--b", "-1", "--place", "inf"]
        )
        assert code == 0 and data == {"symbol": -1}

    def test_invariants(self, capsys):
        code, data = run_json(
            capsys, ["q", "invariants", "--class", "[[2, 3]]"]
        )
        assert code == 0
        assert data == {
            "invariants": [
                {"place": "2", "inv": "1/2"},
                {"place": "3", "inv": "1/2"},
            ]
        }

    def test_invariants_sorted_real_first(self, capsys):
        code, data = run_json(
            capsys, ["q", "invariants", "--class", "[[-1, -1]]"]
        )
        assert code == 0
        assert [e["place"] for e in data["invariants"]] == ["inf", "2"]

    def test_split(self, capsys):
        code, data = run_json(
            capsys, ["q", "split", "--class", "[[2, 3]]", "--a", "[2]"]
        )
        assert code == 0 and data == {"splits": True}
        code, data = run_json(
            capsys, ["q", "split", "--class", "[[-1, -1]]", "--a", "[2]"]
        )
        assert code == 0 and data == {"splits": False}

    def test_decompose_and_verify_round_trip(self, capsys, tmp_path):
        code, cert = run_json(
            capsys, ["q", "decompose", "--class", "[[6, 5]]", "--a", "[2, 3]"]
        )
        assert code == 0 and cert["verified"] is True
        assert cert["a_list"] == [2, 3]
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(cert))
        code, data = run_json(capsys, ["q", "verify", "--cert", f"@{path}"])
        assert code == 0 and data == {"valid": True, "reason": "ok"}

    def test_verify_tampered(self, capsys):
        code, cert = run_json(
            capsys, ["q", "decompose", "--class", "[[2, 3]]", "--a", "[2]"]
        )
        assert code == 0
        cert["x_list"] = [15]
        code, data = run_json(capsys, ["q", "verify", "--cert", json.dumps(cert)])
        assert code == 0 and data["valid"] is False

    def test_decompose_non_splitting_is_error(self, capsys):
        code, data = run_json(
            capsys, ["q", "decompose", "--class", "[[-1, -1]]", "--a", "[2]"]
        )
        assert code == 1 and "error" in data


class TestExitCodes:
    def test_usage_error_is_2(self, capsys):
        assert run(["group", "cohomology", "--group", "cyclic:2"]) == 2
        assert run(["bogus"]) == 2
        capsys.readouterr()

    def test_domain_error_is_1(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "cohomology", "--group", "no-such-group", "--p", "2",
             "--degree", "1"],
        )
        assert code == 1 and "error" in data

    def test_bad_char_length_is_1(self, capsys):
        code, data = run_json(
            capsys,
            ["group", "massey", "--group", "cyclic:3", "--p", "3",
             "--chars", "[[1, 0], [1], [1]]"],
        )
        assert code == 1 and "error" in data


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["group", "scan-vanishing", "--group", "elab:2:2", "--p", "2"],
            ["q", "decompose", "--class", "[[6, 5]]", "--a", "[2, 3]"],
        ],
    )
    def test_byte_identical_output(self, capsys, argv):
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        assert capsys.readouterr().out == first
        assert first.endswith("\n")
