import json
import subprocess
import sys

import pytest

from ximod import Poly, PolyMatrix, SmithForm
from ximod.cli import main


def run_cli(args, stdin_text=""):
    proc = subprocess.run(
        [sys.executable, "-m", "ximod", *args],
        input=stdin_text.encode(),
        capture_output=True,
    )
    return proc


def run_main(capsys, args):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


SNF_PAYLOAD = json.dumps(
    {
        "field": "q",
        "rows": 2,
        "cols": 2,
        "entries": [[["0", "1"], ["0"]], [["0"], ["0", "0", "1"]]],
    }
)

DECOMPOSE_PAYLOAD = json.dumps(
    {
        "operator": {
            "field": "q",
            "rows": 2,
            "cols": 2,
            "entries": [["1", "0"], ["0", "1"]],
        }
    }
)


# -- exit code contract -----------------------------------------------------------

def test_snf_success_exit_zero(capsys, tmp_path):
    payload_file = tmp_path / "p.json"
    payload_file.write_text(SNF_PAYLOAD)
    code, out, _ = run_main(capsys, ["snf", "--input", str(payload_file), "--json"])
    assert code == 0
    report = json.loads(out)
    assert report["self_check"] == "ok"
    assert report["diagonal"] == [["0", "1"], ["0", "0", "1"]]


def test_malformed_json_exit_two(capsys, tmp_path):
    payload_file = tmp_path / "bad.json"
    payload_file.write_text("{not json")
    code, _, err = run_main(capsys, ["snf", "--input", str(payload_file)])
    assert code == 2
    assert "$" in err


def test_schema_violation_reports_path(capsys, tmp_path):
    payload_file = tmp_path / "bad.json"
    payload_file.write_text(
        json.dumps({"field": "q", "rows": 2, "cols": 2, "entries": [[["1"]]]})
    )
    code, _, err = run_main(capsys, ["snf", "--input", str(payload_file)])
    assert code == 2
    assert "$.entries" in err


def test_parse_error_exit_two_with_position(capsys):
    code, _, err = run_main(
        capsys, ["equiv", "--rules", "standard", "--lhs", "([1,0],[1)", "--rhs", "([1],[1])"]
    )
    assert code == 2
    assert "column" in err


def test_equiv_dimension_mismatch_exit_two(capsys):
    code, _, err = run_main(
        capsys,
        ["equiv", "--rules", "standard", "--lhs", "([1,0],[1])", "--rhs", "([1],[1])"],
    )
    assert code == 2


def test_unknown_demo_exit_two(capsys):
    code, _, err = run_main(capsys, ["demo", "nothing"])
    assert code == 2
    assert "unknown demo" in err


def test_self_check_failure_exit_three(capsys, tmp_path, monkeypatch):
    # corrupt the computation behind the scenes: the CLI must notice and
    # report through the dedicated exit code
    import ximod.cli as cli

    def broken_snf(P):
        good = smith_normal_form_original(P)
        bad_d = PolyMatrix.diagonal(P.field, [Poly.one(P.field)] * min(P.rows, P.cols))
        return SmithForm(U=good.U, D=bad_d, V=good.V)

    from ximod import smith_normal_form as smith_normal_form_original

    monkeypatch.setattr(cli, "smith_normal_form", broken_snf)
    payload_file = tmp_path / "p.json"
    payload_file.write_text(SNF_PAYLOAD)
    code, _, err = run_main(capsys, ["snf", "--input", str(payload_file)])
    assert code == 3
    assert "self-check" in err


# -- determinism ---------------------------------------------------------------------

@pytest.mark.parametrize(
    "args,stdin_text",
    [
        (["demo", "example61"], ""),
        (["demo", "example61", "--json"], ""),
        (["demo", "example61", "--random", "--seed", "3", "--json"], ""),
        (["demo", "branching", "--json"], ""),
        (["demo", "register", "--json"], ""),
        (["snf", "--json"], SNF_PAYLOAD),
        (["decompose", "--primary", "--json"], DECOMPOSE_PAYLOAD),
    ],
    ids=["ex61", "ex61-json", "ex61-random", "branching", "register", "snf", "decompose"],
)
def test_golden_runs_byte_identical(args, stdin_text):
    first = run_cli(args, stdin_text)
    second = run_cli(args, stdin_text)
    assert first.returncode == 0, first.stderr.decode()
    assert second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout  # nonempty output


# -- command behaviour ------------------------------------------------------------------

def test_decompose_operator_with_primary(capsys, tmp_path):
    payload_file = tmp_path / "p.json"
    payload_file.write_text(DECOMPOSE_PAYLOAD)
    code, out, _ = run_main(
        capsys, ["decompose", "--primary", "--input", str(payload_file), "--json"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["free_rank"] == 0
    assert report["invariant_factors"] == [["-1", "1"], ["-1", "1"]]
    assert report["primary"] == [{"prime": ["-1", "1"], "exponents": [1, 1]}]
    assert report["flags"] == {
        "is_torsion": True,
        "is_torsion_free": False,
        "is_free": False,
    }


def test_decompose_free_presentation(capsys, tmp_path):
    payload = {
        "presentation": {"field": "q", "rows": 2, "cols": 0, "entries": [[], []]}
    }
    payload_file = tmp_path / "p.json"
    payload_file.write_text(json.dumps(payload))
    code, out, _ = run_main(capsys, ["decompose", "--input", str(payload_file)])
    assert code == 0
    assert "M ~= R^2" in out


def test_decompose_incomplete_factorization_is_warning_not_failure(capsys, tmp_path):
    # companion of the rootless quartic (x^2+1)(x^2+2)
    payload = {
        "operator": {
            "field": "q",
            "rows": 4,
            "cols": 4,
            "entries": [
                ["0", "0", "0", "-2"],
                ["1", "0", "0", "0"],
                ["0", "1", "0", "-3"],
                ["0", "0", "1", "0"],
            ],
        }
    }
    payload_file = tmp_path / "p.json"
    payload_file.write_text(json.dumps(payload))
    code, out, _ = run_main(
        capsys, ["decompose", "--primary", "--input", str(payload_file), "--json"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["primary"] is None
    assert "factorization_incomplete" in report["warning"]


def test_decompose_primary_over_prime_field(capsys, tmp_path):
    payload = {
        "operator": {
            "field": "fp",
            "p": 5,
            "rows": 3,
            "cols": 3,
            "entries": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]],
        }
    }
    payload_file = tmp_path / "p.json"
    payload_file.write_text(json.dumps(payload))
    code, out, _ = run_main(
        capsys, ["decompose", "--primary", "--input", str(payload_file), "--json"]
    )
    assert code == 0
    report = json.loads(out)
    # diag(1, 1, 2) decomposes as (x - 1) | (x - 1)(x - 2)
    assert report["invariant_factors"] == [["4", "1"], ["2", "2", "1"]]
    assert report["primary"] == [
        {"prime": ["3", "1"], "exponents": [1]},
        {"prime": ["4", "1"], "exponents": [1, 1]},
    ]


def test_tensor_standard(capsys, tmp_path):
    payload_file = tmp_path / "p.json"
    payload_file.write_text(json.dumps({"field": "q", "n": 2, "m": 2}))
    code, out, _ = run_main(
        capsys, ["tensor", "--kind", "standard", "--input", str(payload_file), "--json"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["quotient_dim"] == 4
    assert report["relation_rank"] == 0


def test_tensor_opair_with_decomposition(capsys, tmp_path):
    payload = {
        "A": {"field": "q", "rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "2"]]},
        "B": {"field": "q", "rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "3"]]},
    }
    payload_file = tmp_path / "p.json"
    payload_file.write_text(json.dumps(payload))
    code, out, _ = run_main(
        capsys,
        ["tensor", "--kind", "opair", "--decompose", "--input", str(payload_file), "--json"],
    )
    assert code == 0
    report = json.loads(out)
    assert report["quotient_dim"] == 1
    assert report["induced_operator"]["entries"] == [["1"]]
    assert report["induced_decomposition"]["invariant_factors"] == [["-1", "1"]]


def test_tensor_scalar_a_shortcut(capsys):
    code, out, _ = run_main(
        capsys, ["tensor", "--kind", "branching", "--scalar-a", "2", "--json"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["quotient_dim"] == 0
    assert report["caveat"]

    code, out, _ = run_main(
        capsys, ["tensor", "--kind", "branching", "--scalar-a", "1", "--json"]
    )
    assert json.loads(out)["quotient_dim"] == 1


def test_tensor_dimension_mismatch_exit_two(capsys, tmp_path):
    payload = {
        "A": {"field": "q", "rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "2"]]},
        "B": {"field": "q", "rows": 1, "cols": 2, "entries": [["1", "0"]]},
    }
    payload_file = tmp_path / "p.json"
    payload_file.write_text(json.dumps(payload))
    code, _, _ = run_main(
        capsys, ["tensor", "--kind", "opair", "--input", str(payload_file)]
    )
    assert code == 2


def test_equiv_reports_asymmetry(capsys, tmp_path):
    payload = {
        "A": {"field": "q", "rows": 2, "cols": 2, "entries": [["2", "0"], ["0", "3"]]},
        "B": {"field": "q", "rows": 2, "cols": 2, "entries": [["2", "0"], ["0", "5"]]},
    }
    payload_file = tmp_path / "p.json"
    payload_file.write_text(json.dumps(payload))
    code, out, _ = run_main(
        capsys,
        [
            "equiv",
            "--rules",
            "opair",
            "--input",
            str(payload_file),
            "--lhs",
            "([2,3],[1,1])",
            "--rhs",
            "([1,1],[2,5])",
            "--json",
        ],
    )
    assert code == 0
    report = json.loads(out)
    assert report["equivalent"] is True
    assert report["standard_equivalent"] is False
    assert report["note"]


def test_equiv_identical_expressions(capsys):
    code, out, _ = run_main(
        capsys,
        ["equiv", "--rules", "standard", "--lhs", "([1,2],[3,4])", "--rhs", "([1,2],[3,4])", "--json"],
    )
    assert code == 0
    assert json.loads(out)["equivalent"] is True


def test_schmidt_command(capsys, tmp_path):
    payload_file = tmp_path / "p.json"
    payload_file.write_text(
        json.dumps({"field": "q", "n": 2, "m": 2, "coords": ["1", "0", "0", "1"]})
    )
    code, out, _ = run_main(capsys, ["schmidt", "--input", str(payload_file), "--json"])
    assert code == 0
    report = json.loads(out)
    assert report["schmidt_rank"] == 2
    assert report["classification"] == "entangled"


def test_snf_output_feeds_back_as_input(capsys, tmp_path):
    payload_file = tmp_path / "p.json"
    payload_file.write_text(SNF_PAYLOAD)
    code, out, _ = run_main(capsys, ["snf", "--input", str(payload_file), "--json"])
    assert code == 0
    first = json.loads(out)

    again = tmp_path / "d.json"
    again.write_text(json.dumps(first["D"]))
    code, out, _ = run_main(capsys, ["snf", "--input", str(again), "--json"])
    assert code == 0
    second = json.loads(out)
    # the smith form is a fixed point of itself
    assert second["D"] == first["D"]
    assert second["diagonal"] == first["diagonal"]


def test_field_flag_conflicts_with_payload(capsys, tmp_path):
    payload_file = tmp_path / "p.json"
    payload_file.write_text(SNF_PAYLOAD)
    code, _, err = run_main(
        capsys, ["snf", "--field", "fp:5", "--input", str(payload_file)]
    )
    assert code == 2


def test_demo_register_content(capsys):
    code, out, _ = run_main(capsys, ["demo", "register", "--json"])
    assert code == 0
    report = json.loads(out)
    ranks = {s["label"]: s["schmidt_rank"] for s in report["states"]}
    assert ranks["product e1 (x) (f1 + f2)"] == 1
    assert ranks["bell (1,0,0,1)"] == 2
    assert report["opair"]["quotient_dim"] == 1
    assert report["opair"]["induced_invariant_factors"] == [["-1", "1"]]


def test_demo_branching_dims(capsys):
    code, out, _ = run_main(capsys, ["demo", "branching", "--json"])
    assert code == 0
    report = json.loads(out)
    dims = {row["a"]: row["quotient_dim"] for row in report["table"]}
    assert dims == {"1": 1, "0": 0, "2": 0, "-1": 0, "1/2": 0}


def test_demo_example61_membership(capsys):
    code, out, _ = run_main(capsys, ["demo", "example61", "--json"])
    assert code == 0
    report = json.loads(out)
    inst = report["instances"][0]
    assert inst["difference_in_relations"] is True
    assert inst["classes_equal"] is True
    assert inst["standard_equal"] is False
