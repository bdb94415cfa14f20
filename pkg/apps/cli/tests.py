import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.cli.report import ReportStatus, RunReport
from apps.xisolver.exceptions import InconsistentSystemError
from config.exception_handler import custom_exception_handler
from utils.exceptions import EXIT_MATH_FAILURE, EXIT_USAGE


@pytest.fixture
def run_command():
    def _run_command(name, *args):
        out, err = StringIO(), StringIO()
        try:
            call_command(name, *args, stdout=out, stderr=err)
            code = 0
        except CommandError as exc:
            code = exc.returncode
        return code, out.getvalue()

    return _run_command


@pytest.fixture
def run_json(run_command):
    def _run_json(name, *args):
        code, output = run_command(name, "--json", *args)
        return code, json.loads(output)

    return _run_json


def test_exception_handler_keeps_domain_code():
    report = custom_exception_handler(InconsistentSystemError("step2"), {"command": "solve_xi"})
    assert report.status == ReportStatus.FAIL
    assert report.code == EXIT_MATH_FAILURE
    assert report.payload == {"data": "step2"}


def test_exception_handler_unexpected_error():
    report = custom_exception_handler(ZeroDivisionError("boom"), {"command": "hilbert"})
    assert report.code == EXIT_MATH_FAILURE
    assert report.payload["data"] == "boom"


def test_report_json_is_sorted_and_versioned():
    report = RunReport(command="c", status=ReportStatus.PASS, message="ok", payload={"b": 1, "a": 2})
    data = json.loads(report.to_json())
    assert list(data) == sorted(data)
    assert data["version"] == "1"
    assert "elapsed_seconds" not in data


def test_ch_identity(run_command):
    code, output = run_command("ch_identity")
    assert code == 0
    assert output.startswith("[PASS] ch_identity")


def test_verify_lemma1(run_json):
    code, data = run_json("verify_lemma1")
    assert code == 0
    assert data["status"] == "pass"
    assert set(data["payload"]["residual_terms"].values()) == {0}


def test_hwv_three_three(run_json):
    code, data = run_json("hwv", "--degree", "3,3")
    assert code == 0
    assert data["payload"]["dimension"] == 1
    assert data["payload"]["basis"] == ["tr(XXYXYY) - tr(XXYYXY)"]


def test_hwv_products(run_json):
    code, data = run_json("hwv", "--degree", "4,4", "--factors", "2,3,3")
    assert code == 0
    assert data["payload"]["dimension"] == 1


def test_hwv_bad_factors_is_usage_error(run_command):
    code, _ = run_command("hwv", "--degree", "3,3", "--factors", "2,2")
    assert code == EXIT_USAGE


def test_hwv_malformed_degree():
    with pytest.raises(CommandError):
        call_command("hwv", "--degree", "three", stdout=StringIO(), stderr=StringIO())


@pytest.mark.parametrize(
    ("space", "expected"),
    [
        ("U2", {"(2,0)": 1}),
        ("U4", {"(4,0)": 1, "(2,2)": 1}),
        ("U6", {"(6,0)": 1, "(4,2)": 2, "(3,3)": 1}),
    ],
)
def test_decompose_trace_spaces(run_json, space, expected):
    code, data = run_json("decompose", "--space", space)
    assert code == 0
    assert data["payload"]["multiplicities"] == expected


def test_decompose_s_degree_six(run_json):
    code, data = run_json("decompose", "--space", "S", "--degree", "6")
    assert code == 0
    assert data["payload"]["multiplicities"] == {"(6,0)": 2, "(4,2)": 3}


def test_hilbert(run_json):
    code, data = run_json("hilbert", "--max-degree", "16")
    assert code == 0
    assert data["payload"]["series"]["(1,1)"] == "2"
    assert data["payload"]["series"]["(2,2)"] == "9"


def test_hilbert_small_degree_text(run_command):
    code, output = run_command("hilbert", "--max-degree", "4")
    assert code == 0
    assert "(2,2): 9" in output.splitlines()


def test_hilbert_mutation_fails(run_json):
    code, data = run_json("hilbert", "--max-degree", "12", "--mutate-factor", "10")
    assert code == EXIT_MATH_FAILURE
    assert data["status"] == "fail"
    assert data["payload"]["first_difference"]["key"] == [3, 3]


@pytest.mark.parametrize("variable", ["t1", "t2"])
def test_hilbert_mutation_either_variable(run_json, variable):
    code, data = run_json("hilbert", "--max-degree", "12", "--mutate-factor", "0", "--mutate-variable", variable)
    assert code == EXIT_MATH_FAILURE
    assert data["payload"]["mutate_variable"] == variable
    assert data["payload"]["first_difference"] == {"key": [1, 0], "expected": "1", "presented": "0"}


@pytest.mark.parametrize(
    "args",
    [
        ("hilbert", "--max-degree", "-1"),
        ("decompose", "--space", "S", "--max-degree", "-3"),
        ("decompose", "--space", "U6", "--max-degree", "-1"),
        ("decompose", "--space", "S", "--degree", "-2"),
        ("decompose", "--space", "S", "--degree", "3,5"),
    ],
)
def test_negative_or_invalid_degree_is_usage_error(run_json, args):
    code, data = run_json(*args)
    assert code == EXIT_USAGE
    assert data["status"] == "fail"


def test_decompose_partition_degree(run_json):
    code, data = run_json("decompose", "--space", "S", "--degree", "6,6")
    assert code == 0
    assert data["payload"]["degree"] == 12
    assert data["payload"]["partition"] == "(6,6)"
    assert data["payload"]["multiplicity"] == 8


def test_decompose_partition_degree_absent(run_json):
    code, data = run_json("decompose", "--space", "S", "--degree", "3,3")
    assert code == 0
    assert data["payload"]["multiplicity"] == 0


def test_reports_are_deterministic(run_json):
    _, first = run_json("decompose", "--space", "S", "--degree", "12")
    _, second = run_json("decompose", "--space", "S", "--degree", "12")
    first.pop("elapsed_seconds")
    second.pop("elapsed_seconds")
    assert first == second


def test_solve_xi_contradiction_exit_code(run_json, contradiction_at_step2):
    code, data = run_json("solve_xi")
    assert code == EXIT_MATH_FAILURE
    assert data["status"] == "fail"
    assert data["payload"] == {"data": "step2"}


@pytest.mark.slow
def test_verify_relation(run_json):
    code, data = run_json("verify_relation")
    assert code == 0
    assert data["payload"]["residual_terms"] == 0


@pytest.mark.slow
def test_verify_relation_corrupted(run_json):
    code, data = run_json("verify_relation", "--corrupt-xi", "4")
    assert code == EXIT_MATH_FAILURE
    assert data["status"] == "fail"


@pytest.mark.slow
def test_solve_xi(run_json):
    code, data = run_json("solve_xi")
    assert code == 0
    assert data["payload"]["xi"] == {
        "xi1": "1/27",
        "xi2": "-2/9",
        "xi3p": "4/15",
        "xi3pp": "1/90",
        "xi4": "1/3",
        "xi5": "-2/3",
        "xi6": "-1/3",
        "xi7": "-4/27",
    }


@pytest.mark.slow
def test_verify_relation_generic_x(run_json):
    code, data = run_json("verify_relation", "--generic-x")
    assert code == 0
    assert data["payload"]["context"] == "generic"
    assert data["payload"]["residual_terms"] == 0


@pytest.mark.slow
def test_verify_lemma1_generic_x(run_json):
    code, data = run_json("verify_lemma1", "--generic-x")
    assert code == 0
    assert set(data["payload"]["residual_terms"].values()) == {0}
