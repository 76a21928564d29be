import json
import shutil
import subprocess
import sys

import jsonschema
import pytest

from charvar.cli import main

POLY = {
    "type": "object",
    "required": ["vars", "terms"],
    "properties": {
        "vars": {"type": "array", "items": {"type": "string"}},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coef", "exp"],
                "properties": {"coef": {"type": "string"}, "exp": {"type": "array", "items": {"type": "integer"}}},
            },
        },
    },
}
COMPONENT = {
    "type": "object",
    "required": ["label", "genus", "gonality", "bidegree"],
    "properties": {"genus": {"type": "integer"}, "gonality": {"type": "integer"}},
}
SCHEMAS = {
    "invariants": {
        "type": "object",
        "required": ["k", "l", "bidegree", "components", "deg_irrationality"],
        "properties": {"components": {"type": "array", "items": COMPONENT}},
    },
    "phi": {"type": "object", "required": ["phi", "irr_model", "reducible"], "properties": {"phi": POLY}},
    "curve": {"type": "object", "required": ["curve", "irr_model", "components"], "properties": {"curve": POLY}},
    "split": {"type": "object", "required": ["components"]},
    "singular": {"type": "object", "required": ["m", "count", "points"]},
    "fibers": {"type": "object", "required": ["m", "fibers"]},
    "blowup": {"type": "object", "required": ["m", "chi", "n_sing", "N"]},
    "smooth": {"type": "object", "required": ["k", "l", "passed"]},
    "oracle": {"type": "object", "required": ["claim", "trials", "passed", "witness"]},
    "sweep": {"type": "object", "required": ["grid", "cells", "summary"]},
    "verify": {"type": "object", "required": ["suites", "passed"]},
    "error": {"type": "object", "required": ["error", "message"]},
}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["invariants", "--k", 5, "--l", 7],
        ["phi", "--k", 3, "--l", 5],
        ["curve", "--k", 5, "--l", -7],
        ["split", "--l", 7],
        ["singular", "--m", 2, "--crosscheck"],
        ["fibers", "--m", -2],
        ["blowup", "--m", 3],
        ["smooth", "--k", 5, "--l", 7, "--tol", 1e-7],
        ["oracle", "--claim", "phi", "--k", 3, "--l", 5, "--trials", 20, "--seed", 42],
        ["sweep", "--kmin", 3, "--kmax", 5, "--lmin", 3, "--lmax", 5],
    ],
)
def test_commands_emit_valid_json(capsys, argv):
    code, doc = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(doc, SCHEMAS[argv[0]])


def test_invariants_genus(capsys):
    _, doc = run(capsys, "invariants", "--k", 5, "--l", 7)
    assert doc["components"][0]["genus"] == 2


def test_non_hyperbolic_exit_2(capsys):
    code, doc = run(capsys, "invariants", "--k", 1, "--l", 5)
    assert code == 2
    assert doc["error"] == "NonHyperbolic"
    jsonschema.validate(doc, SCHEMAS["error"])


def test_even_parameter_exit_2(capsys):
    code, doc = run(capsys, "curve", "--k", 4, "--l", 5)
    assert code == 2 and doc["error"] == "InvalidParams"


def test_refutation_exit_3(capsys):
    code, doc = run(capsys, "oracle", "--claim", "model_product", "--k", 3, "--l", 5, "--fault", "kappa_sign")
    assert code == 3
    assert doc["error"] == "IdentityRefuted" and doc["witness"] is not None


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["invariants", "--k", "5"])
    assert err.value.code == 2


def test_sweep_examples(capsys):
    _, doc = run(capsys, "sweep", "--kmin", 3, "--kmax", 9, "--lmin", 3, "--lmax", 9)
    assert doc["summary"]["cells"] == 16
    for cell in doc["cells"]:
        rep = cell["report"]
        a, b = abs(cell["k"]) // 2, abs(cell["l"]) // 2
        if cell["k"] != cell["l"]:
            assert rep["components"][0]["genus"] == (a - 1) * (b - 1)
        else:
            assert len(rep["components"]) == (1 if abs(cell["l"]) == 3 else 2)
    _, doc = run(capsys, "sweep", "--kmin", 1, "--kmax", 3, "--lmin", 3, "--lmax", 5)
    marked = [c for c in doc["cells"] if c["k"] == 1]
    assert marked and all(c["error"] == "NonHyperbolic" for c in marked)


def test_sweep_parallel_matches_serial(capsys):
    _, serial = run(capsys, "sweep", "--kmin", -5, "--kmax", 5, "--lmin", 3, "--lmax", 7)
    _, parallel = run(capsys, "sweep", "--kmin", -5, "--kmax", 5, "--lmin", 3, "--lmax", 7, "--jobs", 2)
    assert serial == parallel


def test_verify_all(capsys):
    code, doc = run(capsys, "verify", "--suite", "all", "--jmax", 30, "--max-kl", 9, "--seed", 7)
    assert code == 0 and doc["passed"]
    assert set(doc["suites"]) >= {"identities", "phi", "singular", "fibers", "oracle", "smooth"}


def test_pretty_flag(capsys):
    main(["--pretty", "blowup", "--m", "1"])
    out = capsys.readouterr().out
    assert out.count("\n") > 2
    assert json.loads(out)["N_p2"] == 10


@pytest.mark.skipif(shutil.which("charvar") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["charvar", "invariants", "--k", "1", "--l", "5"], capture_output=True, text=True)
    assert res.returncode == 2
    assert json.loads(res.stdout)["error"] == "NonHyperbolic"
    assert res.stderr


def test_module_entry():
    res = subprocess.run([sys.executable, "-m", "charvar.cli", "blowup", "--m", "-2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["N"] == 12
