import json
import subprocess
import sys

import pytest

from qyangian.cli import desk_profile, run
from qyangian.fgen import c_element, f_element
from qyangian.pbw import Element


def call(argv, stdin="", capsys=None, monkeypatch=None):
    if monkeypatch is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_f_text(capsys):
    code, out, _ = call(["f", "--K", "1", "--i", "1", "--j", "1", "--n", "2", "--format", "text"], capsys=capsys)
    assert code == 0
    assert out.strip() == "F[1,1]^2 - F[1,1]"


def test_f_json_is_element_schema(capsys):
    code, out, _ = call(["f", "--K", "2", "--i", "2", "--j", "-1", "--n", "3"], capsys=capsys)
    assert code == 0
    assert Element.from_json(out) == f_element(2, -1, 3, 2)


def test_c_and_bracket(capsys):
    code, out, _ = call(["c", "--K", "2", "--n", "3"], capsys=capsys)
    assert Element.from_json(out) == c_element(3, 2)
    code, out, _ = call(
        ["bracket", "--K", "2", "--i", "1", "--j", "2", "--k", "2", "--l", "1", "--format", "text"],
        capsys=capsys,
    )
    assert code == 0 and out.strip() == "F[1,1] - F[2,2]"


def test_mul(capsys, monkeypatch):
    a = Element.parse("F[2,1]", 2).to_dict()
    b = Element.parse("F[1,2]", 2).to_dict()
    code, out, _ = call(["mul", "--format", "text"], json.dumps([a, b]), capsys, monkeypatch)
    assert code == 0
    assert out.strip() == "F[1,2]*F[2,1] - F[1,1] + F[2,2]"


def test_alpha(capsys, monkeypatch):
    src = c_element(1, 2).to_json()
    code, out, _ = call(["alpha", "--N", "1", "--M", "1"], src, capsys, monkeypatch)
    assert code == 0
    assert Element.from_json(out) == c_element(1, 1)


def test_alpha_not_in_centralizer(capsys, monkeypatch):
    src = Element.parse("F[1,2]", 2).to_json()
    code, _, err = call(["alpha", "--N", "1", "--M", "1"], src, capsys, monkeypatch)
    assert code == 2
    assert "not-in-centralizer" in err


def test_bad_stdin(capsys, monkeypatch):
    code, _, err = call(["alpha", "--N", "1", "--M", "1"], "{nope", capsys, monkeypatch)
    assert code == 2 and "JSON" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["f", "--K", "1"],
        ["f", "--K", "1", "--i", "1", "--j", "1", "--n", "2", "--bogus"],
        ["yang", "verify", "tau", "--N", "1"],
        ["sym", "verify", "independence", "--N", "1"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _, err = call(argv, capsys=capsys)
    assert code == 2
    assert err


def test_bounds(capsys):
    code, _, err = call(["f", "--K", "5", "--i", "1", "--j", "1", "--n", "1"], capsys=capsys)
    assert code == 2 and "unsafe-large" in err
    code, _, _ = call(["yang", "verify", "omega", "--N", "1", "--mmax", "5", "--nmax", "4"], capsys=capsys)
    assert code == 2
    code, _, _ = call(
        ["f", "--K", "5", "--i", "1", "--j", "1", "--n", "1", "--unsafe-large"], capsys=capsys
    )
    assert code == 0


def test_invalid_index(capsys):
    code, _, err = call(["f", "--K", "1", "--i", "2", "--j", "1", "--n", "1"], capsys=capsys)
    assert code == 2 and "out of range" in err


def test_yang_expand_and_verify(capsys):
    code, out, _ = call(
        ["yang", "expand", "tau", "--N", "1", "--M", "1", "--i", "1", "--j", "-1", "--n", "1",
         "--format", "text"],
        capsys=capsys,
    )
    assert code == 0 and out.strip() == "F[1,-1]"
    code, out, _ = call(["yang", "expand", "rel", "--N", "1", "--m", "2", "--n", "1",
                         "--i", "1", "--j", "-1", "--k", "1", "--l", "1"], capsys=capsys)
    assert code == 0 and json.loads(out)["algebra"]["family"] == "free"
    code, out, _ = call(["yang", "expand", "comult", "--N", "1", "--i", "1", "--j", "1", "--n", "1"],
                        capsys=capsys)
    assert code == 0 and json.loads(out)["legs"] == 2
    code, out, _ = call(["yang", "verify", "coassoc", "--N", "1", "--nmax", "2"], capsys=capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["reports"][0]["suite"] == "coassoc"


def test_sym_verbs(capsys, monkeypatch):
    code, out, _ = call(["sym", "psi", "--K", "1"], "[[1,1],[1,-1]]", capsys, monkeypatch)
    assert code == 0
    code, out, _ = call(["sym", "phi", "--format", "text"], out, capsys, monkeypatch)
    assert code == 0 and out.strip() == "F[1,-1]*F[1,1]"
    src = f_element(1, 1, 2, 1).to_json()
    code, out, _ = call(["sym", "symbol", "--format", "text"], src, capsys, monkeypatch)
    assert out.strip() == "F[1,1]^2"
    code, out, _ = call(["sym", "verify", "eh", "--n", "2", "--K", "1"], capsys=capsys)
    assert code == 0


def test_independence_exit_code(capsys):
    code, out, _ = call(["sym", "verify", "independence", "--s", "2", "--N", "1"], capsys=capsys)
    assert code == 0
    code, out, _ = call(["sym", "verify", "independence", "--s", "3", "--N", "1"], capsys=capsys)
    assert code == 1
    fails = json.loads(out)["reports"][0]["failures"]
    assert fails == [{"tuple": ["c-constant", 3], "delta": {"observed": "2", "stated": 8}}]


def test_profile_covers_every_suite_once():

    profile = desk_profile(1)
    funcs = {t[1] for tasks in profile.values() for t in tasks}
    wanted = {
        "verify_bracket", "verify_fnr", "verify_prop31", "verify_defrel", "verify_centrality",
        "verify_prop14", "verify_alpha_homomorphism", "verify_omega_correspondence",
        "verify_series_equivalence", "verify_tau_relations", "verify_coassociativity",
        "verify_primitive", "verify_phi_psi", "verify_eh", "verify_vanishing_sums", "_independence",
    }
    assert funcs == wanted
    # each suite name maps to exactly one function
    for name, tasks in profile.items():
        assert len({t[1] for t in tasks}) == 1, name


def test_verify_all_deterministic_across_jobs(capsys):
    argv = ["verify-all", "--only", "bracket,omega,coassoc,phipsi"]
    code1, out1, _ = call(argv + ["--jobs", "1"], capsys=capsys)
    code2, out2, _ = call(argv + ["--jobs", "2"], capsys=capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_all_unknown_suite(capsys):
    code, _, err = call(["verify-all", "--only", "nope"], capsys=capsys)
    assert code == 2 and "unknown" in err


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "qyangian.cli", "f", "--K", "1", "--i", "1", "--j", "1", "--n", "2",
         "--format", "text"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "F[1,1]^2 - F[1,1]"
