import math

import pytest

fieldsym = pytest.importorskip("fieldsym")


def test_commands_listed():
    assert "spectrum" in fieldsym.command_names()
    assert len(fieldsym.command_names()) == 6


def test_spectrum_document():
    doc, code = fieldsym.execute("spectrum", {"ode": {"C": "-3/4", "D": 2}, "spectrum": {"n_max": 2}})
    assert code == 0
    assert doc["schema_version"] == fieldsym.SCHEMA_VERSION
    assert list(doc)[:3] == ["schema_version", "command", "config"]
    values = [e["E_hat"] for e in doc["branches"]["positive_root"]["entries"]]
    assert values == ["-4/9", "-4/25", "-4/49"]


def test_config_error_names_key():
    with pytest.raises(fieldsym.ConfigError, match="ode.D"):
        fieldsym.execute("spectrum", {"ode": {"C": "-3/4"}})
    assert issubclass(fieldsym.ConfigError, fieldsym.FieldsymError)


def test_symmetry_ode_n2():
    doc, code = fieldsym.execute("symmetry-ode", {"symmetry": {"ansatz": 2}})
    assert code == 0
    fam = doc["families"][0]
    assert fam["constraints"] == {"C": "-2", "E_hat": "-1/4*D^2"}
    assert fam["back_substitution"] == "0"


def test_casimir():
    assert fieldsym.casimir("0") == "-3/16"
    assert fieldsym.casimir("3/16") == "-15/64"


def test_fd_spectrum_matches_exact():
    ev = fieldsym.fd_spectrum(-0.75, 2.0, count=2, points=4000, tolerance=1e-2)
    for n, e in enumerate(ev):
        assert math.isclose(e, -4 / (2 * n + 3) ** 2, rel_tol=1e-3)


def test_parse_toml():
    assert fieldsym.parse_toml('[ode]\nC = "-3/4"\n') == {"ode": {"C": "-3/4"}}


def test_acceptance_all_pass():
    rows = fieldsym.acceptance()
    assert [r["id"] for r in rows] == list(range(1, 10))
    assert all(r["passed"] for r in rows)
