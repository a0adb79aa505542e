import json
import logging
from fractions import Fraction

import pytest

from curvefact.cli import main, parse_assignment, parse_plane
from curvefact.exceptions import InputFileError


@pytest.fixture
def run_json(static_dir, capsys):
    """Run the command line tool with JSON output, returning the exit code and report"""

    def _run(command: str, *inputs: str, options=()):
        code = main([command, *(str(static_dir / name) for name in inputs), "--json", *options])
        out = capsys.readouterr().out
        return code, json.loads(out) if out else None

    return _run


def test_verify_mf(run_json):
    code, report = run_json("verify-mf", "exc5mf.mf")
    assert code == 0
    assert report["checks"] == {
        "product": True,
        "minimality": True,
        "determinant": True,
        "syzygies": True,
    }
    assert report["results"]["b"] == 2
    assert report["results"]["witnesses"] == {}


def test_failed_check_exits_with_one(run_json):
    code, report = run_json("verify-mf", "exc5mf_perturbed.mf")
    assert code == 1
    assert not report["checks"]["product"]
    assert report["results"]["witnesses"]["product"].startswith("(d h)[1,1] - F = ")


def test_syntax_error_exits_with_two(static_dir, capsys):
    assert main(["invariants", str(static_dir / "broken.branch")]) == 2
    err = capsys.readouterr().err
    assert "Syntax Error: line 3, column 3: " in err


def test_mathematical_error_exits_with_one(static_dir, capsys):
    assert main(["is-algebra", str(static_dir / "cusp34.module"), "--trunc", "5"]) == 1
    assert "t^6 is needed" in capsys.readouterr().err


def test_usage_errors(static_dir, capsys):
    mf = str(static_dir / "noalg.mf")
    assert main(["verify-mf", mf, mf]) == 2
    assert main(["equiv-mf", mf]) == 2
    assert main(["invariants", mf]) == 2
    assert "expects a Branch input" in capsys.readouterr().err


def test_invariants(run_json):
    code, report = run_json("invariants", "m467.branch")
    assert code == 0
    assert report["results"]["multiplicity"] == 4
    assert report["results"]["mu_bar"] == 16
    assert report["inputs"]["coords"] == ["t^4", "t^6", "t^7"]
    assert all(report["checks"].values())


def test_cone5(run_json):
    code, report = run_json("cone5", "m467.branch", options=("--plane", "1,0,0,0,1,1"))
    assert code == 0
    assert report["results"]["generic_plane"] == "1,0,0,0,1,1"
    assert report["results"]["transversal"] is True


def test_implicitize_with_parameter(run_json):
    code, report = run_json("implicitize", "exc5def.branch", options=("--param", "s6=0"))
    assert code == 0
    assert report["results"]["y"] == "t^6 + t^7"
    assert report["checks"] == {"vanishes_on_branch": True}


def test_is_algebra(run_json):
    code, report = run_json("is-algebra", "cusp34.module")
    assert code == 0
    assert report["results"]["is_algebra"] is False
    assert report["results"]["product"] == "t^2"


def test_equiv_mf(run_json):
    code, report = run_json("equiv-mf", "noalg.mf", "noalg_swapped.mf", options=("--degree", "1"))
    assert code == 0
    assert report["results"]["verdict"] == "Inequivalent"
    assert report["caps"]["degree"] == 1


def test_matfact_from_module(run_json):
    code, report = run_json("matfact", "cusp34.module")
    assert code == 0
    assert report["results"]["generator_orders"] == [0, 1]
    assert all(report["checks"].values())


def test_check_generic_non_reduced(run_json):
    code, report = run_json("check-generic", "m467.branch", options=("--plane", "1,0,0,0,1,0"))
    assert code == 0
    assert report["results"]["generic"] is False
    assert report["results"]["reason"] == "NonReducedImage"
    assert any(w.startswith("TransversalityOverridden") for w in report["warnings"])


def test_check_generic_transversal_plane(run_json):
    code, report = run_json("check-generic", "m467.branch", options=("--plane", "1,0,0,0,1,1"))
    assert code == 0
    assert report["results"]["plane"]
    assert not any(w.startswith("TransversalityOverridden") for w in report["warnings"])


def test_yaml_output(static_dir, capsys):
    assert main(["is-algebra", str(static_dir / "cusp3_4_t5.module")]) == 0
    out = capsys.readouterr().out
    assert "command: is-algebra" in out
    assert "is_algebra: true" in out


def test_invalid_config(static_dir, tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text('{"trunc_cap": 1}')
    assert main(["verify-mf", str(static_dir / "noalg.mf"), "--config", str(config)]) == 2
    assert "Invalid configuration" in capsys.readouterr().err


def test_parse_plane():
    assert str(parse_plane("1, 0, 0, 0, 1, 1")) == "1,0,0,0,1,1"
    assert parse_plane("1,0,0,0,1,s").params == ("s",)
    with pytest.raises(InputFileError, match="empty entry"):
        parse_plane("1,,0,0")
    with pytest.raises(InputFileError, match="cannot use t"):
        parse_plane("1,0,0,0,1,t")


def test_parse_assignment():
    assert parse_assignment(["s6=0", "s7 = 1/2"]) == {"s6": 0, "s7": Fraction(1, 2)}
    assert parse_assignment(None) == {}
    with pytest.raises(InputFileError, match="NAME=RATIONAL"):
        parse_assignment(["s6"])
    with pytest.raises(InputFileError):
        parse_assignment(["6s=1"])


@pytest.fixture
def saved_settings():
    """Restore the configuration and the console level changed by `--config`"""
    from curvefact.config import CONFIG
    from curvefact.logger import CONSOLE_HANDLER

    fields = CONFIG.dict()
    level = CONSOLE_HANDLER.level
    yield CONSOLE_HANDLER
    for name, value in fields.items():
        setattr(CONFIG, name, value)
    CONSOLE_HANDLER.setLevel(level)


def test_config_log_level(run_json, tmp_path, saved_settings):
    config = tmp_path / "config.json"
    config.write_text('{"log_level": "debug"}')
    code, _ = run_json("verify-mf", "exc5mf.mf", options=("--config", str(config)))
    assert code == 0
    assert saved_settings.level == logging.DEBUG


def test_verbosity_overrides_config(run_json, tmp_path, saved_settings):
    config = tmp_path / "config.json"
    config.write_text('{"log_level": "error"}')
    code, _ = run_json("verify-mf", "exc5mf.mf", options=("--config", str(config), "-v"))
    assert code == 0
    assert saved_settings.level == logging.INFO
