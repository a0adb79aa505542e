import json

import pytest
from pydantic import ValidationError


def test_defaults():
    """Check the caps a fresh configuration starts from"""
    from curvefact.config import CurvefactConfig, LogLevel

    config = CurvefactConfig()
    assert config.log_level == LogLevel.WARNING
    assert config.trunc_cap == 512
    assert config.screen_depth == 3


def test_from_file(top_dir):
    """Load the test configuration; unknown keys are ignored"""
    from curvefact.config import CurvefactConfig, LogLevel

    config = CurvefactConfig.from_file(top_dir.joinpath("tests/test_config.json"))
    assert config.log_level == LogLevel.INFO
    assert config.trunc_factor == 6
    assert config.param_order == 4
    assert config.equivalence_degree == 1
    assert not hasattr(config, "not_a_setting")


def test_overrides(top_dir):
    from curvefact.config import CurvefactConfig

    config = CurvefactConfig.from_file(top_dir.joinpath("tests/test_config.json"), trunc_factor=2)
    assert config.trunc_factor == 2


def test_yaml_file(tmp_path):
    from curvefact.config import CurvefactConfig

    path = tmp_path / "config.yaml"
    path.write_text("plane_search_norm: 3\nscreen_depth: 5\n")
    config = CurvefactConfig.from_file(path)
    assert (config.plane_search_norm, config.screen_depth) == (3, 5)


def test_missing_file(tmp_path):
    from curvefact.config import load_config_file

    assert load_config_file(tmp_path / "absent.json") == {}


def test_empty_yaml_warns(tmp_path):
    from curvefact.config import load_config_file

    path = tmp_path / "empty.yaml"
    path.write_text("")
    with pytest.warns(UserWarning, match="Unable to load any settings"):
        assert load_config_file(path) == {}


@pytest.mark.parametrize(
    "values",
    [{"trunc_factor": 0}, {"trunc_cap": 4}, {"equivalence_degree": -1}, {"screen_depth": 0}],
)
def test_invalid_caps(tmp_path, values):
    from curvefact.config import CurvefactConfig

    path = tmp_path / "config.json"
    path.write_text(json.dumps(values))
    with pytest.raises(ValidationError):
        CurvefactConfig.from_file(path)
