"""Tests for configuration loading."""

import os
import tempfile
from pathlib import Path
from unittest import mock

import pytest
from pydantic import ValidationError

from doublegraph.core.config import (
    P_HARD_CAP,
    Config,
    ProbeSettings,
    SuiteSettings,
    _resolve_env_vars,
    get_default_jobs,
    get_log_level,
    load_config,
)


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep ~/.doublegraph and the project .env out of these tests."""
    monkeypatch.setenv("HOME", str(tmp_path / "home"))
    monkeypatch.delenv("DOUBLEGRAPH_JOBS", raising=False)
    monkeypatch.delenv("DOUBLEGRAPH_LOG_LEVEL", raising=False)


def test_resolve_env_vars():
    """Test environment variable resolution."""
    with mock.patch.dict(os.environ, {"TEST_VAR": "test_value"}):
        assert _resolve_env_vars("Hello ${TEST_VAR}") == "Hello test_value"
        assert _resolve_env_vars({"key": ["${TEST_VAR}", 3]}) == {"key": ["test_value", 3]}
        assert _resolve_env_vars("${UNSET_DOUBLEGRAPH_VAR}") == "${UNSET_DOUBLEGRAPH_VAR}"


def test_load_config_empty():
    """Test loading config when no file exists."""
    orig_cwd = os.getcwd()
    try:
        with tempfile.TemporaryDirectory() as tmpdir:
            os.chdir(tmpdir)
            config = load_config()
            assert isinstance(config, Config)
            assert config.source is None
            assert config.suite.p_max == 5
            assert config.suite.n_values == [2, 3]
            assert config.probe.fixtures == ["fig4", "cubic_pair"]
            assert config.log_level == "WARNING"
    finally:
        os.chdir(orig_cwd)


def test_load_config_from_yaml():
    """Test loading config from YAML file."""
    yaml_content = """
suite:
  p_min: 3
  p_max: 4
  n_values: [3, 2, 3]
  seed: 11
  fixtures: [fig2]
probe:
  p_max: 7
logging:
  level: debug
  file: ${DG_LOG_DIR}/doublegraph.log
"""
    with tempfile.TemporaryDirectory() as tmpdir:
        config_path = Path(tmpdir) / "doublegraph.yaml"
        config_path.write_text(yaml_content)
        with mock.patch.dict(os.environ, {"DG_LOG_DIR": tmpdir}):
            config = load_config(config_path)

        assert config.source == config_path
        assert (config.suite.p_min, config.suite.p_max) == (3, 4)
        assert config.suite.n_values == [2, 3]
        assert config.suite.seed == 11
        assert config.suite.fixtures == ["fig2"]
        assert config.probe.p_max == 7
        assert config.log_level == "DEBUG"
        assert config.log_file == Path(tmpdir) / "doublegraph.log"


def test_config_file_search_in_cwd():
    orig_cwd = os.getcwd()
    try:
        with tempfile.TemporaryDirectory() as tmpdir:
            os.chdir(tmpdir)
            Path(tmpdir, ".doublegraph.yaml").write_text("suite:\n  p_max: 3\n")
            assert load_config().suite.p_max == 3
    finally:
        os.chdir(orig_cwd)


def test_p_max_hard_cap():
    with pytest.raises(ValidationError):
        SuiteSettings(p_max=P_HARD_CAP + 1)
    with pytest.raises(ValidationError):
        ProbeSettings(p_max=P_HARD_CAP + 1)
    assert SuiteSettings(p_max=P_HARD_CAP).p_max == P_HARD_CAP


def test_n_values_validated():
    with pytest.raises(ValidationError):
        SuiteSettings(n_values=[])
    with pytest.raises(ValidationError):
        SuiteSettings(n_values=[1, 2])


def test_suite_settings_clamps():
    """p_min and jobs are clamped; seeds are masked to 64 bits."""
    assert SuiteSettings(p_min=0).p_min == 1
    assert SuiteSettings(jobs=0).jobs == 1
    assert SuiteSettings(jobs=10**6).jobs == (os.cpu_count() or 1)
    assert SuiteSettings(seed=-1).seed == (1 << 64) - 1


def test_invalid_yaml_value_raises():
    with tempfile.TemporaryDirectory() as tmpdir:
        config_path = Path(tmpdir) / "doublegraph.yaml"
        config_path.write_text("suite:\n  p_max: 12\n")
        with pytest.raises(ValidationError):
            load_config(config_path)


def test_get_default_jobs():
    with mock.patch.dict(os.environ, {"DOUBLEGRAPH_JOBS": "1"}):
        assert get_default_jobs() == 1
    with mock.patch.dict(os.environ, {"DOUBLEGRAPH_JOBS": "0"}):
        assert get_default_jobs() == 1
    with mock.patch.dict(os.environ, {"DOUBLEGRAPH_JOBS": "many"}):
        assert get_default_jobs() == 1
    with mock.patch.dict(os.environ, {"DOUBLEGRAPH_JOBS": "100000"}):
        assert get_default_jobs() == (os.cpu_count() or 1)


def test_jobs_env_feeds_suite_settings():
    orig_cwd = os.getcwd()
    try:
        with tempfile.TemporaryDirectory() as tmpdir:
            os.chdir(tmpdir)
            with mock.patch.dict(os.environ, {"DOUBLEGRAPH_JOBS": "100000"}):
                assert load_config().suite.jobs == (os.cpu_count() or 1)
    finally:
        os.chdir(orig_cwd)


def test_get_log_level():
    with mock.patch.dict(os.environ, {"DOUBLEGRAPH_LOG_LEVEL": "info"}):
        assert get_log_level() == "INFO"
    with mock.patch.dict(os.environ, {"DOUBLEGRAPH_LOG_LEVEL": "chatty"}):
        assert get_log_level("ERROR") == "ERROR"
    assert get_log_level() == "WARNING"


def test_env_file_is_loaded():
    orig_cwd = os.getcwd()
    try:
        with tempfile.TemporaryDirectory() as tmpdir:
            os.chdir(tmpdir)
            Path(tmpdir, ".env").write_text("DOUBLEGRAPH_LOG_LEVEL=ERROR\n")
            with mock.patch.dict(os.environ, {}):
                assert load_config().log_level == "ERROR"
    finally:
        os.chdir(orig_cwd)
