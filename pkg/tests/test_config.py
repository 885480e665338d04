import logging
import os
from fractions import Fraction

from halvecut.core import config
from halvecut.core.bootstrap import early_load_env_file, split_env_file_argument


def test_int_settings_fall_back_on_bad_values(monkeypatch, caplog):
    monkeypatch.setenv("HALVECUT_TEST_INT", "many")
    with caplog.at_level(logging.WARNING):
        assert config._get_env_var_int("HALVECUT_TEST_INT", 7) == 7
    assert "HALVECUT_TEST_INT" in caplog.text
    monkeypatch.setenv("HALVECUT_TEST_INT", "0")
    assert config._get_env_var_int("HALVECUT_TEST_INT", 7, minimum=1) == 7
    monkeypatch.setenv("HALVECUT_TEST_INT", " 12 ")
    assert config._get_env_var_int("HALVECUT_TEST_INT", 7) == 12


def test_fraction_settings_stay_exact(monkeypatch):
    monkeypatch.setenv("HALVECUT_TEST_FRACTION", "6/5")
    assert config._get_env_var_fraction("HALVECUT_TEST_FRACTION", Fraction(1)) == Fraction(6, 5)
    monkeypatch.setenv("HALVECUT_TEST_FRACTION", "1.2")
    assert config._get_env_var_fraction("HALVECUT_TEST_FRACTION", Fraction(1)) == 1


def test_bool_settings(monkeypatch):
    for raw, expected in (("yes", True), ("0", False), ("perhaps", True)):
        monkeypatch.setenv("HALVECUT_TEST_BOOL", raw)
        assert config._get_env_var_bool("HALVECUT_TEST_BOOL", True) is expected


def test_defaults():
    assert config.DEFAULT_SVG_MARGIN == Fraction(6, 5)
    assert config.LOG_LEVEL in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def test_split_env_file_argument():
    assert split_env_file_argument(["--env-file", "a.env", "halve", "x"]) == ("a.env", ["halve", "x"])
    assert split_env_file_argument(["halve", "--env-file=b.env"]) == ("b.env", ["halve"])
    assert split_env_file_argument(["gen"]) == (None, ["gen"])


def test_early_load_env_file(tmp_path):
    env = tmp_path / "custom.env"
    env.write_text("HALVECUT_TEST_LOADED=42\n")
    try:
        assert early_load_env_file(str(env)) == str(env)
        assert os.environ["HALVECUT_TEST_LOADED"] == "42"
    finally:
        os.environ.pop("HALVECUT_TEST_LOADED", None)
