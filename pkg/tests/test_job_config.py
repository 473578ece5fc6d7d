"""Tests for job configuration layering, input parsing and report rendering."""

import json

import pytest
from sympy.polys.domains import QQ

from correlator_layer import PoleError
from jobs import (
    InputFormatError,
    JobConfigError,
    JobConfigManager,
    build_job_config,
    parse_pair_sequence,
    parse_points,
    parse_r,
    render_report,
)

NO_ENV = {}


def test_defaults():
    cfg = build_job_config("verify", {}, environ=NO_ENV)
    assert cfg.seed == 7
    assert cfg.bound is None
    assert cfg.symbolic_r
    assert cfg.output_format == "text"
    assert cfg.settings["verification"]["datasets"] == 3


def test_precedence_of_environment_file_and_flags(write_json):
    environ = {"JORDAN_VOA_SEED": "11", "JORDAN_VOA_BOUND": "5", "JORDAN_VOA_MAX_DEPTH": "64"}
    cfg = build_job_config("verify", {}, environ=environ)
    assert (cfg.seed, cfg.bound, cfg.settings["oracle"]["max_depth"]) == (11, 5, 64)

    path = write_json("config.json", {"verification": {"seed": 12}, "correlator": {"r": "1/3"}})
    cfg = build_job_config("verify", {"config_path": path}, environ=environ)
    assert (cfg.seed, cfg.bound, cfg.r) == (12, 5, QQ(1, 3))

    cfg = build_job_config("verify", {"config_path": path, "seed": 13, "r": "2"}, environ=environ)
    assert (cfg.seed, cfg.r) == (13, QQ(2))


def test_invalid_environment_value():
    with pytest.raises(JobConfigError):
        build_job_config("verify", {}, environ={"JORDAN_VOA_SEED": "seven"})


def test_invalid_config_file(write_json, tmp_path):
    with pytest.raises(JobConfigError):
        build_job_config("verify", {"config_path": write_json("bad.json", {"verification": {"datasets": 0}})},
                         environ=NO_ENV)
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(JobConfigError):
        build_job_config("verify", {"config_path": str(broken)}, environ=NO_ENV)
    with pytest.raises(JobConfigError):
        build_job_config("verify", {"config_path": str(tmp_path / "missing.json")}, environ=NO_ENV)


def test_save_and_reload(tmp_path):
    config = JobConfigManager.get_default_config()
    config["verification"]["seed"] = 99
    path = tmp_path / "nested" / "saved.json"
    JobConfigManager.save_to_file(config, str(path))
    assert JobConfigManager.load_from_file(str(path))["verification"]["seed"] == 99


def test_merge_skips_unset_values():
    merged = JobConfigManager.merge_configs({"a": {"b": 1, "c": 2}}, {"a": {"b": None, "c": 3}})
    assert merged == {"a": {"b": 1, "c": 3}}


@pytest.mark.parametrize("flags", [{"bound": -1}, {"n": -2}, {"dim": 0}, {"output_format": "xml"}, {"r": "x"}])
def test_invalid_flags(flags):
    with pytest.raises(JobConfigError):
        build_job_config("correlator", flags, environ=NO_ENV)


def test_unknown_command():
    with pytest.raises(JobConfigError):
        build_job_config("plot", {}, environ=NO_ENV)


def test_points_of_different_pairs_must_differ():
    with pytest.raises(PoleError):
        build_job_config("correlator", {"points": parse_points("z1=1,w2=1")}, environ=NO_ENV)
    cfg = build_job_config("correlator", {"points": parse_points("z1=1,w1=1,z2=0,w2=3")}, environ=NO_ENV)
    assert cfg.points["w1"] == QQ(1)


def test_parse_r():
    assert parse_r("symbolic") == "symbolic"
    assert parse_r(" Symbolic ") == "symbolic"
    assert parse_r("-3/4") == QQ(-3, 4)
    with pytest.raises(JobConfigError):
        parse_r("1/0")


def test_parse_points():
    assert parse_points("z1=1/2, w1 = -3 ,z2=0") == {"z1": QQ(1, 2), "w1": QQ(-3), "z2": QQ(0)}
    for text in ("", "z1", "x1=2", "z1=1,z1=2", "z1=abc"):
        with pytest.raises(InputFormatError):
            parse_points(text)


def test_parse_pair_sequence(generic_sequence):
    assert generic_sequence.n == 3
    assert generic_sequence.space.dim == 2
    bad_inputs = [
        {"gram": [["1"]], "pairs": []},
        {"dim": 0, "gram": [], "pairs": []},
        {"dim": 2, "gram": [["1"]], "pairs": []},
        {"dim": 1, "gram": [["1"]], "pairs": [[["1"]]]},
        {"dim": 1, "gram": [["1"]], "pairs": [[["1", "2"], ["1"]]]},
        {"dim": 1, "gram": [["0"]], "pairs": []},
        {"dim": 1, "gram": [["1/x"]], "pairs": []},
    ]
    for data in bad_inputs:
        with pytest.raises(InputFormatError):
            parse_pair_sequence(data)


def test_error_report_rendering():
    report = {"header": {"command": "correlator", "seed": 7, "bound": None, "r": "symbolic"},
              "status": "ERROR", "error": "boom"}
    assert render_report(report, "text") == "# command: correlator\n# seed: 7\n# bound: -\n# r: symbolic\nERROR: boom\n"
    assert json.loads(render_report(report, "json")) == report
