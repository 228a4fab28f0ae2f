#!/usr/bin/env python3
"""
Testes da configuração, validação de parâmetros, fábrica de otimizadores,
relatórios, recursos e tools do swarm-enhance.
"""
import sys
import os

# Adiciona a raiz do projeto ao path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import json
import math

import numpy as np
import pytest

from swarm_enhance.config import config_manager, get_enhance_defaults, get_swarm_defaults
from swarm_enhance.histogram import equalize
from swarm_enhance.optimizers import get_optimizer, normalize_optimizer_name
from swarm_enhance.optimizers.chicken import CSOOptimizer, ICSOOptimizer
from swarm_enhance.optimizers.closed_form import ClosedFormOptimizer
from swarm_enhance.pgm import read_pgm, write_pgm
from swarm_enhance.report import dumps_report, strip_timing, subsample, to_json_compatible
from swarm_enhance.resources import parameter_table
from swarm_enhance.swarm import Variant
from swarm_enhance.synthetic import low_contrast_document
from swarm_enhance.tools import (
    compare_optimizers, enhance_image, image_metrics, run_benchmark, sweep_parameters,
)
from swarm_enhance.utils import derive_seed, ensure_run_params, parse_float_list, parse_name_list, relative_gap
from swarm_enhance.validation import (
    ParameterError, ParameterValidator, get_validation_report, validate_run_params,
)


@pytest.fixture
def fresh_config():
    config_manager.clear_cache()
    yield config_manager
    config_manager.clear_cache()


@pytest.fixture
def document(tmp_path):
    path = tmp_path / "doc.pgm"
    write_pgm(low_contrast_document(32, 32, seed=1), path)
    return path


def test_builtin_defaults(fresh_config, monkeypatch):
    for var in ("SWARM_POPULATION", "SWARM_ITERS", "ENHANCE_LAMBDA", "ENHANCE_GAMMA", "ENHANCE_OPTIMIZER"):
        monkeypatch.delenv(var, raising=False)
    swarm = get_swarm_defaults()
    assert (swarm["population"], swarm["max_iters"], swarm["reorg_period"]) == (20, 1000, 10)
    assert (swarm["s_min"], swarm["s_max"]) == (0.4, 0.9)
    assert get_enhance_defaults() == {"lambda": 5.0, "gamma": 50000.0, "optimizer": "icso"}


def test_environment_overrides_defaults(fresh_config, monkeypatch):
    monkeypatch.setenv("SWARM_POPULATION", "100")
    monkeypatch.setenv("ENHANCE_GAMMA", "10000")
    monkeypatch.setenv("ENHANCE_OPTIMIZER", "cso")
    monkeypatch.setenv("SWARM_ITERS", "muitas")
    assert get_swarm_defaults()["population"] == 100
    assert get_swarm_defaults()["max_iters"] == 1000
    assert get_enhance_defaults()["gamma"] == 10000.0

    run = ensure_run_params({"gamma": 7.0, "iters": None})
    assert run["gamma"] == 7.0
    assert run["optimizer"] == "cso"
    assert run["population"] == 100
    assert run["iters"] == 1000


def test_utils():
    assert [derive_seed(10, i) for i in range(3)] == [10, 11, 12]
    assert relative_gap(105.0, 100.0) == pytest.approx(0.05)
    assert relative_gap(3.0, 0.0) == 3.0
    assert parse_float_list("0, 1,5e4") == [0.0, 1.0, 50000.0]
    assert parse_float_list([1, 2]) == [1.0, 2.0]
    assert parse_name_list(" ICSO,,cso ") == ["icso", "cso"]
    with pytest.raises(ValueError):
        parse_float_list("1,a")


def test_validator_rejects_invalid_parameters():
    invalid = [
        {"lambda": -1.0},
        {"gamma": float("inf")},
        {"lambda": "5"},
        {"repeats": 0},
        {"population": 2.5},
        {"workers": True},
        {"seed": -1},
        {"optimizers": []},
        {"optimizers": ["icso", "pso"]},
    ]
    for params in invalid:
        is_valid, messages = ParameterValidator.validate(params)
        assert not is_valid, params
        assert messages
        with pytest.raises(ParameterError):
            validate_run_params(params)


def test_validator_accepts_and_warns():
    assert validate_run_params({"lambda": 5.0, "gamma": 50000.0, "repeats": 10, "seed": 0}) == []
    assert validate_run_params({"gamma": 0.0}) == []
    assert validate_run_params({"optimizers": "ICSO,closed_form".split(",")}) == []

    warnings = validate_run_params({"lambda": 40.0, "gamma": 10.0})
    assert len(warnings) == 2
    assert all(w.startswith("AVISO") for w in warnings)

    report = get_validation_report({"lambda": 40.0, "repeats": 0})
    assert report["is_valid"] is False
    assert len(report["errors"]) == 1 and report["warnings"] == []
    assert report["advisory_lambda"] == [0.0, 20.0]


def test_optimizer_factory():
    assert normalize_optimizer_name(" Closed_Form ") == "closed-form"
    assert isinstance(get_optimizer("ICSO"), ICSOOptimizer)
    assert isinstance(get_optimizer("cso", anchor_init=False), CSOOptimizer)
    assert isinstance(get_optimizer("closedform"), ClosedFormOptimizer)
    assert ICSOOptimizer.variant is Variant.ICSO and CSOOptimizer.variant is Variant.CSO
    assert get_optimizer("cso", anchor_init=False).anchor_init is False
    with pytest.raises(ValueError):
        get_optimizer("pso")


def test_parameter_table_resource(fresh_config, monkeypatch):
    monkeypatch.delenv("SWARM_POPULATION", raising=False)
    table = parameter_table({})
    assert table["name"] == "parameter_table"
    content = table["content"]
    assert (content["rooster_count"], content["hen_count"], content["chick_count"], content["mother_count"]) \
        == (1, 15, 4, 1)
    assert content["chick_follow_mother_range"] == [0.4, 1.0]
    assert "enhance_lambda" in content

    content = parameter_table({"population": 100})["content"]
    assert (content["rooster_count"], content["hen_count"], content["chick_count"], content["mother_count"]) \
        == (5, 75, 20, 7)


def test_report_helpers():
    value = {"a": np.float64("inf"), "b": np.int64(3), "c": np.array([1.0, -math.inf]), "d": (True, None)}
    assert to_json_compatible(value) == {"a": "inf", "b": 3, "c": [1.0, "-inf"], "d": [True, None]}
    assert json.loads(dumps_report({"psnr": float("inf")})) == {"psnr": "inf"}
    assert to_json_compatible({"v": Variant.CSO}) == {"v": "cso"}

    history = np.arange(100.0)[::-1]
    points = subsample(history)
    assert len(points) == 20 and points[0] == 99.0 and points[-1] == 0.0
    assert subsample([3.0, 2.0]) == [3.0, 2.0]

    report = {"runs": [{"seed": 1, "wall_time": 0.3}], "aggregate": {"wall_time": 0.3, "gap": 0.0}}
    assert strip_timing(report) == {"runs": [{"seed": 1}], "aggregate": {"gap": 0.0}}


def test_enhance_tool_matches_equalization(tmp_path, document):
    output, report_path = tmp_path / "out.pgm", tmp_path / "rep.json"
    report = enhance_image({
        "input_path": str(document),
        "output_path": str(output),
        "report_path": str(report_path),
        "optimizer": "closed-form",
        "lambda": 0.0,
        "gamma": 0.0,
    })
    assert read_pgm(output) == equalize(read_pgm(document))
    assert report["config"]["optimizer"] == "closed-form"
    assert json.loads(report_path.read_text(encoding="utf-8"))["runs"] == report["runs"]

    with pytest.raises(ParameterError):
        enhance_image({"input_path": str(document), "lambda": -2.0})


def test_compare_tool(document):
    report = compare_optimizers({
        "input_path": str(document),
        "optimizers": "closed-form,icso",
        "repeats": 2,
        "iters": 5,
    })
    assert list(report["aggregate"]) == ["closed-form", "icso"]
    assert report["config"]["optimizers"] == ["closed-form", "icso"]
    assert [r["seed"] for r in report["runs"]] == [0, 1, 0, 1]

    for bad in ({"optimizers": ""}, {"optimizers": "icso,pso"}, {"optimizers": "icso", "repeats": 0}):
        with pytest.raises(ParameterError):
            compare_optimizers(dict(bad, input_path=str(document)))


def test_sweep_tool(tmp_path, document):
    report = sweep_parameters({
        "input_path": str(document),
        "lambdas": [1.0, 4.0],
        "gammas": "10000",
        "optimizer": "closed-form",
        "output_dir": str(tmp_path / "grade"),
    })
    assert [(r["lambda"], r["gamma"]) for r in report["runs"]] == [(1.0, 10000.0), (4.0, 10000.0)]
    assert (tmp_path / "grade" / "sweep_l4_g10000.pgm").is_file()
    with pytest.raises(ParameterError):
        sweep_parameters({"input_path": str(document), "lambdas": "1,-2", "gammas": "0"})


def test_metrics_tool(document):
    result = image_metrics({"input_path": str(document)})
    assert (result["width"], result["height"]) == (32, 32)
    assert result["metrics"]["psnr_db"] == "inf"
    assert 0.0 < result["metrics"]["entropy_bits"] <= 8.0


def test_benchmark_tool():
    report = run_benchmark({"function": "rastrigin", "dimension": 4, "optimizer": "icso",
                            "iters": 60, "repeats": 3, "seed": 2})
    assert [r["seed"] for r in report["runs"]] == [2, 3, 4]
    assert report["aggregate"]["best_fitness"] == min(r["best_fitness"] for r in report["runs"])
    assert all(r["convergence"][-1] == r["best_fitness"] for r in report["runs"])

    with pytest.raises(ParameterError):
        run_benchmark({"optimizer": "closed-form"})
    with pytest.raises(ParameterError):
        run_benchmark({"dimension": 0})
    with pytest.raises(ValueError):
        run_benchmark({"function": "ackley"})


def test_server_exposes_tools(document):
    pytest.importorskip("mcp")
    from swarm_enhance import server

    content = json.loads(server._parameter_table())["content"]
    assert content["population"] >= 1
    assert server._validate_parameters(lambda_=-1.0)["is_valid"] is False
    result = server._image_metrics(str(document))
    assert strip_timing(result)["metrics"]["mse"] == 0.0


def main():
    """Executa os testes deste módulo com pytest."""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()
