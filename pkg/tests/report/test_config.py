import normscreen as ns
from normscreen.errors import ConfigError
from normscreen.normality import TestName
from normscreen.report import InputFormat, OutputFormat, RunConfig
from normscreen.report.cli import build_parser

import pytest


def test_defaults():
    config = RunConfig(input="set1")

    assert config.input_format is InputFormat.LINES
    assert config.rule is ns.BinningRule.HARTLEY_EQUAL_WIDTH
    assert config.output is OutputFormat.TEXT
    assert config.alpha == 0.05
    assert config.max_iter == 5
    assert config.external_model is None


def test_string_values_are_coerced():
    config = RunConfig(
        input="data.txt",
        rule="dataplot",
        output="json",
        tests=["JarqueBera", "KS_D"],
    )

    assert config.rule is ns.BinningRule.DATAPLOT_WIDTH
    assert config.output is OutputFormat.JSON
    assert config.tests == (TestName.JARQUE_BERA, TestName.KS_D)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alpha": 0.0},
        {"alpha": 0.6},
        {"max_iter": 0},
        {"mu": 1.0},
        {"sigma": 1.0},
        {"mu": 1.0, "sigma": 0.0},
        {"mu": 1.0, "sigma": float("inf")},
        {"input_format": "csv"},
    ],
)
def test_inconsistent_configuration(kwargs):
    with pytest.raises(ConfigError):
        RunConfig(input="set1", **kwargs)


def test_external_model():
    config = RunConfig(input="set2", mu=6.5, sigma=0.8)

    assert config.external_model == ns.FittedNormal(mu=6.5, sigma=0.8)


def test_as_dict():
    config = RunConfig(input="set2", screen=True, tests=["ZKurtosis"])
    echo = config.as_dict()

    assert echo["input"] == "set2"
    assert echo["rule"] == "hartley-eqwidth"
    assert echo["tests"] == ["ZKurtosis"]
    assert echo["screen"] is True
    assert echo["output"] == "text"


def test_from_namespace():
    args = build_parser().parse_args(
        [
            "--input",
            "data.csv",
            "--csv-column",
            "2",
            "--alpha",
            "0.01",
            "--binning",
            "hartley-eqprob",
            "--tests",
            "KS_D, JarqueBera",
            "--screen",
            "--max-iter",
            "3",
        ]
    )
    config = RunConfig.from_namespace(args)

    assert config.input_format is InputFormat.CSV
    assert config.csv_column == 2
    assert config.alpha == 0.01
    assert config.rule is ns.BinningRule.HARTLEY_EQUAL_PROBABILITY
    assert config.tests == (TestName.KS_D, TestName.JARQUE_BERA)
    assert config.screen
    assert config.max_iter == 3


def test_from_namespace_named_column_and_bad_test():
    parser = build_parser()

    named = RunConfig.from_namespace(
        parser.parse_args(["--input", "x.csv", "--csv-column", "logKow"])
    )
    assert named.csv_column == "logKow"

    with pytest.raises(ConfigError):
        RunConfig.from_namespace(
            parser.parse_args(["--input", "x", "--tests", "Lilliefors"])
        )
