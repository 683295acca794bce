# Copyright (c) dppf contributors
import pydantic
import pytest

from dppf.config import SUITES, RunConfig


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig(command="analyze")
        assert config.prime == 2
        assert config.output_format == "pretty"
        assert config.max_order == 24
        assert config.groups == []

    @pytest.mark.parametrize("prime", [1, 4, 9, 0])
    def test_prime_validation(self, prime):
        with pytest.raises(pydantic.ValidationError, match="not a prime"):
            RunConfig(command="analyze", prime=prime)

    def test_max_order_bound(self):
        with pytest.raises(pydantic.ValidationError, match="exceeds the bound"):
            RunConfig(command="verify", max_order=1000)

    def test_selectors_are_non_negative(self):
        with pytest.raises(pydantic.ValidationError):
            RunConfig(command="idempotents", pair=-1)

    def test_unknown_command(self):
        with pytest.raises(pydantic.ValidationError):
            RunConfig(command="plot")

    def test_suites(self):
        assert RunConfig(command="verify").suites == SUITES
        assert RunConfig(command="verify", suite="cyclo").suites == ("cyclo",)

    def test_frozen(self):
        config = RunConfig(command="analyze")
        with pytest.raises(pydantic.ValidationError):
            config.prime = 3
