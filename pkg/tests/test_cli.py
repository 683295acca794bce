# Copyright (c) dppf contributors
import pathlib
from argparse import ArgumentTypeError
from fractions import Fraction
from unittest.mock import patch

import pytest

from dppf.cli import dir_path, file_path, group_source, main
from dppf.records import parse_record


def _run(capsys, *arguments):
    with patch("sys.argv", ["dppf", *arguments]):
        main()
    return capsys.readouterr()


def test_dir_path_valid_directory(tmpdir):
    path = tmpdir.mkdir("subdir")
    assert dir_path(str(path)) == pathlib.Path(path)


def test_dir_path_invalid_directory():
    with pytest.raises(ArgumentTypeError):
        dir_path("/path/which/does/not/exist")


def test_file_path_valid_file(tmpdir):
    path = tmpdir.join("test_file.txt")
    path.write("content")
    assert file_path(str(path)) == pathlib.Path(path)


def test_file_path_invalid_file():
    with pytest.raises(ArgumentTypeError):
        file_path("/path/which/does/not/exist.txt")


def test_file_path_no_need_exists():
    _path = "/path/which/does/not/need/to/exist.txt"
    assert file_path(_path, need_exists=False) == pathlib.Path(_path)


def test_group_source():
    assert group_source("catalog:S3") == "catalog:S3"
    with pytest.raises(ArgumentTypeError):
        group_source("/path/which/does/not/exist.json")


def test_main_no_arguments(capsys):
    with patch("sys.argv", ["dppf"]):
        with pytest.raises(SystemExit):
            main()


class TestAnalysisCommands:
    def test_analyze_records(self, capsys):
        out = _run(capsys, "analyze", "--group", "catalog:S3", "--prime", "3", "--format", "records").out
        records = [parse_record(line) for line in out.splitlines()]
        assert records[0]["kind"] == "group"
        assert records[0]["pair_classes"] == 4
        pairs = [r for r in records if r["kind"] == "pair"]
        assert len(pairs) == 4
        assert sum(r["ddelta"] for r in pairs) == 3

    def test_analyze_pretty(self, capsys):
        out = _run(capsys, "analyze", "--group", "catalog:S3", "--prime", "3").out
        assert "S3: order 6, 3 conjugacy classes" in out
        assert "4 pair classes at p=3" in out

    def test_idempotents_single_pair(self, capsys):
        out = _run(capsys, "idempotents", "--group", "catalog:C2", "--pair", "1", "--format", "records").out
        (record,) = [parse_record(line) for line in out.splitlines()]
        assert record["formulas_agree"] is True
        assert record["species"] == [0, 1]

    def test_decompose(self, capsys):
        out = _run(capsys, "decompose", "--group", "catalog:S3", "--prime", "3", "--format", "records").out
        assert sorted(parse_record(line)["dimension"] for line in out.splitlines()) == [1, 1, 2]

    def test_simple_dims(self, capsys):
        out = _run(capsys, "simple-dims", "--group", "catalog:C6", "--group", "catalog:S3").out
        assert "S_(1,1) on C6: dim 3, 3 2'-classes" in out

    def test_essential_zero(self, capsys):
        out = _run(capsys, "essential", "--group", "catalog:C6", "--prime", "3").out
        assert "C6 at p=3: essential algebra is zero" in out

    def test_invalid_selector(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            _run(capsys, "idempotents", "--group", "catalog:C2", "--pair", "9")
        assert exc_info.value.code == 1
        assert "invalid pair index 9; valid indices are 0..1." in capsys.readouterr().err

    def test_invalid_prime(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            _run(capsys, "analyze", "--group", "catalog:C2", "--prime", "4")
        assert exc_info.value.code == 2
        assert "not a prime" in capsys.readouterr().err


class TestComposeCommand:
    def test_zero_by_support(self, capsys):
        out = _run(capsys, "compose", "--group", "catalog:C2", "--dpair", "0", "--pair", "0").out
        assert "product = 0 (support): p_2(<Qt>) != G" in out

    def test_diagonal_product(self, capsys):
        out = _run(capsys, "compose", "--group", "catalog:C2", "--dpair", "1", "--format", "records").out
        (record,) = [parse_record(line) for line in out.splitlines()]
        assert record["zero_by_support"] is False
        assert record["species"] == [0, Fraction(1, 2)]
        assert record["support_holds"] is True

    def test_too_many_groups(self, capsys):
        with pytest.raises(SystemExit):
            _run(capsys, "compose", "--group", "catalog:C1", "--group", "catalog:C2", "--group", "catalog:C2")


class TestVerifyCommand:
    def test_passing_suite(self, capsys):
        out = _run(capsys, "verify", "--suite", "cyclo", "--silent").out
        assert out.strip().endswith("0 failures")
        assert out.startswith("1 tasks, ")

    def test_failing_suite(self, capsys, table_file):
        path = str(table_file('{"table": [[0, 1], [1, 1]]}'))
        with pytest.raises(SystemExit) as exc_info:
            _run(capsys, "verify", "--suite", "essential", "--group", path, "--silent", "--format", "records")
        assert exc_info.value.code == 1
        records = [parse_record(line) for line in capsys.readouterr().out.splitlines()]
        assert records[-1] == {"kind": "summary", "tasks": 1, "checks": 1, "failures": 1}
