# Copyright (c) dppf contributors
"""Test the verification harness on small groups."""
import pytest

from dppf.config import RunConfig
from dppf.groups import catalog_group
from dppf.verification import Task, TaskResult, build_tasks, primes_for, run_verification


class TestTasks:
    @pytest.mark.parametrize("name, primes", [("C1", [2, 3]), ("C5", [2, 3, 5]), ("S3", [2, 3]), ("C7:C3", [2, 3, 7])])
    def test_primes(self, name, primes):
        assert primes_for(catalog_group(name)) == primes

    def test_cyclotomic_task(self):
        assert build_tasks(RunConfig(command="verify", suite="cyclo")) == [Task("cyclo", "cyclotomic", 0)]

    def test_given_groups(self):
        tasks = build_tasks(RunConfig(command="verify", suite="essential", groups=["catalog:S3", "catalog:C5"]))
        assert [(t.source, t.p) for t in tasks] == [
            ("catalog:S3", 2),
            ("catalog:S3", 3),
            ("catalog:C5", 2),
            ("catalog:C5", 3),
            ("catalog:C5", 5),
        ]

    def test_catalog_up_to_order(self):
        tasks = build_tasks(RunConfig(command="verify", max_order=2))
        assert len(tasks) == 17
        assert {t.source for t in tasks if t.suite == "functor"} == {"catalog:C1", "catalog:C2"}

    def test_unreadable_source_gets_one_task(self, tmp_path):
        missing = str(tmp_path / "missing.json")
        assert build_tasks(RunConfig(command="verify", suite="biset", groups=[missing])) == [Task("biset", missing, 2)]


class TestTaskResult:
    def test_failure_record(self, caplog):
        result = TaskResult(Task("functor", "catalog:S3", 3))
        result.check(True, "fine")
        result.check(False, "s11 dimension", expected=2, computed=3)
        assert result.checks == 2
        assert result.failures == [
            {
                "suite": "functor",
                "group": "catalog:S3",
                "p": 3,
                "subject": "s11 dimension",
                "expected": 2,
                "computed": 3,
            }
        ]
        assert "s11 dimension" in caplog.text


class TestRunVerification:
    @pytest.mark.parametrize("suite", ["idempotents", "biset", "functor", "essential", "cyclo"])
    def test_small_groups_pass(self, suite):
        config = RunConfig(command="verify", suite=suite, groups=["catalog:C2", "catalog:S3"])
        report = run_verification(config, show_progress=False)
        assert report.passed, report.failures
        assert report.checks > 0

    def test_catalog_run(self):
        report = run_verification(RunConfig(command="verify", max_order=4), show_progress=False)
        assert report.passed, report.failures
        assert report.tasks == 4 * 5 * 2 + 1

    def test_workers(self):
        config = RunConfig(command="verify", suite="essential", groups=["catalog:C2"], num_workers=2)
        report = run_verification(config, show_progress=False)
        assert report.passed
        assert report.tasks == 2

    def test_corrupted_table(self, table_file):
        path = str(table_file('{"table": [[0, 1, 2], [1, 1, 0], [2, 0, 1]]}'))
        report = run_verification(RunConfig(command="verify", suite="idempotents", groups=[path]), show_progress=False)
        assert not report.passed
        assert len(report.failures) == 1
        assert report.failures[0]["group"] == path
        assert "Latin-square" in report.failures[0]["subject"]
