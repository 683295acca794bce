# Copyright (c) dppf contributors

"""Fixtures, hooks and plugins."""
import pytest

from dppf.groups import catalog_group


@pytest.fixture
def c1():
    return catalog_group("C1")


@pytest.fixture
def c2():
    return catalog_group("C2")


@pytest.fixture
def c6():
    return catalog_group("C6")


@pytest.fixture
def klein():
    return catalog_group("C2xC2")


@pytest.fixture
def s3():
    """Symmetric group on 3 letters; element 1 is a 3-cycle and element 2 a transposition."""
    return catalog_group("S3")


@pytest.fixture
def c3_c4():
    return catalog_group("C3:C4")


@pytest.fixture
def table_file(tmp_path):
    """Write a JSON ingestion file and return its path."""

    def _write(content: str, name: str = "group.json"):
        path = tmp_path / name
        path.write_text(content)
        return path

    return _write
