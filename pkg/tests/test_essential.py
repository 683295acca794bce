# Copyright (c) dppf contributors
import pytest

from dppf._exceptions import GroupTooLargeError
from dppf.functor import essential_report
from dppf.groups import catalog_group
from dppf.groups.catalog import cyclic_group


class TestEssentialAlgebra:
    def test_s3(self, s3):
        report = essential_report(s3, 3)
        assert report.nonzero
        assert report.witness.P.order == 3
        assert report.n == 2
        assert report.dimension == 1

    def test_c6_vanishes(self, c6):
        report = essential_report(c6, 3)
        assert not report.nonzero
        assert report.witness is None
        assert report.dimension == 0

    @pytest.mark.parametrize(
        "name, p, n, dimension", [("C2", 2, 1, 1), ("C2xC2", 2, 1, 6), ("C3", 3, 1, 2), ("A4", 2, 3, 4)]
    )
    def test_dimensions(self, name, p, n, dimension):
        report = essential_report(catalog_group(name), p)
        assert report.nonzero
        assert report.n == n
        assert report.dimension == dimension

    def test_summary(self, s3):
        summary = essential_report(s3, 3).summary()
        assert summary["group"] == "S3"
        assert summary["nonzero"] is True
        assert summary["witness"]["order_span"] == 6

    def test_group_bound(self):
        with pytest.raises(GroupTooLargeError):
            essential_report(cyclic_group(65), 5)
