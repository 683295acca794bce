# Copyright (c) dppf contributors
import numpy as np
import pytest

from dppf._exceptions import StructureMismatchError
from dppf.groups import catalog_group
from dppf.poset import MoebiusFunction, subgroup_moebius


class TestMoebiusFunction:
    def test_chain(self):
        mu = MoebiusFunction(["a", "b", "c"], np.triu(np.ones((3, 3), dtype=bool)))
        assert mu("a", "a") == 1
        assert mu("a", "b") == -1
        assert mu("a", "c") == 0
        assert mu("c", "a") == 0

    def test_boolean_lattice(self):
        # Subsets of {0, 1} ordered by inclusion.
        nodes = [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})]
        leq = np.array([[a <= b for b in nodes] for a in nodes])
        mu = MoebiusFunction(nodes, leq)
        assert mu(nodes[0], nodes[3]) == 1
        assert mu(nodes[1], nodes[3]) == -1

    def test_not_reflexive(self):
        with pytest.raises(StructureMismatchError, match="reflexive"):
            MoebiusFunction([0, 1], np.zeros((2, 2), dtype=bool))

    def test_shape_mismatch(self):
        with pytest.raises(StructureMismatchError, match="number of nodes"):
            MoebiusFunction([0, 1, 2], np.eye(2, dtype=bool))

    def test_unknown_node(self):
        mu = MoebiusFunction([0], np.eye(1, dtype=bool))
        assert 0 in mu
        with pytest.raises(StructureMismatchError, match="not an element"):
            mu(0, 5)


class TestSubgroupMoebius:
    def test_klein_lattice(self, klein):
        mu = subgroup_moebius(klein.subgroups)
        assert mu(klein.trivial, klein.whole) == 2
        for line in (s for s in klein.subgroups if s.order == 2):
            assert mu(line, klein.whole) == -1
            assert mu(klein.trivial, line) == -1

    @pytest.mark.parametrize("name, value", [("C4", 0), ("C6", 1), ("S3", 3)])
    def test_trivial_to_whole(self, name, value):
        group = catalog_group(name)
        assert subgroup_moebius(group.subgroups)(group.trivial, group.whole) == value
