import numpy as np
import pytest

from conftest import (
    all_partitions_upto,
    complete_multipartite_edges,
    triangle_distances,
)
from sqdist import _kernels
from sqdist.errors import DisconnectedGraph
from sqdist.matrices import (
    SimpleGraph,
    multipartite_graph,
    sqdist_from_graph,
    sqdist_from_partition,
)
from sqdist.partitions import Partition


class TestClosedForm:
    def test_2_2(self):
        m = sqdist_from_partition(Partition((2, 2)))
        assert m.int_rows() == [
            [0, 4, 1, 1],
            [4, 0, 1, 1],
            [1, 1, 0, 4],
            [1, 1, 4, 0],
        ]

    def test_k2(self):
        m = sqdist_from_partition(Partition((1, 1)))
        assert m.int_rows() == [[0, 1], [1, 0]]

    def test_2_1_1(self):
        m = sqdist_from_partition(Partition((2, 1, 1)))
        assert m.int_rows() == [
            [0, 4, 1, 1],
            [4, 0, 1, 1],
            [1, 1, 0, 1],
            [1, 1, 1, 0],
        ]

    def test_entry_accessors(self):
        m = sqdist_from_partition(Partition((2, 2)))
        assert m.entry(0, 1) == 4.0
        assert m.entry_int(0, 2) == 1
        assert m.to_csv().splitlines()[0] == "0,4,1,1"

    def test_entry_values(self):
        for _, _, parts in all_partitions_upto(8):
            m = sqdist_from_partition(Partition(parts))
            data = m.data
            assert np.allclose(data, data.T)
            assert np.all(np.diag(data) == 0)
            off = data[~np.eye(m.order, dtype=bool)]
            assert set(np.unique(off)) <= {1.0, 4.0}


class TestGraphConstruction:
    def test_c4(self):
        g = multipartite_graph(Partition((2, 2)))
        assert g.edges == frozenset({(0, 2), (0, 3), (1, 2), (1, 3)})

    def test_triangle(self):
        g = multipartite_graph(Partition((1, 1, 1)))
        assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})

    def test_star(self):
        g = multipartite_graph(Partition((3, 1)))
        assert g.edges == frozenset({(0, 3), (1, 3), (2, 3)})

    def test_edge_oracle(self):
        for _, _, parts in all_partitions_upto(8):
            g = multipartite_graph(Partition(parts))
            assert set(g.edges) == complete_multipartite_edges(parts)


class TestBfsRoute:
    def test_path_p3(self):
        g = SimpleGraph(n=3, edges=frozenset({(0, 1), (1, 2)}))
        assert sqdist_from_graph(g).int_rows() == [
            [0, 1, 4],
            [1, 0, 1],
            [4, 1, 0],
        ]

    def test_disconnected(self):
        g = SimpleGraph(n=3, edges=frozenset({(0, 1)}))
        with pytest.raises(DisconnectedGraph):
            sqdist_from_graph(g)

    def test_matches_closed_form(self):
        # the two construction routes agree entrywise
        for _, _, parts in all_partitions_upto(10):
            p = Partition(parts)
            closed = sqdist_from_partition(p)
            via_bfs = sqdist_from_graph(multipartite_graph(p))
            assert closed.int_rows() == via_bfs.int_rows()

    def test_matches_floyd_warshall(self):
        g = multipartite_graph(Partition((3, 2, 1)))
        fw = triangle_distances(set(g.edges), g.n)
        sq = sqdist_from_graph(g).int_rows()
        assert sq == [[d * d for d in row] for row in fw]


class TestKernelFlavours:
    def test_bfs_flavours_agree(self):
        for parts in [(3, 2, 1), (5, 1), (2, 2, 2, 2)]:
            adj = multipartite_graph(Partition(parts)).adjacency()
            a = _kernels._bfs_all_pairs(adj.astype(np.uint8))
            b = _kernels._bfs_all_pairs_numpy(adj)
            assert np.array_equal(a, b)

    def test_bfs_flavours_unreachable(self):
        adj = np.zeros((4, 4), dtype=np.uint8)
        adj[0, 1] = adj[1, 0] = 1
        a = _kernels._bfs_all_pairs(adj)
        b = _kernels._bfs_all_pairs_numpy(adj)
        assert np.array_equal(a, b)
        assert a[0, 2] == -1

    def test_jacobi_flavours_agree(self):
        rng = np.random.default_rng(7)
        m = rng.normal(size=(12, 12))
        sym = (m + m.T) / 2
        tol = 1e-12 * np.linalg.norm(sym)
        a = sym.copy()
        b = sym.copy()
        _kernels._jacobi_sweeps(a, tol, 100)
        _kernels._jacobi_sweeps_numpy(b, tol, 100)
        assert np.allclose(sorted(np.diag(a)), sorted(np.diag(b)), atol=1e-9)
        assert np.allclose(sorted(np.diag(a)), np.sort(np.linalg.eigvalsh(sym)), atol=1e-9)

    def test_dispatch_fallback(self, monkeypatch):
        adj = multipartite_graph(Partition((3, 2))).adjacency()
        with_numba = _kernels.bfs_distances(adj)
        monkeypatch.setattr(_kernels, "USE_NUMBA", False)
        assert np.array_equal(_kernels.bfs_distances(adj), with_numba)
