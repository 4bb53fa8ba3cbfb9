# -*- coding: utf-8 -*-
"""图与超图模块

图 G 对应二次布尔函数 f_G(z) = ⊕_{i<j} A_ij z_i z_j；
超图的每条超边对应 ANF 中的一个单项式。
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from src.boolfn.boolean_function import AnfPolynomial, BooleanFunction, anf_from_table
from src.f2.bitmatrix import BitMatrix, rank
from src.utils.errors import DegreeError, ParameterError, ShapeError


@dataclass(frozen=True)
class Graph:
    """简单无向图，邻接矩阵对称且对角线为零"""

    nvertices: int
    adjacency: BitMatrix

    def __post_init__(self):
        if self.adjacency.shape != (self.nvertices, self.nvertices):
            raise ShapeError(f"邻接矩阵形状 {self.adjacency.shape} 与顶点数 {self.nvertices} 不符")
        if not self.adjacency.is_symmetric():
            raise ShapeError("邻接矩阵必须对称")
        if any(self.adjacency.get(i, i) for i in range(self.nvertices)):
            raise ShapeError("邻接矩阵对角线必须为零")

    # ---- 构造 ----
    @classmethod
    def from_adjacency(cls, adjacency: BitMatrix) -> "Graph":
        return cls(adjacency.nrows, adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """按边列表构造；重复的边按 mod 2 抵消"""
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ShapeError(f"不允许自环: ({i}, {j})")
            rows[i] ^= 1 << j
            rows[j] ^= 1 << i
        return cls(n, BitMatrix.from_rows(n, rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = sorted(graph.nodes())
        index = {v: k for k, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, BitMatrix.zeros(n, n))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_networkx(nx.path_graph(n))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ParameterError(f"环图需要 n ≥ 3，得到 {n}")
        return cls.from_networkx(nx.cycle_graph(n))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_networkx(nx.complete_graph(n))

    @classmethod
    def grid_torus(cls, L: int) -> "Graph":
        """L×L 周期方格（二维簇态），顶点 (i, j) 编号为 i·L + j"""
        if L < 3:
            raise ParameterError(f"周期方格需要 L ≥ 3，得到 {L}")
        grid = nx.grid_2d_graph(L, L, periodic=True)
        return cls.from_edges(L * L, ((i * L + j, k * L + m) for (i, j), (k, m) in grid.edges()))

    @classmethod
    def random_graph(cls, rng: np.random.Generator, n: int, p: float = 0.5) -> "Graph":
        """上三角元素独立取 1 的概率为 p"""
        upper = np.triu(rng.random((n, n)) < p, k=1)
        return cls(n, BitMatrix.from_dense((upper | upper.T).astype(np.uint8)))

    # ---- 查询 ----
    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.nvertices) for j in range(i + 1, self.nvertices)
                if self.adjacency.get(i, j)]

    def neighbors(self, i: int) -> List[int]:
        return self.adjacency.row(i).support()

    def degree(self, i: int) -> int:
        return self.adjacency.row(i).weight()

    def rank(self) -> int:
        return rank(self.adjacency)

    def boolean_function(self) -> BooleanFunction:
        """f_G"""
        return BooleanFunction.from_monomials(self.nvertices, self.edges())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.nvertices))
        graph.add_edges_from(self.edges())
        return graph


def polar_form(f: Union[BooleanFunction, AnfPolynomial]) -> Graph:
    """
    二次函数的极化双线性形式 B_ij = g_ij ⊕ g_ji，常数与一次项被丢弃

    Args:
        f: 代数次数不超过 2 的布尔函数

    Returns:
        Graph: 以 B 为邻接矩阵的图

    Raises:
        DegreeError: 次数大于 2
    """
    anf = f if isinstance(f, AnfPolynomial) else anf_from_table(f)
    if anf.degree() > 2:
        raise DegreeError(f"极化形式只适用于二次函数，得到次数 {anf.degree()}")
    return Graph.from_edges(anf.nvars, (tuple(t) for t in anf.sorted_terms() if len(t) == 2))


@dataclass(frozen=True)
class Hypergraph:
    """
    超图：每条超边是顶点的非空子集

    constant 记录 ANF 中的常数项，对应态上的整体符号。
    """

    nvertices: int
    edges: FrozenSet[Tuple[int, ...]] = field(default_factory=frozenset)
    constant: int = 0

    def __post_init__(self):
        for edge in self.edges:
            if not edge:
                raise ShapeError("超边不能为空")
            if list(edge) != sorted(set(edge)):
                raise ShapeError(f"超边顶点必须严格升序: {edge}")
            if edge[-1] >= self.nvertices or edge[0] < 0:
                raise ShapeError(f"超边 {edge} 超出顶点范围 {self.nvertices}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], constant: int = 0) -> "Hypergraph":
        """重复的超边按 mod 2 抵消"""
        acc = set()
        for edge in edges:
            key = tuple(sorted(set(edge)))
            acc ^= {key}
        return cls(n, frozenset(acc), constant & 1)

    @property
    def order(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def boolean_function(self) -> BooleanFunction:
        terms: List[Tuple[int, ...]] = sorted(self.edges)
        if self.constant:
            terms.append(())
        return BooleanFunction.from_monomials(self.nvertices, terms)

    def incident(self, i: int) -> List[Tuple[int, ...]]:
        return sorted(e for e in self.edges if i in e)

    @classmethod
    def random(cls, rng: np.random.Generator, n: int, max_order: int = 3, p: float = 0.3) -> "Hypergraph":
        """每个阶数不超过 max_order 的子集以概率 p 成为超边"""
        edges = []
        for mask in range(1, 1 << n):
            if bin(mask).count("1") <= max_order and rng.random() < p:
                edges.append(tuple(i for i in range(n) if (mask >> i) & 1))
        return cls.from_edges(n, edges)


def hypergraph_from_anf(f: Union[BooleanFunction, AnfPolynomial], max_order: Optional[int] = None) -> Hypergraph:
    """ANF 的非零单项式即超边"""
    anf = f if isinstance(f, AnfPolynomial) else anf_from_table(f)
    if max_order is not None and anf.degree() > max_order:
        raise DegreeError(f"超图阶数 {anf.degree()} 超出上限 {max_order}")
    terms = anf.sorted_terms()
    constant = int(any(len(t) == 0 for t in terms))
    return Hypergraph.from_edges(anf.nvars, (t for t in terms if t), constant)
