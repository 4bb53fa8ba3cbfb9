# -*- coding: utf-8 -*-
"""命名码与环面格点模块

GHZ 码、一维簇态码、正方/蜂窝环面码，以及环面码目标函数所在的对偶中介图。
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import networkx as nx
import numpy as np

from src.boolfn.boolean_function import AnfPolynomial, BooleanFunction
from src.cssgame.css_code import CssCode
from src.f2.bitmatrix import BitMatrix
from src.utils.errors import InvalidCodeError, ParameterError
from src.utils.logger import logger


def _rows_from_supports(ncols: int, supports: Sequence[Sequence[int]]) -> BitMatrix:
    rows = []
    for support in supports:
        value = 0
        for q in support:
            value ^= 1 << (q % ncols)
        rows.append(value)
    return BitMatrix.from_rows(ncols, rows)


def ghz_code(N: int) -> CssCode:
    """
    GHZ 码：X 型生成元 ∏X_i，Z 型生成元 Z_i Z_{i+1}

    Args:
        N: 量子比特数，N ≥ 2

    Returns:
        CssCode: GHZ 码
    """
    if N < 2:
        raise ParameterError(f"GHZ 码需要 N ≥ 2，得到 {N}")
    hx = _rows_from_supports(N, [range(N)])
    hz = _rows_from_supports(N, [(i, i + 1) for i in range(N - 1)])
    return CssCode(hx, hz, name=f"GHZ({N})")


def cluster_code(N: int) -> CssCode:
    """
    一维簇态码（周期边界）

    第 k 个 Z 型生成元作用在 (2k-3, 2k-2, 2k-1)，第 k 个 X 型生成元作用在
    (2k-2, 2k-1, 2k)，下标模 N，k = 1..N/2。

    Args:
        N: 偶数，N ≥ 4

    Returns:
        CssCode: 簇态码
    """
    if N < 4 or N % 2:
        raise ParameterError(f"一维簇态码需要 N 为不小于 4 的偶数，得到 {N}")
    half = N // 2
    hz = _rows_from_supports(N, [(2 * k - 3, 2 * k - 2, 2 * k - 1) for k in range(1, half + 1)])
    hx = _rows_from_supports(N, [(2 * k - 2, 2 * k - 1, 2 * k) for k in range(1, half + 1)])
    return CssCode(hx, hz, name=f"Cluster1D({N})")


@dataclass(frozen=True)
class ToricLattice:
    """
    环面上的胞腔剖分：边为量子比特，面给出 X 型生成元，顶点给出 Z 型生成元

    plaquettes[p] 与 stars[v] 都是边下标元组。
    """

    nedges: int
    plaquettes: Tuple[Tuple[int, ...], ...]
    stars: Tuple[Tuple[int, ...], ...]
    name: str = "torus"

    def __post_init__(self):
        for label, cells in (("面", self.plaquettes), ("顶点", self.stars)):
            counts = np.zeros(self.nedges, dtype=np.int64)
            for cell in cells:
                if len(set(cell)) != len(cell):
                    raise InvalidCodeError(f"{label}中出现重复的边: {cell}")
                counts[list(cell)] += 1
            if not np.all(counts == 2):
                raise InvalidCodeError(f"每条边必须恰好属于两个{label}")

    @property
    def nplaquettes(self) -> int:
        return len(self.plaquettes)

    @property
    def nvertices(self) -> int:
        return len(self.stars)

    def edge_faces(self, cells: Sequence[Tuple[int, ...]]) -> List[Tuple[int, int]]:
        """每条边所属的两个胞腔"""
        owners: Dict[int, List[int]] = {e: [] for e in range(self.nedges)}
        for idx, cell in enumerate(cells):
            for e in cell:
                owners[e].append(idx)
        return [tuple(owners[e]) for e in range(self.nedges)]

    def endpoints(self) -> List[Tuple[int, int]]:
        return self.edge_faces(self.stars)

    def sides(self) -> List[Tuple[int, int]]:
        return self.edge_faces(self.plaquettes)

    def code(self, redundant: bool = False) -> CssCode:
        """
        环面码；默认去掉最后一个面与最后一个顶点生成元，使校验矩阵满秩

        Args:
            redundant: 保留全部生成元

        Returns:
            CssCode: 环面码
        """
        plaquettes = self.plaquettes if redundant else self.plaquettes[:-1]
        stars = self.stars if redundant else self.stars[:-1]
        hx = _rows_from_supports(self.nedges, plaquettes)
        hz = _rows_from_supports(self.nedges, stars)
        suffix = ",redundant" if redundant else ""
        return CssCode(hx, hz, name=f"{self.name}{suffix}")


def square_lattice(L: int) -> ToricLattice:
    """
    L×L 正方环面：水平边 h(i,j) = i·L+j 连接 (i,j)-(i,j+1)，竖直边 v(i,j) = L²+i·L+j 连接 (i,j)-(i+1,j)
    """
    if L < 2 or L % 2:
        raise ParameterError(f"正方环面码需要偶数 L ≥ 2，得到 {L}")

    def h(i, j):
        return (i % L) * L + (j % L)

    def v(i, j):
        return L * L + (i % L) * L + (j % L)

    plaquettes = tuple((h(i, j), h(i + 1, j), v(i, j), v(i, j + 1)) for i in range(L) for j in range(L))
    stars = tuple((h(i, j), h(i, j - 1), v(i, j), v(i - 1, j)) for i in range(L) for j in range(L))
    return ToricLattice(2 * L * L, plaquettes, stars, name=f"ToricSquare({L})")


def honeycomb_lattice(Lx: int, Ly: int) -> ToricLattice:
    """
    Lx×Ly 蜂窝环面，每个元胞含 A、B 两个顶点与三条边

    e0(i,j) = A(i,j)–B(i,j)，e1(i,j) = A(i,j)–B(i-1,j)，e2(i,j) = A(i,j)–B(i,j-1)。
    """
    if Lx < 2 or Ly < 2:
        raise ParameterError(f"蜂窝环面码需要 Lx, Ly ≥ 2，得到 {Lx}x{Ly}")

    def e(kind, i, j):
        return 3 * ((i % Lx) * Ly + (j % Ly)) + kind

    cells = [(i, j) for i in range(Lx) for j in range(Ly)]
    plaquettes = tuple(
        (e(0, i, j), e(1, i + 1, j), e(2, i + 1, j), e(0, i + 1, j - 1), e(1, i + 1, j - 1), e(2, i, j))
        for i, j in cells
    )
    stars_a = [(e(0, i, j), e(1, i, j), e(2, i, j)) for i, j in cells]
    stars_b = [(e(0, i, j), e(1, i + 1, j), e(2, i, j + 1)) for i, j in cells]
    return ToricLattice(3 * Lx * Ly, plaquettes, tuple(stars_a + stars_b), name=f"ToricHoneycomb({Lx},{Ly})")


def toric_square_code(L: int, redundant: bool = False) -> CssCode:
    return square_lattice(L).code(redundant)


def toric_honeycomb_code(Lx: int, Ly: int, redundant: bool = False) -> CssCode:
    return honeycomb_lattice(Lx, Ly).code(redundant)


def named_code(kind: str, *params: int, redundant: bool = False) -> CssCode:
    """
    按名称构造码

    Args:
        kind: ghz / cluster / toric-square / toric-honeycomb（大小写不敏感）
        params: 尺寸参数
        redundant: 环面码是否保留冗余生成元

    Returns:
        CssCode: 码
    """
    key = kind.lower().replace("_", "-")
    try:
        if key == "ghz":
            return ghz_code(*params)
        if key in ("cluster", "cluster1d"):
            return cluster_code(*params)
        if key in ("toric", "toric-square", "toricsquare"):
            return toric_square_code(*params, redundant=redundant)
        if key in ("honeycomb", "toric-honeycomb", "torichoneycomb"):
            return toric_honeycomb_code(*params, redundant=redundant)
    except TypeError as e:
        raise ParameterError(f"{kind} 的尺寸参数不正确: {params}") from e
    raise ParameterError(f"未知的码类型: {kind}")


@dataclass(frozen=True)
class DualMedialGraph:
    """
    对偶中介图：节点为全部面（0..P-1）与全部顶点（P..P+V-1）

    graph 的每条边对应原格点上一个面与其一个角顶点（重数按 mod 2 计），
    faces 中每个四边形 (p1, p2, v1, v2) 对应原格点的一条边。
    """

    graph: nx.MultiGraph
    faces: Tuple[Tuple[int, int, int, int], ...]
    nplaquettes: int
    nvertices: int

    @property
    def nnodes(self) -> int:
        return self.nplaquettes + self.nvertices

    def target_anf(self) -> AnfPolynomial:
        """每个面上所有三元组的三次项，加上每条边的二次项"""
        terms: List[Tuple[int, ...]] = []
        for p1, p2, v1, v2 in self.faces:
            terms += [(p1, v1, v2), (p2, v1, v2), (p1, p2, v1), (p1, p2, v2)]
        terms += [(u, w) for u, w in self.graph.edges()]
        return AnfPolynomial.from_terms(self.nnodes, terms)

    def target_function(self) -> BooleanFunction:
        return BooleanFunction.from_anf(self.target_anf())


def dual_medial_graph(lattice: ToricLattice) -> DualMedialGraph:
    """
    构造对偶中介图

    Args:
        lattice: 环面剖分

    Returns:
        DualMedialGraph: 节点、角边与四边形面
    """
    P = lattice.nplaquettes
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(P), kind="plaquette")
    graph.add_nodes_from(range(P, P + lattice.nvertices), kind="vertex")
    for p, plaquette in enumerate(lattice.plaquettes):
        for v, star in enumerate(lattice.stars):
            shared = len(set(plaquette) & set(star))
            # 一个角贡献两条公共边
            for _ in range(shared // 2):
                graph.add_edge(p, P + v)
    sides = lattice.sides()
    ends = lattice.endpoints()
    faces = tuple((p1, p2, P + v1, P + v2) for (p1, p2), (v1, v2) in zip(sides, ends))
    logger.debug(f"对偶中介图 {lattice.name}: {graph.number_of_nodes()} 个节点, "
                 f"{graph.number_of_edges()} 条边, {len(faces)} 个面")
    return DualMedialGraph(graph, faces, P, lattice.nvertices)


def toric_restricted_target(L: int) -> BooleanFunction:
    """
    a 全为 1（反铁磁 x）时正方环面码的目标函数 ⊕_{<v v'>} z_v z_{v'}

    Args:
        L: 偶数边长

    Returns:
        BooleanFunction: L² 个顶点变量的函数，顶点 (i,j) 对应变量 i·L+j
    """
    lattice = square_lattice(L)
    return BooleanFunction.from_monomials(L * L, lattice.endpoints())


def ghz_chain_target(n: int) -> BooleanFunction:
    """固定 x 的 GHZ 目标函数 ⊕ z_i z_{i+1} ⊕ ⊕ z_i"""
    terms = [(i, i + 1) for i in range(n - 1)] + [(i,) for i in range(n)]
    return BooleanFunction.from_monomials(n, terms)


def ghz_all_to_all_target(n: int) -> BooleanFunction:
    """全连接 GHZ 目标函数 ⊕_{i<j} z_i z_j ⊕ ⊕ z_i"""
    terms = [(i, j) for i in range(n) for j in range(i + 1, n)] + [(i,) for i in range(n)]
    return BooleanFunction.from_monomials(n, terms)


def chain_from_all_to_all_transform(n: int) -> BitMatrix:
    """
    使 ghz_all_to_all_target(xT) = ghz_chain_target(x) 的可逆矩阵

    y_j = x_j ⊕ x_{j+1}，即 x_k 出现在 y_k 与 y_{k-1} 中。
    """
    rows = [(1 << k) | ((1 << (k - 1)) if k else 0) for k in range(n)]
    return BitMatrix.from_rows(n, rows)
