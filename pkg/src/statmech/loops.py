# -*- coding: utf-8 -*-
"""蜂窝环面上的非交叉圈模型

对面上 Ising 自旋的全部构型求和 Σ t^{N_v − ℓ} n^{#圈}，ℓ 为畴壁边数，
圈数为畴壁子图的连通分支数（并查集计数）。
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
from networkx.utils import UnionFind

from src.cssgame.lattice import ToricLattice, honeycomb_lattice
from src.utils.config_manager import config_manager
from src.utils.errors import ConsistencyError, SizeLimitError
from src.utils.logger import logger

CRITICAL_T = math.sqrt(2.0)
CRITICAL_N = 2.0
# (27/4)^{1/4}
LOOP_GROWTH = (27 / 4) ** 0.25


@dataclass(frozen=True)
class LoopConfigStats:
    edge_count: int
    loop_count: int


def domain_wall_stats(lattice: ToricLattice, spins: int) -> LoopConfigStats:
    """
    一个面自旋构型的畴壁边数与圈数

    Args:
        lattice: 环面剖分
        spins: 第 p 位为第 p 个面的自旋

    Returns:
        LoopConfigStats: 畴壁边数与圈数

    Raises:
        ConsistencyError: 某个顶点的畴壁度数为奇数
    """
    sides = lattice.sides()
    ends = lattice.endpoints()
    degree = np.zeros(lattice.nvertices, dtype=np.int64)
    uf = UnionFind()
    edges = 0
    for (p1, p2), (v1, v2) in zip(sides, ends):
        if ((spins >> p1) ^ (spins >> p2)) & 1:
            edges += 1
            degree[v1] += 1
            degree[v2] += 1
            uf.union(v1, v2)
    if np.any(degree % 2):
        raise ConsistencyError(f"构型 {spins:#x} 的畴壁子图存在奇度数顶点")
    return LoopConfigStats(edges, sum(1 for _ in uf.to_sets()))


def _histogram(lattice: ToricLattice, start: int, stop: int) -> Dict[Tuple[int, int], int]:
    counts: Dict[Tuple[int, int], int] = {}
    for spins in range(start, stop):
        stats = domain_wall_stats(lattice, spins)
        key = (stats.edge_count, stats.loop_count)
        counts[key] = counts.get(key, 0) + 1
    return counts


def loop_histogram(Lx: int, Ly: int, threads: Optional[int] = None) -> Dict[Tuple[int, int], int]:
    """
    按 (畴壁边数, 圈数) 统计全部面自旋构型

    最后一个面的自旋固定为 0，整体翻转给出的另一半构型计数翻倍。

    Raises:
        SizeLimitError: 面数超过 loop_max_plaquettes
    """
    lattice = honeycomb_lattice(Lx, Ly)
    P = lattice.nplaquettes
    cap = config_manager.get_int("loop_max_plaquettes")
    if P > cap:
        logger.error(f"圈模型需要枚举 2^{P} 个构型，超过上限 2^{cap}")
        raise SizeLimitError(f"面数 {P} 超过上限 {cap}", key="loop_max_plaquettes", limit=cap)
    if threads is None:
        threads = config_manager.get_int("threads")
    total = 1 << (P - 1)
    nchunks = max(1, threads)
    bounds = [(total * k // nchunks, total * (k + 1) // nchunks) for k in range(nchunks)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _histogram(lattice, *b), bounds))
    else:
        parts = [_histogram(lattice, *b) for b in bounds]
    counts: Dict[Tuple[int, int], int] = {}
    for part in parts:
        for key, c in part.items():
            counts[key] = counts.get(key, 0) + 2 * c
    logger.debug(f"蜂窝环面 {Lx}x{Ly}: {P} 个面, {len(counts)} 种 (ℓ, 圈数) 组合")
    return counts


def loop_partition(Lx: int, Ly: int, t: float = CRITICAL_T, n: float = CRITICAL_N,
                   threads: Optional[int] = None) -> float:
    """
    Z = Σ_{构型} t^{N_v − ℓ} n^{#圈}

    Args:
        Lx, Ly: 蜂窝环面元胞数
        t: 每个空顶点的权重
        n: 每个圈的权重

    Returns:
        float: 配分函数
    """
    nv = honeycomb_lattice(Lx, Ly).nvertices
    counts = loop_histogram(Lx, Ly, threads)
    return float(sum(c * t ** (nv - ell) * n ** loops for (ell, loops), c in counts.items()))


@dataclass(frozen=True)
class LoopRates:
    Lx: int
    Ly: int
    nvertices: int
    nplayers: int
    partition: float
    per_vertex: float
    per_player: float
    limit_per_vertex: float
    limit_per_player: float

    def to_dict(self) -> Dict[str, float]:
        return dict(self.__dict__)


def loop_rates(Lx: int, Ly: int, threads: Optional[int] = None) -> LoopRates:
    """
    临界点 (t, n) = (√2, 2) 处的有限尺寸增长率

    per_vertex = Z^{1/N_v}，per_player 为 Walsh 上界 2^{1+N_v/2}·Z 按边数开方；
    对应的极限值为 (27/4)^{1/4} 与 √3。
    """
    lattice = honeycomb_lattice(Lx, Ly)
    nv, ne = lattice.nvertices, lattice.nedges
    z = loop_partition(Lx, Ly, threads=threads)
    per_player = math.exp(((1 + nv / 2) * math.log(2) + math.log(z)) / ne)
    # 每条边对应 2/3 个顶点：(√2·W)^{2/3}
    limit_per_player = (CRITICAL_T * LOOP_GROWTH) ** (2 / 3)
    rates = LoopRates(Lx, Ly, nv, ne, z, z ** (1 / nv), per_player, LOOP_GROWTH, limit_per_player)
    logger.info(f"圈模型 {Lx}x{Ly}: Z^(1/N_v) = {rates.per_vertex:.6f} (极限 {LOOP_GROWTH:.6f}), "
                f"每玩家 {per_player:.6f} (极限 {limit_per_player:.6f})")
    return rates


def sqrt3_identity() -> float:
    """(√2·(27/4)^{1/4})^{2/3} − √3"""
    return (CRITICAL_T * LOOP_GROWTH) ** (2 / 3) - math.sqrt(3)
