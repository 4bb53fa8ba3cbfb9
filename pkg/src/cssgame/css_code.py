# -*- coding: utf-8 -*-
"""CSS 码模块

CssCode 保存一对校验矩阵 (H_X, H_Z)，构造时检查对易条件 H_X·H_Zᵀ = 0。
InputSets 描述两类玩家问题的取值集合：整个像空间，或固定列表。
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.f2.bitmatrix import (
    BitMatrix,
    BitVector,
    format_matrix,
    parse_matrix,
    rank,
    solve_affine,
    split_blocks,
)
from src.utils.errors import FormatError, InvalidCodeError, InvalidInputError
from src.utils.logger import logger


@dataclass(frozen=True)
class CssCode:
    """由 X 型与 Z 型校验矩阵给出的 CSS 码"""

    hx: BitMatrix
    hz: BitMatrix
    name: Optional[str] = None

    def __post_init__(self):
        if self.hx.ncols != self.hz.ncols:
            raise InvalidCodeError(f"H_X 与 H_Z 列数不同: {self.hx.ncols} != {self.hz.ncols}")
        if self.hx.nrows == 0 or self.hz.nrows == 0:
            raise InvalidCodeError("H_X 与 H_Z 都必须至少有一行")
        product = self.hx @ self.hz.transpose()
        if not product.is_zero():
            raise InvalidCodeError("校验矩阵不满足对易条件 H_X·H_Zᵀ = 0")

    @property
    def nqubits(self) -> int:
        return self.hx.ncols

    @property
    def nx(self) -> int:
        """X 型生成元个数"""
        return self.hx.nrows

    @property
    def nz(self) -> int:
        """Z 型生成元个数"""
        return self.hz.nrows

    def is_full_rank(self) -> bool:
        return rank(self.hx) == self.nx and rank(self.hz) == self.nz

    def with_basis_change(self, A: BitMatrix, B: BitMatrix) -> "CssCode":
        """
        更换生成元基 (A·H_X, B·H_Z)，A、B 须可逆

        Args:
            A: nx×nx 可逆矩阵
            B: nz×nz 可逆矩阵

        Returns:
            CssCode: 同一个码的另一组生成元
        """
        A.inverse()
        B.inverse()
        return CssCode(A @ self.hx, B @ self.hz, name=self.name)

    def swapped(self) -> "CssCode":
        """X 型与 Z 型角色互换（对全部量子比特作 Hadamard）"""
        return CssCode(self.hz, self.hx, name=self.name)

    def a_bits(self, labels: np.ndarray) -> np.ndarray:
        """问题位 a(x) = x·H_X，labels 为 (k, nx) 的 0/1 数组"""
        return (np.asarray(labels, dtype=np.int64) @ self.hx.to_dense().astype(np.int64)) & 1

    def b_bits(self, labels: np.ndarray) -> np.ndarray:
        """问题位 b(z) = z·H_Z"""
        return (np.asarray(labels, dtype=np.int64) @ self.hz.to_dense().astype(np.int64)) & 1

    def __str__(self) -> str:
        label = self.name or "custom"
        return f"CssCode({label}, N={self.nqubits}, nx={self.nx}, nz={self.nz})"


def all_labels(nbits: int) -> np.ndarray:
    """全部 2^nbits 个标签，第 k 行为整数 k 的小端位"""
    idx = np.arange(1 << nbits, dtype=np.int64)
    return ((idx[:, None] >> np.arange(nbits)[None, :]) & 1).astype(np.uint8)


@dataclass(frozen=True)
class InputSets:
    """
    问题集合：ix / iz 为 None 表示整个像空间，否则为固定的向量元组

    固定列表的长度必须是 2 的幂，列表下标即参数位。
    """

    ix: Optional[Tuple[BitVector, ...]] = None
    iz: Optional[Tuple[BitVector, ...]] = None

    @classmethod
    def unrestricted(cls) -> "InputSets":
        return cls()

    @classmethod
    def fixed_a(cls, code: CssCode, a: BitVector, iz: Optional[Sequence[BitVector]] = None) -> "InputSets":
        """X 型问题固定为单个向量 a"""
        inputs = cls((a,), tuple(iz) if iz is not None else None)
        inputs.validate(code)
        return inputs

    @classmethod
    def fixed_x(cls, code: CssCode, x: BitVector) -> "InputSets":
        """X 型问题固定为生成元标签 x 对应的 a = x·H_X"""
        if x.length != code.nx:
            raise InvalidInputError(f"标签长度 {x.length} 与 X 型生成元个数 {code.nx} 不一致")
        return cls.fixed_a(code, code.hx.vec_mul(x))

    @classmethod
    def fixed_z(cls, code: CssCode, z: BitVector) -> "InputSets":
        """Z 型问题固定为生成元标签 z 对应的 b = z·H_Z，X 型问题取整个像空间"""
        if z.length != code.nz:
            raise InvalidInputError(f"标签长度 {z.length} 与 Z 型生成元个数 {code.nz} 不一致")
        inputs = cls(None, (code.hz.vec_mul(z),))
        inputs.validate(code)
        return inputs

    def validate(self, code: CssCode) -> None:
        """检查列表非空、长度为 2 的幂且每个向量都在对应行空间中"""
        for label, entries, h in (("I_X", self.ix, code.hx), ("I_Z", self.iz, code.hz)):
            if entries is None:
                continue
            if len(entries) == 0:
                raise InvalidInputError(f"{label} 不能为空")
            if len(entries) & (len(entries) - 1):
                raise InvalidInputError(f"{label} 的长度 {len(entries)} 不是 2 的幂")
            for v in entries:
                if v.length != code.nqubits:
                    raise InvalidInputError(f"{label} 中向量长度 {v.length} 与量子比特数 {code.nqubits} 不一致")
                if solve_affine(h.transpose(), v) is None:
                    raise InvalidInputError(f"{label} 中的向量 {v} 不在对应校验矩阵的行空间中")


def label_of(h: BitMatrix, v: BitVector) -> BitVector:
    """
    求一个生成元标签 x 使 x·H = v

    Args:
        h: 校验矩阵
        v: 行空间中的向量

    Returns:
        BitVector: 标签（特解）

    Raises:
        InvalidInputError: v 不在行空间中
    """
    solution = solve_affine(h.transpose(), v)
    if solution is None:
        raise InvalidInputError(f"向量 {v} 不在行空间中")
    return solution[0]


def question_table(h: BitMatrix, entries: Optional[Tuple[BitVector, ...]]) -> Tuple[np.ndarray, np.ndarray]:
    """
    参数位到问题位的映射表

    Args:
        h: 校验矩阵
        entries: None 表示整个像空间，否则为固定列表

    Returns:
        Tuple[np.ndarray, np.ndarray]: (问题位 (2^k, N), 生成元标签 (2^k, rows))
    """
    if entries is None:
        labels = all_labels(h.nrows)
        bits = (labels.astype(np.int64) @ h.to_dense().astype(np.int64)) & 1
        return bits.astype(np.uint8), labels
    bits = np.array([v.to_list() for v in entries], dtype=np.uint8)
    labels = np.array([label_of(h, v).to_list() for v in entries], dtype=np.uint8).reshape(len(entries), h.nrows)
    return bits, labels


# ---- 文本格式 ----

def parse_code(text: str, path: Optional[str] = None, name: Optional[str] = None) -> CssCode:
    """
    解析码文件：两个矩阵块（先 H_X 后 H_Z），以空行分隔

    Args:
        text: 文件内容
        path: 文件路径（报错用）
        name: 码的名称

    Returns:
        CssCode: 码
    """
    blocks = split_blocks(text)
    if len(blocks) != 2:
        line = blocks[2][0][0] if len(blocks) > 2 else (blocks[-1][-1][0] + 1 if blocks else 1)
        raise FormatError(f"码文件应包含两个矩阵块，得到 {len(blocks)} 个", path=path, line=line)
    hx = parse_matrix(blocks[0], path=path)
    hz = parse_matrix(blocks[1], path=path)
    return CssCode(hx, hz, name=name)


def read_code(path: str) -> CssCode:
    with open(path, "r", encoding="utf-8") as f:
        code = parse_code(f.read(), path=path, name=path)
    logger.info(f"读取码文件 {path}: N={code.nqubits}, nx={code.nx}, nz={code.nz}")
    return code


def format_code(code: CssCode) -> str:
    return format_matrix(code.hx) + "\n" + format_matrix(code.hz)


def write_code(code: CssCode, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_code(code))


def vectors_from_strings(rows: Sequence[str]) -> List[BitVector]:
    return [BitVector.from_string(r) for r in rows]
