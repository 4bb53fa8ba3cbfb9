# -*- coding: utf-8 -*-
"""CSS 游戏构造模块

XOR 游戏与子测量游戏的构造、目标函数的两种独立计算与交叉校验、
子测量约束的枚举，以及游戏的 JSON 序列化。

问题参数下标约定：w = x + (z << dx)，x、z 分别为两类参数位的整数编码。
"""

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.boolfn.boolean_function import AnfPolynomial, BooleanFunction, anf_from_table
from src.cssgame.css_code import CssCode, InputSets, question_table
from src.f2.bitmatrix import BitMatrix, BitVector, rank, row_span_iter
from src.utils.config_manager import config_manager
from src.utils.errors import ConsistencyError, FormatError, SizeLimitError
from src.utils.logger import logger


class GameMode(enum.Enum):
    XOR = "xor"
    SUBMEASUREMENT = "sub"


@dataclass(frozen=True)
class SubmeasurementConstraint:
    """子串约束：支撑集上的输出奇偶必须等于 parity"""

    support: Tuple[int, ...]
    parity: int

    def to_dict(self) -> Dict[str, Any]:
        return {"support": list(self.support), "parity": self.parity}


@dataclass(frozen=True, eq=False)
class GameSpec:
    """
    一个 CSS 游戏

    a_bits[x] 与 b_bits[z] 是参数 (x, z) 对应的每个玩家的问题位；
    target 的下标为 w = x + (z << dx)；constraints 仅在子测量模式下非空。
    """

    code: CssCode
    inputs: InputSets
    mode: GameMode
    target: BooleanFunction
    a_bits: np.ndarray
    b_bits: np.ndarray
    x_labels: np.ndarray
    z_labels: np.ndarray
    anf: AnfPolynomial
    constraints: Tuple[Tuple[SubmeasurementConstraint, ...], ...] = field(default=())

    @property
    def dx(self) -> int:
        return int(self.a_bits.shape[0]).bit_length() - 1

    @property
    def dz(self) -> int:
        return int(self.b_bits.shape[0]).bit_length() - 1

    @property
    def nvars(self) -> int:
        return self.target.nvars

    @property
    def nplayers(self) -> int:
        return self.code.nqubits

    @property
    def nqueries(self) -> int:
        return 1 << self.nvars

    def split(self, w: int) -> Tuple[int, int]:
        """把问题下标拆成 (x, z)"""
        return w & ((1 << self.dx) - 1), w >> self.dx

    def query(self, w: int) -> Tuple[np.ndarray, np.ndarray]:
        """下标 w 对应的 (a, b) 问题位"""
        x, z = self.split(w)
        return self.a_bits[x], self.b_bits[z]

    def query_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """全部问题的 (a, b)，形状均为 (2^d, N)，按 w 排列"""
        xs = np.arange(self.nqueries) & ((1 << self.dx) - 1)
        zs = np.arange(self.nqueries) >> self.dx
        return self.a_bits[xs], self.b_bits[zs]

    def with_target(self, target: BooleanFunction) -> "GameSpec":
        """替换目标函数（用于 Clifford 等价变换后的游戏）"""
        if target.nvars != self.nvars:
            raise ConsistencyError(f"新目标函数变量数 {target.nvars} 与游戏参数位数 {self.nvars} 不一致")
        return GameSpec(self.code, self.inputs, self.mode, target, self.a_bits, self.b_bits,
                        self.x_labels, self.z_labels, anf_from_table(target), self.constraints)

    def is_all_of_image(self) -> bool:
        return self.inputs.ix is None and self.inputs.iz is None


def direct_target(a_bits: np.ndarray, b_bits: np.ndarray) -> BooleanFunction:
    """
    直接按 ½Σ_i a_i b_i mod 2 计算目标函数

    Args:
        a_bits: (2^dx, N) 问题位
        b_bits: (2^dz, N) 问题位

    Returns:
        BooleanFunction: 下标 w = x + (z << dx) 的目标函数

    Raises:
        ConsistencyError: 某个问题的 Σ a_i b_i 为奇数
    """
    S = a_bits.astype(np.int32) @ b_bits.astype(np.int32).T
    if np.any(S & 1):
        raise ConsistencyError("存在 Σ a_i b_i 为奇数的问题，校验矩阵不对易")
    table = ((S // 2) & 1).T.reshape(-1)
    dx = a_bits.shape[0].bit_length() - 1
    dz = b_bits.shape[0].bit_length() - 1
    return BooleanFunction(dx + dz, table)


def target_anf_coefficients(code: CssCode) -> AnfPolynomial:
    """
    目标函数在生成元标签 (x, z) 上的 ANF

    二次项 x_α z_β 当 wt(H_X[α] ∧ H_Z[β])/2 为奇数时出现；三次项 x_α z_β z_γ 与
    x_α x_β z_γ 当三行按位与的重量为奇数时出现。变量 x_α 为 α，z_β 为 nx + β。

    Args:
        code: CSS 码

    Returns:
        AnfPolynomial: 次数至多为 3 的多项式
    """
    hx = code.hx.data
    hz = code.hz.data
    n = code.nx

    def wt(v: int) -> int:
        return bin(v).count("1")

    terms: List[Tuple[int, ...]] = []
    for a, ra in enumerate(hx):
        for b, rb in enumerate(hz):
            if (wt(ra & rb) // 2) & 1:
                terms.append((a, n + b))
            for c in range(b + 1, len(hz)):
                if wt(ra & rb & hz[c]) & 1:
                    terms.append((a, n + b, n + c))
        for a2 in range(a + 1, len(hx)):
            for b, rb in enumerate(hz):
                if wt(ra & hx[a2] & rb) & 1:
                    terms.append((a, a2, n + b))
    return AnfPolynomial.from_terms(n + code.nz, terms)


def _label_points(x_labels: np.ndarray, z_labels: np.ndarray) -> np.ndarray:
    """按 w 排列的标签整数 x_label | z_label << nx"""
    nx_ = x_labels.shape[1]
    wx = (x_labels.astype(np.uint64) << np.arange(nx_, dtype=np.uint64)[None, :]).sum(axis=1, dtype=np.uint64)
    wz = (z_labels.astype(np.uint64) << np.arange(z_labels.shape[1], dtype=np.uint64)[None, :]).sum(axis=1, dtype=np.uint64)
    return (wx[None, :] | (wz[:, None] << np.uint64(nx_))).reshape(-1)


def _cross_check(target: BooleanFunction, anf: AnfPolynomial, inputs: InputSets,
                 x_labels: np.ndarray, z_labels: np.ndarray) -> None:
    cap = config_manager.get_int("crosscheck_max_vars")
    if target.nvars > cap:
        logger.debug(f"目标函数变量数 {target.nvars} 超过交叉校验上限 {cap}，跳过")
        return
    if inputs.ix is None and inputs.iz is None:
        ok = anf_from_table(target) == anf
    else:
        if anf.nvars > 64:
            logger.debug("生成元个数超过 64，跳过列表输入的交叉校验")
            return
        ok = np.array_equal(anf.evaluate_many(_label_points(x_labels, z_labels)), target.table)
    if not ok:
        logger.error("目标函数的直接计算与 ANF 系数不一致")
        raise ConsistencyError("目标函数的直接计算与 ANF 系数不一致")


def _prepare(code: CssCode, inputs: InputSets):
    inputs.validate(code)
    a_bits, x_labels = question_table(code.hx, inputs.ix)
    b_bits, z_labels = question_table(code.hz, inputs.iz)
    target = direct_target(a_bits, b_bits)
    anf = target_anf_coefficients(code)
    _cross_check(target, anf, inputs, x_labels, z_labels)
    return a_bits, b_bits, x_labels, z_labels, target, anf


def build_xor_game(code: CssCode, inputs: Optional[InputSets] = None) -> GameSpec:
    """
    构造 XOR 游戏

    Args:
        code: CSS 码
        inputs: 问题集合，默认两类都取整个像空间

    Returns:
        GameSpec: 游戏
    """
    inputs = inputs or InputSets.unrestricted()
    a_bits, b_bits, x_labels, z_labels, target, anf = _prepare(code, inputs)
    logger.info(f"构造 XOR 游戏 {code}: 参数位 d={target.nvars}, 目标函数次数 {anf.degree()}")
    return GameSpec(code, inputs, GameMode.XOR, target, a_bits, b_bits, x_labels, z_labels, anf)


def stabilizer_group(code: CssCode) -> Tuple[np.ndarray, np.ndarray]:
    """
    枚举稳定子群元素的 (X 部分, Z 部分) 位掩码

    Returns:
        Tuple[np.ndarray, np.ndarray]: 两个 uint64 数组，长度为 2^(rank H_X + rank H_Z)
    """
    cap = config_manager.get_int("submeasurement_max_group_rank")
    total = rank(code.hx) + rank(code.hz)
    if total > cap:
        logger.error(f"稳定子群秩 {total} 超出上限 {cap}")
        raise SizeLimitError(f"稳定子群秩 {total} 超出上限 {cap}", key="submeasurement_max_group_rank", limit=cap)
    if code.nqubits > 64:
        raise SizeLimitError(f"子测量约束枚举最多支持 64 个量子比特，得到 {code.nqubits}")
    xs = np.array([v.data for v in row_span_iter(code.hx, max_rank=cap)], dtype=np.uint64)
    zs = np.array([v.data for v in row_span_iter(code.hz, max_rank=cap)], dtype=np.uint64)
    return np.repeat(xs, len(zs)), np.tile(zs, len(xs))


def _popcount(values: np.ndarray) -> np.ndarray:
    v = values.astype(np.uint64)
    count = np.zeros(v.shape, dtype=np.int64)
    while np.any(v):
        count += (v & np.uint64(1)).astype(np.int64)
        v = v >> np.uint64(1)
    return count


def submeasurement_constraints(code: CssCode, a: np.ndarray, b: np.ndarray,
                               group: Optional[Tuple[np.ndarray, np.ndarray]] = None
                               ) -> Tuple[SubmeasurementConstraint, ...]:
    """
    一个问题的全部子串约束

    稳定子群元素 (a', b') 的支撑 K 落在问题支撑内，且问题在 K 上的限制恰为 (a', b') 时给出一条约束，
    奇偶为 wt(a' ∧ b')/2 mod 2。

    Args:
        code: CSS 码
        a: 长度 N 的 X 位
        b: 长度 N 的 Z 位
        group: 预先枚举的稳定子群

    Returns:
        Tuple[SubmeasurementConstraint, ...]: 按支撑位掩码升序排列的约束
    """
    cap = config_manager.get_int("submeasurement_max_support")
    a_mask = int(sum(1 << i for i, bit in enumerate(a) if bit))
    b_mask = int(sum(1 << i for i, bit in enumerate(b) if bit))
    support = a_mask | b_mask
    if bin(support).count("1") > cap:
        raise SizeLimitError(f"问题支撑大小超出上限 {cap}", key="submeasurement_max_support", limit=cap)
    gx, gz = group if group is not None else stabilizer_group(code)
    K = gx | gz
    ok = (K != 0) & ((K & ~np.uint64(support)) == 0)
    ok &= ((np.uint64(a_mask) & K) == gx) & ((np.uint64(b_mask) & K) == gz)
    idx = np.nonzero(ok)[0]
    order = idx[np.argsort(K[idx], kind="stable")]
    parities = (_popcount(gx[order] & gz[order]) // 2) & 1
    out = []
    for k, parity in zip(order.tolist(), parities.tolist()):
        mask = int(K[k])
        out.append(SubmeasurementConstraint(tuple(i for i in range(code.nqubits) if (mask >> i) & 1), int(parity)))
    return tuple(out)


def build_submeasurement_game(code: CssCode, inputs: Optional[InputSets] = None) -> GameSpec:
    """
    构造子测量游戏：每个问题附带其全部子串约束

    Args:
        code: CSS 码
        inputs: 问题集合

    Returns:
        GameSpec: 子测量模式的游戏
    """
    inputs = inputs or InputSets.unrestricted()
    a_bits, b_bits, x_labels, z_labels, target, anf = _prepare(code, inputs)
    group = stabilizer_group(code)
    constraints = []
    for w in range(1 << target.nvars):
        x = w & ((1 << (a_bits.shape[0].bit_length() - 1)) - 1)
        z = w >> (a_bits.shape[0].bit_length() - 1)
        cons = submeasurement_constraints(code, a_bits[x], b_bits[z], group)
        full = tuple(i for i in range(code.nqubits) if a_bits[x, i] or b_bits[z, i])
        if full and not any(c.support == full and c.parity == target.evaluate(w) for c in cons):
            raise ConsistencyError(f"问题 {w} 的全支撑约束与 XOR 条件不一致")
        constraints.append(cons)
    total = sum(len(c) for c in constraints)
    logger.info(f"构造子测量游戏 {code}: {len(constraints)} 个问题, 共 {total} 条约束")
    return GameSpec(code, inputs, GameMode.SUBMEASUREMENT, target, a_bits, b_bits,
                    x_labels, z_labels, anf, tuple(constraints))


def build_game(code: CssCode, inputs: Optional[InputSets] = None, mode: GameMode = GameMode.XOR) -> GameSpec:
    if mode is GameMode.SUBMEASUREMENT:
        return build_submeasurement_game(code, inputs)
    return build_xor_game(code, inputs)


# ---- JSON ----

def game_to_dict(game: GameSpec) -> Dict[str, Any]:
    """游戏的可序列化表示"""
    data: Dict[str, Any] = {
        "name": game.code.name,
        "mode": game.mode.value,
        "nqubits": game.code.nqubits,
        "hx": game.code.hx.to_strings(),
        "hz": game.code.hz.to_strings(),
        "ix": None if game.inputs.ix is None else [v.to_string() for v in game.inputs.ix],
        "iz": None if game.inputs.iz is None else [v.to_string() for v in game.inputs.iz],
        "nvars": game.nvars,
        "target": game.target.to_string(),
        "anf": game.anf.sorted_terms(),
    }
    if game.mode is GameMode.SUBMEASUREMENT:
        data["constraints"] = [[c.to_dict() for c in cons] for cons in game.constraints]
    return data


def game_to_json(game: GameSpec) -> str:
    return json.dumps(game_to_dict(game), ensure_ascii=False, indent=2)


def game_from_dict(data: Dict[str, Any], path: Optional[str] = None) -> GameSpec:
    """
    由 JSON 字典重建游戏（目标函数与约束重新计算）

    Args:
        data: game_to_dict 的输出
        path: 来源文件（报错用）

    Returns:
        GameSpec: 游戏
    """
    try:
        nq = int(data["nqubits"])
        code = CssCode(BitMatrix.from_strings(data["hx"], nq), BitMatrix.from_strings(data["hz"], nq),
                       name=data.get("name"))
        ix = data.get("ix")
        iz = data.get("iz")
        inputs = InputSets(
            None if ix is None else tuple(BitVector.from_string(s) for s in ix),
            None if iz is None else tuple(BitVector.from_string(s) for s in iz),
        )
        mode = GameMode(data.get("mode", "xor"))
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"游戏 JSON 缺少或包含非法字段: {e}", path=path) from e
    return build_game(code, inputs, mode)


def game_from_json(text: str, path: Optional[str] = None) -> GameSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"JSON 解析失败: {e.msg}", path=path, line=e.lineno) from e
    return game_from_dict(data, path=path)


def read_game(path: str) -> GameSpec:
    with open(path, "r", encoding="utf-8") as f:
        return game_from_json(f.read(), path=path)
