# -*- coding: utf-8 -*-
"""经典策略模块

确定性经典策略空间、最优经典成功率 ω 的精确计算、上下界与暴力枚举对照。
成功率一律用 Fraction 表示，分母为 2^d。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.boolfn.boolean_function import (
    BooleanFunction,
    max_walsh_over_span,
    nonlinearity,
    nonquadraticity,
    walsh_transform,
)
from src.cssgame.css_code import CssCode, InputSets
from src.cssgame.game import GameMode, GameSpec, build_game
from src.f2.bitmatrix import BitMatrix, BitVector, rank, row_span_iter, solve_affine
from src.utils.config_manager import config_manager
from src.utils.errors import ConsistencyError, ModeError, SizeLimitError
from src.utils.logger import logger


@dataclass(frozen=True)
class ClassicalStrategy:
    """
    确定性经典策略 c(x,z) = u0 ⊕ ux·x ⊕ uz·z ⊕ x·uxz·zᵀ

    answers[i] 是玩家 i 的 4 位应答表，第 a + 2b 位为问题 (a, b) 时的回答。
    """

    u0: int
    ux: BitVector
    uz: BitVector
    uxz: BitMatrix
    answers: Tuple[int, ...]

    @classmethod
    def from_coefficients(cls, code: CssCode, alpha: Sequence[int], beta: Sequence[int],
                          gamma: Sequence[int], lam: Sequence[int]) -> "ClassicalStrategy":
        """
        由每个玩家的 ANF 系数构造：y_i = α_i ⊕ β_i a ⊕ γ_i b ⊕ λ_i ab

        Args:
            code: CSS 码
            alpha, beta, gamma, lam: 长度 N 的 0/1 序列

        Returns:
            ClassicalStrategy: 策略
        """
        N = code.nqubits
        beta_v = BitVector.from_bits(beta)
        gamma_v = BitVector.from_bits(gamma)
        ux = code.hx.mul_vec(beta_v)
        uz = code.hz.mul_vec(gamma_v)
        hx_lam = BitMatrix.from_rows(N, [r & BitVector.from_bits(lam).data for r in code.hx.data])
        uxz = hx_lam @ code.hz.transpose()
        answers = []
        for i in range(N):
            al, be, ga, la = alpha[i] & 1, beta[i] & 1, gamma[i] & 1, lam[i] & 1
            table = 0
            for idx in range(4):
                a, b = idx & 1, idx >> 1
                if al ^ (be & a) ^ (ga & b) ^ (la & a & b):
                    table |= 1 << idx
            answers.append(table)
        u0 = 0
        for v in alpha:
            u0 ^= v & 1
        return cls(u0, ux, uz, uxz, tuple(answers))

    @classmethod
    def from_answers(cls, code: CssCode, answers: Sequence[int]) -> "ClassicalStrategy":
        """由应答表反推 ANF 系数"""
        alpha, beta, gamma, lam = [], [], [], []
        for t in answers:
            t0, t1, t2, t3 = t & 1, (t >> 1) & 1, (t >> 2) & 1, (t >> 3) & 1
            alpha.append(t0)
            beta.append(t1 ^ t0)
            gamma.append(t2 ^ t0)
            lam.append(t3 ^ t2 ^ t1 ^ t0)
        return cls.from_coefficients(code, alpha, beta, gamma, lam)

    def answer(self, player: int, a: int, b: int) -> int:
        return (self.answers[player] >> (a + 2 * b)) & 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "u0": self.u0,
            "ux": self.ux.to_string(),
            "uz": self.uz.to_string(),
            "uxz": self.uxz.to_strings(),
            "answers": [format(t, "04b")[::-1] for t in self.answers],
        }


@dataclass(frozen=True)
class OmegaReport:
    """ω 的计算结果；method 为 exact / nonlinearity / enumeration / oracle / bounds"""

    omega: Optional[Fraction]
    best: Optional[ClassicalStrategy]
    method: str
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"method": self.method}
        if self.omega is not None:
            data["omega"] = str(self.omega)
        if self.lower is not None:
            data["lower"] = str(self.lower)
        if self.upper is not None:
            data["upper"] = str(self.upper)
        if self.best is not None:
            data["strategy"] = self.best.to_dict()
        return data


def _answer_tables(game: GameSpec, answers: Sequence[int]) -> np.ndarray:
    """每个玩家在每个问题上的回答，形状 (2^d, N)"""
    a, b = game.query_arrays()
    tables = np.asarray(answers, dtype=np.int64)[None, :]
    return ((tables >> (a.astype(np.int64) + 2 * b.astype(np.int64))) & 1).astype(np.uint8)


def strategy_success(game: GameSpec, strategy: ClassicalStrategy) -> Fraction:
    """
    按应答表逐问题对局，返回获胜比例

    Args:
        game: 游戏（XOR 或子测量模式）
        strategy: 确定性策略

    Returns:
        Fraction: 成功率
    """
    y = _answer_tables(game, strategy.answers)
    if game.mode is GameMode.XOR:
        wins = int((np.bitwise_xor.reduce(y, axis=1) == game.target.table).sum())
    else:
        wins = 0
        for w, cons in enumerate(game.constraints):
            if all(int(np.bitwise_xor.reduce(y[w, list(c.support)])) == c.parity for c in cons):
                wins += 1
    return Fraction(wins, game.nqueries)


def bilinear_span_basis(code: CssCode) -> List[BitMatrix]:
    """
    {H_X·E_ii·H_Zᵀ} 张成空间的一组基：按玩家顺序贪心选出的线性无关外积

    Args:
        code: CSS 码

    Returns:
        List[BitMatrix]: nx×nz 矩阵列表
    """
    return [m for m, _ in _bilinear_basis_with_players(code)]


def _bilinear_basis_with_players(code: CssCode) -> List[Tuple[BitMatrix, int]]:
    nz = code.nz
    hxT = code.hx.transpose()
    hzT = code.hz.transpose()
    reduced: Dict[int, int] = {}
    out = []
    for i in range(code.nqubits):
        col_x = hxT.data[i]
        col_z = hzT.data[i]
        rows = [col_z if (col_x >> r) & 1 else 0 for r in range(code.nx)]
        vec = sum(row << (r * nz) for r, row in enumerate(rows))
        # 按最高位消元判断线性无关
        residue = vec
        while residue:
            top = residue.bit_length() - 1
            if top not in reduced:
                reduced[top] = residue
                out.append((BitMatrix.from_rows(nz, rows), i))
                break
            residue ^= reduced[top]
    return out


def _colspace_mask(h: BitMatrix) -> Optional[np.ndarray]:
    """列空间中的 y（作为 nrows 位整数）；满行秩时返回 None 表示全部"""
    if rank(h) == h.nrows:
        return None
    mask = np.zeros(1 << h.nrows, dtype=bool)
    for v in row_span_iter(h.transpose()):
        mask[v.data] = True
    return mask


def _check_budget(span_dim: int, d: int) -> None:
    span_cap = config_manager.get_int("omega_span_max")
    vars_cap = config_manager.get_int("omega_vars_max")
    cost_cap = config_manager.get_int("omega_max_log2_cost")
    for value, cap, key in ((span_dim, span_cap, "omega_span_max"), (d, vars_cap, "omega_vars_max"),
                            (span_dim + d, cost_cap, "omega_max_log2_cost")):
        if value > cap:
            logger.error(f"ω 精确计算超出预算: {key}={cap}, 实际 {value}")
            raise SizeLimitError(f"ω 精确计算超出预算 {key}={cap}（实际 {value}），请改用 bounds 方法",
                                 key=key, limit=cap)


def _omega_from_max(M: int, d: int) -> Fraction:
    return Fraction((1 << d) + M, 1 << (d + 1))


def _verify(game: GameSpec, strategy: ClassicalStrategy, omega: Fraction) -> None:
    played = strategy_success(game, strategy)
    if played != omega:
        logger.error(f"报告的策略实际成功率 {played} 与 ω={omega} 不一致")
        raise ConsistencyError(f"报告的策略实际成功率 {played} 与 ω={omega} 不一致")


def _omega_all_of_image(game: GameSpec) -> OmegaReport:
    code = game.code
    d = game.nvars
    basis = _bilinear_basis_with_players(code)
    _check_budget(len(basis), d)
    tables = np.zeros((len(basis), 1 << d), dtype=np.uint8)
    a, b = game.query_arrays()
    for k, (_, player) in enumerate(basis):
        tables[k] = a[:, player] & b[:, player]
    mask_x = _colspace_mask(code.hx)
    mask_z = _colspace_mask(code.hz)
    y_mask = None
    if mask_x is not None or mask_z is not None:
        mx = mask_x if mask_x is not None else np.ones(1 << game.dx, dtype=bool)
        mz = mask_z if mask_z is not None else np.ones(1 << game.dz, dtype=bool)
        y_mask = (mz[:, None] & mx[None, :]).reshape(-1)
    best = max_walsh_over_span(game.target, tables, y_mask=y_mask)
    omega = _omega_from_max(best.value, d)

    N = code.nqubits
    lam = [0] * N
    for k, (_, player) in enumerate(basis):
        if (best.coordinate >> k) & 1:
            lam[player] ^= 1
    y_x = BitVector(game.dx, best.y & ((1 << game.dx) - 1))
    y_z = BitVector(game.dz, best.y >> game.dx)
    beta = solve_affine(code.hx, y_x)
    gamma = solve_affine(code.hz, y_z)
    if beta is None or gamma is None:
        raise ConsistencyError("最优 Walsh 下标不在校验矩阵列空间中")
    alpha = [0] * N
    if best.sign < 0:
        alpha[0] = 1
    strategy = ClassicalStrategy.from_coefficients(code, alpha, beta[0].to_list(), gamma[0].to_list(), lam)
    _verify(game, strategy, omega)
    logger.info(f"ω 精确计算完成 {code}: ω={omega}, 双线性空间维数 {len(basis)}")
    return OmegaReport(omega, strategy, "exact")


def _player_features(game: GameSpec) -> List[Tuple[np.ndarray, int, int]]:
    """每个玩家的应答特征 (真值表, 玩家, 系数编号 1=a 2=b 3=ab)"""
    a, b = game.query_arrays()
    feats = []
    for i in range(game.nplayers):
        feats.append((a[:, i].astype(np.uint8), i, 1))
        feats.append((b[:, i].astype(np.uint8), i, 2))
        feats.append((a[:, i] & b[:, i], i, 3))
    return feats


def _omega_enumeration(game: GameSpec) -> OmegaReport:
    """固定列表输入：在玩家应答特征张成的空间上穷举"""
    d = game.nvars
    # 常数特征预先放入消元表，由 |W| 的符号处理
    const_packed = (1 << (1 << d)) - 1
    reduced: Dict[int, int] = {const_packed.bit_length() - 1: const_packed}
    chosen = []
    for table, player, kind in _player_features(game):
        packed = int.from_bytes(np.packbits(table, bitorder="little").tobytes(), "little")
        residue = packed
        while residue:
            top = residue.bit_length() - 1
            if top not in reduced:
                reduced[top] = residue
                chosen.append((table, player, kind))
                break
            residue ^= reduced[top]
    cap = config_manager.get_int("omega_span_max")
    if len(chosen) > cap:
        raise SizeLimitError(f"应答特征空间维数 {len(chosen)} 超出上限 {cap}", key="omega_span_max", limit=cap)
    tables = np.array([t for t, _, _ in chosen], dtype=np.uint8).reshape(len(chosen), 1 << d)
    y_mask = np.zeros(1 << d, dtype=bool)
    y_mask[0] = True
    best = max_walsh_over_span(game.target, tables, y_mask=y_mask)
    omega = _omega_from_max(best.value, d)
    N = game.nplayers
    coeffs = {1: [0] * N, 2: [0] * N, 3: [0] * N}
    for k, (_, player, kind) in enumerate(chosen):
        if (best.coordinate >> k) & 1:
            coeffs[kind][player] ^= 1
    alpha = [0] * N
    if best.sign < 0:
        alpha[0] = 1
    strategy = ClassicalStrategy.from_coefficients(game.code, alpha, coeffs[1], coeffs[2], coeffs[3])
    _verify(game, strategy, omega)
    logger.info(f"ω 穷举完成 {game.code}: ω={omega}, 特征维数 {len(chosen)}")
    return OmegaReport(omega, strategy, "enumeration")


def omega_exact(game: GameSpec) -> OmegaReport:
    """
    最优经典成功率 ω = ½(1 + 2^{-d} max_c W_f[c])

    两类输入都取整个像空间时，对双线性部分张成空间的每个元素做一次 FWHT；
    否则在玩家应答特征张成的空间上穷举。

    Args:
        game: XOR 模式的游戏

    Returns:
        OmegaReport: ω 与一个最优策略

    Raises:
        ModeError: 子测量模式
        SizeLimitError: 超出枚举预算
    """
    if game.mode is not GameMode.XOR:
        raise ModeError("omega_exact 只适用于 XOR 模式，子测量游戏请使用 oracle")
    if game.is_all_of_image():
        return _omega_all_of_image(game)
    return _omega_enumeration(game)


def omega_fixed_x(game: GameSpec) -> OmegaReport:
    """
    X 型问题固定为单个向量时 ω = 1 - 2^{-n}·N_f

    Args:
        game: I_X 为单元素列表、I_Z 为整个像空间且 H_Z 满秩的游戏

    Returns:
        OmegaReport: method = nonlinearity
    """
    code = game.code
    if (game.mode is not GameMode.XOR or game.inputs.ix is None or len(game.inputs.ix) != 1
            or game.inputs.iz is not None or rank(code.hz) != code.nz):
        raise ModeError("omega_fixed_x 需要 XOR 模式、单个 X 型问题、全部 Z 型问题且 H_Z 满秩")
    n = game.nvars
    nl = nonlinearity(game.target)
    omega = 1 - Fraction(nl, 1 << n)
    spectrum = walsh_transform(game.target)
    y = int(np.abs(spectrum.coeffs).argmax())
    gamma = solve_affine(code.hz, BitVector(n, y))
    N = code.nqubits
    alpha = [0] * N
    if spectrum[y] < 0:
        alpha[0] = 1
    strategy = ClassicalStrategy.from_coefficients(code, alpha, [0] * N, gamma[0].to_list(), [0] * N)
    _verify(game, strategy, omega)
    logger.info(f"固定 x 的 ω={omega}（非线性度 {nl}）")
    return OmegaReport(omega, strategy, "nonlinearity")


def _swap_answer_roles(table: int) -> int:
    """应答表中交换 a 与 b：第 1、2 位互换"""
    return (table & 0b1001) | ((table >> 1) & 0b0010) | ((table << 1) & 0b0100)


def omega_fixed_z(game: GameSpec) -> OmegaReport:
    """
    Z 型问题固定为单个向量时，互换 X/Z 角色后按 omega_fixed_x 计算

    目标函数 ½Σ a_i b_i 对 a、b 对称，互换后的游戏与原游戏 ω 相同；
    返回的策略已换回原游戏的 (a, b) 顺序。

    Args:
        game: I_Z 为单元素列表、I_X 为整个像空间且 H_X 满秩的游戏

    Returns:
        OmegaReport: method = nonlinearity
    """
    code = game.code
    if (game.mode is not GameMode.XOR or game.inputs.iz is None or len(game.inputs.iz) != 1
            or game.inputs.ix is not None):
        raise ModeError("omega_fixed_z 需要 XOR 模式、单个 Z 型问题与全部 X 型问题")
    swapped_code = code.swapped()
    swapped = build_game(swapped_code, InputSets.fixed_a(swapped_code, game.inputs.iz[0]))
    report = omega_fixed_x(swapped)
    strategy = ClassicalStrategy.from_answers(code, [_swap_answer_roles(t) for t in report.best.answers])
    _verify(game, strategy, report.omega)
    return OmegaReport(report.omega, strategy, "nonlinearity")


def omega_bruteforce_oracle(game: GameSpec) -> OmegaReport:
    """
    穷举每个玩家的全部 16 种应答函数并直接对局

    Args:
        game: XOR 或子测量模式的小游戏

    Returns:
        OmegaReport: method = oracle
    """
    N = game.nplayers
    d = game.nvars
    max_players = config_manager.get_int("oracle_max_players")
    max_vars = config_manager.get_int("oracle_max_vars")
    if N > max_players:
        raise SizeLimitError(f"暴力枚举最多支持 {max_players} 个玩家，得到 {N}", key="oracle_max_players", limit=max_players)
    if d > max_vars:
        raise SizeLimitError(f"暴力枚举最多支持 {max_vars} 个参数位，得到 {d}", key="oracle_max_vars", limit=max_vars)
    a, b = game.query_arrays()
    t = np.arange(16, dtype=np.int64)[:, None]
    # A[i][t, w]：玩家 i 采用应答表 t 时在问题 w 上的回答
    A = [((t >> (a[:, i].astype(np.int64) + 2 * b[:, i].astype(np.int64))[None, :]) & 1).astype(np.uint8)
         for i in range(N)]

    def broadcast(i: int, column: np.ndarray) -> np.ndarray:
        shape = [1] * N
        shape[i] = 16
        return column.reshape(shape)

    wins = np.zeros((16,) * N, dtype=np.int64)
    for w in range(1 << d):
        if game.mode is GameMode.XOR:
            total = np.zeros((1,) * N, dtype=np.uint8)
            for i in range(N):
                total = total ^ broadcast(i, A[i][:, w])
            wins += (total == game.target.evaluate(w))
        else:
            ok = np.ones((1,) * N, dtype=bool)
            for c in game.constraints[w]:
                parity = np.zeros((1,) * N, dtype=np.uint8)
                for i in c.support:
                    parity = parity ^ broadcast(i, A[i][:, w])
                ok = ok & (parity == c.parity)
            wins += ok
    flat = int(wins.argmax())
    best_answers = np.unravel_index(flat, wins.shape)
    omega = Fraction(int(wins.reshape(-1)[flat]), 1 << d)
    strategy = ClassicalStrategy.from_answers(game.code, [int(v) for v in best_answers])
    logger.info(f"暴力枚举 ω={omega}")
    return OmegaReport(omega, strategy, "oracle")


def omega_bounds(game: GameSpec) -> OmegaReport:
    """
    ω 的上下界

    下界取常数与全部允许线性策略中的最优者（一次 FWHT）；
    上界为 ½(1 + 2^{-d} Σ_x max_y |W_{f_x}(y)|)，要求 Z 型问题取整个像空间。

    Args:
        game: XOR 模式的游戏

    Returns:
        OmegaReport: method = bounds
    """
    if game.mode is not GameMode.XOR:
        raise ModeError("omega_bounds 只适用于 XOR 模式")
    d = game.nvars
    spectrum = walsh_transform(game.target)
    mags = np.abs(spectrum.coeffs)
    if game.is_all_of_image():
        mask_x = _colspace_mask(game.code.hx)
        mask_z = _colspace_mask(game.code.hz)
        if mask_x is not None or mask_z is not None:
            mx = mask_x if mask_x is not None else np.ones(1 << game.dx, dtype=bool)
            mz = mask_z if mask_z is not None else np.ones(1 << game.dz, dtype=bool)
            mags = np.where((mz[:, None] & mx[None, :]).reshape(-1), mags, 0)
        lower_w = int(mags.max())
    else:
        lower_w = int(mags[0])
    lower = _omega_from_max(lower_w, d)

    if game.inputs.iz is None:
        dx, dz = game.dx, game.dz
        columns = game.target.table.reshape(1 << dz, 1 << dx)
        total = 0
        for x in range(1 << dx):
            total += walsh_transform(BooleanFunction(dz, columns[:, x])).max_abs()
        upper = Fraction((1 << d) + total, 1 << (d + 1))
    else:
        logger.warning("Z 型问题为固定列表，上界退化为 1")
        upper = Fraction(1)
    logger.info(f"ω 上下界: [{lower}, {upper}]")
    return OmegaReport(None, None, "bounds", lower=lower, upper=upper)


def omega_upper_nonquadraticity(game: GameSpec) -> Fraction:
    """
    由非二次度给出的上界 1 - 2^{-d} χ_f

    Args:
        game: 两类输入都取整个像空间的 XOR 游戏

    Returns:
        Fraction: 上界
    """
    if game.mode is not GameMode.XOR or not game.is_all_of_image():
        raise ModeError("非二次度上界要求 XOR 模式且两类输入都取整个像空间")
    chi = nonquadraticity(game.target)
    return 1 - Fraction(chi, 1 << game.nvars)


def constant_strategy_value(game: GameSpec) -> Fraction:
    """所有玩家只回答常数时的成功率 ½(1 + 2^{-d}|W_f(0)|)，即 ω 的一个平凡下界"""
    w0 = abs(int(game.target.signs().sum()))
    return _omega_from_max(w0, game.nvars)


def compute_omega(game: GameSpec, method: str = "exact") -> OmegaReport:
    """按方法名分派"""
    if method == "exact":
        return omega_exact(game)
    if method == "bounds":
        return omega_bounds(game)
    if method == "oracle":
        return omega_bruteforce_oracle(game)
    if method == "nonlinearity":
        if game.inputs.ix is None and game.inputs.iz is not None:
            return omega_fixed_z(game)
        return omega_fixed_x(game)
    raise ModeError(f"未知的 ω 计算方法: {method}")
