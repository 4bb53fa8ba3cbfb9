#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
CssGames - CSS 码非局域游戏计算工具
命令行入口
"""

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.boolfn.boolean_function import read_truth_table, walsh_transform
from src.contextuality.ncf import SWEEP_GAMES, fig2_sweep, ncf, scenario_from_game
from src.cssgame.css_code import InputSets, read_code
from src.cssgame.game import GameMode, GameSpec, build_game, game_to_dict, read_game
from src.cssgame.lattice import named_code
from src.f2.bitmatrix import BitVector, read_matrix
from src.graphstate.graph import Graph
from src.graphstate.standard_form import (
    bell_extraction_circuit,
    standard_form,
    symmetry_walsh_spectrum,
    verify_bell_extraction,
)
from src.quantum.empirical import empirical_model, read_model, read_scenario
from src.quantum.states import build_state, parse_state_kind
from src.quantum.strategies import merp_strategy_score, pauli_strategy_score
from src.statmech.integrals import digamma_identity_check
from src.statmech.loops import loop_rates
from src.statmech.plaquette import PLAQUETTE_WALSH_MAX_L, plaquette_ising_count, plaquette_ising_walsh
from src.statmech.transfer import (
    ccz_charpoly,
    cluster_lambda_closed_form,
    cluster_lambda_numeric,
    cluster_upper_rate,
    cluster_w00,
    ghz_walsh_check,
    ghz_walsh_periodic,
    ghz_walsh_via_transfer,
)
from src.strategy.classical import compute_omega
from src.utils.config_manager import config_manager
from src.utils.errors import CssGameError, ParameterError
from src.utils.logger import logger, set_console_level

EXIT_OK = 0
EXIT_ERROR = 1


# ---- 输出 ----
def _csv_rows(data: Any) -> List[Dict[str, Any]]:
    if isinstance(data, dict) and "rows" in data:
        return data["rows"]
    if isinstance(data, list):
        return data
    return [{k: (json.dumps(v, ensure_ascii=False) if isinstance(v, (dict, list)) else v) for k, v in data.items()}]


def render(data: Any, fmt: str) -> str:
    """按 json / csv 渲染结果；CSV 总是带表头，列顺序与首行字典一致"""
    if fmt == "json":
        return json.dumps(data, ensure_ascii=False, indent=2) + "\n"
    rows = _csv_rows(data)
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def emit(data: Any, args: argparse.Namespace, default_format: str = "json") -> None:
    text = render(data, args.format or default_format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"结果已写入 {args.output}")
    else:
        sys.stdout.write(text)


# ---- 游戏参数 ----
def add_game_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec", help="游戏 JSON 文件（与 --code 二选一）")
    parser.add_argument("--code", help="码文件，或码类型 ghz / cluster / toric-square / toric-honeycomb")
    parser.add_argument("--n", type=int, nargs="+", default=[], help="码的尺寸参数")
    parser.add_argument("--code-file", help="码文件（两个矩阵块）")
    parser.add_argument("--redundant", action="store_true", help="环面码保留冗余生成元")
    parser.add_argument("--fix-x", help="把 X 型问题固定为生成元标签，如 1 或 101")
    parser.add_argument("--fix-z", help="把 Z 型问题固定为生成元标签；nonlinearity 方法在 X/Z 互换后计算")
    parser.add_argument("--mode", choices=["xor", "sub", "submeasurement"], default="xor",
                        help="xor 或 sub（子测量游戏，submeasurement 为别名）")


def game_from_args(args: argparse.Namespace) -> GameSpec:
    if args.spec:
        return read_game(args.spec)
    if args.code_file:
        code = read_code(args.code_file)
    elif args.code:
        if os.path.isfile(args.code):
            code = read_code(args.code)
        else:
            code = named_code(args.code, *args.n, redundant=args.redundant)
    else:
        raise ParameterError("需要 --spec、--code 或 --code-file 之一")
    if args.fix_x and args.fix_z:
        raise ParameterError("--fix-x 与 --fix-z 只能取其一")
    if args.fix_x:
        inputs = InputSets.fixed_x(code, BitVector.from_string(args.fix_x))
    elif args.fix_z:
        inputs = InputSets.fixed_z(code, BitVector.from_string(args.fix_z))
    else:
        inputs = InputSets.unrestricted()
    mode = GameMode.XOR if args.mode == "xor" else GameMode.SUBMEASUREMENT
    return build_game(code, inputs, mode)


def graph_from_text(text: str, rng: np.random.Generator) -> Graph:
    """complete:5 / path:4 / cycle:6 / torus:3 / random:8"""
    kind, _, size = text.partition(":")
    try:
        n = int(size)
    except ValueError as e:
        raise ParameterError(f"无法解析图描述: {text}") from e
    builders = {
        "complete": Graph.complete,
        "path": Graph.path,
        "cycle": Graph.cycle,
        "torus": Graph.grid_torus,
        "empty": Graph.empty,
    }
    if kind == "random":
        return Graph.random_graph(rng, n)
    if kind not in builders:
        raise ParameterError(f"未知的图类型: {kind}")
    return builders[kind](n)


# ---- 子命令 ----
def cmd_game_build(args: argparse.Namespace) -> Any:
    return game_to_dict(game_from_args(args))


def cmd_game_omega(args: argparse.Namespace) -> Any:
    game = game_from_args(args)
    report = compute_omega(game, args.method)
    data = report.to_dict()
    data["code"] = str(game.code)
    data["nvars"] = game.nvars
    return data


def cmd_game_play(args: argparse.Namespace) -> Any:
    game = game_from_args(args)
    kind = parse_state_kind(args.state, game.code)
    state = build_state(kind)
    if args.strategy == "pauli":
        score = pauli_strategy_score(state, game)
    else:
        score = merp_strategy_score(game, state)
    return {"code": str(game.code), "mode": game.mode.value, "state": args.state,
            "strategy": args.strategy, "score": score}


def cmd_standard_form(args: argparse.Namespace) -> Any:
    rng = np.random.default_rng(args.seed)
    if args.matrix:
        graph = Graph.from_adjacency(read_matrix(args.matrix))
    elif args.graph:
        graph = graph_from_text(args.graph, rng)
    else:
        raise ParameterError("需要 --matrix 或 --graph")
    result = standard_form(graph)
    data: Dict[str, Any] = {
        "nvertices": graph.nvertices,
        "rank": result.rank2k,
        "bell_pairs": result.npairs,
        "isolated": graph.nvertices - result.rank2k,
        "reduced": result.reduced.to_strings(),
        "transform": result.transform.to_strings(),
        "operations": [list(op) for op in result.operations],
    }
    if args.circuit:
        data["circuit"] = [repr(g) for g in bell_extraction_circuit(graph)]
        data["bell_overlap"] = verify_bell_extraction(graph)
    return data


def graph_from_source(source: str, rng: np.random.Generator) -> Graph:
    """已存在的文件按邻接矩阵读取，否则按 path:5 一类的描述构造"""
    if os.path.isfile(source):
        return Graph.from_adjacency(read_matrix(source))
    return graph_from_text(source, rng)


def cmd_walsh(args: argparse.Namespace) -> Any:
    if bool(args.table) == bool(args.graph):
        raise ParameterError("需要 --table 与 --graph 之一")
    if args.table:
        if args.method == "symmetry":
            raise ParameterError("symmetry 方法需要 --graph 给出的二次函数")
        f = read_truth_table(args.table)
        spectrum = walsh_transform(f)
    else:
        graph = graph_from_source(args.graph, np.random.default_rng(args.seed))
        f = graph.boolean_function()
        spectrum = symmetry_walsh_spectrum(graph) if args.method == "symmetry" else walsh_transform(f)
    d = f.nvars
    max_abs = spectrum.max_abs()
    rows = [{"y": y, "coefficient": int(c)} for y, c in enumerate(spectrum.coeffs)]
    return {
        "nvars": d,
        "method": args.method,
        "max_abs": max_abs,
        "nonlinearity": (1 << d) // 2 - max_abs // 2 if d else 0,
        "bent": d % 2 == 0 and bool(np.all(np.abs(spectrum.coeffs) == 1 << (d // 2))),
        "rows": rows,
    }


def cmd_ncf(args: argparse.Namespace) -> Any:
    return ncf(read_model(args.model), exact=args.exact).to_dict()


def cmd_ncf_model(args: argparse.Namespace) -> Any:
    game = game_from_args(args) if (args.spec or args.code or args.code_file) else None
    if args.scenario:
        scenario = read_scenario(args.scenario)
    elif game is not None:
        scenario = scenario_from_game(game)
    else:
        raise ParameterError("需要 --scenario 或游戏参数")
    state = build_state(parse_state_kind(args.state, game.code if game else None))
    return empirical_model(state, scenario).to_dict()


def cmd_fig2(args: argparse.Namespace) -> Any:
    rows = fig2_sweep(args.game, args.theta_max, args.steps)
    return {"game": args.game, "rows": [row.to_dict() for row in rows]}


def cmd_cluster_bounds(args: argparse.Namespace) -> Any:
    w00 = cluster_w00(args.n)
    return {
        "N": args.n,
        "w00": w00,
        "rate": abs(w00) ** (1 / args.n),
        "lambda_closed_form": cluster_lambda_closed_form(),
        "lambda_numeric": cluster_lambda_numeric(),
        "charpoly": str(ccz_charpoly().as_expr()),
        "upper_rate": cluster_upper_rate(),
    }


def cmd_loop(args: argparse.Namespace) -> Any:
    try:
        lx, ly = (int(v) for v in args.cells.lower().split("x"))
    except ValueError as e:
        raise ParameterError(f"--cells 需要形如 3x3，得到 {args.cells}") from e
    return loop_rates(lx, ly).to_dict()


def cmd_digamma(args: argparse.Namespace) -> Any:
    return digamma_identity_check().to_dict()


def cmd_plaquette(args: argparse.Namespace) -> Any:
    if args.L <= PLAQUETTE_WALSH_MAX_L:
        return plaquette_ising_walsh(args.L).to_dict()
    return {"L": args.L, "ground_states": plaquette_ising_count(args.L)}


def cmd_ghz_walsh(args: argparse.Namespace) -> Any:
    ghz_walsh_check(args.n, periodic=args.periodic)
    walsh = ghz_walsh_periodic if args.periodic else ghz_walsh_via_transfer
    rows = [{"y": y, "coefficient": walsh(args.n, y)} for y in range(1 << args.n)]
    return {"n": args.n, "periodic": args.periodic, "rows": rows}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cssgames", description="CSS 码非局域游戏计算工具")
    parser.add_argument("--format", choices=["json", "csv"], default=None, help="输出格式")
    parser.add_argument("--output", help="输出文件，缺省写到标准输出")
    parser.add_argument("--threads", type=int, help="工作线程数上限")
    parser.add_argument("--config", help="配置文件路径")
    parser.add_argument("--seed", type=int, default=0, help="随机数种子")
    parser.add_argument("--verbose", action="store_true", help="控制台输出 DEBUG 日志")
    sub = parser.add_subparsers(dest="command", required=True)

    game = sub.add_parser("game", help="构造游戏、计算 ω、模拟量子策略")
    game_sub = game.add_subparsers(dest="game_command", required=True)
    p = game_sub.add_parser("build")
    add_game_arguments(p)
    p.set_defaults(handler=cmd_game_build)
    p = game_sub.add_parser("omega")
    add_game_arguments(p)
    p.add_argument("--method", choices=["exact", "bounds", "oracle", "nonlinearity"], default="exact")
    p.set_defaults(handler=cmd_game_omega)
    p = game_sub.add_parser("play")
    add_game_arguments(p)
    p.add_argument("--state", default="codeword", help="ghz / codeword / plus / deformed:θ / ...")
    p.add_argument("--strategy", choices=["pauli", "merp"], default="pauli")
    p.set_defaults(handler=cmd_game_play)

    p = sub.add_parser("standard-form", help="二次函数（图）的标准形")
    p.add_argument("--matrix", help="邻接矩阵文件")
    p.add_argument("--graph", help="complete:N / path:N / cycle:N / torus:L / random:N")
    p.add_argument("--circuit", action="store_true", help="同时给出 Bell 对提取线路")
    p.set_defaults(handler=cmd_standard_form)

    p = sub.add_parser("walsh", help="真值表或图函数的 Walsh 谱")
    p.add_argument("--table", help="真值表文件")
    p.add_argument("--graph", help="邻接矩阵文件或 complete:N / path:N 等描述")
    p.add_argument("--method", choices=["fwht", "symmetry"], default="fwht", help="symmetry 仅用于 --graph")
    p.set_defaults(handler=cmd_walsh)

    p = sub.add_parser("ncf", help="经验模型的非情境分数")
    p.add_argument("--model", required=True)
    p.add_argument("--exact", action="store_true", help="有理数精确求解")
    p.set_defaults(handler=cmd_ncf)

    p = sub.add_parser("ncf-model", help="由态与测量场景生成经验模型")
    add_game_arguments(p)
    p.add_argument("--state", required=True)
    p.add_argument("--scenario", help="测量场景 JSON，缺省时由游戏给出")
    p.set_defaults(handler=cmd_ncf_model)

    p = sub.add_parser("fig2", help="形变码字上的 θ 扫描")
    p.add_argument("--game", choices=list(SWEEP_GAMES), required=True)
    p.add_argument("--theta-max", type=float, default=0.5)
    p.add_argument("--steps", type=int, default=21)
    p.set_defaults(handler=cmd_fig2, default_format="csv")

    statmech = sub.add_parser("statmech", help="统计力学映射")
    stat_sub = statmech.add_subparsers(dest="statmech_command", required=True)
    p = stat_sub.add_parser("cluster-bounds")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_cluster_bounds)
    p = stat_sub.add_parser("loop")
    p.add_argument("--cells", required=True, help="蜂窝环面元胞数，如 3x3")
    p.set_defaults(handler=cmd_loop)
    p = stat_sub.add_parser("digamma")
    p.set_defaults(handler=cmd_digamma)
    p = stat_sub.add_parser("plaquette")
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(handler=cmd_plaquette)
    p = stat_sub.add_parser("ghz-walsh")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--periodic", action="store_true")
    p.set_defaults(handler=cmd_ghz_walsh)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    命令行主函数

    Args:
        argv: 参数列表，缺省取 sys.argv[1:]

    Returns:
        int: 0 成功；1 计算错误（错误 JSON 写到标准输出）；用法错误由 argparse 以 2 退出
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        set_console_level(logging.DEBUG)
    try:
        if args.config:
            config_manager.load_file(args.config)
        if args.threads is not None:
            if args.threads < 1:
                raise ParameterError(f"--threads 必须为正，得到 {args.threads}")
            config_manager.set("threads", args.threads)
        data = args.handler(args)
        emit(data, args, getattr(args, "default_format", "json"))
        return EXIT_OK
    except CssGameError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        sys.stdout.write(json.dumps(e.to_dict(), ensure_ascii=False) + "\n")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"文件读写失败: {e}")
        sys.stdout.write(json.dumps({"error": "IOError", "message": str(e)}, ensure_ascii=False) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
