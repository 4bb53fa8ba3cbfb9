#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
命令行入口测试
"""

import sys
import os
import io
import json
import unittest
from contextlib import redirect_stdout

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.main import main
from src.utils.config_manager import config_manager


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


class TestCli(unittest.TestCase):
    """测试子命令与退出码"""

    def setUp(self):
        self.threads = config_manager.get("threads")
        self.output_path = os.path.join(os.path.dirname(__file__), "cli_output.json")

    def tearDown(self):
        config_manager.set("threads", self.threads)
        if os.path.exists(self.output_path):
            os.remove(self.output_path)

    def test_omega_fixed_x(self):
        code, out = run(["game", "omega", "--code", "ghz", "--n", "3", "--fix-x", "1"])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["omega"], "3/4")
        self.assertEqual(data["nvars"], 2)

    def test_game_build(self):
        code, out = run(["game", "build", "--code", "cluster", "--n", "4"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["mode"], "xor")

    def test_play_codeword(self):
        code, out = run(["game", "play", "--code", "ghz", "--n", "3"])
        self.assertEqual(code, 0)
        self.assertAlmostEqual(json.loads(out)["score"], 1.0, places=9)

    def test_standard_form(self):
        code, out = run(["standard-form", "--graph", "path:5"])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual((data["rank"], data["bell_pairs"], data["isolated"]), (4, 2, 1))

    def test_standard_form_matrix_file(self):
        rows = ["".join("0" if i == j else "1" for j in range(5)) for i in range(5)]
        with open(self.output_path, "w", encoding="utf-8") as f:
            f.write("# K5\n5 5\n" + "\n".join(rows) + "\n")
        code, out = run(["standard-form", "--matrix", self.output_path])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual((data["rank"], data["bell_pairs"]), (4, 2))

    def test_matrix_format_error(self):
        with open(self.output_path, "w", encoding="utf-8") as f:
            f.write("2 2\n01\n1x\n")
        code, out = run(["standard-form", "--matrix", self.output_path])
        self.assertEqual(code, 1)
        data = json.loads(out)
        self.assertEqual(data["error"], "FormatError")
        self.assertEqual(data["line"], 3)

    def test_sweep_defaults_to_csv(self):
        code, out = run(["fig2", "--game", "ghz3", "--steps", "2"])
        self.assertEqual(code, 0)
        lines = out.strip().splitlines()
        self.assertEqual(lines[0], "theta,pauli_score,ncf,bound")
        self.assertEqual(len(lines), 3)

    def test_output_file(self):
        code, out = run(["--output", self.output_path, "statmech", "plaquette", "--L", "2"])
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        with open(self.output_path, encoding="utf-8") as f:
            self.assertEqual(json.load(f)["ground_states"], 4)

    def test_threads_option(self):
        code, _ = run(["--threads", "2", "statmech", "digamma"])
        self.assertEqual(code, 0)
        self.assertEqual(config_manager.get_int("threads"), 2)

    def test_error_json(self):
        code, out = run(["statmech", "cluster-bounds", "--n", "5"])
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["error"], "ParameterError")

    def test_missing_game_source(self):
        code, out = run(["game", "omega"])
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["error"], "ParameterError")

    def test_mode_sub_alias(self):
        for mode in ("sub", "submeasurement"):
            code, out = run(["game", "build", "--code", "ghz", "--n", "3", "--mode", mode])
            self.assertEqual(code, 0)
            self.assertEqual(json.loads(out)["mode"], "sub")

    def test_omega_fixed_z_nonlinearity(self):
        code, out = run(["game", "omega", "--code", "cluster", "--n", "4", "--fix-z", "11",
                         "--method", "nonlinearity"])
        self.assertEqual(code, 0)
        by_swap = json.loads(out)
        code, out = run(["game", "omega", "--code", "cluster", "--n", "4", "--fix-z", "11"])
        self.assertEqual(code, 0)
        self.assertEqual(by_swap["omega"], json.loads(out)["omega"])
        self.assertEqual(by_swap["method"], "nonlinearity")

    def test_fix_x_and_fix_z_exclusive(self):
        code, out = run(["game", "build", "--code", "ghz", "--n", "3", "--fix-x", "1", "--fix-z", "11"])
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["error"], "ParameterError")

    def test_walsh_graph_methods_agree(self):
        with open(self.output_path, "w", encoding="utf-8") as f:
            f.write("4 4\n0100\n1010\n0101\n0010\n")
        results = {}
        for method in ("fwht", "symmetry"):
            code, out = run(["walsh", "--graph", self.output_path, "--method", method])
            self.assertEqual(code, 0)
            results[method] = json.loads(out)
        self.assertEqual(results["fwht"]["rows"], results["symmetry"]["rows"])
        self.assertEqual(results["symmetry"]["max_abs"], 4)
        self.assertTrue(results["symmetry"]["bent"])

    def test_walsh_graph_descriptor(self):
        code, out = run(["walsh", "--graph", "path:5", "--method", "symmetry"])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["nvars"], 5)
        self.assertEqual(data["max_abs"], 8)

    def test_walsh_symmetry_needs_graph(self):
        with open(self.output_path, "w", encoding="utf-8") as f:
            f.write("2\n0110\n")
        code, out = run(["walsh", "--table", self.output_path, "--method", "symmetry"])
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["error"], "ParameterError")

    def test_usage_error(self):
        with self.assertRaises(SystemExit) as ctx:
            run(["no-such-command"])
        self.assertEqual(ctx.exception.code, 2)


if __name__ == "__main__":
    unittest.main()
