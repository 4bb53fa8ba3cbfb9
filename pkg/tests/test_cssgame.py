#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
CSS 码与游戏构造测试
"""

import sys
import os
import tempfile
import unittest

import numpy as np

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.boolfn import nonlinearity
from src.cssgame import (
    CliffordLabel,
    CssCode,
    GameMode,
    InputSets,
    build_game,
    clifford_dress,
    cluster_code,
    dual_medial_graph,
    game_from_json,
    game_to_json,
    honeycomb_lattice,
    ghz_code,
    named_code,
    parse_gates,
    read_code,
    read_game,
    square_lattice,
    target_anf_coefficients,
    toric_honeycomb_code,
    toric_square_code,
    write_code,
)
from src.cssgame.game import submeasurement_constraints
from src.f2 import BitMatrix, BitVector, rank
from src.utils.errors import FormatError, InvalidCodeError, InvalidInputError, ParameterError


class TestCodes(unittest.TestCase):
    """测试码的构造"""

    def test_ghz3(self):
        code = ghz_code(3)
        self.assertEqual(code.hx.to_strings(), ["111"])
        self.assertEqual(code.hz.to_strings(), ["110", "011"])
        self.assertEqual(str(code), "CssCode(GHZ(3), N=3, nx=1, nz=2)")

    def test_toric_square_2(self):
        code = toric_square_code(2)
        self.assertEqual(code.nqubits, 8)
        self.assertEqual((code.nx, code.nz), (3, 3))
        self.assertTrue(code.is_full_rank())
        redundant = toric_square_code(2, redundant=True)
        self.assertEqual(rank(redundant.hx), 3)
        self.assertEqual(redundant.nx, 4)

    def test_cluster_4(self):
        code = cluster_code(4)
        self.assertEqual(code.nqubits, 4)
        self.assertEqual(code.nx + code.nz, 4)
        self.assertTrue(code.is_full_rank())

    def test_honeycomb(self):
        code = toric_honeycomb_code(2, 2)
        self.assertEqual(code.nqubits, 12)
        self.assertTrue(code.is_full_rank())

    def test_invalid_sizes(self):
        with self.assertRaises(ParameterError):
            ghz_code(1)
        with self.assertRaises(ParameterError):
            cluster_code(5)
        with self.assertRaises(ParameterError):
            square_lattice(3)
        with self.assertRaises(ParameterError):
            named_code("surface", 3)

    def test_non_commuting(self):
        with self.assertRaises(InvalidCodeError):
            CssCode(BitMatrix.from_strings(["10"]), BitMatrix.from_strings(["11"]))

    def test_named(self):
        self.assertEqual(named_code("GHZ", 4).nqubits, 4)
        self.assertEqual(named_code("toric-square", 2).nqubits, 8)


class TestCodeFile(unittest.TestCase):
    """测试码文件"""

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmpdir.name, "code.txt")

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_write_then_read(self):
        code = ghz_code(4)
        write_code(code, self.path)
        loaded = read_code(self.path)
        self.assertEqual(loaded.hx, code.hx)
        self.assertEqual(loaded.hz, code.hz)

    def test_single_block(self):
        with open(self.path, "w", encoding="utf-8") as f:
            f.write("1 3\n111\n")
        with self.assertRaises(FormatError):
            read_code(self.path)


class TestXorGame(unittest.TestCase):
    """测试XOR游戏"""

    def test_ghz3_anf(self):
        game = build_game(ghz_code(3))
        self.assertEqual(game.anf.sorted_terms(), [[0, 1], [0, 2], [0, 1, 2]])
        self.assertEqual(game.target.degree(), 3)
        self.assertEqual(game.nplayers, 3)
        self.assertEqual(game.nqueries, 8)

    def test_ghz3_fixed_x_is_or(self):
        code = ghz_code(3)
        game = build_game(code, InputSets.fixed_x(code, BitVector.from_string("1")))
        self.assertEqual(game.target.to_string(), "0111")

    def test_two_qubit_code(self):
        code = CssCode(BitMatrix.from_strings(["11"]), BitMatrix.from_strings(["11"]))
        game = build_game(code)
        self.assertEqual(game.target.to_string(), "0001")
        self.assertEqual(target_anf_coefficients(code).sorted_terms(), [[0, 1]])

    def test_direct_matches_anf(self):
        for code in (ghz_code(5), cluster_code(6), toric_square_code(2)):
            game = build_game(code)
            self.assertEqual(game.target.nvars, code.nx + code.nz)
            self.assertTrue(np.array_equal(target_anf_coefficients(code).to_table(), game.target.table))

    def test_input_outside_row_space(self):
        code = ghz_code(3)
        with self.assertRaises(InvalidInputError):
            InputSets.fixed_a(code, BitVector.from_string("100"))

    def test_list_length_power_of_two(self):
        code = ghz_code(3)
        inputs = InputSets(None, tuple(BitVector.from_string(s) for s in ("000", "110", "011")))
        with self.assertRaises(InvalidInputError):
            build_game(code, inputs)

    def test_json_roundtrip(self):
        code = ghz_code(3)
        game = build_game(code, InputSets.fixed_x(code, BitVector.from_string("1")))
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "game.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write(game_to_json(game))
            loaded = read_game(path)
        self.assertEqual(loaded.target, game.target)
        self.assertEqual(loaded.mode, GameMode.XOR)

    def test_json_format_error(self):
        with self.assertRaises(FormatError) as ctx:
            game_from_json('{\n  "nqubits": 3,\n  oops\n}')
        self.assertEqual(ctx.exception.line, 3)


class TestSubmeasurement(unittest.TestCase):
    """测试子测量约束"""

    def test_ghz4_all_z(self):
        code = ghz_code(4)
        a = np.zeros(4, dtype=np.uint8)
        b = np.ones(4, dtype=np.uint8)
        constraints = submeasurement_constraints(code, a, b)
        supports = {c.support for c in constraints}
        self.assertTrue({(0, 1), (1, 2), (2, 3), (0, 1, 2, 3)} <= supports)
        self.assertTrue(all(c.parity == 0 for c in constraints))

    def test_ghz4_yyxx(self):
        code = ghz_code(4)
        a = np.ones(4, dtype=np.uint8)
        b = np.array([1, 1, 0, 0], dtype=np.uint8)
        constraints = submeasurement_constraints(code, a, b)
        self.assertEqual(len(constraints), 1)
        self.assertEqual(constraints[0].support, (0, 1, 2, 3))
        self.assertEqual(constraints[0].parity, 1)

    def test_game_carries_constraints(self):
        game = build_game(ghz_code(3), mode=GameMode.SUBMEASUREMENT)
        self.assertEqual(len(game.constraints), game.nqueries)
        self.assertEqual(game.constraints[0], ())


class TestDualMedial(unittest.TestCase):
    """测试对偶中介图"""

    def test_square_faces(self):
        lattice = square_lattice(2)
        dual = dual_medial_graph(lattice)
        self.assertEqual(dual.nnodes, lattice.nplaquettes + lattice.nvertices)
        self.assertEqual(len(dual.faces), lattice.nedges)
        self.assertTrue(all(len(face) == 4 for face in dual.faces))
        self.assertLessEqual(dual.target_anf().degree(), 3)

    def test_target_matches_direct_target(self):
        for lattice in (square_lattice(2), honeycomb_lattice(2, 2)):
            dual = dual_medial_graph(lattice)
            game = build_game(lattice.code(redundant=True))
            self.assertEqual(game.nvars, dual.nnodes)
            self.assertEqual(dual.target_function(), game.target)


class TestClifford(unittest.TestCase):
    """测试单比特Clifford修饰"""

    def test_identity_dressing(self):
        game = build_game(ghz_code(3))
        dressed, shift = clifford_dress(game, parse_gates(["I", "I", "I"]))
        self.assertEqual(shift.weight(), 0)
        self.assertEqual(dressed, game.target)

    def test_pauli_x_shift_is_linear(self):
        game = build_game(ghz_code(3))
        _, shift = clifford_dress(game, [CliffordLabel("I", "X"), CliffordLabel(), CliffordLabel()])
        _, b = game.query_arrays()
        self.assertTrue(np.array_equal(shift.table, b[:, 0]))
        self.assertLessEqual(shift.degree(), 1)

    def test_dressing_keeps_nonlinearity_for_paulis(self):
        game = build_game(ghz_code(4))
        dressed, _ = clifford_dress(game, parse_gates(["X", "Y", "Z", "I"]))
        self.assertEqual(nonlinearity(dressed), nonlinearity(game.target))

    def test_bad_label(self):
        with self.assertRaises(ParameterError):
            CliffordLabel("Q", "I")


if __name__ == "__main__":
    unittest.main()
