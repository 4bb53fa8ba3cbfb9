#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
经典策略与最优成功率测试
"""

import sys
import os
import random
import unittest
from fractions import Fraction

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cssgame import CliffordLabel, CssCode, GameMode, InputSets, build_game, clifford_dress, cluster_code, ghz_code
from src.cssgame.clifford import P_LABELS, V_LABELS
from src.f2 import BitMatrix, BitVector
from src.strategy import (
    ClassicalStrategy,
    bilinear_span_basis,
    compute_omega,
    omega_bounds,
    omega_bruteforce_oracle,
    omega_exact,
    omega_fixed_x,
    omega_fixed_z,
    omega_upper_nonquadraticity,
    strategy_success,
    constant_strategy_value,
)
from src.statmech import cluster_w00
from src.utils.errors import ModeError


def ghz_fixed_game(N: int):
    code = ghz_code(N)
    return build_game(code, InputSets.fixed_x(code, BitVector.from_string("1")))


def two_qubit_game():
    return build_game(CssCode(BitMatrix.from_strings(["11"]), BitMatrix.from_strings(["11"])))


class TestBilinearSpan(unittest.TestCase):
    """测试双线性部分的张成空间"""

    def test_dimensions(self):
        self.assertEqual(len(bilinear_span_basis(ghz_code(3))), 2)
        self.assertEqual(len(bilinear_span_basis(two_qubit_game().code)), 1)


class TestOmegaExact(unittest.TestCase):
    """测试最优经典成功率"""

    def test_ghz3_fixed_x(self):
        report = omega_exact(ghz_fixed_game(3))
        self.assertEqual(report.omega, Fraction(3, 4))
        self.assertEqual(report.to_dict()["omega"], "3/4")

    def test_cluster4(self):
        game = build_game(cluster_code(4))
        report = omega_exact(game)
        self.assertEqual(report.omega, Fraction(7, 8))
        self.assertEqual(strategy_success(game, report.best), report.omega)

    def test_ghz_unrestricted(self):
        for N in (3, 4, 5, 6):
            n = N - 1
            expected = (3 + Fraction(1, 2 ** (n // 2))) / 4
            self.assertEqual(omega_exact(build_game(ghz_code(N))).omega, expected)

    def test_basis_change_invariance(self):
        code = ghz_code(4)
        changed = code.with_basis_change(BitMatrix.identity(1), BitMatrix.from_strings(["100", "110", "011"]))
        self.assertEqual(omega_exact(build_game(code)).omega, omega_exact(build_game(changed)).omega)

    def test_submeasurement_rejected(self):
        with self.assertRaises(ModeError):
            omega_exact(build_game(ghz_code(3), mode=GameMode.SUBMEASUREMENT))

    def test_constant_strategy_not_optimal_for_cluster4(self):
        game = build_game(cluster_code(4))
        self.assertEqual(constant_strategy_value(game), Fraction(3, 4))
        self.assertLess(constant_strategy_value(game), omega_exact(game).omega)

    def test_constant_strategy_matches_transfer_trace(self):
        for N in (4, 6, 8):
            expected = (1 + Fraction(abs(cluster_w00(N)), 2 ** N)) / 2
            self.assertEqual(constant_strategy_value(build_game(cluster_code(N))), expected)

    def test_cluster6_constant_strategy_optimal(self):
        omega = omega_exact(build_game(cluster_code(6))).omega
        self.assertEqual(omega, (1 + Fraction(cluster_w00(6), 64)) / 2)
        self.assertEqual(omega, Fraction(23, 32))


class TestOmegaFixedX(unittest.TestCase):
    """测试固定 x 时的非线性度公式"""

    def test_ghz_values(self):
        self.assertEqual(omega_fixed_x(ghz_fixed_game(5)).omega, Fraction(5, 8))
        self.assertEqual(omega_fixed_x(ghz_fixed_game(4)).omega, Fraction(3, 4))

    def test_requires_single_x(self):
        with self.assertRaises(ModeError):
            omega_fixed_x(build_game(ghz_code(3)))

    def test_agrees_with_exact(self):
        for N in range(3, 7):
            game = ghz_fixed_game(N)
            self.assertEqual(omega_fixed_x(game).omega, omega_exact(game).omega)

    def test_ghz_formula_up_to_eight(self):
        for N in range(3, 9):
            expected = (1 + Fraction(1, 2 ** ((N - 1) // 2))) / 2
            self.assertEqual(omega_fixed_x(ghz_fixed_game(N)).omega, expected)

    def test_fixed_z_matches_exact(self):
        for code in (cluster_code(4), ghz_code(4)):
            for label in range(1, 1 << code.nz):
                z = BitVector(code.nz, label)
                game = build_game(code, InputSets.fixed_z(code, z))
                report = compute_omega(game, "nonlinearity")
                self.assertEqual(report.omega, omega_exact(game).omega)
                self.assertEqual(strategy_success(game, report.best), report.omega)

    def test_fixed_z_requires_single_z(self):
        with self.assertRaises(ModeError):
            omega_fixed_z(build_game(ghz_code(3)))


class TestCliffordInvariance(unittest.TestCase):
    """测试单比特Clifford修饰下ω不变"""

    def test_random_dressings(self):
        rng = random.Random(3)
        for code in (ghz_code(3), ghz_code(4), cluster_code(4)):
            game = build_game(code)
            omega = omega_exact(game).omega
            for _ in range(5):
                gates = [CliffordLabel(rng.choice(V_LABELS), rng.choice(P_LABELS)) for _ in range(game.nplayers)]
                dressed, _ = clifford_dress(game, gates)
                self.assertEqual(omega_exact(game.with_target(dressed)).omega, omega)


class TestOracle(unittest.TestCase):
    """测试暴力枚举"""

    def test_ghz3_fixed(self):
        self.assertEqual(omega_bruteforce_oracle(ghz_fixed_game(3)).omega, Fraction(3, 4))

    def test_two_qubit_players_see_both_bits(self):
        """两个玩家都拿到 (x, z)，一人回答 xz 即可必胜"""
        game = two_qubit_game()
        self.assertEqual(omega_bruteforce_oracle(game).omega, Fraction(1))
        self.assertEqual(omega_exact(game).omega, Fraction(1))

    def test_matches_exact(self):
        for game in (build_game(ghz_code(3)), build_game(cluster_code(4)), ghz_fixed_game(4)):
            self.assertEqual(omega_bruteforce_oracle(game).omega, omega_exact(game).omega)

    def test_strategy_reconstruction(self):
        game = ghz_fixed_game(3)
        report = omega_bruteforce_oracle(game)
        rebuilt = ClassicalStrategy.from_answers(game.code, report.best.answers)
        self.assertEqual(rebuilt.answers, report.best.answers)
        self.assertEqual(strategy_success(game, rebuilt), report.omega)

    def test_submeasurement_adds_substring_checks(self):
        """除空问题外，子测量胜利必然也是 XOR 胜利"""
        code = ghz_code(3)
        xor_omega = omega_bruteforce_oracle(build_game(code)).omega
        sub_omega = omega_bruteforce_oracle(build_game(code, mode=GameMode.SUBMEASUREMENT)).omega
        self.assertLessEqual(sub_omega, xor_omega + Fraction(1, 8))


class TestBounds(unittest.TestCase):
    """测试上下界"""

    def test_bracket_exact(self):
        for game in (build_game(ghz_code(4)), build_game(cluster_code(4)), ghz_fixed_game(5)):
            omega = omega_exact(game).omega
            bounds = omega_bounds(game)
            self.assertLessEqual(bounds.lower, omega)
            self.assertGreaterEqual(bounds.upper, omega)

    def test_nonquadraticity_bound(self):
        game = build_game(ghz_code(3))
        self.assertGreaterEqual(omega_upper_nonquadraticity(game), omega_exact(game).omega)

    def test_dispatch(self):
        game = ghz_fixed_game(3)
        self.assertEqual(compute_omega(game, "nonlinearity").method, "nonlinearity")
        with self.assertRaises(ModeError):
            compute_omega(game, "guess")


if __name__ == "__main__":
    unittest.main()
