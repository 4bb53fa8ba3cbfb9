#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
单纯形法与非情境分数测试
"""

import sys
import os
import unittest
from fractions import Fraction

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.contextuality import (
    fig2_sweep,
    ncf,
    prop4_bound,
    scenario_from_game,
    solve_lp,
    sweep_game,
)
from src.cssgame import GameMode, build_game, cluster_code, ghz_code
from src.quantum import StateVector, css_codeword, deformed, empirical_model, ghz_state, mix_models, uniform_model
from src.utils.errors import DomainError, ModeError, NumericError, ParameterError


class TestSimplex(unittest.TestCase):
    """测试单纯形法"""

    A = [[1, 1], [1, 3], [1, 0]]
    b = [4, 6, 3]
    c = [3, 2]

    def test_exact(self):
        result = solve_lp(self.A, self.b, self.c, exact=True)
        self.assertEqual(result.value, Fraction(11))
        self.assertEqual(list(result.x), [Fraction(3), Fraction(1)])

    def test_float(self):
        result = solve_lp(self.A, self.b, self.c)
        self.assertAlmostEqual(result.value, 11.0)

    def test_fractional_optimum(self):
        result = solve_lp([[2, 1], [1, 2]], [1, 1], [1, 1], exact=True)
        self.assertEqual(result.value, Fraction(2, 3))

    def test_unbounded(self):
        with self.assertRaises(NumericError):
            solve_lp([[-1]], [1], [1], exact=True)

    def test_negative_rhs(self):
        with self.assertRaises(DomainError):
            solve_lp([[1]], [-1], [1])


class TestScenario(unittest.TestCase):
    """测试由游戏得到的测量场景"""

    def test_ghz3_fixed(self):
        scenario = scenario_from_game(sweep_game("ghz3"))
        self.assertEqual(scenario.nobservables, 6)
        self.assertEqual(len(scenario.contexts), 4)

    def test_cluster4(self):
        scenario = scenario_from_game(sweep_game("cluster4"))
        self.assertEqual(len(scenario.contexts), 16)

    def test_submeasurement_rejected(self):
        with self.assertRaises(ModeError):
            scenario_from_game(build_game(ghz_code(3), mode=GameMode.SUBMEASUREMENT))

    def test_unknown_sweep_game(self):
        with self.assertRaises(ParameterError):
            sweep_game("toric")


class TestNcf(unittest.TestCase):
    """测试非情境分数"""

    def setUp(self):
        self.scenario = scenario_from_game(sweep_game("ghz3"))

    def test_ghz_fully_contextual(self):
        result = ncf(empirical_model(ghz_state(3), self.scenario), exact=True)
        self.assertEqual(result.ncf, Fraction(0))
        self.assertEqual(result.cf, Fraction(1))
        self.assertEqual(result.to_dict()["ncf"], "0")

    def test_product_state_noncontextual(self):
        result = ncf(empirical_model(StateVector.plus(3), self.scenario), exact=True)
        self.assertEqual(result.ncf, Fraction(1))
        self.assertTrue(result.witness())

    def test_float_mode(self):
        result = ncf(empirical_model(StateVector.plus(3), self.scenario))
        self.assertAlmostEqual(result.ncf, 1.0, places=6)

    def test_mixing_monotone(self):
        ghz = empirical_model(ghz_state(3), self.scenario)
        noise = uniform_model(self.scenario)
        previous = -1.0
        for weight in (0.0, 0.25, 0.5, 0.75, 1.0):
            value = ncf(mix_models(ghz, noise, weight)).ncf
            self.assertGreaterEqual(value, weight - 1e-6)
            self.assertGreaterEqual(value, previous - 1e-6)
            previous = value


class TestBound(unittest.TestCase):
    """测试量子得分上界"""

    def test_endpoints(self):
        omega = Fraction(3, 4)
        self.assertEqual(prop4_bound(omega, Fraction(0)), 1)
        self.assertEqual(prop4_bound(omega, Fraction(1)), omega)
        self.assertAlmostEqual(prop4_bound(omega, 0.5), 0.875)

    def test_domain(self):
        with self.assertRaises(DomainError):
            prop4_bound(Fraction(1, 4), Fraction(1, 2))
        with self.assertRaises(DomainError):
            prop4_bound(Fraction(3, 4), 1.5)


class TestSweep(unittest.TestCase):
    """测试形变码字上的θ扫描"""

    def test_ghz3(self):
        rows = fig2_sweep("ghz3", theta_max=0.5, steps=6)
        self.assertEqual(len(rows), 6)
        self.assertAlmostEqual(rows[0].theta, 0.0)
        self.assertAlmostEqual(rows[0].pauli_score, 1.0, places=9)
        self.assertAlmostEqual(rows[0].ncf, 0.0, places=6)
        self.assertAlmostEqual(rows[0].bound, 1.0, places=6)
        for row in rows:
            self.assertLessEqual(row.pauli_score, row.bound + 1e-6)
            self.assertLessEqual(row.bound, 1.0 + 1e-12)
        self.assertLess(rows[-1].pauli_score, 1.0)

    def test_cluster4(self):
        rows = fig2_sweep("cluster4", theta_max=0.5, steps=21)
        self.assertEqual(len(rows), 21)
        self.assertAlmostEqual(rows[0].ncf, 0.0, places=6)
        for row in rows:
            self.assertGreaterEqual(row.ncf, 0.0)
            self.assertLessEqual(row.ncf, 1.0)
            self.assertLessEqual(row.pauli_score, row.bound + 1e-6)

    def test_cluster4_deformed_witness(self):
        scenario = scenario_from_game(sweep_game("cluster4"))
        base = css_codeword(cluster_code(4))
        for theta in (0.15, 0.3):
            result = ncf(empirical_model(deformed(base, theta), scenario))
            self.assertGreaterEqual(result.ncf, 0.0)
            self.assertLessEqual(result.ncf, 1.0)
            self.assertAlmostEqual(sum(w for _, w in result.witness()), result.ncf, places=6)

    def test_bad_steps(self):
        with self.assertRaises(ParameterError):
            fig2_sweep("ghz3", steps=0)


if __name__ == "__main__":
    unittest.main()
