#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
态矢量、量子策略与经验模型测试
"""

import sys
import os
import unittest

import numpy as np

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cssgame import GameMode, build_game, cluster_code, ghz_code, parse_gates, toric_square_code
from src.graphstate import Graph
from src.quantum import (
    CodewordKind,
    DeformedKind,
    GhzKind,
    GraphStateKind,
    MeasurementScenario,
    StateVector,
    born_rule_constraint_prob,
    build_state,
    clifford_function_check,
    css_codeword,
    deformed,
    empirical_model,
    ghz_state,
    merp_strategy_score,
    mix_models,
    multi_constraint_prob,
    outcome_parity_prob,
    parse_state_kind,
    pauli_strategy_score,
    stabilizer_average,
    toric_selftest_constraints,
    uniform_model,
)
from src.utils.errors import ConsistencyError, ParameterError

GHZ3_CONTEXTS = [
    [(0, "X"), (1, "X"), (2, "X")],
    [(0, "X"), (1, "Y"), (2, "Y")],
    [(0, "Y"), (1, "X"), (2, "Y")],
    [(0, "Y"), (1, "Y"), (2, "X")],
]


class TestStates(unittest.TestCase):
    """测试资源态构造"""

    def test_ghz2(self):
        state = build_state(GhzKind(2))
        self.assertTrue(np.allclose(state.amps, [2 ** -0.5, 0, 0, 2 ** -0.5]))

    def test_graph_state_edge(self):
        state = build_state(GraphStateKind(Graph.path(2)))
        self.assertTrue(np.allclose(state.amps, [0.5, 0.5, 0.5, -0.5]))

    def test_deformed_at_zero(self):
        state = build_state(DeformedKind(GhzKind(3), 0.0))
        self.assertTrue(np.allclose(state.amps, ghz_state(3).amps))

    def test_ghz_codeword(self):
        self.assertAlmostEqual(abs(css_codeword(ghz_code(3)).inner(ghz_state(3))), 1.0, places=12)

    def test_parse_state_kind(self):
        code = ghz_code(3)
        self.assertEqual(parse_state_kind("ghz", code), GhzKind(3))
        self.assertEqual(parse_state_kind("codeword", code), CodewordKind(code))
        self.assertEqual(parse_state_kind("deformed:0.25", code), DeformedKind(CodewordKind(code), 0.25))
        with self.assertRaises(ParameterError):
            parse_state_kind("w-state", code)


class TestParityProbabilities(unittest.TestCase):
    """测试结果奇偶概率"""

    def test_ghz3_examples(self):
        state = ghz_state(3)
        self.assertAlmostEqual(outcome_parity_prob(state, ["X", "X", "X"], [0, 1, 2], 0), 1.0)
        self.assertAlmostEqual(outcome_parity_prob(state, ["X", "Y", "Y"], [0, 1, 2], 1), 1.0)

    def test_plus_z(self):
        self.assertAlmostEqual(outcome_parity_prob(StateVector.plus(1), ["Z"], [0], 0), 0.5)

    def test_single_constraint_reduction(self):
        state = deformed(ghz_state(3), 0.2)
        paulis = ["X", "Z", "Y"]
        self.assertAlmostEqual(multi_constraint_prob(state, paulis, [((0, 2), 1)]),
                               outcome_parity_prob(state, paulis, [0, 2], 1))

    def test_disjoint_ghz4_constraints(self):
        state = ghz_state(4)
        self.assertAlmostEqual(multi_constraint_prob(state, ["Z"] * 4, [((0, 1), 0), ((2, 3), 0)]), 1.0)

    def test_matches_born_rule(self):
        rng = np.random.default_rng(4)
        state = StateVector(3, rng.normal(size=8) + 1j * rng.normal(size=8))
        paulis = ["X", "Y", "Z"]
        constraints = [((0, 1), 0), ((1, 2), 1)]
        self.assertAlmostEqual(multi_constraint_prob(state, paulis, constraints),
                               born_rule_constraint_prob(state, paulis, constraints), places=12)


class TestStrategies(unittest.TestCase):
    """测试Pauli策略与MERP策略"""

    def test_pauli_perfect_on_codewords(self):
        for code in (ghz_code(3), toric_square_code(2)):
            game = build_game(code)
            self.assertAlmostEqual(pauli_strategy_score(css_codeword(code), game), 1.0, places=10)

    def test_plus_state_for_ghz(self):
        code = ghz_code(3)
        game = build_game(code)
        state = build_state(parse_state_kind("plus", code))
        self.assertAlmostEqual(pauli_strategy_score(state, game), 0.5 * (1 + 2 ** -2))

    def test_score_matches_stabilizer_average(self):
        game = build_game(ghz_code(4))
        state = deformed(css_codeword(game.code), 0.15)
        self.assertAlmostEqual(pauli_strategy_score(state, game), 0.5 * (1 + stabilizer_average(state, game)))

    def test_merp_xor_perfect(self):
        for code in (ghz_code(3), toric_square_code(2)):
            self.assertAlmostEqual(merp_strategy_score(build_game(code)), 1.0, places=10)

    def test_pauli_perfect_at_scale(self):
        codes = [ghz_code(N) for N in range(3, 9)] + [cluster_code(4), cluster_code(6)]
        for code in codes:
            game = build_game(code)
            self.assertAlmostEqual(pauli_strategy_score(css_codeword(code), game), 1.0, places=10)

    def test_toric_submeasurement(self):
        code = toric_square_code(2)
        game = build_game(code, mode=GameMode.SUBMEASUREMENT)
        self.assertAlmostEqual(pauli_strategy_score(css_codeword(code), game), 1.0, places=10)
        self.assertLess(merp_strategy_score(game), 1.0 - 1e-3)

    def test_submeasurement(self):
        code = ghz_code(4)
        game = build_game(code, mode=GameMode.SUBMEASUREMENT)
        self.assertAlmostEqual(pauli_strategy_score(css_codeword(code), game), 1.0, places=10)
        self.assertLess(merp_strategy_score(game), 1.0 - 1e-6)

    def test_player_count_mismatch(self):
        with self.assertRaises(ParameterError):
            pauli_strategy_score(ghz_state(4), build_game(ghz_code(3)))

    def test_clifford_dressing(self):
        game = build_game(ghz_code(3))
        check = clifford_function_check(game, parse_gates(["H", "S.X", "HS.Y"]))
        self.assertTrue(check.passed)
        self.assertAlmostEqual(check.score, 1.0, places=10)


class TestEmpiricalModel(unittest.TestCase):
    """测试经验模型"""

    def test_ghz3_table(self):
        scenario = MeasurementScenario.from_contexts(GHZ3_CONTEXTS)
        model = empirical_model(ghz_state(3), scenario)
        even = [0, 3, 5, 6]
        odd = [1, 2, 4, 7]
        self.assertTrue(np.allclose(model.tables[0][even], 0.25))
        self.assertTrue(np.allclose(model.tables[0][odd], 0.0))
        for table in model.tables[1:]:
            self.assertTrue(np.allclose(table[odd], 0.25))

    def test_product_state_point_mass(self):
        scenario = MeasurementScenario.from_contexts([GHZ3_CONTEXTS[0]])
        model = empirical_model(StateVector.plus(3), scenario)
        self.assertAlmostEqual(model.tables[0][0], 1.0)

    def test_deformed_is_valid(self):
        scenario = MeasurementScenario.from_contexts(GHZ3_CONTEXTS)
        model = empirical_model(deformed(ghz_state(3), 0.3), scenario)
        model.validate()

    def test_mixing_and_validation(self):
        scenario = MeasurementScenario.from_contexts(GHZ3_CONTEXTS)
        mixed = mix_models(empirical_model(ghz_state(3), scenario), uniform_model(scenario), 0.5)
        mixed.validate()
        with self.assertRaises(ParameterError):
            mix_models(mixed, mixed, 1.5)

    def test_incompatible_marginals(self):
        scenario = MeasurementScenario.from_contexts([[(0, "X"), (1, "X")], [(0, "X"), (1, "Z")]])
        model = uniform_model(scenario)
        broken = type(model)(scenario, (np.array([1.0, 0, 0, 0]), model.tables[1]))
        with self.assertRaises(ConsistencyError):
            broken.validate()


class TestSelfTest(unittest.TestCase):
    """测试环面码刚性检查"""

    def test_honest(self):
        self.assertTrue(toric_selftest_constraints(2, "honest").passed)

    def test_merp_fails(self):
        self.assertFalse(toric_selftest_constraints(2, "merp").passed)

    def test_identity_fails(self):
        report = toric_selftest_constraints(2, "identity")
        self.assertFalse(report.passed)
        self.assertTrue(any(c.expected == -1.0 for c in report.failures()))

    def test_only_l2(self):
        with self.assertRaises(ParameterError):
            toric_selftest_constraints(4)


if __name__ == "__main__":
    unittest.main()
