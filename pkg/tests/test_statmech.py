#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
统计力学映射测试
"""

import sys
import os
import math
import unittest

import sympy

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.boolfn import walsh_transform
from src.cssgame import honeycomb_lattice
from src.statmech import (
    ccz_charpoly,
    cluster_cz_sum,
    cluster_lambda_closed_form,
    cluster_lambda_numeric,
    cluster_plus_overlap,
    cluster_upper_rate,
    cluster_w00,
    cluster_w00_bruteforce,
    digamma_combination,
    digamma_identity_check,
    domain_wall_stats,
    fibonacci_transfer_trace,
    ghz_periodic_target,
    ghz_spectrum_values,
    ghz_walsh_check,
    ghz_walsh_periodic,
    loop_histogram,
    loop_partition,
    loop_rates,
    plaquette_ising_bruteforce,
    plaquette_ising_count,
    plaquette_ising_walsh,
    quadrature_integral,
    sqrt3_identity,
    z_removal_check,
)
from src.statmech.loops import LOOP_GROWTH
from src.utils.errors import ParameterError


class TestGhzTransfer(unittest.TestCase):
    """测试GHZ转移矩阵"""

    def test_open_chain(self):
        for n in range(2, 9):
            self.assertTrue(ghz_walsh_check(n))

    def test_periodic(self):
        for n in range(3, 9):
            self.assertTrue(ghz_walsh_check(n, periodic=True))

    def test_periodic_single_value(self):
        spectrum = walsh_transform(ghz_periodic_target(5))
        self.assertEqual(ghz_walsh_periodic(5, 0b10110), spectrum[0b10110])

    def test_spectrum_values(self):
        self.assertEqual(ghz_spectrum_values(4), frozenset({4, -4}))
        self.assertEqual(ghz_spectrum_values(3), frozenset({0, 4, -4}))


class TestClusterTransfer(unittest.TestCase):
    """测试簇态转移矩阵"""

    def test_charpoly(self):
        y = sympy.symbols("y")
        self.assertEqual(ccz_charpoly(), sympy.Poly(y ** 4 - 2 * y ** 2 - 2 * y, y))

    def test_w00_matches_bruteforce(self):
        for N in (4, 6, 8, 10, 12):
            self.assertEqual(cluster_w00(N), cluster_w00_bruteforce(N))

    def test_w00_beyond_bruteforce(self):
        self.assertIsInstance(cluster_w00(40), int)

    def test_w00_odd_rejected(self):
        with self.assertRaises(ParameterError):
            cluster_w00(5)

    def test_lambda(self):
        closed = cluster_lambda_closed_form()
        self.assertAlmostEqual(closed, cluster_lambda_numeric(), places=12)
        self.assertAlmostEqual(closed, 1.7693, places=4)

    def test_upper_rate(self):
        self.assertAlmostEqual(cluster_upper_rate(), math.sqrt(1 + math.sqrt(5)), places=12)
        self.assertAlmostEqual(cluster_upper_rate(), 1.7989, places=4)

    def test_lucas_traces(self):
        self.assertEqual([fibonacci_transfer_trace(n) for n in range(3, 7)], [4, 7, 11, 18])
        for n in range(3, 9):
            self.assertAlmostEqual(cluster_cz_sum(n), fibonacci_transfer_trace(n), places=9)

    def test_plus_overlap(self):
        self.assertAlmostEqual(cluster_plus_overlap(4), 0.5)
        self.assertAlmostEqual(cluster_plus_overlap(8), 2 ** -3)

    def test_z_removal(self):
        self.assertTrue(z_removal_check(2, "open"))
        self.assertTrue(z_removal_check(6, "open"))
        self.assertTrue(z_removal_check(4, "periodic"))
        with self.assertRaises(ParameterError):
            z_removal_check(3, "periodic")
        with self.assertRaises(ParameterError):
            z_removal_check(4, "twisted")


class TestLoops(unittest.TestCase):
    """测试蜂窝环面圈模型"""

    def test_empty_configuration(self):
        stats = domain_wall_stats(honeycomb_lattice(3, 3), 0)
        self.assertEqual((stats.edge_count, stats.loop_count), (0, 0))

    def test_single_hexagon(self):
        stats = domain_wall_stats(honeycomb_lattice(3, 3), 1)
        self.assertEqual((stats.edge_count, stats.loop_count), (6, 1))

    def test_partition_counts_configurations(self):
        lattice = honeycomb_lattice(2, 2)
        self.assertAlmostEqual(loop_partition(2, 2, t=1.0, n=1.0), 2 ** lattice.nplaquettes)
        self.assertEqual(sum(loop_histogram(2, 2).values()), 2 ** lattice.nplaquettes)

    def test_threads_agree(self):
        self.assertEqual(loop_histogram(3, 2, threads=1), loop_histogram(3, 2, threads=3))

    def test_rates(self):
        rates = loop_rates(2, 2)
        self.assertGreater(rates.per_vertex, 0)
        self.assertAlmostEqual(rates.limit_per_vertex, LOOP_GROWTH)
        self.assertAlmostEqual(rates.limit_per_player, math.sqrt(3), places=12)
        self.assertIn("partition", rates.to_dict())

    def test_sqrt3(self):
        self.assertAlmostEqual(sqrt3_identity(), 0.0, places=12)


class TestDigamma(unittest.TestCase):
    """测试双伽马积分恒等式"""

    def test_identity(self):
        report = digamma_identity_check()
        self.assertAlmostEqual(report.lhs, math.log(27 / 4), places=8)
        self.assertAlmostEqual(report.to_dict()["w"], (27 / 4) ** 0.25, places=8)

    def test_positive_argument(self):
        self.assertAlmostEqual(quadrature_integral(0.5), digamma_combination(0.5), places=8)


class TestPlaquette(unittest.TestCase):
    """测试零温plaquette Ising模型"""

    def test_counts(self):
        self.assertEqual(plaquette_ising_count(2), 4)
        self.assertEqual(plaquette_ising_count(4), 16)
        self.assertEqual(plaquette_ising_bruteforce(4), 16)

    def test_walsh(self):
        result = plaquette_ising_walsh(4)
        self.assertEqual(result.walsh_zero, 2 ** 8 * 16)
        self.assertEqual(result.max_abs, 2 ** 12)

    def test_odd_size(self):
        with self.assertRaises(ParameterError):
            plaquette_ising_count(3)


if __name__ == "__main__":
    unittest.main()
