#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
布尔函数分析测试
"""

import sys
import os
import itertools
import tempfile
import unittest

import numpy as np

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.boolfn import (
    AnfPolynomial,
    BooleanFunction,
    anf_from_table,
    apply_affine_substitution,
    generalized_walsh,
    inverse_walsh,
    is_bent,
    nonlinearity,
    nonquadraticity,
    parity_via_integers,
    read_truth_table,
    walsh_bruteforce,
    walsh_transform,
    write_truth_table,
)
from src.cssgame.lattice import chain_from_all_to_all_transform, ghz_all_to_all_target, ghz_chain_target
from src.f2 import BitMatrix, BitVector
from src.utils.errors import ArityError, FormatError, InvalidTransformError


class TestAnf(unittest.TestCase):
    """测试代数正规型"""

    def test_constant_zero(self):
        self.assertEqual(anf_from_table(BooleanFunction.constant(3)).monomials, frozenset())

    def test_xor(self):
        anf = anf_from_table(BooleanFunction.from_string("0110"))
        self.assertEqual(anf.sorted_terms(), [[0], [1]])

    def test_or(self):
        anf = anf_from_table(BooleanFunction.from_string("0111"))
        self.assertEqual(anf.sorted_terms(), [[0], [1], [0, 1]])

    def test_duplicate_terms_cancel(self):
        anf = AnfPolynomial.from_terms(3, [[0, 1], [2], [1, 0]])
        self.assertEqual(anf.sorted_terms(), [[2]])

    def test_table_roundtrip(self):
        rng = np.random.default_rng(5)
        f = BooleanFunction(5, rng.integers(0, 2, 32))
        self.assertEqual(BooleanFunction.from_anf(anf_from_table(f)), f)

    def test_out_of_range_variable(self):
        with self.assertRaises(ArityError):
            AnfPolynomial.from_terms(2, [[2]])


class TestWalsh(unittest.TestCase):
    """测试Walsh变换"""

    def test_zero_function(self):
        spectrum = walsh_transform(BooleanFunction.constant(3))
        self.assertEqual(spectrum[0], 8)
        self.assertEqual(list(spectrum.support()), [0])

    def test_product_is_flat(self):
        spectrum = walsh_transform(BooleanFunction.from_monomials(2, [[0, 1]]))
        self.assertEqual(spectrum.abs_values(), [2, 2, 2, 2])

    def test_ghz_chain_flat(self):
        spectrum = walsh_transform(ghz_chain_target(4))
        self.assertEqual(set(spectrum.coeffs.tolist()) - {4, -4}, set())

    def test_matches_bruteforce(self):
        rng = np.random.default_rng(1)
        for d in range(1, 8):
            f = BooleanFunction(d, rng.integers(0, 2, 1 << d))
            fast = walsh_transform(f)
            self.assertTrue(np.array_equal(fast.coeffs, walsh_bruteforce(f).coeffs))
            self.assertEqual(fast.parseval_sum(), 1 << (2 * d))
            self.assertEqual(inverse_walsh(fast), f)

    def test_parseval_random(self):
        rng = np.random.default_rng(1000)
        for _ in range(1000):
            d = int(rng.integers(1, 13))
            f = BooleanFunction(d, rng.integers(0, 2, 1 << d))
            self.assertEqual(walsh_transform(f).parseval_sum(), 1 << (2 * d))


class TestNonlinearity(unittest.TestCase):
    """测试非线性度与 bent 判定"""

    def test_affine(self):
        f = BooleanFunction.from_monomials(3, [[0], [2], []])
        self.assertEqual(nonlinearity(f), 0)
        self.assertFalse(is_bent(f))

    def test_product(self):
        f = BooleanFunction.from_monomials(2, [[0, 1]])
        self.assertEqual(nonlinearity(f), 1)
        self.assertTrue(is_bent(f))

    def test_ghz_chain(self):
        self.assertTrue(is_bent(ghz_chain_target(4)))
        self.assertEqual(nonlinearity(ghz_chain_target(5)), 12)


class TestGeneralizedWalsh(unittest.TestCase):
    """测试广义Walsh系数"""

    def test_self_and_complement(self):
        f = BooleanFunction.from_monomials(3, [[0, 1], [2]])
        self.assertEqual(generalized_walsh(f, f), 8)
        self.assertEqual(generalized_walsh(f, f.complement()), -8)

    def test_cubic_against_zero(self):
        f = BooleanFunction.from_monomials(3, [[0, 1, 2]])
        self.assertEqual(generalized_walsh(f, BooleanFunction.constant(3)), 6)

    def test_arity_mismatch(self):
        with self.assertRaises(ArityError):
            generalized_walsh(BooleanFunction.constant(2), BooleanFunction.constant(3))


class TestAffineSubstitution(unittest.TestCase):
    """测试仿射代换"""

    def test_identity(self):
        f = BooleanFunction.from_monomials(3, [[0, 1, 2], [1]])
        self.assertEqual(apply_affine_substitution(f, BitMatrix.identity(3), BitVector.zeros(3)), f)

    def test_all_to_all_becomes_chain(self):
        for n in range(2, 7):
            g = apply_affine_substitution(ghz_all_to_all_target(n), chain_from_all_to_all_transform(n),
                                          BitVector.zeros(n))
            self.assertEqual(g, ghz_chain_target(n))

    def test_singular(self):
        with self.assertRaises(InvalidTransformError):
            apply_affine_substitution(BooleanFunction.constant(2), BitMatrix.from_strings(["11", "11"]),
                                      BitVector.zeros(2))


class TestNonquadraticity(unittest.TestCase):
    """测试非二次度"""

    def test_quadratic(self):
        f = BooleanFunction.from_monomials(4, [[0, 1], [2, 3], [1]])
        self.assertEqual(nonquadraticity(f), 0)

    def test_cubic(self):
        self.assertEqual(nonquadraticity(BooleanFunction.from_monomials(3, [[0, 1, 2]])), 1)


class TestParity(unittest.TestCase):
    """测试整数形式的奇偶"""

    def test_all_inputs(self):
        for bits in itertools.product((0, 1), repeat=5):
            self.assertEqual(parity_via_integers(bits), sum(bits) % 2)

    def test_random_lengths(self):
        rng = np.random.default_rng(50)
        for _ in range(50):
            bits = rng.integers(0, 2, int(rng.integers(1, 13))).tolist()
            self.assertEqual(parity_via_integers(bits), sum(bits) % 2)


class TestTruthTableFile(unittest.TestCase):
    """测试真值表文件"""

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmpdir.name, "f.txt")

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_write_then_read(self):
        f = ghz_chain_target(3)
        write_truth_table(f, self.path)
        self.assertEqual(read_truth_table(self.path), f)

    def test_wrong_length(self):
        with open(self.path, "w", encoding="utf-8") as fh:
            fh.write("2\n011\n")
        with self.assertRaises(FormatError) as ctx:
            read_truth_table(self.path)
        self.assertEqual(ctx.exception.line, 2)


if __name__ == "__main__":
    unittest.main()
