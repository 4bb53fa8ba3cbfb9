#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
F2 线性代数测试
"""

import sys
import os
import random
import tempfile
import unittest

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.f2 import (
    BitMatrix,
    BitVector,
    in_row_space,
    kernel_basis,
    rank,
    read_matrix,
    row_span_iter,
    solve_affine,
    write_matrix,
)
from src.utils.errors import FormatError, InvalidTransformError, ShapeError, SizeLimitError


def random_matrix(rng: random.Random, nrows: int, ncols: int) -> BitMatrix:
    return BitMatrix.from_rows(ncols, [rng.getrandbits(ncols) for _ in range(nrows)])


class TestBitVector(unittest.TestCase):
    """测试BitVector类"""

    def test_from_string_bit_order(self):
        """第 j 个字符是第 j 位"""
        v = BitVector.from_string("1101")
        self.assertEqual(v.data, 0b1011)
        self.assertEqual(v.weight(), 3)
        self.assertEqual(v.support(), [0, 1, 3])
        self.assertEqual(v.to_string(), "1101")

    def test_invalid_character(self):
        with self.assertRaises(FormatError):
            BitVector.from_string("10a")

    def test_bits_beyond_length_rejected(self):
        with self.assertRaises(ShapeError):
            BitVector(2, 0b100)

    def test_dot_and_xor(self):
        a = BitVector.from_string("110")
        b = BitVector.from_string("011")
        self.assertEqual(a.dot(b), 1)
        self.assertEqual((a ^ b).to_string(), "101")


class TestRank(unittest.TestCase):
    """测试秩与零空间"""

    def test_identity_and_zero(self):
        self.assertEqual(rank(BitMatrix.identity(3)), 3)
        self.assertEqual(rank(BitMatrix.zeros(2, 4)), 0)

    def test_dependent_rows(self):
        m = BitMatrix.from_strings(["110", "011", "101"])
        self.assertEqual(rank(m), 2)

    def test_kernel_trivial_cases(self):
        self.assertEqual(kernel_basis(BitMatrix.identity(4)), [])
        self.assertEqual(len(kernel_basis(BitMatrix.zeros(1, 3))), 3)

    def test_path_graph_kernel(self):
        """5 顶点路径图邻接矩阵的零空间由奇子格给出"""
        m = BitMatrix.from_strings(["01000", "10100", "01010", "00101", "00010"])
        basis = kernel_basis(m)
        self.assertEqual([v.to_string() for v in basis], ["10101"])

    def test_rank_nullity_random(self):
        rng = random.Random(7)
        for _ in range(20):
            nrows, ncols = rng.randint(1, 64), rng.randint(1, 64)
            m = random_matrix(rng, nrows, ncols)
            basis = kernel_basis(m)
            self.assertEqual(rank(m) + len(basis), ncols)
            for v in basis:
                self.assertTrue(m.mul_vec(v).weight() == 0)


class TestSolveAffine(unittest.TestCase):
    """测试仿射方程组求解"""

    def test_identity(self):
        rhs = BitVector.from_string("101")
        particular, kernel = solve_affine(BitMatrix.identity(3), rhs)
        self.assertEqual(particular, rhs)
        self.assertEqual(kernel, [])

    def test_inconsistent(self):
        self.assertIsNone(solve_affine(BitMatrix.zeros(1, 2), BitVector.from_string("1")))

    def test_single_equation(self):
        particular, kernel = solve_affine(BitMatrix.from_strings(["11"]), BitVector.from_string("1"))
        self.assertIn(particular.to_string(), ("10", "01"))
        self.assertEqual([v.to_string() for v in kernel], ["11"])

    def test_random_solutions(self):
        rng = random.Random(11)
        for _ in range(20):
            m = random_matrix(rng, rng.randint(1, 20), rng.randint(1, 20))
            rhs = m.mul_vec(BitVector(m.ncols, rng.getrandbits(m.ncols)))
            result = solve_affine(m, rhs)
            self.assertIsNotNone(result)
            self.assertEqual(m.mul_vec(result[0]), rhs)

    def test_length_mismatch(self):
        with self.assertRaises(ShapeError):
            solve_affine(BitMatrix.identity(2), BitVector.from_string("101"))


class TestRowSpan(unittest.TestCase):
    """测试行空间枚举"""

    def test_zero_matrix(self):
        self.assertEqual([v.to_string() for v in row_span_iter(BitMatrix.zeros(2, 3))], ["000"])

    def test_identity(self):
        values = {v.to_string() for v in row_span_iter(BitMatrix.identity(2))}
        self.assertEqual(values, {"00", "01", "10", "11"})

    def test_closure(self):
        m = BitMatrix.from_strings(["110", "011"])
        values = [v.to_string() for v in row_span_iter(m)]
        self.assertEqual(sorted(values), ["000", "011", "101", "110"])

    def test_membership_and_count(self):
        rng = random.Random(3)
        m = random_matrix(rng, 6, 10)
        values = list(row_span_iter(m))
        self.assertEqual(len(values), 1 << rank(m))
        self.assertEqual(len({v.data for v in values}), len(values))
        self.assertTrue(all(in_row_space(m, v) for v in values))

    def test_cap(self):
        with self.assertRaises(SizeLimitError):
            list(row_span_iter(BitMatrix.identity(5), max_rank=4))


class TestInverse(unittest.TestCase):
    """测试求逆"""

    def test_inverse_roundtrip(self):
        m = BitMatrix.from_strings(["110", "010", "011"])
        self.assertEqual(m @ m.inverse(), BitMatrix.identity(3))

    def test_singular(self):
        with self.assertRaises(InvalidTransformError):
            BitMatrix.from_strings(["11", "11"]).inverse()

    def test_random_square_matrices(self):
        rng = random.Random(16)
        for _ in range(100):
            n = rng.randint(1, 16)
            m = random_matrix(rng, n, n)
            if rank(m) == n:
                self.assertEqual(m @ m.inverse(), BitMatrix.identity(n))
                self.assertEqual(m.inverse() @ m, BitMatrix.identity(n))
            else:
                with self.assertRaises(InvalidTransformError):
                    m.inverse()


class TestMatrixFile(unittest.TestCase):
    """测试矩阵文本格式"""

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmpdir.name, "m.txt")

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_write_then_read(self):
        m = BitMatrix.from_strings(["1010", "0111"])
        write_matrix(m, self.path)
        self.assertEqual(read_matrix(self.path), m)

    def test_bad_row_reports_line(self):
        with open(self.path, "w", encoding="utf-8") as f:
            f.write("2 3\n101\n10\n")
        with self.assertRaises(FormatError) as ctx:
            read_matrix(self.path)
        self.assertEqual(ctx.exception.line, 3)


if __name__ == "__main__":
    unittest.main()
