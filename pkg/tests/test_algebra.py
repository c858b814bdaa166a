import unittest

import numpy as np

from qtpc.algebra.field import (GF2, Extension, alpha, companion,
                                companion_poly_matrix, conjugate,
                                enumerate_self_reciprocal_irreducible, field,
                                field_from_spec, field_spec, gf4, hermitian,
                                is_irreducible, is_self_reciprocal, mobius,
                                period, poly_from_bits, poly_to_bits,
                                reciprocal, self_reciprocal_irreducible_count,
                                trace_gf4, trace_hermitian)
from qtpc.algebra.matrix import (RowSpace, companion_expand, in_row_space,
                                 kron, matmul, null_space, rank,
                                 solve_left_inverse)
from qtpc.errors import HypothesisError


random_state = np.random.RandomState(0)


class FieldTest(unittest.TestCase):
    def test_default_primitive_poly(self):
        GF = field(4)
        self.assertEqual(GF.order, 16)
        self.assertEqual(poly_to_bits(GF.irreducible_poly), [1, 1, 0, 0, 1])
        self.assertEqual(alpha(GF) ** 15, GF(1))
        self.assertNotEqual(alpha(GF) ** 5, GF(1))

    def test_non_primitive_poly_rejected(self):
        # 1 + x + x² + x³ + x⁴ is irreducible of period 5
        with self.assertRaises(ValueError):
            field(4, [1, 1, 1, 1, 1])
        with self.assertRaises(ValueError):
            field(0)

    def test_field_spec_roundtrip(self):
        GF = field(6)
        GF_back = field_from_spec(field_spec(GF))
        self.assertEqual(GF_back.order, 64)
        self.assertEqual(GF_back.irreducible_poly, GF.irreducible_poly)
        with self.assertRaises(ValueError):
            field_from_spec({'primitive_poly': [1, 1]})

    def test_poly_bits(self):
        f = poly_from_bits([1, 1, 0, 1])
        self.assertEqual(int(f), 0b1011)
        self.assertEqual(poly_to_bits(f), [1, 1, 0, 1])
        self.assertEqual(poly_to_bits(poly_from_bits([0, 0])), [])
        with self.assertRaises(ValueError):
            poly_from_bits([2, 1])

    def test_psi_roundtrip_binary(self):
        GF = field(5)
        ext = Extension(GF2, GF)
        x = GF(random_state.randint(0, 32, size=(4, 6)))
        coords = ext.psi(x)
        self.assertEqual(coords.shape, (4, 6, 5))
        self.assertTrue(np.array_equal(ext.psi_inv(coords), x))
        y = GF(random_state.randint(0, 32, size=(4, 6)))
        self.assertTrue(np.array_equal(ext.psi(x + y),
                                       ext.psi(x) + ext.psi(y)))

    def test_psi_roundtrip_quaternary(self):
        GF16 = field(4)
        ext = Extension(gf4(), GF16)
        self.assertEqual(ext.degree, 2)
        x = GF16.elements
        self.assertTrue(np.array_equal(ext.psi_inv(ext.psi(x)), x))
        # ψ is GF(4)-linear
        w = gf4()(2)
        self.assertTrue(np.array_equal(ext.psi(ext.embed(w) * x),
                                       w * ext.psi(x)))

    def test_embed_is_field_homomorphism(self):
        GF4 = gf4()
        ext = Extension(GF4, field(6))
        a = GF4.elements
        prod = ext.embed(a)[:, None] * ext.embed(a)[None, :]
        self.assertTrue(np.array_equal(prod,
                                       ext.embed(a[:, None] * a[None, :])))
        self.assertTrue(np.array_equal(ext.psi(ext.embed(a))[:, 1],
                                       GF4.Zeros(4)))

    def test_psi_matrix_shape(self):
        GF = field(3)
        ext = Extension(GF2, GF)
        H = GF(random_state.randint(0, 8, size=(2, 5)))
        expanded = ext.psi_matrix(H)
        self.assertEqual(expanded.shape, (6, 5))
        self.assertTrue(np.array_equal(expanded[3:6, 2], ext.psi(H[1, 2])))
        self.assertTrue(np.array_equal(ext.psi_inv_matrix(expanded), H))
        with self.assertRaises(ValueError):
            ext.psi_inv_matrix(GF2.Zeros((4, 5)))

    def test_invalid_extension(self):
        with self.assertRaises(ValueError):
            Extension(gf4(), field(5))
        with self.assertRaises(ValueError):
            Extension(field(3), field(6))

    def test_companion_homomorphism(self):
        GF = field(4)
        M = companion(GF, alpha(GF))
        self.assertTrue(np.array_equal(
            M, companion_poly_matrix(GF.irreducible_poly)))
        a = GF(random_state.randint(0, 16, size=10))
        b = GF(random_state.randint(0, 16, size=10))
        for x, y in zip(a, b):
            self.assertTrue(np.array_equal(companion(GF, x) @ companion(GF, y),
                                           companion(GF, x * y)))
            self.assertTrue(np.array_equal(companion(GF, x) + companion(GF, y),
                                           companion(GF, x + y)))
        power = GF2.Identity(4)
        for _ in range(7):
            power = power @ M
        self.assertTrue(np.array_equal(companion(GF, alpha(GF) ** 7), power))

    def test_gf4_forms(self):
        GF4 = gf4()
        w = GF4(2)
        self.assertEqual(conjugate(w), w ** 2)
        self.assertTrue(np.array_equal(trace_gf4(GF4.elements),
                                       GF2([0, 0, 1, 1])))
        u = GF4([1, 2])
        self.assertEqual(hermitian(u, u), GF4(0))
        self.assertEqual(trace_hermitian(u, u), GF2(0))
        v = GF4([1, 0])
        self.assertEqual(trace_hermitian(v, GF4([2, 0])), GF2(1))
        with self.assertRaises(ValueError):
            hermitian(GF2([1]), GF2([1]))

    def test_period(self):
        self.assertEqual(period(poly_from_bits([1, 1, 0, 1])), 7)
        self.assertEqual(period(poly_from_bits([1, 1, 1, 1, 1])), 5)
        # (x + 1)(x³ + x + 1)
        reducible = poly_from_bits([1, 0, 1, 1, 1])
        self.assertFalse(is_irreducible(reducible))
        self.assertFalse(is_self_reciprocal(reducible))
        self.assertEqual(period(reducible), 7)
        with self.assertRaises(ValueError):
            period(poly_from_bits([0, 1, 1]))

    def test_reciprocal(self):
        f = poly_from_bits([1, 1, 0, 1])
        self.assertEqual(poly_to_bits(reciprocal(f)), [1, 0, 1, 1])
        self.assertTrue(is_self_reciprocal(poly_from_bits([1, 1, 1, 1, 1])))

    def test_mobius(self):
        self.assertEqual([mobius(n) for n in range(1, 11)],
                         [1, -1, -1, 0, -1, 1, -1, 0, 0, 1])

    def test_self_reciprocal_count(self):
        expected = {2: 1, 4: 1, 6: 1, 8: 2, 10: 3, 12: 5}
        for w, count in expected.items():
            self.assertEqual(self_reciprocal_irreducible_count(w), count)
            found = enumerate_self_reciprocal_irreducible(w)
            self.assertEqual(len(found), count)
            self.assertTrue(all(is_self_reciprocal(f) for f in found))
        with self.assertRaises(ValueError):
            self_reciprocal_irreducible_count(5)


class MatrixTest(unittest.TestCase):
    def test_rank_and_null_space(self):
        H = GF2(random_state.randint(0, 2, size=(5, 12)))
        N = null_space(H)
        self.assertEqual(rank(H) + len(N), 12)
        self.assertFalse(np.any(H @ N.T))
        self.assertEqual(rank(GF2.Zeros((0, 4))), 0)
        self.assertEqual(null_space(GF2.Zeros((2, 3))).shape, (3, 3))

    def test_kron_blocks(self):
        GF = field(3)
        A = GF(random_state.randint(0, 8, size=(2, 3)))
        B = GF(random_state.randint(0, 8, size=(2, 4)))
        K = kron(A, B)
        self.assertEqual(K.shape, (4, 12))
        for i in range(2):
            for j in range(3):
                self.assertTrue(np.array_equal(
                    K[2 * i:2 * i + 2, 4 * j:4 * j + 4], A[i, j] * B))
        with self.assertRaises(ValueError):
            kron(A, GF2.Ones((1, 1)))

    def test_matmul_field_mismatch(self):
        with self.assertRaises(ValueError):
            matmul(GF2.Ones((2, 2)), field(2).Ones((2, 2)))

    def test_companion_expand(self):
        GF = field(3)
        H = GF(random_state.randint(0, 8, size=(2, 3)))
        plain = companion_expand(H, transposed=False)
        trans = companion_expand(H, transposed=True)
        self.assertEqual(plain.shape, (6, 9))
        self.assertTrue(np.array_equal(plain[3:6, 6:9], companion(GF, H[1, 2])))
        self.assertTrue(np.array_equal(trans[0:3, 3:6],
                                       companion(GF, H[0, 1]).T))

    def test_left_inverse(self):
        S = GF2([[1, 1], [0, 1]])
        L = solve_left_inverse(S)
        self.assertTrue(np.array_equal(L @ S, GF2.Identity(2)))
        with self.assertRaises(HypothesisError) as ctx:
            solve_left_inverse(GF2([[1, 1], [1, 1]]))
        self.assertIn('full rank', ctx.exception.condition)

    def test_row_space(self):
        A = GF2([[1, 1, 0, 0], [0, 1, 1, 0]])
        space = RowSpace(A)
        self.assertEqual(space.dim, 2)
        self.assertTrue(space.contains(np.array([1, 0, 1, 0])))
        self.assertFalse(space.contains(np.array([0, 0, 0, 1])))
        batch = np.array([[1, 1, 0, 0], [1, 1, 1, 1], [0, 0, 0, 0]])
        self.assertEqual(space.contains(batch).tolist(), [True, False, True])
        self.assertTrue(in_row_space(A, GF2([1, 0, 1, 0])))


if __name__ == '__main__':
    unittest.main()
