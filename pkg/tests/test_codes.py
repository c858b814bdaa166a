import unittest

import numpy as np

from qtpc.algebra.field import GF2, field, gf4, poly_from_bits
from qtpc.codes.base import LinearCode
from qtpc.codes.distance import (Distance, min_distance,
                                 min_weight_difference, weight)
from qtpc.codes.families import (CyclicCode, bch, bch_dual_containing_check,
                                 cyclic_from_defining_set, cyclotomic_cosets,
                                 extended_hamming, fire_code, hamming,
                                 is_reversible, mds_dual_containing,
                                 named_code, reed_solomon, repetition,
                                 subfield_subcode)
from qtpc.errors import HypothesisError


random_state = np.random.RandomState(0)


class LinearCodeTest(unittest.TestCase):
    def test_rank_reduction(self):
        H = GF2([[1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0]])
        code = LinearCode(H)
        self.assertTrue(code.reduced)
        self.assertEqual((code.n, code.k, code.rho), (4, 2, 2))
        with self.assertRaises(ValueError):
            LinearCode(np.array([[1, 0]]))

    def test_encode_contains(self):
        code = hamming(4)
        msgs = GF2(random_state.randint(0, 2, size=(20, code.k)))
        words = code.encode(msgs)
        self.assertTrue(np.all(code.contains(words)))
        self.assertFalse(np.any(code.syndrome(words)))
        flipped = words.copy()
        flipped[:, 3] += GF2(1)
        self.assertFalse(np.any(code.contains(flipped)))
        with self.assertRaises(ValueError):
            code.syndrome(GF2.Zeros(7))

    def test_hamming(self):
        code = hamming(3)
        self.assertEqual(code.params, (7, 4, 3))
        distance = code.min_distance()
        self.assertEqual(distance, Distance(3, True, 3))
        self.assertEqual(weight(distance.witness), 3)
        self.assertTrue(code.is_dual_containing())
        self.assertEqual(code.dual().min_distance().value, 4)

    def test_quaternary_hamming(self):
        code = hamming(2, 4)
        self.assertEqual((code.n, code.k, code.q), (5, 3, 4))
        self.assertTrue(code.is_hermitian_dual_containing())
        self.assertEqual(min_distance(code).value, 3)
        dual = code.hermitian_dual()
        self.assertEqual(dual.k, 2)
        self.assertTrue(dual.is_trace_hermitian_self_orthogonal())
        self.assertEqual(min_weight_difference(code, dual)[0], 3)
        with self.assertRaises(ValueError):
            hamming(3).hermitian_dual()

    def test_extended_hamming_self_dual(self):
        code = extended_hamming(3)
        self.assertEqual(code.params, (8, 4, 4))
        self.assertTrue(code.is_dual_containing())
        self.assertEqual(min_distance(code).value, 4)

    def test_repetition(self):
        code = repetition(5)
        self.assertEqual(code.params, (5, 1, 5))
        self.assertTrue(code.contains(GF2.Ones(5)))
        self.assertEqual(code.min_distance().value, 5)
        with self.assertRaises(ValueError):
            repetition(1)

    def test_min_weight_difference(self):
        code = hamming(3)
        w, witness = min_weight_difference(code, code.dual())
        self.assertEqual(w, 3)
        self.assertTrue(code.contains(witness))
        self.assertTrue(np.any(code.dual().syndrome(witness)))
        with self.assertRaises(ValueError):
            min_weight_difference(code.dual(), code)

    def test_column_search(self):
        config = {'enumeration_limit': 1024}
        code = bch(5, 1, 5)
        distance = min_distance(code, config)
        self.assertTrue(distance.exact)
        self.assertEqual(distance.value, 5)
        self.assertTrue(code.contains(distance.witness))
        self.assertEqual(weight(distance.witness), 5)
        bound = min_distance(code, {'enumeration_limit': 1,
                                    'max_column_weight': 3})
        self.assertEqual(bound, Distance(4, False))
        self.assertEqual(str(bound), '≥4')
        # the design distance lifts a weaker search bound
        fresh = bch(5, 1, 5)
        self.assertEqual(fresh.min_distance({'enumeration_limit': 1,
                                             'max_column_weight': 3}).value,
                         5)
        with self.assertRaises(ValueError):
            min_distance(code, {'bogus': 1})


class FamilyTest(unittest.TestCase):
    def test_cyclotomic_cosets(self):
        self.assertEqual(cyclotomic_cosets(15),
                         [[0], [1, 2, 4, 8], [3, 6, 12, 9], [5, 10],
                          [7, 14, 13, 11]])
        with self.assertRaises(ValueError):
            cyclotomic_cosets(14)

    def test_cyclic_code(self):
        g = poly_from_bits([1, 1, 0, 1])
        code = CyclicCode(7, g)
        self.assertEqual(code.k, 4)
        self.assertEqual(code.defining_set, [1, 2, 4])
        # xⁱ·g(x) is a codeword for every shift
        for i in range(4):
            word = GF2.Zeros(7)
            word[i:i + 4] = [1, 1, 0, 1]
            self.assertTrue(code.contains(word))
        with self.assertRaises(ValueError):
            CyclicCode(7, poly_from_bits([1, 0, 1]))
        with self.assertRaises(ValueError):
            cyclic_from_defining_set(15, [1])

    def test_bch(self):
        self.assertEqual(bch(4, 1, 3).k, 11)
        code = bch(4, 1, 5)
        self.assertEqual(code.params, (15, 7, 5))
        self.assertEqual(code.min_distance().value, 5)
        self.assertEqual(bch(5, 1, 7).rho, 15)

    def test_bch_dual_containing_prediction(self):
        for m, delta, expected in ((4, 3, True), (4, 5, False),
                                   (5, 7, True), (6, 5, True)):
            check = bch_dual_containing_check(bch(m, 1, delta))
            self.assertEqual(check.predicted, expected)
            self.assertTrue(check.agree)
        with self.assertRaises(ValueError):
            bch_dual_containing_check(bch(4, 2, 3))

    def test_reed_solomon_subfield_subcode(self):
        rs = reed_solomon(field(4), 15, 11)
        self.assertTrue(rs.is_narrow_sense_primitive)
        sub = subfield_subcode(rs)
        self.assertEqual((sub.n, sub.k), (15, 7))
        self.assertFalse(np.any(sub.h @ bch(4, 1, 5).generator.T))
        check = bch_dual_containing_check(rs)
        self.assertFalse(check.predicted)
        self.assertTrue(check.agree)

    def test_reed_solomon_lengths(self):
        cases = [(field(2), 3, 1), (field(2), 4, 2), (field(2), 5, 3),
                 (field(3), 5, 2), (field(3), 8, 4), (field(3), 9, 5)]
        for GF, n, k in cases:
            code = reed_solomon(GF, n, k)
            self.assertEqual((code.n, code.k), (n, k))
            self.assertEqual(min_distance(code).value, n - k + 1)
            self.assertEqual(code.min_distance().value, n - k + 1)
            self.assertTrue(code.contains(code.min_distance().witness))
        with self.assertRaises(ValueError):
            reed_solomon(field(2), 6, 2)

    def test_mds_dual_containing(self):
        code = mds_dual_containing(field(2), 4, 3)
        self.assertEqual(code.params, (4, 2, 3))
        self.assertTrue(code.is_dual_containing())
        for n in (5, 7, 8):
            code = mds_dual_containing(field(3), n, 3)
            self.assertTrue(code.is_dual_containing())
            self.assertEqual(min_distance(code).value, 3)
        with self.assertRaises(HypothesisError):
            mds_dual_containing(field(3), 8, 6)

    def test_reversible(self):
        self.assertTrue(is_reversible(repetition(5)))
        self.assertFalse(is_reversible(bch(4, 1, 3)))

    def test_fire_code(self):
        quartic = poly_from_bits([1, 1, 1, 1, 1])
        fire = fire_code(quartic, 4)
        self.assertEqual((fire.n, fire.k), (35, 24))
        self.assertEqual(fire.g, poly_from_bits([1, 0, 0, 0, 0, 0, 0, 1])
                         * quartic)
        self.assertTrue(is_reversible(fire))
        self.assertEqual(fire.burst_length, 4)

        small = fire_code(quartic, 2)
        self.assertEqual((small.n, small.k), (15, 8))
        self.assertTrue(is_reversible(small))

        cubic = fire_code(poly_from_bits([1, 1, 0, 1]), 2)
        self.assertEqual((cubic.n, cubic.k), (21, 15))
        self.assertFalse(is_reversible(cubic))

    def test_fire_hypotheses(self):
        with self.assertRaises(HypothesisError) as ctx:
            fire_code(poly_from_bits([1, 0, 1, 1, 1]), 4)
        self.assertIn('irreducible', ctx.exception.condition)
        with self.assertRaises(HypothesisError):
            fire_code(poly_from_bits([1, 1, 1, 1, 1]), 3)
        with self.assertRaises(HypothesisError):
            fire_code(poly_from_bits([1, 1, 0, 1]), 4)

    def test_named_codes(self):
        self.assertEqual(named_code('hamming_7_4').params, (7, 4, 3))
        self.assertEqual(named_code('hamming_5_3_gf4').field, gf4())
        with self.assertRaises(ValueError):
            named_code('golay')


if __name__ == '__main__':
    unittest.main()
