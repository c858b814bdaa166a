import unittest

import numpy as np

from qtpc.algebra.field import field, gf4, poly_from_bits
from qtpc.codes.families import (extended_hamming, fire_code, hamming,
                                 mds_dual_containing, reed_solomon,
                                 repetition, subfield_subcode)
from qtpc.errors import HypothesisError
from qtpc.quantum.comparison import (CqcSpec, comparison_rows, cqc_parameters,
                                     load_table, qtpc_table_parameters)
from qtpc.quantum.construction import (companion_qtpc, fire_burst_qtpc,
                                       pure_qtpc, repetition_burst_qtpc,
                                       self_dual_mds_qtpc,
                                       self_dual_square_qtpc)
from qtpc.quantum.stabilizer import (Purity, StabilizerCode,
                                     classical_error_classes, css,
                                     gf4_to_symplectic, hermitian_code,
                                     symplectic_commute, symplectic_product)
from qtpc.util.serialize import matrix_from_hex


quartic = poly_from_bits([1, 1, 1, 1, 1])
# keeps the distance searches of the long codes short
fast_config = {'enumeration_limit': 2 ** 12, 'max_column_weight': 3,
               'search_limit': 20_000}


class SymplecticTest(unittest.TestCase):
    def test_symplectic_product(self):
        x0 = np.array([1, 0, 0, 0])
        z0 = np.array([0, 0, 1, 0])
        z1 = np.array([0, 0, 0, 1])
        self.assertEqual(symplectic_product(x0, z0), 1)
        self.assertEqual(symplectic_product(x0, z1), 0)
        self.assertTrue(symplectic_commute([[1, 1, 0, 0], [0, 0, 1, 1]]))
        self.assertFalse(symplectic_commute([[1, 0, 0, 0], [0, 0, 1, 0]]))
        with self.assertRaises(ValueError):
            symplectic_commute([[1, 0, 1]])

    def test_gf4_map(self):
        rows = gf4()([[0, 1, 2, 3]])
        self.assertEqual(gf4_to_symplectic(rows).tolist(),
                         [[0, 1, 1, 0, 0, 1, 0, 1]])

    def test_classical_error_classes(self):
        errors = [([1, 0, 0], [0, 0, 0]), ([1, 0, 0], [0, 1, 0]),
                  ([0, 0, 0], [0, 1, 0])]
        e_x, e_z = classical_error_classes(errors)
        self.assertEqual(e_x, {(1, 0, 0), (0, 0, 0)})
        self.assertEqual(e_z, {(0, 0, 0), (0, 1, 0)})

    def test_invalid_stabilizer(self):
        distance = hamming(3).min_distance()
        with self.assertRaises(ValueError):
            StabilizerCode([[1, 0, 0, 0], [0, 0, 1, 0]], 0, distance)
        with self.assertRaises(ValueError):
            StabilizerCode([[1, 1, 0, 0]], 0, distance)


class StabilizerTest(unittest.TestCase):
    def test_steane(self):
        code = css(hamming(3), hamming(3))
        self.assertEqual(code.params, (7, 1, 3))
        self.assertTrue(code.distance.exact)
        self.assertIs(code.purity, Purity.VERIFIED)
        self.assertTrue(code.is_css)
        self.assertTrue(symplectic_commute(code.stab))
        record = code.to_dict()
        self.assertEqual(record['pure'], 'verified')
        self.assertEqual(record['stab_ab']['cols'], 14)
        self.assertEqual(len(record['stab_ab']['rows']), 6)
        stab_ab = record['stab_ab']
        stab = matrix_from_hex(stab_ab['rows'], stab_ab['cols'])
        self.assertTrue(np.array_equal(stab, code.stab))

    def test_css_hypothesis(self):
        with self.assertRaises(HypothesisError):
            css(hamming(3), repetition(7))
        with self.assertRaises(ValueError):
            css(hamming(3), hamming(4))
        with self.assertRaises(ValueError):
            css(hamming(2, 4), hamming(2, 4))

    def test_hermitian_five_qubit(self):
        code = hermitian_code(hamming(2, 4))
        self.assertEqual(code.params, (5, 1, 3))
        self.assertTrue(code.distance.exact)
        self.assertIs(code.purity, Purity.VERIFIED)
        self.assertFalse(code.is_css)
        with self.assertRaises(ValueError):
            hermitian_code(hamming(3))


class ConstructionTest(unittest.TestCase):
    def test_quaternary_family(self):
        c1 = hamming(2, 4)
        for n2 in range(3, 18):
            c2 = reed_solomon(field(4), n2, n2 - 2)
            code = pure_qtpc(c1, c2, config=fast_config)
            self.assertEqual((code.n, code.k), (5 * n2, 5 * n2 - 8))
            self.assertEqual(code.d, 3)
            self.assertTrue(code.components['containment']['c1'])
            if n2 <= 9:
                self.assertTrue(code.distance.exact)
                self.assertIs(code.purity, Purity.VERIFIED)

    def test_pure_hypothesis(self):
        with self.assertRaises(HypothesisError) as ctx:
            pure_qtpc(repetition(3), reed_solomon(field(2), 3, 2))
        self.assertIn('dual-containing', ctx.exception.condition)

    def test_pure_binary(self):
        c2 = mds_dual_containing(field(3), 8, 3)
        code = pure_qtpc(hamming(3), c2, config=fast_config)
        self.assertEqual((code.n, code.k, code.d), (56, 56 - 2 * 3 * 2, 3))
        self.assertEqual(code.provenance, 'pure_qtpc')

    def test_long_repetition_outer_rs(self):
        c2 = reed_solomon(field(8), 255, 247)
        self.assertEqual(c2.params, (255, 247, 9))
        self.assertTrue(subfield_subcode(c2).is_dual_containing())
        code = pure_qtpc(repetition(9), c2, config=fast_config)
        self.assertEqual(code.params, (2295, 2167, 9))
        self.assertEqual(code.components['containment'],
                         {'c1': False, 'psi_c2': True})
        h = code.components['tpc'].h_base
        self.assertEqual(h.shape, (64, 2295))
        self.assertFalse(np.any(h @ h.T))
        self.assertTrue(symplectic_commute(code.stab))

    def test_scaled_repetition_outer_rs(self):
        c2 = reed_solomon(field(6), 63, 57)
        self.assertTrue(subfield_subcode(c2).is_dual_containing())
        code = pure_qtpc(repetition(7), c2, config=fast_config)
        self.assertEqual(code.params, (441, 369, 7))
        tpc = code.components['tpc']
        distance = tpc.certify_distance(fast_config)
        self.assertEqual(distance.value, 7)
        self.assertTrue(distance.exact)
        self.assertEqual(np.count_nonzero(distance.witness), 7)
        self.assertTrue(tpc.is_member(distance.witness))
        self.assertTrue(tpc.contains(distance.witness))

    def test_self_dual_square(self):
        code = self_dual_square_qtpc(extended_hamming(3), fast_config)
        self.assertEqual(code.params, (64, 32, 4))
        with self.assertRaises(HypothesisError):
            self_dual_square_qtpc(hamming(3))

    def test_self_dual_mds(self):
        code = self_dual_mds_qtpc(extended_hamming(3), fast_config)
        self.assertEqual(code.params, (64, 40, 4))
        self.assertEqual(code.provenance, 'self_dual_mds_qtpc')

    def test_repetition_burst(self):
        code = repetition_burst_qtpc(3, 4)
        self.assertEqual(code.params, (12, 4, 3))
        self.assertEqual(code.burst.burst_length, 1)
        self.assertEqual(code.burst.bursts, 1)
        self.assertEqual(code.burst.subblock, 3)
        # X errors are decoded with C, Z errors with C_L
        self.assertIs(code.z_code, code.components['tpc'])
        self.assertIs(code.x_code, code.components['tpc_l'])
        for n1, n2 in ((4, 8), (5, 6), (3, 5), (1, 2)):
            with self.assertRaises(HypothesisError):
                repetition_burst_qtpc(n1, n2)

    def test_companion_hypotheses(self):
        with self.assertRaises(HypothesisError):
            companion_qtpc(repetition(3), reed_solomon(field(2), 3, 1))
        with self.assertRaises(HypothesisError):
            companion_qtpc(hamming(3), mds_dual_containing(field(3), 8, 3))
        with self.assertRaises(HypothesisError):
            companion_qtpc(hamming(2, 4),
                           mds_dual_containing(field(4), 15, 3))

    def test_fire_family(self):
        fire = fire_code(quartic, 4)
        GF = field(11)
        for t in range(2, 13):
            c2 = mds_dual_containing(GF, 23, t)
            code = fire_burst_qtpc(fire, c2, fast_config)
            self.assertEqual((code.n, code.k), (805, 827 - 22 * t))
            tpc, tpc_l = code.components['tpc'], code.components['tpc_l']
            self.assertFalse(np.any(tpc_l.h_base @ tpc.h_base.T))
            self.assertEqual(code.burst.burst_length, 4)
            self.assertEqual(code.burst.bursts, (t - 1) // 2)
            self.assertEqual(code.burst.claimed_bursts, t // 2)
        with self.assertRaises(HypothesisError):
            fire_burst_qtpc(fire, mds_dual_containing(GF, 23, 12).dual())

    def test_fire_hypotheses(self):
        cubic = fire_code(poly_from_bits([1, 1, 0, 1]), 2)
        with self.assertRaises(HypothesisError) as ctx:
            fire_burst_qtpc(cubic, mds_dual_containing(field(6), 9, 3))
        self.assertIn('reversible', ctx.exception.condition)

    def test_burst_example(self):
        code = fire_burst_qtpc(fire_code(quartic, 2),
                               mds_dual_containing(field(7), 9, 5),
                               fast_config)
        self.assertEqual((code.n, code.k), (135, 79))
        self.assertEqual(code.burst.to_dict(),
                         {'burst_length': 2, 'bursts': 2,
                          'claimed_bursts': 2, 'subblock': 15})
        self.assertEqual(code.to_dict()['burst']['subblock'], 15)


class ComparisonTest(unittest.TestCase):
    def test_table(self):
        rows = load_table()
        self.assertEqual(len(rows), 14)
        records = comparison_rows()
        self.assertEqual(len(records), 42)
        for record in records:
            n, k, d = record['qtpc']
            self.assertEqual(n, record['cqc'][0])
            self.assertGreaterEqual(d, record['cqc'][2])
            self.assertEqual(record['qtpc_larger'], k > record['cqc'][1])

    def test_m5_rows(self):
        row = load_table()[0]
        self.assertEqual((row.m, row.delta1, row.rho1), (5, 7, 15))
        for n2 in (23, 33, 123):
            self.assertEqual(qtpc_table_parameters(31, 15, 7, n2),
                             (31 * n2, 31 * n2 - 180, 7))
            self.assertEqual(cqc_parameters(row.cqc, n2),
                             (31 * n2, 28 * n2 - 112, 6))
        record, = comparison_rows([23], [row])
        self.assertEqual(record['qtpc'], [713, 533, 7])
        self.assertTrue(record['in_range'])
        self.assertTrue(record['crossover'])
        self.assertTrue(record['qtpc_larger'])
        self.assertFalse(row.crossover(18))
        self.assertEqual(row.n2_max, 2 ** 15 + 1)

    def test_m7_row(self):
        row = load_table()[8]
        self.assertEqual((row.m, row.delta1, row.eta1, row.eta2),
                         (7, 15, 3, 5))
        self.assertEqual(row.cqc.k1, 113)
        self.assertEqual(cqc_parameters(row.cqc, 40),
                         (127 * 40, 113 * 32, 15))
        self.assertEqual(qtpc_table_parameters(127, 49, 15, 40),
                         (127 * 40, 127 * 40 - 1372, 15))

    def test_invalid_factorization(self):
        with self.assertRaises(ValueError):
            CqcSpec(5, 7, 2, 2)
        with self.assertRaises(ValueError):
            CqcSpec(5, 7, 3, 2)
        self.assertEqual(CqcSpec(5, 6, 2, 3).k1, 28)


if __name__ == '__main__':
    unittest.main()
