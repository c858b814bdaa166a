import itertools
import unittest

import numpy as np

from qtpc.algebra.field import (GF2, Extension, companion, field, gf4,
                               poly_from_bits)
from qtpc.algebra.matrix import kron, rank
from qtpc.codes.families import (bch, cyclic_from_defining_set,
                                 extended_hamming, fire_code, hamming,
                                 mds_dual_containing, reed_solomon,
                                 repetition, subfield_subcode)
from qtpc.codes.tensor import TensorProductCode, build_cl, tpc_build
from qtpc.errors import HypothesisError
from qtpc.quantum.stabilizer import css, symplectic_commute


random_state = np.random.RandomState(0)
fast_config = {'enumeration_limit': 2 ** 10, 'max_column_weight': 2,
               'search_limit': 2_000}


def _inner_codes():
    """Binary inner codes keyed by their number of check symbols."""
    return {
        2: [repetition(3)],
        3: [hamming(3), repetition(4), cyclic_from_defining_set(7, [3])],
        4: [repetition(5), bch(4, 1, 3), extended_hamming(3),
            cyclic_from_defining_set(15, [3])],
        7: [fire_code(poly_from_bits([1, 1, 1, 1, 1]), 2)],
    }


def _outer_codes(rho1):
    GF = field(rho1)
    shapes = {
        2: [(3, 1), (3, 2), (4, 2), (5, 3), (5, 2), (4, 3)],
        3: [(7, 5), (7, 3), (5, 3), (8, 6), (9, 7), (3, 1)],
        4: [(5, 3), (15, 13), (6, 4), (3, 1)],
        7: [(3, 1), (5, 3)],
    }[rho1]
    codes = [reed_solomon(GF, n, k) for n, k in shapes]
    if rho1 == 2:
        codes.append(mds_dual_containing(GF, 4, 3))
    if rho1 == 3:
        codes.append(mds_dual_containing(GF, 8, 3))
    if rho1 == 7:
        codes.append(mds_dual_containing(GF, 9, 5))
    return codes


def corpus():
    for rho1, inner in _inner_codes().items():
        outer = _outer_codes(rho1)
        for c1, c2 in itertools.product(inner, outer):
            yield c1, c2


def quaternary_corpus():
    c1 = hamming(2, 4)
    for n, k in ((3, 1), (4, 2), (5, 3), (9, 7)):
        yield c1, reed_solomon(field(4), n, k)


class TensorProductTest(unittest.TestCase):
    def test_corpus_size(self):
        pairs = list(corpus()) + list(quaternary_corpus())
        self.assertGreaterEqual(len(pairs), 50)

    def test_parameters_and_membership(self):
        for c1, c2 in corpus():
            for variant in ('psi', 'companion_t'):
                code = tpc_build(c1, c2, variant)
                n = c1.n * c2.n
                self.assertEqual(code.h_base.shape, (c1.rho * c2.rho, n))
                self.assertEqual(code.k, n - c1.rho * c2.rho)
                words = GF2(random_state.randint(0, 2, size=(8, n)))
                self.assertTrue(np.array_equal(code.is_member(words),
                                               code.contains(words)))
                codewords = code.encode(
                    GF2(random_state.randint(0, 2, size=(4, code.k))))
                self.assertTrue(np.all(code.is_member(codewords)))
                self.assertTrue(np.array_equal(
                    code.pack_syndrome(code.syndrome(words)),
                    code.outer_syndrome(words)))

    def test_dual_containment(self):
        checked = 0
        for c1, c2 in corpus():
            inner = c1.is_dual_containing()
            outer = subfield_subcode(c2).is_dual_containing()
            if inner or outer:
                self.assertTrue(tpc_build(c1, c2, 'psi').is_dual_containing())
                checked += 1
            if inner:
                self.assertTrue(
                    tpc_build(c1, c2, 'companion_t').is_dual_containing())
        self.assertGreater(checked, 0)

    def test_companion_pair(self):
        built = 0
        for c1, c2 in corpus():
            gram = c1.h @ c1.h.T
            if rank(gram) < c1.rho:
                with self.assertRaises(HypothesisError):
                    build_cl(c1, c2)
                continue
            code_l = build_cl(c1, c2)
            code_c = tpc_build(c1, c2, 'companion_t')
            self.assertEqual(code_l.k, code_c.k)
            words = GF2(random_state.randint(0, 2, size=(8, code_l.n)))
            self.assertTrue(np.array_equal(code_l.is_member(words),
                                           code_l.contains(words)))
            self.assertTrue(np.array_equal(
                code_l.pack_syndrome(code_l.syndrome(words)),
                code_l.outer_syndrome(words)))
            product = code_l.h_base @ code_c.h_base.T
            if c2.is_dual_containing():
                self.assertFalse(np.any(product))
            built += 1
        self.assertGreater(built, 0)

    def test_companion_homomorphism(self):
        for rho1 in (2, 3, 4, 7):
            GF = field(rho1)
            a = GF.Random(6, seed=random_state.randint(2 ** 31))
            b = GF.Random(6, seed=random_state.randint(2 ** 31))
            for x, y in zip(a, b):
                self.assertTrue(np.array_equal(
                    companion(GF, x * y), companion(GF, x) @ companion(GF, y)))
                self.assertTrue(np.array_equal(
                    companion(GF, x + y), companion(GF, x) + companion(GF, y)))

    def test_psi_roundtrip(self):
        for base, ext in ((GF2, field(2)), (GF2, field(3)), (GF2, field(4)),
                          (GF2, field(7)), (gf4(), field(4))):
            psi = Extension(base, ext)
            x = ext.Random((5, 7), seed=random_state.randint(2 ** 31))
            self.assertTrue(np.array_equal(psi.psi_inv(psi.psi(x)), x))

    def test_psi_companion_row_space(self):
        for c1, c2 in corpus():
            psi = tpc_build(c1, c2, 'psi').h_base
            transposed = tpc_build(c1, c2, 'companion_t').h_base
            self.assertEqual(rank(np.concatenate([psi, transposed])),
                             c1.rho * c2.rho)
            # ψ(b·a) = [b]ᵀ·ψ(a), so the two forms agree row by row
            self.assertTrue(np.array_equal(psi, transposed))

    def test_css_commutation(self):
        built = 0
        for c1, c2 in corpus():
            code = tpc_build(c1, c2, 'psi')
            if code.is_dual_containing():
                stabilizer = css(code, code, fast_config)
                self.assertTrue(symplectic_commute(stabilizer.stab))
                built += 1
            if c2.is_dual_containing() and rank(c1.h @ c1.h.T) == c1.rho:
                stabilizer = css(tpc_build(c1, c2, 'companion_t'),
                                 build_cl(c1, c2), fast_config)
                self.assertTrue(symplectic_commute(stabilizer.stab))
                built += 1
        self.assertGreater(built, 0)

    def test_quaternary_corpus(self):
        for c1, c2 in quaternary_corpus():
            code = tpc_build(c1, c2)
            n = c1.n * c2.n
            self.assertEqual(code.k, n - c1.rho * c2.rho)
            self.assertTrue(code.is_hermitian_dual_containing())
            GF = code.field
            words = GF.Random((6, n), seed=random_state.randint(2 ** 31))
            self.assertTrue(np.array_equal(code.is_member(words),
                                           code.contains(words)))
            codewords = code.encode(
                GF.Random((3, code.k), seed=random_state.randint(2 ** 31)))
            self.assertTrue(np.all(code.is_member(codewords)))

    def test_psi_form(self):
        c1, c2 = hamming(3), reed_solomon(field(3), 5, 3)
        code = tpc_build(c1, c2)
        ext = Extension(GF2, field(3))
        columns = ext.psi_inv_matrix(c1.h)[0]
        self.assertTrue(np.array_equal(code.symbol_columns, columns))
        expected = ext.psi_matrix(kron(c2.h, columns[None, :]))
        self.assertEqual(rank(np.concatenate([expected, code.h_base])),
                         code.rho)

    def test_inner_syndromes(self):
        c1, c2 = repetition(3), reed_solomon(field(2), 3, 1)
        code = tpc_build(c1, c2)
        v = GF2([1, 0, 0, 0, 0, 0, 1, 1, 1])
        x = code.inner_syndromes(v)
        self.assertEqual(x.shape, (3,))
        self.assertNotEqual(x[0], 0)
        self.assertEqual(x[1], 0)
        self.assertEqual(x[2], 0)
        self.assertFalse(code.is_member(v))

    def test_quaternary_inner_code(self):
        c1 = hamming(2, 4)
        code = tpc_build(c1, reed_solomon(field(4), 5, 3))
        self.assertEqual((code.n, code.k), (25, 21))
        self.assertTrue(code.is_hermitian_dual_containing())
        with self.assertRaises(ValueError):
            tpc_build(c1, reed_solomon(field(4), 5, 3), 'companion_t')
        with self.assertRaises(HypothesisError):
            build_cl(c1, reed_solomon(field(4), 5, 3))

    def test_invalid_inputs(self):
        with self.assertRaises(ValueError):
            tpc_build(repetition(3), reed_solomon(field(3), 5, 3))
        with self.assertRaises(ValueError):
            tpc_build(repetition(3), reed_solomon(field(2), 3, 1), 'kron')
        with self.assertRaises(HypothesisError):
            build_cl(hamming(3), reed_solomon(field(3), 5, 3))

    def test_certify_distance(self):
        code = tpc_build(repetition(3), reed_solomon(field(2), 3, 1))
        distance = code.certify_distance()
        self.assertTrue(distance.exact)
        self.assertEqual(distance.value, 3)
        self.assertTrue(code.contains(distance.witness))

        code = tpc_build(hamming(3), reed_solomon(field(3), 7, 5))
        distance = code.min_distance()
        self.assertEqual(distance.value, 3)
        self.assertTrue(distance.exact)

        code = tpc_build(repetition(5), reed_solomon(field(4), 5, 4))
        self.assertEqual(code.certify_distance().value, 2)

    def test_variant_alias(self):
        code = TensorProductCode(repetition(3), reed_solomon(field(2), 3, 1),
                                 'companion_transposed')
        self.assertEqual(code.variant, 'companion_t')


if __name__ == '__main__':
    unittest.main()
