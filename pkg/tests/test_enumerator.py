import os
import unittest
import galois
from steinberg_schur.common import Settings
from steinberg_schur.enumerator import MatrixGroupOracle, coset_words, matrix_order, orthogonal_images, \
    subgroup_chain_order, todd_coxeter, transvection_images, verify_homomorphism
from steinberg_schur.phirings import gf
from steinberg_schur.phirings.tits_rings import b33_ring
from steinberg_schur.presentations import GenKey, Presentation, parse_presentation, positive_generators, steinberg
from steinberg_schur.rootsys import build

SLOW = os.environ.get('STEINBERG_SLOW_TESTS') is not None


class TestToddCoxeter(unittest.TestCase):
    def setUp(self):
        self.a5 = parse_presentation('gens 2\nname 1 a\nname 2 b\nrel 1 1\nrel 2 2 2\nrel 1 2 1 2 1 2 1 2 1 2\n')

    def test_cyclic(self):
        cyclic = parse_presentation('gens 1\nrel 1 1 1 1 1\n')
        table = todd_coxeter(cyclic)
        self.assertEqual(table.status, 'complete')
        self.assertEqual(table.coset_count, 5)

    def test_a5_strategies(self):
        for strategy in ['hlt', 'felsch']:
            table = todd_coxeter(self.a5, strategy=strategy)
            self.assertEqual(table.index, 60, msg=strategy)
            self.assertIsNone(table.rescan(self.a5))

    def test_growth_past_initial_capacity(self):
        cyclic = parse_presentation('gens 1\nrel ' + ' '.join(['1'] * 1200) + '\n')
        a2 = steinberg(build('A', 2), gf(2))
        for strategy in ['hlt', 'felsch']:
            self.assertEqual(todd_coxeter(cyclic, strategy=strategy).index, 1200, msg=strategy)
            table = todd_coxeter(a2, strategy=strategy)
            self.assertEqual(table.index, 168, msg=strategy)
            self.assertIsNone(table.rescan(a2))

    def test_subgroups(self):
        self.assertEqual(todd_coxeter(self.a5, [(1,)]).index, 30)
        self.assertEqual(todd_coxeter(self.a5, [(2,)]).index, 20)
        self.assertEqual(todd_coxeter(self.a5, [(1,), (2,)]).index, 1)
        self.assertEqual(todd_coxeter(self.a5, [(1,), (2,)], strategy='felsch').index, 1)

    def test_capped(self):
        free = Presentation(2)
        for strategy in ['hlt', 'felsch']:
            table = todd_coxeter(free, max_cosets=50, strategy=strategy)
            self.assertEqual(table.status, 'capped')
            self.assertIsNone(table.index)
        self.assertEqual(todd_coxeter(self.a5, max_cosets=59).status, 'capped')

    def test_settings_cap(self):
        table = todd_coxeter(self.a5, settings=Settings({'max_cosets': 10}))
        self.assertEqual(table.status, 'capped')

    def test_errors(self):
        with self.assertRaises(ValueError):
            todd_coxeter(self.a5, strategy='random')
        with self.assertRaises(ValueError):
            todd_coxeter(self.a5, max_cosets=0)
        with self.assertRaises(ValueError):
            todd_coxeter(self.a5, [(3,)])

    def test_no_generators(self):
        self.assertEqual(todd_coxeter(Presentation()).index, 1)

    def test_coset_words(self):
        table = todd_coxeter(self.a5)
        words = coset_words(table)
        self.assertEqual(words[0], ())
        for coset, word in enumerate(words):
            self.assertEqual(table.act(0, word), coset)

    def test_permutations_satisfy_relators(self):
        table = todd_coxeter(self.a5, [(1,)])
        report = verify_homomorphism(self.a5, list(table.permutations()))
        self.assertTrue(report.holds)

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_steinberg_a3(self):
        presentation = steinberg(build('A', 3), gf(2))
        table = todd_coxeter(presentation)
        self.assertEqual(table.index, 20160)
        self.assertIsNone(table.rescan(presentation))
        self.assertEqual(todd_coxeter(presentation, strategy='felsch').index, 20160)


class TestChain(unittest.TestCase):
    def setUp(self):
        self.a5 = parse_presentation('gens 2\nrel 1 1\nrel 2 2 2\nrel 1 2 1 2 1 2 1 2 1 2\n')

    def test_trivial_chain(self):
        result = subgroup_chain_order(self.a5, [[]])
        self.assertEqual(result.indices, [60])
        self.assertEqual(result.order, 60)

    def test_chain(self):
        result = subgroup_chain_order(self.a5, [[2]])
        self.assertEqual(result.indices, [20, 3])
        self.assertEqual(result.order, 60)
        self.assertEqual(subgroup_chain_order(self.a5, [[1], []]).order, 60)

    def test_capped_step(self):
        result = subgroup_chain_order(self.a5, [[2]], max_cosets=10)
        self.assertEqual(result.status, 'capped')
        self.assertEqual(result.failing_step, 0)
        self.assertIsNone(result.order)

    def test_not_nested(self):
        with self.assertRaises(ValueError):
            subgroup_chain_order(self.a5, [[2], [1]])

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_b3_unipotent_chain(self):
        presentation = steinberg(build('B', 3), b33_ring(gf(2)))
        positive = positive_generators(presentation, build('B', 3))
        self.assertEqual(len(positive), 9)
        result = subgroup_chain_order(presentation, [positive])
        self.assertEqual(result.indices, [2835, 512])
        self.assertEqual(result.order, 1451520)


class TestOracles(unittest.TestCase):
    def setUp(self):
        self.GF2 = galois.GF(2)
        self.a3 = steinberg(build('A', 3), gf(2))

    def test_transvections(self):
        images = transvection_images(self.a3, self.GF2)
        self.assertTrue(verify_homomorphism(self.a3, images).holds)

    def test_planted_transpose(self):
        images = transvection_images(self.a3, self.GF2)
        key = GenKey('long', (1, -1, 0, 0), 1)
        images[key] = images[key].T
        report = verify_homomorphism(self.a3, images)
        self.assertFalse(report.holds)
        self.assertIsNotNone(report.relator)
        self.assertNotEqual(report.tag.family, 'additivity')

    def test_orthogonal_images(self):
        presentation = steinberg(build('B', 3), b33_ring(gf(2)))
        self.assertTrue(verify_homomorphism(presentation, orthogonal_images(presentation, 3)).holds)

    def test_mismatch(self):
        images = transvection_images(self.a3, self.GF2)
        key = GenKey('long', (1, -1, 0, 0), 1)
        images[key] = self.GF2.Identity(3)
        with self.assertRaises(ValueError):
            verify_homomorphism(self.a3, images)
        with self.assertRaises(ValueError):
            verify_homomorphism(self.a3, {})

    def test_identity_order(self):
        self.assertEqual(matrix_order(MatrixGroupOracle([self.GF2.Identity(3)])), 1)

    def test_sl4_order(self):
        oracle = MatrixGroupOracle(list(transvection_images(self.a3, self.GF2).values()))
        self.assertEqual(matrix_order(oracle), 20160)
        self.assertIsNone(matrix_order(oracle, cap=1000))
        self.assertEqual(oracle.status, 'capped')

    def test_non_prime_field(self):
        GF4 = galois.GF(4)
        generator = GF4([[2, 0], [0, 1]])
        self.assertEqual(matrix_order(MatrixGroupOracle([generator])), 3)

    def test_singular_generator(self):
        with self.assertRaises(ValueError):
            MatrixGroupOracle([self.GF2([[1, 1], [1, 1]])])

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_sp6_order(self):
        presentation = steinberg(build('B', 3), b33_ring(gf(2)))
        images = orthogonal_images(presentation, 3)
        simple = [GenKey('long', (2, 1), 1), GenKey('long', (3, 2), 1), GenKey('short', (3,), 1),
                  GenKey('long', (1, 2), 1), GenKey('long', (2, 3), 1), GenKey('short', (-3,), 1)]
        self.assertEqual(matrix_order(MatrixGroupOracle([images[key] for key in simple])), 1451520)


if __name__ == '__main__':
    unittest.main()
