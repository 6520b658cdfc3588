import os
import unittest
import warnings
from steinberg_schur.abelian import abelianization, alternating_table, cyclic_table, special_linear_table
from steinberg_schur.common import Settings
from steinberg_schur.enumerator import todd_coxeter
from steinberg_schur.extensions import build_d4_model, certify_generic_uce, check_pairing_identities, \
    direct_product_model, from_central_quotient, from_tables, generic_uce, predicted_uce, verify_d4_action
from steinberg_schur.phirings import gf, tits_ring
from steinberg_schur.rootsys import build

SLOW = os.environ.get('STEINBERG_SLOW_TESTS') is not None


class TestPredicted(unittest.TestCase):
    def test_a3(self):
        uce = predicted_uce(build('A', 3), gf(2))
        self.assertEqual(uce.base.generators, 12)
        self.assertEqual(uce.presentation.generators, 13)
        self.assertTrue(uce.exact)
        z = uce.central_generators[0]
        self.assertIn((z, z), uce.presentation.relators)
        self.assertEqual(uce.project((1, z, -2)), (1, -2))

    def test_additivity_untouched(self):
        uce = predicted_uce(build('A', 3), gf(2))
        central = set(uce.central_generators)
        additivity = [word for word, tag in zip(uce.presentation.relators, uce.presentation.tags)
                      if tag is not None and tag.family == 'additivity']
        self.assertTrue(additivity)
        for word in additivity:
            self.assertFalse(central & {abs(letter) for letter in word})

    def test_quotient(self):
        uce = predicted_uce(build('A', 3), gf(2))
        self.assertEqual(uce.quotient().relator_multiset(), uce.base.relator_multiset())

    def test_rewritten(self):
        uce = predicted_uce(build('A', 3), gf(2))
        z = uce.central_generators[0]
        rewritten = [tag for word, tag in zip(uce.presentation.relators, uce.presentation.tags)
                     if -z in word and tag.family in ('commuting', 'commutator')]
        self.assertTrue(rewritten)

    def test_centrally_closed(self):
        uce = predicted_uce(build('A', 4), gf(2))
        self.assertEqual(uce.central, {})
        self.assertEqual(uce.presentation.generators, uce.base.generators)

    def test_perfect(self):
        uce = predicted_uce(build('A', 3), gf(2))
        self.assertTrue(abelianization(uce.presentation).is_trivial)

    def test_d4(self):
        with self.assertWarns(UserWarning):
            uce = predicted_uce(build('D', 4), gf(2))
        self.assertFalse(uce.exact)
        self.assertEqual(len(uce.central), 3)
        self.assertEqual(uce.multiplier_order, 4)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            self.assertTrue(abelianization(predicted_uce(build('D', 4), gf(2)).presentation).is_trivial)

    def test_b3_orientation(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            uce = predicted_uce(build('B', 3), tits_ring('B33', gf(3)))
        group, central = uce.family, {z: v for v, z in uce.central.items()}
        values = {}
        for word, tag in zip(uce.presentation.relators, uce.presentation.tags):
            if tag is None or tag.family != 'commuting' or len(tag.roots[0]) != 1:
                continue
            (i,), (j, k) = tag.roots
            if abs(i) in (abs(j), abs(k)):
                continue
            letters = [central[-letter] for letter in word if abs(letter) in central]
            value = letters[0] if letters else group.zero
            values.setdefault(tag.params, {})[(i, j, k)] = value
        self.assertTrue(values)
        flipped = 0
        for by_roots in values.values():
            if (1, 2, 3) in by_roots and (3, 2, 1) in by_roots:
                self.assertEqual(by_roots[(3, 2, 1)], group.neg(by_roots[(1, 2, 3)]))
                flipped += by_roots[(1, 2, 3)] != group.zero
        self.assertGreater(flipped, 0)

    def test_unsupported(self):
        with self.assertRaises(ValueError):
            predicted_uce(build('A', 2), gf(2))

    def test_a3_order(self):
        rs = build('A', 3)
        uce = predicted_uce(rs, gf(2))
        base_table = todd_coxeter(uce.base)
        uce_table = todd_coxeter(uce.presentation)
        self.assertEqual(base_table.index, 20160)
        self.assertEqual(uce_table.index, 40320)
        model = from_tables(uce_table, base_table, keys=uce.base.keys, rs=rs, name='UCE St(A3, F2)')
        report = check_pairing_identities(model, settings=Settings({'sample_cap': 2000}))
        self.assertTrue(report.passed, msg=report.describe())
        self.assertTrue(report.item('root vanishing').passed)
        self.assertTrue(report.item('biadditivity').passed)


class TestModels(unittest.TestCase):
    def test_direct_product(self):
        base, _ = special_linear_table(3)
        model = direct_product_model(base, cyclic_table(2))
        self.assertEqual(model.order, 48)
        self.assertEqual(len(model.kernel()), 2)
        report = check_pairing_identities(model)
        self.assertTrue(report.passed, msg=report.describe())
        for x in range(base.order):
            for y in range(base.order):
                self.assertEqual(model.pairing(x, y) % 2, 0)

    def test_central_quotient(self):
        table, _ = special_linear_table(3)
        model = from_central_quotient(table)
        self.assertEqual(model.base.order, 12)
        self.assertEqual(len(model.kernel()), 2)
        report = check_pairing_identities(model)
        self.assertTrue(report.passed, msg=report.describe())
        self.assertEqual(len(report.items), 6)

    def test_not_central(self):
        with self.assertRaises(ValueError):
            from_central_quotient(alternating_table(4), kernel=[0, 1])

    def test_nonabelian_kernel(self):
        with self.assertRaises(ValueError):
            direct_product_model(cyclic_table(2), alternating_table(4))


class TestGeneric(unittest.TestCase):
    def test_trivial(self):
        presentation = generic_uce(cyclic_table(1))
        self.assertEqual(presentation.generators, 0)
        self.assertEqual(presentation.relators, [])

    def test_not_perfect(self):
        with self.assertRaises(ValueError):
            generic_uce(cyclic_table(2))

    def test_cap(self):
        with self.assertRaises(ValueError):
            generic_uce(alternating_table(5), settings=Settings({'generic_uce_cap': 30}))

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_binary_icosahedral(self):
        table, _ = special_linear_table(5)
        model = from_central_quotient(table)
        self.assertEqual(model.base.order, 60)
        presentation = generic_uce(model.base)
        self.assertEqual(presentation.generators, 59 * 59)
        report = certify_generic_uce(model.base, model, presentation=presentation)
        self.assertTrue(report.passed, msg=report.describe())

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_a5_enumeration(self):
        with self.assertWarns(UserWarning):
            presentation = generic_uce(alternating_table(5))
        simple, images = presentation.simplified()
        self.assertLess(simple.generators, presentation.generators)
        self.assertEqual(len(images), 59 * 59)
        table = todd_coxeter(simple, strategy='felsch')
        self.assertEqual(table.status, 'complete')
        self.assertEqual(table.index, 120)


class TestD4Model(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.model = build_d4_model()

    def test_normal_form(self):
        model = self.model
        self.assertEqual(model.order, 2 ** 27)
        self.assertEqual(len(model.generators), 27)
        for x in model.generators:
            self.assertEqual(model.mul(x, model.inverse(x)), 0)
        alpha = model.roots[0]
        opposite = tuple(-x for x in alpha)
        self.assertEqual(model.commutator(model.n(alpha), model.n(opposite)), 1)
        self.assertEqual(model.mul(model.d(alpha), model.d(alpha)), 1)

    def test_d_classes(self):
        model = self.model
        self.assertEqual(model.d((1, 1, 0, 0)), model.d((0, 0, 1, -1)))
        self.assertEqual(model.mul(model.d((1, 1, 0, 0)), model.d((0, 1, 1, 0))),
                         model.mul(model.d((1, 0, 1, 0)), 1))

    def test_verify(self):
        report = verify_d4_action(self.model)
        self.assertTrue(report.passed, msg=report.describe())
        self.assertIn('64', report.item('subgroup order').detail)
        self.assertTrue(report.item('C excluded').passed)

    def test_planted_defect(self):
        model = build_d4_model()
        alpha = model.roots[0]
        delta = next(beta for beta in model.roots if model.rs.dot(alpha, beta) == 0)
        images = list(model.action[alpha])
        images[1 + model.position[alpha]] = model.mul(model.n(alpha), model.n(delta))
        model.action[alpha] = images
        report = verify_d4_action(model)
        self.assertFalse(report.passed)
        self.assertFalse(report.item('relators').passed)
        self.assertIn('relator', report.item('relators').detail)
        self.assertTrue(report.item('relations').passed)


if __name__ == '__main__':
    unittest.main()
