import unittest
import numpy as np
from steinberg_schur.common.settings import Settings
from steinberg_schur.phirings import check_axioms, check_artin, check_weak_unit, dual_numbers, etale_quadratic, \
    find_isomorphism, gf, ideal_decompose, make_ring, nucleus, center, parse_ring, product_ring, quotient, \
    serialize_ring, split_etale, subdirect_classification, tits_ring, zero_ring, zmod
from steinberg_schur.phirings.tits_rings import a5_ring, b33_ring, c33_ring, f4_split_ring


class TestRecipes(unittest.TestCase):
    def setUp(self):
        self.sizes = {
            'gf(2)': 2,
            'gf(4)': 4,
            'zmod(6)': 6,
            'dual_numbers(gf(2))': 4,
            'product(gf(2), gf(3))': 6,
            'etale_quadratic(gf(2), field)': 4,
            'etale_quadratic(gf(2), split)': 4,
        }

    def test_sizes(self):
        for recipe, size in self.sizes.items():
            ring = make_ring(recipe)
            self.assertEqual(ring.size, size, msg=recipe)
            self.assertTrue(ring.is_unital)
            self.assertTrue(check_axioms('associative', ring).ok, msg=recipe)

    def test_invalid_recipes(self):
        for recipe in ['gf(6)', 'octonions(gf(2))', 'gf(2', 'zmod(2) x', 'matrices(gf(2))']:
            with self.assertRaises(ValueError, msg=recipe):
                make_ring(recipe)
        with self.assertRaises(TypeError):
            make_ring(4)

    def test_size_cap(self):
        with self.assertRaises(ValueError):
            make_ring('gf(512)')
        with self.assertRaises(ValueError):
            make_ring('gf(8)', settings=Settings({'ring_size_cap': 4}))

    def test_etale_conjugation(self):
        l = etale_quadratic(gf(2), 'field')
        self.assertEqual([l.star(u) for u in l.elements], [0, 1, 3, 2])
        self.assertEqual(l.trace(2), 1)
        self.assertEqual(l.norm(2), 1)
        split = etale_quadratic(gf(2), 'split')
        self.assertEqual(len(split.idempotents()), 4)


class TestAxioms(unittest.TestCase):
    def setUp(self):
        self.f3 = gf(3)
        self.f2 = gf(2)

    def test_tits_rings_are_valid(self):
        self.assertTrue(check_axioms('b_ring', b33_ring(self.f3)).ok)
        self.assertTrue(check_axioms('b_ring', b33_ring(self.f2)).ok)
        self.assertTrue(check_axioms('b_ring', c33_ring(self.f3)).ok)
        self.assertTrue(check_axioms('b_ring', c33_ring(self.f2)).ok)
        self.assertTrue(check_axioms('f4_ring', f4_split_ring(self.f3)).ok)

    def test_planted_defect(self):
        ring = b33_ring(self.f3).replace(phi=[0, 1, 0])
        report = check_axioms('b_ring', ring)
        self.assertFalse(report.ok)
        self.assertIn('phi is additive', report.names())

    def test_variety_kind_mismatch(self):
        with self.assertRaises(ValueError):
            check_axioms('r4', self.f2)
        with self.assertRaises(ValueError):
            check_axioms('not a variety', self.f2)

    def test_tits_ring_errors(self):
        with self.assertRaises(ValueError):
            tits_ring('2A53', self.f3, 'field')
        with self.assertRaises(ValueError):
            tits_ring('2D43', self.f2)
        with self.assertRaises(ValueError):
            tits_ring('G2', self.f2)
        with self.assertRaises(ValueError):
            tits_ring('B33', zero_ring(2))


class TestQuotients(unittest.TestCase):
    def test_identity_quotients(self):
        self.assertTrue(quotient('r2eps', dual_numbers(gf(2))).is_identity())
        self.assertTrue(quotient('r3', gf(3)).is_identity())
        self.assertTrue(quotient('r3', b33_ring(gf(3))).is_identity())

    def test_collapsing_quotients(self):
        self.assertEqual(quotient('r2', gf(4)).algebra.size, 1)
        result = quotient('r2', zmod(6))
        self.assertEqual(result.algebra.size, 2)
        self.assertEqual(result.image(3), result.image(1))
        self.assertEqual(result.image(2), result.image(0))
        self.assertEqual(quotient('r3', gf(2)).algebra.size, 1)

    def test_boolean_delta(self):
        result = quotient('r2b', b33_ring(gf(2)))
        self.assertEqual(result.algebra.delta_size, 2)

    def test_idempotent(self):
        once = quotient('r2', zmod(6)).algebra
        self.assertTrue(quotient('r2', once).is_identity())

    def test_products(self):
        pairs = [('r2', gf(4), zmod(6)), ('r2eps', dual_numbers(gf(2)), zmod(6)), ('r3', gf(3), gf(2)),
                 ('r2eps', gf(2), gf(4))]
        for variety, a, b in pairs:
            product = quotient(variety, product_ring([a, b])).algebra.size
            self.assertEqual(product, quotient(variety, a).algebra.size * quotient(variety, b).algebra.size,
                             msg=f'{variety} {a.name} {b.name}')


class TestDecompositions(unittest.TestCase):
    def test_dual_numbers(self):
        decomposition = ideal_decompose('r2eps', dual_numbers(gf(2)))
        self.assertEqual(decomposition.ideal_part.size, 2)
        self.assertEqual(decomposition.boolean_part.size, 2)
        self.assertEqual(list(decomposition.projection), [0, 0, 1, 1])

    def test_anisotropic_a5(self):
        decomposition = ideal_decompose('r4', a5_ring(gf(2), 'field'))
        self.assertEqual(decomposition.ideal_part.size, 4)
        self.assertEqual(decomposition.boolean_part.size, 2)

    def test_not_in_variety(self):
        with self.assertRaises(ValueError):
            ideal_decompose('r2eps', gf(3))

    def test_split_etale(self):
        field = split_etale(gf(2), etale_quadratic(gf(2), 'field'))
        self.assertEqual((field.split_factors, field.anisotropic_factors), (0, 1))
        split = split_etale(gf(2), etale_quadratic(gf(2), 'split'))
        self.assertEqual((split.split_factors, split.anisotropic_factors), (1, 0))


class TestRingTools(unittest.TestCase):
    def test_weak_units(self):
        self.assertTrue(check_weak_unit(gf(4), [1]))
        report = check_weak_unit(gf(4), [2])
        self.assertFalse(report)
        self.assertEqual(report.condition, 'semigroup')
        report = check_weak_unit(zero_ring(2), [0])
        self.assertEqual(report.condition, 'R x E -> R onto')

    def test_nucleus_and_center(self):
        self.assertEqual(nucleus(gf(4)), [0, 1, 2, 3])
        self.assertEqual(center(zmod(6)), list(range(6)))
        self.assertTrue(check_artin(gf(4), 2, 3))

    def test_subdirect(self):
        report = subdirect_classification('r2eps', dual_numbers(gf(2)))
        self.assertTrue(report.separating)
        self.assertIn('F2[e]', report.factors())
        report = subdirect_classification('r3', b33_ring(gf(3)))
        self.assertTrue(report.separating)
        for factors in ([gf(2), dual_numbers(gf(2))], [gf(2), gf(2), gf(2)], [gf(2), gf(2)]):
            report = subdirect_classification('r2eps', product_ring(factors))
            self.assertTrue(report.separating, msg=str([f.name for f in factors]))

    def test_isomorphism(self):
        self.assertIsNotNone(find_isomorphism(zmod(6), make_ring('product(gf(2), gf(3))')))
        self.assertIsNone(find_isomorphism(zmod(4), gf(4)))


class TestRingIO(unittest.TestCase):
    def test_ring(self):
        ring = dual_numbers(gf(2))
        parsed = parse_ring(serialize_ring(ring))
        self.assertTrue(parsed.same_tables(ring))
        self.assertEqual(parsed.labels, ring.labels)

    def test_b_ring(self):
        ring = b33_ring(gf(3))
        parsed = parse_ring(serialize_ring(ring), name='B33')
        self.assertTrue(parsed.ring.same_tables(ring.ring))
        for key in ['dadd_table', 'phi_table', 'rho_table', 'pair_table', 'act_table']:
            self.assertTrue(np.array_equal(getattr(parsed, key), getattr(ring, key)), msg=key)
        self.assertEqual(parsed.iota, ring.iota)

    def test_f4_ring(self):
        ring = f4_split_ring(gf(2))
        parsed = parse_ring(serialize_ring(ring))
        self.assertTrue(np.array_equal(parsed.rho_s, ring.rho_s))
        self.assertTrue(np.array_equal(parsed.s.mul_table, ring.s.mul_table))

    def test_errors(self):
        with self.assertRaises(ValueError):
            parse_ring('ring 2\nadd\n0 1\n1 0\n')
        with self.assertRaises(ValueError):
            parse_ring('field 2\n')
        with self.assertRaises(ValueError):
            parse_ring('')


if __name__ == '__main__':
    unittest.main()
