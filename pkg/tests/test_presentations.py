import unittest
import warnings
from steinberg_schur.enumerator import todd_coxeter
from steinberg_schur.phirings import gf, zero_ring
from steinberg_schur.phirings.tits_rings import b33_ring, f4_split_ring
from steinberg_schur.presentations import GenKey, commutator, conjugate, cyclic_normal_form, invert, \
    parse_presentation, power, reduce, serialize_presentation, steinberg
from steinberg_schur.rootsys import build


class TestWords(unittest.TestCase):
    def setUp(self):
        self.word = (1, 2, -1, 3, 3)

    def test_reduce(self):
        self.assertEqual(reduce((1, -1, 2)), (2,))
        self.assertEqual(reduce((1, 2, -2, -1)), ())
        with self.assertRaises(ValueError):
            reduce((1, 0))

    def test_invert(self):
        self.assertEqual(invert(invert(self.word)), self.word)
        self.assertEqual(reduce(self.word + invert(self.word)), ())

    def test_commutator(self):
        self.assertEqual(commutator((1,), (1,)), ())
        self.assertEqual(commutator((1,), (2,)), (1, 2, -1, -2))
        self.assertEqual(conjugate((2,), (1,)), (1, 2, -1))
        self.assertEqual(power((1, 2), -2), (-2, -1, -2, -1))

    def test_cyclic_normal_form(self):
        self.assertEqual(cyclic_normal_form((2, 1)), cyclic_normal_form((1, 2)))
        self.assertEqual(cyclic_normal_form((1, 2, -1)), (2,))


class TestPresentationIO(unittest.TestCase):
    def test_parse(self):
        presentation = parse_presentation('gens 2\nrel 1 -2 1 -2\n')
        self.assertEqual(presentation.generators, 2)
        self.assertEqual(len(presentation.relators), 1)
        self.assertEqual(len(presentation.relators[0]), 4)

    def test_round_trip(self):
        text = 'gens 3\nname 1 a\nname 2 b\nname 3 c\nrel 1 1\nrel 2 3 -2 -3\n'
        self.assertEqual(serialize_presentation(parse_presentation(text)), text)
        unnamed = 'gens 2\nrel 1 2 1\n'
        self.assertEqual(serialize_presentation(parse_presentation(unnamed)), unnamed)

    def test_steinberg_round_trip(self):
        presentation = steinberg(build('A', 3), gf(2))
        parsed = parse_presentation(serialize_presentation(presentation))
        self.assertEqual(parsed.relators, presentation.relators)
        self.assertEqual(parsed.names, presentation.names)

    def test_errors(self):
        for text in ['rel 1 2\n', 'gens 2\nrel 1 3\n', 'gens x\n', 'gens 2\nfoo 1\n', 'gens 2\nrel 1 a\n', '']:
            with self.assertRaises(ValueError, msg=text):
                parse_presentation(text)
        with self.assertRaisesRegex(ValueError, 'line 3'):
            parse_presentation('gens 2\nrel 1\nrel 0\n')

    def test_repeated_relator_warns(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            presentation = parse_presentation('gens 1\nrel 1 1\nrel 1 1\n')
        self.assertEqual(len(presentation.relators), 1)
        self.assertEqual(len(caught), 1)


class TestSimplify(unittest.TestCase):
    def test_eliminate(self):
        presentation = parse_presentation('gens 3\nname 1 a\nname 2 b\nname 3 c\nrel 1 -2\nrel 3\nrel 2 2 2\n')
        simple, images = presentation.simplified()
        self.assertEqual(simple.names, ['a'])
        self.assertEqual(simple.relators, [(-1, -1, -1)])
        self.assertEqual(images, [(1,), (1,), ()])

    def test_inverse_and_cascade(self):
        # ab = 1 gives b = a^-1, then a a b = a kills both
        presentation = parse_presentation('gens 2\nrel 1 2\nrel 1 1 2\n')
        simple, images = presentation.simplified()
        self.assertEqual(simple.generators, 0)
        self.assertEqual(images, [(), ()])
        presentation = parse_presentation('gens 3\nrel 1 2\nrel 3 3\nrel 2 3 2 3\n')
        simple, images = presentation.simplified()
        self.assertEqual(images[1], (-1,))

    def test_cyclic_duplicates(self):
        presentation = parse_presentation('gens 2\nrel 1 1\nrel 2 2 2\nrel 1 2 -1 -2\nrel 2 1 -2 -1\n')
        simple, images = presentation.simplified()
        self.assertEqual(simple.generators, 2)
        self.assertEqual(len(simple.relators), 3)
        self.assertEqual(images, [(1,), (2,)])

    def test_same_group(self):
        a5 = parse_presentation('gens 3\nrel 1 1\nrel 2 2 2\nrel 1 2 1 2 1 2 1 2 1 2\nrel 3 -1\n')
        simple, _ = a5.simplified()
        self.assertEqual(simple.generators, 2)
        self.assertEqual(todd_coxeter(simple).index, 60)


class TestSteinberg(unittest.TestCase):
    def setUp(self):
        self.a3 = build('A', 3)
        self.f2 = gf(2)

    def test_a3_counts(self):
        presentation = steinberg(self.a3, self.f2)
        self.assertEqual(presentation.generators, 12)
        self.assertEqual(len(presentation.relators), 72)
        families = [tag.family for tag in presentation.tags]
        self.assertEqual(families.count('additivity'), 12)
        self.assertEqual(families.count('commutator'), 24)
        self.assertEqual(families.count('commuting'), 36)

    def test_a3_relation(self):
        presentation = steinberg(self.a3, self.f2)
        x12 = presentation.generator_for(GenKey('long', (1, -1, 0, 0), 1))
        x23 = presentation.generator_for(GenKey('long', (0, 1, -1, 0), 1))
        x13 = presentation.generator_for(GenKey('long', (1, 0, -1, 0), 1))
        self.assertIn(commutator(x12, x23) + invert(x13), presentation.relators)
        self.assertEqual(presentation.generator_for(GenKey('long', (1, -1, 0, 0), 0)), ())

    def test_zero_ring(self):
        presentation = steinberg(self.a3, zero_ring(1))
        self.assertEqual(presentation.generators, 0)
        self.assertEqual(presentation.relators, [])

    def test_b3_generators(self):
        presentation = steinberg(build('B', 3), b33_ring(self.f2))
        self.assertEqual(presentation.generators, 18)
        self.assertEqual(len(presentation.generators_of_kind('long')), 12)
        self.assertEqual(len(presentation.generators_of_kind('short')), 6)
        self.assertTrue(all(tag is not None for tag in presentation.tags))

    def test_b3_identification(self):
        ring = b33_ring(gf(3))
        presentation = steinberg(build('B', 3), ring)
        for p in ring.ring.nonzero:
            # x_12(p) = x_{-2,-1}(-p) since lambda = 1 and the involution is trivial
            first = presentation.generator_for(GenKey('long', (1, 2), p))
            second = presentation.generator_for(GenKey('long', (-2, -1), ring.ring.neg(p)))
            self.assertEqual(first, second)

    def test_f4_counts(self):
        presentation = steinberg(build('F', 4), f4_split_ring(self.f2))
        self.assertEqual(presentation.generators, 48)
        self.assertEqual(len(presentation.relators), 48 + 48 * 47 // 2 - 24)

    def test_kind_errors(self):
        with self.assertRaises(ValueError):
            steinberg(build('B', 3), self.f2)
        with self.assertRaises(ValueError):
            steinberg(build('F', 4), f4_split_ring(gf(3)))
        with self.assertRaises(ValueError):
            steinberg(build('C', 3), self.f2)
        with self.assertRaises(ValueError):
            steinberg(self.a3, b33_ring(self.f2))

    def test_exchange_symmetry(self):
        a3 = steinberg(self.a3, self.f2)
        d4 = steinberg(build('D', 4), self.f2)
        subsystem = [g for g in range(1, d4.generators + 1) if sum(d4.key_of(g).label) == 0]
        restricted = d4.restricted(subsystem)
        mapping = {k + 1: a3.generator_for(restricted.key_of(k + 1))[0] for k in range(restricted.generators)}
        renamed = restricted.map_generators(mapping, a3.names, a3.keys)
        self.assertEqual(renamed.relator_multiset(), a3.relator_multiset())


if __name__ == '__main__':
    unittest.main()
