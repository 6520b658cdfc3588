import unittest
from steinberg_schur.rootsys import RootSystem, build, parse_root_system, structure_constants


class TestRootSystems(unittest.TestCase):
    def setUp(self):
        self.root_counts = {('A', 3): 12, ('B', 3): 18, ('C', 3): 18, ('D', 4): 24, ('F', 4): 48, ('E', 6): 72}
        self.a3 = build('A', 3)
        self.b3 = build('B', 3)
        self.alpha = (1, -1, 0, 0)
        self.beta = (0, 1, -1, 0)

    def test_root_counts(self):
        for (family, rank), count in self.root_counts.items():
            rs = build(family, rank)
            self.assertEqual(len(rs.roots), count, msg=f'{family}{rank}')
            self.assertEqual(len(rs.positive_roots), count // 2)
            self.assertEqual(len(rs.base), rank)

    def test_invalid_input(self):
        with self.assertRaises(ValueError):
            RootSystem('G', 2)
        with self.assertRaises(ValueError):
            RootSystem('A', 0)
        with self.assertRaises(TypeError):
            RootSystem(3, 'A')

    def test_length_classes(self):
        self.assertEqual(self.b3.length_class((1, 0, 0)), 'short')
        self.assertEqual(self.b3.length_class((1, 1, 0)), 'long')
        f4 = build('F', 4)
        self.assertEqual(f4.length_class((2, 2, 0, 0)), 'long')
        self.assertEqual(f4.length_class((1, 1, 1, 1)), 'short')
        self.assertEqual(f4.length_class((0, 0, 2, 0)), 'short')

    def test_intervals(self):
        self.assertEqual(self.a3.interval(self.alpha, self.beta), ((1, 0, -1, 0),))
        self.assertEqual(self.b3.interval((1, -1, 0), (0, 1, 0)), ((1, 0, 0), (1, 1, 0)))
        self.assertEqual(self.a3.interval(self.alpha, (0, 0, 1, -1)), ())
        with self.assertRaises(ValueError):
            self.a3.interval(self.alpha, tuple(-x for x in self.alpha))

    def test_classify_subset(self):
        report = self.a3.classify_subset([self.alpha, self.beta, (1, 0, -1, 0)])
        self.assertTrue(report.is_unipotent)
        self.assertEqual(sorted(report.extreme_roots), sorted([self.a3.index_of(self.alpha),
                                                               self.a3.index_of(self.beta)]))
        report = self.a3.classify_subset([self.alpha, tuple(-x for x in self.alpha)])
        self.assertFalse(report.is_unipotent)

    def test_interval_brute_force(self):
        for family, rank in [('A', 3), ('B', 3), ('D', 4), ('F', 4)]:
            rs = build(family, rank)
            roots = set(rs.roots)
            for alpha in rs.roots:
                for beta in rs.roots:
                    if alpha == beta or alpha == tuple(-x for x in beta):
                        continue
                    # Coefficients a, b in {1/2, 1, ..., 3}
                    expected = set()
                    for i in range(1, 7):
                        for j in range(1, 7):
                            doubled = [i * a + j * b for a, b in zip(alpha, beta)]
                            if all(x % 2 == 0 for x in doubled) and tuple(x // 2 for x in doubled) in roots:
                                expected.add(tuple(x // 2 for x in doubled))
                    self.assertEqual(set(rs.interval(alpha, beta)), expected, msg=f'{family}{rank} {alpha} {beta}')

    def test_closed_cones_are_unipotent(self):
        for family, rank in [('A', 3), ('B', 3), ('D', 4), ('F', 4)]:
            rs = build(family, rank)
            alphas = rs.roots if family != 'F' else rs.roots[:1]
            for alpha in alphas:
                for beta in rs.roots:
                    if alpha == beta or alpha == tuple(-x for x in beta):
                        continue
                    cone = [alpha, beta] + list(rs.interval(alpha, beta))
                    report = rs.classify_subset(cone)
                    self.assertTrue(report.is_unipotent, msg=f'{family}{rank} {alpha} {beta}')
                    self.assertEqual(sorted(report.extreme_roots), sorted([rs.index_of(alpha), rs.index_of(beta)]))
                    opposite = tuple(-x for x in alpha)
                    self.assertFalse(rs.classify_subset(cone + [opposite]).is_unipotent)

    def test_weyl_orbits(self):
        f4 = build('F', 4)
        long_roots = [root for root in f4.roots if f4.length_class(root) == 'long']
        short_roots = [root for root in f4.roots if f4.length_class(root) == 'short']
        orbits = f4.weyl_orbits(long_roots, short_roots)
        self.assertEqual(sorted(len(orbit) for orbit in orbits), [8, 8, 8])
        d4 = build('D', 4)
        orbits = d4.weyl_orbits(d4.roots, d4.roots)
        self.assertEqual(len(orbits), 1)
        self.assertEqual(len(orbits[0]), 24)

    def test_serialize(self):
        for family, rank in [('A', 3), ('B', 3), ('F', 4)]:
            rs = build(family, rank)
            self.assertEqual(parse_root_system(rs.serialize()), rs)
        with self.assertRaises(ValueError):
            parse_root_system('A 3\n1 1 0 0\n')


class TestStructureConstants(unittest.TestCase):
    def test_sign_convention(self):
        n = structure_constants(build('A', 3))
        self.assertEqual(n((1, -1, 0, 0), (0, 1, -1, 0)), 1)
        self.assertEqual(n((0, 1, -1, 0), (1, -1, 0, 0)), -1)
        self.assertEqual(n((1, -1, 0, 0), (0, 0, 1, -1)), 0)

    def test_identities(self):
        for family, rank in [('A', 3), ('D', 4)]:
            n = structure_constants(build(family, rank))
            n.validate()
            self.assertTrue(all(value in (-1, 1) for value in n.table().values()))

    def test_not_simply_laced(self):
        with self.assertRaises(ValueError):
            structure_constants(build('B', 3))


if __name__ == '__main__':
    unittest.main()
