import os
import time
import unittest
import pandas as pd
from steinberg_schur import CaseRunner
from steinberg_schur.abelian import AbelianInvariants
from steinberg_schur.catalog import FORMULAS, FormulaOnlyCase, ModelCase, TCChainCase, TCTrivialCase, \
    TitsIndexEntry, additive_invariants, case_names, catalog_labels, make_case, predict, reproduce_tables, verify
from steinberg_schur.common.verification_case import VerificationCase, VerificationReport
from steinberg_schur.phirings import dual_numbers, gf, product_ring, zmod

SLOW = os.environ.get('STEINBERG_SLOW_TESTS') is not None


class TestCatalog(unittest.TestCase):
    def test_labels(self):
        labels = catalog_labels()
        self.assertEqual(len(labels), 20)
        self.assertEqual(labels[0], 'A33')
        for label in ['2A53', 'B33', 'C33', '1D44', '2D43', 'F044', '2E264', 'E7-28-3', 'E88']:
            self.assertIn(label, labels)
        for label in labels:
            self.assertIn(TitsIndexEntry(label).formula, FORMULAS)

    def test_entry(self):
        entry = TitsIndexEntry('2E264')
        self.assertEqual(entry.ambient, 'E6')
        self.assertEqual(entry.relative, 'F4')
        self.assertTrue(entry.etale)
        self.assertFalse(entry.is_verifiable)
        self.assertTrue(TitsIndexEntry('A33').is_verifiable)
        self.assertIsNone(TitsIndexEntry('E7-9-4').algebra(gf(2)))
        with self.assertRaises(ValueError):
            TitsIndexEntry('G22')

    def test_trivial_labels_are_formula_only(self):
        for label in catalog_labels():
            entry = TitsIndexEntry(label)
            if entry.formula == 'trivial':
                self.assertEqual(entry.verification, 'formula-only')

    def test_additive_invariants(self):
        self.assertEqual(additive_invariants(zmod(4)), AbelianInvariants([4]))
        self.assertEqual(additive_invariants(dual_numbers(gf(2))), AbelianInvariants([2, 2]))
        self.assertEqual(additive_invariants(gf(9)), AbelianInvariants([3, 3]))
        self.assertEqual(additive_invariants(product_ring([zmod(2), zmod(4)])), AbelianInvariants([2, 4]))
        self.assertEqual(additive_invariants(zmod(6)), AbelianInvariants([6]))
        self.assertEqual(additive_invariants(zmod(4), [0, 2]), AbelianInvariants([2]))


class TestPredict(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(predict('B33', gf(2)), AbelianInvariants([2]))
        self.assertEqual(predict('B33', gf(3)), AbelianInvariants([3]))
        self.assertEqual(predict('A33', dual_numbers(gf(2))), AbelianInvariants([2, 2]))
        self.assertEqual(predict('C33', zmod(4)), AbelianInvariants([2]))
        self.assertTrue(predict('A33', gf(3)).is_trivial)
        self.assertEqual(predict('2A53', gf(2), 'field'), AbelianInvariants([2, 2]))

    def test_table_values(self):
        self.assertEqual(predict('1D44', gf(2)), AbelianInvariants([2, 2]))
        self.assertEqual(predict('1D44', dual_numbers(gf(2))), AbelianInvariants([2, 2, 2]))
        self.assertEqual(predict('F044', gf(2)), AbelianInvariants([2]))
        self.assertEqual(predict('2E264', gf(2), 'field'), AbelianInvariants([2, 2]))
        self.assertEqual(predict('B33', dual_numbers(gf(2))), AbelianInvariants([2, 2]))

    def test_missing_etale(self):
        for label in ['2A53', '2D43', '2E264']:
            with self.assertRaises(ValueError):
                predict(label, gf(2))

    def test_not_a_ring(self):
        with self.assertRaises(TypeError):
            predict('A33', 'gf(2)')

    def test_split_specialization(self):
        for k in [gf(2), dual_numbers(gf(2)), gf(4)]:
            self.assertEqual(predict('2D43', k, 'split'), predict('1D44', k))
        self.assertTrue(predict('2D43', gf(2), 'field').is_trivial)
        self.assertTrue(predict('2A53', gf(2), 'split').is_trivial)

    def test_products(self):
        k, l = gf(2), dual_numbers(gf(2))
        self.assertEqual(predict('A33', product_ring([k, l])), predict('A33', k) + predict('A33', l))
        self.assertEqual(predict('B33', zmod(6)), AbelianInvariants([6]))

    def test_large_characteristic(self):
        for label in catalog_labels():
            etale = 'split' if TitsIndexEntry(label).etale else None
            self.assertTrue(predict(label, gf(5), etale).is_trivial, msg=label)


class TestCases(unittest.TestCase):
    def test_attributes(self):
        case = VerificationCase('a3-f2')
        self.assertEqual(case.label, 'A33')
        self.assertEqual(case.method, 'tc-trivial')
        self.assertEqual(case.expected, AbelianInvariants([2]))
        self.assertEqual(case.expected_order, 20160)
        self.assertEqual(case.max_cosets, case.settings.max_cosets)
        self.assertEqual(VerificationCase('b3-f2').max_cosets, 1000000)

    def test_registered(self):
        names = case_names()
        self.assertEqual(len(names), 12)
        self.assertIsInstance(make_case('a3-f2'), TCTrivialCase)
        self.assertIsInstance(make_case('b3-f2'), TCChainCase)
        self.assertIsInstance(make_case('d4-f2-model'), ModelCase)
        self.assertIsInstance(make_case('f4-f2'), FormulaOnlyCase)

    def test_unknown_case(self):
        with self.assertRaises(ValueError):
            VerificationCase('a3-f5')
        with self.assertRaises(ValueError):
            VerificationCase('a3-f2', budget=0)
        with self.assertRaises(TypeError):
            verify(VerificationCase('a3-f2'))

    def test_unlabelled_prediction(self):
        self.assertTrue(VerificationCase('a4-f2').prediction().is_trivial)

    def test_predictions_match_expected(self):
        for name in case_names():
            case = VerificationCase(name)
            self.assertEqual(case.prediction(), case.expected, msg=name)

    def test_report(self):
        report = VerificationReport('a3-f2', 'tc-trivial', 'pass', {'order': 20160}, ['note'])
        self.assertTrue(report.passed)
        self.assertEqual(report.lines(), ['case=a3-f2', 'method=tc-trivial', 'order=20160', 'status=pass', '# note'])
        with self.assertRaises(ValueError):
            VerificationReport('a3-f2', 'tc-trivial', 'unknown', {})

    def test_formula_only(self):
        report = verify('a3-f2eps')
        self.assertEqual(report.status, 'pass', msg=report.notes)
        self.assertEqual(report.numbers['predicted'], AbelianInvariants([2, 2]))
        self.assertTrue(report.numbers['uce_abelianization'].is_trivial)
        self.assertTrue(report.numbers['exact'])

    def test_model(self):
        report = verify('d4-f2-model')
        self.assertEqual(report.status, 'pass', msg=report.notes)
        self.assertEqual(report.numbers['model_order'], 2 ** 27)
        self.assertTrue(report.numbers['C_excluded'])

    def test_budget_exceeded(self):
        report = verify('a3-f2', budget=100)
        self.assertEqual(report.status, 'inconclusive', msg=report.notes)
        self.assertIsNone(report.numbers['order'])

    def test_formula_only_cache(self):
        case = make_case('a3-f2eps')
        key = case.extension_key
        FormulaOnlyCase.abelianizations.pop(key, None)
        self.assertEqual(case.run().status, 'pass')
        self.assertTrue(FormulaOnlyCase.abelianizations[key].is_trivial)
        FormulaOnlyCase.abelianizations[key] = AbelianInvariants([2])
        try:
            self.assertEqual(make_case('a3-f2eps').run().status, 'fail')
        finally:
            FormulaOnlyCase.abelianizations.pop(key)

    def test_chain_without_oracle(self):
        case = make_case('a4-f2')
        case.rank, case.expected_order, case.oracle = 3, 20160, None
        report = case.run()
        self.assertEqual(report.numbers['order'], 20160)
        self.assertNotEqual(report.status, 'pass')
        self.assertIn('no matrix oracle, the chain order is only an upper bound', report.notes)
        self.assertEqual(VerificationCase('c3-f2').oracle, 'orthogonal')
        self.assertEqual(VerificationCase('a4-f2').oracle, 'transvection')

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_a3_f2(self):
        start = time.perf_counter()
        report = verify('a3-f2')
        self.assertLess(time.perf_counter() - start, 60)
        self.assertEqual(report.status, 'pass', msg=report.notes)
        self.assertEqual(report.numbers['order'], 20160)
        self.assertEqual(report.numbers['uce_order'], 40320)
        self.assertEqual(report.numbers['ratio'], 2)
        self.assertEqual(report.numbers['oracle_order'], 20160)

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_b3_f2(self):
        report = verify('b3-f2')
        self.assertEqual(report.numbers['order'], 1451520)
        self.assertEqual(report.numbers['oracle_order'], 1451520)
        self.assertFalse(report.numbers['exact'])

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_formula_only_rows(self):
        for name in ['b3-f2eps', 'd4-f2eps', 'f4-f2', '2a5-f4', '2e6-f4']:
            with self.subTest(case=name):
                report = verify(name)
                self.assertEqual(report.status, 'pass', msg=report.notes)


class TestCaseRunner(unittest.TestCase):
    def test_validate(self):
        runner = CaseRunner()
        with self.assertWarns(UserWarning):
            self.assertEqual(runner.validate_case_names(['a3-f2', 'nope']), ['a3-f2'])

    def test_results(self):
        runner = CaseRunner()
        results = runner.get_results(cases=['a3-f2eps', 'a3-f2'], methods=['formula-only'])
        self.assertIsInstance(results, pd.DataFrame)
        self.assertEqual(list(results['Case']), ['a3-f2eps'])
        self.assertEqual(results.loc[0, 'Status'], 'pass')
        self.assertEqual(results.loc[0, 'Predicted'], '2,2;rank=0')
        self.assertIn('exact=True', results.loc[0, 'Numbers'])

    def test_jobs(self):
        with self.assertRaises(ValueError):
            CaseRunner().get_results(cases=['a3-f2eps'], jobs=0)

    def test_unknown_setting(self):
        with self.assertRaises(ValueError):
            CaseRunner(settings={'no_such_setting': 1})


class TestTables(unittest.TestCase):
    def test_rows(self):
        table, text = reproduce_tables()
        self.assertEqual(len(table), 11)
        self.assertEqual(list(table['Predicted']), list(table['Expected']))
        self.assertTrue((table['Status'] == 'not run').all())
        first = table.iloc[0]
        self.assertEqual((first['Group'], first['Ring'], first['Predicted'], first['Method']),
                         ('A3', '2', 'C2', 'tc-trivial'))
        row = table.loc[table['Case'] == '2e6-f4'].iloc[0]
        self.assertEqual((row['Predicted'], row['Method']), ('C2 x C2', 'formula-only'))
        row = table.loc[table['Case'] == 'd4-f2eps'].iloc[0]
        self.assertEqual(row['Predicted'], 'C2 x C2 x C2')
        self.assertIn('C2 x C2 x C2', text)

    def test_statuses(self):
        results = pd.DataFrame({'Case': ['a3-f2'], 'Status': ['pass']})
        table, _ = reproduce_tables(results=results)
        self.assertEqual(table.loc[table['Case'] == 'a3-f2', 'Status'].iloc[0], 'pass')
        self.assertEqual(table.loc[table['Case'] == 'f4-f2', 'Status'].iloc[0], 'not run')


if __name__ == '__main__':
    unittest.main()
