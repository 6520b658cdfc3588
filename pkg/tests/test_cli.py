import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from steinberg_schur.cli import main

SLOW = os.environ.get('STEINBERG_SLOW_TESTS') is not None


def run(argv):
    """
    Run the command line, returning the exit code and the printed lines.
    """
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue().splitlines(), err.getvalue()


class TestCli(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def test_relator_order_first(self):
        code, lines, _ = run(['rootsys', 'info', '--family', 'F', '--rank', '4'])
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], '# relator_order=steinberg-relators/1')
        self.assertIn('roots=48', lines)
        self.assertIn('positive=24', lines)

    def test_usage_errors(self):
        code, _, err = run(['nosuch'])
        self.assertEqual(code, 64)
        self.assertIn('usage', err)
        self.assertEqual(run(['tc', '--pres', os.path.join(self.directory.name, 'missing.txt')])[0], 64)
        self.assertEqual(run(['tc'])[0], 64)
        self.assertEqual(run(['verify'])[0], 64)
        self.assertEqual(run(['verify', '--case', 'a3-f5'])[0], 64)
        self.assertEqual(run(['verify', '--case', 'a3-f2', '--budget', '0'])[0], 64)

    def test_predict(self):
        code, lines, _ = run(['predict', '--index', 'B33', '--recipe', 'gf(3)'])
        self.assertEqual(code, 0)
        self.assertIn('multiplier=3;rank=0', lines)
        code, lines, _ = run(['predict', '--index', '2A53', '--recipe', 'gf(2)', '--etale', 'field'])
        self.assertIn('multiplier=2,2;rank=0', lines)
        self.assertEqual(run(['predict', '--index', '2A53', '--recipe', 'gf(2)'])[0], 64)

    def test_ring(self):
        path = os.path.join(self.directory.name, 'z4.txt')
        code, _, _ = run(['ring', 'make', '--recipe', 'zmod(4)', '--out', path])
        self.assertEqual(code, 0)
        code, lines, _ = run(['ring', 'check', '--ring', path, '--kind', 'r2'])
        self.assertEqual(code, 1)
        self.assertNotIn('violations=0', lines)
        code, lines, _ = run(['ring', 'check', '--ring', path, '--kind', 'commutative'])
        self.assertEqual(code, 0)
        self.assertIn('violations=0', lines)
        code, lines, _ = run(['ring', 'quotient', '--ring', path, '--variety', 'r2'])
        self.assertEqual(code, 0)
        self.assertIn('size_R=2', lines)

    def test_present_tc_abelianize(self):
        path = os.path.join(self.directory.name, 'a2.txt')
        code, lines, _ = run(['present', 'steinberg', '--family', 'A', '--rank', '2', '--recipe', 'gf(2)',
                              '--out', path])
        self.assertEqual(code, 0)
        self.assertIn('generators=6', lines)
        code, lines, _ = run(['tc', '--pres', path])
        self.assertEqual(code, 0)
        self.assertIn('status=complete', lines)
        self.assertIn('index=168', lines)
        code, lines, _ = run(['tc', '--pres', path, '--max-cosets', '10'])
        self.assertEqual(code, 2)
        self.assertIn('status=capped', lines)
        code, lines, _ = run(['abelianize', '--pres', path])
        self.assertIn('perfect=True', lines)

    def test_h2(self):
        code, lines, _ = run(['h2', '--builtin', 'A5', '--m', '2'])
        self.assertEqual(code, 0)
        self.assertIn('order=60', lines)
        self.assertIn('h2=2;rank=0', lines)

    def test_uce(self):
        code, lines, _ = run(['uce', '--family', 'A', '--rank', '3', '--recipe', 'gf(2)', '--perfect',
                              '--out', os.path.join(self.directory.name, 'uce.txt')])
        self.assertEqual(code, 0)
        self.assertIn('central=1', lines)
        self.assertIn('exact=True', lines)
        self.assertIn('uce_abelianization=1;rank=0', lines)
        code, lines, _ = run(['uce', '--family', 'D', '--rank', '4', '--recipe', 'gf(2)',
                              '--out', os.path.join(self.directory.name, 'd4.txt')])
        self.assertEqual(code, 0)
        self.assertIn('exact=False', lines)
        self.assertTrue(any(line.startswith('# warning:') for line in lines))

    def test_verify(self):
        code, lines, _ = run(['verify', '--case', 'a3-f2eps'])
        self.assertEqual(code, 0)
        self.assertIn('case=a3-f2eps', lines)
        self.assertIn('status=pass', lines)
        code, lines, _ = run(['verify', '--case', 'a3-f2', '--budget', '100'])
        self.assertEqual(code, 2)
        self.assertIn('status=inconclusive', lines)

    def test_tables(self):
        path = os.path.join(self.directory.name, 'tables.csv')
        code, lines, _ = run(['tables', '--out', path])
        self.assertEqual(code, 0)
        self.assertTrue(any('C2 x C2 x C2' in line for line in lines))
        self.assertTrue(os.path.exists(path))
        self.assertEqual(run(['tables'])[1], run(['tables'])[1])

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_verify_a3(self):
        code, lines, _ = run(['verify', '--case', 'a3-f2'])
        self.assertEqual(code, 0)
        self.assertIn('order=20160', lines)
        self.assertIn('uce_order=40320', lines)

    @unittest.skipUnless(SLOW, 'set STEINBERG_SLOW_TESTS to run')
    def test_d4model(self):
        code, lines, _ = run(['d4model', 'verify'])
        self.assertEqual(code, 0)
        self.assertIn(f'model_order={2 ** 27}', lines)
        self.assertIn('status=pass', lines)


if __name__ == '__main__':
    unittest.main()
