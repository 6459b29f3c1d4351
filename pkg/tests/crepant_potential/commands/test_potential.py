import json
import shutil
import unittest
from pathlib import Path

from ..concerns import invoke


class PotentialCommandTest(unittest.TestCase):
    def test_classical_terms_only(self):
        result = invoke('--log-level', 'ERROR', 'potential', '--qmax', '0', '--zorder', '3')
        self.assertEqual(0, result.exit_code, result.output)

        payload = json.loads(result.stdout)
        self.assertEqual(5, len(payload['sections']['classical']))
        self.assertEqual(payload['sections']['classical'], payload['terms'])
        self.assertEqual([], payload['sections']['stacky'])
        self.assertEqual([], payload['sections']['quantum'])
        self.assertEqual(
            {'exp': [3, 0, 0, 0], 'coeff': {'num': [[0, 0, ['1/18', '0', '0', '0']]], 'den': [[1, 1, ['1', '0', '0', '0']]]}},
            payload['sections']['classical'][-1]
        )

    def test_first_degree(self):
        result = invoke('--log-level', 'ERROR', 'potential', '--qmax', '1', '--zorder', '1', '--part', 'quantum')
        self.assertEqual(0, result.exit_code, result.output)

        payload = json.loads(result.stdout)
        t1_plus_t2 = {'num': [[1, 0, ['1', '0', '0', '0']], [0, 1, ['1', '0', '0', '0']]], 'den': [[0, 0, ['1', '0', '0', '0']]]}
        self.assertEqual(
            [{'exp': [0, 0, 1, 1], 'coeff': t1_plus_t2}, {'exp': [0, 1, 1, 1], 'coeff': t1_plus_t2}],
            payload['sections']['quantum']
        )

    def test_empty_truncation(self):
        result = invoke('--log-level', 'ERROR', 'potential', '--qmax', '0', '--zorder', '0')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertEqual([], json.loads(result.stdout)['sections']['quantum'])

    def test_deterministic_output(self):
        args = ('--log-level', 'ERROR', 'potential', '--qmax', '2', '--zorder', '4', '--extended', '--uorder', '2')
        first, second = invoke(*args), invoke(*args)
        self.assertEqual(0, first.exit_code, first.output)
        self.assertEqual(first.stdout, second.stdout)
        self.assertEqual(['z0', 'z1', 'z2', 'q', 'u'], json.loads(first.stdout)['vars'])

    def test_csv(self):
        result = invoke('--log-level', 'ERROR', 'potential', '--qmax', '0', '--zorder', '3', '--format', 'csv')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertEqual('part,z0,z1,z2,q,num,den', result.stdout.splitlines()[0])

    def test_bad_flags(self):
        self.assertEqual(2, invoke('potential', '--qmax', '-1').exit_code)
        self.assertEqual(2, invoke('potential', '--format', 'xml').exit_code)


class OutputFileTest(unittest.TestCase):
    def setUp(self) -> None:
        self.output_dir_path = Path(__file__).parent / 'out'
        self.output_dir_path.mkdir(exist_ok=True)

    def test_out(self):
        out_path = self.output_dir_path / 'potential.json'
        result = invoke('--log-level', 'ERROR', 'potential', '--qmax', '0', '--zorder', '3', '--out', str(out_path))
        self.assertEqual(0, result.exit_code, result.output)
        self.assertEqual('', result.stdout)
        self.assertEqual(5, len(json.loads(out_path.read_text(encoding='utf-8'))['sections']['classical']))

    def tearDown(self) -> None:
        shutil.rmtree(self.output_dir_path)
