import json
import shutil
import unittest
from pathlib import Path

from ..concerns import invoke, write_config


class VerifyCommandTest(unittest.TestCase):
    def test_degree0(self):
        result = invoke('--log-level', 'ERROR', 'verify', '--suite', 'degree0')
        self.assertEqual(0, result.exit_code, result.output)

        payload = json.loads(result.stdout)
        self.assertTrue(payload['pass'])
        self.assertEqual(['degree0'], [report['suite'] for report in payload['reports']])
        self.assertEqual({'key', 'pass', 'first_mismatch', 'reported', 'note'}, set(payload['reports'][0]['cases'][0]))

    def test_bracket(self):
        result = invoke('--log-level', 'ERROR', 'verify', '--suite', 'bracket', '--qmax', '4', '--zorder', '6')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertTrue(json.loads(result.stdout)['pass'])

    def test_several_suites(self):
        result = invoke('--log-level', 'ERROR', 'verify', '--suite', 'corollary', '--suite', 'residual')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertEqual(['residual', 'corollary'], [report['suite'] for report in json.loads(result.stdout)['reports']])

    def test_unknown_suite(self):
        self.assertEqual(2, invoke('verify', '--suite', 'nonsense').exit_code)


class VerifyConfigTest(unittest.TestCase):
    def setUp(self) -> None:
        self.base_path = Path(__file__).parent / 'out_config'
        self.base_path.mkdir(exist_ok=True)

    def test_suites_from_config(self):
        config_path = write_config(self.base_path, {'suites': ['corollary'], 'Processor': {'nb_worker': 2}})
        result = invoke('--log-level', 'ERROR', '--config', str(config_path), 'verify')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertEqual(['corollary'], [report['suite'] for report in json.loads(result.stdout)['reports']])

    def test_invalid_config(self):
        config_path = write_config(self.base_path, {'qmax': -2})
        self.assertEqual(2, invoke('--config', str(config_path), 'verify').exit_code)

        config_path.write_text('{not json', encoding='utf-8')
        self.assertEqual(2, invoke('--config', str(config_path), 'verify').exit_code)

    def test_log_file(self):
        log_path = self.base_path / 'log.txt'
        config_path = write_config(self.base_path, {'suites': ['degree0'], 'Logger': {'file_path': str(log_path)}})
        result = invoke('--config', str(config_path), 'verify')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertIn('suite degree0', log_path.read_text(encoding='utf-8'))

    def tearDown(self) -> None:
        shutil.rmtree(self.base_path)
