import json
import unittest

from ..concerns import invoke


class InvariantsCommandTest(unittest.TestCase):
    def test_degree0_triple(self):
        result = invoke('--log-level', 'ERROR', 'invariants', '--classes', '1,H,H')
        self.assertEqual(0, result.exit_code, result.output)
        payload = json.loads(result.stdout)
        self.assertEqual('-2/3', payload['display'])
        self.assertEqual(['1', 'H', 'H'], payload['classes'])

    def test_degree0_from_the_potential(self):
        by_classes = invoke('--log-level', 'ERROR', 'invariants', '--classes', 'H,H,H')
        by_counts = invoke('--log-level', 'ERROR', 'invariants', '--degree', '0', '--n1', '3')
        self.assertEqual(0, by_classes.exit_code, by_classes.output)
        self.assertEqual('-2/3*t1 - 4/3*t2', json.loads(by_classes.stdout)['display'])
        self.assertEqual(by_classes.stdout, by_counts.stdout)

    def test_first_degree(self):
        result = invoke('--log-level', 'ERROR', 'invariants', '--degree', '1', '--n1', '0', '--n2', '1')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertEqual('t1 + t2', json.loads(result.stdout)['display'])

    def test_degree_three(self):
        result = invoke('--log-level', 'ERROR', 'invariants', '--degree', '3', '--n2', '1')
        self.assertEqual(0, result.exit_code, result.output)
        self.assertEqual('-1/9*t1 - 1/9*t2', json.loads(result.stdout)['display'])

    def test_parity_violation(self):
        result = invoke('invariants', '--degree', '1', '--n2', '2')
        self.assertEqual(2, result.exit_code)

    def test_unknown_class(self):
        self.assertEqual(2, invoke('invariants', '--classes', '1,T').exit_code)
