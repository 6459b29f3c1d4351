import unittest

from crepant_potential.models.report import Report, Suite


class SuiteTest(unittest.TestCase):
    def test_expand(self):
        self.assertEqual([Suite.DEGREE0, Suite.BRACKET], Suite.expand([Suite.BRACKET, Suite.DEGREE0]))
        expanded = Suite.expand([Suite.ALL, Suite.COV])
        self.assertNotIn(Suite.ALL, expanded)
        self.assertEqual(len(Suite) - 1, len(expanded))


class ReportTest(unittest.TestCase):
    def test_reported_cases_never_fail(self):
        report = Report(suite='degree0')
        report.add({'classes': '1,1,1'}, True)
        report.add({'classes': 'H,H,H'}, False, reported=True, note='sign')
        self.assertTrue(report.passed)

        report.add({'d': 2}, False, (0, 1, 2))
        self.assertFalse(report.passed)

    def test_json_schema(self):
        report = Report(suite='bracket')
        report.add({'d': 1, 'check': 'bracket'}, False, (1, 0, 2, 0))
        self.assertEqual({
            'suite': 'bracket',
            'cases': [{
                'key': {'d': 1, 'check': 'bracket'},
                'pass': False,
                'first_mismatch': [1, 0, 2, 0],
                'reported': False,
                'note': None
            }]
        }, report.to_json())
