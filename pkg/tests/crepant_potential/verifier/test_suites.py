import unittest

from crepant_potential.models.report import Report, Suite
from crepant_potential.services.verifier.suites import (
    ALL_TRIPLES, REGISTERED_SUITE_STEPS, distribute_degrees, run_degree_slices
)
from crepant_potential.services.verifier.steps import VerificationContext
from crepant_potential.settings import ProcessorSettings, Settings


def drain(generator):
    progress = []
    try:
        while True:
            progress.append(next(generator))
    except StopIteration as e:
        return progress, e.value


def run_suite(suite: Suite, config: Settings) -> Report:
    context = VerificationContext(config=config)
    step_class, cost = REGISTERED_SUITE_STEPS[suite]
    for _ in step_class(context=context, description=suite, cost=cost).handle():
        pass
    return context.reports[0]


class DegreeSlicesTest(unittest.TestCase):
    def test_distribute_degrees(self):
        groups = distribute_degrees(list(range(1, 9)), 3)
        self.assertEqual(list(range(1, 9)), sorted(d for group in groups for d in group))
        self.assertLessEqual(len(groups), 3)
        self.assertEqual([], distribute_degrees([], 2))

    def test_cases_come_back_in_degree_order(self):
        def check(degrees: list[int]) -> Report:
            report = Report(suite='test')
            for d in degrees:
                report.add({'d': d}, True)
            return report

        progress, cases = drain(run_degree_slices(check, [1, 2, 3, 4, 5], 2))
        self.assertEqual([1, 2, 3, 4, 5], [case.key['d'] for case in cases])
        self.assertEqual(1.0, progress[-1])


class SuiteStepsTest(unittest.TestCase):
    def setUp(self) -> None:
        self.config = Settings(qmax=2, zorder=4, uorder=2, Processor=ProcessorSettings(nb_worker=2))

    def test_every_suite_is_registered(self):
        self.assertEqual(set(Suite) - {Suite.ALL}, set(REGISTERED_SUITE_STEPS))

    def test_degree0(self):
        report = run_suite(Suite.DEGREE0, self.config)
        self.assertTrue(report.passed)
        reported = [case for case in report.cases if case.reported]
        self.assertEqual([{'classes': 'H,H,H'}], [case.key for case in reported])
        self.assertFalse(reported[0].passed)
        self.assertEqual(10, len(ALL_TRIPLES))

    def test_resummation(self):
        report = run_suite(Suite.RESUMMATION, self.config)
        self.assertTrue(report.passed)
        hurwitz = [case for case in report.cases if case.key.get('check') == 'hurwitz_formula']
        self.assertTrue(all(case.reported for case in hurwitz))
        self.assertTrue(any(not case.passed for case in hurwitz))

    def test_assembly(self):
        report = run_suite(Suite.ASSEMBLY, self.config)
        self.assertTrue(report.passed)
        reconciled = [case for case in report.cases if case.key['reading'] == 'reconciled']
        self.assertTrue(reconciled)
        self.assertTrue(all(case.passed and not case.reported for case in reconciled))

    def test_theorem(self):
        report = run_suite(Suite.THEOREM, self.config)
        self.assertTrue(report.passed)
        checks = {case.key['check'] for case in report.cases}
        self.assertEqual({'triple', 'divisor', 'invariant', 'parity', 'extended_at_u0'}, checks)

    def test_identities(self):
        for suite in (Suite.BRACKET, Suite.RESIDUAL, Suite.COROLLARY, Suite.COV):
            with self.subTest(suite=suite):
                report = run_suite(suite, self.config)
                self.assertEqual(suite, report.suite)
                self.assertTrue(report.passed)
