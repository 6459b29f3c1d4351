import unittest

from rich.progress import Progress

from crepant_potential.models.report import Suite
from crepant_potential.services.verifier.verifier import Verifier
from crepant_potential.settings import Settings


class VerifierTest(unittest.TestCase):
    def test_chain_follows_canonical_order(self):
        verifier = Verifier([Suite.COROLLARY, Suite.DEGREE0], Settings())
        self.assertEqual(
            [Suite.DEGREE0, Suite.COROLLARY],
            [step.suite for step in verifier.root_step.all_steps]
        )

    def test_verify(self):
        context = Verifier([Suite.DEGREE0, Suite.COROLLARY], Settings()).verify()
        self.assertTrue(context.passed)
        self.assertEqual(['degree0', 'corollary'], [report.suite for report in context.reports])

    def test_verify_with_progress(self):
        with Progress(transient=True, disable=True) as progress:
            context = Verifier([Suite.RESIDUAL], Settings()).verify_with_progress(progress)
        self.assertTrue(context.passed)

    def test_nothing_selected(self):
        with self.assertRaises(ValueError):
            Verifier([], Settings())
