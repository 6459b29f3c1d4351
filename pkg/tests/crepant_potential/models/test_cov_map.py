import unittest
from fractions import Fraction

from crepant_potential.algebra.cyclotomic import I, ONE, ZETA, Cyclo
from crepant_potential.models.cov_map import (
    CovMap, CovMapError, ExponentialLine, LinearForm, ScalarLine, identity_map, pi_fraction
)


class LinearFormTest(unittest.TestCase):
    def test_arithmetic(self):
        a = LinearForm.of(x=1, y=I)
        b = LinearForm.of(pi_coeff=Fraction(1, 3), y=-I)
        self.assertEqual(LinearForm.of(pi_coeff=Fraction(1, 3), x=1), a + b)
        self.assertEqual(LinearForm.of(x=2, y=I.scale(2)), a.scale(2))
        self.assertTrue((a - a).is_zero())

    def test_constant_and_logs(self):
        form = LinearForm.log('q') + LinearForm.of(pi_coeff=Fraction(-1, 2), z=1)
        self.assertFalse(form.is_plain())
        self.assertEqual({'q', 'z'}, form.variables)
        self.assertEqual(Fraction(-1, 2), pi_fraction(form))
        self.assertTrue(form.without_constant().logs)
        with self.assertRaises(CovMapError):
            pi_fraction(LinearForm.of(pi_coeff=I))


class CovMapTest(unittest.TestCase):
    def test_exponential_phase_is_reduced(self):
        line = ExponentialLine(13, LinearForm.of(u=I))
        self.assertEqual(1, line.phase)
        self.assertEqual(ZETA, line.constant)
        with self.assertRaises(CovMapError):
            ExponentialLine(0, LinearForm.log('q'))

    def test_lines_must_match_variables(self):
        with self.assertRaises(CovMapError):
            CovMap(('a', 'b'), ('x',), {'a': LinearForm.of(x=1)})
        with self.assertRaises(CovMapError):
            CovMap(('a',), ('x',), {'a': LinearForm.of(y=1)})

    def test_accessors(self):
        m = CovMap(('a', 'q'), ('x', 'p'), {'a': LinearForm.of(x=2), 'q': ScalarLine(I, 'p')})
        self.assertEqual(['a'], m.cohomology_variables)
        self.assertEqual(['q'], m.quantum_variables)
        self.assertEqual([[Cyclo.of(2), Cyclo()]], m.linear_matrix())
        with self.assertRaises(CovMapError):
            m.linear('q')
        with self.assertRaises(CovMapError):
            m.quantum('a')
        self.assertEqual('scalar', m.to_json()['lines']['q']['kind'])

    def test_branch_is_not_compared(self):
        lines = {'a': LinearForm.of(x=ONE)}
        self.assertEqual(CovMap(('a',), ('x',), lines, branch=2), CovMap(('a',), ('x',), lines))
        self.assertEqual(CovMap(('a',), ('a',), {'a': LinearForm.of(a=1)}), identity_map(('a',)))
