import unittest

from crepant_potential.models.invariant_key import (
    CohClass, LocalInvariantKey, ParityError, canonical_classes
)


class LocalInvariantKeyTest(unittest.TestCase):
    def test_genus(self):
        self.assertEqual(0, LocalInvariantKey(1, 1).g)
        self.assertEqual(2, LocalInvariantKey(3, 5).g)
        self.assertEqual(-1, LocalInvariantKey(2, 0).g)
        self.assertEqual(1, LocalInvariantKey(4, 4).g)

    def test_from_genus(self):
        self.assertEqual(LocalInvariantKey(5, 7), LocalInvariantKey.from_genus(5, 3))
        self.assertEqual(LocalInvariantKey(2, 0), LocalInvariantKey.from_genus(2, -1))

    def test_parity(self):
        with self.assertRaises(ParityError):
            LocalInvariantKey(1, 2)
        with self.assertRaises(ParityError):
            LocalInvariantKey(2, 3)
        with self.assertRaises(ValueError):
            LocalInvariantKey(-1, 1)


class CohClassTest(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(CohClass.H, CohClass.parse(' h'))
        self.assertEqual(CohClass.ONE, CohClass.parse('1'))
        with self.assertRaises(ValueError):
            CohClass.parse('T')

    def test_canonical_order(self):
        self.assertEqual(
            (CohClass.ONE, CohClass.H, CohClass.S),
            canonical_classes([CohClass.S, CohClass.ONE, CohClass.H])
        )
        self.assertEqual('z2', CohClass.S.variable)
