import math
import unittest
from fractions import Fraction

from crepant_potential.algebra.mpseries import Series
from crepant_potential.algebra.ratfun import POLY_ONE, RAT_ZERO, Poly2, RatFun
from crepant_potential.models.invariant_key import CohClass, ParityError
from crepant_potential.services.potentials import (
    PRINTED_TRIPLES, T1_PLUS_T2, THEOREM_CUBIC_TERMS, Part, classical_part, degree0_triple, extended,
    g_series, gw_invariant, invariant_of_classes, local_invariant, potential, potential_sections,
    potential_varset, quantum_part, stacky_degree0, symmetry_factor
)

ONE, H, S = CohClass.ONE, CohClass.H, CohClass.S


class ClassicalPartTest(unittest.TestCase):
    def test_five_cubic_terms(self):
        f = classical_part(potential_varset(0, 3))
        self.assertEqual(5, len(f.terms))
        self.assertEqual(RatFun.normalized(POLY_ONE, Poly2.monomial(1, 1, 18)), f.coeff({'z0': 3}))
        self.assertEqual(RatFun.constant(Fraction(-1, 3)), f.coeff({'z0': 1, 'z1': 2}))

    def test_cubic_terms_are_triples_over_symmetry_factor(self):
        for exponents, coeff in THEOREM_CUBIC_TERMS.items():
            classes = tuple(cls for cls, k in zip((ONE, H, S), exponents) for _ in range(k))
            self.assertEqual(PRINTED_TRIPLES[classes], coeff.scale(symmetry_factor(exponents)))

    def test_degree0_triples(self):
        self.assertEqual(RatFun.constant(Fraction(-2, 3)), degree0_triple(H, ONE, H))
        self.assertEqual(RatFun.constant(Fraction(1, 2)), degree0_triple(S, ONE, S))
        self.assertEqual(RAT_ZERO, degree0_triple(H, H, S))


class StackyPartTest(unittest.TestCase):
    def test_g_series(self):
        g = g_series(8)
        for k in range(4):
            self.assertTrue(g.coeff({'z2': k}).is_zero())
        self.assertEqual(RatFun.constant(Fraction(1, 96)), g.coeff({'z2': 4}))
        self.assertEqual(RatFun.constant(Fraction(1, 5760)), g.coeff({'z2': 6}))
        self.assertTrue(g.coeff({'z2': 5}).is_zero())

    def test_third_derivative_is_half_tangent(self):
        g = g_series(9)
        third = g.differentiate('z2').differentiate('z2').differentiate('z2')
        half_tan = Series.var(g.varset, 'z2', Fraction(1, 2)).tan().scale(Fraction(1, 2))
        self.assertEqual(half_tan.recast(g.varset.with_caps(z2=6)), third.recast(g.varset.with_caps(z2=6)))

    def test_stacky_degree0(self):
        f = stacky_degree0(potential_varset(0, 4))
        self.assertEqual(T1_PLUS_T2.scale(Fraction(-1, 96)), f.coeff({'z2': 4}))
        self.assertTrue(stacky_degree0(potential_varset(0, 3)).is_zero())


class QuantumPartTest(unittest.TestCase):
    def test_local_invariants(self):
        self.assertEqual(1, local_invariant(1, 1))
        self.assertEqual(Fraction(-1, 9), local_invariant(3, 1))
        self.assertEqual(Fraction(-1, 4), local_invariant(1, 3))
        with self.assertRaises(ParityError):
            local_invariant(1, 2)

    def test_first_degree(self):
        f = quantum_part(potential_varset(1, 1))
        self.assertEqual(T1_PLUS_T2, f.coeff({'q': 1, 'z2': 1}))
        self.assertEqual(T1_PLUS_T2, f.coeff({'q': 1, 'z1': 1, 'z2': 1}))
        self.assertEqual(2, len(f.terms))

    def test_parity(self):
        f = quantum_part(potential_varset(4, 5))
        q, z2 = f.varset.index('q'), f.varset.index('z2')
        self.assertTrue(f.terms)
        self.assertTrue(all(e[z2] % 2 == e[q] % 2 for e in f.terms))

    def test_divisor_equation(self):
        varset = potential_varset(3, 4)
        f = quantum_part(varset)
        lowered = varset.with_caps(z1=3)
        for d in range(1, 4):
            slice_d = f.restrict(q=d)
            self.assertEqual(slice_d.scale(d).recast(lowered), slice_d.differentiate('z1').recast(lowered))

    def test_gw_invariant(self):
        self.assertEqual(T1_PLUS_T2, gw_invariant(0, 1, 1))
        self.assertEqual(T1_PLUS_T2.scale(Fraction(9, 4)), gw_invariant(2, 3, 3))
        self.assertEqual(T1_PLUS_T2.scale(Fraction(-1, 4)), gw_invariant(0, 4, 0))
        with self.assertRaises(ParityError):
            gw_invariant(0, 3, 0)

    def test_gw_invariant_matches_coefficients(self):
        f = quantum_part(potential_varset(3, 5))
        for d in range(1, 4):
            for n1 in range(3):
                for n2 in range(d % 2, 6, 2):
                    coeff = f.coeff({'q': d, 'z1': n1, 'z2': n2}).scale(math.factorial(n1) * math.factorial(n2))
                    self.assertEqual(gw_invariant(n1, n2, d), coeff, (d, n1, n2))

    def test_invariant_of_classes(self):
        self.assertEqual(RatFun.constant(Fraction(-2, 3)), invariant_of_classes(0, [ONE, H, H]))
        self.assertEqual(T1_PLUS_T2, invariant_of_classes(1, [S]))
        self.assertEqual(RAT_ZERO, invariant_of_classes(1, [ONE, S]))
        self.assertEqual(gw_invariant(1, 4, 2), invariant_of_classes(2, [S, H, S, S, S]))
        with self.assertRaises(ValueError):
            invariant_of_classes(0, [H, H])

    def test_degree0_invariants_follow_the_potential(self):
        for classes, printed in PRINTED_TRIPLES.items():
            self.assertEqual(printed, invariant_of_classes(0, list(classes)), classes)
        self.assertEqual(gw_invariant(3, 0, 0), invariant_of_classes(0, [H, H, H]))
        self.assertEqual(gw_invariant(0, 4, 0), invariant_of_classes(0, [S, S, S, S]))
        self.assertEqual(RAT_ZERO, invariant_of_classes(0, [ONE, ONE, H, H]))
        with self.assertRaises(ParityError):
            invariant_of_classes(0, [ONE, H, S])


class PotentialTest(unittest.TestCase):
    def test_sections(self):
        sections = potential_sections(0, 0)
        self.assertEqual([Part.CLASSICAL, Part.STACKY, Part.QUANTUM], list(sections))
        self.assertTrue(all(section.is_zero() for section in sections.values()))
        self.assertEqual([Part.QUANTUM], list(potential_sections(2, 3, Part.QUANTUM)))

    def test_potential_is_sum_of_parts(self):
        varset = potential_varset(2, 4)
        expected = classical_part(varset) + stacky_degree0(varset) + quantum_part(varset)
        self.assertEqual(expected, potential(2, 4))

    def test_extended_at_zero(self):
        varset = potential_varset(2, 6)
        f = classical_part(varset) + stacky_degree0(varset) + quantum_part(varset)
        ext = extended(f, 2)
        self.assertEqual(('z0', 'z1', 'z2', 'q', 'u'), ext.varset.names)
        self.assertEqual(f.recast(ext.varset), ext.restrict(u=0))

    def test_extended_shift(self):
        ext = potential(0, 4, Part.STACKY, uorder=2)
        # -(t1+t2) (z2+u)^4 / 96
        self.assertEqual(T1_PLUS_T2.scale(Fraction(-6, 96)), ext.coeff({'z2': 2, 'u': 2}))
        self.assertEqual(potential_varset(0, 4, 2), ext.varset)
