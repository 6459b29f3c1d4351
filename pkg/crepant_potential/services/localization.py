"""Localization building blocks of the local P(1,2) invariants.

Positive degree: the single surviving fixed locus is assembled factor by factor
in the auxiliary weight s, as Laurent monomials with rational exponents, and
compared with the closed generating functions. Degree zero: two-point
fixed-point sums in the equivariant weights t1, t2.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Optional, Sequence

from ..algebra.mpseries import Series, VarSet
from ..algebra.ratfun import RAT_ONE, RAT_ZERO, Poly2, RatFun
from ..models.invariant_key import CohClass

logger = logging.getLogger(__name__)

HURWITZ_NUMBER = Fraction(1, 2)


class AssemblyInconsistencyError(ArithmeticError):
    pass


def double_factorial(n: int) -> int:
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class AuxMonomial:
    """coeff * s^degree in the auxiliary weight s."""
    coeff: Fraction
    degree: Fraction = Fraction(0)

    @classmethod
    def of(cls, coeff: 'Fraction | int', degree: 'Fraction | int' = 0) -> 'AuxMonomial':
        return cls(Fraction(coeff), Fraction(degree))

    def __mul__(self, other: 'AuxMonomial') -> 'AuxMonomial':
        return AuxMonomial(self.coeff * other.coeff, self.degree + other.degree)

    def __truediv__(self, other: 'AuxMonomial') -> 'AuxMonomial':
        if not other.coeff:
            raise ZeroDivisionError('division by a vanishing weight')
        return AuxMonomial(self.coeff / other.coeff, self.degree - other.degree)

    def __pow__(self, exponent: int) -> 'AuxMonomial':
        return AuxMonomial(self.coeff ** exponent, self.degree * exponent)

    def scale(self, factor: 'Fraction | int') -> 'AuxMonomial':
        return AuxMonomial(self.coeff * factor, self.degree)

    def __str__(self) -> str:
        return f'{self.coeff}*s^({self.degree})'


AUX_ONE = AuxMonomial.of(1)


def weight_product(weights: Sequence[Fraction]) -> AuxMonomial:
    """Product of the weights w*s, zero weights left out."""
    nonzero = [w for w in weights if w]
    return AuxMonomial(Fraction(math.prod(nonzero)) if nonzero else Fraction(1), Fraction(len(nonzero)))


@dataclass(frozen=True)
class PsiExpansion:
    coefficients: tuple[AuxMonomial, ...]

    @classmethod
    def node_smoothing(cls, d: int, a: Fraction, b: Fraction, cap: int) -> 'PsiExpansion':
        """-(s/d) * (a*s - b*psi)^-1 up to psi^cap."""
        return cls(tuple(
            AuxMonomial(-Fraction(1, d) / a * (b / a) ** k, Fraction(-k))
            for k in range(cap + 1)
        ))

    def coefficient(self, k: int) -> AuxMonomial:
        return self.coefficients[k]

    def top(self) -> AuxMonomial:
        return self.coefficients[-1]


@dataclass(frozen=True)
class WeightTable:
    """Weights (over 0, over infinity) of the lifted auxiliary action."""
    o_minus_one: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1))
    o_minus_half: tuple[Fraction, Fraction] = (Fraction(-1, 2), Fraction(0))
    tangent: tuple[Fraction, Fraction] = (Fraction(1, 2), Fraction(0))


class AssemblyReading(StrEnum):
    DISPLAYED = 'displayed'
    RECONCILED = 'reconciled'


@dataclass
class AssemblyOutcome:
    d: int
    g: int
    reading: AssemblyReading
    factors: dict[str, AuxMonomial]
    aux_degree: Fraction
    closed_form: Fraction
    assembled: Optional[Fraction] = None
    hurwitz: Optional[Fraction] = None

    @property
    def cancels(self) -> bool:
        return self.aux_degree == 0

    @property
    def matches(self) -> bool:
        return self.assembled is not None and self.assembled == self.closed_form

    @property
    def value(self) -> Fraction:
        return self.closed_form


def _product(factors: dict[str, AuxMonomial], denominators: set[str]) -> AuxMonomial:
    total = AUX_ONE
    for name, factor in factors.items():
        total = total / factor if name in denominators else total * factor
    return total


# closed forms

def odd_closed_form(d: int, g: int) -> Fraction:
    """I_{d,2g+1} read off (-1)^((d-1)/2) (2/d^3) sin(d z2/2)."""
    return _sign(g + (d - 1) // 2) * Fraction(d) ** (2 * g - 2) / 4 ** g


def even_closed_form(d: int, g: int) -> Fraction:
    """I_{d,2g+2} read off (-1)^(d/2) (2/d^3) cos(d z2/2); g = -1 is the invariant without insertion."""
    return _sign(d // 2 + g + 1) * Fraction(2, d ** 3) * Fraction(d, 2) ** (2 * g + 2)


def hurwitz_formula_odd(d: int, g: int) -> Fraction:
    """(-1)^(g+(d-1)/2) (d/2)^(2g-1) times the hyperelliptic Hurwitz number."""
    return _sign(g + (d - 1) // 2) * Fraction(d, 2) ** (2 * g - 1) * HURWITZ_NUMBER


def resummed_odd(d: int, order: int, varset: Optional[VarSet] = None) -> Series:
    if d % 2 == 0:
        raise ValueError(f'resummed_odd needs an odd degree, got {d}')
    varset = varset or VarSet.of(z2=order)
    argument = Series.var(varset, 'z2', Fraction(d, 2))
    return argument.sin().scale(_sign((d - 1) // 2) * Fraction(2, d ** 3))


def resummed_even(d: int, order: int, varset: Optional[VarSet] = None) -> Series:
    if d % 2 or d == 0:
        raise ValueError(f'resummed_even needs a positive even degree, got {d}')
    varset = varset or VarSet.of(z2=order)
    argument = Series.var(varset, 'z2', Fraction(d, 2))
    return argument.cos().scale(_sign(d // 2) * Fraction(2, d ** 3))


def invariant_from_resummed(series: Series, n: int) -> Fraction:
    coeff = series.coeff({'z2': n})
    return math.factorial(n) * coeff.constant_value().c0


# positive degree assembly

def _odd_factors(d: int, g: int, reading: AssemblyReading, weights: WeightTable) -> dict[str, AuxMonomial]:
    w = weights.tangent[0]
    half = Fraction(d - 1, 2)

    h1_half = AuxMonomial(double_factorial(d - 1) / Fraction(2 * d) ** half, half)
    if reading is AssemblyReading.DISPLAYED:
        h1_one = AuxMonomial(Fraction(math.factorial(2 * d - 2)) / (2 * d) ** (d - 1), Fraction(d - 1))
        h0_tangent = AuxMonomial(
            -Fraction(double_factorial(2 * d) * double_factorial(d - 1)) / Fraction(2 * d) ** Fraction(3 * d - 1, 2),
            Fraction(3 * d - 1, 2)
        )
        vertex = AuxMonomial(w ** (2 * g), Fraction(2 * g))
    else:
        h1_half = h1_half.scale(_sign((d - 1) // 2))
        h1_one = weight_product([Fraction(i, d) + weights.o_minus_one[0] for i in range(1, d)])
        h0_tangent = weight_product([w - Fraction(2 * i + 1, 2 * d) for i in range((3 * d - 1) // 2 + 1)])
        # Mumford: e(E^v(w) + E^v(-w)) = (-1)^g w^(2g)
        vertex = AuxMonomial(_sign(g) * w ** (2 * g), Fraction(2 * g))

    factors = {'h1_half': h1_half, 'h1_one': h1_one, 'h0_tangent': h0_tangent, 'vertex': vertex}
    if g == 0:
        factors['node'] = AuxMonomial(Fraction(-1, d), Fraction(1))
    else:
        node = PsiExpansion.node_smoothing(d, w / d, Fraction(1, 2), cap=2 * g - 1)
        factors['node'] = node.top().scale(HURWITZ_NUMBER)
    if reading is AssemblyReading.RECONCILED:
        factors['edge_automorphism'] = AuxMonomial.of(Fraction(1, d))
    return factors


def assemble_odd(
    d: int,
    g: int,
    reading: AssemblyReading = AssemblyReading.RECONCILED,
    weights: WeightTable = WeightTable()
) -> AssemblyOutcome:
    if d % 2 == 0 or d < 1 or g < 0:
        raise ValueError(f'odd assembly needs an odd degree and g >= 0, got d={d}, g={g}')

    factors = _odd_factors(d, g, reading, weights)
    total = _product(factors, denominators={'h0_tangent'})
    logger.debug('odd assembly d=%d g=%d (%s): %s', d, g, reading, total)

    if total.degree != 0:
        raise AssemblyInconsistencyError(f'auxiliary weight survives with degree {total.degree} at d={d}, g={g}')

    return AssemblyOutcome(
        d=d,
        g=g,
        reading=reading,
        factors=factors,
        aux_degree=total.degree,
        closed_form=odd_closed_form(d, g),
        assembled=total.coeff,
        hurwitz=hurwitz_formula_odd(d, g)
    )


def _even_factors(d: int, g: int, weights: WeightTable) -> dict[str, AuxMonomial]:
    w = weights.tangent[0]
    half = Fraction(d - 1, 2)
    factors = {
        'h1_half': AuxMonomial(double_factorial(d - 1) / Fraction(2 * d) ** half, half),
        'h1_one': AuxMonomial(Fraction(math.factorial(d - 1), d ** (d - 1)), Fraction(d - 1)),
        'h0_tangent': AuxMonomial(
            2 * Fraction(math.factorial(d) * double_factorial(d)) / (Fraction(2 * d) ** Fraction(d, 2) * d ** d),
            Fraction(3 * d, 2)
        ),
        'gluing': AuxMonomial.of(2)
    }
    if g == -1:
        factors['node'] = AuxMonomial(Fraction(-1, d), Fraction(1))
    else:
        factors['vertex'] = AuxMonomial(w ** (2 * g), Fraction(2 * g))
        factors['flag'] = AuxMonomial(w, Fraction(1))
        node = PsiExpansion.node_smoothing(d, 2 * w / d, Fraction(1), cap=2 * g)
        factors['node'] = node.top().scale(HURWITZ_NUMBER)
    return factors


def assemble_even(d: int, g: int, weights: WeightTable = WeightTable()) -> AssemblyOutcome:
    """Assemble the even-degree factors as displayed.

    They leave a residual auxiliary degree, so the value comes from the closed form and
    `assembled` is only filled when the auxiliary weight cancels.
    """
    if d % 2 or d < 2 or g < -1:
        raise ValueError(f'even assembly needs a positive even degree and g >= -1, got d={d}, g={g}')

    factors = _even_factors(d, g, weights)
    total = _product(factors, denominators={'h0_tangent'})
    logger.debug('even assembly d=%d g=%d: %s', d, g, total)

    return AssemblyOutcome(
        d=d,
        g=g,
        reading=AssemblyReading.DISPLAYED,
        factors=factors,
        aux_degree=total.degree,
        closed_form=even_closed_form(d, g),
        assembled=total.coeff if total.degree == 0 else None
    )


# degree zero

def _linear(a: 'Fraction | int', b: 'Fraction | int') -> RatFun:
    return RatFun(Poly2.monomial(1, 0, Fraction(a)) + Poly2.monomial(0, 1, Fraction(b)))


@dataclass(frozen=True)
class FixedPointWeights:
    """Tangent weights (base, fiber) and restrictions of H at the fixed points 0 and infinity."""
    tangent_zero: tuple[RatFun, RatFun] = field(default_factory=lambda: (_linear(Fraction(-1, 2), 1), _linear(Fraction(3, 2), 0)))
    tangent_infinity: tuple[RatFun, RatFun] = field(default_factory=lambda: (_linear(1, -2), _linear(0, 3)))
    h_restrictions: tuple[RatFun, RatFun] = field(default_factory=lambda: (_linear(-1, 0), _linear(0, -2)))
    orbifold_order_zero: int = 2
    twisted_pairing: Fraction = Fraction(1, 2)

    @property
    def euler_classes(self) -> tuple[RatFun, RatFun]:
        return self.tangent_zero[0] * self.tangent_zero[1], self.tangent_infinity[0] * self.tangent_infinity[1]


def _restriction(cls: CohClass, point: int, weights: FixedPointWeights) -> RatFun:
    return RAT_ONE if cls is CohClass.ONE else weights.h_restrictions[point]


def degree0_fixed_point_sum(classes: Sequence[CohClass], weights: Optional[FixedPointWeights] = None) -> RatFun:
    weights = weights or FixedPointWeights()
    twisted = sum(1 for cls in classes if cls is CohClass.S)
    untwisted = [cls for cls in classes if cls is not CohClass.S]

    if twisted % 2:
        return RAT_ZERO
    if twisted == 2:
        # the twisted sector is the stacky point over 0
        value = RatFun.constant(weights.twisted_pairing)
        for cls in untwisted:
            value = value * _restriction(cls, 0, weights)
        return value
    if twisted:
        raise ValueError('four or more twisted insertions are governed by the stacky series G')

    total = RAT_ZERO
    for point, (euler, automorphisms) in enumerate(zip(weights.euler_classes, (weights.orbifold_order_zero, 1))):
        numerator = RAT_ONE
        for cls in untwisted:
            numerator = numerator * _restriction(cls, point, weights)
        total = total + numerator.scale(Fraction(1, automorphisms)) / euler
    return total
