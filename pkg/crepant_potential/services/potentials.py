"""Genus-0 equivariant potential of local P(1,2) and its invariants.

Variables: z0, z1, z2 dual to 1, H, S; q for the curve degree; u for the
extended (twisted) direction.
"""
import logging
import math
from enum import StrEnum
from fractions import Fraction
from typing import Optional

from ..algebra.mpseries import Series, SeriesError, VarSet
from ..algebra.ratfun import POLY_ONE, RAT_T1, RAT_T2, RAT_ZERO, Poly2, RatFun
from ..models.invariant_key import COH_CLASS_ORDER, CohClass, LocalInvariantKey, ParityError, canonical_classes
from .localization import even_closed_form, degree0_fixed_point_sum, odd_closed_form, resummed_even, resummed_odd

logger = logging.getLogger(__name__)

COHOMOLOGY_VARIABLES = ('z0', 'z1', 'z2')

T1_PLUS_T2 = RAT_T1 + RAT_T2

_ONE, _H, _S = CohClass.ONE, CohClass.H, CohClass.S

# degree-0 triple intersections as printed
PRINTED_TRIPLES: dict[tuple[CohClass, ...], RatFun] = {
    (_ONE, _ONE, _ONE): RatFun.normalized(POLY_ONE, Poly2.monomial(1, 1, 3)),
    (_ONE, _ONE, _H): RAT_ZERO,
    (_ONE, _H, _H): RatFun.constant(Fraction(-2, 3)),
    (_H, _H, _H): RatFun(Poly2.monomial(1, 0, Fraction(-2, 3)) + Poly2.monomial(0, 1, Fraction(-4, 3))),
    (_ONE, _S, _S): RatFun.constant(Fraction(1, 2)),
    (_H, _S, _S): RatFun(Poly2.monomial(1, 0, Fraction(-1, 2))),
}

# cubic terms of the potential, keyed by the exponents of (z0, z1, z2)
THEOREM_CUBIC_TERMS: dict[tuple[int, int, int], RatFun] = {
    (3, 0, 0): RatFun.normalized(POLY_ONE, Poly2.monomial(1, 1, 18)),
    (1, 2, 0): RatFun.constant(Fraction(-1, 3)),
    (1, 0, 2): RatFun.constant(Fraction(1, 4)),
    (0, 1, 2): RatFun(Poly2.monomial(1, 0, Fraction(-1, 4))),
    (0, 3, 0): RatFun(Poly2.monomial(1, 0, Fraction(-1, 9)) + Poly2.monomial(0, 1, Fraction(-2, 9))),
}


class Part(StrEnum):
    ALL = 'all'
    CLASSICAL = 'classical'
    STACKY = 'stacky'
    QUANTUM = 'quantum'


def classes_of_exponents(exponents: tuple[int, int, int]) -> tuple[CohClass, ...]:
    return tuple(cls for cls, k in zip(COH_CLASS_ORDER, exponents) for _ in range(k))


def exponents_of_classes(classes: tuple[CohClass, ...]) -> tuple[int, int, int]:
    return tuple(classes.count(cls) for cls in COH_CLASS_ORDER)  # type: ignore[return-value]


def symmetry_factor(exponents: tuple[int, ...]) -> int:
    return math.prod(math.factorial(k) for k in exponents)


def degree0_triple(a: CohClass, b: CohClass, c: CohClass) -> RatFun:
    return degree0_fixed_point_sum(canonical_classes([a, b, c]))


def potential_varset(qmax: int, zorder: int, uorder: Optional[int] = None) -> VarSet:
    caps = {'z0': zorder, 'z1': zorder, 'z2': zorder, 'q': qmax}
    if uorder is not None:
        caps['u'] = uorder
    return VarSet.of(**caps)


def classical_part(varset: VarSet) -> Series:
    total = Series.zero(varset)
    for exponents, coeff in THEOREM_CUBIC_TERMS.items():
        total = total + Series.monomial(varset, dict(zip(COHOMOLOGY_VARIABLES, exponents)), coeff)
    return total


def g_series(order: int, variable: str = 'z2') -> Series:
    """G with G''' = tan(z2/2)/2 and G(0) = G'(0) = G''(0) = 0."""
    varset = VarSet.of(**{variable: order})
    g = Series.var(varset, variable, Fraction(1, 2)).tan().scale(Fraction(1, 2))
    for _ in range(3):
        g = g.integrate(variable)
    return g


def stacky_degree0(varset: VarSet) -> Series:
    return (-g_series(varset.cap('z2'))).scale(T1_PLUS_T2).recast(varset)


def local_invariant(d: int, n: int) -> Fraction:
    """I_{d,n} for d >= 1, read off the closed generating functions."""
    key = LocalInvariantKey(d, n)
    return odd_closed_form(d, key.g) if d % 2 else even_closed_form(d, key.g)


def quantum_term(d: int, varset: VarSet) -> Series:
    """(t1+t2) * I_d(z2) * e^(d z1) * q^d"""
    q_power = Series.monomial(varset, {'q': d})
    if q_power.is_zero():
        return q_power
    order = varset.cap('z2')
    resummed = resummed_odd(d, order, varset) if d % 2 else resummed_even(d, order, varset)
    return resummed * Series.var(varset, 'z1', d).exp() * q_power.scale(T1_PLUS_T2)


def quantum_part(varset: VarSet) -> Series:
    total = Series.zero(varset)
    for d in range(1, varset.cap('q') + 1):
        total = total + quantum_term(d, varset)
    return total


PART_BUILDERS = {
    Part.CLASSICAL: classical_part,
    Part.STACKY: stacky_degree0,
    Part.QUANTUM: quantum_part,
}


def potential_sections(
    qmax: int,
    zorder: int,
    part: Part = Part.ALL,
    *,
    uorder: Optional[int] = None
) -> dict[Part, Series]:
    """Selected parts truncated at q^qmax and z^zorder, extended in u when `uorder` is given."""
    part = Part(part)
    varset = potential_varset(qmax, zorder).with_caps(z2=zorder + (uorder or 0))
    selected = list(PART_BUILDERS) if part is Part.ALL else [part]

    sections: dict[Part, Series] = {}
    for name in selected:
        section = PART_BUILDERS[name](varset)
        sections[name] = extended(section, uorder) if uorder is not None else section
        logger.debug('%s part at qmax=%d zorder=%d: %d terms', name, qmax, zorder, len(section.terms))
    return sections


def potential(
    qmax: int,
    zorder: int,
    part: Part = Part.ALL,
    *,
    uorder: Optional[int] = None
) -> Series:
    sections = list(potential_sections(qmax, zorder, part, uorder=uorder).values())
    total = sections[0]
    for section in sections[1:]:
        total = total + section
    return total


def extended(f: Series, uorder: int) -> Series:
    """Substitute z2 -> z2 + u; the z2 cap of the result is the input cap minus `uorder`."""
    if 'u' in f.varset:
        raise SeriesError('the series already depends on u')
    zcap = f.varset.cap('z2') - uorder
    if zcap < 0:
        raise SeriesError(f'z2 cap {f.varset.cap("z2")} leaves no room for u order {uorder}')
    target = f.varset.with_caps(z2=zcap).extend(u=uorder)
    shifted = Series.var(target, 'z2') + Series.var(target, 'u')
    return f.substitute({'z2': shifted}, target)


def degree0_invariant(classes: list[CohClass]) -> RatFun:
    """<c1 ... cn>_0 read off the degree-0 part of the potential."""
    exponents = exponents_of_classes(canonical_classes(classes))
    if exponents[2] % 2:
        raise ParityError(f'{exponents[2]} twisted insertions are not allowed in degree 0')
    if len(classes) < 3:
        raise ValueError(f'degree 0 needs at least three insertions, got {len(classes)}')
    varset = potential_varset(0, max(*exponents, 3))
    degree0 = classical_part(varset) + stacky_degree0(varset)
    return degree0.coeff(dict(zip(COHOMOLOGY_VARIABLES, exponents))).scale(symmetry_factor(exponents))


def gw_invariant(n1: int, n2: int, d: int) -> RatFun:
    """<H^n1 S^n2>_d."""
    if d >= 1:
        return T1_PLUS_T2.scale(d ** n1 * local_invariant(d, n2))
    return degree0_invariant(list(classes_of_exponents((0, n1, n2))))


def invariant_of_classes(d: int, classes: list[CohClass]) -> RatFun:
    """<c1 ... cn>_d for arbitrary insertions of 1, H and S."""
    if d == 0:
        return degree0_invariant(classes)
    # string equation: 1 only pairs nontrivially in degree 0
    if CohClass.ONE in classes:
        return RAT_ZERO
    return gw_invariant(classes.count(CohClass.H), classes.count(CohClass.S), d)
