"""Floating point recomputation of the exact results with mpmath."""
import itertools
import logging
from fractions import Fraction
from typing import Iterator

from mpmath import almosteq, cos, diff, exp, factorial, mp, mpc, mpf, pi, polylog, sin, sqrt, tan, taylor

from ...algebra.cyclotomic import Cyclo
from ...algebra.mpseries import VarSet
from ...models.invariant_key import CohClass
from ...models.report import Report
from ..localization import even_closed_form, odd_closed_form, resummed_even, resummed_odd
from ..pcrc import build_cov, build_covbgp, compose, constant_phase, invert
from ..potentials import PRINTED_TRIPLES, degree0_triple, g_series, gw_invariant, invariant_of_classes, quantum_term

logger = logging.getLogger(__name__)

REL_EPS = 1e-10
ABS_EPS = 1e-12
WORKING_DPS = 30

WEIGHT_SAMPLES = [(3, 5), (2, -7), (Fraction(1, 3), Fraction(5, 4))]
THETA_SAMPLES = ['0.3', '1.1', '-0.7']
# small enough for the truncated series to agree within tolerance
SERIES_SAMPLE = '0.05'
BRACKET_SAMPLES = [('0.03', '0.02'), ('-0.04', '0.05'), ('0.01', '-0.03')]


def _mp(value: 'Fraction | Cyclo | complex') -> mpc:
    if isinstance(value, Fraction):
        return mpc(mpf(value.numerator) / value.denominator)
    if isinstance(value, Cyclo):
        value = value.embed()
    return mpc(value.real, value.imag)


def close(exact: 'Fraction | Cyclo | complex', reference) -> bool:
    return bool(almosteq(_mp(exact), reference, rel_eps=REL_EPS, abs_eps=ABS_EPS))


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def check_closed_forms(report: Report, max_degree: int, max_genus: int) -> None:
    for d in range(1, max_degree + 1):
        if d % 2:
            top = 2 * max_genus + 1
            coeffs = taylor(lambda z: _sign((d - 1) // 2) * mpf(2) / d ** 3 * sin(d * z / 2), 0, top)
            keys = [(g, 2 * g + 1, odd_closed_form(d, g)) for g in range(max_genus + 1)]
        else:
            top = 2 * max_genus + 2
            coeffs = taylor(lambda z: _sign(d // 2) * mpf(2) / d ** 3 * cos(d * z / 2), 0, top)
            keys = [(g, 2 * g + 2, even_closed_form(d, g)) for g in range(-1, max_genus + 1)]
        for g, n, exact in keys:
            report.add({'check': 'closed_form', 'd': d, 'g': g}, close(exact, coeffs[n] * factorial(n)))


def check_g_series(report: Report, order: int) -> None:
    g = g_series(order)
    half_tan = taylor(lambda z: tan(z / 2) / 2, 0, max(order - 3, 0))
    for k in range(4, order + 1):
        reference = half_tan[k - 3] / (k * (k - 1) * (k - 2))
        exact = g.coeff({'z2': k}).constant_value().c0
        report.add({'check': 'G', 'n': k}, close(exact, reference))


def _fixed_point_sum(classes: tuple[CohClass, ...], t1: mpf, t2: mpf) -> mpf:
    euler_zero = (3 * t1 / 2) * (t2 - t1 / 2)
    euler_infinity = 3 * t2 * (t1 - 2 * t2)
    restrictions = {CohClass.ONE: (mpf(1), mpf(1)), CohClass.H: (-t1, -2 * t2)}

    twisted = classes.count(CohClass.S)
    if twisted % 2:
        return mpf(0)
    value_zero, value_infinity = mpf(1), mpf(1)
    for cls in classes:
        if cls is not CohClass.S:
            value_zero *= restrictions[cls][0]
            value_infinity *= restrictions[cls][1]
    if twisted:
        return value_zero / 2
    return value_zero / (2 * euler_zero) + value_infinity / euler_infinity


def _mpf(value: 'Fraction | int') -> mpf:
    value = Fraction(value)
    return mpf(value.numerator) / value.denominator


def check_degree0(report: Report) -> None:
    for classes in PRINTED_TRIPLES:
        for t1, t2 in WEIGHT_SAMPLES:
            exact = degree0_triple(*classes).eval(t1, t2)
            report.add(
                {'check': 'degree0', 'classes': ','.join(classes), 't1': str(t1), 't2': str(t2)},
                close(exact, _fixed_point_sum(classes, _mpf(t1), _mpf(t2)))
            )


def _closed_form(d: int):
    """The resummed invariants of degree d as an mpmath function of z2."""
    if d % 2:
        return lambda z: _sign((d - 1) // 2) * mpf(2) / d ** 3 * sin(d * z / 2)
    return lambda z: _sign(d // 2) * mpf(2) / d ** 3 * cos(d * z / 2)


def check_theorem(report: Report, max_degree: int, order: int) -> None:
    """Classical triples, extracted invariants and the divisor property at sample weights."""
    printed = {
        (CohClass.ONE, CohClass.ONE, CohClass.ONE): lambda t1, t2: 1 / (3 * t1 * t2),
        (CohClass.ONE, CohClass.ONE, CohClass.H): lambda t1, t2: mpf(0),
        (CohClass.ONE, CohClass.H, CohClass.H): lambda t1, t2: mpf(-2) / 3,
        (CohClass.H, CohClass.H, CohClass.H): lambda t1, t2: -2 * (t1 + 2 * t2) / 3,
        (CohClass.ONE, CohClass.S, CohClass.S): lambda t1, t2: mpf(1) / 2,
        (CohClass.H, CohClass.S, CohClass.S): lambda t1, t2: -t1 / 2,
    }
    for classes, reference in printed.items():
        for t1, t2 in WEIGHT_SAMPLES:
            exact = invariant_of_classes(0, list(classes)).eval(t1, t2)
            report.add(
                {'check': 'triple', 'classes': ','.join(classes), 't1': str(t1), 't2': str(t2)},
                close(exact, reference(_mpf(t1), _mpf(t2)))
            )

    t1, t2 = WEIGHT_SAMPLES[0]
    weight = _mpf(t1) + _mpf(t2)
    sample = mpf(SERIES_SAMPLE)
    varset = VarSet.of(z1=order, z2=order, q=max_degree)
    for d in range(1, max_degree + 1):
        closed = _closed_form(d)
        coeffs = taylor(closed, 0, 5)
        for n1, n2 in itertools.product(range(3), range(d % 2, 6, 2)):
            report.add(
                {'check': 'invariant', 'd': d, 'n1': n1, 'n2': n2},
                close(gw_invariant(n1, n2, d).eval(t1, t2), weight * d ** n1 * coeffs[n2] * factorial(n2))
            )

        derivative = quantum_term(d, varset).differentiate('z1')
        value = derivative.evaluate(t1, t2, {'z1': float(SERIES_SAMPLE), 'z2': float(SERIES_SAMPLE), 'q': 1.0})
        report.add({'check': 'divisor', 'd': d}, close(value, d * weight * closed(sample) * exp(d * sample)))


def check_bracket(report: Report, max_degree: int, order: int) -> None:
    """Both sides of the bracket identity at sample (z2, u), and against the exact resummed series."""
    for d in range(1, max_degree + 1):
        closed = _closed_form(d)
        exact_series = resummed_odd(d, order) if d % 2 else resummed_even(d, order)
        for raw_z2, raw_u in BRACKET_SAMPLES:
            theta = mpf(raw_z2) + mpf(raw_u)
            bracket = mp.j ** d / 2 * (exp(-mp.j * d * theta / 2) + _sign(d) * exp(mp.j * d * theta / 2))
            exact = exact_series.evaluate(1, 1, {'z2': complex(theta)})
            report.add(
                {'check': 'bracket', 'd': d, 'z2': raw_z2, 'u': raw_u},
                bool(almosteq(2 * bracket / d ** 3, closed(theta), rel_eps=REL_EPS, abs_eps=ABS_EPS))
                and close(exact, 2 * bracket / d ** 3)
            )


def check_residual(report: Report, order: int) -> None:
    """Third derivative of Li3(-e^(i theta)) against both closed sides and the exact series."""
    third = -g_series(order + 3, 'theta')
    for _ in range(3):
        third = third.differentiate('theta')

    for raw in THETA_SAMPLES:
        theta = mpf(raw)
        reference = diff(lambda x: polylog(3, -exp(mp.j * x)), theta, 3)
        closed = mp.j * exp(mp.j * theta) / (1 + exp(mp.j * theta))
        tangent_side = -tan(theta / 2) / 2 + mp.j / 2
        report.add(
            {'check': 'residual', 'theta': raw},
            bool(almosteq(reference, closed, rel_eps=REL_EPS, abs_eps=ABS_EPS))
            and bool(almosteq(tangent_side, closed, rel_eps=REL_EPS, abs_eps=ABS_EPS))
        )

    theta = mpf(SERIES_SAMPLE)
    exact = third.evaluate(1, 1, {'theta': float(SERIES_SAMPLE)}) + 0.5j
    report.add({'check': 'residual_series', 'theta': SERIES_SAMPLE},
               close(exact, mp.j * exp(mp.j * theta) / (1 + exp(mp.j * theta))))


def check_corollary(report: Report) -> None:
    composed = compose(invert(build_cov()), build_covbgp())
    omega = exp(2 * pi * mp.j / 3)
    omega_bar = exp(-2 * pi * mp.j / 3)
    expected = {
        ('z1', 'x1'): mp.j / (2 * sqrt(3)) * (omega_bar - 1),
        ('z1', 'x2'): mp.j / (2 * sqrt(3)) * (omega - 1),
        ('z2', 'x1'): omega / sqrt(3),
        ('z2', 'x2'): omega_bar / sqrt(3),
        ('u', 's1'): omega / sqrt(3),
        ('u', 's2'): omega_bar / sqrt(3),
    }
    for (line, variable), reference in expected.items():
        exact = composed.linear(line).coefficients[variable]
        report.add({'check': 'corollary', 'line': line, 'variable': variable}, close(exact, reference))

    report.add({'check': 'corollary', 'line': 'q', 'variable': 'phase'},
               close(composed.quantum('q').constant, -mp.j * omega))
    report.add({'check': 'corollary', 'line': 'u', 'variable': 'phase'},
               close(constant_phase(composed.linear('u')), exp(-mp.j * pi / 3)))


def run_numeric_checks(report: Report, max_degree: int, max_genus: int, order: int) -> Iterator[float]:
    with mp.workdps(WORKING_DPS):
        check_degree0(report)
        yield 0.1
        check_closed_forms(report, max_degree, max_genus)
        yield 0.3
        check_g_series(report, order)
        yield 0.4
        check_theorem(report, max_degree, order)
        yield 0.6
        check_bracket(report, max_degree, order)
        yield 0.75
        check_residual(report, order)
        yield 0.9
        check_corollary(report)
    logger.debug('numeric checks: %d cases', len(report.cases))
