"""Changes of variables between the potentials of Y, local P(1,2) and [C^3/Z_3].

A map sends source variables to expressions in target variables. Maps are
inverted by Gaussian elimination over Q(zeta), logarithms of the quantum
parameters taken on an explicit branch, and composed symbolically.
"""
import logging
from fractions import Fraction
from typing import Iterable, Optional

from ..algebra.cyclotomic import I, OMEGA, OMEGA_BAR, ONE, SQRT3, ZERO, Cyclo
from ..algebra.mpseries import Series, VarSet
from ..models.cov_map import (
    CovMap, CovMapError, ExponentialLine, Line, LinearForm, ScalarLine, pi_fraction
)
from ..models.report import Report
from .potentials import T1_PLUS_T2, extended, g_series, potential_varset, quantum_term

logger = logging.getLogger(__name__)

Y_VARIABLES = ('y0', 'y1', 'y2', 'q1', 'q2')
Z_VARIABLES = ('z0', 'z1', 'z2', 'q', 'u')
X_VARIABLES = ('x0', 'x1', 'x2', 's1', 's2')

BRANCHES = range(-6, 6)
DEFAULT_BRANCH = 0


class SingularLinearPartError(CovMapError):
    pass


class UncoveredVariableError(CovMapError):
    pass


# builders

def build_cov() -> CovMap:
    """Y in terms of local P(1,2): q1 = -e^(iu), q2 = iq."""
    return CovMap(Y_VARIABLES, Z_VARIABLES, {
        'y0': LinearForm.of(z0=1),
        'y1': LinearForm.of(z2=I),
        'y2': LinearForm.of(z1=1, z2=I.scale(Fraction(-1, 2))),
        'q1': ExponentialLine(6, LinearForm.of(u=I)),
        'q2': ScalarLine(I, 'q'),
    })


def build_covbgp() -> CovMap:
    """Y in terms of [C^3/Z_3]."""
    c = I / SQRT3
    return CovMap(Y_VARIABLES, X_VARIABLES, {
        'y0': LinearForm.of(x0=1),
        'y1': LinearForm.of(x1=c * OMEGA, x2=c * OMEGA_BAR),
        'y2': LinearForm.of(x1=c * OMEGA_BAR, x2=c * OMEGA),
        'q1': ExponentialLine(4, LinearForm.of(s1=c * OMEGA, s2=c * OMEGA_BAR)),
        'q2': ExponentialLine(4, LinearForm.of(s1=c * OMEGA_BAR, s2=c * OMEGA)),
    })


def build_corollary() -> CovMap:
    """Local P(1,2) in terms of [C^3/Z_3], on the default branch."""
    c = I / SQRT3
    return CovMap(Z_VARIABLES, X_VARIABLES, {
        'z0': LinearForm.of(x0=1),
        'z1': LinearForm.of(x1=(c / 2) * (OMEGA_BAR - 1), x2=(c / 2) * (OMEGA - 1)),
        'z2': LinearForm.of(x1=OMEGA / SQRT3, x2=OMEGA_BAR / SQRT3),
        # -i*omega = zeta
        'q': ExponentialLine(1, LinearForm.of(s1=c * OMEGA_BAR, s2=c * OMEGA)),
        'u': LinearForm.of(pi_coeff=Fraction(-1, 3), s1=OMEGA / SQRT3, s2=OMEGA_BAR / SQRT3),
    }, branch=DEFAULT_BRANCH)


def constant_phase(form: LinearForm) -> Cyclo:
    """e^(i * constant of form), a power of zeta."""
    sixths = 6 * pi_fraction(form)
    if sixths.denominator != 1:
        raise CovMapError(f'e^(i*{pi_fraction(form)}*pi) is not a 12th root of unity')
    return Cyclo.zeta_power(int(sixths))


# inversion

def _solve(rows: list[list[Cyclo]], rhs: list[LinearForm]) -> list[LinearForm]:
    n = len(rows)
    rows = [row[:] for row in rows]
    rhs = list(rhs)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise SingularLinearPartError('the linear part of the map is not invertible')
        rows[col], rows[pivot] = rows[pivot], rows[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inverse = rows[col][col].inv()
        rows[col] = [value * inverse for value in rows[col]]
        rhs[col] = rhs[col].scale(inverse)
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [value - factor * pivot_value for value, pivot_value in zip(rows[r], rows[col])]
                rhs[r] = rhs[r] - rhs[col].scale(factor)
    return rhs


def invert(m: CovMap, branch: int = DEFAULT_BRANCH) -> CovMap:
    """Invert `m`; log(zeta^k e^F) = F + i*pi*(k/6 + 2*branch)."""
    scalar_targets: dict[str, ScalarLine] = {}
    equations: list[tuple[LinearForm, LinearForm]] = []
    for name in m.source:
        line = m.lines[name]
        if isinstance(line, ScalarLine):
            if line.target in scalar_targets:
                raise SingularLinearPartError(f'{line.target} is the image of two quantum parameters')
            scalar_targets[line.target] = ScalarLine(line.scalar.inv(), name)
        elif isinstance(line, ExponentialLine):
            angle = I.scale(-(Fraction(line.phase, 6) + 2 * branch))
            equations.append((line.form, LinearForm({}, {name: ONE}, angle)))
        else:
            if line.logs:
                raise CovMapError(f'line of {name} contains logarithms and cannot be inverted')
            equations.append((line.without_constant(), LinearForm({name: ONE}, {}, -line.pi_coeff)))

    unknowns = [name for name in m.target if name not in scalar_targets]
    if len(equations) != len(unknowns):
        raise SingularLinearPartError(f'{len(equations)} equations for the {len(unknowns)} unknowns {unknowns}')
    for form, _ in equations:
        if mixed := form.variables & set(scalar_targets):
            raise CovMapError(f'{sorted(mixed)} occur both in a linear form and as scalar targets')

    rows = [[form.coefficients.get(name, ZERO) for name in unknowns] for form, _ in equations]
    solution = dict(zip(unknowns, _solve(rows, [rhs for _, rhs in equations])))
    lines: dict[str, Line] = {**solution, **scalar_targets}
    logger.debug('inverted map %s -> %s on branch %d', m.source, m.target, branch)
    return CovMap(m.target, m.source, {name: lines[name] for name in m.target}, branch=branch)


# composition

def _log_of(line: Line) -> LinearForm:
    """Logarithm of a quantum line, principal on the phase."""
    if isinstance(line, ExponentialLine):
        return line.form + LinearForm({}, {}, I.scale(Fraction(line.phase, 6)))
    if isinstance(line, ScalarLine):
        k = line.scalar.root_of_unity_exponent()
        return LinearForm({}, {line.target: ONE}, I.scale(Fraction(k, 6)))
    raise CovMapError(f'logarithm of the cohomology line {line}')


def _substitute_form(form: LinearForm, b: CovMap) -> LinearForm:
    result = LinearForm({}, {}, form.pi_coeff)
    for name, coeff in form.coefficients.items():
        line = b.line(name)
        if not isinstance(line, LinearForm):
            raise CovMapError(f'quantum parameter {name} occurs linearly')
        result = result + line.scale(coeff)
    for name, coeff in form.logs.items():
        result = result + _log_of(b.line(name)).scale(coeff)
    return result


def _compose_line(line: Line, b: CovMap) -> Line:
    if isinstance(line, LinearForm):
        return _substitute_form(line, b)

    if isinstance(line, ExponentialLine):
        exponent = _substitute_form(line.form, b)
        turns = exponent.pi_coeff * I.inv()
        if not turns.is_rational or (6 * turns.c0).denominator != 1:
            raise CovMapError(f'e^({exponent.pi_coeff}*pi) is not a 12th root of unity')
        phase = line.phase + int(6 * turns.c0)
        if exponent.logs:
            if exponent.coefficients or list(exponent.logs.values()) != [ONE]:
                raise CovMapError(f'exponential of {exponent} is not a quantum parameter')
            return ScalarLine(Cyclo.zeta_power(phase), next(iter(exponent.logs)))
        return ExponentialLine(phase, exponent.without_constant())

    image = b.line(line.target)
    if isinstance(image, ExponentialLine):
        return ExponentialLine(line.scalar.root_of_unity_exponent() + image.phase, image.form)
    if isinstance(image, ScalarLine):
        return ScalarLine(line.scalar * image.scalar, image.target)
    raise CovMapError(f'{line.target} is sent to the cohomology line {image}')


def compose(a: CovMap, b: CovMap) -> CovMap:
    """The map expressing a's source variables in b's target variables."""
    if a.target != b.source:
        raise CovMapError(f'cannot compose: {a.target} differs from {b.source}')
    return CovMap(a.source, b.target, {name: _compose_line(a.lines[name], b) for name in a.source}, branch=a.branch)


# application to series

def _form_series(form: LinearForm, target: VarSet) -> Series:
    if form.logs or not form.pi_coeff.is_zero():
        raise CovMapError(f'{form} has no power series expansion')
    result = Series.zero(target)
    for name, coeff in form.coefficients.items():
        if name not in target:
            raise UncoveredVariableError(f'{name} is not a variable of {target.names}')
        result = result + Series.var(target, name, coeff)
    return result


def _line_series(line: Line, target: VarSet) -> Series:
    if isinstance(line, LinearForm):
        return _form_series(line, target)
    if isinstance(line, ExponentialLine):
        return _form_series(line.form, target).exp().scale(line.constant)
    if line.target not in target:
        raise UncoveredVariableError(f'{line.target} is not a variable of {target.names}')
    return Series.var(target, line.target, line.scalar)


def apply(m: CovMap, f: Series, target: VarSet) -> Series:
    images: dict[str, Series] = {}
    for name in f.varset.names:
        if not f.max_exponent(name):
            continue
        if name not in m.lines:
            raise UncoveredVariableError(f'{name} is not a source variable of the map')
        images[name] = _line_series(m.lines[name], target)
    return f.substitute(images, target)


# verifications

def _mismatch(left: Series, right: Series) -> tuple[bool, Optional[tuple[int, ...]]]:
    mismatch = left.first_mismatch(right)
    return mismatch is None, mismatch


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def bracket_varset(qmax: int, order: int) -> VarSet:
    return VarSet.of(z1=order, z2=order, q=qmax, u=order)


def verify_bracket_identity(qmax: int, order: int, degrees: Optional[Iterable[int]] = None) -> Report:
    """i^d [e^(-id(z2+u)/2) + (-1)^d e^(id(z2+u)/2)] / 2 against the sin/cos closed forms."""
    varset = bracket_varset(qmax, order)
    report = Report(suite='bracket')
    for d in (degrees if degrees is not None else range(1, qmax + 1)):
        base = Series.monomial(varset, {'q': d}) * Series.var(varset, 'z1', d).exp()
        base = base.scale(Fraction(1, d ** 3))
        half_angle = Series.var(varset, 'z2', Fraction(d, 2)) + Series.var(varset, 'u', Fraction(d, 2))
        bracket = (
            half_angle.scale(-I).exp() + half_angle.scale(I).exp().scale(_sign(d))
        ).scale(I ** d / 2)
        closed = half_angle.sin().scale(_sign((d - 1) // 2)) if d % 2 else half_angle.cos().scale(_sign(d // 2))

        report.add({'d': d, 'check': 'bracket'}, *_mismatch(base * bracket, base * closed))
        literal = base * Series.var(varset, 'u', I * Fraction(d, 2)).exp() * bracket
        report.add(
            {'d': d, 'check': 'displayed'},
            *_mismatch(literal, base * closed),
            reported=True,
            note='the displayed expression keeps the factor e^(idu/2)'
        )
    return report


def verify_residual_thirdderiv(order: int) -> Report:
    """-G'''(theta) + i/2 = i e^(i theta) / (1 + e^(i theta)) with theta = z2 + u."""
    wide = VarSet.of(theta=order + 3)
    varset = VarSet.of(theta=order)
    lhs = -g_series(order + 3, 'theta') + Series.monomial(wide, {'theta': 3}, I / 12)
    for _ in range(3):
        lhs = lhs.differentiate('theta')
    lhs = lhs.recast(varset)

    e = Series.var(varset, 'theta', I).exp()
    rhs = e.scale(I) * (Series.one(varset) + e).reciprocal()

    report = Report(suite='residual')
    report.add({'order': order, 'check': 'third_derivative'}, *_mismatch(lhs, rhs))
    return report


def verify_corollary(branch: int = DEFAULT_BRANCH) -> Report:
    composed = compose(invert(build_cov(), branch), build_covbgp())
    expected = build_corollary()
    report = Report(suite='corollary')
    report.add({'check': 'variables'}, composed.source == expected.source and composed.target == expected.target)
    for name in expected.source:
        report.add({'line': name}, composed.lines.get(name) == expected.lines[name])
    return report


def verify_corollary_remark() -> Report:
    """No logarithm branch sends u to 0 at s1 = s2 = 0."""
    cov, covbgp = build_cov(), build_covbgp()
    report = Report(suite='corollary')
    for branch in BRANCHES:
        u = compose(invert(cov, branch), covbgp).linear('u')
        angle = pi_fraction(u)
        report.add({'branch': branch, 'check': 'nonzero_constant'}, angle != 0, note=f'u = {angle}*pi + ...')
        if branch == DEFAULT_BRANCH:
            report.add(
                {'branch': branch, 'check': 'printed_constant'},
                angle == Fraction(-1, 3) and constant_phase(u) == Cyclo.zeta_power(-2)
            )
    return report


def cov_varsets(qmax: int, zorder: int, uorder: int) -> tuple[VarSet, VarSet]:
    source = VarSet.of(y0=0, y1=2 * zorder, y2=2 * zorder, q1=qmax + 1, q2=qmax + 1)
    target = potential_varset(qmax, zorder, uorder).with_caps(z0=0)
    return source, target


def y_quantum_term(d: int, source: VarSet) -> Series:
    """((e^y2 q2)^d + (e^(y1+y2) q1 q2)^d) / d^3"""
    first = Series.monomial(source, {'q2': d}) * Series.var(source, 'y2', d).exp()
    second = Series.monomial(source, {'q1': d, 'q2': d}) * (
        Series.var(source, 'y1', d) + Series.var(source, 'y2', d)
    ).exp()
    return (first + second).scale(Fraction(1, d ** 3))


def verify_cov_quantum(
    qmax: int,
    zorder: int,
    uorder: int,
    degrees: Optional[Iterable[int]] = None
) -> Report:
    """The Y-side quantum sums after the change of variables against the extended quantum part."""
    cov = build_cov()
    source, target = cov_varsets(qmax, zorder, uorder)
    wide = potential_varset(qmax, zorder).with_caps(z0=0, z2=zorder + uorder)
    report = Report(suite='cov')
    for d in (degrees if degrees is not None else range(1, qmax + 1)):
        applied = apply(cov, y_quantum_term(d, source), target).scale(T1_PLUS_T2)
        expected = extended(quantum_term(d, wide), uorder)
        twist = Series.var(target, 'u', I * Fraction(d, 2)).exp()

        report.add({'d': d, 'check': 'u0'}, *_mismatch(applied.restrict(u=0), expected.restrict(u=0)))
        report.add({'d': d, 'check': 'twisted'}, *_mismatch(applied, expected * twist))
        report.add(
            {'d': d, 'check': 'displayed'},
            *_mismatch(applied, expected),
            reported=True,
            note='agreement needs q -> q e^(iu/2)'
        )
    return report

