"""Changes of variables between potentials.

A CovMap expresses every source variable in terms of target variables:
cohomology variables through linear forms, quantum parameters either as a
root of unity times an exponential of a linear form or as a root of unity
times another quantum parameter.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from ..algebra.cyclotomic import ZERO, Cyclo, Rational


class CovMapError(ValueError):
    pass


def _cyclo(value: 'Cyclo | Rational') -> Cyclo:
    return value if isinstance(value, Cyclo) else Cyclo.rational(value)


def _clean(coefficients: Mapping[str, Cyclo]) -> dict[str, Cyclo]:
    return {name: coeff for name, coeff in coefficients.items() if not coeff.is_zero()}


def _merge(a: Mapping[str, Cyclo], b: Mapping[str, Cyclo]) -> dict[str, Cyclo]:
    merged = dict(a)
    for name, coeff in b.items():
        merged[name] = merged[name] + coeff if name in merged else coeff
    return _clean(merged)


@dataclass(frozen=True)
class LinearForm:
    """sum(c_v * v) + sum(c_q * log q) + pi_coeff * pi"""
    coefficients: dict[str, Cyclo] = field(default_factory=dict)
    logs: dict[str, Cyclo] = field(default_factory=dict)
    pi_coeff: Cyclo = ZERO

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', _clean(self.coefficients))
        object.__setattr__(self, 'logs', _clean(self.logs))

    @classmethod
    def of(cls, pi_coeff: 'Cyclo | Rational' = 0, **coefficients: 'Cyclo | Rational') -> 'LinearForm':
        return cls({name: _cyclo(c) for name, c in coefficients.items()}, {}, _cyclo(pi_coeff))

    @classmethod
    def log(cls, name: str, coeff: 'Cyclo | Rational' = 1) -> 'LinearForm':
        return cls({}, {name: _cyclo(coeff)})

    @property
    def variables(self) -> set[str]:
        return set(self.coefficients) | set(self.logs)

    def is_zero(self) -> bool:
        return not self.coefficients and not self.logs and self.pi_coeff.is_zero()

    def is_plain(self) -> bool:
        """True for a form without logarithms and without constant."""
        return not self.logs and self.pi_coeff.is_zero()

    def __add__(self, other: 'LinearForm') -> 'LinearForm':
        return LinearForm(
            _merge(self.coefficients, other.coefficients),
            _merge(self.logs, other.logs),
            self.pi_coeff + other.pi_coeff
        )

    def scale(self, factor: 'Cyclo | Rational') -> 'LinearForm':
        factor = _cyclo(factor)
        return LinearForm(
            {name: c * factor for name, c in self.coefficients.items()},
            {name: c * factor for name, c in self.logs.items()},
            self.pi_coeff * factor
        )

    def __neg__(self) -> 'LinearForm':
        return self.scale(-1)

    def __sub__(self, other: 'LinearForm') -> 'LinearForm':
        return self + (-other)

    def without_constant(self) -> 'LinearForm':
        return LinearForm(self.coefficients, self.logs)

    def to_json(self) -> dict:
        return {
            'coefficients': {name: c.to_strings() for name, c in sorted(self.coefficients.items())},
            'logs': {name: c.to_strings() for name, c in sorted(self.logs.items())},
            'pi_coeff': self.pi_coeff.to_strings()
        }

    def __str__(self) -> str:
        parts = [f'{c}*{name}' for name, c in sorted(self.coefficients.items())]
        parts += [f'{c}*log({name})' for name, c in sorted(self.logs.items())]
        if not self.pi_coeff.is_zero():
            parts.append(f'{self.pi_coeff}*pi')
        return ' + '.join(parts) or '0'


@dataclass(frozen=True)
class ExponentialLine:
    """q = zeta^phase * exp(form)"""
    phase: int
    form: LinearForm

    def __post_init__(self):
        object.__setattr__(self, 'phase', self.phase % 12)
        if not self.form.is_plain():
            raise CovMapError(f'exponent {self.form} must be a plain linear form')

    @property
    def constant(self) -> Cyclo:
        return Cyclo.zeta_power(self.phase)

    def to_json(self) -> dict:
        return {'kind': 'exponential', 'phase': self.phase, 'form': self.form.to_json()}

    def __str__(self) -> str:
        return f'zeta^{self.phase} * exp({self.form})'


@dataclass(frozen=True)
class ScalarLine:
    """q = scalar * target"""
    scalar: Cyclo
    target: str

    def to_json(self) -> dict:
        return {'kind': 'scalar', 'scalar': self.scalar.to_strings(), 'target': self.target}

    def __str__(self) -> str:
        return f'{self.scalar}*{self.target}'


Line = Union[LinearForm, ExponentialLine, ScalarLine]


def line_variables(line: Line) -> set[str]:
    if isinstance(line, LinearForm):
        return line.variables
    if isinstance(line, ExponentialLine):
        return line.form.variables
    return {line.target}


def line_to_json(line: Line) -> dict:
    if isinstance(line, LinearForm):
        return {'kind': 'linear', 'form': line.to_json()}
    return line.to_json()


@dataclass(frozen=True)
class CovMap:
    source: tuple[str, ...]
    target: tuple[str, ...]
    lines: dict[str, Line]
    branch: int = field(default=0, compare=False)

    def __post_init__(self):
        if set(self.lines) != set(self.source):
            raise CovMapError(f'lines {sorted(self.lines)} do not match the source variables {self.source}')
        for name, line in self.lines.items():
            if unknown := line_variables(line) - set(self.target):
                raise CovMapError(f'line of {name} uses {sorted(unknown)} outside of {self.target}')

    def line(self, name: str) -> Line:
        try:
            return self.lines[name]
        except KeyError:
            raise CovMapError(f'{name} is not a source variable of this map') from None

    def linear(self, name: str) -> LinearForm:
        line = self.line(name)
        if not isinstance(line, LinearForm):
            raise CovMapError(f'{name} is not a cohomology variable')
        return line

    def quantum(self, name: str) -> ExponentialLine | ScalarLine:
        line = self.line(name)
        if isinstance(line, LinearForm):
            raise CovMapError(f'{name} is not a quantum parameter')
        return line

    @property
    def cohomology_variables(self) -> list[str]:
        return [name for name in self.source if isinstance(self.lines[name], LinearForm)]

    @property
    def quantum_variables(self) -> list[str]:
        return [name for name in self.source if not isinstance(self.lines[name], LinearForm)]

    def linear_matrix(self) -> list[list[Cyclo]]:
        """Rows: source cohomology variables, columns: target variables."""
        return [
            [self.linear(name).coefficients.get(column, ZERO) for column in self.target]
            for name in self.cohomology_variables
        ]

    def to_json(self) -> dict:
        return {
            'source': list(self.source),
            'target': list(self.target),
            'branch': self.branch,
            'lines': {name: line_to_json(self.lines[name]) for name in self.source}
        }


def identity_map(names: tuple[str, ...]) -> CovMap:
    return CovMap(names, names, {name: LinearForm.of(**{name: 1}) for name in names})


def pi_fraction(form: LinearForm) -> Fraction:
    """The constant of a form as a rational multiple of pi."""
    if not form.pi_coeff.is_rational:
        raise CovMapError(f'constant of {form} is not a real multiple of pi')
    return form.pi_coeff.c0
