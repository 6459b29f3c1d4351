"""Truncated multivariate power series with RatFun coefficients.

Every variable carries its own cap: a term survives when each exponent is at
most the cap of its variable. Monomials beyond a cap form an ideal, so the
arithmetic below is exact on every retained exponent.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .cyclotomic import Cyclo, Rational
from .ratfun import RAT_ONE, RAT_ZERO, RatFun, ratfun

logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]
Terms = dict[Exponents, RatFun]
Coefficient = Union[RatFun, Cyclo, int, Fraction]


class SeriesError(ValueError):
    pass


class VarSetMismatchError(SeriesError):
    pass


class ConstantTermError(SeriesError):
    pass


class CapExceededError(SeriesError):
    pass


@dataclass(frozen=True)
class VarSet:
    names: tuple[str, ...]
    caps: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise SeriesError(f'duplicate variable names in {self.names}')
        if len(self.names) != len(self.caps):
            raise SeriesError('one cap per variable is required')
        if any(cap < 0 for cap in self.caps):
            raise SeriesError(f'negative cap in {self.caps}')

    @classmethod
    def of(cls, **caps: int) -> 'VarSet':
        return cls(tuple(caps), tuple(caps.values()))

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise VarSetMismatchError(f'{name} is not a variable of {self.names}') from None

    def cap(self, name: str) -> int:
        return self.caps[self.index(name)]

    def fits(self, exponents: Exponents) -> bool:
        return all(e <= cap for e, cap in zip(exponents, self.caps))

    def with_caps(self, **caps: int) -> 'VarSet':
        for name in caps:
            self.index(name)
        return VarSet(self.names, tuple(caps.get(name, cap) for name, cap in zip(self.names, self.caps)))

    def extend(self, **caps: int) -> 'VarSet':
        return VarSet(self.names + tuple(caps), self.caps + tuple(caps.values()))

    def zero_exponents(self) -> Exponents:
        return (0,) * len(self.names)

    def exponents_of(self, exponents: 'Mapping[str, int] | Sequence[int]') -> Exponents:
        if isinstance(exponents, Mapping):
            result = [0] * len(self.names)
            for name, e in exponents.items():
                result[self.index(name)] = e
            return tuple(result)
        if len(exponents) != len(self.names):
            raise VarSetMismatchError(f'{len(exponents)} exponents given for {self.names}')
        return tuple(exponents)

    def to_json(self) -> dict:
        return {'vars': list(self.names), 'caps': list(self.caps)}


def _coefficient(value: Coefficient) -> RatFun:
    return ratfun(value)


def _accumulate(target: Terms, source: Terms, factor: Optional[RatFun] = None) -> None:
    for e, c in source.items():
        if factor is not None:
            c = c * factor
        if e in target:
            total = target[e] + c
            if total.is_zero():
                del target[e]
            else:
                target[e] = total
        elif not c.is_zero():
            target[e] = c


def _mul_terms(a: Terms, b: Terms, caps: tuple[int, ...]) -> Terms:
    if len(a) > len(b):
        a, b = b, a
    result: Terms = {}
    for ea, ca in a.items():
        partial: Terms = {}
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if all(x <= cap for x, cap in zip(e, caps)):
                partial[e] = cb
        if partial:
            _accumulate(result, partial, ca)
    return result


def _scale_terms(terms: Terms, factor: Rational) -> Terms:
    return {e: c.scale(factor) for e, c in terms.items()}


def _grlex(exponents: Exponents) -> tuple[int, Exponents]:
    return sum(exponents), exponents


@dataclass(frozen=True)
class Series:
    varset: VarSet
    terms: Terms = field(default_factory=dict)

    def __post_init__(self):
        if any(c.is_zero() for c in self.terms.values()):
            object.__setattr__(self, 'terms', {e: c for e, c in self.terms.items() if not c.is_zero()})

    # constructors

    @classmethod
    def zero(cls, varset: VarSet) -> 'Series':
        return cls(varset)

    @classmethod
    def constant(cls, varset: VarSet, value: Coefficient) -> 'Series':
        return cls(varset, {varset.zero_exponents(): _coefficient(value)})

    @classmethod
    def one(cls, varset: VarSet) -> 'Series':
        return cls.constant(varset, RAT_ONE)

    @classmethod
    def monomial(
        cls,
        varset: VarSet,
        exponents: 'Mapping[str, int] | Sequence[int]',
        coeff: Coefficient = 1
    ) -> 'Series':
        e = varset.exponents_of(exponents)
        if not varset.fits(e):
            return cls(varset)
        return cls(varset, {e: _coefficient(coeff)})

    @classmethod
    def var(cls, varset: VarSet, name: str, coeff: Coefficient = 1) -> 'Series':
        return cls.monomial(varset, {name: 1}, coeff)

    @classmethod
    def univariate(cls, varset: VarSet, name: str, coeffs: Sequence[Coefficient]) -> 'Series':
        index, cap = varset.index(name), varset.cap(name)
        terms: Terms = {}
        for k, c in enumerate(coeffs[:cap + 1]):
            e = [0] * len(varset.names)
            e[index] = k
            terms[tuple(e)] = _coefficient(c)
        return cls(varset, terms)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> RatFun:
        return self.terms.get(self.varset.zero_exponents(), RAT_ZERO)

    def max_exponent(self, name: str) -> int:
        index = self.varset.index(name)
        return max((e[index] for e in self.terms), default=0)

    def active_variables(self) -> list[int]:
        return [i for i in range(len(self.varset.names)) if any(e[i] for e in self.terms)]

    def coeff(self, exponents: 'Mapping[str, int] | Sequence[int]') -> RatFun:
        e = self.varset.exponents_of(exponents)
        if not self.varset.fits(e):
            raise CapExceededError(f'{e} lies beyond the caps {self.varset.caps}')
        return self.terms.get(e, RAT_ZERO)

    def sorted_terms(self) -> list[tuple[Exponents, RatFun]]:
        return sorted(self.terms.items(), key=lambda item: _grlex(item[0]))

    def first_mismatch(self, other: 'Series') -> Optional[Exponents]:
        self._check(other)
        differing = [
            e for e in set(self.terms) | set(other.terms)
            if self.terms.get(e, RAT_ZERO) != other.terms.get(e, RAT_ZERO)
        ]
        return min(differing, key=_grlex) if differing else None

    def _check(self, other: 'Series') -> None:
        if self.varset != other.varset:
            raise VarSetMismatchError(f'{self.varset} and {other.varset} differ')

    # ring operations

    def __add__(self, other: 'Series') -> 'Series':
        self._check(other)
        terms = dict(self.terms)
        _accumulate(terms, other.terms)
        return Series(self.varset, terms)

    def __neg__(self) -> 'Series':
        return Series(self.varset, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: 'Series') -> 'Series':
        return self + (-other)

    def scale(self, factor: Coefficient) -> 'Series':
        factor = _coefficient(factor)
        if factor.is_zero():
            return Series(self.varset)
        return Series(self.varset, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other: 'Series | Coefficient') -> 'Series':
        if not isinstance(other, Series):
            return self.scale(other)
        self._check(other)
        return Series(self.varset, _mul_terms(self.terms, other.terms, self.varset.caps))

    def __rmul__(self, other: Coefficient) -> 'Series':
        return self.scale(other)

    def __pow__(self, exponent: int) -> 'Series':
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result, base = Series.one(self.varset), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # elementary functions

    def _components(self) -> list[Terms]:
        """Homogeneous components by total degree, up to the largest reachable degree."""
        top = sum(self.varset.caps[i] for i in self.active_variables())
        components: list[Terms] = [{} for _ in range(top + 1)]
        for e, c in self.terms.items():
            components[sum(e)][e] = c
        return components

    def _require_no_constant_term(self, operation: str) -> list[Terms]:
        if not self.constant_term().is_zero():
            raise ConstantTermError(f'{operation} needs a series without constant term')
        return self._components()

    def exp(self) -> 'Series':
        # E g = g * E f with E the total degree operator
        f = self._require_no_constant_term('exp')
        caps = self.varset.caps
        weighted = [_scale_terms(component, k) for k, component in enumerate(f)]
        g: list[Terms] = [{self.varset.zero_exponents(): RAT_ONE}]
        for n in range(1, len(f)):
            acc: Terms = {}
            for k in range(1, n + 1):
                if weighted[k] and g[n - k]:
                    _accumulate(acc, _mul_terms(weighted[k], g[n - k], caps))
            g.append(_scale_terms(acc, Fraction(1, n)))
        return Series(self.varset, {e: c for component in g for e, c in component.items()})

    def sin_cos(self) -> tuple['Series', 'Series']:
        # E s = c * E f and E c = -s * E f
        f = self._require_no_constant_term('sin/cos')
        caps = self.varset.caps
        weighted = [_scale_terms(component, k) for k, component in enumerate(f)]
        s: list[Terms] = [{}]
        c: list[Terms] = [{self.varset.zero_exponents(): RAT_ONE}]
        for n in range(1, len(f)):
            acc_s: Terms = {}
            acc_c: Terms = {}
            for k in range(1, n + 1):
                if not weighted[k]:
                    continue
                if c[n - k]:
                    _accumulate(acc_s, _mul_terms(weighted[k], c[n - k], caps))
                if s[n - k]:
                    _accumulate(acc_c, _mul_terms(weighted[k], s[n - k], caps))
            s.append(_scale_terms(acc_s, Fraction(1, n)))
            c.append(_scale_terms(acc_c, Fraction(-1, n)))
        return (
            Series(self.varset, {e: v for component in s for e, v in component.items()}),
            Series(self.varset, {e: v for component in c for e, v in component.items()})
        )

    def sin(self) -> 'Series':
        return self.sin_cos()[0]

    def cos(self) -> 'Series':
        return self.sin_cos()[1]

    def tan(self) -> 'Series':
        s, c = self.sin_cos()
        return s * c.reciprocal()

    def reciprocal(self) -> 'Series':
        leading = self.constant_term()
        if leading.is_zero():
            raise ConstantTermError('reciprocal needs an invertible constant term')
        caps = self.varset.caps
        inverse = leading.inv()
        g = self._components()
        h: list[Terms] = [{self.varset.zero_exponents(): inverse}]
        for n in range(1, len(g)):
            acc: Terms = {}
            for k in range(1, n + 1):
                if g[k] and h[n - k]:
                    _accumulate(acc, _mul_terms(g[k], h[n - k], caps))
            h.append({e: -c * inverse for e, c in acc.items()})
        return Series(self.varset, {e: c for component in h for e, c in component.items()})

    # calculus

    def differentiate(self, name: str) -> 'Series':
        index = self.varset.index(name)
        terms: Terms = {}
        for e, c in self.terms.items():
            if e[index]:
                lowered = e[:index] + (e[index] - 1,) + e[index + 1:]
                terms[lowered] = c.scale(e[index])
        return Series(self.varset, terms)

    def integrate(self, name: str) -> 'Series':
        """Antiderivative with zero constant of integration; terms pushed past the cap are dropped."""
        index, cap = self.varset.index(name), self.varset.cap(name)
        terms: Terms = {}
        for e, c in self.terms.items():
            if e[index] < cap:
                raised = e[:index] + (e[index] + 1,) + e[index + 1:]
                terms[raised] = c.scale(Fraction(1, e[index] + 1))
        return Series(self.varset, terms)

    # restriction and change of variable set

    def restrict(self, **exponents: int) -> 'Series':
        """Keep the terms whose exponents match the given ones."""
        indices = {self.varset.index(name): e for name, e in exponents.items()}
        return Series(self.varset, {
            e: c for e, c in self.terms.items() if all(e[i] == value for i, value in indices.items())
        })

    def recast(self, target: VarSet) -> 'Series':
        """Move the terms to another variable set, dropping what exceeds its caps."""
        positions = []
        for index, name in enumerate(self.varset.names):
            if name in target:
                positions.append(target.index(name))
            elif self.max_exponent(name):
                raise VarSetMismatchError(f'{name} occurs in the series but not in {target.names}')
            else:
                positions.append(None)

        terms: Terms = {}
        for e, c in self.terms.items():
            moved = [0] * len(target.names)
            for exponent, position in zip(e, positions):
                if position is not None:
                    moved[position] = exponent
            moved_e = tuple(moved)
            if target.fits(moved_e):
                terms[moved_e] = c
        return Series(target, terms)

    def substitute(self, mapping: Mapping[str, 'Series'], target: Optional[VarSet] = None) -> 'Series':
        """Ring homomorphism sending each variable to a series over `target`.

        Unmapped variables go to the variable of the same name in `target`. The power
        of an image just past the cap of its variable must vanish under the target caps,
        so that no truncated term reaches a retained one. An image with a nonzero
        constant term never vanishes that way: it is accepted only when the variable
        stays below its cap in this series.
        """
        target = target or self.varset
        images: list[Optional[Series]] = []
        for index, name in enumerate(self.varset.names):
            image = mapping.get(name)
            used = self.max_exponent(name)
            if image is None:
                image = Series.var(target, name) if used else None
            elif image.varset != target:
                raise VarSetMismatchError(f'image of {name} does not live in {target.names}')
            if image is not None and used >= self.varset.caps[index] and not image.constant_term().is_zero():
                raise ConstantTermError(f'{name} reaches its cap and its image has a constant term')
            images.append(image)

        caps = target.caps
        powers: list[list[Terms]] = [[{target.zero_exponents(): RAT_ONE}] for _ in images]

        def power(index: int, k: int) -> Terms:
            cache = powers[index]
            while len(cache) <= k:
                cache.append(_mul_terms(cache[-1], images[index].terms, caps))  # type: ignore[union-attr]
            return cache[k]

        for index, (name, cap) in enumerate(zip(self.varset.names, self.varset.caps)):
            image = images[index]
            if image is None or not self.max_exponent(name) or not image.constant_term().is_zero():
                continue
            if power(index, cap + 1):
                raise CapExceededError(f'image of {name} to the power {cap + 1} survives the caps of {target.names}')

        prefixes: dict[Exponents, Terms] = {(): {target.zero_exponents(): RAT_ONE}}

        def prefix_product(prefix: Exponents) -> Terms:
            if prefix not in prefixes:
                head = prefix_product(prefix[:-1])
                k = prefix[-1]
                prefixes[prefix] = head if k == 0 else _mul_terms(head, power(len(prefix) - 1, k), caps)
            return prefixes[prefix]

        terms: Terms = {}
        for e, c in sorted(self.terms.items()):
            _accumulate(terms, prefix_product(e), c)
        logger.debug('substituted %d terms into %d terms over %s', len(self.terms), len(terms), target.names)
        return Series(target, terms)

    # output

    def evaluate(self, t1: Rational, t2: Rational, values: Mapping[str, complex]) -> complex:
        total = complex(0.0, 0.0)
        for e, c in self.terms.items():
            monomial = complex(1.0, 0.0)
            for name, k in zip(self.varset.names, e):
                if k:
                    monomial *= complex(values.get(name, 0.0)) ** k
            total += c.eval(t1, t2).embed() * monomial
        return total

    def to_json(self) -> dict:
        return {
            **self.varset.to_json(),
            'terms': [{'exp': list(e), 'coeff': c.to_json()} for e, c in self.sorted_terms()]
        }

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for e, c in self.sorted_terms():
            monomial = '*'.join(
                name + (f'^{k}' if k > 1 else '') for name, k in zip(self.varset.names, e) if k
            )
            parts.append(f'({c})' + (f'*{monomial}' if monomial else ''))
        return ' + '.join(parts)


__all__ = [
    'CapExceededError', 'ConstantTermError', 'Exponents', 'Series', 'SeriesError', 'VarSet',
    'VarSetMismatchError'
]
