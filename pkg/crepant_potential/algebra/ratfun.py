"""Polynomials and rational functions in the equivariant weights t1, t2 over Q(zeta_12).

Canonical form of a RatFun: numerator and denominator coprime, denominator with
leading coefficient 1 under graded-lexicographic order (t1 > t2). The gcd is a
primitive remainder sequence in t1 over Q(zeta)[t2], contents taken with the
univariate Euclidean algorithm in t2.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .cyclotomic import ONE as CYCLO_ONE, Cyclo, Rational

Monomial = tuple[int, int]
Scalar = Union[Cyclo, int, Fraction]


class PoleError(ArithmeticError):
    pass


def _as_cyclo(value: Scalar) -> Cyclo:
    return value if isinstance(value, Cyclo) else Cyclo.rational(value)


def _grlex_key(monomial: Monomial) -> tuple[int, int]:
    return monomial[0] + monomial[1], monomial[0]


@dataclass(frozen=True)
class Poly2:
    terms: dict[Monomial, Cyclo] = field(default_factory=dict)

    def __post_init__(self):
        if any(coeff.is_zero() for coeff in self.terms.values()):
            object.__setattr__(self, 'terms', {m: c for m, c in self.terms.items() if not c.is_zero()})

    @classmethod
    def constant(cls, value: Scalar) -> 'Poly2':
        value = _as_cyclo(value)
        return cls({} if value.is_zero() else {(0, 0): value})

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff: Scalar = 1) -> 'Poly2':
        coeff = _as_cyclo(coeff)
        return cls({} if coeff.is_zero() else {(e1, e2): coeff})

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_term(self) -> Cyclo:
        return self.terms.get((0, 0), Cyclo())

    def leading(self) -> tuple[Monomial, Cyclo]:
        monomial = max(self.terms, key=_grlex_key)
        return monomial, self.terms[monomial]

    def __add__(self, other: 'Poly2') -> 'Poly2':
        result = dict(self.terms)
        for monomial, coeff in other.terms.items():
            result[monomial] = result[monomial] + coeff if monomial in result else coeff
        return Poly2(result)

    def __neg__(self) -> 'Poly2':
        return Poly2({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'Poly2') -> 'Poly2':
        return self + (-other)

    def scale(self, factor: Scalar) -> 'Poly2':
        factor = _as_cyclo(factor)
        if factor.is_zero():
            return Poly2()
        return Poly2({m: c * factor for m, c in self.terms.items()})

    def __mul__(self, other: 'Poly2') -> 'Poly2':
        if other.is_constant():
            return self.scale(other.constant_term())
        if self.is_constant():
            return other.scale(self.constant_term())

        result: dict[Monomial, Cyclo] = {}
        for (a1, a2), x in self.terms.items():
            for (b1, b2), y in other.terms.items():
                monomial = (a1 + b1, a2 + b2)
                product = x * y
                result[monomial] = result[monomial] + product if monomial in result else product
        return Poly2(result)

    def exact_div(self, divisor: 'Poly2') -> 'Poly2':
        """Quotient of a division known to be exact."""
        if divisor.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        if divisor.is_constant():
            return self.scale(divisor.constant_term().inv())

        (d1, d2), lead = divisor.leading()
        lead_inv = lead.inv()
        remainder, quotient = self, Poly2()
        while not remainder.is_zero():
            (r1, r2), coeff = remainder.leading()
            if r1 < d1 or r2 < d2:
                raise ArithmeticError('division is not exact')
            step = Poly2.monomial(r1 - d1, r2 - d2, coeff * lead_inv)
            quotient = quotient + step
            remainder = remainder - step * divisor
        return quotient

    def eval(self, t1: Scalar, t2: Scalar) -> Cyclo:
        t1, t2 = _as_cyclo(t1), _as_cyclo(t2)
        total = Cyclo()
        for (e1, e2), coeff in self.terms.items():
            total = total + coeff * (t1 ** e1) * (t2 ** e2)
        return total

    def sorted_terms(self) -> list[tuple[Monomial, Cyclo]]:
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def to_json(self) -> list:
        return [[e1, e2, coeff.to_strings()] for (e1, e2), coeff in self.sorted_terms()]

    @classmethod
    def from_json(cls, raw: list) -> 'Poly2':
        return cls({(e1, e2): Cyclo.from_strings(coeff) for e1, e2, coeff in raw})

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        parts = []
        for (e1, e2), coeff in self.sorted_terms():
            powers = [f't{index}' + (f'^{e}' if e > 1 else '') for index, e in ((1, e1), (2, e2)) if e]
            if not powers:
                parts.append(str(coeff))
            elif coeff == CYCLO_ONE:
                parts.append('*'.join(powers))
            elif coeff == -CYCLO_ONE:
                parts.append('-' + '*'.join(powers))
            else:
                parts.append('*'.join([str(coeff), *powers]))
        return ' + '.join(parts).replace('+ -', '- ')


T1 = Poly2.monomial(1, 0)
T2 = Poly2.monomial(0, 1)
POLY_ONE = Poly2.constant(1)


# univariate polynomials in t2, dict exponent -> coefficient

Univariate = dict[int, Cyclo]


def _u_trim(a: Univariate) -> Univariate:
    return {e: c for e, c in a.items() if not c.is_zero()}


def _u_deg(a: Univariate) -> int:
    return max(a) if a else -1


def _u_sub(a: Univariate, b: Univariate) -> Univariate:
    result = dict(a)
    for e, c in b.items():
        result[e] = result[e] - c if e in result else -c
    return _u_trim(result)


def _u_mul(a: Univariate, b: Univariate) -> Univariate:
    result: Univariate = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            result[ea + eb] = result[ea + eb] + ca * cb if ea + eb in result else ca * cb
    return _u_trim(result)


def _u_divmod(a: Univariate, b: Univariate) -> tuple[Univariate, Univariate]:
    db = _u_deg(b)
    lead_inv = b[db].inv()
    quotient: Univariate = {}
    remainder = dict(a)
    while remainder and _u_deg(remainder) >= db:
        dr = _u_deg(remainder)
        coeff = remainder[dr] * lead_inv
        quotient[dr - db] = coeff
        remainder = _u_sub(remainder, {e + dr - db: c * coeff for e, c in b.items()})
    return quotient, remainder


def _u_monic(a: Univariate) -> Univariate:
    lead_inv = a[_u_deg(a)].inv()
    return {e: c * lead_inv for e, c in a.items()}


def _u_gcd(a: Univariate, b: Univariate) -> Univariate:
    while b:
        a, b = b, _u_divmod(a, b)[1]
    return _u_monic(a) if a else {}


# recursive view: dict t1-exponent -> univariate coefficient in t2

Recursive = dict[int, Univariate]


def _to_recursive(p: Poly2) -> Recursive:
    result: Recursive = {}
    for (e1, e2), c in p.terms.items():
        result.setdefault(e1, {})[e2] = c
    return result


def _from_recursive(r: Recursive) -> Poly2:
    return Poly2({(e1, e2): c for e1, u in r.items() for e2, c in u.items()})


def _r_deg(r: Recursive) -> int:
    return max(r) if r else -1


def _r_primitive(r: Recursive) -> tuple[Univariate, Recursive]:
    content: Univariate = {}
    for coeff in r.values():
        content = _u_gcd(content, coeff) if content else _u_monic(coeff)
    return content, {e: _u_divmod(u, content)[0] for e, u in r.items()}


def _r_prem(f: Recursive, g: Recursive) -> Recursive:
    dg = _r_deg(g)
    lead = g[dg]
    remainder = dict(f)
    while remainder and _r_deg(remainder) >= dg:
        dr = _r_deg(remainder)
        lead_r = remainder[dr]
        updated: Recursive = {}
        for e in set(remainder) | {e + dr - dg for e in g}:
            value = _u_sub(
                _u_mul(lead, remainder.get(e, {})),
                _u_mul(lead_r, g.get(e - dr + dg, {}))
            )
            if value:
                updated[e] = value
        remainder = updated
    return remainder


def poly_gcd(f: Poly2, g: Poly2) -> Poly2:
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    if f.is_constant() or g.is_constant():
        return POLY_ONE

    content_f, a = _r_primitive(_to_recursive(f))
    content_g, b = _r_primitive(_to_recursive(g))
    content = _u_gcd(content_f, content_g)

    if _r_deg(a) < _r_deg(b):
        a, b = b, a
    while True:
        remainder = _r_prem(a, b)
        if not remainder:
            break
        a, b = b, _r_primitive(remainder)[1]

    if _r_deg(b) == 0:
        b = {0: {0: CYCLO_ONE}}
    return _from_recursive({e: _u_mul(content, u) for e, u in b.items()})


@dataclass(frozen=True)
class RatFun:
    num: Poly2
    den: Poly2 = POLY_ONE

    def __post_init__(self):
        # zero has the denominator 1, constant denominators are folded into the numerator
        if self.num.is_zero() and not self.den.is_zero():
            object.__setattr__(self, 'den', POLY_ONE)
        elif self.den.is_constant() and self.den != POLY_ONE:
            if self.den.is_zero():
                raise ZeroDivisionError('rational function with zero denominator')
            object.__setattr__(self, 'num', self.num.scale(self.den.constant_term().inv()))
            object.__setattr__(self, 'den', POLY_ONE)

    @classmethod
    def normalized(cls, num: Poly2, den: Poly2) -> 'RatFun':
        if den.is_zero():
            raise ZeroDivisionError('rational function with zero denominator')
        if num.is_zero():
            return cls(Poly2(), POLY_ONE)
        if den.is_constant():
            return cls(num.scale(den.constant_term().inv()), POLY_ONE)

        common = poly_gcd(num, den)
        if not common.is_constant():
            num, den = num.exact_div(common), den.exact_div(common)
        lead_inv = den.leading()[1].inv()
        return cls(num.scale(lead_inv), den.scale(lead_inv))

    @classmethod
    def constant(cls, value: Scalar) -> 'RatFun':
        return cls(Poly2.constant(value))

    @classmethod
    def poly(cls, p: Poly2) -> 'RatFun':
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: 'RatFun') -> 'RatFun':
        if self.den.is_constant() and other.den.is_constant():
            return RatFun(self.num + other.num)
        if self.den == other.den:
            return RatFun.normalized(self.num + other.num, self.den)
        return RatFun.normalized(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> 'RatFun':
        return RatFun(-self.num, self.den)

    def __sub__(self, other: 'RatFun') -> 'RatFun':
        return self + (-other)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Cyclo:
        return self.num.constant_term() / self.den.constant_term()

    def __mul__(self, other: 'RatFun') -> 'RatFun':
        if other.is_constant():
            return self.scale(other.constant_value())
        if self.is_constant():
            return other.scale(self.constant_value())
        if self.den.is_constant() and other.den.is_constant():
            return RatFun(self.num * other.num)
        return RatFun.normalized(self.num * other.num, self.den * other.den)

    def scale(self, factor: Scalar) -> 'RatFun':
        return RatFun(self.num.scale(factor), self.den)

    def inv(self) -> 'RatFun':
        if self.is_zero():
            raise ZeroDivisionError('inverse of the zero rational function')
        return RatFun.normalized(self.den, self.num)

    def __truediv__(self, other: 'RatFun') -> 'RatFun':
        return self * other.inv()

    def __pow__(self, exponent: int) -> 'RatFun':
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = RAT_ONE
        for _ in range(exponent):
            result = result * self
        return result

    def eval(self, t1: Rational, t2: Rational) -> Cyclo:
        denominator = self.den.eval(t1, t2)
        if denominator.is_zero():
            raise PoleError(f'{self} has a pole at t1={t1}, t2={t2}')
        return self.num.eval(t1, t2) / denominator

    def to_json(self) -> dict:
        return {'num': self.num.to_json(), 'den': self.den.to_json()}

    @classmethod
    def from_json(cls, raw: dict) -> 'RatFun':
        return cls.normalized(Poly2.from_json(raw['num']), Poly2.from_json(raw['den']))

    def __str__(self) -> str:
        if self.den == POLY_ONE:
            return str(self.num)
        return f'({self.num})/({self.den})'


RAT_ZERO = RatFun(Poly2())
RAT_ONE = RatFun(POLY_ONE)
RAT_T1 = RatFun(T1)
RAT_T2 = RatFun(T2)


def ratfun(value: 'RatFun | Poly2 | Scalar') -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, Poly2):
        return RatFun(value)
    return RatFun.constant(value)
