"""Exact arithmetic in Q(zeta) with zeta a primitive 12th root of unity.

Elements are stored in the basis {1, zeta, zeta^2, zeta^3} and reduced with
Phi_12(zeta) = zeta^4 - zeta^2 + 1 = 0.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

ZETA_EMBEDDING = complex(math.cos(math.pi / 6), math.sin(math.pi / 6))


class NotARootOfUnityError(ValueError):
    pass


def _reduce(coeffs: list[Fraction]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    # zeta^k = zeta^(k-2) - zeta^(k-4) for k >= 4
    b = list(coeffs)
    for k in range(len(b) - 1, 3, -1):
        top = b[k]
        if top:
            b[k - 2] += top
            b[k - 4] -= top
    b += [Fraction(0)] * (4 - len(b))
    return b[0], b[1], b[2], b[3]


@dataclass(frozen=True, slots=True)
class Cyclo:
    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)
    c3: Fraction = Fraction(0)

    @classmethod
    def of(cls, c0: Rational = 0, c1: Rational = 0, c2: Rational = 0, c3: Rational = 0) -> 'Cyclo':
        return cls(Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @classmethod
    def rational(cls, value: Rational) -> 'Cyclo':
        return cls(Fraction(value))

    @classmethod
    def zeta_power(cls, k: int) -> 'Cyclo':
        k %= 12
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return cls(*_reduce(coeffs))

    @classmethod
    def from_strings(cls, raw: list[str]) -> 'Cyclo':
        return cls(*(Fraction(item) for item in raw))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.c0, self.c1, self.c2, self.c3

    @property
    def is_rational(self) -> bool:
        return not (self.c1 or self.c2 or self.c3)

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1 or self.c2 or self.c3)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: 'Cyclo | Rational') -> 'Cyclo':
        if not isinstance(other, Cyclo):
            return Cyclo(self.c0 + other, self.c1, self.c2, self.c3)
        return Cyclo(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3)

    __radd__ = __add__

    def __neg__(self) -> 'Cyclo':
        return Cyclo(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other: 'Cyclo | Rational') -> 'Cyclo':
        return self + (-other)

    def __rsub__(self, other: Rational) -> 'Cyclo':
        return (-self) + other

    def scale(self, factor: Rational) -> 'Cyclo':
        return Cyclo(self.c0 * factor, self.c1 * factor, self.c2 * factor, self.c3 * factor)

    def __mul__(self, other: 'Cyclo | Rational') -> 'Cyclo':
        if not isinstance(other, Cyclo):
            return self.scale(other)
        if other.is_rational:
            return self.scale(other.c0)
        if self.is_rational:
            return other.scale(self.c0)

        a, b = self.coeffs, other.coeffs
        product = [Fraction(0)] * 7
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y
        return Cyclo(*_reduce(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Cyclo':
        if exponent < 0:
            return self.inv() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _multiplication_matrix(self) -> list[list[Fraction]]:
        # column j holds self * zeta^j in basis coordinates
        columns = [(self * Cyclo.zeta_power(j)).coeffs for j in range(4)]
        return [[columns[j][i] for j in range(4)] for i in range(4)]

    def inv(self) -> 'Cyclo':
        """Solve (multiplication by self) x = 1 over the rationals."""
        if self.is_zero():
            raise ZeroDivisionError('inverse of zero in Q(zeta_12)')
        if self.is_rational:
            return Cyclo(1 / self.c0)

        rows = [row[:] + [Fraction(1 if i == 0 else 0)] for i, row in enumerate(self._multiplication_matrix())]
        for col in range(4):
            pivot = next(r for r in range(col, 4) if rows[r][col])
            rows[col], rows[pivot] = rows[pivot], rows[col]
            pivot_value = rows[col][col]
            rows[col] = [value / pivot_value for value in rows[col]]
            for r in range(4):
                if r != col and rows[r][col]:
                    factor = rows[r][col]
                    rows[r] = [value - factor * pivot_row for value, pivot_row in zip(rows[r], rows[col])]
        return Cyclo(*(rows[i][4] for i in range(4)))

    def __truediv__(self, other: 'Cyclo | Rational') -> 'Cyclo':
        if not isinstance(other, Cyclo):
            if other == 0:
                raise ZeroDivisionError('division by zero in Q(zeta_12)')
            return self.scale(Fraction(1) / other)
        return self * other.inv()

    def __rtruediv__(self, other: Rational) -> 'Cyclo':
        return self.inv() * other

    def conj(self) -> 'Cyclo':
        # zeta -> zeta^-1 = zeta - zeta^3, zeta^2 -> 1 - zeta^2, zeta^3 -> -zeta^3
        return Cyclo(self.c0 + self.c2, self.c1, -self.c2, -self.c1 - self.c3)

    def embed(self) -> complex:
        return sum(
            (float(c) * ZETA_EMBEDDING ** k for k, c in enumerate(self.coeffs) if c),
            complex(0.0, 0.0)
        )

    def root_of_unity_exponent(self) -> int:
        """Return k in [0, 12) with self == zeta^k."""
        for k in range(12):
            if self == Cyclo.zeta_power(k):
                return k
        raise NotARootOfUnityError(f'{self} is not a power of zeta_12')

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.c0)
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            monomial = {0: '', 1: 'zeta', 2: 'zeta^2', 3: 'zeta^3'}[k]
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(monomial)
            elif c == -1:
                parts.append(f'-{monomial}')
            else:
                parts.append(f'{c}*{monomial}')
        return '(' + ' + '.join(parts).replace('+ -', '- ') + ')'


ZERO = Cyclo()
ONE = Cyclo(Fraction(1))
ZETA = Cyclo.zeta_power(1)
I = Cyclo.zeta_power(3)
OMEGA = Cyclo.zeta_power(4)
OMEGA_BAR = OMEGA.conj()
SQRT3 = Cyclo.of(0, 2, 0, -1)
E_MINUS_I_PI_OVER_3 = Cyclo.zeta_power(-2)

