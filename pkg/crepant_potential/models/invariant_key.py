from dataclasses import dataclass
from enum import StrEnum


class CohClass(StrEnum):
    ONE = '1'
    H = 'H'
    S = 'S'

    @property
    def variable(self) -> str:
        return {CohClass.ONE: 'z0', CohClass.H: 'z1', CohClass.S: 'z2'}[self]

    @classmethod
    def parse(cls, raw: str) -> 'CohClass':
        return cls(raw.strip().upper())


COH_CLASS_ORDER = [CohClass.ONE, CohClass.H, CohClass.S]


def canonical_classes(classes: 'tuple[CohClass, ...] | list[CohClass]') -> tuple[CohClass, ...]:
    return tuple(sorted(classes, key=COH_CLASS_ORDER.index))


class ParityError(ValueError):
    pass


@dataclass(frozen=True)
class LocalInvariantKey:
    """Key of I_{d,n}: curve degree d and number n of twisted insertions."""
    d: int
    n: int

    def __post_init__(self):
        if self.d < 0 or self.n < 0:
            raise ValueError(f'negative degree or insertion count in {self}')
        if self.n % 2 != self.d % 2:
            raise ParityError(f'{self.n} twisted insertions are not allowed in degree {self.d}')

    @property
    def g(self) -> int:
        """Genus of the hyperelliptic cover: n = 2g+1 in odd degree, n = 2g+2 otherwise."""
        return (self.n - 1) // 2 if self.d % 2 else (self.n - 2) // 2

    @classmethod
    def from_genus(cls, d: int, g: int) -> 'LocalInvariantKey':
        return cls(d, 2 * g + 1 if d % 2 else 2 * g + 2)
