from enum import StrEnum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class Suite(StrEnum):
    ALL = 'all'
    DEGREE0 = 'degree0'
    RESUMMATION = 'resummation'
    ASSEMBLY = 'assembly'
    THEOREM = 'theorem'
    BRACKET = 'bracket'
    RESIDUAL = 'residual'
    COROLLARY = 'corollary'
    COV = 'cov'
    NUMERIC = 'numeric'

    @classmethod
    def expand(cls, suites: list['Suite']) -> list['Suite']:
        """Selected suites in canonical order, `all` standing for every suite."""
        selected = set(cls) - {cls.ALL} if cls.ALL in suites else set(suites)
        return [suite for suite in cls if suite in selected]


class Case(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    key: dict[str, int | str]
    passed: bool = Field(alias='pass')
    first_mismatch: Optional[list[int]] = None
    # a known discrepancy of the source formulas, surfaced but never failing the run
    reported: bool = False
    note: Optional[str] = None


class Report(BaseModel):
    suite: str
    cases: list[Case] = []

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases if not case.reported)

    def add(
        self,
        key: dict[str, int | str],
        passed: bool,
        first_mismatch: Optional[tuple[int, ...]] = None,
        *,
        reported: bool = False,
        note: Optional[str] = None
    ) -> Case:
        case = Case(
            key=key,
            passed=passed,
            first_mismatch=list(first_mismatch) if first_mismatch is not None else None,
            reported=reported,
            note=note
        )
        self.cases.append(case)
        return case

    def extend(self, other: 'Report') -> 'Report':
        self.cases.extend(other.cases)
        return self

    def to_json(self) -> dict:
        return self.model_dump(by_alias=True)
