import csv
import io
import json
from fractions import Fraction
from typing import Any, Mapping

from ..algebra.mpseries import Series


class AssignmentError(ValueError):
    pass


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def parse_assignments(raw: str) -> dict[str, str]:
    """Parse `k=v,k=v` into a mapping, keeping the values as strings."""
    assignments: dict[str, str] = {}
    for item in filter(None, (part.strip() for part in raw.split(','))):
        name, sep, value = item.partition('=')
        if not sep or not name.strip() or not value.strip():
            raise AssignmentError(f'"{item}" is not of the form name=value')
        assignments[name.strip()] = value.strip()
    return assignments


def parse_evaluation_point(
    assignments: Mapping[str, str | int | float]
) -> tuple[Fraction, Fraction, dict[str, complex]]:
    """Exact weights t1, t2 and floating values of the series variables."""
    try:
        t1, t2 = Fraction(str(assignments['t1'])), Fraction(str(assignments['t2']))
    except KeyError as e:
        raise AssignmentError(f'missing equivariant weight {e.args[0]}') from None
    except ValueError as e:
        raise AssignmentError(str(e)) from None

    values: dict[str, complex] = {}
    for name, raw in assignments.items():
        if name in ('t1', 't2'):
            continue
        try:
            values[name] = complex(str(raw).replace('i', 'j'))
        except ValueError:
            raise AssignmentError(f'"{raw}" is not a number') from None
    return t1, t2, values


def format_float(value: float) -> str:
    return f'{value:.15g}'


def complex_to_json(value: complex) -> dict[str, str]:
    return {'re': format_float(value.real), 'im': format_float(value.imag)}


def sections_to_json(sections: Mapping[str, Series]) -> dict:
    """The summed series in the Series schema, the selected parts under `sections`."""
    series = list(sections.values())
    total = series[0]
    for section in series[1:]:
        total = total + section
    return {
        **total.to_json(),
        'sections': {name: section.to_json()['terms'] for name, section in sections.items()}
    }


def sections_to_csv(sections: Mapping[str, Series]) -> str:
    varset = next(iter(sections.values())).varset
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['part', *varset.names, 'num', 'den'])
    for name, series in sections.items():
        for exponents, coeff in series.sorted_terms():
            writer.writerow([name, *exponents, str(coeff.num), str(coeff.den)])
    return buffer.getvalue()
