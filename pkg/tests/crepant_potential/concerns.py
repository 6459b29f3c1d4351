import json
import random
from fractions import Fraction
from pathlib import Path
from typing import Any

from typer.testing import CliRunner

from crepant_potential.algebra.cyclotomic import Cyclo
from crepant_potential.algebra.ratfun import Poly2, RatFun
from crepant_potential.main import app


def linear(a: 'Fraction | int', b: 'Fraction | int') -> RatFun:
    """a*t1 + b*t2"""
    return RatFun(Poly2.monomial(1, 0, Fraction(a)) + Poly2.monomial(0, 1, Fraction(b)))


def random_cyclo(rng: random.Random, bound: int = 5) -> Cyclo:
    return Cyclo.of(*(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(4)))


def random_poly(rng: random.Random, degree: int = 2) -> Poly2:
    total = Poly2()
    for e1 in range(degree + 1):
        for e2 in range(degree + 1 - e1):
            total = total + Poly2.monomial(e1, e2, rng.randint(-3, 3))
    return total


def write_config(base_path_folder: Path, content: dict[str, Any]) -> Path:
    config_path = base_path_folder / 'test_config.json'
    config_path.write_text(json.dumps(content), encoding='utf-8')
    return config_path


def invoke(*args: str):
    return CliRunner().invoke(app, list(args))
