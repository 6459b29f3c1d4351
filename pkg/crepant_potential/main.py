import json
import logging
import logging.handlers
from enum import StrEnum
from pathlib import Path
from typing import Annotated, Any, Optional

import typer
from pydantic import ValidationError
from rich.logging import RichHandler

from .lib.serialization import AssignmentError, parse_assignments
from .lib.ui_factory import ProgressUIFactory
from .lib.util import ConsoleLoggerFilter
from .models.invariant_key import CohClass
from .models.report import Suite
from .services.potentials import Part, classes_of_exponents
from .settings import Settings

app = typer.Typer()

logger = logging.getLogger(__name__)

LogLevel = StrEnum('LogLevel', ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])
Format = StrEnum('Format', ['json', 'csv'])

USAGE_ERROR = 2

config_path: Optional[Path] = None


def load_settings(**overrides: Any) -> Settings:
    try:
        return Settings.load(config_path, **overrides)
    except (ValidationError, json.JSONDecodeError, OSError) as e:
        logger.error('invalid configuration: %s', e)
        raise typer.Exit(USAGE_ERROR)


def exit_with(code: int) -> None:
    if code:
        raise typer.Exit(code)


QmaxOption = Annotated[Optional[int], typer.Option(min=0, help='Curve degree cap')]
ZorderOption = Annotated[Optional[int], typer.Option(min=0, help='Cap of z0, z1, z2')]
UorderOption = Annotated[Optional[int], typer.Option(min=0, help='Cap of u in the extended potential')]
ExtendedOption = Annotated[Optional[bool], typer.Option('--extended/--not-extended', help='Substitute z2 -> z2 + u')]
PartOption = Annotated[Optional[Part], typer.Option(help='Part of the potential')]
OutOption = Annotated[Optional[Path], typer.Option(writable=True, dir_okay=False, help='Write output to this file')]


@app.command('potential')
def potential(
    qmax: QmaxOption = None,
    zorder: ZorderOption = None,
    uorder: UorderOption = None,
    extended: ExtendedOption = None,
    part: PartOption = None,
    format: Annotated[Optional[Format], typer.Option(help='Output format')] = None,
    out: OutOption = None
):
    """Print the truncated potential as sorted term records"""
    from .commands.potential import command
    config = load_settings(
        qmax=qmax, zorder=zorder, uorder=uorder, extended=extended, part=part,
        format=format.value if format else None
    )
    exit_with(command(config, out))


@app.command('invariants')
def invariants(
    degree: Annotated[int, typer.Option(min=0, help='Curve degree d')] = 0,
    n1: Annotated[int, typer.Option(min=0, help='Number of H insertions')] = 0,
    n2: Annotated[int, typer.Option(min=0, help='Number of S insertions')] = 0,
    classes: Annotated[Optional[str], typer.Option(help='Insertions among 1, H, S, e.g. 1,H,H')] = None,
    out: OutOption = None
):
    """Print one invariant as an exact rational function of t1, t2"""
    from .commands.invariants import command
    try:
        insertions = (
            [CohClass.parse(raw) for raw in classes.split(',') if raw.strip()] if classes is not None
            else list(classes_of_exponents((0, n1, n2)))
        )
    except ValueError as e:
        logger.error('invalid insertions "%s": %s', classes, e)
        raise typer.Exit(USAGE_ERROR)
    exit_with(command(degree, insertions, out))


@app.command('verify')
def verify(
    suite: Annotated[Optional[list[Suite]], typer.Option(help='Suites to run')] = None,
    qmax: QmaxOption = None,
    zorder: ZorderOption = None,
    uorder: UorderOption = None,
    out: OutOption = None
):
    """Run verification suites, exit 0 iff every asserted case passes"""
    from .commands.verify import command
    config = load_settings(suites=suite or None, qmax=qmax, zorder=zorder, uorder=uorder)
    exit_with(command(config, out))


@app.command('eval')
def evaluate(
    at: Annotated[Optional[str], typer.Option(help='Evaluation point, e.g. t1=1,t2=1,z0=1')] = None,
    qmax: QmaxOption = None,
    zorder: ZorderOption = None,
    uorder: UorderOption = None,
    extended: ExtendedOption = None,
    part: PartOption = None,
    out: OutOption = None
):
    """Evaluate the truncated potential numerically (depends on the truncation orders)"""
    from .commands.eval import command
    try:
        point = parse_assignments(at) if at is not None else None
    except AssignmentError as e:
        logger.error('%s', e)
        raise typer.Exit(USAGE_ERROR)
    config = load_settings(qmax=qmax, zorder=zorder, uorder=uorder, extended=extended, part=part, at=point)
    exit_with(command(config, out))


def version_callback(value: bool):
    if value:
        from importlib.metadata import version
        print(f"crepant_potential Version: {version('crepant_potential')}")
        raise typer.Exit()


@app.callback()
def main(
    log_level: Annotated[LogLevel, typer.Option()] = LogLevel.INFO,
    config: Annotated[Optional[Path], typer.Option(
        exists=True, dir_okay=False, readable=True, help='JSON config, flags override its values'
    )] = None,
    version: Annotated[Optional[bool], typer.Option('--version', callback=version_callback)] = None
):
    """Available commands:"""
    global config_path
    config_path = config

    ch = RichHandler(rich_tracebacks=True, console=ProgressUIFactory.console)
    ch.setFormatter(logging.Formatter('%(message)s'))
    ch.addFilter(ConsoleLoggerFilter())
    handlers: list[logging.Handler] = [ch]

    settings = load_settings()
    if settings.Logger:
        fh = logging.handlers.TimedRotatingFileHandler(filename=settings.Logger.file_path)
        fh.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        handlers.append(fh)

    logging.basicConfig(level=log_level.name, handlers=handlers, force=True)
