from pathlib import Path
from typing import Optional

import typer


def emit(text: str, out: Optional[Path] = None) -> None:
    """Exact output goes to `out` when given, to stdout otherwise."""
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding='utf-8')
