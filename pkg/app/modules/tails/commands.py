import click
import pandas as pd

from app.shared.certificates import line
from app.shared.cli_options import common_options, emit, write_text
from app.shared.errors import DomainError
from .bounds import tail_table

DEFAULT_GRID = "100,1000,10000,74920.83,260877,446000"


@click.command("tails")
@click.option("--grid", default=DEFAULT_GRID, show_default=True, help="Alturas T separadas por comas.")
@click.option("--sharp", is_flag=True, help="Agrega la cota afinada de B (T ≥ 80000).")
@click.option("--table", "as_table", is_flag=True, help="Imprime una tabla en lugar de líneas clave = valor.")
@common_options
def tails(config, fmt, grid, sharp, as_table):
    """Cotas cerradas de colas sobre ceros en una grilla de alturas"""
    try:
        heights = [float(x) for x in grid.split(",") if x.strip()]
    except ValueError as e:
        raise DomainError(f"grilla mal formada: {grid!r}") from e
    if not heights:
        raise DomainError("la grilla de alturas está vacía")

    rows = [tail_table(T, sharp=sharp) for T in heights]
    if as_table:
        frame = pd.DataFrame(rows)
        write_text(config, frame.to_csv(index=False, float_format="%.17g"))
        return
    items = []
    for row in rows:
        for key, value in row.items():
            items.append(line(key, value, "=" if key == "T" else "≤"))
    emit(config, items, fmt)
