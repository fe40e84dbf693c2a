"""CLI: Separability table of the Werner family."""

import click
import pandas as pd
from rich.table import Table

from beams.separability import werner_table

from scripts.common import console

COLUMNS = ["alpha", "T", "separable", "ppt_min_eig", "mixedness", "t_min"]


@click.command()
@click.option("--alpha", "alphas", type=float, multiple=True, help="Werner parameter (repeatable)")
@click.option("--T", "spins", multiple=True, help="Spin label such as 1/2 or 2 (repeatable)")
@click.pass_obj
def werner(run, alphas, spins):
    """Tabulate separability, PPT edge, mixedness and T_min for each (alpha, T)."""
    settings = run.section("werner", alphas=list(alphas) or None, spins=list(spins) or None)
    rows = werner_table(settings["alphas"], settings["spins"])

    frame = pd.DataFrame(rows, columns=COLUMNS)
    path = run.output_dir() / "werner.csv"
    frame.to_csv(path, index=False)

    table = Table(title="Werner family")
    for column in COLUMNS:
        table.add_column(column)
    for row in rows:
        separable = "[green]yes[/green]" if row["separable"] else "[red]no[/red]"
        table.add_row(
            f"{row['alpha']:g}", row["T"], separable,
            f"{row['ppt_min_eig']:.6f}", f"{row['mixedness']:.6f}", row["t_min"],
        )
    console.print(table)
    console.print(f"[green]Wrote[/green] {len(rows)} rows to {path}")
