"""CLI: Intensity-difference images for transferred two-mode beams."""

import click
import pandas as pd
from rich.table import Table

from optics.intensity import i_diff

from scripts.common import console, grid_from, grid_options
from scripts.images import write_image


@click.command()
@click.option("--alpha", "alphas", type=float, multiple=True, help="Channel parameter (repeatable)")
@click.option("--theta", "thetas", type=float, multiple=True, help="Input polar angle (repeatable)")
@grid_options
@click.pass_obj
def idiff(run, alphas, thetas, extent, resolution, waist):
    """Write one I_diff image per (alpha, theta) and a CSV of their peak magnitudes."""
    settings = run.section("idiff", alphas=list(alphas) or None, thetas=list(thetas) or None)
    grid, waist = grid_from(run, extent, resolution, waist)
    out = run.output_dir()

    rows = []
    for alpha in settings["alphas"]:
        for theta in settings["thetas"]:
            image = i_diff(float(alpha), float(theta), grid, waist)
            path = out / f"idiff_a{alpha:g}_t{theta:g}.pgm"
            write_image(path, image, waist=waist, alpha=float(alpha), theta=float(theta))
            rows.append({
                "alpha": float(alpha),
                "theta": float(theta),
                "peak": image.peak(),
                "integral": image.total(),
                "file": path.name,
            })

    frame = pd.DataFrame(rows, columns=["alpha", "theta", "peak", "integral", "file"])
    csv_path = out / "idiff_scale.csv"
    frame.to_csv(csv_path, index=False)

    table = Table(title="Peak |I_diff|")
    for column in ("alpha", "theta", "peak"):
        table.add_column(column)
    for row in rows:
        table.add_row(f"{row['alpha']:g}", f"{row['theta']:g}", f"{row['peak']:.4f}")
    console.print(table)
    console.print(f"[green]Wrote[/green] {csv_path}")
