"""Options and helpers shared by the command modules."""

import logging

import click
from rich.console import Console
from rich.logging import RichHandler

from optics.modes import GridSpec
from su2.spin import SpinLabel

# stdout carries machine-readable output only
console = Console(stderr=True)


def setup_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        handlers=[RichHandler(console=console, rich_tracebacks=True)],
    )


def grid_options(command):
    options = [
        click.option("--extent", type=float, help="Grid half-width in waist units"),
        click.option("--resolution", type=int, help="Pixels per side"),
        click.option("--waist", type=float, help="Beam waist"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def grid_from(run, extent, resolution, waist) -> tuple[GridSpec, float]:
    settings = run.section("grid", extent=extent, resolution=resolution, waist=waist)
    grid = GridSpec(extent=float(settings["extent"]), resolution=int(settings["resolution"]))
    return grid, float(settings["waist"])


def spin_tag(T) -> str:
    """File-name form of a spin label: 1, 3_2."""
    return str(SpinLabel.of(T)).replace("/", "_")
