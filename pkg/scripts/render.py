"""CLI: Render SU(2) coherent beams and the eigenmodes of equivalent states."""

import click
from rich.table import Table

from beams.states import equivalent_state
from optics.intensity import coherent_beam_intensity, spectral_components
from optics.modes import oam_basis
from su2.spin import SpinLabel

from scripts.common import console, grid_from, grid_options, spin_tag
from scripts.images import write_image


@click.command()
@click.option("--T", "T", help="Spin label; the beam uses LG_{0,l} for l = -T..T")
@click.option("--theta", type=float, help="Polar angle of the coherent state (rad)")
@click.option("--phi", type=float, help="Azimuthal angle of the coherent state (rad)")
@grid_options
@click.pass_obj
def render(run, T, theta, phi, extent, resolution, waist):
    """Write the intensity of the coherent beam |n(theta, phi)) as a PGM image."""
    settings = run.section("render", T=T, theta=theta, phi=phi)
    grid, waist = grid_from(run, extent, resolution, waist)
    label = SpinLabel.of(settings["T"])
    theta, phi = float(settings["theta"]), float(settings["phi"])

    image = coherent_beam_intensity(label, theta, phi, grid, waist)
    path = run.output_dir() / f"render_T{spin_tag(label)}_theta{theta:g}_phi{phi:g}.pgm"
    sidecar = write_image(path, image, waist=waist, T=str(label), theta=theta, phi=phi)
    console.print(f"[green]Wrote[/green] {path} (peak intensity {sidecar['max']:.4g})")


@click.command()
@click.option("--T", "T", help="Spin label of the equivalent state")
@click.option("--p", "p", type=float, nargs=3, help="Bloch vector p1 p2 p3")
@grid_options
@click.pass_obj
def spectrum(run, T, p, extent, resolution, waist):
    """Write one image per eigenmode of equivalent_state(p, T), plus their mixture."""
    settings = run.section("spectrum", T=T, p=list(p) if p else None)
    grid, waist = grid_from(run, extent, resolution, waist)
    label = SpinLabel.of(settings["T"])

    M = equivalent_state(settings["p"], label)
    components = spectral_components(M, oam_basis(label, waist=waist), grid)
    out = run.output_dir()
    tag = spin_tag(label)

    table = Table(title=f"Spectrum of the equivalent state, T={label}")
    table.add_column("Mode", style="bold")
    table.add_column("Eigenvalue")
    table.add_column("File")
    for k, (weight, image) in enumerate(zip(components.eigenvalues, components.images)):
        path = out / f"spectrum_T{tag}_k{k}.pgm"
        write_image(path, image, waist=waist, T=str(label), eigenvalue=float(weight))
        table.add_row(str(k), f"{weight:.6f}", path.name)
    path = out / f"spectrum_T{tag}_mixture.pgm"
    write_image(path, components.mixture(), waist=waist, T=str(label))
    table.add_row("mixture", "1", path.name)
    console.print(table)
