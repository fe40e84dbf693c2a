"""CLI: Path-to-OAM transfer through a Werner channel."""

import json
from dataclasses import asdict

import click
import jsonlines

from protocol.transfer import BellBeam, transfer


@click.command()
@click.option("--p", "p", type=float, nargs=3, help="Input Bloch vector p1 p2 p3")
@click.option("--alpha", type=float, help="Werner channel parameter")
@click.option("--T", "T", help="Spin label of the OAM subspace")
@click.option("--beam", type=click.IntRange(1, 4), help="Bell beam found by the measurement")
@click.option("--all-beams", is_flag=True, help="Run all four Bell outcomes")
@click.pass_obj
def protocol(run, p, alpha, T, beam, all_beams):
    """Print the transfer records as a JSON array and append them to protocol.jsonl."""
    settings = run.section("protocol", p=list(p) if p else None, alpha=alpha, T=T, beam=beam)
    beams = BellBeam.all() if all_beams else [BellBeam(int(settings["beam"]))]
    records = [
        asdict(transfer(settings["p"], float(settings["alpha"]), settings["T"], b))
        for b in beams
    ]

    with jsonlines.open(run.output_dir() / "protocol.jsonl", mode="a") as writer:
        writer.write_all(records)
    click.echo(json.dumps(records, indent=2))
