"""CLI: Equivalent-beams toolkit.

Run as ``python -m scripts.cli <command>``.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

import click

from scripts.classify import classify
from scripts.common import setup_logging
from scripts.config import RunConfig
from scripts.idiff import idiff
from scripts.render import render, spectrum
from scripts.transfer import protocol
from scripts.werner import werner
from su2.errors import BeamsError

# click 8.2 raises this UsageError subclass to show help for a bare group
NO_ARGS_HELP = getattr(click.exceptions, "NoArgsIsHelpError", ())


def fail(record: dict, status: int = 1):
    click.echo(json.dumps(record), err=True)
    sys.exit(status)


def usage_record(e: click.UsageError) -> dict:
    return {"error": "usage", "message": e.format_message()}


class BeamsGroup(click.Group):
    """Reports library, I/O and usage failures as one JSON line on stderr."""

    def make_context(self, info_name, args, parent=None, **extra):
        # parsing the group's own options happens here, before invoke
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except NO_ARGS_HELP:
            raise
        except click.UsageError as e:
            fail(usage_record(e), status=e.exit_code)

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except BeamsError as e:
            fail(e.to_dict())
        except OSError as e:
            record = {"error": "io_error", "message": e.strerror or str(e)}
            if e.filename:
                record["path"] = str(e.filename)
            fail(record)
        except click.UsageError as e:
            fail(usage_record(e), status=e.exit_code)


@click.group(cls=BeamsGroup)
@click.option("--out", type=click.Path(file_okay=False), help="Output directory")
@click.option("--seed", type=int, help="Seed for model initialisation and dataset splits")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="JSON/YAML overrides")
@click.option("--verbose", "-v", is_flag=True, help="Verbose logging")
@click.pass_context
def main(ctx, out, seed, config_path, verbose):
    """Equivalent beams: coherent beams, Werner channels, transfer protocol and quNit classifier."""
    setup_logging(verbose)
    ctx.obj = RunConfig.build(config_path, out=out, seed=seed, verbose=verbose)


main.add_command(render)
main.add_command(spectrum)
main.add_command(idiff)
main.add_command(werner)
main.add_command(protocol)
main.add_command(classify)


if __name__ == "__main__":
    main()
