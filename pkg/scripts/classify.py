"""CLI: Train and evaluate the single-quNit classifier."""

import json
from pathlib import Path

import click
import pandas as pd
from rich.markup import escape
from rich.table import Table

from classifier.dataset import Dataset, make_blobs, split_dataset
from classifier.model import ClassifierModel, TrainConfig, evaluate, train
from classifier.validation import ValidationResult, failure_message, validate_csv
from su2.errors import DatasetError, DimensionMismatch

from scripts.common import console

MAX_LISTED = 10


def print_validation(path, result: ValidationResult):
    """Class balance table followed by the first row errors and every warning."""
    counts = result.stats.get("class_counts", {})
    total = sum(counts.values())
    table = Table(title=f"{Path(path).name}: {'passed' if result.passed else 'failed'}")
    table.add_column("label", justify="right")
    table.add_column("rows", justify="right")
    table.add_column("share", justify="right")
    for label, count in sorted(counts.items()):
        table.add_row(str(label), str(count), f"{count / total:.1%}")
    console.print(table)
    console.print(result.summary())

    for err in result.format_errors[:MAX_LISTED]:
        console.print(f"  [red]-[/red] {escape(err)}")
    if len(result.format_errors) > MAX_LISTED:
        console.print(f"  ... {len(result.format_errors) - MAX_LISTED} more")
    for warn in result.quality_warnings:
        console.print(f"  [yellow]![/yellow] {escape(warn)}")


def load_dataset(run, path, n_classes: int = None) -> Dataset:
    """Validate ``path``; the report is shown on failure or with --verbose."""
    frame, result = validate_csv(path, n_classes)
    if run.verbose or not result.passed:
        print_validation(path, result)
    if not result.passed:
        raise DatasetError(failure_message(result), path=str(path))
    return Dataset.from_frame(frame, n_classes or result.stats["n_classes"])


@click.group()
def classify():
    """Variational quNit classifier."""


@classify.command("train")
@click.argument("dataset_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--model", "model_path", type=click.Path(dir_okay=False), help="Model JSON to write")
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False), help="Loss-trace CSV to write")
@click.option("--lr", "learning_rate", type=float, help="Learning rate")
@click.option("--epochs", type=int, help="Gradient-descent epochs")
@click.option("--fd-step", type=float, help="Finite-difference step")
@click.option("--train-fraction", type=float, help="Share of rows used for training")
@click.pass_obj
def train_command(run, dataset_path, model_path, trace_path, learning_rate, epochs, fd_step, train_fraction):
    """Fit a model to DATASET_PATH (CSV f1..fd,label) and write it as JSON."""
    settings = run.section(
        "classifier",
        learning_rate=learning_rate, epochs=epochs, fd_step=fd_step, train_fraction=train_fraction,
    )
    dataset = load_dataset(run, dataset_path)
    train_set, test_set = split_dataset(dataset, float(settings["train_fraction"]), run.seed)
    console.print(
        f"Training on {len(train_set)} of {len(dataset)} rows "
        f"(d={dataset.d}, N={dataset.n_classes}, seed={run.seed})"
    )

    config = TrainConfig(
        learning_rate=float(settings["learning_rate"]),
        epochs=int(settings["epochs"]),
        fd_step=float(settings["fd_step"]),
        seed=run.seed,
        progress=run.verbose,
    )
    model = ClassifierModel.initialise(dataset.n_classes, dataset.d, config.seed)
    model, trace = train(model, train_set, config)

    out = run.output_dir()
    model_path = model.save(Path(model_path) if model_path else out / "model.json")
    trace_path = Path(trace_path) if trace_path else out / "loss_trace.csv"
    pd.DataFrame(trace.rows(), columns=["epoch", "loss", "accuracy"]).to_csv(trace_path, index=False)

    summary = {
        "model": str(model_path),
        "trace": str(trace_path),
        "loss": trace.losses[-1],
        "train_accuracy": trace.accuracies[-1],
    }
    if len(test_set):
        summary["test_accuracy"] = evaluate(model, test_set)["accuracy"]
    console.print(f"[green]Final loss {summary['loss']:.4f}, train accuracy {summary['train_accuracy']:.3f}[/green]")
    click.echo(json.dumps(summary, indent=2))


@classify.command("eval")
@click.argument("dataset_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("model_path", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def eval_command(run, dataset_path, model_path):
    """Report accuracy and confusion matrix of MODEL_PATH on DATASET_PATH."""
    model = ClassifierModel.load(model_path)
    dataset = load_dataset(run, dataset_path, n_classes=model.N)
    if dataset.d != model.d:
        raise DimensionMismatch(f"model expects {model.d} features, dataset has {dataset.d}", path=dataset_path)

    metrics = evaluate(model, dataset)
    path = run.output_dir() / "metrics.json"
    with open(path, "w") as f:
        json.dump(metrics, f, indent=2)
    console.print(f"Accuracy {metrics['accuracy']:.3f} on {len(dataset)} rows")
    click.echo(json.dumps(metrics, indent=2))


@classify.command("check")
@click.argument("dataset_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--classes", "n_classes", type=int, help="Expected number of classes N")
def check_command(dataset_path, n_classes):
    """Validate DATASET_PATH and show its class balance without training."""
    _, result = validate_csv(dataset_path, n_classes)
    print_validation(dataset_path, result)
    if not result.passed:
        raise DatasetError(failure_message(result), path=dataset_path)

    report = {
        "rows": result.total_records,
        "d": result.stats["d"],
        "n_classes": result.stats["n_classes"],
        "class_counts": {str(k): v for k, v in sorted(result.stats["class_counts"].items())},
        "warnings": result.quality_warnings,
    }
    click.echo(json.dumps(report, indent=2))

@classify.command("blobs")
@click.option("--n", "n", type=int, default=200, show_default=True, help="Number of points")
@click.option("--seed", "blob_seed", type=int, default=7, show_default=True, help="Sampling seed")
@click.pass_obj
def blobs_command(run, n, blob_seed):
    """Write the two-Gaussian-blob toy dataset to blobs.csv."""
    path = make_blobs(n, blob_seed).save(run.output_dir() / "blobs.csv")
    console.print(f"[green]Wrote[/green] {n} rows to {path}")
