"""Command-line entry point: generate, train, evaluate, assess, serve.

Option values resolve with this precedence (highest wins):
MINDSCREEN_* environment variables, then command-line flags, then the
--config file (TOML or JSON, one section per subcommand), then built-in
defaults.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .bundle import load_bundle, save_bundle, train_bundle
from .dataset import RespondentRecord, load_dataset, parse_answers, save_dataset
from .errors import MindscreenError
from .evaluation import CLASSIFIER_KINDS, cross_validate, evaluate_holdout, select_model
from .schema import builtin_schema
from .service.app import DISCLAIMER, create_app
from .service.config import read_config_file
from .service.store import AssessmentStore
from .synth import GeneratorConfig, generate, load_generator_config

ENV_PREFIX = "MINDSCREEN_"

PRECEDENCE_NOTE = (
    "Option precedence, highest first: MINDSCREEN_<OPTION> environment "
    "variables, command-line flags, the --config file, built-in defaults."
)


def _resolve(ctx, section: str, name: str, flag_value, cast, default):
    env_value = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if env_value is not None:
        return cast(env_value)
    if flag_value is not None:
        return flag_value
    config = ctx.obj.get("config", {}) if ctx.obj else {}
    section_values = config.get(section, {})
    if name in section_values:
        return cast(section_values[name])
    return default


@click.group(epilog=PRECEDENCE_NOTE)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="TOML or JSON config file with per-command sections.")
@click.pass_context
def main(ctx, config_path):
    """Behavioral-disorder screening toolkit."""
    ctx.ensure_object(dict)
    ctx.obj["config"] = read_config_file(config_path) if config_path else {}


@main.command("generate")
@click.option("--n", type=int, default=None, help="Cohort size (default 1000, minimum 30).")
@click.option("--seed", type=int, default=None, help="RNG seed (default 42).")
@click.option("--separability", type=float, default=None,
              help="Class separation strength in [0, 1] (default 0.6).")
@click.option("--priors", type=str, default=None,
              help="Comma-separated class priors, e.g. 0.61,0.29,0.10.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Output CSV path (default cohort.csv).")
@click.pass_context
def cmd_generate(ctx, n, seed, separability, priors, out):
    """Write a labeled synthetic cohort CSV."""
    section = ctx.obj.get("config", {}).get("generate", {})
    try:
        if "config_file" in section:
            config = load_generator_config(section["config_file"])
        else:
            kwargs = {}
            n_value = _resolve(ctx, "generate", "n", n, int, 1000)
            seed_value = _resolve(ctx, "generate", "seed", seed, int, 42)
            sep_value = _resolve(ctx, "generate", "separability", separability, float, 0.6)
            priors_value = _resolve(ctx, "generate", "priors", priors, lambda v: v, None)
            if priors_value is not None:
                if isinstance(priors_value, str):
                    kwargs["class_priors"] = tuple(float(p) for p in priors_value.split(","))
                else:
                    kwargs["class_priors"] = tuple(float(p) for p in priors_value)
            config = GeneratorConfig(n=n_value, seed=seed_value,
                                     separability=sep_value, **kwargs)
        dataset = generate(config)
    except (ValueError, MindscreenError) as exc:
        raise click.ClickException(str(exc)) from exc
    out_path = _resolve(ctx, "generate", "out", out, str, "cohort.csv")
    save_dataset(dataset, out_path)
    click.echo(f"wrote {len(dataset)} records to {out_path} (seed {config.seed})", err=True)


@main.command("train")
@click.option("--kind", type=click.Choice(CLASSIFIER_KINDS), default=None,
              help="Classifier to train (knn or svm).")
@click.option("--data", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Labeled cohort CSV.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Model file path (default screening.model).")
@click.option("--k", type=int, default=None, help="KNN neighbor count (default 3).")
@click.option("--c", "--C", "svm_c", type=float, default=None,
              help="SVM soft-margin C parameter (default 1.0).")
@click.option("--tol", type=float, default=None, help="SVM KKT tolerance (default 1e-3).")
@click.option("--max-epochs", type=int, default=None,
              help="SVM optimization pass limit (default 10000).")
@click.option("--seed", type=int, default=None, help="Training seed (default 42).")
@click.pass_context
def cmd_train(ctx, kind, data, out, k, svm_c, tol, max_epochs, seed):
    """Fit the preprocessor and one classifier; write a model file."""
    kind = _resolve(ctx, "train", "kind", kind, str, "knn")
    if kind not in CLASSIFIER_KINDS:
        raise click.UsageError(f"unknown classifier kind: {kind!r}")
    out_path = _resolve(ctx, "train", "out", out, str, "screening.model")
    try:
        dataset = load_dataset(data, builtin_schema())
        bundle = train_bundle(
            dataset, kind,
            knn_k=_resolve(ctx, "train", "k", k, int, 3),
            svm_c=_resolve(ctx, "train", "c", svm_c, float, 1.0),
            svm_tol=_resolve(ctx, "train", "tol", tol, float, 1e-3),
            svm_max_epochs=_resolve(ctx, "train", "max_epochs", max_epochs, int, 10_000),
            seed=_resolve(ctx, "train", "seed", seed, int, 42),
        )
        save_bundle(bundle, out_path)
    except (ValueError, MindscreenError) as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(f"trained {kind} model on {len(dataset)} records -> {out_path}", err=True)


@main.command("evaluate")
@click.option("--kind", type=click.Choice((*CLASSIFIER_KINDS, "both")), default=None,
              help="Classifier(s) to evaluate (default both).")
@click.option("--data", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--folds", type=int, default=None, help="Cross-validation folds (default 10).")
@click.option("--test-fraction", type=float, default=None,
              help="Holdout test fraction (default 0.2).")
@click.option("--mode", type=click.Choice(("holdout", "cv", "both")), default=None,
              help="Evaluation style (default both).")
@click.option("--table-mode", is_flag=True, default=False,
              help="Hold out exactly 100 records so report supports total 100.")
@click.option("--stratified", is_flag=True, default=False,
              help="Keep label proportions balanced across folds.")
@click.option("--k", type=int, default=None, help="KNN neighbor count (default 3).")
@click.option("--c", "--C", "svm_c", type=float, default=None,
              help="SVM soft-margin C parameter (default 1.0).")
@click.option("--tol", type=float, default=None, help="SVM KKT tolerance (default 1e-3).")
@click.option("--seed", type=int, default=None, help="Evaluation seed (default 42).")
@click.option("--json-out", type=click.Path(dir_okay=False), default=None,
              help="Also write full-precision results as JSON.")
@click.pass_context
def cmd_evaluate(ctx, kind, data, folds, test_fraction, mode, table_mode,
                 stratified, k, svm_c, tol, seed, json_out):
    """Evaluate classifier(s) with holdout and/or k-fold cross-validation."""
    kind = _resolve(ctx, "evaluate", "kind", kind, str, "both")
    folds = _resolve(ctx, "evaluate", "folds", folds, int, 10)
    test_fraction = _resolve(ctx, "evaluate", "test_fraction", test_fraction, float, 0.2)
    mode = _resolve(ctx, "evaluate", "mode", mode, str, "both")
    seed = _resolve(ctx, "evaluate", "seed", seed, int, 42)
    knn_k = _resolve(ctx, "evaluate", "k", k, int, 3)
    svm_c = _resolve(ctx, "evaluate", "c", svm_c, float, 1.0)
    svm_tol = _resolve(ctx, "evaluate", "tol", tol, float, 1e-3)
    if folds < 2:
        raise click.UsageError(f"--folds must be at least 2, got {folds}")
    kinds = list(CLASSIFIER_KINDS) if kind == "both" else [kind]

    try:
        dataset = load_dataset(data, builtin_schema())
    except MindscreenError as exc:
        raise click.ClickException(str(exc)) from exc

    click.echo(f"seed: {seed}")
    holdout_reports = {}
    cv_results = {}
    try:
        for each in kinds:
            if mode in ("holdout", "both"):
                report = evaluate_holdout(
                    dataset, each, test_fraction=test_fraction, seed=seed,
                    test_size=100 if table_mode else None,
                    knn_k=knn_k, svm_c=svm_c, svm_tol=svm_tol)
                holdout_reports[each] = report
                label = "100-sample holdout" if table_mode else f"{test_fraction:.0%} holdout"
                click.echo(f"\n== {each} : {label} ==")
                click.echo(report.to_text())
            if mode in ("cv", "both"):
                result = cross_validate(dataset, each, k=folds, seed=seed,
                                        stratified=stratified, knn_k=knn_k,
                                        svm_c=svm_c, svm_tol=svm_tol)
                cv_results[each] = result
                click.echo(f"\n== {each} : {folds}-fold cross-validation ==")
                click.echo(f"weighted F1 per fold: "
                           + " ".join(f"{r.weighted_f1:.3f}" for r in result.fold_reports))
                click.echo(f"mean weighted F1: {result.mean_weighted_f1:.4f} "
                           f"(std {result.std_weighted_f1:.4f})")
                click.echo("pooled over folds:")
                click.echo(result.pooled.to_text())
    except (ValueError, MindscreenError) as exc:
        raise click.ClickException(str(exc)) from exc

    selection = None
    if len(kinds) > 1:
        basis = {k: r.pooled for k, r in cv_results.items()} or holdout_reports
        selection = select_model(basis)
        click.echo(f"\nselected: {selection}")

    if json_out:
        payload = {
            "seed": seed,
            "holdout": {k: r.to_dict() for k, r in holdout_reports.items()},
            "cross_validation": {k: r.to_dict() for k, r in cv_results.items()},
        }
        if selection:
            payload["selected"] = selection
        Path(json_out).write_text(json.dumps(payload, indent=2), encoding="utf-8")
        click.echo(f"wrote JSON results to {json_out}", err=True)


@main.command("assess")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Trained model file.")
@click.option("--answers", "answers_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="JSON file with questionnaire answers.")
@click.option("--set", "assignments", multiple=True, metavar="FEATURE=VALUE",
              help="Set one answer inline; repeatable.")
@click.pass_context
def cmd_assess(ctx, model_path, answers_path, assignments):
    """One-shot offline detection for a single set of answers."""
    answers: dict = {}
    if answers_path:
        payload = json.loads(Path(answers_path).read_text(encoding="utf-8"))
        answers.update(payload.get("answers", payload))
    for assignment in assignments:
        if "=" not in assignment:
            raise click.UsageError(f"--set expects FEATURE=VALUE, got {assignment!r}")
        feature, value = assignment.split("=", 1)
        answers[feature.strip()] = value.strip()
    if not answers:
        raise click.UsageError("provide answers with --answers FILE and/or --set FEATURE=VALUE")

    try:
        bundle = load_bundle(model_path)
    except MindscreenError as exc:
        raise click.ClickException(str(exc)) from exc
    schema = builtin_schema()
    values, violations = parse_answers(answers, schema)
    if violations:
        for violation in violations:
            click.echo(f"invalid answer - {violation}", err=True)
        raise click.ClickException("answers failed validation")
    label, _ = bundle.predict_record(RespondentRecord(id="cli", values=values))
    click.echo(f"code={int(label)} {label.slug}")
    click.echo(f"disclaimer: {DISCLAIMER}")


@main.command("serve")
@click.option("--model", "model_path", type=click.Path(dir_okay=False), default=None,
              help="Trained model file (default screening.model).")
@click.option("--port", type=int, default=None, help="Listen port (default 8000).")
@click.option("--host", type=str, default=None, help="Bind address (default 127.0.0.1).")
@click.option("--log", "log_path", type=click.Path(dir_okay=False), default=None,
              help="Assessment log path (default assessments.jsonl).")
@click.option("--frontend", "frontend_dir", type=click.Path(file_okay=False), default=None,
              help="Optional directory of built UI assets to serve at /.")
@click.pass_context
def cmd_serve(ctx, model_path, port, host, log_path, frontend_dir):
    """Run the screening HTTP service."""
    import uvicorn

    model_path = _resolve(ctx, "serve", "model", model_path, str, "screening.model")
    port = _resolve(ctx, "serve", "port", port, int, 8000)
    host = _resolve(ctx, "serve", "host", host, str, "127.0.0.1")
    log_path = _resolve(ctx, "serve", "log", log_path, str, "assessments.jsonl")
    frontend_dir = _resolve(ctx, "serve", "frontend", frontend_dir, str, None)
    try:
        bundle = load_bundle(model_path)
    except MindscreenError as exc:
        raise click.ClickException(str(exc)) from exc
    store = AssessmentStore(log_path)
    app = create_app(bundle, store, frontend_dir=frontend_dir)
    click.echo(f"serving {bundle.kind} model on http://{host}:{port} (log: {log_path})",
               err=True)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
