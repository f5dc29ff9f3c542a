import sys
from functools import wraps

import click

from nnmwe import __version__, configure_logging
from nnmwe.config import Config
from nnmwe.exceptions import ConfigError
from nnmwe.models.cluster import ClassifierMode
from nnmwe.patterns.structural.decorator import EXIT_CONFIG_ERROR
from nnmwe.patterns.structural.facade import PipelineFacade

# CLI flag → Config key
OPTION_KEYS = {
    "corpus": "CORPUS",
    "format": "CORPUS_FORMAT",
    "lexicon": "LEXICON",
    "gold": "GOLD",
    "gold2": "GOLD2",
    "gold3": "GOLD3",
    "taxonomy": "TAXONOMY",
    "translations": "TRANSLATIONS",
    "input": "INPUT",
    "out": "OUT",
    "alpha": "ALPHA",
    "beta": "BETA",
    "mu": "MU",
    "min_freq_zero_dim": "MIN_FREQ_ZERO_DIM",
    "prefix_min_length": "PREFIX_MIN_LENGTH",
    "weights": "WEIGHTS",
    "bins": "BINS",
    "cutoffs": "CUTOFFS",
    "seed": "SEED",
    "log_level": "LOG_LEVEL",
}

MODES = [mode.value for mode in ClassifierMode]


def pipeline_options(func):
    """Attach the shared resource, cut-off and output flags to a subcommand."""
    options = [
        click.option("--config", "config_file", type=click.Path(dir_okay=False), help="key=value config file."),
        click.option("--corpus", help="Annotated corpus (TSV, or SSF with --format ssf)."),
        click.option("--format", type=click.Choice(["tsv", "ssf"]), help="Corpus file format."),
        click.option("--lexicon", help="Restructured dictionary file."),
        click.option("--gold", help="Gold labels: m1<TAB>m2<TAB>class."),
        click.option("--gold2", help="Second annotator's gold labels."),
        click.option("--gold3", help="Third annotator's gold labels."),
        click.option("--taxonomy", help="Concept taxonomy: child<TAB>parent."),
        click.option("--translations", help="Translation map: root<TAB>concept."),
        click.option("--input", help="Input file of the stage (candidates, scores, decisions or SSF)."),
        click.option("--out", help="Output directory."),
        click.option("--alpha", type=float, help="Cosine cut-off."),
        click.option("--beta", type=float, help="Euclidean distance cut-off."),
        click.option("--mu", type=float, help="Taxonomy distance cut-off."),
        click.option("--min-freq-zero-dim", type=int, help="Minimum frequency for the zero-dimension cluster rule."),
        click.option("--prefix-min-length", type=int, help="Minimum shared prefix for lexicon fallback matches."),
        click.option("--weights", help="Weights of co-occurrence, phi and significance: c,p,s."),
        click.option("--bins", type=int, help="Number of rank bins."),
        click.option("--cutoffs", help="Comma-separated cut-offs for sweep."),
        click.option("--seed", type=int, help="Seed of the dev/test split."),
        click.option("--log-level", help="Logging level."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run_stage(func):
    """
    Turn a facade stage into a command body.

    The wrapped function receives the facade and the remaining keyword
    arguments and returns the stage result; failures exit with the code
    the stage reports.
    """
    @wraps(func)
    def wrapper(config_file=None, **kwargs):
        overrides = {OPTION_KEYS[name]: kwargs.pop(name) for name in OPTION_KEYS if name in kwargs}
        try:
            config = Config(config_file, **overrides)
            configure_logging(config)
            facade = PipelineFacade(config)
        except ConfigError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_CONFIG_ERROR)

        result = func(facade, **kwargs)
        if not result["success"]:
            click.echo(f"error: {result['message']}", err=True)
            sys.exit(result["exit_code"])
        click.echo(result["message"])
        return result
    return wrapper


@click.group()
@click.version_option(__version__, prog_name="nnmwe")
def cli():
    """Identify noun-noun multiword expressions in an annotated corpus."""


@cli.command()
@pipeline_options
@run_stage
def extract(facade):
    """Extract noun-noun candidates into candidates.tsv."""
    result = facade.extract()
    for name, count in result.get("filter_statistics", {}).items():
        click.echo(f"  {name}: {count}")
    return result


@cli.command()
@pipeline_options
@run_stage
def rank(facade):
    """Score and bin the candidates into scores.tsv."""
    return facade.rank()


@cli.command()
@pipeline_options
@click.option("--mode", type=click.Choice(MODES), help="Decision strategy.")
@run_stage
def classify(facade, mode=None):
    """Decide each candidate into decisions-<mode>.tsv."""
    return facade.classify(mode)


@cli.command(name="eval")
@pipeline_options
@run_stage
def evaluate(facade):
    """Report P/R/F and annotator agreement into report.txt and report.tsv."""
    result = facade.evaluate()
    if result["success"]:
        click.echo(result["report"], nl=False)
    return result


@cli.command()
@pipeline_options
@run_stage
def thesaurus(facade):
    """Dump the noun → headwords index into thesaurus.tsv."""
    return facade.thesaurus()


@cli.command()
@pipeline_options
@click.option("--mode", type=click.Choice([m for m in MODES if m != ClassifierMode.BASELINE.value]),
              help="Decision strategy to tune.")
@run_stage
def sweep(facade, mode=None):
    """Evaluate a classifier at several cut-offs into sweep-<mode>.tsv."""
    result = facade.sweep(mode)
    for cutoff, prf in result.get("rows", []):
        click.echo("  {:g}: P={:.1f} R={:.1f} F={:.1f}".format(cutoff, *prf.rounded()))
    return result


@cli.command()
@pipeline_options
@run_stage
def convert(facade):
    """Convert shallow-parser SSF output into the corpus TSV."""
    return facade.convert()


@cli.command()
@pipeline_options
@run_stage
def split(facade):
    """Split the gold labels into gold-dev.tsv and gold-test.tsv."""
    return facade.split()


@cli.command()
@pipeline_options
@run_stage
def stats(facade):
    """Print lexicon statistics."""
    result = facade.stats()
    for pos_marker, count in result.get("statistics", {}).get("by_pos", {}).items():
        click.echo(f"  {pos_marker}: {count}")
    return result
