"""The ``arrangecount`` command line.

Payloads go to stdout, diagnostics to stderr. Exit codes: 0 success, 1 parse
or usage error, 2 no stable interpolation, 3 budget exceeded, 4 a
verification failed.
"""
from __future__ import annotations

import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click
from pydantic import ValidationError

from arrangecount.charpoly import (
    DEFAULT_PAIRS,
    DEFAULT_PRIMES,
    ClosedForm,
    Conjecture,
    ThresholdNotFound,
    UnionKind,
    closed_form_check,
    cycle_formula_check,
    deletion_restriction_report,
    egf_power_check,
    essentiality_invariance_probe,
    extract_egf_coefficients,
    four_lines_check,
    interpolate_charpoly,
    invariance_check,
    multiplicative_table,
    oracle_triangle_check,
    polynomiality_check,
    probe_conjecture,
    shift_identity_check,
    spot_check_reference,
    verify_union_invariance,
)
from arrangecount.arrangement import ArrangementFamily
from arrangecount.errors import ArrangeCountError, BudgetExceeded
from arrangecount.exactmath import factorial
from arrangecount.finitefield import PrimeSampler
from arrangecount.graphcount import independence_counts
from arrangecount.run.config import THREADS_ENV, RunConfig
from arrangecount.run.output import (
    EXPERIMENTAL,
    charpoly_payload,
    count_payload,
    payload_schema,
    render,
    report_payload,
    table_payload,
)
from arrangecount.run.specs import parse_family, parse_graph, parse_int_list
from arrangecount.util.log import LogManager

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_THRESHOLD = 2
EXIT_BUDGET = 3
EXIT_VERIFICATION = 4

_logger = LogManager.get_logger("Cli")


class VerificationFailed(ArrangeCountError):
    pass


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, ThresholdNotFound):
        return EXIT_THRESHOLD
    if isinstance(exc, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(exc, VerificationFailed):
        return EXIT_VERIFICATION
    return EXIT_USAGE


class ExitCodeGroup(click.Group):
    """Group that maps domain errors onto the documented exit codes."""

    def main(  # type: ignore[override]
        self,
        args: Optional[Sequence[str]] = None,
        prog_name: Optional[str] = None,
        complete_var: Optional[str] = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        try:
            rv = super().main(
                args, prog_name, complete_var, standalone_mode=False, **extra
            )
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.ClickException as exc:
            exc.show()
            code = EXIT_USAGE
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        except (ArrangeCountError, ValidationError) as exc:
            click.echo(f"Error: {exc}", err=True)
            code = _exit_code(exc)
        if standalone_mode:
            sys.exit(code)
        return code


class AliasGroup(click.Group):
    """Group that also resolves a fixed table of short command ids."""

    def __init__(
        self, *args: Any, aliases: Optional[Dict[str, str]] = None, **kwargs: Any
    ) -> None:
        super().__init__(*args, **kwargs)
        self.aliases: Dict[str, str] = dict(aliases or {})

    def get_command(self, ctx: click.Context, cmd_name: str) -> Optional[click.Command]:
        return super().get_command(ctx, self.aliases.get(cmd_name, cmd_name))


# short ids accepted for each check
VERIFY_ALIASES: Dict[str, str] = {
    "thm2.1": "invariance",
    "thm2.2": "egf-power",
    "eq2": "deletion-restriction",
    "thm3.1": "union-multiplicative",
    "cor3.2": "union-ratio",
    "thm3.4": "union-difference",
    "cor3.5": "union-affine",
    "cor3.6": "union-pendant",
    "thm4.1": "shift-catalan",
}
PROBE_ALIASES: Dict[str, str] = {
    "conj5.1": "attached-copies",
    "conj5.2": "attached-cycle",
}


def _ints(text: str) -> Tuple[int, ...]:
    return parse_int_list(text)


def _int_lists(texts: Sequence[str]) -> List[Tuple[int, ...]]:
    return [parse_int_list(t) for t in texts]


def _semicolon_lists(text: str) -> List[Tuple[int, ...]]:
    return [parse_int_list(part) for part in text.split(";") if part.strip()]


def _emit(ctx: click.Context, payload: Any) -> None:
    config: RunConfig = ctx.obj
    click.echo(render(payload, config.output_format), nl=False)


def _finish(
    ctx: click.Context, check: str, params: dict, reports: list, passed: bool
) -> None:
    _emit(ctx, report_payload(check, params, reports, passed))
    if not passed:
        raise VerificationFailed(f"{check} failed for {params}")


@click.group(cls=ExitCodeGroup)
@click.option(
    "--threads",
    type=int,
    default=None,
    help=f"Worker processes (default: ${THREADS_ENV}, then the config file, then 1).",
)
@click.option(
    "--budget-nodes", type=int, default=None, help="Node cap of one enumeration."
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "csv", "text"]),
    default=None,
    help="Rendering of the payload.",
)
@click.option("--seed", type=int, default=None, help="Seed of randomised checks.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="YAML run configuration.",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Level of the stderr diagnostics.",
)
@click.option("--prime-floor", type=int, default=None, help="Samples start above this.")
@click.version_option(package_name="arrangecount")
@click.pass_context
def cli(
    ctx: click.Context,
    threads: Optional[int],
    budget_nodes: Optional[int],
    output_format: Optional[str],
    seed: Optional[int],
    config_path: Optional[str],
    log_level: Optional[str],
    prime_floor: Optional[int],
) -> None:
    """Characteristic polynomials of hyperplane arrangements and
    independent-set counts of the graphs they induce."""
    config = RunConfig.resolve(
        config_path,
        threads=threads,
        budget_nodes=budget_nodes,
        output_format=output_format,
        seed=seed,
        log_level=log_level,
        prime_floor=prime_floor,
    )
    LogManager.set_log_level(config.log_level.upper())
    _logger.debug(f"run configuration {config}")
    ctx.obj = config


@cli.command()
@click.option("--family", "family_spec", required=True, help="e.g. eq1:a=2,3")
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.pass_context
def charpoly(ctx: click.Context, family_spec: str, n: int) -> None:
    """Interpolate the characteristic polynomial of a family in dimension n."""
    config: RunConfig = ctx.obj
    family = parse_family(family_spec)
    sampler = PrimeSampler(config.pipeline.prime_floor)
    result = interpolate_charpoly(family, n, sampler, config)
    _emit(ctx, charpoly_payload(result))


@cli.command()
@click.option("--graph", "graph_spec", required=True, help="e.g. G:a=2,3;k=22")
@click.option("--n", "n", type=click.IntRange(min=0), default=None)
@click.option("--all", "all_sizes", is_flag=True, help="Every size up to --cap.")
@click.option("--cap", type=click.IntRange(min=0), default=None)
@click.pass_context
def count(
    ctx: click.Context,
    graph_spec: str,
    n: Optional[int],
    all_sizes: bool,
    cap: Optional[int],
) -> None:
    """Count independent sets of a fixed size, or of every size up to a cap."""
    config: RunConfig = ctx.obj
    if all_sizes == (n is not None):
        raise click.UsageError("give exactly one of --n and --all")
    if all_sizes and cap is None:
        raise click.UsageError("--all needs --cap")
    graph = parse_graph(graph_spec)
    limit = n if n is not None else cap
    try:
        counts = independence_counts(
            graph, limit, workers=config.threads, budget_nodes=config.budget_nodes
        )
    except BudgetExceeded:
        _logger.warning(f"enumeration of {graph_spec} stopped at the node budget")
        raise
    _emit(
        ctx,
        count_payload(graph_spec.strip(), graph.vcount, graph.edge_count, counts, n),
    )


@cli.command()
@click.option("--pairs", default=None, help='Multiplier pairs, e.g. "2,3;2,5".')
@click.option("--primes", default=None, help='Primes, e.g. "23,29,31".')
@click.pass_context
def table(ctx: click.Context, pairs: Optional[str], primes: Optional[str]) -> None:
    """Scaled three-element independent-set counts of G(a, q - 1).

    Exits with 4 when a cell of the reference table differs.
    """
    config: RunConfig = ctx.obj
    pair_list = _semicolon_lists(pairs) if pairs else list(DEFAULT_PAIRS)
    prime_list = list(_ints(primes)) if primes else list(DEFAULT_PRIMES)
    payload = table_payload(multiplicative_table(pair_list, prime_list, config))
    _emit(ctx, payload)
    if not payload.passed:
        raise VerificationFailed("table differs from the reference values")


@cli.command()
@click.argument(
    "command", type=click.Choice(["charpoly", "count", "table", "verify", "probe"])
)
def schema(command: str) -> None:
    """Print the JSON schema of a command's payload."""
    click.echo(json.dumps(payload_schema(command), indent=2, sort_keys=True))


@cli.group(cls=AliasGroup, aliases=VERIFY_ALIASES)
def verify() -> None:
    """Exact checks; exit code 4 when any comparison fails.

    Short ids such as thm3.1 or eq2 name the same checks.
    """


@verify.command("invariance")
@click.option("--a-sets", default="2,3;2,5;3,5;5,7;2,4", show_default=True)
@click.option("--n", "n", type=click.IntRange(min=1), default=3, show_default=True)
@click.pass_context
def verify_invariance(ctx: click.Context, a_sets: str, n: int) -> None:
    """chi agrees across multiplicatively independent multiplier sets."""
    sets = _semicolon_lists(a_sets)
    report = invariance_check(sets, n, ctx.obj)
    _finish(ctx, "invariance", {"a_sets": a_sets, "n": n}, [report], report.passed)


@verify.command("egf-power")
@click.option("--a", "a", default="2", show_default=True)
@click.option("--order", type=click.IntRange(min=1), default=3, show_default=True)
@click.pass_context
def verify_egf_power(ctx: click.Context, a: str, order: int) -> None:
    """The chi series against the region series to the power -(t - 1)/2, and
    the central companion's connected parts at t = 1."""
    multipliers = _ints(a)
    report = egf_power_check(multipliers, order, ctx.obj)
    family = ArrangementFamily.eq1(multipliers)
    coeffs = extract_egf_coefficients(family, order, ctx.obj)
    expected = [(-1) ** (n - 1) * factorial(n - 1) for n in range(1, order + 1)]
    at_one = list(coeffs.f_at_one or ()) == expected
    _finish(
        ctx,
        "egf-power",
        {"a": a, "order": order},
        [report, coeffs],
        report.passed and at_one,
    )


@verify.command("deletion-restriction")
@click.option("--a", "a", default="2", show_default=True)
@click.option("--n", "n", type=click.IntRange(min=1), default=2, show_default=True)
@click.option(
    "--method",
    type=click.Choice(["whitney", "interpolate"]),
    default="whitney",
    show_default=True,
)
@click.pass_context
def verify_deletion_restriction(
    ctx: click.Context, a: str, n: int, method: str
) -> None:
    """chi of the central companion against chi_n + n chi_(n-1)."""
    report = deletion_restriction_report(_ints(a), n, method, ctx.obj)
    _finish(
        ctx,
        "deletion-restriction",
        {"a": a, "n": n, "method": method},
        [report],
        report.passed,
    )


def _union_command(kind: UnionKind, needs_b: bool) -> click.Command:
    @click.option("--a", "a", required=True)
    @click.option("--b", "b", default=None, required=needs_b)
    @click.option("--parts", required=True, help='Part sizes, e.g. "18,22".')
    @click.option("--nmax", type=click.IntRange(min=0), required=True)
    @click.pass_context
    def run(
        ctx: click.Context, a: str, b: Optional[str], parts: str, nmax: int
    ) -> None:
        report = verify_union_invariance(
            kind, _ints(a), _ints(parts), nmax, _ints(b) if b else (), ctx.obj
        )
        params = {"a": a, "parts": parts, "nmax": nmax}
        if b:
            params["b"] = b
        _finish(ctx, f"union-{kind.value}", params, [report], report.passed)

    run.__doc__ = (
        f"Independent-set counts of a union of {kind.value} graphs against one "
        "graph on the total size."
    )
    return click.command(f"union-{kind.value}")(run)


for _kind, _needs_b in (
    (UnionKind.MULTIPLICATIVE, False),
    (UnionKind.RATIO, True),
    (UnionKind.DIFFERENCE, False),
    (UnionKind.PENDANT, False),
    (UnionKind.AFFINE, True),
):
    verify.add_command(_union_command(_kind, _needs_b))


@verify.command("affine-essential")
@click.option("--a", "a", required=True)
@click.option("--b", "b", required=True)
@click.option("--parts", multiple=True, required=True, help="One partition per use.")
@click.option("--nmax", type=click.IntRange(min=1), required=True)
@click.pass_context
def verify_affine_essential(
    ctx: click.Context, a: str, b: str, parts: Tuple[str, ...], nmax: int
) -> None:
    """Non-essential affine arrangements show no dependence on the partition."""
    report = essentiality_invariance_probe(
        _ints(a), _ints(b), _int_lists(parts), nmax, ctx.obj
    )
    params = {"a": a, "b": b, "parts": ";".join(parts), "nmax": nmax}
    _finish(ctx, "affine-essential", params, [report], report.passed)


@verify.command("shift-catalan")
@click.option("--a", "a", required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.pass_context
def verify_shift_catalan(ctx: click.Context, a: str, n: int) -> None:
    """chi of the eq1 arrangement against the logarithmic Catalan one at t - 1."""
    report = shift_identity_check(_ints(a), n, ctx.obj)
    _finish(ctx, "shift-catalan", {"a": a, "n": n}, [report], report.passed)


@verify.command("closed-forms")
@click.option(
    "--form",
    "forms",
    type=click.Choice([f.value for f in ClosedForm]),
    multiple=True,
    help="Restrict to these forms (default: all).",
)
@click.option("--n-max", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--m-max", type=click.IntRange(min=1), default=2, show_default=True)
@click.pass_context
def verify_closed_forms(
    ctx: click.Context, forms: Tuple[str, ...], n_max: int, m_max: int
) -> None:
    """Closed-form characteristic polynomials against computed ones."""
    chosen = [ClosedForm(f) for f in forms] or list(ClosedForm)
    reports = []
    for form in chosen:
        with_m = form in (ClosedForm.EXTENDED_CATALAN, ClosedForm.POWER)
        for m in range(1, m_max + 1) if with_m else (1,):
            for n in range(1, n_max + 1):
                reports.append(closed_form_check(form, n, m, ctx.obj))
    passed = all(r.passed for r in reports)
    names = ",".join(f.value for f in chosen)
    params = {"forms": names, "n_max": n_max, "m_max": m_max}
    _finish(ctx, "closed-forms", params, reports, passed)


@verify.command("cycle-formula")
@click.option("--k-min", type=click.IntRange(min=3), default=3, show_default=True)
@click.option("--k-max", type=click.IntRange(min=3), default=30, show_default=True)
@click.pass_context
def verify_cycle_formula(ctx: click.Context, k_min: int, k_max: int) -> None:
    """Independent-set counts of cycles against the closed formula."""
    report = cycle_formula_check(k_min, k_max)
    params = {"k_min": k_min, "k_max": k_max}
    _finish(ctx, "cycle-formula", params, [report], report.passed)


@verify.command("four-lines")
@click.pass_context
def verify_four_lines(ctx: click.Context) -> None:
    """The four-line plane arrangement: chi, regions and bounded regions."""
    report = four_lines_check()
    _finish(ctx, "four-lines", {}, [report], report.passed)


@verify.command("polynomiality")
@click.option("--a", "a", required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--start", type=click.IntRange(min=1), default=None)
@click.option("--extra", type=click.IntRange(min=1), default=5, show_default=True)
@click.pass_context
def verify_polynomiality(
    ctx: click.Context, a: str, n: int, start: Optional[int], extra: int
) -> None:
    """s_n of the circulant F(a, k) is a polynomial in k of degree n."""
    report = polynomiality_check(_ints(a), n, start, extra, ctx.obj)
    _finish(ctx, "polynomiality", {"a": a, "n": n}, [report], report.passed)


@verify.command("reference")
@click.option("--n", "n", type=click.IntRange(min=2, max=7), required=True)
@click.option("--q", "q", type=int, required=True)
@click.option("--a", "a", default="2,3", show_default=True)
@click.pass_context
def verify_reference(ctx: click.Context, n: int, q: int, a: str) -> None:
    """Count chi at one prime and compare with the stored reference polynomial."""
    report = spot_check_reference(n, q, _ints(a), ctx.obj)
    _finish(ctx, "reference", {"a": a, "n": n, "q": q}, [report], report.passed)


@verify.command("oracle")
@click.option("--trials", type=click.IntRange(min=0), default=20, show_default=True)
@click.pass_context
def verify_oracle(ctx: click.Context, trials: int) -> None:
    """Whitney sum, Moebius inversion and point counting on random arrangements."""
    config: RunConfig = ctx.obj
    report = oracle_triangle_check(trials, config.seed, config=config)
    params = {"trials": trials, "seed": config.seed}
    _finish(ctx, "oracle", params, [report], report.passed)


@cli.group(cls=AliasGroup, aliases=PROBE_ALIASES)
def probe() -> None:
    """Experimental equality probes; always exit 0 when they run.

    conj5.1 and conj5.2 name attached-copies and attached-cycle.
    """


def _emit_probe(
    ctx: click.Context, which: Conjecture, params: dict, report: Any
) -> None:
    _emit(
        ctx,
        report_payload(
            which.value,
            params,
            [report],
            report.equality_observed,
            command="probe",
            label=EXPERIMENTAL,
        ),
    )


@probe.command("attached-copies")
@click.option("--a", "a", required=True)
@click.option(
    "--pendant",
    default="K1",
    show_default=True,
    help="Graph attached to every vertex, e.g. K2.",
)
@click.option("--parts", multiple=True, help="One partition per use.")
@click.option("--nmax", type=click.IntRange(min=0), required=True)
@click.pass_context
def probe_attached_copies(
    ctx: click.Context, a: str, pendant: str, parts: Tuple[str, ...], nmax: int
) -> None:
    """Circulant parts with a copy of a fixed graph hung on every vertex."""
    which = Conjecture.ATTACHED_COPIES
    report = probe_conjecture(
        which,
        _ints(a),
        _int_lists(parts),
        nmax,
        attached=parse_graph(pendant),
        config=ctx.obj,
    )
    params = {"a": a, "pendant": pendant, "parts": ";".join(parts), "nmax": nmax}
    _emit_probe(ctx, which, params, report)


@probe.command("attached-cycle")
@click.option("--a", "a", required=True)
@click.option("--b", "b", required=True)
@click.option("--parts", multiple=True, help="One partition per use.")
@click.option("--nmax", type=click.IntRange(min=0), required=True)
@click.pass_context
def probe_attached_cycle(
    ctx: click.Context, a: str, b: str, parts: Tuple[str, ...], nmax: int
) -> None:
    """Affine parts joined vertex by vertex to a cycle of the same size."""
    which = Conjecture.ATTACHED_CYCLE
    report = probe_conjecture(
        which, _ints(a), _int_lists(parts), nmax, b=_ints(b), config=ctx.obj
    )
    params = {"a": a, "b": b, "parts": ";".join(parts), "nmax": nmax}
    _emit_probe(ctx, which, params, report)


def main() -> None:
    cli()
