"""CLI commands for dicodim."""

import sys
from contextlib import contextmanager
from pathlib import Path

import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from dicodim import __logo__, __version__
from dicodim.cli.report import Report
from dicodim.errors import CertificationError, DicodimError, ParseError, ResourceLimitError

app = typer.Typer(
    name="dicodim",
    help=f"{__logo__} dicodim - codimensions of varieties of algebras and dialgebras",
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)

EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3


def version_callback(value: bool):
    if value:
        console.print(f"{__logo__} dicodim v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        None, "--version", callback=version_callback, is_eager=True
    ),
):
    """dicodim - codimensions of varieties of algebras and dialgebras."""
    pass


# ============================================================================
# Shared options and helpers
# ============================================================================


def _json_option():
    return typer.Option(False, "--json", help="Emit a JSON report")


def _csv_option():
    return typer.Option(False, "--csv", help="Emit one CSV row per result")


def _max_free_dim_option():
    return typer.Option(None, "--max-free-dim", help="Cap on dim Free(n)")


def _max_rows_option():
    return typer.Option(None, "--max-rows", help="Cap on candidate rows per degree")


def _verbose_option():
    return typer.Option(False, "--verbose", help="Log progress at DEBUG level")


def _setup(verbose: bool = False, max_free_dim: int | None = None, max_rows: int | None = None):
    """Load the config and apply command-line overrides."""
    from dicodim.config.loader import load_config

    if verbose:
        logger.remove()
        logger.add(sys.stderr, level="DEBUG")
    config = load_config()
    if max_free_dim is not None:
        config.limits.max_free_dim = max_free_dim
    if max_rows is not None:
        config.limits.max_rows = max_rows
    return config


def _format(config, as_json: bool, as_csv: bool) -> str:
    if as_json and as_csv:
        err_console.print("[red]Error: choose one of --json and --csv[/red]")
        raise typer.Exit(EXIT_PARSE)
    if as_json:
        return "json"
    if as_csv:
        return "csv"
    return config.output.format


def _loader(config):
    from dicodim.zoo import ZooLoader

    return ZooLoader(config.zoo.extra_dirs)


@contextmanager
def _guard():
    """Map dicodim errors to exit codes."""
    try:
        yield
    except ParseError as e:
        err_console.print(f"[red]Parse error: {e}[/red]")
        raise typer.Exit(EXIT_PARSE)
    except FileNotFoundError as e:
        err_console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(EXIT_PARSE)
    except ResourceLimitError as e:
        where = f" at degree {e.degree}" if e.degree is not None else ""
        err_console.print(f"[red]Resource limit {e.limit} exceeded{where}: {e}[/red]")
        raise typer.Exit(EXIT_LIMIT)
    except CertificationError as e:
        err_console.print(f"[red]Certification failed: {e}[/red]")
        raise typer.Exit(EXIT_FAILED)
    except (DicodimError, ValueError, KeyError) as e:
        err_console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(EXIT_PARSE)


def _finish(report: Report, fmt: str) -> None:
    report.print(console, fmt)
    if not report.ok:
        raise typer.Exit(EXIT_FAILED)


def _write_or_print(text: str, output: Path | None, what: str) -> None:
    if output is None:
        typer.echo(text, nl=False)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    err_console.print(f"[green]✓[/green] Wrote {what} to {output}")


# ============================================================================
# Varieties
# ============================================================================


@app.command()
def codim(
    variety: str = typer.Option(..., "--variety", "-v", help="Variety file or zoo name"),
    n: int = typer.Option(..., "--n", "-n", help="Largest degree"),
    as_json: bool = _json_option(),
    as_csv: bool = _csv_option(),
    max_free_dim: int = _max_free_dim_option(),
    max_rows: int = _max_rows_option(),
    verbose: bool = _verbose_option(),
):
    """Codimensions c_1..c_n of a variety."""
    from dicodim.tideal import codim_sequence
    from dicodim.zoo import load_variety

    config = _setup(verbose, max_free_dim, max_rows)
    fmt = _format(config, as_json, as_csv)
    with _guard():
        V = load_variety(variety, _loader(config))
        report = Report("codim", {"variety": variety, "n": n}, f"Codimensions of {V.label}")
        for row in codim_sequence(V, n, config.limits):
            report.add(row.to_dict())
    _finish(report, fmt)


def _translate(kind: str, variety: str, output: Path | None, single_op: bool, as_json: bool, verbose: bool):
    from dicodim.formats import emit_variety
    from dicodim.transfer import di_presentation, eliminate_prec, pre_presentation
    from dicodim.zoo import load_variety

    config = _setup(verbose)
    with _guard():
        V = load_variety(variety, _loader(config))
        translated = di_presentation(V) if kind == "di" else pre_presentation(V)
        if single_op:
            translated = eliminate_prec(translated)
        text = emit_variety(translated)
    if as_json:
        report = Report(kind, {"variety": variety, "single_op": single_op})
        report.add({"generators": len(translated.generators), "text": text})
        report.print(console, "json")
        return
    _write_or_print(text, output, f"{kind}-{V.label}")


@app.command()
def di(
    variety: str = typer.Option(..., "--variety", "-v", help="Variety file or zoo name"),
    output: Path = typer.Option(None, "--output", "-o", help="Write the presentation here"),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Presentation of di-V in the variety file format."""
    _translate("di", variety, output, False, as_json, verbose)


@app.command()
def pre(
    variety: str = typer.Option(..., "--variety", "-v", help="Variety file or zoo name"),
    output: Path = typer.Option(None, "--output", "-o", help="Write the presentation here"),
    single_op: bool = typer.Option(
        False, "--single-op", help="Rewrite x < y as y > x over the base operations"
    ),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Presentation of pre-V in the variety file format."""
    _translate("pre", variety, output, single_op, as_json, verbose)


# ============================================================================
# Algebras
# ============================================================================


@app.command("var-codim")
def var_codim(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Algebra file or zoo name"),
    n: int = typer.Option(..., "--n", "-n", help="Largest degree"),
    as_json: bool = _json_option(),
    as_csv: bool = _csv_option(),
    max_free_dim: int = _max_free_dim_option(),
    max_rows: int = _max_rows_option(),
    verbose: bool = _verbose_option(),
):
    """Codimensions of the variety generated by an algebra."""
    from dicodim.concrete import id_component
    from dicodim.zoo import load_algebra

    config = _setup(verbose, max_free_dim, max_rows)
    fmt = _format(config, as_json, as_csv)
    with _guard():
        A = load_algebra(algebra, _loader(config))
        report = Report("var-codim", {"algebra": algebra, "n": n}, f"Codimensions of Var({A.label})")
        for k in range(1, n + 1):
            comp = id_component(A, k, config.limits)
            report.add(
                {"n": k, "free_dim": comp.free_dim, "id_dim": comp.basis.rank, "var_codim": comp.var_codim}
            )
    _finish(report, fmt)


@app.command()
def check(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Algebra file or zoo name"),
    variety: str = typer.Option(..., "--variety", "-v", help="Variety file or zoo name"),
    as_json: bool = _json_option(),
    as_csv: bool = _csv_option(),
    verbose: bool = _verbose_option(),
):
    """Evaluate every identity of a variety on an algebra."""
    from dicodim.concrete.evaluate import find_violation
    from dicodim.zoo import load_algebra, load_variety

    config = _setup(verbose)
    fmt = _format(config, as_json, as_csv)
    with _guard():
        A = load_algebra(algebra, _loader(config))
        V = load_variety(variety, _loader(config))
        report = Report("check", {"algebra": algebra, "variety": variety}, f"{A.label} in {V.label}")
        for g in V.generators:
            t = find_violation(A, g)
            witness = "" if t is None else " ".join(A.labels[i] for i in t)
            report.add({"identity": g.render(), "holds": t is None, "witness": witness}, t is None)
    _finish(report, fmt)


@app.command()
def hat(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Dialgebra file or zoo name"),
    output: Path = typer.Option(None, "--output", "-o", help="Write the hat algebra here"),
    as_json: bool = _json_option(),
    as_csv: bool = _csv_option(),
    verbose: bool = _verbose_option(),
):
    """Build D-hat and check the embeddings of D into P2 ⊗ D-hat and P0 ⊗ D-hat."""
    from dicodim.concrete import embed_check_P0, embed_check_P2
    from dicodim.concrete import hat as build_hat
    from dicodim.formats import emit_algebra
    from dicodim.zoo import load_algebra

    config = _setup(verbose)
    fmt = _format(config, as_json, as_csv)
    with _guard():
        D = load_algebra(algebra, _loader(config))
        H = build_hat(D)
        report = Report("hat", {"algebra": algebra}, f"hat({D.label})")
        p2 = embed_check_P2(D, H)
        p0 = embed_check_P0(D, config.defaults.p0_degree, H)
        bounded = H.dim <= 2 * D.dim
        report.add(
            {
                "dim": D.dim,
                "bar_dim": H.bar_dim,
                "hat_dim": H.dim,
                "bounded": bounded,
                "P2_embedding": p2.ok,
                "P0_embedding": p0.ok,
            },
            bounded and p2.ok and p0.ok,
        )
        for rep in (p2, p0):
            if rep.witness is not None:
                report.note(f"[yellow]witness: {rep.witness}[/yellow]")
    if output is not None:
        _write_or_print(emit_algebra(H.algebra), output, "hat algebra")
    _finish(report, fmt)


@app.command()
def theorem4(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Dialgebra file or zoo name"),
    n: int = typer.Option(..., "--n", "-n", help="Largest degree"),
    as_json: bool = _json_option(),
    as_csv: bool = _csv_option(),
    max_free_dim: int = _max_free_dim_option(),
    max_rows: int = _max_rows_option(),
    verbose: bool = _verbose_option(),
):
    """Growth bounds between Var(D) and its hat variety for n = 2..N."""
    from dicodim.concrete import theorem4_check
    from dicodim.utils.helpers import decimal_str
    from dicodim.zoo import load_algebra

    config = _setup(verbose, max_free_dim, max_rows)
    fmt = _format(config, as_json, as_csv)
    digits = config.output.root_digits
    with _guard():
        D = load_algebra(algebra, _loader(config))
        report = Report("theorem4", {"algebra": algebra, "n": n}, f"Growth of Var({D.label})")
        for row in theorem4_check(D, n, config.limits, digits):
            data = row.to_dict()
            if fmt == "table":
                data["roots"] = [
                    f"{k} {decimal_str(lo, digits)}" for k, (lo, _) in row.roots.items()
                ]
            report.add(data, row.ok)
    _finish(report, fmt)


# ============================================================================
# Verification of identities and dimension claims
# ============================================================================


def _lemma1_triples(config):
    from dicodim.concrete import make_perm
    from dicodim.zinbiel import divided_power_algebra, free_zinbiel_algebra
    from dicodim.zoo import load_algebra

    return [
        (divided_power_algebra(3), make_perm("P2"), load_algebra("lie_r2")),
        (free_zinbiel_algebra(2), make_perm("group", 2), load_algebra("lie_r2")),
        (divided_power_algebra(2), make_perm("P0", config.defaults.p0_degree), load_algebra("lie_ab1")),
    ]


@app.command()
def verify(
    lemma3: bool = typer.Option(False, "--lemma3", help="Symmetrization identity of pre-Com"),
    zn_dim: bool = typer.Option(False, "--zn-dim", help="dim Z^(n) = n"),
    lemma1: bool = typer.Option(False, "--lemma1", help="Z ⊠ (P ⊗ A) ≅ (P ⊠ Z) ⊗ A"),
    eq2: bool = typer.Option(False, "--eq2", help="c_n(di-V) = n c_n(V)"),
    di_pois: bool = typer.Option(False, "--di-pois", help="Derivation rules of di-Pois"),
    corollary1: bool = typer.Option(False, "--corollary1", help="Id(P2 ⊗ A) = translated Id(A)"),
    variety: str = typer.Option(None, "--variety", "-v", help="Variety for --eq2"),
    algebra: str = typer.Option(None, "--algebra", "-a", help="Algebra for --corollary1"),
    n: int = typer.Option(4, "--n", "-n", help="Largest degree"),
    as_json: bool = _json_option(),
    as_csv: bool = _csv_option(),
    max_free_dim: int = _max_free_dim_option(),
    max_rows: int = _max_rows_option(),
    verbose: bool = _verbose_option(),
):
    """Machine-check one identity, isomorphism or dimension claim."""
    modes = [m for m, on in (("lemma3", lemma3), ("zn-dim", zn_dim), ("lemma1", lemma1),
                             ("eq2", eq2), ("di-pois", di_pois), ("corollary1", corollary1)) if on]
    if len(modes) != 1:
        err_console.print(
            "[red]Error: choose exactly one of --lemma3, --zn-dim, --lemma1, --eq2, --di-pois, --corollary1[/red]"
        )
        raise typer.Exit(EXIT_PARSE)
    mode = modes[0]
    if mode == "eq2" and not variety:
        err_console.print("[red]Error: --eq2 needs --variety[/red]")
        raise typer.Exit(EXIT_PARSE)
    if mode == "corollary1" and not algebra:
        err_console.print("[red]Error: --corollary1 needs --algebra[/red]")
        raise typer.Exit(EXIT_PARSE)

    config = _setup(verbose, max_free_dim, max_rows)
    fmt = _format(config, as_json, as_csv)
    inputs = {"mode": mode, "n": n}
    with _guard():
        if mode == "lemma3":
            from dicodim.zinbiel import lemma3_sides, symmetrized_sum

            report = Report("verify", inputs, "Symmetrization identity")
            for k in range(1, n + 1):
                lhs, rhs = lemma3_sides(k)
                holds = lhs == rhs == symmetrized_sum(k)
                report.add({"n": k, "terms": len(lhs), "holds": holds}, holds)
        elif mode == "zn-dim":
            from dicodim.zinbiel import zn_dimension

            report = Report("verify", inputs, "dim Z^(n)")
            for k in range(1, n + 1):
                dim = zn_dimension(k)
                report.add({"n": k, "dim": dim, "holds": dim == k}, dim == k)
        elif mode == "lemma1":
            from dicodim.concrete import belongs_to, lemma1_check, make_perm, pboxtimes, zboxtimes
            from dicodim.zinbiel import divided_power_algebra
            from dicodim.zoo import load_algebra, load_variety

            report = Report("verify", inputs, "σ12 isomorphisms")
            for Z, P, A in _lemma1_triples(config):
                ok = lemma1_check(Z, P, A)
                report.add({"Z": Z.label, "P": P.label, "A": A.label, "holds": ok}, ok)
            for N in sorted({4, config.defaults.divided_power_degree}):
                box = pboxtimes(make_perm("P2"), divided_power_algebra(N))
                in_com = belongs_to(box, load_variety("com"))
                report.add({"Z": box.label, "P": "", "A": "in Com", "holds": in_com}, in_com)
            Z = divided_power_algebra(config.defaults.divided_power_degree)
            box = zboxtimes(Z, load_algebra("leib_cyclic"))
            in_lie = belongs_to(box, load_variety("lie"))
            report.add({"Z": box.label, "P": "", "A": "in Lie", "holds": in_lie}, in_lie)
        elif mode == "eq2":
            from dicodim.transfer import verify_codim_relation
            from dicodim.zoo import load_variety

            V = load_variety(variety, _loader(config))
            inputs["variety"] = variety
            report = Report("verify", inputs, f"c_n(di-{V.label}) = n c_n({V.label})")
            for k in range(1, n + 1):
                rel = verify_codim_relation(V, k, config.limits)
                report.add(rel.to_dict(), rel.equal)
        elif mode == "di-pois":
            from dicodim.transfer import verify_di_pois

            report = Report("verify", inputs, "di-Pois derivation rules")
            for text, found in verify_di_pois(limits=config.limits).identities:
                report.add({"identity": text, "member": found}, found)
        else:
            from dicodim.concrete import corollary1_check
            from dicodim.zoo import load_algebra

            A = load_algebra(algebra, _loader(config))
            inputs["algebra"] = algebra
            report = Report("verify", inputs, f"Id(P2 ⊗ {A.label})")
            for k in range(1, n + 1):
                rep = corollary1_check(A, k, config.limits)
                report.add(rep.to_dict(), rep.equal)
    _finish(report, fmt)


# ============================================================================
# Zoo Commands
# ============================================================================


zoo_app = typer.Typer(help="Browse the shipped example varieties and algebras")
app.add_typer(zoo_app, name="zoo")


@zoo_app.command("list")
def zoo_list():
    """List zoo entries."""
    config = _setup()
    entries = _loader(config).list_entries()

    if not entries:
        console.print("No zoo entries.")
        return

    table = Table(title="Zoo")
    table.add_column("Name", style="cyan")
    table.add_column("Kind")
    table.add_column("Source")
    table.add_column("Description")

    for entry in entries:
        first = Path(entry["path"]).read_text(encoding="utf-8").splitlines()[:1]
        description = first[0].lstrip("# ").strip() if first and first[0].startswith("#") else ""
        table.add_row(entry["name"], entry["kind"], entry["source"], description)

    console.print(table)


@zoo_app.command("show")
def zoo_show(
    name: str = typer.Argument(..., help="Zoo entry name"),
):
    """Print a zoo entry."""
    config = _setup()
    loader = _loader(config)
    for kind in ("variety", "algebra"):
        path = loader.find(name, kind)
        if path is not None:
            typer.echo(path.read_text(encoding="utf-8"), nl=False)
            return
    err_console.print(f"[red]No zoo entry named {name}[/red]")
    raise typer.Exit(EXIT_PARSE)


# ============================================================================
# Config Commands
# ============================================================================


config_app = typer.Typer(help="Manage the configuration file")
app.add_typer(config_app, name="config")


@config_app.command("init")
def config_init(
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite an existing file"),
):
    """Write the default configuration file."""
    from dicodim.config.loader import get_config_path, save_config
    from dicodim.config.schema import Config

    config_path = get_config_path()

    if config_path.exists() and not force:
        console.print(f"[yellow]Config already exists at {config_path}[/yellow]")
        if not typer.confirm("Overwrite?"):
            raise typer.Exit()

    save_config(Config())
    console.print(f"[green]✓[/green] Created config at {config_path}")


@config_app.command("show")
def config_show():
    """Show the effective configuration."""
    import yaml

    from dicodim.config.loader import get_config_path

    config = _setup()
    config_path = get_config_path()
    console.print(
        f"Config: {config_path} {'[green]✓[/green]' if config_path.exists() else '[dim]defaults[/dim]'}"
    )
    typer.echo(yaml.dump(config.model_dump(), default_flow_style=False, sort_keys=False), nl=False)


if __name__ == "__main__":
    app()
