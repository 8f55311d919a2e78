"""Command-line interface: render the computed objects and run the
verification suites.

Exit codes: 0 all checks pass (documented mismatches allowed), 1 at least
one failure, 2 usage or parse error.  Stdout is deterministic for a fixed
invocation; timestamps appear only in --json report files and are
suppressed by --no-timestamp.
"""

from __future__ import annotations

import json

import click

from . import __version__
from .borel import (
    check_borel_prop, check_omega_laws, check_ternary, omega, ternary_laws,
)
from .forms import GramForm, check_section2_and_hyp, ext_power, \
    gw_identity_check, hyperbolic, invariants, sym_power, tensor
from .gwring import GWElem, check_coefficient_identities
from .lambdaring import (
    SymClass, adams, adams_negative, check_adams_hyperbolic,
    check_lambda_axioms,
)
from .report import merge
from .symfunc import (
    check_appendix_a, check_appendix_b, universal_P, universal_Q, universal_R,
)

FORMAT = click.Choice(["text", "latex", "json"])


def _render_poly(poly, fmt: str) -> str:
    if fmt == "latex":
        return poly.latex()
    if fmt == "json":
        return poly.to_json()
    return poly.text()


@click.group()
@click.version_option(__version__, prog_name="gwadams")
def main():
    """Exact verification toolkit for lambda-operation identities."""


@main.command("universal")
@click.argument("kind", type=click.Choice(["P", "Q", "R"]))
@click.argument("indices", nargs=-1, type=int)
@click.option("--format", "fmt", type=FORMAT, default="text",
              show_default=True, help="Output rendering.")
@click.option("--max", "max_override", type=int, default=None,
              help="Raise the default index bound (P/R: n <= 4, Q: ij <= 6).")
@click.option("--method", type=click.Choice(["direct", "composed", "both"]),
              default="composed", show_default=True,
              help="Construction route for R.")
def cmd_universal(kind, indices, fmt, max_override, method):
    """Print the universal polynomial P_n, Q_{i,j} or R_n."""
    if kind == "Q":
        if len(indices) != 2:
            raise click.UsageError("Q takes two indices: i j")
        i, j = indices
        if i < 1 or j < 1:
            raise click.UsageError("indices must be >= 1")
        bound = max_override if max_override is not None else 6
        if i * j > bound:
            raise click.UsageError(
                "i*j = %d exceeds bound %d; pass --max" % (i * j, bound))
        click.echo(_render_poly(universal_Q(i, j), fmt))
        return
    if len(indices) != 1:
        raise click.UsageError("%s takes one index: n" % kind)
    n = indices[0]
    if n < 1:
        raise click.UsageError("n must be >= 1")
    bound = max_override if max_override is not None else 4
    if n > bound:
        raise click.UsageError("n = %d exceeds bound %d; pass --max"
                               % (n, bound))
    if kind == "P":
        click.echo(_render_poly(universal_P(n), fmt))
        return
    if method == "both":
        a = universal_R(n, "direct")
        b = universal_R(n, "composed")
        click.echo(_render_poly(a, fmt))
        click.echo(_render_poly(b, fmt))
        if a == b:
            click.echo("agree")
        else:
            click.echo("disagree")
            raise SystemExit(1)
        return
    click.echo(_render_poly(universal_R(n, method), fmt))


@main.command("omega")
@click.argument("n", type=int, required=False)
@click.option("--table", "table_max", type=int, default=None,
              help="Print omega(0..N), one per line.")
@click.option("--format", "fmt", type=FORMAT, default="text",
              show_default=True)
def cmd_omega(n, table_max, fmt):
    """Print the Adams multiplier omega(n)."""
    if (n is None) == (table_max is None):
        raise click.UsageError("give either N or --table N")
    if table_max is not None:
        if table_max < 0:
            raise click.UsageError("--table must be >= 0")
        for k in range(table_max + 1):
            click.echo("%d: %s" % (k, _render_poly(omega(k).value, fmt)))
        return
    if n < 0:
        raise click.UsageError("n must be >= 0")
    click.echo(_render_poly(omega(n).value, fmt))


_NAMED_TARGETS = {
    "tau": lambda: SymClass.from_gw(GWElem.tau()),
    "h": lambda: SymClass.from_gw(GWElem.h()),
    "eps": lambda: SymClass.from_gw(GWElem.eps()),
    "gamma": lambda: SymClass.from_gw(GWElem.gamma()),
    "u": lambda: SymClass.gen("u", gens=("u",), quotient=True),
    "u-tau": lambda: (SymClass.gen("u", gens=("u",), quotient=True)
                      - SymClass.from_gw(GWElem.tau(), gens=("u",),
                                         quotient=True)),
}


@main.command("adams",
              context_settings={"ignore_unknown_options": True})
@click.argument("n", type=int)
@click.option("--target", default="tau", show_default=True,
              help="Named class (%s) or a class JSON document."
                   % ", ".join(sorted(_NAMED_TARGETS)))
@click.option("--format", "fmt", type=FORMAT, default="text",
              show_default=True)
def cmd_adams(n, target, fmt):
    """Apply the n-th Adams operation to a class."""
    if target in _NAMED_TARGETS:
        x = _NAMED_TARGETS[target]()
    else:
        try:
            x = SymClass.from_json(target)
        except (ValueError, KeyError, TypeError) as exc:
            raise click.UsageError("cannot parse target: %s" % exc)
    got = adams_negative(n, x) if n < 0 else adams(n, x)
    click.echo(_render_poly(got, fmt))


@main.command("ternary")
@click.option("--theory", type=click.Choice(["gw", "k", "witt"]),
              default="gw", show_default=True)
@click.option("--class", "index", type=int, default=None,
              help="Single class index 1..4 (default: all four).")
@click.option("--format", "fmt", type=FORMAT, default="text",
              show_default=True)
def cmd_ternary(theory, index, fmt):
    """Print the ternary product laws F_1..F_4."""
    laws = ternary_laws(theory)
    if index is not None:
        if not 1 <= index <= 4:
            raise click.UsageError("--class must be in 1..4")
        laws = [laws[index - 1]]
    for law in laws:
        if fmt == "json":
            click.echo(json.dumps(law.to_obj(), sort_keys=True,
                                  separators=(",", ":")))
        elif fmt == "latex":
            out = law.latex()
            if index is None:
                out = "F_{%d} = %s" % (law.index, out)
            click.echo(out)
        else:
            out = law.text()
            if index is None:
                out = "F%d = %s" % (law.index, out)
            click.echo(out)


@main.group("form")
def cmd_form():
    """Gram-matrix constructions and invariants."""


def _read_form(path: str) -> GramForm:
    try:
        with click.open_file(path, "r", encoding="utf-8") as fh:
            return GramForm.from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise click.UsageError("cannot read Gram form %s: %s" % (path, exc))


@cmd_form.command("ext-power")
@click.argument("path")
@click.argument("n", type=int)
def form_ext_power(path, n):
    """n-th exterior power of the Gram form in PATH."""
    f = _read_form(path)
    try:
        click.echo(ext_power(f, n).to_json())
    except IndexError:
        raise click.UsageError("n out of range 0..%d" % f.rank)


@cmd_form.command("sym-power")
@click.argument("path")
@click.argument("n", type=int)
def form_sym_power(path, n):
    """n-th symmetric power (unnormalized) of the Gram form in PATH."""
    f = _read_form(path)
    try:
        click.echo(sym_power(f, n).to_json())
    except IndexError:
        raise click.UsageError("n out of range 0..%d" % f.rank)


@cmd_form.command("tensor")
@click.argument("path_a")
@click.argument("path_b")
def form_tensor(path_a, path_b):
    """Tensor product of two Gram forms."""
    click.echo(tensor(_read_form(path_a), _read_form(path_b)).to_json())


@cmd_form.command("hyperbolic")
@click.argument("r", type=int)
@click.option("--delta", type=click.Choice(["+", "-"]), default="+",
              show_default=True)
def form_hyperbolic(r, delta):
    """Split (skew-)symmetric form of rank 2r."""
    if r < 1:
        raise click.UsageError("rank must be >= 1")
    click.echo(hyperbolic(r, delta).to_json())


@cmd_form.command("invariants")
@click.argument("path")
def form_invariants(path):
    """Rank, signature, discriminant and Hasse symbols over Q."""
    f = _read_form(path)
    try:
        inv = invariants(f)
    except (TypeError, ValueError) as exc:
        raise click.UsageError(str(exc))
    click.echo(json.dumps(inv.to_obj(), sort_keys=True,
                          separators=(",", ":")))


@cmd_form.command("gw-equal")
@click.argument("path_a")
@click.argument("path_b")
def form_gw_equal(path_a, path_b):
    """Compare the classes of two symmetric forms via invariants."""
    a, b = _read_form(path_a), _read_form(path_b)
    try:
        same = gw_identity_check([(1, a)], [(1, b)])
    except (TypeError, ValueError) as exc:
        raise click.UsageError(str(exc))
    click.echo("equal" if same else "not-equal")
    if not same:
        raise SystemExit(1)


SUITES = {
    "appendix-a": check_appendix_a,
    "appendix-b": check_appendix_b,
    "coefficient-ring": check_coefficient_identities,
    "lambda-axioms": check_lambda_axioms,
    "adams-hyperbolic": check_adams_hyperbolic,
    "omega": check_omega_laws,
    "borel": check_borel_prop,
    "ternary": check_ternary,
    "forms": check_section2_and_hyp,
}

SUITE_ORDER = list(SUITES) + ["all"]


@main.command("verify")
@click.argument("suite", type=click.Choice(SUITE_ORDER))
@click.option("--json", "json_path", type=click.Path(dir_okay=False),
              default=None, help="Also write the report as JSON.")
@click.option("--no-timestamp", is_flag=True,
              help="Omit the timestamp from the JSON report.")
def cmd_verify(suite, json_path, no_timestamp):
    """Run a verification suite and report pass/fail per identity."""
    if suite == "all":
        rep = merge("all", [run() for run in SUITES.values()])
    else:
        rep = SUITES[suite]()
    click.echo(rep.render_text(), nl=False)
    if json_path is not None:
        if not no_timestamp:
            rep.stamp()
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(rep.to_json())
    if not rep.ok:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
