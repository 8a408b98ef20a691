"""Command-line front end.

Exit codes: 0 success, 2 parse/shape errors, 3 nilpotency violations,
4 order violations (not a degeneration), 5 scope violations (codim > 2).
All outputs are byte-deterministic for identical inputs and flags.
"""

from __future__ import annotations

import functools
import sys

import click

from . import degeneration as dg
from . import formats
from .errors import (
    BadArity,
    BadResidue,
    BadWindow,
    LengthMismatch,
    NotADegeneration,
    NotCyclic,
    NotNilpotent,
    OutOfScope,
    ParseError,
    QuiverMismatch,
    RankMismatch,
    ShapeMismatch,
)
from .reps import ext1_dim, euler_form, hom_dim
from .singularity import classify
from .windows import decompose_nilpotent, is_nilpotent, realize

_PARSE_ERRORS = (
    ParseError,
    ShapeMismatch,
    QuiverMismatch,
    LengthMismatch,
    BadWindow,
    RankMismatch,
    BadResidue,
    BadArity,
    NotCyclic,
)


def _exits(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _PARSE_ERRORS as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except NotNilpotent as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except NotADegeneration as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)
        except OutOfScope as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(5)

    return wrapper


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_dims(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError as exc:
        raise ParseError(f"bad dimension vector {raw!r}: {exc}") from exc


@click.group()
def main():
    """Exact invariants, degeneration order and singularity types for
    nilpotent representations of cyclic quivers."""


@main.command("hom")
@click.argument("left")
@click.argument("right")
@_exits
def cmd_hom(left, right):
    """Hom dimension between two representation (or windows) files."""
    v = formats.load_rep_or_windows(left)
    w = formats.load_rep_or_windows(right)
    click.echo(str(hom_dim(v, w)))


@main.command("ext")
@click.argument("left")
@click.argument("right")
@_exits
def cmd_ext(left, right):
    """Ext^1 dimension between two representation (or windows) files."""
    v = formats.load_rep_or_windows(left)
    w = formats.load_rep_or_windows(right)
    click.echo(str(ext1_dim(v, w)))


@main.command("euler")
@click.argument("quiver_file")
@click.option("--d", "dvec", required=True, help="comma-separated dimension vector")
@click.option("--e", "evec", required=True, help="comma-separated dimension vector")
@_exits
def cmd_euler(quiver_file, dvec, evec):
    """Euler form of two dimension vectors over the quiver in FILE."""
    q = formats.load_quiver(quiver_file)
    click.echo(str(euler_form(q, _parse_dims(dvec), _parse_dims(evec))))


@main.command("decompose")
@click.argument("rep_file")
@click.option("-o", "--output", default=None, help="write to file instead of stdout")
@_exits
def cmd_decompose(rep_file, output):
    """Decompose a nilpotent cyclic-quiver representation into windows."""
    rep = formats.load_rep(rep_file)
    if not is_nilpotent(rep):
        raise NotNilpotent("the representation is not nilpotent")
    ms = decompose_nilpotent(rep)
    _write_output(formats.canonical_dumps(formats.windows_to_obj(ms)), output)


@main.command("realize")
@click.argument("windows_file")
@click.option("-o", "--output", default=None, help="write to file instead of stdout")
@_exits
def cmd_realize(windows_file, output):
    """Realize a windows file as a matrix representation."""
    ms = formats.load_windows(windows_file)
    rep = realize(ms)
    _write_output(formats.canonical_dumps(formats.rep_to_obj(rep)), output)


@main.command("degenerates")
@click.argument("m_file")
@click.argument("n_file")
@_exits
def cmd_degenerates(m_file, n_file):
    """Print true/false: does the first class degenerate to the second?"""
    m = formats.load_windows(m_file)
    nn = formats.load_windows(n_file)
    click.echo("true" if dg.degenerates(m, nn) else "false")


@main.command("codim")
@click.argument("m_file")
@click.argument("n_file")
@_exits
def cmd_codim(m_file, n_file):
    """Codimension of the degeneration from the first class to the second."""
    m = formats.load_windows(m_file)
    nn = formats.load_windows(n_file)
    click.echo(str(dg.codim(m, nn)))


@main.command("classify")
@click.argument("m_file")
@click.argument("n_file")
@click.option("--trace", "trace_path", default=None, help="write the JSON trace here")
@_exits
def cmd_classify(m_file, n_file, trace_path):
    """Singularity type (Reg, A<r> or Unresolved) of a codim <= 2 degeneration."""
    m = formats.load_windows(m_file)
    nn = formats.load_windows(n_file)
    result, trace = classify(m, nn)
    if trace_path is not None:
        with open(trace_path, "w", encoding="utf-8") as fh:
            fh.write(formats.canonical_dumps(trace.to_obj()))
    click.echo(str(result))


@main.command("hasse")
@click.option("--n", "rank", type=int, required=True, help="cyclic rank")
@click.option("--dim", "dim_raw", required=True, help="comma-separated dimensions")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["dot", "json"]),
    default="dot",
    show_default=True,
)
@click.option("--annotate", is_flag=True, help="label codim 1/2 edges")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("-o", "--output", default=None, help="write to file instead of stdout")
@_exits
def cmd_hasse(rank, dim_raw, fmt, annotate, jobs, output):
    """Hasse diagram of the degeneration order for one dimension vector."""
    dims = _parse_dims(dim_raw)
    if rank < 1:
        raise ParseError("--n must be at least 1")
    if len(dims) != rank or any(x < 0 for x in dims):
        raise ParseError(
            f"--dim must list {rank} nonnegative integers, got {dim_raw!r}"
        )
    diagram = dg.hasse(rank, dims, annotate=annotate, jobs=jobs)
    if fmt == "dot":
        _write_output(dg.to_dot(diagram), output)
    else:
        _write_output(formats.canonical_dumps(dg.to_json_obj(diagram)), output)


@main.command("scan")
@click.option("--max-n", type=int, default=3, show_default=True)
@click.option("--max-dim", type=int, default=7, show_default=True)
@_exits
def cmd_scan(max_n, max_dim):
    """Classify every codim-2 degeneration at desk scale; print a summary table.

    For each rank n <= max-n and every dimension vector with total dimension
    <= max-dim, all ordered comparable pairs of nilpotent classes with
    codimension exactly 2 are classified. The verdict should always be Reg
    or A_r; any Unresolved pair is listed explicitly.
    """
    if max_n < 1 or max_dim < 1:
        raise ParseError("--max-n and --max-dim must be at least 1")
    rows = []
    unresolved_pairs = []
    c_emitted = False
    for summary in scan_rows(max_n, max_dim):
        rows.append(summary)
        unresolved_pairs.extend(summary["unresolved_pairs"])
        c_emitted = c_emitted or summary["c_count"] > 0
    header = f"{'n':>3} {'dim':<12} {'classes':>8} {'codim2':>7} {'Reg':>6} {'A_r':>6} {'Unres':>6}"
    click.echo(header)
    totals = {"classes": 0, "codim2": 0, "reg": 0, "a": 0, "unresolved": 0}
    for row in rows:
        dim_str = "(" + ",".join(str(x) for x in row["dim"]) + ")"
        click.echo(
            f"{row['n']:>3} {dim_str:<12} {row['classes']:>8} {row['codim2']:>7} "
            f"{row['reg']:>6} {row['a']:>6} {row['unresolved']:>6}"
        )
        for key in totals:
            totals[key] += row[key]
    click.echo(
        f"{'':>3} {'TOTAL':<12} {totals['classes']:>8} {totals['codim2']:>7} "
        f"{totals['reg']:>6} {totals['a']:>6} {totals['unresolved']:>6}"
    )
    if unresolved_pairs:
        click.echo("unresolved pairs:")
        for n, m, nn in unresolved_pairs:
            click.echo(f"  n={n}  {m!r} -> {nn!r}")
    else:
        click.echo("no unresolved pairs")
    click.echo("no C-type labels emitted" if not c_emitted else "C-TYPE EMITTED (BUG)")


def _dim_vectors(n: int, max_total: int):
    def rec(pos: int, remaining: int, acc: list[int]):
        if pos == n:
            yield tuple(acc)
            return
        for value in range(remaining + 1):
            acc.append(value)
            yield from rec(pos + 1, remaining - value, acc)
            acc.pop()

    for total in range(1, max_total + 1):
        for vec in rec(0, total, []):
            if sum(vec) == total:
                yield vec


def scan_rows(max_n: int, max_dim: int):
    """Per-dimension-vector classification tallies; shared by CLI and tests."""
    for n in range(1, max_n + 1):
        for d in _dim_vectors(n, max_dim):
            nodes = dg.enumerate_nilpotent(n, d)
            total = sum(d)
            ts = dg.TestSet.up_to(n, total)
            profiles = [dg.hom_profile(node, ts) for node in nodes]
            from .windows import multiset_hom_dim

            self_hom = [multiset_hom_dim(node, node) for node in nodes]
            reg = a_count = c_count = unresolved = codim2 = 0
            unresolved_pairs = []
            for x in range(len(nodes)):
                for y in range(len(nodes)):
                    if x == y:
                        continue
                    if self_hom[y] - self_hom[x] != 2:
                        continue
                    if not all(
                        p <= q for p, q in zip(profiles[x], profiles[y])
                    ):
                        continue
                    codim2 += 1
                    verdict, _ = classify(nodes[x], nodes[y])
                    if verdict.kind == "Reg":
                        reg += 1
                    elif verdict.kind == "A":
                        a_count += 1
                    elif verdict.kind == "C":
                        c_count += 1
                    else:
                        unresolved += 1
                        unresolved_pairs.append((n, nodes[x], nodes[y]))
            yield {
                "n": n,
                "dim": d,
                "classes": len(nodes),
                "codim2": codim2,
                "reg": reg,
                "a": a_count,
                "c_count": c_count,
                "unresolved": unresolved,
                "unresolved_pairs": unresolved_pairs,
            }


if __name__ == "__main__":
    main()
