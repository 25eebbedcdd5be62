"""``plhomeo`` command line.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from .actions import DEFAULT_WINDOW, OrbitEscape, check_fix_lemmas, eval_action, extend_action
from .circle import CircleMap, rotation_number
from .pl import PLError, PLFunc, PLLift, compose_fn_lift, compose_lift, fixed_set, invert, sup_displacement, zero_set
from .serialize import FormatError, parse_rational, read_action, read_plmap, write_plmap
from .verify import UnknownCheck, verify_paper
from .words import WordSyntaxError, word_eval


class InputError(click.ClickException):
    exit_code = 2


def _read_map(path: str):
    try:
        return read_plmap(Path(path).read_text())
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _pair(text: str, what: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise InputError(f"{what} must be two comma-separated values, got {text!r}")
    return parts


@click.group()
def main():
    """Exact PL homeomorphisms of the line, circle and plane."""


@main.command()
@click.option("--only", default=None, help="Comma-separated check ids or names, e.g. C12,C3.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def verify(only, fmt):
    """Run the named relation suite; exit 0 iff every check passes."""
    selection = [s for s in only.split(",") if s.strip()] if only else None
    try:
        results = verify_paper(selection)
    except UnknownCheck as exc:
        raise InputError(exc.args[0]) from None
    n_pass = sum(r.passed for r in results)
    if fmt == "json":
        payload = {"results": [r.to_dict() for r in results], "passed": n_pass, "total": len(results)}
        click.echo(json.dumps(payload, indent=2))
    else:
        for r in results:
            click.echo("\n".join(r.text_lines()))
        click.echo(f"{n_pass}/{len(results)} checks passed")
    raise SystemExit(0 if n_pass == len(results) else 1)


@main.command("eval")
@click.option("--word", required=True, help='Word such as "a^6 g a^-6"; rightmost atom acts first.')
@click.option("--point", required=True, help='Point "x,y" with rational coordinates.')
def eval_cmd(word, point):
    """Exact image of a point under a word in the planar generators."""
    try:
        p = tuple(parse_rational(c) for c in _pair(point, "--point"))
        x, y = word_eval(word, p)
    except (WordSyntaxError, FormatError) as exc:
        raise InputError(str(exc)) from None
    click.echo(f"{x}, {y}")


@main.command("map")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--op", type=click.Choice(["compose", "invert", "fix", "disp"]), required=True)
@click.option("--with", "other", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Right-hand factor for --op compose (FILE o OTHER).")
def map_cmd(file, op, other):
    """Compose, invert, solve fixed points or measure displacement of a plmap file."""
    m = _read_map(file)
    if op == "compose":
        if other is None:
            raise InputError("--op compose needs --with FILE")
        g = _read_map(other)
        if not isinstance(g, PLLift):
            raise InputError("the right-hand factor of a composition must be a lift")
        out = compose_lift(m, g) if isinstance(m, PLLift) else compose_fn_lift(m, g)
        click.echo(write_plmap(out), nl=False)
    elif op == "invert":
        if not isinstance(m, PLLift):
            raise InputError("only lifts can be inverted")
        click.echo(write_plmap(invert(m)), nl=False)
    elif op == "fix":
        s = fixed_set(m) if isinstance(m, PLLift) else zero_set(m)
        click.echo(f"{'fixed' if isinstance(m, PLLift) else 'zeros'} {s}")
    else:
        click.echo(str(sup_displacement(m)))


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--qmax", default=64, show_default=True, type=click.IntRange(min=1))
@click.option("--width", default="1/1024", show_default=True)
def rot(file, qmax, width):
    """Rotation number of the circle map given by a lift file."""
    m = _read_map(file)
    if isinstance(m, PLFunc):
        raise InputError(f"{file}: expected a lift, got a periodic function")
    try:
        w = parse_rational(width)
    except FormatError as exc:
        raise InputError(f"--width: {exc}") from None
    if w <= 0:
        raise InputError("--width must be positive")
    click.echo(str(rotation_number(CircleMap(m), q_max=qmax, width=w)))


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--window", default=f"{DEFAULT_WINDOW[0]},{DEFAULT_WINDOW[1]}", show_default=True)
@click.option("--check", is_flag=True, help="Check the fixed-point lemmas and the defining relation.")
@click.option("--word", default=None, help='Word in f, g to evaluate, e.g. "f g f^-1 g".')
@click.option("--x", "x", default=None, help="Point for --word.")
def action(file, window, check, word, x):
    """Extend a plaction seed to a window; optionally check or evaluate."""
    try:
        spec = read_action(Path(file).read_text())
        lo, hi = (int(v) for v in _pair(window, "--window"))
    except FormatError as exc:
        raise InputError(f"{file}: {exc}") from None
    except ValueError:
        raise InputError(f"--window must be two integers, got {window!r}") from None
    if lo > hi:
        raise InputError(f"empty window {lo},{hi}")
    w = extend_action(spec, (lo, hi))
    status = 0
    if check:
        items = check_fix_lemmas(spec, w=w)
        for it in items:
            click.echo(str(it))
        status = 0 if all(it.ok for it in items) else 1
    if word is not None:
        if x is None:
            raise InputError("--word needs --x")
        try:
            click.echo(str(eval_action(w, word, parse_rational(x))))
        except (ValueError, PLError) as exc:
            if isinstance(exc, OrbitEscape):
                raise click.ClickException(f"{exc}; widen --window") from None
            raise InputError(str(exc)) from None
    if not check and word is None:
        for n in range(lo, hi + 1):
            b = w.blocks[n]
            click.echo(f"block {n}: [{b.lo}, {b.hi}] knots " + " ".join(f"({a},{c})" for a, c in b.knots))
    raise SystemExit(status)


if __name__ == "__main__":  # pragma: no cover
    main()
