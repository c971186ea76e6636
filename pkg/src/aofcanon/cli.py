"""Command-line front end.

Every pipeline stage is exposed as its own subcommand so intermediate
results can be inspected without touching Python. Where a WORD argument is
omitted, words are read from standard input, one per line, and each input
line produces exactly one output line (multi-line reports collapse onto one
line, parts joined by "; ").

Exit codes: 0 success, 1 negative result (false / FALSE / NOT_EQUIVALENT),
2 UNKNOWN from equiv, 64 usage error, 65 invalid or empty word. In batch
mode the per-word result codes collapse to 0; bad input still aborts with
65.
"""
from __future__ import annotations

import functools
import random
import statistics
import sys
import time
from typing import Callable, Iterator

import click

from . import classes as classes_mod
from . import frames as frames_mod
from . import oracle as oracle_mod
from . import pipeline, reductions, words
from .errors import EmptyInput, WordError

click.UsageError.exit_code = 64

EX_DATA = 65


def _data_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except WordError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EX_DATA)

    return wrapper


def _checked(w: str) -> str:
    if w == "":
        raise EmptyInput("empty word")
    return words.check_word(w)


def _words_in(word: str | None) -> Iterator[str]:
    if word is not None:
        yield word
        return
    for line in sys.stdin:
        yield line.rstrip("\r\n")


def _emit(lines: list[str], batch: bool) -> None:
    if batch:
        click.echo("; ".join(lines))
    else:
        for line in lines:
            click.echo(line)


def _dash(x: str) -> str:
    return x if x else "-"


def _csv(xs: tuple[str, ...]) -> str:
    return ",".join(_dash(x) for x in xs)


@click.group()
@click.version_option(package_name="aofcanon")
def main() -> None:
    """Canonical almost overlap-free forms under the YY = YYY equivalence."""


_PREDICATES: dict[str, Callable[[str], bool]] = {
    "overlap-free": words.is_overlap_free,
    "almost-overlap-free": words.is_almost_overlap_free,
    "cube-free": words.is_cube_free,
    "uniform": words.is_uniform,
    "letter-alternating": words.is_letter_alternating,
    "ab-whole": reductions.is_ab_whole,
    "phi-image": words.is_phi_image,
}


@main.command()
@click.argument("predicate", type=click.Choice(list(_PREDICATES)))
@click.argument("word", required=False)
@_data_errors
def check(predicate: str, word: str | None) -> None:
    """Test WORD against PREDICATE; prints true or false (exit 0 / 1)."""
    fn = _PREDICATES[predicate]
    batch = word is None
    all_true = True
    for w in _words_in(word):
        v = fn(_checked(w))
        click.echo("true" if v else "false")
        all_true = all_true and v
    if not batch and not all_true:
        sys.exit(1)


_REDUCERS: dict[str, Callable[[str], str]] = {
    "r1": reductions.r1,
    "r": reductions.complete_reduction,
    "rt": reductions.tail_reduce,
}


@main.command()
@click.argument("mode", type=click.Choice(list(_REDUCERS)))
@click.argument("word", required=False)
@_data_errors
def reduce(mode: str, word: str | None) -> None:
    """Rewrite WORD: r1 collapses powers, r reduces fully, rt trims tails."""
    fn = _REDUCERS[mode]
    for w in _words_in(word):
        click.echo(fn(_checked(w)))


@main.command()
@click.argument("word", required=False)
@_data_errors
def tails(word: str | None) -> None:
    """Report boundary tail patterns, one line each; 'none' without any."""
    batch = word is None
    for w in _words_in(word):
        w = _checked(w)
        found = reductions.detect_non_uniform_tails(w) + reductions.detect_non_reducible_tails(w)
        lines = [
            f"side={t.side} class={t.letter_class} family={t.family} span={t.start}..{t.end}"
            for t in found
        ] or ["none"]
        _emit(lines, batch)


@main.command()
@click.argument("word", required=False)
@_data_errors
def frames(word: str | None) -> None:
    """Split a uniform WORD into fringe letters and morphism-image core."""
    batch = word is None
    for w in _words_in(word):
        w = _checked(w)
        f = frames_mod.frame(w)
        _emit(
            [f"h={_dash(f.h)} core={_dash(f.core)} t={_dash(f.t)}", f"xi={frames_mod.xi(w)}"],
            batch,
        )


@main.command("ancestor")
@click.argument("word", required=False)
@click.option("--trace", is_flag=True, help="Print each round of the descent.")
@_data_errors
def ancestor_cmd(word: str | None, trace: bool) -> None:
    """Run the halving descent; prints the stop word and the round arrays."""
    batch = word is None
    for w in _words_in(word):
        s = pipeline.ancestor(_checked(w), trace=trace)
        lines = []
        if trace and s.series is not None:
            for k, u in enumerate(s.series, start=1):
                i = k - 1
                lines.append(
                    f"k={k} U={u} L={_dash(s.L[i])} R={_dash(s.R[i])}"
                    f" h={_dash(s.h[i])} t={_dash(s.t[i])}"
                )
        lines.append(
            f"anc={s.anc} ell={s.ell}"
            f" L={_csv(s.L)} R={_csv(s.R)} h={_csv(s.h)} t={_csv(s.t)}"
        )
        _emit(lines, batch)


@main.command("normalize")
@click.argument("word", required=False)
@_data_errors
def normalize_cmd(word: str | None) -> None:
    """Rebuild from the class representative of the stop word; may be FALSE.

    This is the canonical-form pipeline without the final almost
    overlap-free check, so the output can be a non-canonical witness.
    """
    batch = word is None
    any_false = False
    for w in _words_in(word):
        s = pipeline.ancestor(_checked(w))
        rep = classes_mod.match_S(s.anc)
        if rep is None:
            click.echo("FALSE")
            any_false = True
        else:
            click.echo(pipeline.normalize(rep, s))
    if not batch and any_false:
        sys.exit(1)


@main.command("eqaof")
@click.argument("word", required=False)
@_data_errors
def eqaof_cmd(word: str | None) -> None:
    """Canonical almost overlap-free form of WORD, or FALSE (exit 1)."""
    batch = word is None
    any_false = False
    for w in _words_in(word):
        v = pipeline.eqaof(_checked(w))
        click.echo("FALSE" if v is None else v)
        any_false = any_false or v is None
    if not batch and any_false:
        sys.exit(1)


_VERDICT_CODE = {
    pipeline.Verdict.EQUIVALENT: 0,
    pipeline.Verdict.NOT_EQUIVALENT: 1,
    pipeline.Verdict.UNKNOWN: 2,
}


@main.command("equiv")
@click.argument("u", required=False)
@click.argument("v", required=False)
@_data_errors
def equiv_cmd(u: str | None, v: str | None) -> None:
    """Compare U and V; EQUIVALENT / NOT_EQUIVALENT / UNKNOWN (exit 0/1/2).

    Without arguments, reads two whitespace-separated words per input line.
    """
    if (u is None) != (v is None):
        raise click.UsageError("equiv needs both words or neither")
    if u is not None and v is not None:
        verdict = pipeline.decide_equiv(_checked(u), _checked(v))
        click.echo(verdict.value)
        sys.exit(_VERDICT_CODE[verdict])
    for line in sys.stdin:
        parts = line.split()
        if len(parts) != 2:
            raise click.UsageError(f"expected two words per line, got {line!r}")
        verdict = pipeline.decide_equiv(_checked(parts[0]), _checked(parts[1]))
        click.echo(verdict.value)


@main.command("enum-aof")
@click.argument("n", type=click.IntRange(min=1))
def enum_aof(n: int) -> None:
    """List every almost overlap-free word of length at most N."""
    for w in oracle_mod.enumerate_aof(n):
        click.echo(w)


@main.command("closure")
@click.argument("word", required=False)
@click.option("--max-len", type=click.IntRange(min=1), required=True, help="Length bound.")
@click.option("--max-steps", type=click.IntRange(min=1), default=1_000_000, show_default=True)
@click.option("--r1-only", is_flag=True, help="List only power-collapsed members.")
@_data_errors
def closure_cmd(word: str | None, max_len: int, max_steps: int, r1_only: bool) -> None:
    """Bounded rewriting closure of WORD under YY <-> YYY."""
    batch = word is None
    for w in _words_in(word):
        res = oracle_mod.closure(_checked(w), max_len, max_steps)
        members = oracle_mod.r1_reduced_members(res) if r1_only else res.members
        header = (
            f"seed={res.seed} bound={res.length_bound}"
            f" exhausted={'true' if res.exhausted else 'false'} count={len(members)}"
        )
        _emit([header, *members], batch)


@main.group()
def classes() -> None:
    """Exceptional-class table."""


@classes.command("dump")
def classes_dump() -> None:
    """Print each class representative with its star-expression pattern."""
    for cp in classes_mod.pattern_table():
        click.echo(f"{cp.representative} {cp.pattern}")


def _thue_morse_prefix(n: int) -> str:
    w = "a"
    while len(w) < n:
        w = words.phi(w)
    return w[:n]


def _bench_word(family: str, n: int, rng: random.Random) -> str:
    if family == "thue-morse":
        return _thue_morse_prefix(n)
    return "".join(rng.choices("ab", k=n))


@main.command()
@click.option("--min", "min_n", type=click.IntRange(min=1), default=2**14, show_default=True)
@click.option("--max", "max_n", type=click.IntRange(min=1), default=2**20, show_default=True)
@click.option("--doubling/--no-doubling", default=True, help="Sweep sizes by powers of two.")
@click.option("--runs", type=click.IntRange(min=1), default=5, show_default=True)
@click.option("--seed", type=int, default=2026, show_default=True)
def bench(min_n: int, max_n: int, doubling: bool, runs: int, seed: int) -> None:
    """Median canonical-form timings on random and Thue-Morse inputs."""
    rng = random.Random(seed)
    sizes = []
    n = min_n
    while n <= max_n:
        sizes.append(n)
        if not doubling:
            break
        n *= 2
    for family in ("random", "thue-morse"):
        prev = None
        for n in sizes:
            w = _bench_word(family, n, rng)
            times = []
            for _ in range(runs):
                t0 = time.perf_counter()
                pipeline.eqaof(w)
                times.append(time.perf_counter() - t0)
            med = statistics.median(times)
            ratio = "-" if prev is None else f"{med / prev:.2f}"
            click.echo(
                f"family={family} n={n} median_s={med:.6f}"
                f" ratio={ratio} letters_per_s={int(n / med)}"
            )
            prev = med


if __name__ == "__main__":
    main()
