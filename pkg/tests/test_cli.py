"""Command-line surface: outputs, exit codes, batch mode."""
from __future__ import annotations

import re

import pytest
from click.testing import CliRunner

from aofcanon.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args, **kw):
    return runner.invoke(main, list(args), **kw)


def test_check_true_false_exit_codes(runner):
    res = run(runner, "check", "uniform", "abaabbab")
    assert res.exit_code == 0 and res.output == "true\n"
    res = run(runner, "check", "uniform", "aabaabb")
    assert res.exit_code == 1 and res.output == "false\n"
    res = run(runner, "check", "overlap-free", "aaa")
    assert res.exit_code == 1 and res.output == "false\n"
    res = run(runner, "check", "almost-overlap-free", "aaa")
    assert res.exit_code == 0 and res.output == "true\n"


def test_check_batch_exit_zero(runner):
    res = run(runner, "check", "uniform", input="abaabbab\naabaabb\n")
    assert res.exit_code == 0
    assert res.output == "true\nfalse\n"


def test_reduce_modes(runner):
    assert run(runner, "reduce", "r1", "abaaab").output == "abaab\n"
    assert run(runner, "reduce", "r", "abaabaaba").output == "abaaba\n"
    assert run(runner, "reduce", "rt", "aabaabbabb").output == "abaabbab\n"


def test_reduce_batch(runner):
    res = run(runner, "reduce", "r1", input="aaaa\nbbbb\nab\n")
    assert res.output == "aa\nbb\nab\n"
    assert res.exit_code == 0


def test_tails_report(runner):
    res = run(runner, "tails", "aabaabbabb")
    assert res.output == (
        "side=left class=A family=nonuniform span=1..8\n"
        "side=right class=B family=nonuniform span=3..10\n"
    )
    assert run(runner, "tails", "abab").output == "none\n"


def test_tails_batch_joins_lines(runner):
    res = run(runner, "tails", input="aabaabbabb\nabab\n")
    assert res.output == (
        "side=left class=A family=nonuniform span=1..8; "
        "side=right class=B family=nonuniform span=3..10\n"
        "none\n"
    )


def test_frames_output(runner):
    res = run(runner, "frames", "abaabbab")
    assert res.output == "h=a core=baabba t=b\nxi=babaabbaba\n"
    res = run(runner, "frames", "ababa")
    assert res.output == "h=- core=abab t=a\nxi=ababab\n"


def test_frames_rejects_non_uniform(runner):
    res = run(runner, "frames", "aabaabb")
    assert res.exit_code == 65


def test_ancestor_report(runner):
    res = run(runner, "ancestor", "aabaabbabb")
    assert res.output == "anc=b ell=3 L=a,-,- R=b,-,- h=a,-,- t=b,b,-\n"


def test_ancestor_trace(runner):
    res = run(runner, "ancestor", "aabaabbabb", "--trace")
    assert res.output == (
        "k=1 U=aabaabbabb L=a R=b h=a t=b\n"
        "k=2 U=bab L=- R=- h=- t=b\n"
        "k=3 U=b L=- R=- h=- t=-\n"
        "anc=b ell=3 L=a,-,- R=b,-,- h=a,-,- t=b,b,-\n"
    )


def test_ancestor_batch(runner):
    res = run(runner, "ancestor", input="aabaabbabb\nbab\n")
    assert res.output == (
        "anc=b ell=3 L=a,-,- R=b,-,- h=a,-,- t=b,b,-\n"
        "anc=b ell=2 L=-,- R=-,- h=-,- t=b,-\n"
    )


def test_normalize_command(runner):
    res = run(runner, "normalize", "aabbaabbaabb")
    assert res.exit_code == 0 and res.output == "aabbaabb\n"
    # rebuild succeeds but the stop word has no class representative
    res = run(runner, "normalize", "aabaabab")
    assert res.exit_code == 1 and res.output == "FALSE\n"
    # rebuild runs even when the result fails the almost overlap-free check
    res = run(runner, "normalize", "bababb")
    assert res.exit_code == 0 and res.output == "bababb\n"


def test_eqaof_exit_codes(runner):
    res = run(runner, "eqaof", "bababb")
    assert res.exit_code == 1 and res.output == "FALSE\n"
    res = run(runner, "eqaof", "aabbaabbaabb")
    assert res.exit_code == 0 and res.output == "aabbaabb\n"


def test_eqaof_batch(runner):
    res = run(runner, "eqaof", input="bababb\nabab\n")
    assert res.exit_code == 0
    assert res.output == "FALSE\nabab\n"


def test_equiv_exit_codes(runner):
    res = run(runner, "equiv", "abab", "ababab")
    assert res.exit_code == 0 and res.output == "EQUIVALENT\n"
    res = run(runner, "equiv", "a", "b")
    assert res.exit_code == 1 and res.output == "NOT_EQUIVALENT\n"
    res = run(runner, "equiv", "ababaa", "abababaa")
    assert res.exit_code == 2 and res.output == "UNKNOWN\n"


def test_equiv_batch_pairs(runner):
    res = run(runner, "equiv", input="abab ababab\na b\n")
    assert res.exit_code == 0
    assert res.output == "EQUIVALENT\nNOT_EQUIVALENT\n"


def test_equiv_single_word_is_usage_error(runner):
    res = run(runner, "equiv", "abab")
    assert res.exit_code == 64


def test_enum_aof(runner):
    res = run(runner, "enum-aof", "3")
    lines = res.output.splitlines()
    assert len(lines) == 14
    assert lines[:2] == ["a", "b"]
    assert "aaa" in lines and "bbb" in lines


def test_closure_output(runner):
    res = run(runner, "closure", "ab", "--max-len", "6")
    assert res.output == "seed=ab bound=6 exhausted=true count=1\nab\n"
    res = run(runner, "closure", "aaa", "--max-len", "5", "--r1-only")
    assert res.output == "seed=aaa bound=5 exhausted=false count=1\naa\n"


def test_classes_dump(runner):
    res = run(runner, "classes", "dump")
    lines = res.output.splitlines()
    assert len(lines) == 30
    assert lines[0] == "aabaa aabaa"
    assert lines[8] == "aabaabbaabaa (aab)^2(aab)*(b(aab)*aab)*(baa)*(baa)^2"
    assert lines[-1] == "ba ba"


def test_bench_smoke(runner):
    res = run(runner, "bench", "--min", "64", "--max", "64", "--runs", "1", "--no-doubling")
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert len(lines) == 2
    pat = re.compile(
        r"family=(random|thue-morse) n=64 median_s=\d+\.\d{6} ratio=- letters_per_s=\d+"
    )
    assert all(pat.fullmatch(line) for line in lines)


def test_empty_word_is_rejected(runner):
    res = run(runner, "eqaof", "")
    assert res.exit_code == 65
    res = run(runner, "check", "uniform", input="ab\n\n")
    assert res.exit_code == 65


def test_invalid_letters_rejected(runner):
    res = run(runner, "eqaof", "abc")
    assert res.exit_code == 65


def test_usage_errors(runner):
    assert run(runner, "nosuchcmd").exit_code == 64
    assert run(runner, "reduce").exit_code == 64
    assert run(runner, "closure", "ab").exit_code == 64  # missing --max-len
    assert run(runner, "enum-aof", "0").exit_code == 64


def test_version_flag(runner):
    assert run(runner, "--version").exit_code == 0
