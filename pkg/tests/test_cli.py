import pytest

from weakschur import Kind, extend_weak_13m8, format_partition, make_partition, parse_partition
from weakschur.cli import main

PROTO6_TEXT = "schur v1 weak 2 6\n1 2 6\n3 4 5\n"
SEED1_TEXT = "schur v1 strong 1 1\n1\n"
BAD_WEAK_TEXT = "schur v1 weak 1 3\n1 2 3\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# --------------------------------------------------------------------- verify

def test_verify_valid_exits_0(tmp_path, capsys):
    path = write(tmp_path, "p.txt", PROTO6_TEXT)
    assert main(["verify", path]) == 0
    assert "VALID" in capsys.readouterr().out


def test_verify_invalid_exits_1_with_report(tmp_path, capsys):
    path = write(tmp_path, "p.txt", BAD_WEAK_TEXT)
    assert main(["verify", path]) == 1
    out = capsys.readouterr().out
    assert "1 + 2 = 3" in out
    assert "INVALID" in out


def test_verify_kind_override(tmp_path, capsys):
    path = write(tmp_path, "p.txt", PROTO6_TEXT)
    assert main(["verify", path, "--kind", "strong"]) == 1
    assert "1 + 1 = 2" in capsys.readouterr().out


def test_verify_missing_file_exits_2(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "absent.txt")]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_malformed_file_exits_2(tmp_path, capsys):
    path = write(tmp_path, "p.txt", "schur v1 weak 2 6\n1 2 6\n")
    assert main(["verify", path]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc_info:
        main([])
    assert exc_info.value.code == 2


# ------------------------------------------------------------------ construct

def test_construct_4m2_to_stdout(tmp_path, capsys):
    path = write(tmp_path, "seed.txt", SEED1_TEXT)
    assert main(["construct", "--rule", "4m2", path]) == 0
    out = capsys.readouterr().out
    assert parse_partition(out).subsets == ((3, 4, 5), (1, 2, 6))


def test_construct_to_file(tmp_path, capsys):
    seed = write(tmp_path, "seed.txt", SEED1_TEXT)
    target = tmp_path / "out.txt"
    assert main(["construct", "--rule", "13m8", seed, "-o", str(target)]) == 0
    p = parse_partition(target.read_text(encoding="utf-8"))
    assert (p.n, p.r) == (21, 3)


def test_construct_rejects_weak_seed(tmp_path, capsys):
    path = write(tmp_path, "seed.txt", PROTO6_TEXT)
    assert main(["construct", "--rule", "4m2", path]) == 1
    assert "requires a strong seed" in capsys.readouterr().err


def test_construct_rejects_invalid_strong_seed(tmp_path, capsys):
    path = write(tmp_path, "seed.txt", "schur v1 strong 1 2\n1 2\n")
    assert main(["construct", "--rule", "4m2", path]) == 1
    err = capsys.readouterr().err
    assert "not a valid strong partition" in err
    assert "1 + 1 = 2" in err


# ---------------------------------------------------------------------- chain

def test_chain_writes_stages_and_ratio_table(tmp_path, capsys):
    seed = write(tmp_path, "seed.txt", SEED1_TEXT)
    outdir = tmp_path / "stages"
    code = main(["chain", seed, "--schedule", "3m1,3m1,4m2", "-o", str(outdir)])
    assert code == 0
    out = capsys.readouterr().out
    assert "ratio" in out
    assert "13 -> 54" in out
    names = sorted(f.name for f in outdir.iterdir())
    assert names == [
        "stage00_seed.txt",
        "stage01_3m1.txt",
        "stage02_3m1.txt",
        "stage03_4m2.txt",
    ]
    final = parse_partition((outdir / "stage03_4m2.txt").read_text(encoding="utf-8"))
    assert (final.n, final.r) == (54, 4)


def test_chain_stdout_stages_parse(tmp_path, capsys):
    seed = write(tmp_path, "seed.txt", SEED1_TEXT)
    assert main(["chain", seed, "--schedule", "3m1"]) == 0
    out = capsys.readouterr().out
    assert "# stage 1: rule 3m1" in out
    assert "schur v1 strong 2 4" in out


def test_chain_bad_schedule_exits_2(tmp_path, capsys):
    seed = write(tmp_path, "seed.txt", SEED1_TEXT)
    assert main(["chain", seed, "--schedule", "4m2,3m1"]) == 2
    assert "no further step may follow" in capsys.readouterr().err


# --------------------------------------------------------------------- search

def test_search_emits_partition_with_flags(capsys):
    assert main(["search", "--colors", "2", "--kind", "weak"]) == 0
    out = capsys.readouterr().out
    assert "# exhaustive: true" in out
    assert "# nodes:" in out
    p = parse_partition(out)  # comment lines are ignored by the parser
    assert p.n == 8
    assert p.r == 2


def test_search_budget_flags(capsys):
    assert main(["search", "--colors", "3", "--kind", "weak", "--max-nodes", "40"]) == 0
    out = capsys.readouterr().out
    assert "# exhaustive: false" in out


# ---------------------------------------------------------------------- pairs

def test_pairs_lists_weak_pairs(tmp_path, capsys):
    p21 = extend_weak_13m8(make_partition(1, [[1]], Kind.STRONG))
    path = write(tmp_path, "p21.txt", format_partition(p21))
    assert main(["pairs", path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[:4] == [
        "subset 2: (1, 2)",
        "subset 2: (2, 4)",
        "subset 2: (4, 8)",
        "subset 3: (3, 6)",
    ]
    assert out[4] == "4 weak pair(s)"


# ---------------------------------------------------------------------- stats

def test_stats_reports_orders_and_ratios(tmp_path, capsys):
    a = write(tmp_path, "a.txt", SEED1_TEXT)
    b = write(tmp_path, "b.txt", PROTO6_TEXT)
    assert main(["stats", a, b]) == 0
    out = capsys.readouterr().out
    assert "kind=strong r=1 n=1" in out
    assert "kind=weak r=2 n=6" in out
    assert "order ratio vs previous: 6.000000" in out
