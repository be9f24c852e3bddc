import csv
import io
import os
import subprocess
import sys

import pytest

from langtrotter import cli, genus2, ltlab


def run(argv, capsys):
    rc = cli.run(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def parse_csv(text):
    lines = text.splitlines()
    assert lines[0].startswith("# langtrotter ") and lines[0].endswith(" v1")
    return list(csv.reader(io.StringIO("\n".join(lines[1:]))))


@pytest.fixture
def curve_file(tmp_path):
    path = tmp_path / "curves.txt"
    path.write_text("# two curves\nA : 1, 1, 0, 0, 0, 1\nB : -1, 0, 2, 1, 0, 1\n")
    return path


def test_census(capsys):
    rc, out, err = run(["census", "--ell", "3", "--n", "1"], capsys)
    assert rc == 0
    rows = {r[0]: r for r in parse_csv(out)[1:]}
    assert rows["borel"][3] == rows["borel"][4] == "648"
    assert rows["H"][3] == rows["H"][4] == "162"
    assert "agrees" in err


def test_bounds_grh(capsys):
    rc, out, _ = run(["bounds", "--n", "1", "--regime", "grh"], capsys)
    assert rc == 0
    assert ["1", "grh", "0", "1", "12"] in parse_csv(out)


def test_curve_scan_cache_warm_is_identical(tmp_path, curve_file, capsys):
    cache = tmp_path / "cache.csv"
    out1, out2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    before = curve_file.read_bytes()
    rc, _, err1 = run(["curve-scan", "--curve", str(curve_file), "--pmax", "1000", "--cache", str(cache), "--out", str(out1)], capsys)
    assert rc == 0 and "0 from cache" in err1
    rc, _, err2 = run(["curve-scan", "--curve", str(curve_file), "--pmax", "1000", "--cache", str(cache), "--out", str(out2)], capsys)
    assert rc == 0 and "(0 computed" in err2
    assert out1.read_bytes() == out2.read_bytes()
    assert curve_file.read_bytes() == before
    rows = parse_csv(out1.read_text())
    assert rows[0] == ["label"] + list(genus2.RECORD_HEADER)
    a_rows = [r for r in rows[1:] if r[0] == "A"]
    expect = genus2.frobenius_records(genus2.HyperellipticCurve((1, 1, 0, 0, 0, 1)), 1000)
    assert [tuple(int(v) for v in r[1:]) for r in a_rows] == [rec.csv_row() for rec in expect]


def _entries(n):
    out = {}
    for i in range(n):
        p = 3 + 2 * i
        out[("C%d" % (i % 5), p)] = (i % 17 - 8, 3 * i - 50)
    return out


def test_cache_roundtrip_10k(tmp_path):
    recs = _entries(10**4)
    assert cli.cache_roundtrip(recs, tmp_path / "c.csv") == recs


def test_cache_truncation_salvages_prefix(tmp_path):
    path = tmp_path / "c.csv"
    recs = _entries(100)
    cli.write_cache(path, recs)
    data = path.read_bytes()
    path.write_bytes(data[: len(data) - 7])
    load = cli.read_cache(path)
    assert load.truncated and not load.corrupt
    assert len(load.entries) == 99
    assert all(recs[k] == v for k, v in load.entries.items())


def test_checksum_flip_recomputes_one_row(tmp_path, curve_file, capsys):
    cache = tmp_path / "cache.csv"
    args = ["curve-scan", "--curve", str(curve_file), "--pmax", "500", "--cache", str(cache), "--out", str(tmp_path / "o.csv")]
    assert run(args, capsys)[0] == 0
    lines = cache.read_text().split("\n")
    label, p, a, b, crc = lines[10].split(",")
    lines[10] = ",".join([label, p, a, str(int(b) + 1), crc])
    cache.write_text("\n".join(lines))
    assert cli.read_cache(cache).corrupt == [11]
    with pytest.warns(UserWarning, match="1 corrupt"):
        rc, _, err = run(args, capsys)
    assert rc == 0 and "(1 computed" in err
    assert cache.read_text().split("\n")[10].split(",")[3] == b


def test_version_mismatch_recomputes(tmp_path):
    path = tmp_path / "c.csv"
    cli.write_cache(path, _entries(5))
    path.write_text(path.read_text().replace("v1", "v0", 1))
    with pytest.warns(UserWarning, match="version"):
        load = cli.read_cache(path)
    assert not load.version_ok and load.entries == {}


def test_inconsistent_cache_exit_2(tmp_path, curve_file, capsys):
    cache = tmp_path / "cache.csv"
    bad = {("A", 5): (50, 0)}  # violates |a_p| <= 4 sqrt p
    cli.write_cache(cache, bad)
    rc, _, err = run(["curve-scan", "--curve", str(curve_file), "--pmax", "10", "--cache", str(cache)], capsys)
    assert rc == 2 and "error-code: E_ARITHMETIC" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["census", "--ell", "4"],
        ["census", "--ell", "17"],
        ["census", "--ell", "5", "--n", "2", "--residue-degrees", "1"],
        ["bounds", "--n", "1", "--bogus"],
        ["bounds"],
        ["curve-scan", "--pmax", "1000000"],
        ["curve-scan", "--pmax", "100", "--curve", "/nonexistent/curves.txt"],
        ["simulate", "--group", "torus:x"],
        ["simulate", "--group", "gsp4-trace:5"],
        ["lt-count", "--x", "100,10"],
        ["twists"],
        ["bounds", "--n", "1", "--threads", "0"],
        ["frobnicate"],
    ],
)
def test_validation_exit_1(argv, capsys):
    rc, _, err = run(argv, capsys)
    assert rc == 1
    assert err.strip().splitlines()[-1].startswith("error-code: E_VALIDATION")


def test_singular_curve_file(tmp_path, capsys):
    path = tmp_path / "sing.txt"
    path.write_text("S : 0, 0, 1, 0, 0, 1\n")
    rc, _, err = run(["curve-scan", "--curve", str(path), "--pmax", "50"], capsys)
    assert rc == 1 and "E_VALIDATION" in err


def test_config_file_and_flag_precedence(tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("# defaults\nregime = unconditional\na-zero = 1\n")
    rc, out, _ = run(["bounds", "--n", "2", "--config", str(conf)], capsys)
    assert rc == 0 and parse_csv(out)[1:] == [["2", "unconditional", "1", "2", "15"]]
    rc, out, _ = run(["bounds", "--n", "2", "--config", str(conf), "--regime", "grh"], capsys)
    assert parse_csv(out)[1:] == [["2", "grh", "1", "2", "21"]]
    conf.write_text("colour = red\n")
    assert run(["bounds", "--n", "1", "--config", str(conf)], capsys)[0] == 1


def test_simulate_deterministic(tmp_path, capsys):
    outs = []
    for seed in ("3", "3", "4"):
        target = tmp_path / f"s{len(outs)}.csv"
        assert run(["simulate", "--group", "torus:5", "--x", "20000", "--seed", seed, "--out", str(target)], capsys)[0] == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1] != outs[2]


def test_simulate_gsp4_classes(capsys):
    rc, out, err = run(["simulate", "--group", "gsp4-trace:3", "--x", "5000"], capsys)
    assert rc == 0 and "chi-square" in err
    rows = parse_csv(out)
    assert rows[0] == ["p", "class_label"] and len(rows) == 1 + 669


def test_twists_synthetic(tmp_path, capsys):
    rc, out, err = run(["twists", "--synthetic", "2,5", "--out", str(tmp_path)], capsys)
    assert rc == 0
    rows = parse_csv((tmp_path / "twists.csv").read_text())
    assert [r[:3] for r in rows[1:]] == [["0", "1", "1"], ["1", "5", "2"]]
    assert "[F:Q] = 1" in err and "m = 5" in err and "S = [1, 4]" in err


def test_twists_exceptions_warns(capsys):
    with pytest.warns(UserWarning, match="heuristic"):
        rc, _, _ = run(["twists", "--synthetic", "2,5", "--twist-exceptions", "1"], capsys)
    assert rc == 0


def test_twists_from_files(tmp_path, capsys):
    from langtrotter import twists

    system = twists.synthetic_quadratic_system()
    table = tmp_path / "table.csv"
    table.write_text("p,c0,c1\n" + "".join(f"{p},{a[0]},{a[1]}\n" for p, a in system.table))
    rc, _, err = run(
        ["twists", "--field-poly=-2,0,1", "--automorphism=0,-1", "--table", str(table), "--level", "5"],
        capsys,
    )
    assert rc == 0 and "|Gamma| = 2" in err


def test_lt_count(tmp_path, curve_file, capsys):
    rc, out, _ = run(["lt-count", "--curve", str(curve_file), "--label", "A", "--x", "1000,5000", "--a", "0,1"], capsys)
    assert rc == 0
    rows = parse_csv(out)
    assert rows[0] == list(ltlab.REPORT_HEADER)
    assert len(rows) == 5
    rc, _, _ = run(["lt-count", "--curve", str(curve_file), "--x", "1000"], capsys)
    assert rc == 1  # two curves and no label


def test_write_atomic_keeps_old_file_on_failure(tmp_path, monkeypatch):
    target = tmp_path / "a.csv"
    cli.write_atomic(target, "old\n")

    def boom(src, dst):
        raise OSError("disk full")

    monkeypatch.setattr(os, "replace", boom)
    with pytest.raises(OSError):
        cli.write_atomic(target, "new\n")
    assert target.read_text() == "old\n"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["a.csv"]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "langtrotter.cli", "bounds", "--n", "2", "--regime", "grh", "--a-zero", "0"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1] == "2,grh,0,2,23"
    res = subprocess.run([sys.executable, "-m", "langtrotter.cli", "census", "--ell", "9"], capture_output=True, text=True)
    assert res.returncode == 1 and res.stderr.startswith("error-code: E_VALIDATION")
