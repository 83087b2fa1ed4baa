import csv
import json
import xml.etree.ElementTree as ET

import pytest

from boolsyn.analysis import CSV_HEADER, read_rows
from boolsyn.cli import main
from boolsyn.network import constant_network, identity_network, save_genome


def run(*argv):
    return main([str(a) for a in argv])


def table(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_evolve_zero_generations(tmp_path):
    out = tmp_path / "run"
    assert run("evolve", "--objective", "MAX_REDUNDANCY", "--population-size", 10, "--generations", 0,
               "--seed", 1, "--out", out) == 0
    assert len(list((out / "genomes").glob("*.json"))) == 10
    assert len(table(out / "evolution_log.csv")) == 1
    doc = json.loads((out / "run_config.json").read_text())
    assert doc["seed"] == 1 and doc["population_size"] == 10


def test_evolve_rerun_is_byte_identical(tmp_path):
    args = ["evolve", "--objective", "MAX_SYNERGY", "--population-size", 8, "--generations", 3, "--seed", 7,
            "--analyze-top", 2]
    assert run(*args, "--out", tmp_path / "a") == 0
    assert run(*args, "--out", tmp_path / "b") == 0
    for name in ["evolution_log.csv", "analysis.csv"] + [f"genomes/rank_{i}.json" for i in range(8)]:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    cfg_a, cfg_b = (json.loads((tmp_path / d / "run_config.json").read_text()) for d in "ab")
    assert cfg_a.pop("out_dir") != cfg_b.pop("out_dir")
    assert cfg_a == cfg_b


def test_evolve_from_config_file(tmp_path):
    cfg = tmp_path / "run.toml"
    cfg.write_text(f'objective = "MAX_TSE"\npopulation_size = 6\ngenerations = 1\nseed = 3\nout_dir = "{tmp_path / "o"}"\n')
    assert run("evolve", "--config", cfg) == 0
    assert len(table(tmp_path / "o" / "evolution_log.csv")) == 2


@pytest.mark.parametrize(
    "name,text,line",
    [
        ("bad.toml", 'objective = "MAX_TSE"\nbogus = 1\n', 2),
        ("bad.json", '{\n  "population_size": 7\n}\n', 2),
        ("bad.toml", 'generations = "many"\n', 1),
        ("bad.toml", 'seed = 1\nobjective = "MAX_FUN"\n', 2),
    ],
)
def test_invalid_config_is_line_referenced(tmp_path, capsys, name, text, line):
    cfg = tmp_path / name
    cfg.write_text(text)
    assert run("evolve", "--config", cfg) != 0
    assert f"{name}:{line}:" in capsys.readouterr().err


def test_analyze_reference_genomes(tmp_path):
    save_genome(identity_network(), tmp_path / "identity.json")
    save_genome(constant_network(0), tmp_path / "constant.json")
    out = tmp_path / "rows.csv"
    assert run("analyze", tmp_path / "identity.json", tmp_path / "constant.json", "--seed", 0, "--out", out) == 0
    with open(out) as fh:
        assert fh.readline().strip() == ",".join(CSV_HEADER)
    ident, const = read_rows(out)
    assert ident.omega_bits == pytest.approx(0.0, abs=1e-9)
    assert ident.attractor_count == 4096
    assert ident.derrida == 1.0
    assert ident.phi_r_bits == pytest.approx(0.0, abs=1e-9)
    assert const.joint_entropy_bits == 0.0
    assert const.attractor_count == 1


def test_analyze_malformed_genome_names_file(tmp_path, capsys):
    bad = tmp_path / "broken_genome.json"
    bad.write_text('{"n": 12, "k": 5, "tables": ["00"]}')
    assert run("analyze", bad, "--seed", 0, "--out", tmp_path / "x.csv") != 0
    assert "broken_genome.json" in capsys.readouterr().err


def test_baseline_is_reproducible_and_idempotent(tmp_path):
    for d in ("a", "b"):
        assert run("baseline", "--count", 2, "--seed", 5, "--out", tmp_path / d) == 0
    a, b = tmp_path / "a", tmp_path / "b"
    assert len(list((a / "genomes").glob("*.json"))) == 2
    assert (a / "analysis.csv").read_bytes() == (b / "analysis.csv").read_bytes()
    # re-analysing the baseline genomes reproduces its rows
    assert run("analyze", a / "genomes", "--seed", 5, "--out", tmp_path / "re.csv") == 0
    assert (tmp_path / "re.csv").read_bytes() == (a / "analysis.csv").read_bytes()


def test_baseline_rejects_zero_count(tmp_path):
    assert run("baseline", "--count", 0, "--seed", 1, "--out", tmp_path) != 0


@pytest.fixture(scope="module")
def baseline_csv(tmp_path_factory):
    d = tmp_path_factory.mktemp("base")
    assert run("baseline", "--count", 4, "--seed", 2, "--out", d) == 0
    return d / "analysis.csv"


def test_report_identical_files(tmp_path, baseline_csv):
    other = tmp_path / "copy.csv"
    other.write_bytes(baseline_csv.read_bytes())
    assert run("report", baseline_csv, other, "--out", tmp_path / "rep") == 0
    rows = table(tmp_path / "rep" / "comparison.csv")
    assert len(rows) == 8
    for r in rows:
        assert float(r["p_value"]) == pytest.approx(1.0)
        assert float(r["u_statistic"]) + float(r["u_statistic_reverse"]) == 16


def test_report_svgs_are_valid_and_deterministic(tmp_path, baseline_csv):
    log_dir = tmp_path / "evo"
    run("evolve", "--population-size", 6, "--generations", 2, "--seed", 1, "--out", log_dir)
    for d in ("r1", "r2"):
        assert run("report", baseline_csv, baseline_csv, "--logs", log_dir / "evolution_log.csv",
                   "--out", tmp_path / d) == 0
    svgs = sorted(p.name for p in (tmp_path / "r1").glob("*.svg"))
    assert "trajectories.svg" in svgs and len(svgs) == 9
    for name in svgs:
        text = (tmp_path / "r1" / name).read_bytes()
        assert ET.fromstring(text).tag.endswith("svg")
        assert text == (tmp_path / "r2" / name).read_bytes()
    assert (tmp_path / "r1" / "comparison.csv").read_bytes() == (tmp_path / "r2" / "comparison.csv").read_bytes()


def test_report_schema_mismatch(tmp_path, baseline_csv, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("network_id,class,omega_bits\nx,random,1.0\n")
    assert run("report", baseline_csv, bad, "--out", tmp_path / "rep") != 0
    assert "bad.csv" in capsys.readouterr().err


def test_report_needs_two_files(tmp_path, baseline_csv):
    assert run("report", baseline_csv, "--out", tmp_path / "rep") != 0


def test_missing_seed_is_defaulted_and_echoed(tmp_path, caplog):
    with caplog.at_level("WARNING", logger="boolsyn"):
        assert run("baseline", "--count", 1, "--out", tmp_path) == 0
    assert "seed=0" in caplog.text
