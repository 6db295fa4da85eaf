"""Smoke tests for the Python module and the CLI's file contracts."""

import csv
import json
import math
import os
import subprocess
from pathlib import Path

import pytest

import infoconv

CLI = os.environ.get("INFOCONV_CLI")
SCHEMAS = Path(os.environ.get("INFOCONV_SCHEMAS", "schemas"))


def load_schema(name):
    with open(SCHEMAS / name) as f:
        return json.load(f)


def validate(instance, schema_name):
    jsonschema = pytest.importorskip("jsonschema")
    try:
        from referencing import Registry, Resource

        resources = [
            (p.name, Resource.from_contents(json.loads(p.read_text())))
            for p in SCHEMAS.glob("*.schema.json")
        ]
        validator = jsonschema.Draft7Validator(
            load_schema(schema_name), registry=Registry().with_resources(resources)
        )
        validator.validate(instance)
    except ImportError:
        resolver = jsonschema.RefResolver(
            base_uri=(SCHEMAS / schema_name).resolve().as_uri(),
            referrer=load_schema(schema_name),
        )
        jsonschema.validate(instance, load_schema(schema_name), resolver=resolver)


def test_entropy_and_lattice():
    assert infoconv.entropy([0.5, 0.5]) == pytest.approx(1.0)
    assert infoconv.entropy([0.25, 0.75]) == pytest.approx(0.8113, abs=1e-4)
    assert [len(infoconv.lattice_atoms(n)) for n in (1, 2, 3, 4)] == [1, 4, 18, 166]
    assert infoconv.lattice_height(3) == 6
    ranks = dict(infoconv.lattice_atoms(3))
    assert ranks["{01}"] == 5
    with pytest.raises(infoconv.ValidationError):
        infoconv.entropy([0.5, 0.6])


def test_stationary_and_mi():
    pi = infoconv.stationary_distribution([[0.0, 1.0], [1.0, 0.0]])
    assert pi == pytest.approx([0.5, 0.5])
    mi = infoconv.temporal_mutual_information(
        [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]], [0.25] * 4
    )
    assert mi == pytest.approx(2.0)


def test_gate_pair_biases():
    expected = {"AND": 0.5775, "OR": 0.5775, "XOR": 0.8333}
    for kind, macro_bsyn in expected.items():
        scales = infoconv.gate_pair_tpms(kind)
        macro = infoconv.temporal_pid(scales["macro"]["tpm"], scales["macro"]["input"])
        micro = infoconv.temporal_pid(scales["micro"]["tpm"], scales["micro"]["input"])
        assert macro["bsyn"] == pytest.approx(macro_bsyn, abs=2e-3)
        assert macro["bsyn"] > micro["bsyn"]
        atom_sum = sum(macro["atoms"].values())
        assert atom_sum == pytest.approx(macro["total_mi"], abs=1e-9)


def test_decompose_joint_parity():
    joint = [[0.25, 0.0], [0.0, 0.25], [0.0, 0.25], [0.25, 0.0]]
    result = infoconv.decompose_joint(joint, 2)
    assert result["atoms"]["{01}"] == pytest.approx(1.0)
    assert result["atoms"]["{0}{1}"] == pytest.approx(0.0)
    assert result["bsyn"] == pytest.approx(1.0)


def test_expansion_preserves_information():
    rows = infoconv.generate_tpm("gaussian", 12345)
    pi = infoconv.stationary_distribution(rows)
    mi = infoconv.temporal_mutual_information(rows, pi)
    child = infoconv.expand_node(rows, 0)
    pi_child = infoconv.stationary_distribution(child)
    mi_child = infoconv.temporal_mutual_information(child, pi_child)
    assert mi_child == pytest.approx(mi, abs=1e-9)


def test_run_expansion_experiment():
    rows = infoconv.run_expansion_experiment("gaussian", 5, seed=9, levels=2, threads=2)
    assert len(rows) == 5
    for row in rows:
        assert not row["skipped"]
        assert row["macro_bsyn"] > row["micro_bsyn"]


def test_effective_information_identity():
    rows = infoconv.generate_tpm("deterministic", 7)
    report = infoconv.effective_information(rows)
    assert report["ei"] == pytest.approx(
        report["determinism"] - report["degeneracy"], abs=1e-12
    )
    uniform = [1.0 / len(rows)] * len(rows)
    assert report["ei"] == pytest.approx(
        infoconv.temporal_mutual_information(rows, uniform), abs=1e-12
    )
    merged = infoconv.coarse_grain_tpm(rows, [0] * len(rows))
    assert infoconv.effective_information(merged)["ei"] == pytest.approx(0.0)


def test_pearson_against_scipy():
    scipy_stats = pytest.importorskip("scipy.stats")
    xs = [1.0, 2.0, 3.0, 4.0, 5.5, 7.25]
    ys = [2.0, 1.0, 3.0, 5.0, 4.5, 8.0]
    rho, p = infoconv.pearson(xs, ys)
    ref = scipy_stats.pearsonr(xs, ys)
    assert rho == pytest.approx(ref.statistic, abs=1e-12)
    assert p == pytest.approx(ref.pvalue, abs=1e-10)


@pytest.fixture(scope="module")
def cli():
    if not CLI:
        pytest.skip("INFOCONV_CLI not set")
    return CLI


def run_cli(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def test_cli_logic_gates(cli, tmp_path):
    out = tmp_path / "gates"
    proc = run_cli(cli, "logic-gates", "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    with open(out / "logic_gates.csv") as f:
        reader = csv.DictReader(f)
        assert reader.fieldnames == ["gate", "micro_mi", "macro_mi", "micro_bsyn", "macro_bsyn"]
        rows = {row["gate"]: row for row in reader}
    assert float(rows["XOR"]["macro_mi"]) == pytest.approx(1.0, abs=1e-3)
    assert float(rows["XOR"]["micro_mi"]) == pytest.approx(2.5, abs=1e-3)
    assert float(rows["XOR"]["macro_bsyn"]) == pytest.approx(0.833, abs=2e-3)
    assert float(rows["AND"]["macro_mi"]) == pytest.approx(
        float(rows["OR"]["macro_mi"]), abs=1e-12
    )
    assert float(rows["AND"]["macro_bsyn"]) == pytest.approx(
        float(rows["OR"]["macro_bsyn"]), abs=1e-12
    )
    for gate in ("AND", "OR", "XOR"):
        with open(out / f"spectrum_{gate}.json") as f:
            validate(json.load(f), "spectrum.schema.json")


def test_cli_expansion(cli, tmp_path):
    out = tmp_path / "exp"
    proc = run_cli(
        cli, "expansion", "--seed", "5", "--n-systems", "6", "--kind", "deterministic",
        "--threads", "2", "--svg", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    with open(out / "summary_deterministic.json") as f:
        summary = json.load(f)
    validate(summary, "expansion_summary.schema.json")
    assert summary["n_analyzed"] + summary["n_skipped"] == 6
    with open(out / "expansion_deterministic.csv") as f:
        header = f.readline().strip()
    assert header == "system_id,kind,macro_bsyn,meso_bsyn,micro_bsyn,mi_bits,gain"
    assert (out / "scatter_deterministic.svg").exists()

    # missing seed is a usage error with the documented exit code
    proc = run_cli(cli, "expansion", "--n-systems", "6", "--out", str(tmp_path / "x"))
    assert proc.returncode == 2


def test_cli_pid_and_ei_scan(cli, tmp_path):
    tpm = {
        "n_elements": 2,
        "rows": [[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 1.0, 0.0],
                 [1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]],
    }
    validate(tpm, "tpm.schema.json")
    tpm_file = tmp_path / "tpm.json"
    tpm_file.write_text(json.dumps(tpm))
    (tmp_path / "partition.json").write_text("[0, 0, 1, 2]")

    out = tmp_path / "pid"
    proc = run_cli(cli, "pid", "--tpm", str(tpm_file), "--input", "maxent", "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    with open(out / "pid.json") as f:
        pid = json.load(f)
    validate(pid, "pid_result.schema.json")
    assert sum(pid["atoms"].values()) == pytest.approx(pid["total_mi"], abs=1e-9)

    out = tmp_path / "ei"
    proc = run_cli(cli, "ei-scan", "--tpm", str(tpm_file), "--partition",
                   str(tmp_path / "partition.json"), "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    with open(out / "ei_scan.json") as f:
        scan = json.load(f)
    validate(scan, "ei_scan.schema.json")
    assert scan["delta"]["ei"] > 0
    assert scan["delta"]["degeneracy"] < 0

    # malformed TPM file exits with the validation code
    bad = tmp_path / "bad.json"
    bad.write_text('{"n_elements": 1, "rows": [[0.5, 0.6], [1.0, 0.0]]}')
    proc = run_cli(cli, "pid", "--tpm", str(bad), "--out", str(tmp_path / "y"))
    assert proc.returncode == 2
