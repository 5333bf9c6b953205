"""Test the input/output of random_circuit_codes."""
import json

import oyaml as yaml
import pytest

from random_circuit_codes.analysis import ScalingFit, ThresholdRow
from random_circuit_codes.errors import ConfigError, RecordParseError
from random_circuit_codes.gateways import io


def test_read_yaml_keeps_order(out_dir):
    out_dir.mkdir()
    file = out_dir / "config.yaml"
    file.write_text("n: 4\nkind: entropy\nrate: 1/4\n")
    assert list(io.read_yaml(file)) == ["n", "kind", "rate"]
    json_file = out_dir / "config.json"
    json_file.write_text('{"kind": "entropy", "n": 4}')
    assert io.read_yaml(json_file) == {"kind": "entropy", "n": 4}


@pytest.mark.parametrize("content", ["- 1\n- 2\n", "kind: [unclosed\n"])
def test_read_yaml_rejects(out_dir, content):
    out_dir.mkdir()
    file = out_dir / "config.yaml"
    file.write_text(content)
    with pytest.raises(ConfigError):
        io.read_yaml(file)
    with pytest.raises(ConfigError):
        io.read_yaml(out_dir / "missing.yaml")


def test_write_and_read_record(out_dir, record_factory):
    record = record_factory()
    output = io.OutputIO(out_dir)
    csv_file, json_file = output.write_record(record)
    lines = csv_file.read_text().splitlines()
    assert lines[0] == "kind,p,size,estimate,stderr,trials"
    assert len(lines) == 1 + len(record.points)
    assert json.loads(json_file.read_text())["config_hash"] == record.config_hash
    assert io.read_record(json_file) == record


def test_read_record_rejects(out_dir):
    out_dir.mkdir()
    file = out_dir / "record.json"
    file.write_text("{not json")
    with pytest.raises(RecordParseError):
        io.read_record(file)
    with pytest.raises(RecordParseError):
        io.read_fit(out_dir / "missing.json")


def test_write_fit_summary_and_manifest(out_dir):
    output = io.OutputIO(out_dir)
    fit = ScalingFit(0.15, 1.2, 0.3, 0.5, 0.2, (0.1, 0.2), 1e-9, sigma_pc=0.001)
    output.write_fit(fit)
    assert io.read_fit(out_dir / io.FIT_JSON) == fit
    output.write_summary([ThresholdRow("1/4", 0.15, 0.001, 0.12)])
    assert (out_dir / io.SUMMARY_CSV).read_text() == "rate,p_c,sigma_p_c,p_hashing\n1/4,0.15,0.001,0.12\n"
    output.write_manifest(seed=7, version="v1.0", config={"kind": "entropy"})
    manifest = yaml.safe_load((out_dir / io.MANIFEST).read_text())
    assert manifest == {
        "seed": 7,
        "version": "v1.0",
        "config": {"kind": "entropy"},
        "files": [io.FIT_JSON, io.SUMMARY_CSV],
    }


def test_cleanup_removes_written_files(out_dir, record_factory):
    output = io.OutputIO(out_dir)
    output.write_record(record_factory())
    stray = out_dir / "notes.txt"
    stray.write_text("kept")
    output.cleanup()
    assert sorted(path.name for path in out_dir.iterdir()) == ["notes.txt"]
    assert output.written == []
