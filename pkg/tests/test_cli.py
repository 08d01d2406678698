"""
End-to-end runs of the probescope command line.
"""
import json

import pytest

import pcap_builder as pb
from conftest import rec
from src.capture import write_jsonl
from src.cli import build_parser, main

MAC = "02:00:00:00:00:01"


@pytest.fixture
def fast_geo(monkeypatch):
    monkeypatch.setenv("GEO_RATE_LIMIT", "1000")
    monkeypatch.setenv("GEO_MAX_RETRIES", "1")


def _write(path, data):
    if isinstance(data, bytes):
        path.write_bytes(data)
    else:
        path.write_text(data, encoding="utf-8")
    return str(path)


def _synth(tmp_path, name="synth.jsonl", devices="30"):
    out = tmp_path / name
    assert main(["synth", "--devices", devices, "--typo-rate", "0.3", "--password-rate", "0.2",
                 "--seed", "7", "-o", str(out)]) == 0
    return str(out)


# ---- ingest ----

def test_ingest_golden_capture(tmp_path):
    capture = _write(tmp_path / "golden.pcap", pb.golden_3frames())
    out = tmp_path / "golden.jsonl"
    assert main(["ingest", capture, "-o", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    assert [json.loads(line)["seq"] for line in lines] == [100, 101, 102]


def test_ingest_empty_capture(tmp_path):
    capture = _write(tmp_path / "empty.pcap", pb.pcap_bytes([]))
    out = tmp_path / "empty.jsonl"
    assert main(["ingest", capture, "-o", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == ""


def test_ingest_corrupt_header(tmp_path):
    capture = _write(tmp_path / "bad.pcap", b"\x00\x01\x02\x03 garbage garbage garbage")
    assert main(["ingest", capture]) == 2


def test_missing_input_is_usage_error(tmp_path):
    assert main(["ingest", str(tmp_path / "nope.pcap")]) == 64


# ---- analyze ----

def test_analyze_is_deterministic(tmp_path):
    capture = _synth(tmp_path)
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["analyze", capture, "-o", str(first)]) == 0
    assert main(["analyze", capture, "-o", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    report = json.loads(first.read_text(encoding="utf-8"))
    assert report["capture"]["record_count"] > 0
    assert report["parameters"]["redact"] is True


def test_analyze_threshold_zero(tmp_path, capsys):
    capture = _synth(tmp_path)
    capsys.readouterr()
    assert main(["analyze", capture, "--typo-threshold", "0"]) == 0
    assert json.loads(capsys.readouterr().out)["typo_groups"] == []


def test_analyze_rejects_threshold_one(tmp_path):
    assert main(["analyze", _synth(tmp_path), "--typo-threshold", "1"]) == 64


def test_analyze_text_format(tmp_path, capsys):
    capture = _synth(tmp_path)
    capsys.readouterr()
    assert main(["analyze", capture, "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("Probe requests: ")


def test_no_redact_needs_acknowledgement(tmp_path, capsys):
    capture = _write(tmp_path / "c.jsonl", write_jsonl([rec(0.0, "00:1b:63:12:34:56", "home")]))
    assert main(["analyze", capture, "--no-redact"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["clusters"][0]["macs"] == ["00:1b:63:xx:xx:xx"]

    assert main(["analyze", capture, "--no-redact", "--acknowledge-raw-identifiers"]) == 0
    assert json.loads(capsys.readouterr().out)["clusters"][0]["macs"] == ["00:1b:63:12:34:56"]


def test_analyze_subtract(tmp_path, capsys):
    day1 = _write(tmp_path / "day1.jsonl", write_jsonl([
        rec(0.0, MAC, "home"), rec(10.0, "02:00:00:00:00:02", "visitor"),
    ]))
    day2 = _write(tmp_path / "day2.jsonl", write_jsonl([rec(0.0, "02:00:00:00:00:09", "home")]))
    assert main(["analyze", day1, "--subtract", day2]) == 0
    report = json.loads(capsys.readouterr().out)
    assert [v["ssid"] for v in report["verdicts"]] == ["visitor"]


def test_analyze_writes_verdicts_jsonl(tmp_path, capsys):
    capture = _write(tmp_path / "c.jsonl", write_jsonl([
        rec(0.0, MAC, "home"), rec(0.1, MAC, "1234567890123456"),
    ]))
    verdicts = tmp_path / "verdicts.jsonl"
    assert main(["analyze", capture, "--verdicts-out", str(verdicts)]) == 0
    lines = [json.loads(line) for line in verdicts.read_text(encoding="utf-8").splitlines()]
    assert [v["ssid"] for v in lines] == [v["ssid"] for v in json.loads(capsys.readouterr().out)["verdicts"]]
    assert lines[0] == {"ssid": "1234567890123456", "flags": ["ProbablePassword"], "typo_group_id": None}


# ---- geo ----

def test_geo_mock(tmp_path, capsys, geo_mock_dir, fast_geo):
    ssids = _write(tmp_path / "ssids.txt", "home-sweet-home\nTelekom\nbroken\n1234567890123456\n")
    assert main(["geo", ssids, "--mock", geo_mock_dir]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["unique"] == 2
    assert report["summary"]["multiple"] == 1
    assert report["summary"]["errors"] == 1
    assert report["errors"][0]["ssid"] == "broken"
    assert report["passwords"]["total"] == 1
    assert "typos" not in report


def test_geo_online_without_token(tmp_path, monkeypatch):
    monkeypatch.delenv("GEO_API_TOKEN", raising=False)
    ssids = _write(tmp_path / "ssids.txt", "home\n")
    assert main(["geo", ssids, "--cache-dir", str(tmp_path / "cache")]) == 3


# ---- protocol ----

def test_vectors_check(capsys):
    assert main(["protocol", "vectors", "--check"]) == 0
    assert json.loads(capsys.readouterr().out)["failed"] == 0


def test_tampered_vectors_fail(tmp_path):
    vectors = [{"mac": MAC, "seq": 1, "ssid": "hidden-net", "trunc_len": 16, "digest_hex": "00" * 16}]
    path = _write(tmp_path / "v.json", json.dumps(vectors))
    assert main(["protocol", "vectors", "--vectors", path]) == 1


def test_vectors_generate(capsys):
    assert main(["protocol", "vectors", "--generate", "4", "--seed", "1"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 4


def test_bench_zero_ops_is_usage_error():
    assert main(["protocol", "bench", "--n", "0"]) == 64


def test_small_bench(capsys):
    assert main(["protocol", "bench", "--n", "500", "--runs", "1"]) == 0
    captured = capsys.readouterr()
    summary = json.loads(captured.out)
    assert summary["required_ops_per_sec"] == pytest.approx(5.336)
    assert summary == {"n_ops": 500, "runs": 1, "verdict_agreement": True,
                       "required_ops_per_sec": summary["required_ops_per_sec"]}
    assert "mean_time_hashed" in captured.err


def test_bench_output_is_byte_identical_with_timings_on_the_side(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    timings = tmp_path / "timings.json"
    argv = ["protocol", "bench", "--n", "300", "--runs", "1", "--seed", "4"]
    assert main(argv + ["-o", str(first), "--timings", str(timings)]) == 0
    assert main(argv + ["-o", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert "mean_time_hashed" not in first.read_text(encoding="utf-8")
    assert set(json.loads(timings.read_text(encoding="utf-8"))) == {
        "mean_time_hashed", "mean_time_baseline", "overhead_pct", "hash_ops_per_sec", "throughput_margin",
    }


def test_simulate_reports_overhead(tmp_path, capsys):
    records = [rec(i, MAC, "x" * n, seq=i, length=147) for i, n in enumerate((10, 11, 12, 12, 12))]
    capture = _write(tmp_path / "c.jsonl", write_jsonl(records))
    words = _write(tmp_path / "words.txt", "aaaa\nxxxxxxxxxxx\nzzzz\n")
    pcap = tmp_path / "hashed.pcap"
    assert main(["protocol", "simulate", capture, "--dictionary", words, "--out-pcap", str(pcap)]) == 0

    report = json.loads(capsys.readouterr().out)
    assert report["hashed_probes"] == 5
    assert report["verified"] == 5
    assert report["overhead"]["pct_increase"] == 14.01
    assert report["salt_entropy_bits"] == 36
    assert report["attack"]["recovered"] == 1
    assert pcap.exists()


# ---- synth and usage ----

def test_synth_is_seeded(tmp_path):
    a = _synth(tmp_path, "a.jsonl", devices="10")
    b = _synth(tmp_path, "b.jsonl", devices="10")
    with open(a, encoding="utf-8") as fa, open(b, encoding="utf-8") as fb:
        text = fa.read()
        assert text == fb.read()
    assert text.count("\n") > 10


@pytest.mark.parametrize("argv", [["analyze"], ["frobnicate"], ["synth", "--devices", "many"], []])
def test_bad_usage_exits_64(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 64


def test_parser_defaults():
    args = build_parser().parse_args(["analyze", "x.jsonl"])
    assert (args.window, args.typo_threshold, args.fmt, args.redact) == (4.0, 0.3, "json", True)
