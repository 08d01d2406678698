"""
probescope command line.

    python -m src.cli ingest capture.pcapng -o capture.jsonl
    python -m src.cli analyze capture.jsonl --format text
    python -m src.cli geo ssids.txt --mock tests/fixtures/geo_mock
    python -m src.cli protocol vectors --check
    python -m src.cli synth --devices 50 --seed 7 -o synth.jsonl

Reports go to stdout (or -o); logs go to stderr.
Exit codes: 0 ok, 1 check failed, 2 capture format, 3 config, 64 usage.
"""
import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional

from src.agents.analysis_agent import AnalysisAgent
from src.burstflow.bursts import group_bursts
from src.burstflow.clusters import cluster_by_pnl, subtract
from src.capture import load_capture, write_jsonl
from src.capture.synth import SynthProfile, synth_capture
from src.geoprobe.batch import batch_lookup
from src.geoprobe.cache import GeoCache
from src.geoprobe.client import GeoClient
from src.geoprobe.models import evaluate_subset, summarize
from src.hashprobe.attacker import attacker_brute_force, salt_entropy
from src.hashprobe.bench import bench
from src.hashprobe.overhead import ap_load, bandwidth_overhead_from_records
from src.hashprobe.scheme import ap_verify, make_hashed_probe
from src.hashprobe.vectors import check_vectors, generate_vectors, load_vectors
from src.hashprobe.wire import build_hashed_frame, write_hashed_pcap
from src.report.render import render, render_json
from src.ssidlens.identifiers import load_name_dictionary
from src.ssidlens.passwords import classify_password, is_password_candidate
from src.ssidlens.verdicts import classify_ssids, verdicts_to_jsonl
from src.utils.config import OUTPUT_FORMATS, GeoSettings, RunConfig
from src.utils.error_handler import EXIT_OK, EXIT_USAGE, ProbeScopeError, UsageError
from src.utils.logger import get_logger, setup_logging

log = get_logger("cli")

REPO_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_VECTORS = str(REPO_ROOT / "data" / "golden_vectors.json")
CAPTURE_SUFFIXES = (".pcap", ".pcapng", ".cap", ".jsonl")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; 2 is taken by capture format errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="Write the result here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=OUTPUT_FORMATS, default="json",
                        help="Report format (default: %(default)s)")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    parser = _Parser(prog="probescope", description="Privacy analysis of 802.11 probe request captures")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    # ---- ingest ----
    p = sub.add_parser("ingest", parents=[common], help="Normalize a pcap/pcapng/JSONL capture to JSONL")
    p.add_argument("input")

    # ---- analyze ----
    p = sub.add_parser("analyze", parents=[common], help="Fleet statistics and SSID verdicts")
    p.add_argument("input")
    p.add_argument("--subtract", metavar="CAPTURE", help="Drop devices whose PNL also occurs in this capture")
    p.add_argument("--window", type=float, default=4.0, help="Burst gap in seconds (default: %(default)s)")
    p.add_argument("--typo-threshold", type=float, default=0.3,
                   help="Normalized edit distance for typo groups; 0 disables (default: %(default)s)")
    p.add_argument("--names-dict", help="Name dictionary, one name per line")
    p.add_argument("--verdicts-out", metavar="FILE", help="Also write per-SSID verdicts as JSONL")
    p.add_argument("--seed", type=int, default=0)
    _add_redaction_flags(p)

    # ---- geo ----
    p = sub.add_parser("geo", parents=[common], help="Geolocate SSIDs via a WiGLE-compatible API")
    p.add_argument("input", help="SSID list (one per line) or a capture file")
    p.add_argument("--mock", metavar="DIR", help="Replay canned responses from DIR/responses.json")
    p.add_argument("--cache-dir", help="Lookup cache directory (default: PROBESCOPE_CACHE_DIR)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--typo-threshold", type=float, default=0.3)

    # ---- protocol ----
    p = sub.add_parser("protocol", help="Salted SSID hashing: vectors, bench, simulate")
    proto = p.add_subparsers(dest="action", required=True)

    q = proto.add_parser("vectors", parents=[common], help="Check or regenerate golden hash vectors")
    q.add_argument("--vectors", default=DEFAULT_VECTORS, help="Vector file (default: data/golden_vectors.json)")
    mode = q.add_mutually_exclusive_group()
    mode.add_argument("--check", action="store_true", default=True)
    mode.add_argument("--generate", type=int, metavar="N", help="Print N fresh random vectors")
    q.add_argument("--seed", type=int, default=0)

    q = proto.add_parser("bench", parents=[common], help="Time hash-then-compare against plain compare")
    q.add_argument("--n", type=int, default=1_000_000, dest="n_ops")
    q.add_argument("--ssid-len", type=int, default=11)
    q.add_argument("--runs", type=int, default=3)
    q.add_argument("--match-fraction", type=float, default=0.5)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--timings", metavar="FILE", help="Write timing figures here instead of stderr")

    q = proto.add_parser("simulate", parents=[common], help="Hash a capture's directed probes")
    q.add_argument("input")
    q.add_argument("--dictionary", help="Attacker SSID dictionary, one per line")
    q.add_argument("--trunc-len", type=int, choices=(16, 32), default=32)
    q.add_argument("--out-pcap", help="Also write the hashed probes as a radiotap pcap")

    # ---- synth ----
    p = sub.add_parser("synth", parents=[common], help="Write a seeded synthetic capture as JSONL")
    p.add_argument("--devices", type=int, default=50)
    p.add_argument("--randomizing-fraction", type=float, default=0.5)
    p.add_argument("--bursts-per-device", type=int, default=3)
    p.add_argument("--typo-rate", type=float, default=0.0)
    p.add_argument("--password-rate", type=float, default=0.0)
    p.add_argument("--target-ssid-share", type=float)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _add_redaction_flags(p):
    p.add_argument("--redact", dest="redact", action="store_true", default=True,
                   help="Truncate MACs to OUI:xx:xx:xx (default)")
    p.add_argument("--no-redact", dest="redact", action="store_false")
    p.add_argument("--acknowledge-raw-identifiers", action="store_true",
                   help="Required for --no-redact to take effect")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        log.info(f"Wrote {output}")
    else:
        sys.stdout.write(text)


def _read_lines(path: str) -> List[str]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return [line.rstrip("\r\n") for line in f if line.strip()]
    except FileNotFoundError:
        raise UsageError(f"File not found: {path}")


def _load(path: str):
    if not os.path.exists(path):
        raise UsageError(f"Capture not found: {path}")
    return load_capture(path)


# ---- Subcommands ----
def cmd_ingest(args) -> int:
    records, meta = _load(args.input)
    if meta.parse_error_count:
        log.warning(f"{meta.parse_error_count} frame(s) could not be parsed")
        for err in meta.errors[:10]:
            log.debug(err)
    _emit(write_jsonl(records), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    redact = args.redact
    if not redact and not args.acknowledge_raw_identifiers:
        log.warning("--no-redact ignored without --acknowledge-raw-identifiers")
        redact = True
    elif not redact:
        log.warning("Redaction disabled: report contains raw MAC addresses")

    config = RunConfig(
        subcommand="analyze",
        inputs=[args.input] + ([args.subtract] if args.subtract else []),
        output=args.output,
        fmt=args.fmt,
        window_s=args.window,
        typo_threshold=args.typo_threshold,
        names_dict=args.names_dict,
        geo=GeoSettings(),
        seed=args.seed,
        redact=redact,
    ).validate()

    records, meta = _load(args.input)
    if args.subtract:
        other, _ = _load(args.subtract)
        before = len(records)
        records = subtract(records, other, config.window_s)
        log.info(f"Subtracted {before - len(records)} probe(s) seen in {args.subtract}")

    agent = AnalysisAgent(
        window_s=config.window_s,
        typo_threshold=config.typo_threshold,
        names=load_name_dictionary(config.names_dict),
        redact=config.redact,
        parameters={"seed": config.seed, "subtract": bool(args.subtract)},
    )
    report = agent.run(records, meta)
    _emit(render(report, config.fmt), config.output)
    if args.verdicts_out:
        with open(args.verdicts_out, "w", encoding="utf-8", newline="") as f:
            f.write(verdicts_to_jsonl(agent.last_state.get("verdicts", [])))
    return EXIT_OK


def _geo_inputs(path: str, threshold: float):
    """(ssids, typo member ssids or None). Captures contribute their distinct directed SSIDs."""
    if path.lower().endswith(CAPTURE_SUFFIXES):
        records, _ = _load(path)
        clusters = cluster_by_pnl(group_bursts(records))
        verdicts, groups, _ = classify_ssids(clusters, threshold=threshold)
        typo_members = sorted({m for g in groups for m in g.members})
        return [v.ssid for v in verdicts], typo_members
    return _read_lines(path), None


def cmd_geo(args) -> int:
    settings = GeoSettings.from_env()
    if args.cache_dir:
        settings.cache_dir = args.cache_dir
    RunConfig(subcommand="geo", inputs=[args.input], fmt=args.fmt, geo=settings,
              typo_threshold=args.typo_threshold).validate()

    ssids, typo_members = _geo_inputs(args.input, args.typo_threshold)
    client = GeoClient.from_settings(settings, mock_dir=args.mock)
    use_cache = not args.no_cache and (args.cache_dir or not args.mock)
    cache = GeoCache(settings.cache_dir) if use_cache else None

    outcome = batch_lookup(ssids, client, cache)
    results = outcome["results"]
    summary = summarize(results)
    summary.errors = len(outcome["errors"])
    report = {
        "summary": summary.to_dict(),
        "results": [r.to_dict() for r in results],
        "errors": outcome["errors"],
        "passwords": evaluate_subset(
            results, [s for s in ssids if is_password_candidate(classify_password(s))]
        ),
    }
    if typo_members is not None:
        report["typos"] = evaluate_subset(results, typo_members)
    _emit(render(report, args.fmt), args.output)
    return EXIT_OK


def cmd_protocol(args) -> int:
    if args.action == "vectors":
        if args.generate is not None:
            if args.generate < 1:
                raise UsageError("--generate needs N >= 1")
            _emit(render_json(generate_vectors(args.generate, args.seed)), args.output)
            return EXIT_OK
        vectors = load_vectors(args.vectors)
        failures = check_vectors(vectors)
        report = {"vectors": len(vectors), "failed": len(failures), "failures": failures}
        _emit(render(report, args.fmt), args.output)
        if failures:
            log.error(f"{len(failures)} of {len(vectors)} vectors do not match")
            return 1
        log.info(f"All {len(vectors)} vectors match")
        return EXIT_OK

    if args.action == "bench":
        result = bench(args.n_ops, args.ssid_len, args.match_fraction, args.seed, args.runs)
        _emit(render(result.summary_dict(), args.fmt), args.output)
        timings = render_json(result.timings_dict())
        if args.timings:
            with open(args.timings, "w", encoding="utf-8") as f:
                f.write(timings)
        else:
            sys.stderr.write(timings)
        return EXIT_OK if result.verdict_agreement else 1

    return _simulate(args)


def _simulate(args) -> int:
    records, _ = _load(args.input)
    directed = [r for r in records if r.has_ssid]
    overhead = bandwidth_overhead_from_records(records, args.trunc_len)
    probes = [make_hashed_probe(r.mac, r.seq, r.ssid, args.trunc_len) for r in directed]
    verified = sum(ap_verify(p.mac, p.seq, p.digest, r.ssid) for p, r in zip(probes, directed))

    report = {
        "hashed_probes": len(probes),
        "verified": verified,
        "overhead": overhead.to_dict(),
        "salt_entropy_bits": salt_entropy().total_bits,
        "ap_load_ops_per_s": round(ap_load(), 2),
        "attack": None,
    }
    if args.dictionary:
        dictionary = _read_lines(args.dictionary)
        recovered, hash_count = attacker_brute_force(probes, dictionary)
        report["attack"] = {
            "dictionary_size": len(dictionary),
            "recovered": len(recovered),
            "recovery_pct": round(len(recovered) / len(probes) * 100, 2) if probes else 0.0,
            "hash_count": hash_count,
        }
    if args.out_pcap:
        frames = [build_hashed_frame(p, r.channel, r.timestamp, r.rssi if r.rssi is not None else -60)
                  for p, r in zip(probes, directed)]
        write_hashed_pcap(args.out_pcap, frames)
    _emit(render(report, args.fmt), args.output)
    return EXIT_OK


def cmd_synth(args) -> int:
    if args.devices < 0:
        raise UsageError("--devices must be >= 0")
    if not 0 <= args.randomizing_fraction <= 1:
        raise UsageError("--randomizing-fraction must be in [0, 1]")
    if args.target_ssid_share is not None and not 0 < args.target_ssid_share <= 1:
        raise UsageError("--target-ssid-share must be in (0, 1]")
    profile = SynthProfile.random(
        args.devices,
        randomizing_fraction=args.randomizing_fraction,
        seed=args.seed,
        bursts_per_device=args.bursts_per_device,
        typo_rate=args.typo_rate,
        password_rate=args.password_rate,
        target_ssid_share=args.target_ssid_share,
    )
    records = synth_capture(profile, args.seed)
    log.info(f"Generated {len(records)} probe requests from {args.devices} device(s)")
    _emit(write_jsonl(records), args.output)
    return EXIT_OK


COMMANDS = {
    "ingest": cmd_ingest,
    "analyze": cmd_analyze,
    "geo": cmd_geo,
    "protocol": cmd_protocol,
    "synth": cmd_synth,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging("DEBUG" if getattr(args, "verbose", False) else None)
    try:
        return COMMANDS[args.subcommand](args)
    except ProbeScopeError as e:
        log.error(str(e))
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
