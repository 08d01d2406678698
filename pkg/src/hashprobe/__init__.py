from src.hashprobe.scheme import TRUNC_LENGTHS, HashedProbe, ap_verify, legacy_match, make_hashed_probe, preimage
from src.hashprobe.attacker import SaltEntropy, attacker_brute_force, duplicate_salt_rate, salt_entropy
from src.hashprobe.overhead import OverheadReport, ap_load, bandwidth_overhead, bandwidth_overhead_from_records
from src.hashprobe.bench import BenchReport, bench
from src.hashprobe.vectors import check_vectors, generate_vectors, load_vectors
