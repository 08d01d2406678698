"""
What a passive observer can do against salted probes: dictionary attacks
(one hash per probe per candidate, no reuse across salts) and how much salt
entropy there is to begin with.
"""
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import numpy as np

from src.hashprobe.scheme import HashedProbe, make_hashed_probe

SN_BITS = 12
DEFAULT_MAC_BITS = 24


@dataclass(frozen=True)
class SaltEntropy:
    mac_bits: int = DEFAULT_MAC_BITS
    sn_bits: int = SN_BITS

    @property
    def total_bits(self) -> int:
        return self.mac_bits + self.sn_bits


def salt_entropy(assumed_mac_bits: int = DEFAULT_MAC_BITS) -> SaltEntropy:
    """
    Lower estimate of the salt entropy. 24 bits counts only the NIC-specific
    half of a random MAC; a fully random local unicast MAC gives 46.
    """
    if not 0 <= assumed_mac_bits <= 46:
        raise ValueError("a unicast, locally administered MAC has at most 46 free bits")
    return SaltEntropy(mac_bits=assumed_mac_bits)


def attacker_brute_force(observed: Iterable[HashedProbe], dictionary: List) -> Tuple[Dict[HashedProbe, str], int]:
    """
    Try every dictionary SSID against each probe with the probe's own salt,
    stopping at the first match. Returns ({probe: ssid}, hash operations spent).
    """
    recovered = {}
    hash_count = 0
    candidates = [c for c in dictionary if c]
    for probe in observed:
        for candidate in candidates:
            hash_count += 1
            if make_hashed_probe(probe.mac, probe.seq, candidate, probe.trunc_len).digest == probe.digest:
                recovered[probe] = candidate
                break
    return recovered, hash_count


def duplicate_salt_rate(n_draws: int = 100_000, mac_bits: int = DEFAULT_MAC_BITS, sn_bits: int = SN_BITS,
                        seed: int = 0) -> dict:
    """
    Draw n uniform salts from a 2^(mac_bits+sn_bits) space and count repeats
    (draws whose salt was already drawn). Compares with the birthday estimate
    n - N(1 - exp(-n/N)); repeats are ~Poisson, so sigma = sqrt(expected).
    `tail_p` is P(X >= observed) under that Poisson, and `within_3_sigma`
    accepts anything a 3-sigma normal tail would (p >= 0.00135).
    """
    bits = mac_bits + sn_bits
    rng = np.random.default_rng(seed)
    mac = rng.integers(0, 2 ** mac_bits, size=n_draws, dtype=np.int64) if mac_bits else np.zeros(n_draws, np.int64)
    sn = rng.integers(0, 2 ** sn_bits, size=n_draws, dtype=np.int64)
    salts = (mac << sn_bits) | sn
    observed = int(n_draws - np.unique(salts).size)

    space = float(2 ** bits)
    expected = n_draws - space * -math.expm1(-n_draws / space)
    sigma = math.sqrt(expected)
    tail_p = _poisson_tail(observed, expected)
    return {
        "n_draws": n_draws,
        "salt_bits": bits,
        "observed_duplicates": observed,
        "expected_duplicates": expected,
        "sigma": sigma,
        "tail_p": tail_p,
        "within_3_sigma": abs(observed - expected) <= 3 * sigma or tail_p >= 0.00135,
    }


def _poisson_tail(k: int, mean: float) -> float:
    """P(X >= k) for X ~ Poisson(mean)."""
    if k <= 0:
        return 1.0
    if mean <= 0:
        return 0.0
    term = math.exp(-mean)
    below = term
    for i in range(1, k):
        term *= mean / i
        below += term
    return max(0.0, 1.0 - below)
