"""
Typo groups, identifier detection and per-SSID verdicts.
"""
import itertools
import json
import logging

import pytest

from conftest import rec
from src.burstflow import Pnl, cluster_by_pnl, group_bursts
from src.ssidlens import (
    DICTIONARY_NAME,
    EMAIL,
    PROBABLE_PASSWORD,
    TYPO_GROUP_MEMBER,
    SsidVerdict,
    classify_ssids,
    detect_identifiers,
    find_typo_groups,
    is_model_number_pair,
    load_name_dictionary,
    typo_summary,
    verdicts_to_jsonl,
)
from src.ssidlens.passwords import DIGIT_GROUP_VARIANT


# ---- typo groups ----

def test_spacing_and_case_variants_form_one_group():
    groups = find_typo_groups(Pnl.of(["my network", "MY_NETWORK", "MyNetwork"]))
    assert len(groups) == 1
    assert sorted(groups[0].members) == sorted(["my network", "MY_NETWORK", "MyNetwork"])
    assert all(d <= 0.3 for _, _, d in groups[0].witness_pairs)


def test_model_numbers_are_not_typos():
    assert is_model_number_pair("Fritz!Box 7490", "Fritz!Box 7590")
    assert find_typo_groups(["Fritz!Box 7490", "Fritz!Box 7590"]) == []


def test_model_number_guard_needs_trailing_digits():
    assert not is_model_number_pair("net1work", "net2work")
    assert not is_model_number_pair("home", "hame")
    assert not is_model_number_pair("UPC12", "UPC12")


def test_distant_names_do_not_group():
    assert find_typo_groups(["alpha", "zzzzz"]) == []


def test_single_linkage_is_transitive():
    # the two ends are 0.3 apart and only link through the middle member
    groups = find_typo_groups(["abcdefghij", "abcdefghxy", "abcdefgzxy"], threshold=0.2)
    assert len(groups) == 1
    assert len(groups[0].members) == 3


def test_threshold_zero_disables_grouping():
    assert find_typo_groups(["my network", "MyNetwork"], threshold=0) == []


def test_threshold_one_rejected():
    with pytest.raises(ValueError):
        find_typo_groups(["a", "b"], threshold=1.0)


def test_groups_independent_of_member_order():
    names = ["my network", "MyNetwork", "home", "Home_", "office", "offlce"]
    expected = [g.members for g in find_typo_groups(names)]
    assert len(expected) == 3
    for perm in itertools.permutations(names):
        assert [g.members for g in find_typo_groups(list(perm))] == expected


def test_every_member_has_a_witness():
    for g in find_typo_groups(["my network", "MyNetwork", "my_netw0rk", "mynet"]):
        in_pairs = {x for a, b, _ in g.witness_pairs for x in (a, b)}
        assert set(g.members) == in_pairs


# ---- identifiers ----

def test_email_detected():
    assert detect_identifiers("jane.doe@example.com") == {EMAIL}
    assert detect_identifiers("WLAN of jane.doe@example.com") == {EMAIL}


def test_name_from_dictionary():
    assert detect_identifiers("WLAN-Johanna", {"johanna"}) == {DICTIONARY_NAME}
    assert detect_identifiers("Johanna_s iPhone", {"johanna"}) == {DICTIONARY_NAME}
    assert detect_identifiers("Johannas Netz", {"johanna"}) == set()


@pytest.mark.parametrize("ssid", ["UPC1234567", "not@anemail", "a@b", "home"])
def test_no_identifiers(ssid):
    assert detect_identifiers(ssid, {"anna"}) == set()


def test_missing_dictionary_warns(tmp_path, caplog):
    with caplog.at_level(logging.WARNING, logger="probescope"):
        assert load_name_dictionary(str(tmp_path / "nope.txt")) is None
    assert "not found" in caplog.text


def test_dictionary_is_lowercased(tmp_path):
    path = tmp_path / "names.txt"
    path.write_text("# comment\nJohanna\n\nmax\n", encoding="utf-8")
    assert load_name_dictionary(str(path)) == {"johanna", "max"}


# ---- verdicts ----

def _clusters(pnls):
    records = []
    for i, pnl in enumerate(pnls):
        mac = f"02:00:00:00:00:{i:02x}"
        records.extend(rec(i * 10.0 + j * 0.1, mac, s, seq=j) for j, s in enumerate(pnl))
    return cluster_by_pnl(group_bursts(records))


def test_verdict_invariants():
    with pytest.raises(ValueError):
        SsidVerdict("x", frozenset({DIGIT_GROUP_VARIANT}))
    with pytest.raises(ValueError):
        SsidVerdict("x", frozenset({TYPO_GROUP_MEMBER}))
    assert SsidVerdict("home").benign


def test_classify_ssids_combines_flags():
    clusters = _clusters([
        ["my network", "MyNetwork", "1234567812345678"],
        ["anna@example.org", "WLAN-Max"],
        ["my network"],
    ])
    verdicts, groups, by_cluster = classify_ssids(clusters, names={"max"})
    by_ssid = {v.ssid: v for v in verdicts}

    assert [v.ssid for v in verdicts] == sorted(by_ssid)
    assert len(verdicts) == 5
    assert by_ssid["1234567812345678"].flags == {PROBABLE_PASSWORD}
    assert by_ssid["anna@example.org"].flags == {EMAIL}
    assert by_ssid["WLAN-Max"].flags == {DICTIONARY_NAME}
    assert TYPO_GROUP_MEMBER in by_ssid["MyNetwork"].flags
    assert by_ssid["MyNetwork"].typo_group_id == by_ssid["my network"].typo_group_id == 0
    assert len(groups) == 1
    assert len(by_cluster) == len(clusters)

    lines = verdicts_to_jsonl(verdicts).splitlines()
    assert len(lines) == 5
    assert json.loads(lines[0])["ssid"] == verdicts[0].ssid


def test_typo_summary_shares():
    clusters = _clusters([["", "my network", "MyNetwork", "home"], ["", "work"]])
    _, _, by_cluster = classify_ssids(clusters)
    summary = typo_summary(clusters, by_cluster)
    assert summary["typo_ssid_count"] == 2
    assert summary["distinct_ssid_count"] == 4
    assert summary["typo_ssid_pct"] == pytest.approx(50.0)
    assert summary["typo_probe_pct"] == pytest.approx(50.0)
    assert summary["typo_burst_count"] == 1
