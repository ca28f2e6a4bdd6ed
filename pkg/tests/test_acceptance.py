"""Acceptance gate: twelve executable criteria, all exact.

Each test prints one PASS line on success; any failure carries the first
offending check row in its assertion message.
"""

import json
import pathlib
import random
import subprocess
import sys
import time

import pytest

from loopchar import (
    LWeight,
    Sl2String,
    cartan_data,
    cone_check,
    elliptic_class,
    classes_equal,
    fundamental_lweight,
    minuscule_char,
    sl2_eval_char,
)
from loopchar.verify import SUITE_NAMES, run_suite

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def suites():
    results, durations = {}, {}
    for name in SUITE_NAMES:
        start = time.perf_counter()
        results[name] = run_suite(name, seed=0)
        durations[name] = time.perf_counter() - start
    return results, durations


def _all_pass(rows):
    assert rows
    bad = [r for r in rows if r["status"] != "pass"]
    assert not bad, f"{len(bad)} failing checks; first: {bad[0]}"


def test_criterion_01_alpha_lists(suites):
    rows = suites[0]["alpha-lists"]
    _all_pass(rows)
    assert len(rows) >= 100
    print("PASS criterion 1: printed simple loop roots, classical ranks 2-8")


def test_criterion_02_braid_relations(suites):
    rows = suites[0]["braid-relations"]
    _all_pass(rows)
    print("PASS criterion 2: braid relations on all generators, exponents -3..3")


def test_criterion_03_longest_twist(suites):
    rows = suites[0]["w0-twist"]
    _all_pass(rows)
    print("PASS criterion 3: longest-element twist matches the inverse dual")


def test_criterion_04_ladder_identities(suites):
    rows = suites[0]["ellfund"]
    _all_pass(rows)
    assert len(rows) >= 200
    print("PASS criterion 4: fundamental ladder identities, both sides, ranks to 8")


def test_criterion_05_block_soundness(suites):
    rows = suites[0]["xi-oracle"]
    zero = [r for r in rows if r["check"].startswith("xi/class-zero/")]
    image = [r for r in rows if r["check"].startswith("xi/image/")]
    assert len(zero) == 21
    assert image
    _all_pass(zero + image)
    print("PASS criterion 5: loop roots map to zero; printed generator images match")


def test_criterion_06_block_oracle_agreement(suites):
    rows = suites[0]["xi-oracle"]
    for label in ("A2", "B2", "C3", "D4", "D5", "G2"):
        row = next(r for r in rows if r["check"] == f"xi/pairs/{label}")
        assert row["status"] == "pass" and row["actual"] == "100/100 agree", row
        cov = next(r for r in rows if r["check"] == f"xi/pairs/{label}/coverage")
        assert cov["status"] == "pass", cov
    print("PASS criterion 6: normal-form equality == lattice membership, 600 pairs")


def test_criterion_07_trivial_sets(suites):
    rows = suites[0]["trivial-sets"]
    _all_pass(rows)
    covered = {r["check"].split("/")[1] for r in rows}
    assert {"E6", "E7", "E8", "F4", "G2"} <= covered
    print("PASS criterion 7: trivial-block products certified over the positive cone")


def test_criterion_08_sl2_strings(suites):
    rows = suites[0]["sl2"]
    _all_pass([r for r in rows if r["check"].startswith("sl2/m")])
    for m in range(11):
        for e in (0, 3):
            c = sl2_eval_char(("a", e), m)
            terms = c.to_dict()
            assert c.dimension == m + 1 and set(terms.values()) <= {1}
            top = Sl2String(("a", e), m).lweight()
            bottom = Sl2String(("a", e + 2), m).lweight().inverse()
            assert terms.get(top) == 1 and terms.get(bottom) == 1
    print("PASS criterion 8: string characters have m+1 terms with exact endpoints")


def test_criterion_09_minuscule_characters():
    for label, node, dim in (("A3", 2, 6), ("D4", 1, 8), ("D4", 3, 8), ("D4", 4, 8)):
        cd = cartan_data(label)
        c = minuscule_char(cd, node, ("a", 0))
        assert c.dimension == dim
        top = fundamental_lweight(cd, node)
        for pi, mult in c.to_dict().items():
            assert mult == 1 and cone_check(cd, top, pi)
    print("PASS criterion 9: minuscule term counts and cone certificates")


def test_criterion_10_dn_node2(suites):
    rows = suites[0]["dn-adjoint"]
    _all_pass(rows)
    for n in (4, 5, 6):
        assert any(r["check"] == f"dn/{n}/dim" for r in rows)
        assert any(r["check"].startswith(f"dn/{n}/braid/") for r in rows)
    print("PASS criterion 10: adjoint-node characters for D4, D5, D6, closed forms")


def test_criterion_11_block_consistency(suites):
    dn_rows = [r for r in suites[0]["dn-adjoint"] if r["check"].endswith("one-class")]
    assert len(dn_rows) == 3
    _all_pass(dn_rows)
    tensor = next(r for r in suites[0]["sl2"] if r["check"] == "sl2/tensor-class")
    assert tensor["status"] == "pass", tensor
    for label, node in (("A3", 2), ("B3", 3), ("C3", 1)):
        cd = cartan_data(label)
        c = minuscule_char(cd, node, ("a", 1))
        ref = elliptic_class(cd, fundamental_lweight(cd, node, "a", 1))
        for pi in c.to_dict():
            assert classes_equal(elliptic_class(cd, pi), ref)
    print("PASS criterion 11: single class per character; tensor classes add")


def test_criterion_12_cli_and_round_trip():
    manifest = json.loads((GOLDEN / "manifest.json").read_text())
    verbs = {args[0] for args in manifest.values()}
    assert len(verbs) == 12
    for name, args in sorted(manifest.items()):
        result = subprocess.run(
            [sys.executable, "-m", "loopchar", *args], capture_output=True, text=True
        )
        assert result.returncode == 0, (name, result.stderr)
        assert result.stdout == (GOLDEN / f"{name}.txt").read_text(), name
    rng = random.Random(424242)
    for _ in range(200):
        powers = {}
        for _ in range(rng.randint(0, 6)):
            key = (rng.randint(1, 8), rng.choice(["a", "b", "c"]), rng.randint(-9, 9))
            powers[key] = rng.choice([-3, -2, -1, 1, 2, 3])
        pi = LWeight.from_dict(powers)
        from loopchar import parse_lweight

        assert str(parse_lweight(str(pi))) == str(pi)
    print("PASS criterion 12: golden files for every verb; 200 exact round trips")


def test_runtime_budget(suites):
    _, durations = suites
    for name, seconds in durations.items():
        assert seconds < 10.0, f"suite {name} took {seconds:.1f}s"
    assert sum(durations.values()) < 60.0
