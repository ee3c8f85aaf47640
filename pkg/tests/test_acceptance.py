"""Acceptance criteria, one test group per criterion; see the summary section at the end of a run."""

import math
import subprocess
import sys
import time
from pathlib import Path

import pytest

from _oracles import pell_binomial
from genpell.gen_pell import PellParams, gen_pell, gen_pell_binet, ratio_convergence, silver_ratio_identity
from genpell.harness import get
from genpell.harness.report import dumps
from genpell.harness.verify import verify_all
from genpell.hypercomplex import dual_pell, dual_pell_binet, dual_ratio_term, dual_sqrt
from genpell.pell_core import pell, pell_doubling, pell_iterative, pell_lucas, pell_matrix, pell_matrix_pow
from genpell.pell_vec import KINDS, cross, cross_multiple, closed_form_dot, dot, make_vec, self_dot
from genpell.silver_ring import binet_pell

GOLDEN = Path(__file__).parent / "golden"
FULL = range(-10, 21)
PARAMS_FULL = [PellParams(p, q) for p in range(-4, 5) for q in range(-4, 5)]

T1 = "Sequence fidelity"
T2 = "Four-way algorithm agreement"
T3 = "Generalized Binet"
T4 = "Dual Binet"
T5 = "Silver-ratio limits"
T6 = "Harness full-profile statuses"
T7 = "Vector theorems"
T8 = "Dual norm roundtrip"
T9 = "CLI golden files"


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


# 1 ------------------------------------------------------------------------


def test_c1_sequence_fidelity(record_criterion):
    ok = tuple(pell(n) for n in range(1, 11)) == (1, 2, 5, 12, 29, 70, 169, 408, 985, 2378)
    ok_q = tuple(pell_lucas(n) for n in range(1, 11)) == (2, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726)
    record_criterion(1, T1, "pell(1..10) and pell_lucas(1..10)", ok and ok_q)
    assert ok and ok_q


# 2 ------------------------------------------------------------------------


def test_c2_four_way_agreement(record_criterion):
    def check():
        for n in range(2001):
            v = pell_iterative(n)
            if not (v == pell_doubling(n) == pell_matrix(n) == binet_pell(n)):
                return False
        return pell_doubling(10**5) == pell_matrix_pow(10**5)[0][1]

    ok, dt = timed(check)
    ok = ok and pell(2000) == pell_binomial(2000)
    record_criterion(2, T2, "n in [0, 2000] and n = 10^5", ok)
    record_criterion(2, T2, f"runtime {dt:.2f}s < 5s", dt < 5)
    assert ok and dt < 5


# 3, 4 ---------------------------------------------------------------------


def test_c3_generalized_binet(record_criterion):
    def check():
        return all(gen_pell_binet(pq, n) == gen_pell(pq, n) for pq in PARAMS_FULL for n in range(-20, 301))

    ok, dt = timed(check)
    record_criterion(3, T3, "(p, q) in [-4, 4]^2, n in [-20, 300]", ok)
    record_criterion(3, T3, f"runtime {dt:.2f}s < 30s", dt < 30)
    assert ok and dt < 30


def test_c4_dual_binet(record_criterion):
    ok = all(dual_pell_binet(pq, n) == dual_pell(pq, n) for pq in PARAMS_FULL for n in range(-10, 201))
    record_criterion(4, T4, "(p, q) in [-4, 4]^2, n in [-10, 200]", ok)
    assert ok


# 5 ------------------------------------------------------------------------


def test_c5_silver_ratio_limits(record_criterion):
    silver = 1 + math.sqrt(2)
    ident = all(silver_ratio_identity(PellParams(p, q)) for p in range(-10, 11) for q in range(-10, 11))
    nondegenerate = [PellParams(p, q) for p in range(-3, 4) for q in range(-3, 4) if (p, q) != (0, 0)]
    conv = all(ratio_convergence(pq, 40) < 1e-12 for pq in nondegenerate)
    dual = all(abs(dual_ratio_term(pq, 40).du) < 1e-12 for pq in nondegenerate)
    dual_re = all(abs(dual_ratio_term(pq, 40).re - silver) < 1e-12 for pq in nondegenerate)
    record_criterion(5, T5, "silver_ratio_identity on [-10, 10]^2", ident)
    record_criterion(5, T5, "ratio_convergence at n = 40 below 1e-12", conv)
    record_criterion(5, T5, "dual_ratio_term eps part at n = 40 below 1e-12", dual and dual_re)
    assert ident and conv and dual and dual_re


# 6 ------------------------------------------------------------------------


@pytest.fixture(scope="module")
def full_report():
    rep, dt = timed(lambda: verify_all("full"))
    return rep, dt


def _ids(prefix, lo, hi):
    return [f"{prefix}-{k:02d}" for k in range(lo, hi + 1)]


MUST_VERIFY = (
    _ids("PL", 1, 8) + ["PL-10", "PL-11", "PS-01"] + _ids("GP", 1, 14) + _ids("GR", 1, 5)
    + _ids("XP", 1, 4) + _ids("DP", 1, 9)
    + ["VT-G1", "VT-G2", "VT-G3", "VT-G4", "VT-D1", "VT-D2", "VT-D3", "VT-D4"]
)


@pytest.mark.parametrize("sid", MUST_VERIFY)
def test_c6_verified(full_report, record_criterion, sid):
    res = full_report[0].result(sid)
    ok = res.status == "verified"
    record_criterion(6, T6, f"{sid} verified (got {res.status})", ok)
    assert ok, res.counterexample


def _first(rep, sid):
    res = rep.result(sid)
    ce = res.counterexample
    return res.status, (ce.binding, ce.lhs, ce.rhs) if ce else None


def test_c6_pl09_fails(full_report, record_criterion):
    status, _ = _first(full_report[0], "PL-09")
    lhs, rhs = get("PL-09").lhs(n=2), get("PL-09").rhs(n=2)
    ok = status == "fails_as_printed" and (lhs, rhs) == (36, 6)
    record_criterion(6, T6, "PL-09 fails_as_printed, n=2 gives 36 vs 6", ok)
    assert ok


def test_c6_pl09_n1_passes(record_criterion):
    lhs, rhs = get("PL-09").lhs(n=1), get("PL-09").rhs(n=1)
    ok = lhs == rhs
    record_criterion(6, T6, f"PL-09 holds at n=1 (got {lhs} vs {rhs})", ok)
    assert ok


def test_c6_pl09_first_counterexample(full_report, record_criterion):
    _, first = _first(full_report[0], "PL-09")
    ok = first == ({"n": 2}, "36", "6")
    record_criterion(6, T6, f"PL-09 first counterexample n=2 (got {first})", ok)
    assert ok


def test_c6_ps02_first_counterexample(full_report, record_criterion):
    status, first = _first(full_report[0], "PS-02")
    ok = status == "fails_as_printed" and first == ({"n": 1}, "4", "2")
    record_criterion(6, T6, "PS-02 first counterexample n=1, 4 vs 2", ok)
    assert ok


def test_c6_ps03_fails(full_report, record_criterion):
    status, _ = _first(full_report[0], "PS-03")
    ok = status == "fails_as_printed" and (get("PS-03").lhs(n=2), get("PS-03").rhs(n=2)) == (2, 8)
    record_criterion(6, T6, "PS-03 fails_as_printed, n=2 gives 2 vs 8", ok)
    assert ok


def test_c6_ps03_first_counterexample(full_report, record_criterion):
    _, first = _first(full_report[0], "PS-03")
    ok = first == ({"n": 2}, "2", "8")
    record_criterion(6, T6, f"PS-03 first counterexample n=2 (got {first})", ok)
    assert ok


def test_c6_cp05_quarantined(full_report, record_criterion):
    res = full_report[0].result("CP-05")
    ok = res.status == "quarantined" and res.trials == 0
    record_criterion(6, T6, "CP-05 quarantined", ok)
    assert ok


def test_c6_complex_definitive(full_report, record_criterion):
    rep = full_report[0]
    ids = [f"CP-{k:02d}" for k in range(1, 10) if k != 5] + ["VT-C1", "VT-C2", "VT-C3", "VT-C4"]
    ok = all(
        rep.result(i).status == "verified"
        or (rep.result(i).status == "fails_as_printed" and rep.result(i).counterexample is not None)
        for i in ids
    )
    record_criterion(6, T6, "CP and VT-C entries get a definitive status", ok)
    assert ok


def test_c6_runtime_and_determinism(full_report, record_criterion, tmp_path):
    rep, dt = full_report
    record_criterion(6, T6, f"full profile runtime {dt:.1f}s < 60s", dt < 60)
    out = tmp_path / "full.json"
    subprocess.run(
        [sys.executable, "-m", "genpell.cli", "verify", "--profile", "full", "--out", str(out)],
        capture_output=True, check=False,
    )
    same = out.read_bytes() == dumps(rep).encode()
    record_criterion(6, T6, "full report byte-identical across runs", same)
    assert dt < 60 and same


# 7 ------------------------------------------------------------------------


def test_c7_mixed_products(full_report, record_criterion):
    # the harness sweeps <u x v, w> == 0 over every (params, n, m, l) of the full grid
    rep = full_report[0]
    ok = all(rep.result(f"VT-{k}4").status == "verified" for k in "GCD")
    trials = {rep.result(f"VT-{k}4").trials for k in "GCD"}
    ok = ok and trials == {len(PARAMS_FULL) * len(FULL) ** 3}
    record_criterion(7, T7, "mixed product exactly 0 on the full grid, all kinds", ok)
    assert ok


def test_c7_cross_multiples(record_criterion):
    ok = True
    for kind in KINDS:
        for pq in PARAMS_FULL:
            vecs = [make_vec(kind, pq, n) for n in FULL]
            for u in vecs:
                for v in vecs:
                    if cross_multiple(cross(u, v)) is None:
                        ok = False
    record_criterion(7, T7, "every cross product is a multiple of (1, 2, -1)", ok)
    assert ok


def test_c7_gen_dot_closed_form(record_criterion):
    ok = all(
        dot(make_vec("gen", pq, n), make_vec("gen", pq, m)) == closed_form_dot("gen", pq, n, m)
        for pq in PARAMS_FULL
        for n in FULL
        for m in FULL
    )
    record_criterion(7, T7, "closed_form_dot == dot for gen on the full grid", ok)
    assert ok


# 8 ------------------------------------------------------------------------


def test_c8_dual_norm_roundtrip(record_criterion):
    ok, count = True, 0
    for pq in PARAMS_FULL:
        for n in FULL:
            sq = self_dot("dual", pq, n)
            if sq.re <= 0:
                continue
            count += 1
            back = dual_sqrt(sq) * dual_sqrt(sq)
            if not (math.isclose(back.re, sq.re, rel_tol=1e-12) and math.isclose(back.du, sq.du, rel_tol=1e-12)):
                ok = False
    record_criterion(8, T8, f"{count} positive self-dots round-trip within 1e-12", ok and count > 0)
    assert ok and count > 0


# 9 ------------------------------------------------------------------------

GOLDEN_CASES = [
    ("seq_pell_1_10.csv", ["seq", "--kind", "pell", "--from", "1", "--to", "10", "--format", "csv"]),
    ("verify_small.txt", ["verify", "--profile", "small"]),
    ("vec_mixed_gen.txt", ["vec", "--op", "mixed", "--kind", "gen", "--p", "2", "--q", "1",
                           "--n", "1", "--m", "4", "--l", "7"]),
]


@pytest.mark.parametrize("name, argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_c9_golden_stdout(record_criterion, name, argv):
    proc = subprocess.run([sys.executable, "-m", "genpell.cli", *argv], capture_output=True, check=False)
    ok = proc.returncode == 0 and proc.stdout == (GOLDEN / name).read_bytes()
    record_criterion(9, T9, f"{name} byte-for-byte", ok)
    assert ok


def test_c9_golden_report(record_criterion, tmp_path):
    out = tmp_path / "small.json"
    subprocess.run(
        [sys.executable, "-m", "genpell.cli", "verify", "--profile", "small", "--out", str(out)],
        capture_output=True, check=False,
    )
    ok = out.read_bytes() == (GOLDEN / "verify_small.json").read_bytes()
    record_criterion(9, T9, "verify_small.json report byte-for-byte", ok)
    assert ok
