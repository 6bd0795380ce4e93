"""Exit criteria for the build.  Each test prints one PASS/FAIL line."""

import random
import time

import pytest

from conftest import random_graph
from generators import random_c5_expansion, random_cograph, shuffled
from oracles import brute_force_clique_number, brute_force_contains, brute_force_independence_number
from vcrit.catalog import random_sizes, very_good_check
from vcrit.certify import certify, verify_certificate
from vcrit.cli import run
from vcrit.coloring import chromatic_number
from vcrit.criticality import is_k_vertex_critical
from vcrit.detectors import family, freeness_witness
from vcrit.expansion import (
    compositions,
    critical_profiles,
    enumerate_k_critical,
    expand_c5,
    is_critical_profile,
)
from vcrit.graph import are_isomorphic, complete_graph, p3_plus_isolated
from vcrit.graph6 import decode_graph6, encode_graph6

TABLE_1 = [1, 1, 2, 2, 4, 6, 11, 17, 27, 39, 58, 80, 112, 148, 197, 253]


def verdict(number, text, ok):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
    return ok


def test_criterion_1_table(capsys):
    import io

    start = time.perf_counter()
    out = io.StringIO()
    code = run(["table", "--max-k", "16"], out=out)
    elapsed = time.perf_counter() - start
    counts = [int(x) for x in out.getvalue().split()]
    ok = code == 0 and counts == TABLE_1 and elapsed < 5
    with capsys.disabled():
        verdict(1, f"table --max-k 16 = {counts} in {elapsed:.2f}s", ok)
    assert counts == TABLE_1
    assert elapsed < 5


def test_criterion_2_six_critical(capsys):
    start = time.perf_counter()
    graphs = enumerate_k_critical(6)
    problems = []
    if len(graphs) != 6:
        problems.append(f"{len(graphs)} graphs")
    if graphs[0] != complete_graph(6):
        problems.append("first graph is not K6")
    for p in critical_profiles(6):
        if sum(p) != 11 or any(p[i] + p[(i + 1) % 5] > 5 for i in range(5)):
            problems.append(f"profile {p}")
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            if graphs[a].n == graphs[b].n and are_isomorphic(graphs[a], graphs[b]):
                problems.append(f"graphs {a} and {b} isomorphic")
    for g in graphs:
        if not is_k_vertex_critical(g, 6).verdict:
            problems.append("non-critical graph")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 60
    with capsys.disabled():
        verdict(2, f"6 pairwise non-isomorphic 6-critical graphs, K6 + {len(critical_profiles(6))} "
                   f"C5 expansions, {elapsed:.2f}s {problems or ''}", ok)
    assert not problems
    assert elapsed < 60


def test_criterion_3_profile_criterion_exhaustive(capsys):
    start = time.perf_counter()
    checked = 0
    mismatches = []
    for total in range(5, 20):
        k = (total + 2) // 2  # ceil((total + 1) / 2)
        for p in compositions(total, 5):
            checked += 1
            if is_critical_profile(p, k) != is_k_vertex_critical(expand_c5(p), k).verdict:
                mismatches.append(p)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 600
    with capsys.disabled():
        verdict(3, f"{checked} profiles with sum <= 19, {len(mismatches)} mismatches, {elapsed:.1f}s", ok)
    assert checked == 11628
    assert not mismatches
    assert elapsed < 600


def test_criterion_4_chromatic_formula(capsys):
    rng = random.Random(2024)
    pool = [p for total in range(5, 17) for p in compositions(total, 5)]
    bad = []
    for p in rng.sample(pool, 200):
        g = expand_c5(p)
        omega = brute_force_clique_number(g)
        if chromatic_number(g)[0] != max(omega, -(-g.n // 2)):
            bad.append(p)
    with capsys.disabled():
        verdict(4, f"chi = max(omega, ceil(n/2)) on 200 random profiles, {len(bad)} failures", not bad)
    assert not bad


def test_criterion_5_very_good_stable_sets(capsys):
    rng = random.Random(35)
    failures = []
    for i in range(2, 11):
        for _ in range(20):
            sizes = random_sizes(i, rng, 3)
            pick = [rng.randrange(3) for _ in range(3)]
            if not very_good_check(i, sizes, pick):
                failures.append((i, sizes))
    with capsys.disabled():
        verdict(5, f"{{x1,x4,x6}} very good in 180 expansions of G2..G10, {len(failures)} failures", not failures)
    assert not failures


def test_criterion_6_detector_oracle(capsys):
    rng = random.Random(6)
    names = ["gem", "co-gem", "p4", "c5", "p3+0p1", "p3+1p1", "p3+2p1"]
    fams = [family(name) for name in names]
    mismatches = []
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 8))
        for fam in fams:
            h = fam.members[0][1]
            if (freeness_witness(g, fam) is None) == brute_force_contains(g, h):
                mismatches.append((g, fam.name))
    with capsys.disabled():
        verdict(6, f"500 random graphs x {len(fams)} families, {len(mismatches)} mismatches", not mismatches)
    assert not mismatches


def test_criterion_7_certify_round_trip(capsys):
    rng = random.Random(7)
    start = time.perf_counter()
    failures = []
    for idx in range(100):
        if idx % 2 == 0:
            g = random_c5_expansion(rng, max_n=22)
        else:
            g = shuffled(random_cograph(rng, rng.randint(1, 22)), rng)
        chi = chromatic_number(g)[0]
        for k in range(2, 7):
            cert = certify(g, k)
            if not verify_certificate(g, k, cert) or (cert.verdict == "yes") != (chi <= k):
                failures.append((encode_graph6(g), k))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    with capsys.disabled():
        verdict(7, f"500 certify/verify round trips, {len(failures)} failures, {elapsed:.1f}s", ok)
    assert not failures
    assert elapsed < 300


def test_criterion_8_stable_set_bound(capsys):
    rng = random.Random(8)
    patterns = {ell: p3_plus_isolated(ell) for ell in range(3)}
    critical = checked = 0
    violations = []
    for _ in range(2000):
        g = random_graph(rng, rng.randint(1, 9))
        k = chromatic_number(g)[0]
        # the bound is stated for k >= 3
        if k < 3 or not is_k_vertex_critical(g, k).verdict:
            continue
        critical += 1
        alpha = brute_force_independence_number(g)
        for ell, h in patterns.items():
            if not brute_force_contains(g, h):
                checked += 1
                if alpha >= (k - 1) ** 2 * (ell + 3):
                    violations.append((encode_graph6(g), k, ell, alpha))
    with capsys.disabled():
        verdict(8, f"{critical} critical graphs (k >= 3) among 2000, {checked} (graph, l) pairs "
                   f"checked, {len(violations)} violations", not violations)
    assert not violations
    assert critical > 0


def test_criterion_9_graph6_round_trip(capsys):
    failures = 0
    total = 0
    for k in range(1, 17):
        for g in enumerate_k_critical(k):
            total += 1
            failures += decode_graph6(encode_graph6(g)) != g
    rng = random.Random(9)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 40))
        total += 1
        failures += decode_graph6(encode_graph6(g)) != g
    with capsys.disabled():
        verdict(9, f"{total} graph6 round trips, {failures} failures", failures == 0)
    assert failures == 0
