"""Acceptance suite: one test per exit criterion, one printed line each.

Two recorded expected values are provably wrong and the corresponding
criteria are implemented as stated and left to fail rather than being
weakened: the six-vertex realizable count (recorded 67; exhaustive,
certificate-checked classification gives 68) and the seven-vertex
star-but-unrealizable count (recorded 44; one listed graph, G803 in the
corpus, carries a machine-verified witness table, leaving 43).  The
supplementary test at the bottom pins the verified values by re-checking
every certificate, so whichever way the counts move the suite notices.
"""

import time
from collections import Counter

from zdg.graphs import (
    Graph,
    bfs_distances,
    canonical_form,
    degree,
    max_degree,
    parse_graph6,
)
from zdg.conditions import check_star_condition
from zdg.semigroup import brute_force_realization, find_realization, verify_witness
from zdg.enumeration import ClassifyOptions, classify_all, enumerate_connected, write_report
from zdg.fixtures import get_fixture, load_fixtures, run_fixture
from zdg import patterns as pat
from conftest import DGSW_SIX, LEMMA_7V, LEMMA_11V, cycle


def _criterion(num, ok, detail):
    print(f"\nACCEPTANCE CRITERION {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_small_oracle_equivalence():
    t0 = time.time()
    mismatches = []
    total = 0
    for n in range(1, 5):
        for g in enumerate_connected(n):
            total += 1
            oracle = brute_force_realization(g).sat
            solver = find_realization(g).sat
            if oracle != solver:
                mismatches.append((n, g.edges(), oracle, solver))
    elapsed = time.time() - t0
    _criterion(1, not mismatches and elapsed < 60,
               f"{total} connected graphs with n<=4, oracle==solver on all, "
               f"{elapsed:.1f}s (limit 60s); mismatches={mismatches}")


def test_criterion_2_six_vertex_counts(n6_records_nopatterns, n6_records):
    t0 = time.time()
    records = n6_records_nopatterns
    cats = Counter(r.category for r in records)
    dgsw_codes = {canonical_form(g).decode() for g in DGSW_SIX.values()}
    found_codes = {r.graph6 for r in records if r.category == "StarNotZDG"}
    counts_patterns = Counter(r.category for r in n6_records)
    elapsed = time.time() - t0

    parts = []
    ok = True
    if cats["ZDG"] == 67:
        parts.append("ZDG=67")
    else:
        ok = False
        parts.append(f"ZDG={cats['ZDG']} (recorded value 67; every extra witness "
                     f"table re-verifies, see supplementary test)")
    if cats["StarNotZDG"] == 4 and found_codes == dgsw_codes:
        parts.append("StarNotZDG=4 isomorphic to the four recorded graphs")
    else:
        ok = False
        parts.append(f"StarNotZDG={cats['StarNotZDG']} codes={sorted(found_codes)}")
    if counts_patterns != cats:
        ok = False
        parts.append(f"pattern shortcuts disagree: {dict(counts_patterns)}")
    else:
        parts.append("pattern and search modes agree")
    _criterion(2, ok, "; ".join(parts) + f"; {elapsed:.1f}s")


def test_criterion_3_seven_vertex_partition(n7_records):
    records = n7_records
    cats = Counter(r.category for r in records)
    inconclusive = [r.graph6 for r in records if r.inconclusive]
    connected = len(records) - cats["Disconnected"]
    snz = [r for r in records if r.category == "StarNotZDG"]
    all_exhaustive = all(r.certificate is not None and r.certificate.exhaustive
                         for r in snz)
    parts = [f"{len(records)} classes", f"{connected} connected",
             f"inconclusive={len(inconclusive)}"]
    ok = (len(records) == 1044 and connected == 853 and not inconclusive
          and all_exhaustive)
    if cats["StarNotZDG"] == 44:
        parts.append("StarNotZDG=44")
    else:
        ok = False
        parts.append(f"StarNotZDG={cats['StarNotZDG']} (recorded value 44; the "
                     f"missing graph has a machine-verified witness table)")
    parts.append(f"exhaustive certificates for all {len(snz)} refutations: {all_exhaustive}")
    _criterion(3, ok, "; ".join(parts))


def test_criterion_4_fixture_fidelity():
    zdg_names = ["G319", "G380", "G392", "G411", "G481", "G604", "G624"]
    snz_names = ["G600", "G742", "G766", "G893", "G907", "G918", "G1024", "G1130"]
    wrong = []
    for name, want in [(n, "ZDG") for n in zdg_names] + [(n, "StarNotZDG") for n in snz_names]:
        result = run_fixture(get_fixture(name))
        if result.category != want:
            wrong.append((name, want, result.category))
    _criterion(4, not wrong,
               f"{len(zdg_names)} realizable and {len(snz_names)} refuted fixtures "
               f"classify exactly as recorded; mismatches={wrong}")


def test_criterion_5_printed_table_verification():
    g319 = get_fixture("G319")
    ok319, why = verify_witness(g319.graph, g319.table)

    verified = 0
    documented = []
    silent_failures = []
    for entry in load_fixtures():
        if entry.table is None or entry.name == "G319":
            continue
        if entry.graph is not None:
            ok, _ = verify_witness(entry.graph, entry.table)
        else:
            ok = False
        if ok:
            verified += 1
        else:
            result = run_fixture(entry)
            if result.discrepancies and result.passed:
                documented.append(entry.name)
            else:
                silent_failures.append(entry.name)
    ok_all = ok319 and verified >= 20 and not silent_failures
    _criterion(5, ok_all,
               f"G319 grid verifies as printed: {ok319} ({why}); "
               f"{verified} further printed tables verify (need >=20); "
               f"non-verifying tables documented as discrepancies: {documented}; "
               f"silent failures: {silent_failures}")


def test_criterion_6_lemma_properties(n6_records, n7_records):
    problems = []

    # (a) star condition implies diameter <= 3 and the core condition, n <= 7
    for n in range(1, 8):
        for g in enumerate_connected(n):
            report = check_star_condition(g)
            if report.star_ok and not (report.diameter3 and report.core_ok):
                problems.append(f"(a) {canonical_form(g)}")

    # (b) the three recorded counterexamples witness the failed converses
    r = check_star_condition(LEMMA_7V)
    if not (r.diameter3 and not r.star_ok):
        problems.append("(b) diameter3 without star fails")
    r = check_star_condition(cycle(6))
    if not (r.diameter3 and not r.core_ok):
        problems.append("(b) diameter3 without core fails")
    r = check_star_condition(LEMMA_11V)
    if not (r.core_ok and not r.diameter3):
        problems.append("(b) core without diameter3 fails")

    # (c) twin duplication preserves every witness found at n <= 6
    duplications = 0
    for n in range(1, 7):
        records = n6_records if n == 6 else classify_all(n)
        for rec in records:
            if rec.category != "ZDG":
                continue
            g = parse_graph6(rec.graph6)
            for x in range(g.n):
                g2, t2 = pat.duplicate_vertex(g, rec.certificate.table, x)
                ok, why = verify_witness(g2, t2)
                duplications += 1
                if not ok:
                    problems.append(f"(c) {rec.graph6} vertex {x}: {why}")

    # (d) pendant extension at a max-degree vertex of the four recorded
    # star-but-unrealizable graphs stays unrealizable, exhaustively
    emanations = 0
    for name, g in DGSW_SIX.items():
        for x in range(g.n):
            if degree(g, x) != max_degree(g):
                continue
            cert = find_realization(pat.emanate_end(g, x))
            emanations += 1
            if cert.sat or not cert.exhaustive:
                problems.append(f"(d) {name} vertex {x}")

    # (e) every 7-vertex realizable graph has max degree >= 4 and every vertex
    # within distance 2 of some max-degree vertex
    for rec in n7_records:
        if rec.category != "ZDG":
            continue
        g = parse_graph6(rec.graph6)
        dmax = max_degree(g)
        if dmax < 4:
            problems.append(f"(e) {rec.graph6} max degree {dmax}")
        covered = [False] * g.n
        for x in range(g.n):
            if degree(g, x) == dmax:
                dist = bfs_distances(g, x)
                for v in range(g.n):
                    if dist[v] is not None and dist[v] <= 2:
                        covered[v] = True
        if not all(covered):
            problems.append(f"(e) {rec.graph6} vertex beyond distance 2")

    _criterion(6, not problems,
               f"(a) star=>diameter3,core over n<=7; (b) 3 converse witnesses; "
               f"(c) {duplications} twin duplications re-verified; "
               f"(d) {emanations} pendant extensions exhaustively refuted; "
               f"(e) degree/distance bounds on all 7-vertex realizables; "
               f"violations={problems}")


def test_criterion_7_deterministic_reports(tmp_path, monkeypatch):
    outs = []
    for sub in ("run-a", "run-b"):
        d = tmp_path / sub
        d.mkdir()
        monkeypatch.chdir(d)
        write_report(classify_all(7, ClassifyOptions(), jobs=2), "report.jsonl")
        outs.append((d / "report.jsonl").read_bytes())
    _criterion(7, outs[0] == outs[1],
               "two consecutive full 7-vertex classification runs produce "
               "byte-identical reports")


def test_supplementary_verified_ground_truth(n6_records_nopatterns, n7_records):
    """Pin the machine-verified counts with full certificate re-verification."""
    cats6 = Counter(r.category for r in n6_records_nopatterns)
    cats7 = Counter(r.category for r in n7_records)
    for rec in list(n6_records_nopatterns) + list(n7_records):
        if rec.category == "ZDG":
            ok, why = verify_witness(parse_graph6(rec.graph6), rec.certificate.table)
            assert ok, f"{rec.graph6}: {why}"
        elif rec.category == "StarNotZDG":
            assert rec.certificate.exhaustive
    print("\nSUPPLEMENTARY: verified counts n=6 "
          f"{dict(cats6)}; n=7 {dict(cats7)} (every witness re-verified, "
          "every refutation exhaustive)")
    assert cats6 == Counter({"Disconnected": 44, "ZDG": 68,
                             "ConnectedNotStar": 40, "StarNotZDG": 4})
    assert cats7 == Counter({"Disconnected": 191, "ConnectedNotStar": 505,
                             "ZDG": 305, "StarNotZDG": 43})
