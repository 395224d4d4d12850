"""Isomorphism-free enumeration of small graphs and the per-graph classifier.

Graphs on n vertices are generated by extending every (n-1)-vertex
representative with a new vertex attached in all 2^(n-1) ways and
deduplicating by canonical code.  Every n-vertex graph arises this way
(delete its last vertex), so one pass yields exactly one canonically
labeled representative per isomorphism class.  A brute-force sweep over
all labeled graphs would also work at this scale but is far too slow in
this implementation language; the extension strategy is cross-checked
against the labeled-graph oracle for small n in the tests.

Classification of one graph runs the cheap gates first (connectivity,
star condition), then the constructive pattern families, then twin
reduction, and finally the exhaustive table search.  Every ZDG verdict
carries a verified table; every StarNotZDG verdict carries an exhaustive
search certificate.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from zdg.graphs import Graph, add_vertex, canonical_form, canonical_graph, emit_graph6, is_connected, parse_graph6, remove_vertex
from zdg.conditions import ConditionReport, check_all_conditions
from zdg.semigroup import MulTable, WitnessCertificate, find_realization, verify_witness
from zdg import patterns as pat

MAX_ENUM_N = 7

CATEGORY_DISCONNECTED = "Disconnected"
CATEGORY_NOT_STAR = "ConnectedNotStar"
CATEGORY_STAR_NOT_ZDG = "StarNotZDG"
CATEGORY_ZDG = "ZDG"


def _extend_all(smaller):
    out = {}
    for g in smaller:
        for mask in range(1 << g.n):
            h = add_vertex(g, mask)
            code = canonical_form(h)
            if code not in out:
                out[code] = canonical_graph(h)
    return out


_cache = {1: {canonical_form(Graph(1, [0])): Graph(1, [0])}}


def _graphs_up_to(n):
    top = max(_cache)
    while top < n:
        _cache[top + 1] = _extend_all(_cache[top].values())
        top += 1
    return _cache[n]


def enumerate_all(n):
    """Canonical representatives of all graphs on n vertices, in code order."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be in 1..{MAX_ENUM_N}")
    table = _graphs_up_to(n)
    return [table[code] for code in sorted(table)]


def enumerate_connected(n):
    """Canonical representatives of the connected graphs on n vertices."""
    return [g for g in enumerate_all(n) if is_connected(g)]


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass
class ClassificationRecord:
    graph6: str
    n: int
    category: str | None
    method: str
    condition_report: ConditionReport
    certificate: WitnessCertificate | None = None
    certificate_ref: str | None = None
    atlas_id: str | None = None

    @property
    def inconclusive(self):
        return self.category is None

    def to_json(self):
        return {
            "graph6": self.graph6,
            "n": self.n,
            "category": self.category,
            "method": self.method,
            "condition_report": self.condition_report.to_json(),
            "certificate_ref": self.certificate_ref,
            "atlas_id": self.atlas_id,
        }


@dataclass
class ClassifyOptions:
    use_patterns: bool = True
    use_duplication: bool = True
    trust_pattern_refutations: bool = False
    budget: int | None = None


def _realize_by_duplication(g, options):
    """Try to lift a witness from the twin-reduced parent graph."""
    twins = pat.find_duplication_parent(g)
    if twins is None:
        return None
    x, y, mode = twins
    parent = remove_vertex(g, y)
    parent_cert = _realize(parent, options, allow_duplication=True)
    if parent_cert is None or not parent_cert.sat:
        return None
    # x keeps its index in the parent since y > x was removed
    xsq = parent_cert.table.product(x + 1, x + 1)
    if (mode == "open") != (xsq != 0):
        return None  # the found parent table has the wrong kind of square
    g2, t2 = pat.duplicate_vertex(parent, parent_cert.table, x)
    # duplicate_vertex appends the twin last; move it back to position y
    order = list(range(g.n - 1))
    order.insert(y, g.n - 1)
    rows = [[0] * (g.n + 1) for _ in range(g.n + 1)]
    for u in range(g.n):
        for v in range(g.n):
            rows[u + 1][v + 1] = _remap(t2.rows[order[u] + 1][order[v] + 1], order)
        rows[u + 1][0] = rows[0][u + 1] = 0
    lifted = MulTable(g.n, rows)
    ok, why = verify_witness(g, lifted)
    if not ok:
        raise AssertionError(f"duplication lift failed: {why}")
    return WitnessCertificate("sat", table=lifted,
                              nodes_explored=parent_cert.nodes_explored)


def _remap(element, order):
    if element == 0:
        return 0
    return order.index(element - 1) + 1


def _realize(g, options, allow_duplication):
    """Certificate for a connected, star-satisfying graph, or None to defer."""
    if options.use_patterns:
        verdict = pat.recognize(g)
        if verdict.recognized and verdict.realizable and verdict.table is not None:
            return WitnessCertificate("sat", table=verdict.table)
        if (verdict.recognized and verdict.realizable is False
                and options.trust_pattern_refutations):
            return WitnessCertificate("unsat", exhaustive=True)
    if options.use_duplication and allow_duplication:
        cert = _realize_by_duplication(g, options)
        if cert is not None:
            return cert
    return find_realization(g, budget=options.budget)


def classify(g, options=None):
    """Full pipeline verdict for one graph."""
    options = options or ClassifyOptions()
    code = canonical_form(g)
    graph6 = code.decode("ascii")
    report = check_all_conditions(g)
    if not report.connected:
        return ClassificationRecord(graph6, g.n, CATEGORY_DISCONNECTED,
                                    "conditions", report)
    if not report.star_ok:
        return ClassificationRecord(graph6, g.n, CATEGORY_NOT_STAR,
                                    "conditions", report)

    method = "search"
    if options.use_patterns:
        verdict = pat.recognize(g)
        if verdict.recognized and verdict.realizable and verdict.table is not None:
            return ClassificationRecord(graph6, g.n, CATEGORY_ZDG,
                                        f"pattern:{verdict.family}", report,
                                        certificate=WitnessCertificate("sat", table=verdict.table))
        if (verdict.recognized and verdict.realizable is False
                and options.trust_pattern_refutations):
            return ClassificationRecord(graph6, g.n, CATEGORY_STAR_NOT_ZDG,
                                        f"pattern:{verdict.family}", report,
                                        certificate=WitnessCertificate("unsat", exhaustive=True))

    if options.use_duplication:
        cert = _realize_by_duplication(g, options)
        if cert is not None:
            twins = pat.find_duplication_parent(g)
            parent = remove_vertex(g, twins[1])
            parent_g6 = canonical_form(parent).decode("ascii")
            return ClassificationRecord(graph6, g.n, CATEGORY_ZDG,
                                        f"duplication:{parent_g6}", report,
                                        certificate=cert)

    cert = find_realization(g, budget=options.budget)
    if cert.sat:
        return ClassificationRecord(graph6, g.n, CATEGORY_ZDG, method, report,
                                    certificate=cert)
    if cert.exhaustive:
        return ClassificationRecord(graph6, g.n, CATEGORY_STAR_NOT_ZDG, method,
                                    report, certificate=cert)
    return ClassificationRecord(graph6, g.n, None, method, report, certificate=cert)


def _classify_worker(args):
    g6, options = args
    return classify(parse_graph6(g6), options)


def classify_all(n, options=None, jobs=1):
    """Deterministic records for every isomorphism class on n vertices."""
    options = options or ClassifyOptions()
    graphs = enumerate_all(n)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            args = [(emit_graph6(g), options) for g in graphs]
            records = pool.map(_classify_worker, args, chunksize=8)
    else:
        records = [classify(g, options) for g in graphs]
    records.sort(key=lambda r: r.graph6)
    return records


# ---------------------------------------------------------------------------
# reports, certificates, atlas cross-reference
# ---------------------------------------------------------------------------


def certificate_dir_for(report_path):
    base, _ = os.path.splitext(report_path)
    return base + ".certs"


def write_report(records, report_path, atlas_index=None):
    """JSONL report sorted by canonical code plus one certificate file each."""
    cert_dir = certificate_dir_for(report_path)
    os.makedirs(cert_dir, exist_ok=True)
    records = sorted(records, key=lambda r: r.graph6)
    with open(report_path, "w", encoding="utf-8") as fh:
        for rec in records:
            if rec.certificate is not None:
                name = rec.graph6.encode("ascii").hex() + ".json"
                rec.certificate_ref = os.path.join(cert_dir, name)
                with open(rec.certificate_ref, "w", encoding="utf-8") as cf:
                    json.dump(rec.certificate.to_json(), cf, indent=1, sort_keys=True)
                    cf.write("\n")
            if atlas_index is not None:
                rec.atlas_id = atlas_index.get(rec.graph6.encode("ascii"))
            fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    return records


class AtlasIndexError(ValueError):
    pass


def ingest_atlas_index(path):
    """Map canonical code -> atlas id from lines of '<atlas_id> <graph6>'."""
    mapping = {}
    used_ids = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise AtlasIndexError(f"line {lineno}: expected '<atlas_id> <graph6>'")
            atlas_id, g6 = parts
            try:
                code = canonical_form(parse_graph6(g6))
            except ValueError as exc:
                raise AtlasIndexError(f"line {lineno}: {exc}") from exc
            if atlas_id in used_ids and used_ids[atlas_id] != code:
                raise AtlasIndexError(f"line {lineno}: atlas id {atlas_id} maps to two graphs")
            used_ids[atlas_id] = code
            mapping[code] = atlas_id
    return mapping
