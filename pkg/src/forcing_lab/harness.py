"""Command-line front end: metrics, exhaustive verification, constructions,
and the small counterexample searches.

Subcommands
-----------
compute         metrics records (JSON lines) for named graphs or input files
verify          run every registered tree check over all trees up to an order
construct       build a range tree or a bundled-support family member, verified
counterexample  complete / complete_bipartite / two_pc spot checks

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 capacity error.
Records carry schema "forcing-lab/1"; stdout is JSON lines only, and identical
inputs and flags produce byte-identical output regardless of --threads.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import characterize, forcing, generate, matching, path_cover, trim
from .graph_core import (
    CapacityError,
    Graph,
    InputError,
    TreeCert,
    VertexSet,
    canonical_form,
    is_connected,
    is_tree,
    leaves,
    parse_edge_list,
    parse_graph6,
    format_edge_list,
    to_graph6,
)

SCHEMA = "forcing-lab/1"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

VERIFY_MAX_ORDER_LIMIT = 12
DEFAULT_MAX_ORDER = 10


# --- metrics records ---------------------------------------------------------


def metrics_record(g: Graph, graph_id: str, with_witnesses: bool = True) -> dict:
    """One JSON-ready metrics record; exact values, None above capacity.

    For trees the record re-asserts the proven inequalities as a hard guard:
    pc + 1 <= ft <= 2 pc and ft <= alpha + pc.
    """
    warnings: list[str] = []
    witnesses: dict[str, object] = {}
    z = ft = pc = alpha = None
    lower = upper = family = None
    tree = is_tree(g)
    if tree:
        cert = TreeCert(g)
        profile = path_cover.pc_tree(cert)
        pc = profile.pc
        witnesses["cover"] = [list(p) for p in profile.witness.paths]
        alpha, m_witness = matching.matching_number_tree(cert)
        witnesses["matching"] = [list(e) for e in m_witness.edges]
        try:
            zres = forcing.zero_forcing_number(g)
            z = zres.z
            witnesses["z"] = sorted(zres.z_witness)
        except CapacityError as exc:
            warnings.append(str(exc))
        if g.n >= 2:
            try:
                fres = forcing.total_forcing_number(g)
                ft = fres.ft
                witnesses["ft"] = sorted(fres.ft_witness)
            except CapacityError as exc:
                warnings.append(str(exc))
            verdict = characterize.classify_extremal(cert)
            lower, upper, family = (
                verdict.case_pc_plus_1,
                verdict.case_2pc,
                verdict.case_family_t,
            )
            if ft is not None and not (pc + 1 <= ft <= 2 * pc and ft <= alpha + pc):
                raise RuntimeError(
                    f"tree invariant violated for {graph_id}: "
                    f"pc={pc} ft={ft} alpha={alpha}"
                )
        else:
            warnings.append("total forcing undefined below order 2")
    else:
        try:
            zres = forcing.zero_forcing_number(g)
            z = zres.z
            witnesses["z"] = sorted(zres.z_witness)
        except CapacityError as exc:
            warnings.append(str(exc))
        if g.n >= 2 and all(len(g.adj[v]) > 0 for v in range(g.n)):
            try:
                fres = forcing.total_forcing_number(g)
                ft = fres.ft
                witnesses["ft"] = sorted(fres.ft_witness)
            except CapacityError as exc:
                warnings.append(str(exc))
        else:
            warnings.append("total forcing undefined (order < 2 or isolated vertex)")
        try:
            pc = path_cover.pc_exhaustive(g)
        except CapacityError as exc:
            warnings.append(str(exc))
        try:
            alpha, m_witness = matching.matching_number_general(g)
            witnesses["matching"] = [list(e) for e in m_witness.edges]
        except CapacityError as exc:
            warnings.append(str(exc))
    record = {
        "schema": SCHEMA,
        "kind": "metrics",
        "graph_id": graph_id,
        "n": g.n,
        "m": g.m,
        "is_tree": tree,
        "z": z,
        "ft": ft,
        "pc": pc,
        "alpha": alpha,
        "lower_extremal": lower,
        "upper_extremal": upper,
        "family_t": family,
        "witnesses": witnesses if with_witnesses else None,
        "warnings": warnings,
    }
    return record


# --- per-tree facts and the registered checks --------------------------------


@dataclass
class TreeFacts:
    cert: TreeCert
    canon: str
    z: int
    z_witness: VertexSet
    ft: int
    ft_witness: VertexSet
    profile: path_cover.CoverProfile
    alpha: int
    trim_result: trim.TrimResult
    trimmed_ft: int
    trimmed_pc: int
    lower: bool
    upper: bool
    family_witness: characterize.FamilyTWitness | None
    rng_seed: str


def tree_facts(cert: TreeCert, seed: int) -> TreeFacts:
    g = cert.graph
    canon = canonical_form(cert).hex()
    zres = forcing.zero_forcing_number(g)
    fres = forcing.total_forcing_number(g)
    profile = path_cover.pc_tree(cert)
    alpha, _ = matching.matching_number_tree(cert)
    tr = trim.trim_tree(cert)
    trimmed_ft = forcing.total_forcing_number(tr.trimmed.graph).ft
    trimmed_pc = path_cover.pc_tree(tr.trimmed).pc
    return TreeFacts(
        cert=cert,
        canon=canon,
        z=zres.z,
        z_witness=zres.z_witness,
        ft=fres.ft,
        ft_witness=fres.ft_witness,
        profile=profile,
        alpha=alpha,
        trim_result=tr,
        trimmed_ft=trimmed_ft,
        trimmed_pc=trimmed_pc,
        lower=characterize.is_lower_extremal(cert),
        upper=characterize.is_upper_extremal(cert),
        family_witness=characterize.recognize_family_t(cert),
        rng_seed=f"{seed}:{canon}",
    )


def _check_cover(f: TreeFacts) -> list[str]:
    if f.z != f.profile.pc:
        return [f"z={f.z} differs from pc={f.profile.pc}"]
    return []


def _check_z_gap(f: TreeFacts) -> list[str]:
    out = []
    if not f.ft >= f.z + 1:
        out.append(f"ft={f.ft} below z+1={f.z + 1}")
    if (f.ft == f.z + 1) != f.lower:
        out.append(f"ft-z gap flag mismatch: ft={f.ft} z={f.z} lower={f.lower}")
    return out


def _check_double_z(f: TreeFacts) -> list[str]:
    if f.ft > 2 * f.z:
        return [f"ft={f.ft} above 2z={2 * f.z}"]
    return []


def _check_pc_bounds(f: TreeFacts) -> list[str]:
    out = []
    pc = f.profile.pc
    if not pc + 1 <= f.ft <= 2 * pc:
        out.append(f"ft={f.ft} outside [pc+1, 2pc] = [{pc + 1}, {2 * pc}]")
    if (f.ft == pc + 1) != f.lower:
        out.append(f"lower-extremal flag mismatch: ft={f.ft} pc={pc} flag={f.lower}")
    if (f.ft == 2 * pc) != f.upper:
        out.append(f"upper-extremal flag mismatch: ft={f.ft} pc={pc} flag={f.upper}")
    return out


def _check_matching_bound(f: TreeFacts) -> list[str]:
    out = []
    pc = f.profile.pc
    if f.ft > f.alpha + pc:
        out.append(f"ft={f.ft} above alpha+pc={f.alpha + pc}")
    member = f.family_witness is not None
    if (f.ft == f.alpha + pc) != member:
        out.append(
            f"family membership mismatch: ft={f.ft} alpha+pc={f.alpha + pc} member={member}"
        )
    if member:
        implied = characterize.family_t_invariants(f.family_witness)
        if implied != (f.alpha, pc, f.ft):
            out.append(f"witness invariants {implied} differ from ({f.alpha}, {pc}, {f.ft})")
    return out


def _check_trim(f: TreeFacts) -> list[str]:
    out = []
    if f.trimmed_ft != f.ft:
        out.append(f"ft changes under trimming: {f.ft} -> {f.trimmed_ft}")
    if f.trimmed_pc != f.profile.pc:
        out.append(f"pc changes under trimming: {f.profile.pc} -> {f.trimmed_pc}")
    g = f.cert.graph
    if not trim.is_path(f.cert):
        before = len(leaves(g))
        after = len(leaves(f.trim_result.trimmed.graph))
        if before != after:
            out.append(f"leaf count changes under trimming: {before} -> {after}")
    baseline = canonical_form(f.trim_result.trimmed)
    rng = random.Random(f.rng_seed)
    for _ in range(10):
        shuffled = trim.trim_tree(f.cert, order_rng=rng)
        if canonical_form(shuffled.trimmed) != baseline:
            out.append("trimming is not confluent under random contraction orders")
            break
    return out


def _check_contract_pc(f: TreeFacts) -> list[str]:
    out = []
    for e in trim.eligible_edges(f.cert.graph):
        if not path_cover.subdivision_invariance_check(f.cert, e):
            out.append(f"pc changes when contracting {e}")
    return out


def _check_subdivide_ft(f: TreeFacts) -> list[str]:
    # One subdivision per edge with an endpoint of degree <= 2; capped at
    # order 8 so the search on the grown trees stays desk-scale.
    if f.cert.n > 8:
        return []
    g = f.cert.graph
    out = []
    for e in g.edges():
        if min(g.degree(e[0]), g.degree(e[1])) > 2:
            continue
        grown = trim.subdivide_edge(g, e)
        ft2 = forcing.total_forcing_number(grown).ft
        if ft2 != f.ft:
            out.append(f"ft changes when subdividing {e}: {f.ft} -> {ft2}")
    return out


def _check_leaf_cover(f: TreeFacts) -> list[str]:
    if not f.upper:
        return []
    out = []
    s = path_cover.tfset_from_leaf_cover(f.cert, f.profile.witness)
    if len(s) != 2 * f.profile.pc:
        out.append(f"leaf-cover set has size {len(s)}, expected {2 * f.profile.pc}")
    if not forcing.is_total_forcing_set(f.cert.graph, s):
        out.append("leaf-cover set is not a total forcing set")
    return out


def _check_strong_supports(f: TreeFacts) -> list[str]:
    g = f.cert.graph
    out = []
    strong, bundles = forcing.mandatory_tf_vertices(g)
    for v, bundle in bundles:
        if v not in f.ft_witness:
            out.append(f"minimum witness misses strong support {v}")
        hit = sum(1 for leaf in bundle if leaf in f.ft_witness)
        if hit < len(bundle) - 1:
            out.append(f"minimum witness misses >= 2 leaves of support {v}")
        for x, y in combinations(bundle, 2):
            s = VertexSet(g.full_mask & ~(1 << x) & ~(1 << y), g.n)
            if forcing.is_total_forcing_set(g, s):
                out.append(f"set missing both leaves {x},{y} of {v} still forces totally")
    return out


def _check_cover_surgery(f: TreeFacts) -> list[str]:
    g = f.cert.graph
    out = []
    _, bundles = forcing.mandatory_tf_vertices(g)
    for v, bundle in bundles:
        u, w = bundle[0], bundle[1]
        fixed = path_cover.normalize_strong_support(g, f.profile.witness, v, u, w)
        if len(fixed) != f.profile.pc:
            out.append(f"surgery at {v} changed the cover size")
            continue
        if (u, v, w) not in fixed.paths and (w, v, u) not in fixed.paths:
            out.append(f"surgery at {v} did not produce path {u}-{v}-{w}")
    return out


CHECKS: dict[str, Callable[[TreeFacts], list[str]]] = {
    "cover": _check_cover,
    "z-gap": _check_z_gap,
    "double-z": _check_double_z,
    "pc-bounds": _check_pc_bounds,
    "matching-bound": _check_matching_bound,
    "trim": _check_trim,
    "contract-pc": _check_contract_pc,
    "subdivide-ft": _check_subdivide_ft,
    "leaf-cover": _check_leaf_cover,
    "strong-supports": _check_strong_supports,
    "cover-surgery": _check_cover_surgery,
}


def _verify_worker(task: tuple[int, tuple[tuple[int, int], ...], int, tuple[str, ...]]):
    n, edges, seed, names = task
    cert = TreeCert(Graph.from_edges(n, edges))
    facts = tree_facts(cert, seed)
    results = {name: CHECKS[name](facts) for name in names}
    return n, facts.canon, results


def cmd_verify(
    max_order: int = DEFAULT_MAX_ORDER,
    theorems: Sequence[str] | None = None,
    seed: int = 0,
    threads: int = 1,
) -> tuple[dict, int]:
    """Check every registered property on all trees of order 2..max_order."""
    if max_order < 2:
        raise InputError("verification needs max order >= 2")
    if max_order > VERIFY_MAX_ORDER_LIMIT:
        raise CapacityError(
            f"verification limited to max order {VERIFY_MAX_ORDER_LIMIT}"
        )
    names = tuple(CHECKS) if theorems is None else tuple(theorems)
    for name in names:
        if name not in CHECKS:
            raise InputError(f"unknown theorem id {name!r}; known: {', '.join(CHECKS)}")
    tasks = []
    tree_counts: dict[int, int] = {}
    for n in range(2, max_order + 1):
        count = 0
        for cert in generate.all_trees(n):
            tasks.append((n, tuple(cert.graph.edges()), seed, names))
            count += 1
        tree_counts[n] = count
    results = _pmap(_verify_worker, tasks, threads)
    results.sort(key=lambda r: (r[0], r[1]))
    violations = []
    for n, canon, per_check in results:
        for name in names:
            for detail in per_check[name]:
                violations.append({"theorem": name, "tree": canon, "n": n, "detail": detail})
    for n, count in tree_counts.items():
        expected = generate.FREE_TREE_COUNTS[n - 1]
        if count != expected:
            violations.append(
                {
                    "theorem": "enumeration",
                    "tree": "",
                    "n": n,
                    "detail": f"emitted {count} trees at order {n}, expected {expected}",
                }
            )
    report = {
        "schema": SCHEMA,
        "kind": "verify_report",
        "min_order": 2,
        "max_order": max_order,
        "tree_counts": {str(n): c for n, c in sorted(tree_counts.items())},
        "trees_checked": len(tasks),
        "theorems": {
            name: {
                "checked": len(tasks),
                "violations": sum(1 for v in violations if v["theorem"] == name),
            }
            for name in names
        },
        "violations": violations,
    }
    return report, EXIT_VERIFY_FAIL if violations else EXIT_OK


def _pmap(fn, items, threads):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=8))


# --- compute ------------------------------------------------------------------


def _parse_named_spec(spec: str) -> tuple[str, Graph]:
    if ":" not in spec:
        raise InputError(f"named graph must look like name:params, got {spec!r}")
    name, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",") if x != ""]
    except ValueError as exc:
        raise InputError(f"bad parameters in {spec!r}") from exc
    return spec, generate.named(name, params)


def _load_input(path: str) -> list[tuple[str, Graph]]:
    if path.endswith(".el"):
        with open(path, encoding="utf-8") as fh:
            g = parse_edge_list(fh.read())
        gid = canonical_form(TreeCert(g)).hex() if is_tree(g) else "g6:" + to_graph6(g)
        return [(gid, g)]
    if path.endswith(".g6"):
        out = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                g = parse_graph6(line)
                gid = (
                    canonical_form(TreeCert(g)).hex()
                    if is_tree(g)
                    else "g6:" + to_graph6(g)
                )
                out.append((gid, g))
        return out
    raise InputError(f"cannot sniff input format of {path!r} (expect .el or .g6)")


def _metrics_worker(item: tuple[str, int, tuple[tuple[int, int], ...]]) -> dict:
    gid, n, edges = item
    return metrics_record(Graph.from_edges(n, edges), gid)


def cmd_compute(
    named_specs: Sequence[str],
    input_paths: Sequence[str],
    threads: int = 1,
) -> tuple[list[dict], int]:
    graphs: list[tuple[str, Graph]] = []
    for spec in named_specs:
        graphs.append(_parse_named_spec(spec))
    for path in input_paths:
        graphs.extend(_load_input(path))
    if not graphs:
        raise InputError("compute needs --named or --input")
    items = [(gid, g.n, tuple(g.edges())) for gid, g in graphs]
    records = _pmap(_metrics_worker, items, threads)
    return records, EXIT_OK


# --- counterexamples ----------------------------------------------------------


def _exact_triple(g: Graph) -> tuple[int, int, int]:
    ft = forcing.total_forcing_number(g).ft
    alpha, _ = matching.matching_number_general(g)
    pc = path_cover.pc_exhaustive(g)
    return ft, alpha, pc


def _cubic_graphs(n: int) -> list[Graph]:
    """Connected 3-regular graphs on n vertices, one per isomorphism class.

    Generation fixes N(0) = {1,2,3} (always reachable by relabeling) and
    back-tracks on the remaining slots; classes are separated by a small
    backtracking isomorphism test.
    """
    if n < 4 or n % 2:
        return []
    bits = [0] * n
    for u in (1, 2, 3):
        bits[0] |= 1 << u
        bits[u] |= 1
    found: list[Graph] = []

    def backtrack(v: int) -> None:
        if v == n:
            g = Graph.from_edges(
                n, [(a, b) for a in range(n) for b in range(a + 1, n) if bits[a] >> b & 1]
            )
            if is_connected(g) and not any(_isomorphic(g, h) for h in found):
                found.append(g)
            return
        need = 3 - bits[v].bit_count()
        if need == 0:
            backtrack(v + 1)
            return
        candidates = [
            u
            for u in range(v + 1, n)
            if bits[u].bit_count() < 3 and not bits[v] >> u & 1
        ]
        for combo in combinations(candidates, need):
            for u in combo:
                bits[v] |= 1 << u
                bits[u] |= 1 << v
            backtrack(v + 1)
            for u in combo:
                bits[v] &= ~(1 << u)
                bits[u] &= ~(1 << v)

    backtrack(1)
    return found


def _isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False
    n = g1.n
    image = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        for w in range(n):
            if used >> w & 1 or len(g2.adj[w]) != len(g1.adj[v]):
                continue
            ok = True
            for u in g1.adj[v]:
                if u < v and not g2.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                for u in range(v):
                    if not g1.has_edge(u, v) and g2.has_edge(image[u], w):
                        ok = False
                        break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(v + 1):
                    return True
                used &= ~(1 << w)
                image[v] = -1
        return False

    return extend(0)


def cmd_counterexample(which: str) -> tuple[list[dict], int]:
    """Exact checks showing the tree bounds fail on general graphs."""
    records: list[dict] = []
    code = EXIT_OK
    if which == "complete":
        for n in (5, 6, 7):
            g = generate.named("complete", [n])
            ft, alpha, pc = _exact_triple(g)
            holds = ft > alpha + pc
            if not holds:
                code = EXIT_VERIFY_FAIL
            records.append(
                {
                    "schema": SCHEMA,
                    "kind": "counterexample",
                    "which": which,
                    "graph_id": f"complete:{n}",
                    "n": n,
                    "ft": ft,
                    "alpha": alpha,
                    "pc": pc,
                    "exceeds_alpha_plus_pc": holds,
                }
            )
    elif which == "complete_bipartite":
        g = generate.named("complete_bipartite", [4, 4])
        ft, alpha, pc = _exact_triple(g)
        holds = ft > alpha + pc
        if not holds:
            code = EXIT_VERIFY_FAIL
        records.append(
            {
                "schema": SCHEMA,
                "kind": "counterexample",
                "which": which,
                "graph_id": "complete_bipartite:4,4",
                "n": g.n,
                "ft": ft,
                "alpha": alpha,
                "pc": pc,
                "exceeds_alpha_plus_pc": holds,
            }
        )
    elif which == "two_pc":
        best = 0.0
        for n in (4, 6, 8):
            for g in _cubic_graphs(n):
                ft = forcing.total_forcing_number(g).ft
                pc = path_cover.pc_exhaustive(g)
                ratio = ft / pc
                best = max(best, ratio)
                records.append(
                    {
                        "schema": SCHEMA,
                        "kind": "counterexample",
                        "which": which,
                        "graph_id": "g6:" + to_graph6(g),
                        "n": n,
                        "ft": ft,
                        "pc": pc,
                        "ratio": round(ratio, 6),
                        "exceeds_double_pc": ft > 2 * pc,
                    }
                )
        records.append(
            {
                "schema": SCHEMA,
                "kind": "counterexample_summary",
                "which": which,
                "graphs": len(records),
                "max_ft_over_pc": round(best, 6),
                "note": "observed ratios at tested sizes; no growth claim",
            }
        )
    else:
        raise InputError(f"unknown counterexample kind {which!r}")
    return records, code


# --- construct ------------------------------------------------------------


def cmd_construct_range(k: int, l: int) -> tuple[list[dict], int]:
    t = characterize.build_range_tree(k, l)
    pc = path_cover.pc_tree(t).pc
    ft = forcing.total_forcing_number(t.graph).ft
    verified = pc == l and ft == k + l
    record = {
        "schema": SCHEMA,
        "kind": "construct",
        "construct": "range",
        "k": k,
        "l": l,
        "n": t.n,
        "edge_list": format_edge_list(t.graph),
        "pc": pc,
        "ft": ft,
        "expected": {"pc": l, "ft": k + l},
        "verified": verified,
    }
    return [record], EXIT_OK if verified else EXIT_VERIFY_FAIL


def cmd_construct_family(
    underlying_spec: str, attachers: Sequence[int], bundle_sizes: Sequence[int]
) -> tuple[list[dict], int]:
    if len(attachers) != len(bundle_sizes):
        raise InputError("--attachers and --bundles must have equal length")
    _, g = _parse_named_spec(underlying_spec)
    f = TreeCert(g)
    a = VertexSet.from_vertices(attachers, f.n)
    sizes = dict(zip(attachers, bundle_sizes))
    t = characterize.build_family_t(f, a, sizes)
    witness = characterize.recognize_family_t(t)
    pc = path_cover.pc_tree(t).pc
    ft = forcing.total_forcing_number(t.graph).ft
    alpha, _ = matching.matching_number_tree(t)
    verified = witness is not None and characterize.family_t_invariants(witness) == (
        alpha,
        pc,
        ft,
    )
    record = {
        "schema": SCHEMA,
        "kind": "construct",
        "construct": "family_t",
        "underlying": underlying_spec,
        "attachers": list(attachers),
        "bundles": list(bundle_sizes),
        "n": t.n,
        "edge_list": format_edge_list(t.graph),
        "alpha": alpha,
        "pc": pc,
        "ft": ft,
        "recognized": witness is not None,
        "verified": verified,
    }
    return [record], EXIT_OK if verified else EXIT_VERIFY_FAIL


# --- CLI -----------------------------------------------------------------------


def _resolve_threads(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("FORCING_LAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise InputError(f"bad FORCING_LAB_THREADS value {env!r}") from exc
    return 1


def _emit(records: Iterable[dict], json_path: str | None) -> None:
    lines = "".join(json.dumps(r) + "\n" for r in records)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forcing-lab",
        description="Exact forcing, path cover, and matching invariants of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="metrics records for input graphs")
    p_compute.add_argument("--named", action="append", default=[], metavar="NAME:PARAMS")
    p_compute.add_argument("--input", action="append", default=[], metavar="PATH")
    p_compute.add_argument("--json", default=None, metavar="PATH")
    p_compute.add_argument("--threads", type=int, default=None)

    p_verify = sub.add_parser("verify", help="exhaustive checks over small trees")
    p_verify.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p_verify.add_argument("--theorem", default=None, metavar="ID[,ID...]")
    p_verify.add_argument("--json", default=None, metavar="PATH")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--threads", type=int, default=None)

    p_construct = sub.add_parser("construct", help="build and verify constructions")
    c_sub = p_construct.add_subparsers(dest="construct_kind", required=True)
    c_range = c_sub.add_parser("range")
    c_range.add_argument("k", type=int)
    c_range.add_argument("l", type=int)
    c_range.add_argument("--json", default=None, metavar="PATH")
    c_family = c_sub.add_parser("family_t")
    c_family.add_argument("--underlying", required=True, metavar="NAME:PARAMS")
    c_family.add_argument("--attachers", required=True, metavar="V[,V...]")
    c_family.add_argument("--bundles", required=True, metavar="K[,K...]")
    c_family.add_argument("--json", default=None, metavar="PATH")

    p_counter = sub.add_parser("counterexample", help="general-graph spot checks")
    p_counter.add_argument(
        "which", choices=("complete", "complete_bipartite", "two_pc")
    )
    p_counter.add_argument("--json", default=None, metavar="PATH")
    return parser


def _csv_ints(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError as exc:
        raise InputError(f"{flag} expects comma-separated integers, got {text!r}") from exc


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            records, code = cmd_compute(
                args.named, args.input, threads=_resolve_threads(args.threads)
            )
        elif args.command == "verify":
            theorems = None if args.theorem is None else args.theorem.split(",")
            report, code = cmd_verify(
                max_order=args.max_order,
                theorems=theorems,
                seed=args.seed,
                threads=_resolve_threads(args.threads),
            )
            for name, stats in report["theorems"].items():
                status = "ok" if stats["violations"] == 0 else "FAIL"
                print(
                    f"{name}: {status} ({stats['checked']} trees,"
                    f" {stats['violations']} violations)",
                    file=sys.stderr,
                )
            records = [report]
        elif args.command == "construct":
            if args.construct_kind == "range":
                records, code = cmd_construct_range(args.k, args.l)
            else:
                records, code = cmd_construct_family(
                    args.underlying,
                    _csv_ints(args.attachers, "--attachers"),
                    _csv_ints(args.bundles, "--bundles"),
                )
        else:
            records, code = cmd_counterexample(args.which)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    _emit(records, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
