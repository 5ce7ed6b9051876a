"""Command-line front end.

Subcommands: ring, ideals, graph, genus, verify, atlas.  Output on stdout is
deterministic; --timing writes elapsed times to stderr only.  Exit codes:
0 success, 1 verification failure, 2 usage or input error, 3 inconclusive
within budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from pathlib import Path

from .catalog import catalog_entries, catalog_ring, find_catalog
from .classify import INF, TheoremId, verify, verify_all
from .errors import InvalidSpec, ZdgenusError
from .genus import certificate_to_json, exact_genus
from .graphs import (
    clique_number,
    diameter,
    export_dot,
    export_json,
    girth,
    ideal_zero_divisor_graph,
)
from .ideals import (
    IdealSet,
    enumerate_ideals,
    ideal_from_generators,
    is_prime,
    is_radical,
    quotient,
)
from .rings import RingTable, build_ring, is_local, product_tables, spec_from_json, units

MIN_BUDGET = 10**4

_GF_ALIAS = re.compile(r"GF\((\d+)\)", re.IGNORECASE)
# product split points: an ASCII x between a factor tail and a factor head
_PRODUCT_SPLIT = re.compile(r"(?<=[0-9)\]²³⁴⁵])[x×](?=[ZFG])")


def _resolve_factor(token: str) -> RingTable:
    token = _GF_ALIAS.sub(lambda m: f"F_{m.group(1)}", token.strip())
    return catalog_ring(find_catalog(token).name)


def resolve_ring(arg: str) -> RingTable:
    """Catalog name, ring spec JSON path, or product expression."""
    path = Path(arg)
    if path.suffix == ".json" or path.is_file():
        return build_ring(spec_from_json(path.read_text(encoding="utf-8")))
    try:
        return _resolve_factor(arg)
    except InvalidSpec:
        pass
    tokens = _PRODUCT_SPLIT.split(arg)
    if len(tokens) < 2:
        raise InvalidSpec(f"unknown ring {arg!r}")
    table = _resolve_factor(tokens[0])
    for token in tokens[1:]:
        table = product_tables(table, _resolve_factor(token))
    return table


def _split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested in parentheses or brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p for p in parts if p]


def resolve_ideal(table: RingTable, selector: str) -> IdealSet:
    """'#k' for the k-th ideal in enumeration order, or 'gen:a,b' for the
    ideal generated by the labeled elements a and b."""
    if selector.startswith("#"):
        ideals = enumerate_ideals(table)
        try:
            k = int(selector[1:])
        except ValueError:
            raise InvalidSpec(f"bad ideal index {selector!r}")
        if not 0 <= k < len(ideals):
            raise InvalidSpec(
                f"ideal index {k} out of range 0..{len(ideals) - 1}")
        return ideals[k]
    if selector.startswith("gen:"):
        wanted = _split_top_level(selector[4:])
        if not wanted:
            raise InvalidSpec("empty generator list")
        elements = []
        for label in wanted:
            matches = [e for e in range(table.order)
                       if table.labels[e].replace(" ", "") ==
                       label.replace(" ", "")]
            if not matches:
                raise InvalidSpec(
                    f"no element labeled {label!r} in {table.name}")
            elements.append(matches[0])
        return ideal_from_generators(table, elements)
    raise InvalidSpec(f"bad ideal selector {selector!r}; use '#k' or 'gen:...'")


def _fmt(value) -> str:
    return "inf" if value == INF else str(value)


# === Subcommands ============================================================


def cmd_ring(args) -> int:
    table = resolve_ring(args.ring)
    n_units = len(units(table))
    zero_divisors = sum(
        1 for a in range(table.order)
        if any(int(table.mul[a, b]) == table.zero
               for b in range(table.order) if b != table.zero)
    )
    local = is_local(table)
    if args.format == "json":
        print(json.dumps({
            "name": table.name,
            "order": table.order,
            "units": n_units,
            "zero_divisors": zero_divisors,
            "local": local,
            "labels": list(table.labels),
        }, ensure_ascii=False))
    else:
        print(f"ring: {table.name}")
        print(f"order: {table.order}")
        print(f"units: {n_units}")
        print(f"zero-divisors: {zero_divisors}")
        print(f"local: {'yes' if local else 'no'}")
        print("labels: " + " ".join(table.labels))
    return 0


def cmd_ideals(args) -> int:
    table = resolve_ring(args.ring)
    rows = [
        {
            "index": k,
            "ideal": i.describe(),
            "size": i.size,
            "prime": is_prime(i),
            "radical": is_radical(i),
        }
        for k, i in enumerate(enumerate_ideals(table))
    ]
    if args.format == "json":
        for row in rows:
            print(json.dumps(row, ensure_ascii=False))
    else:
        print(f"ideals of {table.name}: {len(rows)}")
        for r in rows:
            flags = (("prime " if r["prime"] else "") +
                     ("radical" if r["radical"] else "")).strip() or "-"
            print(f"#{r['index']:<3} {r['ideal']:<24} size={r['size']:<3} "
                  f"{flags}")
    return 0


def _graph_summary(g) -> dict:
    return {
        "vertices": g.n,
        "edges": g.m,
        "diameter": diameter(g),
        "girth": girth(g),
        "clique": clique_number(g),
    }


def cmd_graph(args) -> int:
    table = resolve_ring(args.ring)
    ideal = resolve_ideal(table, args.ideal)
    if is_prime(ideal):
        print(f"warning: {ideal.describe()} is prime; the graph is empty",
              file=sys.stderr)
    g = ideal_zero_divisor_graph(table, ideal)
    summary = _graph_summary(g)
    if args.format == "dot":
        head = "// " + " ".join(
            f"{k}={_fmt(v)}" for k, v in summary.items())
        payload = head + "\n" + export_dot(g)
    elif args.format == "json":
        payload = json.dumps({
            "ring": table.name,
            "ideal": ideal.describe(),
            "invariants": {k: (None if v == INF else v)
                           for k, v in summary.items()},
            "graph": json.loads(export_json(g)),
        }, ensure_ascii=False, indent=2) + "\n"
    else:
        payload = (
            f"graph of {table.name} at {ideal.describe()}\n"
            + "\n".join(f"{k}: {_fmt(v)}" for k, v in summary.items())
            + "\n")
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(payload)
    return 0


def cmd_genus(args) -> int:
    table = resolve_ring(args.ring)
    ideal = resolve_ideal(table, args.ideal)
    g = ideal_zero_divisor_graph(table, ideal)
    bounds = exact_genus(g, args.budget)
    record = {
        "ring": table.name,
        "ideal": ideal.describe(),
        "vertices": g.n,
        "edges": g.m,
        "lower": bounds.lower,
        "upper": bounds.upper,
        "provenance": list(bounds.provenance),
    }
    if args.format == "json":
        print(json.dumps(record, ensure_ascii=False))
    else:
        print(f"graph of {table.name} at {ideal.describe()}: "
              f"{g.n} vertices, {g.m} edges")
        if bounds.upper is not None and bounds.lower == bounds.upper:
            print(f"genus: {bounds.lower}")
        else:
            print(f"genus lower: {bounds.lower}")
            print(f"genus upper: "
                  f"{'unknown' if bounds.upper is None else bounds.upper}")
        print("provenance: " + "; ".join(bounds.provenance))
    if args.output and bounds.certificate is not None:
        Path(args.output).write_text(
            certificate_to_json(g, bounds.certificate), encoding="utf-8")
        print(f"wrote certificate {args.output}")
    return 0 if bounds.upper is not None else 3


def _resolve_theorem(token: str) -> TheoremId:
    want = token.replace("_", "").replace("-", "").casefold()
    for tid in TheoremId:
        if tid.value.replace("_", "").casefold() == want:
            return tid
    raise InvalidSpec(f"unknown theorem {token!r}; one of "
                      + ", ".join(t.value for t in TheoremId) + ", or 'all'")


def cmd_verify(args) -> int:
    if args.theorem.casefold() == "all":
        t0 = time.monotonic()
        results = verify_all(args.budget)
        if args.timing:
            print(f"verify all: {time.monotonic() - t0:.1f}s",
                  file=sys.stderr)
    else:
        results = {_resolve_theorem(args.theorem): None}
        tid = next(iter(results))
        t0 = time.monotonic()
        results[tid] = verify(tid, args.budget)
        if args.timing:
            print(f"verify {tid.value}: {time.monotonic() - t0:.1f}s",
                  file=sys.stderr)
    lines = []
    failures = 0
    inconclusive = 0
    for tid, reports in results.items():
        bad = [r for r in reports if not r.agreement]
        open_ = [r for r in reports if r.inconclusive]
        failures += len([r for r in bad if not r.inconclusive])
        inconclusive += len(open_)
        status = ("PASS" if not bad and not open_
                  else "OPEN" if not [r for r in bad if not r.inconclusive]
                  else "FAIL")
        lines.append(
            f"{tid.value:<28} instances={len(reports):<4} "
            f"fail={len(bad) - len(open_):<3} open={len(open_):<3} {status}")
        for r in bad:
            lines.append(f"  !! {r.ring} | {r.ideal} | verdict={r.verdict} "
                         f"fact={r.fact} | {r.detail}")
    if args.format == "json":
        payload = "".join(
            r.to_json() + "\n" for reports in results.values()
            for r in reports)
    else:
        payload = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(payload)
    if failures:
        return 1
    if inconclusive:
        return 3
    return 0


ATLAS_COLUMNS = (
    "ring", "ideal", "ideal_size", "prime", "radical", "quotient_order",
    "vertices", "edges", "diameter", "girth", "clique",
    "genus_lower", "genus_upper",
)


def atlas_rows(max_order: int, budget: int) -> list[dict]:
    rows = []
    for entry in catalog_entries():
        table = catalog_ring(entry.name)
        if table.order > max_order:
            continue
        for ideal in enumerate_ideals(table):
            if ideal.is_whole() or ideal.size == 1:
                continue
            g = ideal_zero_divisor_graph(table, ideal)
            bounds = exact_genus(g, budget)
            rows.append({
                "ring": entry.name,
                "ideal": ideal.describe(),
                "ideal_size": ideal.size,
                "prime": str(is_prime(ideal)).lower(),
                "radical": str(is_radical(ideal)).lower(),
                "quotient_order": quotient(table, ideal).table.order,
                "vertices": g.n,
                "edges": g.m,
                "diameter": _fmt(diameter(g)),
                "girth": _fmt(girth(g)),
                "clique": clique_number(g),
                "genus_lower": bounds.lower,
                "genus_upper": "" if bounds.upper is None else bounds.upper,
            })
    return rows


def cmd_atlas(args) -> int:
    t0 = time.monotonic()
    rows = atlas_rows(args.max_order, args.budget)
    if args.timing:
        print(f"atlas: {time.monotonic() - t0:.1f}s", file=sys.stderr)
    buf = io.StringIO()
    buf.write("# zdgenus atlas format 1\n")
    writer = csv.DictWriter(buf, fieldnames=ATLAS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    payload = buf.getvalue()
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
        print(f"wrote {args.output}: {len(rows)} rows")
    else:
        sys.stdout.write(payload)
    return 0


# === Parser =================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdgenus",
        description="Ideal-based zero-divisor graphs of small commutative "
                    "rings and their orientable genus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices):
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("--output", help="write the payload to this path")
        p.add_argument("--budget", type=int, default=10**8,
                       help="search budget for genus (>= 10^4)")
        p.add_argument("--timing", action="store_true",
                       help="print elapsed times to stderr")

    p = sub.add_parser("ring", help="summarize a ring")
    p.add_argument("ring", help="catalog name, spec JSON path, or product")
    common(p, ("table", "json"))
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("ideals", help="list all ideals of a ring")
    p.add_argument("ring")
    common(p, ("table", "json"))
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("graph", help="emit the ideal-based zero-divisor graph")
    p.add_argument("ring")
    p.add_argument("ideal", help="'#k' or 'gen:a,b'")
    common(p, ("table", "dot", "json"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("genus", help="genus bounds for the graph of a pair")
    p.add_argument("ring")
    p.add_argument("ideal", help="'#k' or 'gen:a,b'")
    common(p, ("table", "json"))
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("verify", help="re-verify a classification fact")
    p.add_argument("theorem", help="a TheoremId or 'all'")
    common(p, ("table", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("atlas", help="CSV of every catalog (ring, ideal) pair")
    p.add_argument("--max-order", type=int, default=64)
    common(p, ("csv",))
    p.set_defaults(func=cmd_atlas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget < MIN_BUDGET:
        print(f"error: budget {args.budget} below minimum {MIN_BUDGET}",
              file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (ZdgenusError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
