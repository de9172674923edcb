"""Batch verification over a directory of group files."""

from __future__ import annotations

import csv
import io
import json
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from . import groupspec
from .cyclo import factorize
from .errors import NotApplicable
from .vanish import (
    check_lemma_suite,
    check_nif_chain,
    check_theorem_a,
    construct_and_check_a6_family,
    nonvanishing_structure,
)

MODES = ("analyze", "theorem-a", "lemma-suite", "family-a6")
LEMMA_SUITE_MAX_ORDER = 400
CSV_FIELDS = ("name", "order", "pv_num", "pv_den", "nv_subgroup", "nv_abelian", "nv_normal", "theorem_a_m", "status")


def bundled_corpus_dir() -> Path:
    return Path(str(resources.files("vanishlab") / "data" / "corpus"))


# -- the bundled corpus ----------------------------------------------------------


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def abelian_invariants(n: int) -> list[list[int]]:
    """Invariant factors ``d1 | d2 | ...`` of every abelian group of order ``n``."""
    per_prime = []
    for p, a in factorize(n):
        per_prime.append([[p**k for k in part] for part in _partitions(a)])
    out = [[]]
    for options in per_prime:
        out = [prev + [opt] for prev in out for opt in options]
    result = []
    for combo in out:
        width = max((len(c) for c in combo), default=0)
        factors = []
        for i in range(width):
            d = 1
            for c in combo:
                if i < len(c):
                    d *= c[i]
            factors.append(d)
        result.append(sorted(factors))
    return sorted(result)


def default_corpus() -> list[groupspec.GroupSpec]:
    specs = []

    def add(call, name=""):
        specs.append(groupspec.spec_for_builtin(call, name=name))

    for n in range(1, 65):
        for inv in abelian_invariants(n):
            add(["abelian", *inv])
    for n in range(3, 65):
        add(["dihedral", n])
    for n in range(2, 33):
        add(["dicyclic", n])
    for p, n in ((2, 1), (2, 2), (2, 3), (3, 1), (5, 1)):
        for kind in "+-":
            add(["extraspecial", p, n, kind])
    for n in range(3, 8):
        add(["symmetric", n])
        add(["alternating", n])
    add(["sl23"])
    for p, n, m in ((3, 1, 2), (2, 2, 3), (5, 1, 4), (2, 4, 5), (7, 1, 6)):
        add(["frobenius", p, n, m])
    add(["m5"])
    add(["xy", 8, 1, "C6"])
    add(["xy", 8, 2, "C6"])
    add(["xy", 8, 0, "S3"])
    # index-2 abelian normal subgroup with a non-cyclic Sylow 2
    specs.append(
        groupspec.GroupSpec(
            "C4xC12:C2",
            "abelian_semidirect",
            {"invariants": [4, 12], "acting": ["cyclic", 2], "action": {1: [[-1, 0], [0, -1]]}},
        )
    )
    return specs


def slug(name: str) -> str:
    s = name.replace("+", "p").replace("-", "m").replace("^", "")
    return re.sub(r"[^A-Za-z0-9]+", "_", s).strip("_")


def write_corpus(directory, specs=None) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for spec in specs if specs is not None else default_corpus():
        path = d / f"{slug(spec.name)}.grp"
        groupspec.write(spec, path)
        paths.append(path)
    return paths


# -- running ------------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def _verdict_dict(v) -> dict:
    return {"name": v.name, "status": v.status, "detail": v.detail, "witness": _jsonable(v.witness)}


def _blank_entry(path: Path) -> dict:
    return {
        "name": path.stem,
        "file": path.name,
        "order": None,
        "pv_num": None,
        "pv_den": None,
        "nv_subgroup": None,
        "nv_abelian": None,
        "nv_normal": None,
        "theorem_a_m": None,
        "status": "ok",
        "checks": [],
        "time_ms": 0,
    }


def _fill_report(entry, G):
    rep = nonvanishing_structure(G)
    entry.update(
        order=G.order,
        pv_num=rep.pv.numerator,
        pv_den=rep.pv.denominator,
        nv_subgroup=rep.nv_is_subgroup,
        nv_abelian=rep.nv_abelian,
        nv_normal=rep.nv_normal,
        theorem_a_m=rep.theorem_a_m,
    )
    return rep


def process_entry(path, mode: str) -> dict:
    """Run one corpus file; never raises."""
    path = Path(path)
    entry = _blank_entry(path)
    start = time.perf_counter()
    try:
        spec = groupspec.read(path)
        entry["name"] = spec.name
        if mode == "family-a6":
            call = spec.payload.get("call") if spec.kind == "builtin" else None
            if not call or call[0] != "xy":
                entry["status"] = "skipped:not-in-family"
                return entry
            fam = construct_and_check_a6_family(call[1], max(call[2], 1), call[3])
            entry.update(
                order=fam.parameters["order"],
                pv_num=fam.computed_pv.numerator,
                pv_den=fam.computed_pv.denominator,
            )
            entry["checks"] = [
                {
                    "name": "family-a6",
                    "status": "pass" if fam.ok else "fail",
                    "detail": f"case {fam.matched_case}",
                    "witness": _jsonable(
                        {"predicted": fam.predicted_pv, "computed": fam.computed_pv, "nv": fam.nv_expected, "generator": fam.generator}
                    ),
                }
            ]
        else:
            G = spec.build()
            entry["order"] = G.order
            if mode == "lemma-suite" and G.order > LEMMA_SUITE_MAX_ORDER:
                entry["status"] = f"skipped:order>{LEMMA_SUITE_MAX_ORDER}"
                return entry
            rep = _fill_report(entry, G)
            if mode == "theorem-a":
                checks = [check_theorem_a(G, rep)]
                try:
                    checks.append(check_nif_chain(G))
                except NotApplicable:
                    pass
                entry["checks"] = [_verdict_dict(v) for v in checks]
            elif mode == "lemma-suite":
                entry["checks"] = [_verdict_dict(v) for v in check_lemma_suite(G)]
        failed = [c for c in entry["checks"] if c["status"] == "fail"]
        if failed:
            entry["status"] = "failed:" + ";".join(f"{c['name']}={json.dumps(c['witness'])}" for c in failed)
    except Exception as e:  # crash isolation
        entry["status"] = f"failed:error:{type(e).__name__}: {e}"
    finally:
        entry["time_ms"] = int(round(1000 * (time.perf_counter() - start)))
    return entry


@dataclass
class RunManifest:
    mode: str
    entries: list = field(default_factory=list)

    @property
    def counters(self) -> dict:
        c = {"total": len(self.entries), "ok": 0, "skipped": 0, "failed": 0}
        for e in self.entries:
            c[e["status"].split(":", 1)[0]] += 1
        return c

    @property
    def histogram(self) -> dict:
        """Exact pv values of the ok entries, with multiplicities."""
        counts: dict[Fraction, int] = {}
        for e in self.entries:
            if e["status"] == "ok" and e["pv_den"] is not None:
                q = Fraction(e["pv_num"], e["pv_den"])
                counts[q] = counts.get(q, 0) + 1
        return {f"{q.numerator}/{q.denominator}": counts[q] for q in sorted(counts)}

    @property
    def exit_code(self) -> int:
        statuses = [e["status"] for e in self.entries]
        if any(s.startswith("failed:error:") for s in statuses):
            return 2
        if any(s.startswith("failed:") for s in statuses):
            return 1
        return 0

    def to_dict(self, timing: bool = True) -> dict:
        entries = []
        for e in self.entries:
            e = dict(e)
            if not timing:
                e.pop("time_ms")
            entries.append(e)
        return {"mode": self.mode, "counters": self.counters, "histogram": self.histogram, "entries": entries}


def corpus_files(directory) -> list[Path]:
    d = Path(directory)
    if not d.is_dir():
        raise FileNotFoundError(f"no such corpus directory: {d}")
    return sorted(d.glob("*.grp"))


def run_corpus(directory, mode: str, workers: int | None = None) -> RunManifest:
    """Process every ``*.grp`` file in ``directory``; entries come back sorted
    by (name, file) whatever the worker count."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {', '.join(MODES)}")
    files = corpus_files(directory)
    workers = workers or os.cpu_count() or 1
    if workers == 1 or len(files) <= 1:
        entries = [process_entry(f, mode) for f in files]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(process_entry, files, [mode] * len(files)))
    entries.sort(key=lambda e: (e["name"], e["file"]))
    return RunManifest(mode, entries)


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit_report(manifest: RunManifest, fmt: str = "json", timing: bool = True) -> bytes:
    if fmt == "json":
        return (json.dumps(manifest.to_dict(timing), indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for e in manifest.entries:
            w.writerow([_csv_value(e[k]) for k in CSV_FIELDS])
        return buf.getvalue().encode()
    raise ValueError("format must be json or csv")
