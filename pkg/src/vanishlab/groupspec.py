"""Line-oriented group files.

Every file starts with ``vanishlab-group 1 <kind>`` followed by ``name``
and kind-specific lines::

    vanishlab-group 1 permutation
    name A7
    degree 7
    gen 2 3 4 5 6 7 1
    gen 1 2 3 4 6 7 5

Kinds: ``cayley`` (``order`` then one ``row`` per element, 0-based),
``permutation`` (one-line images, 1-based), ``abelian_semidirect``
(``invariants``, ``acting <builtin call>``, then ``action <h>: <rows>`` with
rows separated by ``;``) and ``builtin`` (``builtin <id> <params>``).
Serialization is canonical, so ``dumps(loads(text)) == text`` for any text
produced by ``dumps``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ParseError, TooLarge
from .groups import (
    FiniteGroup,
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    extraspecial,
    frobenius_metacyclic,
    from_cayley,
    from_permutations,
    heisenberg,
    m5_group,
    max_order,
    quaternion,
    semidirect,
    sl23,
    symmetric,
    xy_group,
)

MAGIC = "vanishlab-group"
VERSION = "1"
KINDS = ("cayley", "permutation", "abelian_semidirect", "builtin")

# id -> (constructor, parameter types); a trailing ``...`` accepts any count
BUILTINS = {
    "cyclic": (cyclic, (int,)),
    "abelian": (lambda *d: abelian(d), (int, ...)),
    "dihedral": (dihedral, (int,)),
    "dicyclic": (dicyclic, (int,)),
    "quaternion": (quaternion, (int,)),
    "symmetric": (symmetric, (int,)),
    "alternating": (alternating, (int,)),
    "extraspecial": (extraspecial, (int, int, str)),
    "heisenberg": (heisenberg, (int,)),
    "sl23": (sl23, ()),
    "frobenius": (frobenius_metacyclic, (int, int, int)),
    "m5": (m5_group, ()),
    "xy": (xy_group, (int, int, str)),
}


@dataclass
class GroupSpec:
    name: str
    kind: str
    payload: dict = field(default_factory=dict)

    def dumps(self) -> str:
        return dumps(self)

    def build(self) -> FiniteGroup:
        return build(self)


def _ints(tokens, line, fld):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line, fld) from None


def parse_builtin_call(tokens: list[str], line=None, fld="builtin") -> list:
    if not tokens:
        raise ParseError("missing builtin id", line, fld)
    ident, args = tokens[0], tokens[1:]
    if ident not in BUILTINS:
        raise ParseError(f"unknown builtin {ident!r}", line, fld)
    types = BUILTINS[ident][1]
    if types and types[-1] is ...:
        types = (types[0],) * len(args)
    if len(args) != len(types):
        raise ParseError(f"builtin {ident!r} takes {len(types)} parameters, got {len(args)}", line, fld)
    out = [ident]
    for t, a in zip(types, args):
        if t is int:
            out.extend(_ints([a], line, fld))
        else:
            out.append(a)
    return out


def call_builtin(call: list, name: str = "") -> FiniteGroup:
    fn = BUILTINS[call[0]][0]
    G = fn(*call[1:])
    if name:
        G.name = name
    return G


def loads(text: str) -> GroupSpec:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty file", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != MAGIC:
        raise ParseError(f"header must be '{MAGIC} {VERSION} <kind>'", 1, "header")
    if head[1] != VERSION:
        raise ParseError(f"unsupported version {head[1]!r}", 1, "version")
    kind = head[2]
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", 1, "kind")
    body = []
    for no, raw in enumerate(lines[1:], start=2):
        key, _, rest = raw.partition(" ")
        if not key:
            raise ParseError("blank line", no)
        body.append((no, key, rest))
    if not body or body[0][1] != "name" or not body[0][2].strip():
        raise ParseError("second line must be 'name <name>'", 2, "name")
    name = body[0][2].strip()
    spec = GroupSpec(name, kind)
    rest = body[1:]
    parser = {
        "cayley": _parse_cayley,
        "permutation": _parse_permutation,
        "abelian_semidirect": _parse_semidirect,
        "builtin": _parse_builtin,
    }[kind]
    spec.payload = parser(rest, len(lines))
    return spec


def _expect(entries, i, key, last):
    if i >= len(entries):
        raise ParseError(f"missing '{key}'", last + 1, key)
    no, k, rest = entries[i]
    if k != key:
        raise ParseError(f"expected '{key}', found '{k}'", no, key)
    return no, rest


def _parse_cayley(entries, last):
    no, rest = _expect(entries, 0, "order", last)
    vals = _ints(rest.split(), no, "order")
    if len(vals) != 1 or vals[0] < 1:
        raise ParseError("order must be one positive integer", no, "order")
    n = vals[0]
    rows = []
    for i in range(n):
        rno, rrest = _expect(entries, 1 + i, "row", last)
        row = _ints(rrest.split(), rno, "row")
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", rno, "row")
        if any(x < 0 or x >= n for x in row):
            raise ParseError(f"entries must lie in 0..{n - 1}", rno, "row")
        rows.append(row)
    _no_trailing(entries, 1 + n)
    return {"table": rows}


def _parse_permutation(entries, last):
    no, rest = _expect(entries, 0, "degree", last)
    vals = _ints(rest.split(), no, "degree")
    if len(vals) != 1 or vals[0] < 1:
        raise ParseError("degree must be one positive integer", no, "degree")
    d = vals[0]
    gens = []
    for gno, key, grest in entries[1:]:
        if key != "gen":
            raise ParseError(f"expected 'gen', found '{key}'", gno, "gen")
        img = _ints(grest.split(), gno, "gen")
        if sorted(img) != list(range(1, d + 1)):
            raise ParseError(f"not a permutation of 1..{d}", gno, "gen")
        gens.append(img)
    return {"degree": d, "generators": gens}


def _parse_semidirect(entries, last):
    no, rest = _expect(entries, 0, "invariants", last)
    inv = _ints(rest.split(), no, "invariants")
    if not inv or any(d < 2 for d in inv):
        raise ParseError("invariants must be integers >= 2", no, "invariants")
    ano, arest = _expect(entries, 1, "acting", last)
    acting = parse_builtin_call(arest.split(), ano, "acting")
    action = {}
    r = len(inv)
    for xno, key, xrest in entries[2:]:
        if key != "action":
            raise ParseError(f"expected 'action', found '{key}'", xno, "action")
        h, colon, mat = xrest.partition(":")
        if not colon:
            raise ParseError("expected 'action <h>: <rows>'", xno, "action")
        (hi,) = _ints([h.strip()], xno, "action")
        rows = [_ints(row.split(), xno, "action") for row in mat.split(";")]
        if len(rows) != r or any(len(row) != r for row in rows):
            raise ParseError(f"action matrix must be {r}x{r}", xno, "action")
        if hi in action:
            raise ParseError(f"duplicate action for element {hi}", xno, "action")
        action[hi] = rows
    return {"invariants": inv, "acting": acting, "action": action}


def _parse_builtin(entries, last):
    no, rest = _expect(entries, 0, "builtin", last)
    call = parse_builtin_call(rest.split(), no)
    _no_trailing(entries, 1)
    return {"call": call}


def _no_trailing(entries, i):
    if len(entries) > i:
        no, key, _ = entries[i]
        raise ParseError(f"unexpected line '{key}'", no, key)


def _join(xs) -> str:
    return " ".join(str(x) for x in xs)


def dumps(spec: GroupSpec) -> str:
    out = [f"{MAGIC} {VERSION} {spec.kind}", f"name {spec.name}"]
    p = spec.payload
    if spec.kind == "cayley":
        out.append(f"order {len(p['table'])}")
        out.extend(f"row {_join(r)}" for r in p["table"])
    elif spec.kind == "permutation":
        out.append(f"degree {p['degree']}")
        out.extend(f"gen {_join(g)}" for g in p["generators"])
    elif spec.kind == "abelian_semidirect":
        out.append(f"invariants {_join(p['invariants'])}")
        out.append(f"acting {_join(p['acting'])}")
        for h in sorted(p["action"]):
            rows = "; ".join(_join(r) for r in p["action"][h])
            out.append(f"action {h}: {rows}")
    elif spec.kind == "builtin":
        out.append(f"builtin {_join(p['call'])}")
    else:
        raise ValueError(f"unknown kind {spec.kind!r}")
    return "\n".join(out) + "\n"


def build(spec: GroupSpec) -> FiniteGroup:
    p = spec.payload
    if spec.kind == "cayley":
        n = len(p["table"])
        if n > max_order():
            raise TooLarge(f"order {n} exceeds the configured limit {max_order()}")
        return from_cayley(np.asarray(p["table"], dtype=np.int64), name=spec.name)
    if spec.kind == "permutation":
        gens = [[x - 1 for x in g] for g in p["generators"]]
        return from_permutations(gens, name=spec.name, degree=p["degree"])
    if spec.kind == "abelian_semidirect":
        H = call_builtin(p["acting"])
        return semidirect(p["invariants"], H, p["action"], name=spec.name)
    return call_builtin(p["call"], name=spec.name)


def spec_for_builtin(call: list, name: str = "", expand: bool = False) -> GroupSpec:
    """A builtin call as a spec; ``expand`` writes semidirect products with an
    explicit action instead."""
    G = call_builtin(call)
    name = name or G.name
    sd = getattr(G, "semidirect_data", None) if expand else None
    if sd is not None and sd["acting_call"] is not None:
        return GroupSpec(
            name,
            "abelian_semidirect",
            {
                "invariants": list(sd["moduli"]),
                "acting": list(sd["acting_call"]),
                "action": {int(h): [list(map(int, r)) for r in m] for h, m in sd["action"].items()},
            },
        )
    return GroupSpec(name, "builtin", {"call": list(call)})


def read(path) -> GroupSpec:
    return loads(Path(path).read_text(encoding="utf-8"))


def write(spec: GroupSpec, path) -> None:
    Path(path).write_text(dumps(spec), encoding="utf-8")


def ingest(path) -> FiniteGroup:
    return build(read(path))
