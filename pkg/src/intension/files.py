"""Line-oriented text formats for concepts and worlds.

Concept files hold one or more blocks:

    concept <name>
    property <id> <degree>
    ...

World files start with a mode line. `independent` is followed by
`<id> <marginal>` lines; `exclusive <n> <m> <k>` stands alone;
`instances` is followed by `<comma-separated ids> <weight>` rows, where a
lone `-` means the row holds no properties. Files are UTF-8; blank lines
are ignored and `#` starts a comment line.
"""

from __future__ import annotations

import os
from .errors import EmptyTable, IntensionError, ParseError
from .model import (
    Concept,
    InstanceTable,
    WorldModel,
    build_exclusive_world,
    build_independent_world,
    world_from_instances,
)


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_concepts(text: str, source: str = "<string>") -> dict[str, Concept]:
    """Parse a concept file into a name -> Concept mapping."""
    concepts: dict[str, Concept] = {}
    name: str | None = None
    header_line = 0
    pending: list[tuple[str, float]] = []

    def flush():
        if name is None:
            return
        if not pending:
            raise ParseError(source, header_line, f"concept {name!r} has no properties")
        concepts[name] = Concept(name, tuple(pending))

    for lineno, line in _significant_lines(text):
        tokens = line.split()
        if tokens[0] == "concept":
            if len(tokens) != 2:
                raise ParseError(source, lineno, "expected: concept <name>")
            flush()
            if tokens[1] in concepts:
                raise ParseError(source, lineno, f"duplicate concept {tokens[1]!r}")
            name, header_line, pending = tokens[1], lineno, []
        elif tokens[0] == "property":
            if name is None:
                raise ParseError(source, lineno, "property line before any concept header")
            if len(tokens) != 3:
                raise ParseError(source, lineno, "expected: property <id> <degree>")
            pid = tokens[1]
            if any(pid == existing for existing, _ in pending):
                raise ParseError(source, lineno, f"duplicate property {pid!r} in concept {name!r}")
            try:
                degree = float(tokens[2])
            except ValueError:
                raise ParseError(source, lineno, f"bad degree {tokens[2]!r}") from None
            if not 0.0 <= degree <= 1.0:
                raise ParseError(source, lineno, f"degree {tokens[2]} outside [0, 1]")
            pending.append((pid, degree))
        else:
            raise ParseError(source, lineno, f"unknown directive {tokens[0]!r}")
    flush()
    return concepts


def parse_world(text: str, source: str = "<string>") -> WorldModel:
    """Parse a world file in any of the three modes."""
    lines = _significant_lines(text)
    if not lines:
        raise ParseError(source, 1, "empty world file")
    lineno, header = lines[0]
    tokens = header.split()
    body = lines[1:]

    if tokens[0] == "independent":
        if len(tokens) != 1:
            raise ParseError(source, lineno, "expected: independent")
        return _parse_independent(body, source)
    if tokens[0] == "exclusive":
        if len(tokens) != 4:
            raise ParseError(source, lineno, "expected: exclusive <n> <m> <k>")
        if body:
            raise ParseError(source, body[0][0], "exclusive worlds take no further lines")
        try:
            n, m, k = (int(t) for t in tokens[1:])
        except ValueError:
            raise ParseError(source, lineno, f"bad counts in {header!r}") from None
        world, _, _ = _wrap(source, lineno, build_exclusive_world, n, m, k)
        return world
    if tokens[0] == "instances":
        if len(tokens) != 1:
            raise ParseError(source, lineno, "expected: instances")
        return _parse_instances(body, source, lineno)
    raise ParseError(source, lineno, f"unknown world mode {tokens[0]!r}")


def _parse_independent(body: list[tuple[int, str]], source: str) -> WorldModel:
    universe: list[str] = []
    marginals: list[float] = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(source, lineno, "expected: <id> <marginal>")
        pid, raw = tokens
        if pid in universe:
            raise ParseError(source, lineno, f"duplicate property {pid!r}")
        try:
            marginal = float(raw)
        except ValueError:
            raise ParseError(source, lineno, f"bad marginal {raw!r}") from None
        universe.append(pid)
        marginals.append(marginal)
    if not universe:
        raise ParseError(source, 1, "independent world needs at least one property line")
    return _wrap(source, body[0][0], build_independent_world, universe, marginals)


def _parse_instances(body: list[tuple[int, str]], source: str, header_line: int) -> WorldModel:
    universe: list[str] = []
    rows: list[tuple[list[str], float]] = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(source, lineno, "expected: <comma-separated ids or -> <weight>")
        ids_token, raw = tokens
        ids = [] if ids_token == "-" else ids_token.split(",")
        seen = set()
        for pid in ids:
            if not pid:
                raise ParseError(source, lineno, f"empty id in {ids_token!r}")
            if pid in seen:
                raise ParseError(source, lineno, f"duplicate property {pid!r} in row")
            seen.add(pid)
            if pid not in universe:
                universe.append(pid)
        try:
            weight = float(raw)
        except ValueError:
            raise ParseError(source, lineno, f"bad weight {raw!r}") from None
        if weight < 0:
            raise ParseError(source, lineno, f"negative weight {raw}")
        rows.append((ids, weight))
    if not rows:
        raise ParseError(source, header_line, "instances world needs at least one row")
    index = {pid: i for i, pid in enumerate(universe)}
    masked = tuple((sum(1 << index[pid] for pid in ids), weight) for ids, weight in rows)
    try:
        table = InstanceTable(tuple(universe), masked)
        return world_from_instances(table)
    except (EmptyTable, IntensionError, ValueError) as exc:
        raise ParseError(source, header_line, str(exc)) from exc


def _wrap(source: str, lineno: int, fn, *args):
    try:
        return fn(*args)
    except (IntensionError, ValueError) as exc:
        raise ParseError(source, lineno, str(exc)) from exc


def load_concepts(path: str | os.PathLike) -> dict[str, Concept]:
    with open(path, encoding="utf-8") as fh:
        return parse_concepts(fh.read(), source=str(path))


def load_world(path: str | os.PathLike) -> WorldModel:
    with open(path, encoding="utf-8") as fh:
        return parse_world(fh.read(), source=str(path))
