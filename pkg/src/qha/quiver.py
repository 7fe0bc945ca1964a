"""Finite acyclic quivers and the free categories they generate.

A quiver is an oriented graph (vertices, named arrows with tail/head).
Acyclicity is mandatory: the free category on a quiver has one morphism per
path, and only acyclic quivers keep that morphism set finite enough to
enumerate exhaustively.

Paths store their arrow sequence in composition order: for a path a_1...a_n
the arrow a_n is applied first, so consecutive arrows must satisfy
h(a_{i+1}) = t(a_i).  The trivial path at a vertex has an empty sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Quiver:
    name: str
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (name, tail, head)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"quiver {self.name}: duplicate vertex identifiers")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError(f"quiver {self.name}: duplicate arrow names")
        vset = set(self.vertices)
        for name, tail, head in self.arrows:
            if tail not in vset or head not in vset:
                raise ValueError(f"quiver {self.name}: arrow {name} endpoint not among vertices")
        if self._topological_order() is None:
            raise ValueError(f"quiver {self.name}: directed cycle found; only acyclic quivers are supported")

    def _topological_order(self) -> list[str] | None:
        indeg = {v: 0 for v in self.vertices}
        for _, _, head in self.arrows:
            indeg[head] += 1
        order = []
        ready = sorted(v for v in self.vertices if indeg[v] == 0)
        while ready:
            v = ready.pop(0)
            order.append(v)
            for _, tail, head in self.arrows:
                if tail == v:
                    indeg[head] -= 1
                    if indeg[head] == 0:
                        ready.append(head)
            ready.sort()
        return order if len(order) == len(self.vertices) else None

    def topological_order(self) -> list[str]:
        order = self._topological_order()
        assert order is not None
        return order

    def arrow(self, name: str) -> tuple[str, str, str]:
        for a in self.arrows:
            if a[0] == name:
                return a
        raise KeyError(f"quiver {self.name}: no arrow named {name!r}")

    def arrows_out_of(self, v: str):
        return [a for a in self.arrows if a[1] == v]

    def arrows_into(self, v: str):
        return [a for a in self.arrows if a[2] == v]

    def opposite(self) -> "Quiver":
        return Quiver(self.name + "_op" if not self.name.endswith("_op") else self.name[:-3],
                      self.vertices,
                      tuple((n, h, t) for n, t, h in self.arrows))

    def key(self):
        return (self.vertices, self.arrows)


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple[str, ...] = field(default=())

    def is_trivial(self) -> bool:
        return not self.arrows

    def name(self) -> str:
        return "".join(self.arrows) if self.arrows else f"e_{self.source}"


def trivial_path(v: str) -> Path:
    return Path(v, v)


def arrow_path(q: Quiver, arrow_name: str) -> Path:
    name, tail, head = q.arrow(arrow_name)
    return Path(tail, head, (name,))


def validate_path(q: Quiver, p: Path):
    if not p.arrows:
        if p.source != p.target:
            raise ValueError("trivial path must have equal source and target")
        return
    seq = [q.arrow(n) for n in p.arrows]
    for i in range(len(seq) - 1):
        if seq[i + 1][2] != seq[i][1]:
            raise ValueError(f"path {p.name()}: arrows {seq[i + 1][0]} and {seq[i][0]} do not compose")
    if p.source != seq[-1][1] or p.target != seq[0][2]:
        raise ValueError(f"path {p.name()}: endpoints do not match arrow sequence")


def compose(p: Path, q: Path) -> Path:
    """Concatenation p after q; rejects mismatched endpoints."""
    if q.target != p.source:
        raise ValueError(f"cannot compose: path into {q.target} followed by path out of {p.source}")
    return Path(q.source, p.target, p.arrows + q.arrows)


def enumerate_morphisms(q: Quiver) -> dict[tuple[str, str], list[Path]]:
    """All paths between all vertex pairs, including trivial paths.

    Deterministic order: by length, then lexicographically on arrow names.
    """
    paths: list[Path] = [trivial_path(v) for v in q.vertices]
    frontier = list(paths)
    while frontier:
        new = []
        for p in frontier:
            for name, tail, head in q.arrows:
                if tail == p.target:
                    new.append(Path(p.source, head, (name,) + p.arrows))
        paths.extend(new)
        frontier = new
    out: dict[tuple[str, str], list[Path]] = {}
    for p in sorted(paths, key=lambda p: (len(p.arrows), p.arrows)):
        out.setdefault((p.source, p.target), []).append(p)
    return out


def all_paths(q: Quiver) -> list[Path]:
    flat = []
    for key in sorted(enumerate_morphisms(q)):
        flat.extend(enumerate_morphisms(q)[key])
    return sorted(flat, key=lambda p: (len(p.arrows), p.arrows, p.source))


def paths_from(q: Quiver, v: str) -> list[Path]:
    """Paths with source v, in the deterministic enumeration order."""
    morphs = enumerate_morphisms(q)
    out = []
    for (s, _), ps in sorted(morphs.items()):
        if s == v:
            out.extend(ps)
    return sorted(out, key=lambda p: (len(p.arrows), p.arrows))


# -- text format ----------------------------------------------------------

def parse_quiver(text: str, source_name: str = "<input>") -> Quiver:
    name = None
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("quiver "):
            name = line.split(None, 1)[1].strip()
        elif line.startswith("vertices"):
            vertices.extend(line.split()[1:])
        elif line.startswith("arrow "):
            body = line[len("arrow "):]
            try:
                arrow_name, rest = body.split(":", 1)
                tail, head = rest.split("->")
            except ValueError:
                raise ValueError(f"{source_name}:{lineno}: expected 'arrow <name>: <tail> -> <head>'")
            arrows.append((arrow_name.strip(), tail.strip(), head.strip()))
        else:
            raise ValueError(f"{source_name}:{lineno}: expected quiver/vertices/arrow declaration, got {line!r}")
    if name is None:
        raise ValueError(f"{source_name}: missing 'quiver <name>' declaration")
    return Quiver(name, tuple(vertices), tuple(arrows))


def format_quiver(q: Quiver) -> str:
    lines = [f"quiver {q.name}", "vertices " + " ".join(q.vertices)]
    lines.extend(f"arrow {n}: {t} -> {h}" for n, t, h in q.arrows)
    return "\n".join(lines) + "\n"


_NAMED = {
    "pt": ("pt", ("1",), ()),
    "A2": ("A2", ("1", "2"), (("a", "1", "2"),)),
    "A3": ("A3", ("1", "2", "3"), (("a", "1", "2"), ("b", "2", "3"))),
    "A4": ("A4", ("1", "2", "3", "4"), (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"))),
    # out-branching 4-vertex tree: 1 -> 2, 1 -> 3, 3 -> 4
    "tree4": ("tree4", ("1", "2", "3", "4"), (("a", "1", "2"), ("b", "1", "3"), ("c", "3", "4"))),
    "two_points": ("two_points", ("1", "2"), ()),
}


def named_quiver(name: str) -> Quiver:
    if name not in _NAMED:
        raise KeyError(f"no built-in quiver named {name!r} (have {', '.join(sorted(_NAMED))})")
    n, vs, ars = _NAMED[name]
    return Quiver(n, vs, ars)
