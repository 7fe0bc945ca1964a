"""Text formats and the workspace that resolves names across files.

All formats are line based and round trip exactly: parse(format(x)) is
structurally equal to x.  Representations in files always take values in
vector spaces (dims and matrices); nested bases are built programmatically
by the experiment drivers.

    quiver <name> / vertices v1 v2 / arrow a: v1 -> v2
    rep <name> over <quiver> field <Q|F5> / vertex <v> dim <d> / map <a>: <matrix>
    morphism <name>: <rep> -> <rep> / at <v>: <matrix>
    complex <name> over <quiver> field <spec> window <lo> <hi>
      degree <i> / vertex <v> dim <d> / map <a>: <matrix> / diff <i>: / at <v>: <matrix>
    chainmap <name>: <complex> -> <complex> / at <i> <v>: <matrix>
"""

from __future__ import annotations

from .category import VectCategory
from .complexes import ChainMap, Complex
from .linalg import FieldSpec, parse_field, parse_matrix
from .quiver import Quiver, named_quiver, parse_quiver
from .rep import RepCategory, RepMap, RepObject


class FormatError(ValueError):
    def __init__(self, source: str, lineno: int, message: str):
        super().__init__(f"{source}:{lineno}: {message}")
        self.source = source
        self.lineno = lineno


def format_rep(name: str, m: RepObject) -> str:
    cat = m.category
    lines = [f"rep {name} over {cat.quiver.name} field {cat.field.format()}"]
    for v in cat.quiver.vertices:
        lines.append(f"vertex {v} dim {m.vertex_objects[v]}")
    for a, _, _ in cat.quiver.arrows:
        lines.append(f"map {a}: {m.arrow_maps[a].format()}")
    return "\n".join(lines) + "\n"


def format_rep_map(name: str, f: RepMap, dom_name: str, cod_name: str) -> str:
    lines = [f"morphism {name}: {dom_name} -> {cod_name}"]
    for v in f.domain.category.quiver.vertices:
        lines.append(f"at {v}: {f.components[v].format()}")
    return "\n".join(lines) + "\n"


def format_chain_map(name: str, cm: ChainMap, dom_name: str, cod_name: str) -> str:
    cat = cm.domain.category
    assert isinstance(cat, RepCategory)
    lines = [f"chainmap {name}: {dom_name} -> {cod_name}"]
    for i in sorted(cm.components):
        for v in cat.quiver.vertices:
            lines.append(f"at {i} {v}: {cm.components[i].components[v].format()}")
    return "\n".join(lines) + "\n"


def format_roof(name: str, roof) -> str:
    """Apex complex block, two chain map blocks, and the stored
    quasi-isomorphism certificate witnesses."""
    out = [
        format_complex(f"{name}_apex", roof.apex),
        format_complex(f"{name}_source", roof.source),
        format_complex(f"{name}_target", roof.target),
        format_chain_map(f"{name}_left", roof.left, f"{name}_apex", f"{name}_source"),
        format_chain_map(f"{name}_right", roof.right, f"{name}_apex", f"{name}_target"),
        f"roof {name}: left {name}_left right {name}_right\n",
    ]
    for i, (dx, dy, r, _) in sorted(roof.certificate.witnesses.items()):
        out.append(f"certificate {name} degree {i}: {dx} {dy} {r}\n")
    return "".join(out)


def format_complex(name: str, cx: Complex) -> str:
    cat = cx.category
    assert isinstance(cat, RepCategory)
    window = cx.window() or (0, 0)
    lines = [f"complex {name} over {cat.quiver.name} field {cat.field.format()} "
             f"window {window[0]} {window[1]}"]
    for i in cx.degrees():
        lines.append(f"degree {i}")
        obj = cx.objects[i]
        for v in cat.quiver.vertices:
            lines.append(f"vertex {v} dim {obj.vertex_objects[v]}")
        for a, _, _ in cat.quiver.arrows:
            lines.append(f"map {a}: {obj.arrow_maps[a].format()}")
    for i in sorted(cx.diffs):
        lines.append(f"diff {i}:")
        for v in cat.quiver.vertices:
            lines.append(f"at {v}: {cx.diffs[i].components[v].format()}")
    return "\n".join(lines) + "\n"


class Workspace:
    """Named quivers, representations, morphisms and complexes loaded from
    input files, plus the built-in catalogue.  Cross-references must resolve
    and names are unique per kind."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.quivers: dict[str, Quiver] = {}
        self.reps: dict[str, RepObject] = {}
        self.rep_maps: dict[str, RepMap] = {}
        self.complexes: dict[str, Complex] = {}
        self.chain_maps: dict[str, ChainMap] = {}
        self.roofs: dict = {}
        self._categories: dict = {}

    # -- category and name resolution --

    def category(self, quiver: Quiver) -> RepCategory:
        if quiver.name not in self._categories:
            self._categories[quiver.name] = RepCategory(quiver, VectCategory(self.field))
        return self._categories[quiver.name]

    def quiver(self, name: str) -> Quiver:
        if name in self.quivers:
            return self.quivers[name]
        try:
            q = named_quiver(name)
        except KeyError:
            raise ValueError(f"unknown quiver {name!r}: not loaded and not built in")
        self.quivers[name] = q
        return q

    def rep(self, name: str, quiver: Quiver | None = None) -> RepObject:
        """A loaded representation, a built-in catalogue name, or a top-level
        sum of such joined by '+'."""
        if "+" in name:
            parts = [self.rep(p.strip(), quiver) for p in name.split("+")]
            cat = parts[0].category
            total = parts[0]
            for p in parts[1:]:
                total = cat.direct_sum(total, p)[0]
            return total
        if name in self.reps:
            return self.reps[name]
        if quiver is None:
            raise ValueError(f"unknown representation {name!r}")
        cat = self.category(quiver)
        named = cat.named_objects()
        if name not in named:
            raise ValueError(f"unknown representation {name!r} over {quiver.name} "
                             f"(have {', '.join(sorted(named))})")
        return named[name]

    def complex(self, name: str, quiver: Quiver | None = None) -> Complex:
        from .complexes import stalk
        if name in self.complexes:
            return self.complexes[name]
        rep = self.rep(name, quiver)
        return stalk(rep.category, rep)

    # -- file loading --

    def load_text(self, text: str, source: str = "<input>"):
        lines = text.splitlines()
        i = 0
        while i < len(lines):
            line = lines[i].split("#", 1)[0].strip()
            if not line:
                i += 1
                continue
            head = line.split()[0]
            if head == "quiver":
                i = self._load_quiver(lines, i, source)
            elif head == "rep":
                i = self._load_rep(lines, i, source)
            elif head == "morphism":
                i = self._load_morphism(lines, i, source)
            elif head == "complex":
                i = self._load_complex(lines, i, source)
            elif head == "chainmap":
                i = self._load_chain_map(lines, i, source)
            elif head == "roof":
                i = self._load_roof(lines, i, source)
            elif head == "certificate":
                i += 1  # certificates are recomputed and verified on load
            else:
                raise FormatError(source, i + 1,
                                  f"expected a quiver/rep/morphism/complex/chainmap/roof block, got {line!r}")
        return self

    def load_file(self, path):
        from pathlib import Path
        p = Path(path)
        return self.load_text(p.read_text(), source=str(p))

    def _block(self, lines, start, stops):
        """Collect (lineno, stripped) lines until the next block keyword."""
        out = []
        i = start + 1
        while i < len(lines):
            stripped = lines[i].split("#", 1)[0].strip()
            if stripped and stripped.split()[0] in stops:
                break
            if stripped:
                out.append((i + 1, stripped))
            i += 1
        return out, i

    _TOP = {"quiver", "rep", "morphism", "complex", "chainmap", "roof", "certificate"}

    def _register(self, kind: str, table: dict, name: str, value, source, lineno):
        if name in table:
            raise FormatError(source, lineno, f"duplicate {kind} name {name!r}")
        table[name] = value

    def _load_quiver(self, lines, i, source):
        body, end = self._block(lines, i, self._TOP)
        text = "\n".join([lines[i].strip()] + [s for _, s in body])
        q = parse_quiver(text, source_name=source)
        self._register("quiver", self.quivers, q.name, q, source, i + 1)
        return end

    def _parse_rep_header(self, line, source, lineno):
        toks = line.split()
        try:
            name = toks[1]
            assert toks[2] == "over" and toks[4] == "field"
            quiver = self.quiver(toks[3])
            field = parse_field(toks[5])
        except (IndexError, AssertionError):
            raise FormatError(source, lineno, "expected 'rep <name> over <quiver> field <spec>'")
        if field != self.field:
            raise FormatError(source, lineno,
                              f"field {field.format()} does not match workspace field {self.field.format()}")
        return name, quiver

    def _read_rep_body(self, body, quiver, source):
        dims = {}
        maps = {}
        for lineno, line in body:
            if line.startswith("vertex "):
                toks = line.split()
                if len(toks) != 4 or toks[2] != "dim":
                    raise FormatError(source, lineno, "expected 'vertex <v> dim <d>'")
                dims[toks[1]] = int(toks[3])
            elif line.startswith("map "):
                arrow, mat = line[len("map "):].split(":", 1)
                maps[arrow.strip()] = mat.strip()
            else:
                raise FormatError(source, lineno, f"expected vertex/map line, got {line!r}")
        cat = self.category(quiver)
        for v in quiver.vertices:
            if v not in dims:
                raise FormatError(source, body[0][0] if body else 0, f"missing vertex {v} dim")
        arrow_mats = {}
        for a, tail, head in quiver.arrows:
            if a in maps:
                arrow_mats[a] = parse_matrix(self.field, maps[a])
            else:
                from .linalg import Mat
                arrow_mats[a] = Mat.zeros(self.field, dims[head], dims[tail])
        return RepObject(cat, dims, arrow_mats)

    def _load_rep(self, lines, i, source):
        name, quiver = self._parse_rep_header(lines[i].strip(), source, i + 1)
        body, end = self._block(lines, i, self._TOP)
        try:
            rep = self._read_rep_body(body, quiver, source)
        except ValueError as e:
            if isinstance(e, FormatError):
                raise
            raise FormatError(source, i + 1, str(e))
        self._register("rep", self.reps, name, rep, source, i + 1)
        return end

    def _load_morphism(self, lines, i, source):
        line = lines[i].strip()
        try:
            head, arrow_part = line.split(":", 1)
            name = head.split()[1]
            dom_name, cod_name = [s.strip() for s in arrow_part.split("->")]
        except (IndexError, ValueError):
            raise FormatError(source, i + 1, "expected 'morphism <name>: <rep> -> <rep>'")
        if dom_name not in self.reps or cod_name not in self.reps:
            raise FormatError(source, i + 1, f"morphism {name}: unknown representation "
                                             f"{dom_name!r} or {cod_name!r}")
        dom, cod = self.reps[dom_name], self.reps[cod_name]
        body, end = self._block(lines, i, self._TOP)
        comps = {}
        for lineno, l in body:
            if not l.startswith("at "):
                raise FormatError(source, lineno, f"expected 'at <v>: <matrix>', got {l!r}")
            v, mat = l[len("at "):].split(":", 1)
            comps[v.strip()] = parse_matrix(self.field, mat.strip())
        try:
            rm = RepMap(dom, cod, comps)
        except (ValueError, KeyError) as e:
            raise FormatError(source, i + 1, f"morphism {name}: {e}")
        self._register("morphism", self.rep_maps, name, rm, source, i + 1)
        return end

    def _load_complex(self, lines, i, source):
        line = lines[i].strip()
        toks = line.split()
        try:
            name = toks[1]
            assert toks[2] == "over" and toks[4] == "field" and toks[6] == "window"
            quiver = self.quiver(toks[3])
            field = parse_field(toks[5])
            lo, hi = int(toks[7]), int(toks[8])
        except (IndexError, AssertionError, ValueError):
            raise FormatError(source, i + 1,
                              "expected 'complex <name> over <quiver> field <spec> window <lo> <hi>'")
        if field != self.field:
            raise FormatError(source, i + 1, "complex field does not match workspace field")
        body, end = self._block(lines, i, self._TOP)
        cat = self.category(quiver)
        degree_bodies: dict[int, list] = {}
        diff_bodies: dict[int, list] = {}
        current: list | None = None
        for lineno, l in body:
            if l.startswith("degree "):
                deg = int(l.split()[1])
                current = degree_bodies.setdefault(deg, [])
            elif l.startswith("diff "):
                deg = int(l.split()[1].rstrip(":"))
                current = diff_bodies.setdefault(deg, [])
            elif current is None:
                raise FormatError(source, lineno, "expected 'degree <i>' or 'diff <i>:' first")
            else:
                current.append((lineno, l))
        objs = {}
        for deg, b in degree_bodies.items():
            if not (lo <= deg <= hi):
                raise FormatError(source, i + 1, f"degree {deg} outside declared window [{lo}, {hi}]")
            try:
                objs[deg] = self._read_rep_body(b, quiver, source)
            except ValueError as e:
                if isinstance(e, FormatError):
                    raise
                raise FormatError(source, i + 1, f"complex {name} degree {deg}: {e}")
        diffs = {}
        for deg, b in diff_bodies.items():
            comps = {}
            for lineno, l in b:
                if not l.startswith("at "):
                    raise FormatError(source, lineno, f"expected 'at <v>: <matrix>', got {l!r}")
                v, mat = l[len("at "):].split(":", 1)
                comps[v.strip()] = parse_matrix(self.field, mat.strip())
            if deg not in objs or deg + 1 not in objs:
                raise FormatError(source, i + 1, f"diff {deg} has no objects at both ends")
            try:
                diffs[deg] = RepMap(objs[deg], objs[deg + 1], comps)
            except (ValueError, KeyError) as e:
                raise FormatError(source, i + 1, f"complex {name} diff {deg}: {e}")
        try:
            cx = Complex(cat, objs, diffs)
        except ValueError as e:
            raise FormatError(source, i + 1, f"complex {name}: {e}")
        self._register("complex", self.complexes, name, cx, source, i + 1)
        return end

    def _load_chain_map(self, lines, i, source):
        line = lines[i].strip()
        try:
            head, arrow_part = line.split(":", 1)
            name = head.split()[1]
            dom_name, cod_name = [s.strip() for s in arrow_part.split("->")]
        except (IndexError, ValueError):
            raise FormatError(source, i + 1, "expected 'chainmap <name>: <complex> -> <complex>'")
        if dom_name not in self.complexes or cod_name not in self.complexes:
            raise FormatError(source, i + 1, f"chainmap {name}: unknown complex")
        dom, cod = self.complexes[dom_name], self.complexes[cod_name]
        body, end = self._block(lines, i, self._TOP)
        comps: dict[int, dict] = {}
        for lineno, l in body:
            if not l.startswith("at "):
                raise FormatError(source, lineno, f"expected 'at <i> <v>: <matrix>', got {l!r}")
            spec, mat = l[len("at "):].split(":", 1)
            deg_s, v = spec.split()
            comps.setdefault(int(deg_s), {})[v] = parse_matrix(self.field, mat.strip())
        cat = dom.category
        full = {}
        for deg, vm in comps.items():
            cdict = {}
            for v in cat.quiver.vertices:
                if v in vm:
                    cdict[v] = vm[v]
                else:
                    cdict[v] = cat.base.zero_mor(dom.obj(deg).vertex_objects[v],
                                                 cod.obj(deg).vertex_objects[v])
            try:
                full[deg] = RepMap(dom.obj(deg), cod.obj(deg), cdict)
            except ValueError as e:
                raise FormatError(source, i + 1, f"chainmap {name} degree {deg}: {e}")
        try:
            cm = ChainMap(dom, cod, full)
        except ValueError as e:
            raise FormatError(source, i + 1, f"chainmap {name}: {e}")
        self._register("chainmap", self.chain_maps, name, cm, source, i + 1)
        return end


    def _load_roof(self, lines, i, source):
        line = lines[i].strip()
        toks = line.split()
        try:
            name = toks[1].rstrip(":")
            assert toks[2] == "left" and toks[4] == "right"
            left_name, right_name = toks[3], toks[5]
        except (IndexError, AssertionError):
            raise FormatError(source, i + 1, "expected 'roof <name>: left <chainmap> right <chainmap>'")
        if left_name not in self.chain_maps or right_name not in self.chain_maps:
            raise FormatError(source, i + 1, f"roof {name}: unknown chain map legs")
        from .derived import Roof
        left = self.chain_maps[left_name]
        right = self.chain_maps[right_name]
        try:
            roof = Roof(left.domain, left, right)
        except ValueError as e:
            raise FormatError(source, i + 1, f"roof {name}: {e}")
        self._register("roof", self.roofs, name, roof, source, i + 1)
        return i + 1


def parse_rep(text: str, workspace: Workspace | None = None,
              field: FieldSpec | None = None) -> RepObject:
    ws = workspace or Workspace(field or _field_of(text))
    ws.load_text(text)
    if len(ws.reps) != 1:
        raise ValueError("expected exactly one rep block")
    return next(iter(ws.reps.values()))


def parse_complex(text: str, workspace: Workspace | None = None,
                  field: FieldSpec | None = None) -> Complex:
    ws = workspace or Workspace(field or _field_of(text))
    ws.load_text(text)
    if len(ws.complexes) != 1:
        raise ValueError("expected exactly one complex block")
    return next(iter(ws.complexes.values()))


def _field_of(text: str) -> FieldSpec:
    for line in text.splitlines():
        toks = line.split()
        if "field" in toks:
            return parse_field(toks[toks.index("field") + 1])
    raise ValueError("no field declaration found")
