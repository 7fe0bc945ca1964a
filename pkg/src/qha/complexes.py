"""Bounded complexes over a computable abelian category.

Complexes are degree-indexed dictionaries, normalized by dropping zero
objects, so structural equality is a usable oracle. All cohomological
computations (cohomology objects, induced maps, quasi-isomorphism
certificates, null-homotopies, cones) go through the category interface and
therefore work over vector spaces, representation categories, and nested
representation categories alike.
"""

from __future__ import annotations

from .category import BaseCategory, HomSystem
from .rep import RepCategory, RepMap, RepObject


class Complex:
    __slots__ = ("category", "objects", "diffs", "_key", "_coh")

    def __init__(self, category: BaseCategory, objects: dict, diffs: dict, check: bool = True):
        cat = category
        objs = {i: x for i, x in objects.items() if cat.total_dim(x) > 0}
        kept = {}
        for i, d in diffs.items():
            if i in objs and (i + 1) in objs and not cat.mor_is_zero(d):
                kept[i] = d
        self.category = cat
        self.objects = objs
        self.diffs = kept
        self._key = None
        self._coh = {}
        if check:
            for i, d in kept.items():
                if not cat.object_eq(cat.domain(d), objs[i]) or not cat.object_eq(cat.codomain(d), objs[i + 1]):
                    raise ValueError(f"differential at degree {i} has wrong endpoints")
            for i in kept:
                if (i + 1) in kept and not cat.mor_is_zero(cat.compose(kept[i + 1], kept[i])):
                    raise ValueError(f"d.d != 0 at degree {i}")

    def is_zero(self) -> bool:
        return not self.objects

    def degrees(self) -> list[int]:
        return sorted(self.objects)

    def window(self) -> tuple[int, int] | None:
        return (min(self.objects), max(self.objects)) if self.objects else None

    def obj(self, i: int):
        return self.objects.get(i, self.category.zero_object())

    def diff(self, i: int):
        if i in self.diffs:
            return self.diffs[i]
        return self.category.zero_mor(self.obj(i), self.obj(i + 1))

    def shift(self, n: int) -> "Complex":
        """Degree i of the shift is degree i+n of this complex; odd shifts flip signs."""
        cat = self.category
        sign = cat.field.from_int(-1 if n % 2 else 1)
        objs = {i - n: x for i, x in self.objects.items()}
        diffs = {i - n: cat.scale(sign, d) for i, d in self.diffs.items()}
        return Complex(cat, objs, diffs, check=False)

    def total_dim(self) -> int:
        return sum(self.category.total_dim(x) for x in self.objects.values())

    def key(self):
        if self._key is None:
            cat = self.category
            self._key = (
                tuple((i, cat.object_key(x)) for i, x in sorted(self.objects.items())),
                tuple((i, cat.mor_coords(d)) for i, d in sorted(self.diffs.items())),
            )
        return self._key

    def __repr__(self):
        if self.is_zero():
            return "Complex(0)"
        lo, hi = self.window()
        dims = " ".join(str(self.category.total_dim(self.obj(i))) for i in range(lo, hi + 1))
        return f"Complex([{lo},{hi}] dims {dims})"


def stalk(cat: BaseCategory, x, degree: int = 0) -> Complex:
    return Complex(cat, {degree: x}, {}, check=False)


class ChainMap:
    __slots__ = ("domain", "codomain", "components")

    def __init__(self, domain: Complex, codomain: Complex, components: dict, check: bool = True):
        cat = domain.category
        comps = {}
        for i, c in components.items():
            if not cat.mor_is_zero(c):
                comps[i] = c
        self.domain = domain
        self.codomain = codomain
        self.components = comps
        if check:
            for i, c in comps.items():
                if not cat.object_eq(cat.domain(c), domain.obj(i)) or \
                   not cat.object_eq(cat.codomain(c), codomain.obj(i)):
                    raise ValueError(f"chain map component at degree {i} has wrong endpoints")
            for i in _support_union(domain, codomain):
                lhs = cat.compose(codomain.diff(i), self.comp(i))
                rhs = cat.compose(self.comp(i + 1), domain.diff(i))
                if not cat.mor_eq(lhs, rhs):
                    raise ValueError(f"chain map condition fails at degree {i}")

    @property
    def category(self) -> BaseCategory:
        return self.domain.category

    def comp(self, i: int):
        if i in self.components:
            return self.components[i]
        return self.category.zero_mor(self.domain.obj(i), self.codomain.obj(i))

    def is_zero(self) -> bool:
        return not self.components

    def shift(self, n: int) -> "ChainMap":
        return ChainMap(self.domain.shift(n), self.codomain.shift(n),
                        {i - n: c for i, c in self.components.items()}, check=False)

    def key(self):
        return (self.domain.key(), self.codomain.key(),
                tuple((i, self.category.mor_coords(c)) for i, c in sorted(self.components.items())))


def _support_union(*complexes: Complex) -> list[int]:
    degs: set[int] = set()
    for cx in complexes:
        degs.update(cx.objects)
    if not degs:
        return []
    return list(range(min(degs) - 1, max(degs) + 1))


def identity_chain_map(x: Complex) -> ChainMap:
    cat = x.category
    return ChainMap(x, x, {i: cat.identity(o) for i, o in x.objects.items()}, check=False)


def zero_chain_map(x: Complex, y: Complex) -> ChainMap:
    return ChainMap(x, y, {}, check=False)


def add_chain_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    cat = f.category
    degs = set(f.components) | set(g.components)
    return ChainMap(f.domain, f.codomain,
                    {i: cat.add(f.comp(i), g.comp(i)) for i in degs}, check=False)


def sub_chain_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    cat = f.category
    degs = set(f.components) | set(g.components)
    return ChainMap(f.domain, f.codomain,
                    {i: cat.sub(f.comp(i), g.comp(i)) for i in degs}, check=False)


def scale_chain_map(c, f: ChainMap) -> ChainMap:
    cat = f.category
    return ChainMap(f.domain, f.codomain,
                    {i: cat.scale(c, m) for i, m in f.components.items()}, check=False)


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    cat = f.category
    degs = set(f.components) & set(g.components)
    return ChainMap(f.domain, g.codomain,
                    {i: cat.compose(g.comp(i), f.comp(i)) for i in degs}, check=False)


def complex_direct_sum(x: Complex, y: Complex):
    """(x + y, i_x, i_y, p_x, p_y) degreewise."""
    cat = x.category
    degs = sorted(set(x.objects) | set(y.objects))
    parts = {i: cat.direct_sum(x.obj(i), y.obj(i)) for i in degs}
    objs = {i: parts[i][0] for i in degs}
    diffs = {}
    for i in degs:
        if i + 1 not in objs:
            continue
        _, ixn, iyn, _, _ = parts[i + 1]
        _, _, _, pxc, pyc = parts[i]
        diffs[i] = cat.add(cat.compose(ixn, cat.compose(x.diff(i), pxc)),
                           cat.compose(iyn, cat.compose(y.diff(i), pyc)))
    total = Complex(cat, objs, diffs, check=False)
    mk = lambda pick, dom, cod: ChainMap(dom, cod, {i: parts[i][pick] for i in degs}, check=False)
    return (total, mk(1, x, total), mk(2, y, total), mk(3, total, x), mk(4, total, y))


def cone(f: ChainMap) -> Complex:
    """Mapping cone: degree n is domain^{n+1} + codomain^n; acyclic iff f is
    a quasi-isomorphism."""
    cat = f.category
    x, y = f.domain, f.codomain
    degs = sorted(set(i - 1 for i in x.objects) | set(y.objects))
    parts = {n: cat.direct_sum(x.obj(n + 1), y.obj(n)) for n in degs}
    minus = cat.field.from_int(-1)
    objs = {n: parts[n][0] for n in degs}
    diffs = {}
    for n in degs:
        if n + 1 not in objs:
            continue
        _, ixn, iyn, _, _ = parts[n + 1]
        _, _, _, pxc, pyc = parts[n]
        d = cat.compose(ixn, cat.compose(cat.scale(minus, x.diff(n + 1)), pxc))
        d = cat.add(d, cat.compose(iyn, cat.compose(f.comp(n + 1), pxc)))
        d = cat.add(d, cat.compose(iyn, cat.compose(y.diff(n), pyc)))
        diffs[n] = d
    return Complex(cat, objs, diffs, check=False)


# -- cohomology -------------------------------------------------------------


def _coh_at(cx: Complex, i: int):
    """(H obj, kernel incl z : Z -> X^i, proj p : Z -> H)."""
    if i in cx._coh:
        return cx._coh[i]
    cat = cx.category
    z_obj, z = cat.kernel(cx.diff(i))
    u = cat.factor_through_mono(z, cx.diff(i - 1))
    h_obj, p = cat.cokernel(u)
    cx._coh[i] = (h_obj, z, p)
    return cx._coh[i]


def cohomology(cx: Complex, i: int):
    return _coh_at(cx, i)[0]


def cohomology_dims(cx: Complex) -> dict[int, int]:
    cat = cx.category
    return {i: d for i in cx.degrees() if (d := cat.total_dim(cohomology(cx, i))) > 0}


def induced_cohomology_map(f: ChainMap, i: int):
    """H^i(f), computed by the unique factorizations through kernels and
    cokernels; functorial on the nose."""
    cat = f.category
    _, zx, px = _coh_at(f.domain, i)
    _, zy, py = _coh_at(f.codomain, i)
    v = cat.factor_through_mono(zy, cat.compose(f.comp(i), zx))
    return cat.factor_through_epi(px, cat.compose(py, v))


def cohomology_complex(cx: Complex) -> Complex:
    """All differentials zero, degree i carrying H^i."""
    return Complex(cx.category, {i: cohomology(cx, i) for i in cx.degrees()}, {}, check=False)


class QuasiIsoCertificate:
    """Re-checkable witness: per degree, the induced cohomology map with
    its (domain dim, codomain dim, rank) triple."""

    __slots__ = ("ok", "witnesses")

    def __init__(self, ok: bool, witnesses: dict):
        self.ok = ok
        self.witnesses = witnesses

    def __bool__(self):
        return self.ok


def is_quasi_iso(f: ChainMap) -> QuasiIsoCertificate:
    cat = f.category
    witnesses = {}
    ok = True
    for i in _support_union(f.domain, f.codomain):
        hx = cohomology(f.domain, i)
        hy = cohomology(f.codomain, i)
        dx, dy = cat.total_dim(hx), cat.total_dim(hy)
        if dx == 0 and dy == 0:
            continue
        h = induced_cohomology_map(f, i)
        r = cat.mor_rank(h)
        witnesses[i] = (dx, dy, r, cat.mor_coords(h))
        if not (dx == dy == r):
            ok = False
    return QuasiIsoCertificate(ok, witnesses)


# -- chain map spaces and homotopies -----------------------------------------


def chain_map_space(x: Complex, y: Complex) -> list[ChainMap]:
    """Deterministic basis of the space of chain maps x -> y."""
    cat = x.category
    degs = [i for i in _support_union(x, y)
            if cat.total_dim(x.obj(i)) > 0 and cat.total_dim(y.obj(i)) > 0]
    sys = HomSystem(cat)
    slots = {i: sys.add_unknown(x.obj(i), y.obj(i)) for i in degs}
    for i in _support_union(x, y):
        if cat.coords_len(x.obj(i), y.obj(i + 1)) == 0:
            continue
        terms = []
        if i in slots:
            terms.append((slots[i], y.diff(i), None, 1))
        if i + 1 in slots:
            terms.append((slots[i + 1], None, x.diff(i), -1))
        if terms:
            sys.add_equation(x.obj(i), y.obj(i + 1), terms)
    basis = []
    for sol in sys.nullspace():
        basis.append(ChainMap(x, y, {i: sol[slots[i]] for i in degs}, check=False))
    return basis


def homotopy_assembled(x: Complex, y: Complex, h: dict) -> ChainMap:
    """The chain map d.h + h.d determined by degreewise maps h^i : x^i -> y^{i-1}."""
    cat = x.category
    comps = {}
    for i in _support_union(x, y):
        terms = []
        if i in h:
            terms.append(cat.compose(y.diff(i - 1), h[i]))
        if i + 1 in h:
            terms.append(cat.compose(h[i + 1], x.diff(i)))
        if terms:
            acc = terms[0]
            for t in terms[1:]:
                acc = cat.add(acc, t)
            comps[i] = acc
    return ChainMap(x, y, comps, check=False)


def _homotopy_slot_degrees(x: Complex, y: Complex) -> list[int]:
    cat = x.category
    return [i for i in _support_union(x, y)
            if cat.total_dim(x.obj(i)) > 0 and cat.total_dim(y.obj(i - 1)) > 0]


def is_null_homotopic(f: ChainMap) -> dict | None:
    """A homotopy h with f = d.h + h.d (verified exactly), or None."""
    cat = f.category
    x, y = f.domain, f.codomain
    degs = _homotopy_slot_degrees(x, y)
    sys = HomSystem(cat)
    slots = {i: sys.add_unknown(x.obj(i), y.obj(i - 1)) for i in degs}
    for i in _support_union(x, y):
        if cat.coords_len(x.obj(i), y.obj(i)) == 0:
            if not cat.mor_is_zero(f.comp(i)):
                return None
            continue
        terms = []
        if i in slots:
            terms.append((slots[i], y.diff(i - 1), None, 1))
        if i + 1 in slots:
            terms.append((slots[i + 1], None, x.diff(i), 1))
        sys.add_equation(x.obj(i), y.obj(i), terms, rhs=f.comp(i))
    sol = sys.solve()
    if sol is None:
        return None
    h = {i: sol[slots[i]] for i in degs}
    assembled = homotopy_assembled(x, y, h)
    diff = sub_chain_maps(f, assembled)
    assert diff.is_zero(), "homotopy solve returned an invalid witness"
    return h


def homotopic(f: ChainMap, g: ChainMap) -> bool:
    return is_null_homotopic(sub_chain_maps(f, g)) is not None


# -- transposition: complexes of representations vs representations in complexes


class TransposedRep:
    """A representation taking values in complexes: per-vertex complexes over
    the base and per-arrow chain maps between them."""

    __slots__ = ("quiver", "base", "vertex_complexes", "arrow_maps")

    def __init__(self, quiver, base, vertex_complexes: dict, arrow_maps: dict, check: bool = True):
        self.quiver = quiver
        self.base = base
        self.vertex_complexes = vertex_complexes
        self.arrow_maps = arrow_maps
        if check:
            for name, tail, head in quiver.arrows:
                f = arrow_maps[name]
                if f.domain.key() != vertex_complexes[tail].key() or \
                   f.codomain.key() != vertex_complexes[head].key():
                    raise ValueError(f"arrow chain map {name} endpoints do not match vertex complexes")

    def key(self):
        return (tuple((v, self.vertex_complexes[v].key()) for v in self.quiver.vertices),
                tuple((n, self.arrow_maps[n].key()) for n, _, _ in self.quiver.arrows))


def evaluate_complex(cx: Complex, v: str) -> Complex:
    """The complex of base objects seen at one vertex."""
    cat = cx.category
    assert isinstance(cat, RepCategory)
    base = cat.base
    objs = {i: x.vertex_objects[v] for i, x in cx.objects.items()}
    diffs = {i: d.components[v] for i, d in cx.diffs.items()}
    return Complex(base, objs, diffs, check=False)


def evaluate_chain_map(f: ChainMap, v: str) -> ChainMap:
    comps = {i: c.components[v] for i, c in f.components.items()}
    return ChainMap(evaluate_complex(f.domain, v), evaluate_complex(f.codomain, v), comps, check=False)


def transpose(cx: Complex) -> TransposedRep:
    cat = cx.category
    assert isinstance(cat, RepCategory)
    verts = {v: evaluate_complex(cx, v) for v in cat.quiver.vertices}
    arrows = {}
    for name, tail, head in cat.quiver.arrows:
        comps = {i: x.arrow_maps[name] for i, x in cx.objects.items()}
        arrows[name] = ChainMap(verts[tail], verts[head], comps, check=False)
    return TransposedRep(cat.quiver, cat.base, verts, arrows, check=False)


def transpose_inv(tr: TransposedRep, rep_category: RepCategory | None = None) -> Complex:
    cat = rep_category or RepCategory(tr.quiver, tr.base)
    base, q = cat.base, cat.quiver
    degs = sorted({i for v in q.vertices for i in tr.vertex_complexes[v].objects})
    objs = {}
    for i in degs:
        vobjs = {v: tr.vertex_complexes[v].obj(i) for v in q.vertices}
        arrows = {n: tr.arrow_maps[n].comp(i) for n, _, _ in q.arrows}
        objs[i] = RepObject(cat, vobjs, arrows, check=False)
    diffs = {}
    for i in degs:
        if i + 1 not in objs:
            continue
        comps = {v: tr.vertex_complexes[v].diff(i) for v in q.vertices}
        diffs[i] = RepMap(objs[i], objs[i + 1], comps, check=False)
    return Complex(cat, objs, diffs, check=False)


# -- seeded random generators -------------------------------------------------


def random_complex(cat: BaseCategory, rng, lo: int, hi: int, bound: int) -> Complex:
    objs = {i: cat.random_object(rng, bound) for i in range(lo, hi + 1)}
    cx_objs = {i: x for i, x in objs.items() if cat.total_dim(x) > 0}
    diffs: dict = {}
    prev = None
    for i in range(lo, hi):
        x, y = objs.get(i), objs.get(i + 1)
        if cat.total_dim(x) == 0 or cat.total_dim(y) == 0:
            prev = None
            continue
        sys = HomSystem(cat)
        slot = sys.add_unknown(x, y)
        if prev is not None and cat.coords_len(objs[i - 1], y) > 0:
            sys.add_equation(objs[i - 1], y, [(slot, None, prev, 1)])
        basis = sys.nullspace()
        d = cat.zero_mor(x, y)
        for sol in basis:
            c = _rand_scalar(cat, rng)
            if c != cat.field.zero():
                d = cat.add(d, cat.scale(c, sol[slot]))
        diffs[i] = d
        prev = d
    return Complex(cat, cx_objs, diffs)


def _rand_scalar(cat: BaseCategory, rng):
    if cat.field.kind == "Q":
        return cat.field.from_int(rng.randint(-1, 1))
    return cat.field.from_int(rng.randrange(cat.field.p))


def random_chain_map(rng, x: Complex, y: Complex) -> ChainMap:
    cat = x.category
    out = zero_chain_map(x, y)
    for b in chain_map_space(x, y):
        c = _rand_scalar(cat, rng)
        if c != cat.field.zero():
            out = add_chain_maps(out, scale_chain_map(c, b))
    return out


def random_quasi_iso_onto(x: Complex, rng, bound: int = 2) -> ChainMap:
    """A quasi-isomorphism apex -> x: projection off a padded acyclic cone."""
    cat = x.category
    lohi = x.window() or (0, 0)
    pad = random_complex(cat, rng, lohi[0], lohi[1], bound)
    apex, _, _, px, _ = complex_direct_sum(x, cone(identity_chain_map(pad)))
    return px
