"""Computable abelian categories.

A BaseCategory packages objects and morphisms behind a small interface:
kernels, cokernels, biproducts, Hom bases, covers and hulls, duality.  Two
instances ship: finite dimensional vector spaces (VectCategory, objects are
plain ints, morphisms are Mat), and quiver representations over any base
(RepCategory, in rep.py), which makes representation categories usable as
bases themselves.

HomSystem turns linear conditions on tuples of unknown morphisms into one
exact matrix problem.  Unknowns are expressed in Hom-space bases supplied by
the category, so solutions are always valid morphisms; equation rows are raw
coordinate flattenings, where "morphism is zero" means "all coordinates
vanish".
"""

from __future__ import annotations

from .linalg import FieldSpec, Mat, nullspace, rref, solve


class BaseCategory:
    """Interface contract for a computable abelian category."""

    field: FieldSpec

    # -- identity of the category itself --

    def key(self):
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, BaseCategory) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # -- objects --

    def zero_object(self):
        raise NotImplementedError

    def object_key(self, x):
        raise NotImplementedError

    def object_eq(self, x, y) -> bool:
        return self.object_key(x) == self.object_key(y)

    def total_dim(self, x) -> int:
        raise NotImplementedError

    def is_zero_object(self, x) -> bool:
        return self.total_dim(x) == 0

    # -- morphisms --

    def domain(self, f):
        raise NotImplementedError

    def codomain(self, f):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def zero_mor(self, x, y):
        raise NotImplementedError

    def add(self, f, g):
        raise NotImplementedError

    def neg(self, f):
        raise NotImplementedError

    def sub(self, f, g):
        return self.add(f, self.neg(g))

    def scale(self, c, f):
        raise NotImplementedError

    def compose(self, g, f):
        """g after f."""
        raise NotImplementedError

    def mor_coords(self, f) -> tuple:
        raise NotImplementedError

    def coords_len(self, x, y) -> int:
        raise NotImplementedError

    def mor_eq(self, f, g) -> bool:
        return self.mor_coords(f) == self.mor_coords(g)

    def mor_is_zero(self, f) -> bool:
        z = self.field.zero()
        return all(c == z for c in self.mor_coords(f))

    def mor_key(self, f):
        return (self.object_key(self.domain(f)), self.object_key(self.codomain(f)), self.mor_coords(f))

    # -- abelian structure --

    def hom_basis(self, x, y) -> list:
        raise NotImplementedError

    def direct_sum(self, x, y):
        """(sum, i_x, i_y, p_x, p_y) satisfying the biproduct identities."""
        raise NotImplementedError

    def kernel(self, f):
        """(ker, incl) with incl mono and f . incl = 0, universal."""
        raise NotImplementedError

    def cokernel(self, f):
        """(coker, proj) with proj epi and proj . f = 0, universal."""
        raise NotImplementedError

    def simples(self) -> list:
        raise NotImplementedError

    def projective_cover(self, x):
        """(P, epi P -> x) with P projective and the epi minimal."""
        raise NotImplementedError

    # -- duality --

    def opposite(self) -> "BaseCategory":
        raise NotImplementedError

    def dual_object(self, x):
        raise NotImplementedError

    def dual_mor(self, f):
        """Contravariant: f : x -> y becomes dual(f) : dual(y) -> dual(x)."""
        raise NotImplementedError

    def injective_hull(self, x):
        """(I, mono x -> I); realized as the dual of a cover over the opposite."""
        op = self.opposite()
        p, q = op.projective_cover(self.dual_object(x))
        return op.dual_object(p), op.dual_mor(q)

    # -- randomness (seeded, for experiments and probes) --

    def random_object(self, rng, bound: int):
        raise NotImplementedError

    def random_mor(self, rng, x, y):
        raise NotImplementedError

    # -- derived helpers, category independent --

    def factor_through_mono(self, m, g):
        """The unique u with m . u = g, for m mono and g landing in m's image."""
        sys = HomSystem(self)
        slot = sys.add_unknown(self.domain(g), self.domain(m))
        sys.add_equation(self.domain(g), self.codomain(m), [(slot, m, None, 1)], rhs=g)
        sol = sys.solve()
        if sol is None:
            raise ValueError("morphism does not factor through the given mono")
        return sol[slot]

    def factor_through_epi(self, e, g):
        """The unique u with u . e = g, for e epi and g killing ker e."""
        sys = HomSystem(self)
        slot = sys.add_unknown(self.codomain(e), self.codomain(g))
        sys.add_equation(self.domain(e), self.codomain(g), [(slot, None, e, 1)], rhs=g)
        sol = sys.solve()
        if sol is None:
            raise ValueError("morphism does not factor through the given epi")
        return sol[slot]

    def image(self, f):
        """(im, e, m) with m . e = f, e epi, m mono (kernel of the cokernel)."""
        _, proj = self.cokernel(f)
        im, m = self.kernel(proj)
        e = self.factor_through_mono(m, f)
        return im, e, m

    def mor_rank(self, f) -> int:
        return self.total_dim(self.image(f)[0])

    def is_mono(self, f) -> bool:
        return self.total_dim(self.kernel(f)[0]) == 0

    def is_epi(self, f) -> bool:
        return self.total_dim(self.cokernel(f)[0]) == 0

    def is_iso(self, f) -> bool:
        return self.is_mono(f) and self.is_epi(f)

    def inverse(self, f):
        if not self.is_iso(f):
            raise ValueError("morphism is not invertible")
        u = self.factor_through_mono(f, self.identity(self.codomain(f)))
        assert self.mor_eq(self.compose(u, f), self.identity(self.domain(f)))
        return u

    def random_hom_combo(self, rng, x, y):
        """Seeded random element of Hom(x, y), as a combination of the basis."""
        basis = self.hom_basis(x, y)
        out = self.zero_mor(x, y)
        for b in basis:
            c = _random_scalar(self.field, rng)
            if c != self.field.zero():
                out = self.add(out, self.scale(c, b))
        return out


def _random_scalar(field: FieldSpec, rng):
    if field.kind == "Q":
        return field.from_int(rng.randint(-2, 2))
    return field.from_int(rng.randrange(field.p))


class VectCategory(BaseCategory):
    """Finite dimensional vector spaces: objects are dimensions, morphisms Mat."""

    def __init__(self, field: FieldSpec):
        self.field = field

    def key(self):
        return ("vect", self.field)

    def label(self) -> str:
        return f"vect({self.field.format()})"

    # objects

    def zero_object(self):
        return 0

    def object_key(self, x):
        return int(x)

    def total_dim(self, x) -> int:
        return int(x)

    # morphisms

    def domain(self, f: Mat):
        return f.cols

    def codomain(self, f: Mat):
        return f.rows

    def identity(self, x):
        return Mat.identity(self.field, x)

    def zero_mor(self, x, y):
        return Mat.zeros(self.field, y, x)

    def add(self, f, g):
        return f.add(g)

    def neg(self, f):
        return f.neg()

    def scale(self, c, f):
        return f.scale(c)

    def compose(self, g, f):
        return g.mul(f)

    def mor_coords(self, f):
        return f.entries

    def coords_len(self, x, y) -> int:
        return x * y

    # abelian structure

    def hom_basis(self, x, y) -> list:
        z, o = self.field.zero(), self.field.one()
        out = []
        for i in range(y):
            for j in range(x):
                ent = [z] * (x * y)
                ent[i * x + j] = o
                out.append(Mat(self.field, y, x, ent))
        return out

    def direct_sum(self, x, y):
        f = self.field
        s = x + y
        ix = Mat.from_rows(f, [[f.one() if j == i else f.zero() for j in range(x)] for i in range(x)]
                              + [[f.zero()] * x for _ in range(y)]) if s else Mat.zeros(f, 0, 0)
        iy = Mat.from_rows(f, [[f.zero()] * y for _ in range(x)]
                              + [[f.one() if j == i else f.zero() for j in range(y)] for i in range(y)]) if s else Mat.zeros(f, 0, 0)
        if s == 0:
            ix, iy = Mat.zeros(f, 0, 0), Mat.zeros(f, 0, 0)
        px, py = ix.transpose(), iy.transpose()
        return s, ix, iy, px, py

    def kernel(self, f: Mat):
        ns = nullspace(f)
        return ns.cols, ns

    def cokernel(self, f: Mat):
        proj = nullspace(f.transpose()).transpose()
        return proj.rows, proj

    def simples(self):
        return [1]

    def projective_cover(self, x):
        return x, self.identity(x)

    def injective_hull(self, x):
        return x, self.identity(x)

    # faster direct factorizations

    def factor_through_mono(self, m: Mat, g: Mat):
        u = solve(m, g)
        if u is None or m.mul(u) != g:
            raise ValueError("morphism does not factor through the given mono")
        return u

    def factor_through_epi(self, e: Mat, g: Mat):
        ut = solve(e.transpose(), g.transpose())
        if ut is None:
            raise ValueError("morphism does not factor through the given epi")
        u = ut.transpose()
        assert u.mul(e) == g
        return u

    # duality

    def opposite(self):
        return self

    def dual_object(self, x):
        return x

    def dual_mor(self, f: Mat):
        return f.transpose()

    # randomness

    def random_object(self, rng, bound: int):
        return rng.randint(0, bound)

    def random_mor(self, rng, x, y):
        return Mat(self.field, y, x, [_random_scalar(self.field, rng) for _ in range(x * y)])

    def catalogue(self) -> list[tuple[str, object]]:
        return [("k", 1)]


def sum_family(cat: BaseCategory, objs: list):
    """Iterated biproduct: (total, injections, projections), empty sum = 0."""
    total = cat.zero_object()
    injs: list = []
    projs: list = []
    for x in objs:
        total2, i_old, i_new, p_old, p_new = cat.direct_sum(total, x)
        injs = [cat.compose(i_old, i) for i in injs] + [i_new]
        projs = [cat.compose(p, p_old) for p in projs] + [p_new]
        total = total2
    return total, injs, projs


class HomSystem:
    """Exact linear system whose unknowns are morphisms in Hom spaces.

    Each unknown ranges over a Hom space, expressed in the category's
    deterministic hom_basis.  Each equation states that a sum of terms
    coeff * post . f_slot . pre equals a given morphism (default zero).
    """

    def __init__(self, category: BaseCategory):
        self.cat = category
        self.slots: list[tuple] = []        # (x, y, basis)
        self.equations: list[tuple] = []    # (x, y, terms, rhs)

    def add_unknown(self, x, y, basis=None) -> int:
        if basis is None:
            basis = self.cat.hom_basis(x, y)
        self.slots.append((x, y, basis))
        return len(self.slots) - 1

    def add_equation(self, x, y, terms, rhs=None):
        """terms: list of (slot, post_or_None, pre_or_None, int_coeff)."""
        self.equations.append((x, y, terms, rhs))

    def _term_coords(self, slot, post, pre, coeff, mor):
        cat = self.cat
        m = mor
        if pre is not None:
            m = cat.compose(m, pre)
        if post is not None:
            m = cat.compose(post, m)
        if coeff != 1:
            m = cat.scale(cat.field.from_int(coeff), m)
        return cat.mor_coords(m)

    def _build(self):
        cat = self.cat
        f = cat.field
        col_meta = []  # (slot, basis_index)
        for s, (x, y, basis) in enumerate(self.slots):
            for k in range(len(basis)):
                col_meta.append((s, k))
        row_blocks = [cat.coords_len(x, y) for (x, y, _, _) in self.equations]
        total_rows = sum(row_blocks)
        cols = []
        for s, k in col_meta:
            mor = self.slots[s][2][k]
            col = []
            for (x, y, terms, _rhs), block in zip(self.equations, row_blocks):
                acc = [f.zero()] * block
                for (slot, post, pre, coeff) in terms:
                    if slot != s:
                        continue
                    coords = self._term_coords(slot, post, pre, coeff, mor)
                    acc = [f.add(a, c) for a, c in zip(acc, coords)]
                col.extend(acc)
            cols.append(col)
        a = Mat(f, total_rows, len(cols), [cols[j][i] for i in range(total_rows) for j in range(len(cols))])
        rhs_entries = []
        for (x, y, _terms, rhs), block in zip(self.equations, row_blocks):
            if rhs is None:
                rhs_entries.extend([f.zero()] * block)
            else:
                rhs_entries.extend(self.cat.mor_coords(rhs))
        b = Mat(f, total_rows, 1, rhs_entries)
        return a, b

    def _assemble(self, vec):
        cat = self.cat
        out = []
        pos = 0
        for (x, y, basis) in self.slots:
            m = cat.zero_mor(x, y)
            for b in basis:
                c = vec[pos]
                pos += 1
                if c != cat.field.zero():
                    m = cat.add(m, cat.scale(c, b))
            out.append(m)
        return out

    def solve(self):
        """One solution as a list of morphisms per slot, or None."""
        a, b = self._build()
        x = solve(a, b)
        if x is None:
            return None
        return self._assemble([x.at(i, 0) for i in range(x.rows)])

    def nullspace(self):
        """Basis of the homogeneous solution space, as per-slot morphism tuples."""
        a, _ = self._build()
        ns = nullspace(a)
        return [self._assemble([ns.at(i, j) for i in range(ns.rows)]) for j in range(ns.cols)]

    def solution_dim(self) -> int:
        a, _ = self._build()
        return a.cols - rref(a)[1]
