import random

import pytest

from qha.linalg import Mat, parse_matrix
from qha.quiver import named_quiver
from qha.rep import (
    RepCategory,
    RepMap,
    apply_induced,
    certify_functor,
    identity_functor,
    induce_on_reps,
    is_short_exact,
    objects_isomorphic,
    random_short_exact,
    tensor_power_functor,
)


def test_hom_dimensions_on_a2(a2_q, a2_objects):
    P1, P2, S1, S2 = (a2_objects[k] for k in ("P1", "P2", "S1", "S2"))
    assert len(a2_q.hom_basis(P1, P1)) == 1
    assert len(a2_q.hom_basis(S1, S2)) == 0
    assert len(a2_q.hom_basis(P1, S1)) == 1
    assert len(a2_q.hom_basis(S1, P1)) == 0
    assert len(a2_q.hom_basis(P2, P1)) == 1


def test_identity_in_hom_span(a2_q, a2_objects):
    m = a2_objects["P1"]
    basis = a2_q.hom_basis(m, m)
    assert len(basis) == 1
    ident = a2_q.identity(m)
    found = any(a2_q.mor_eq(a2_q.scale(c, basis[0]), ident)
                for c in (a2_q.field.from_int(1), a2_q.field.from_int(-1)))
    assert found


def test_naturality_enforced(a2_q, a2_objects):
    P1, P2, S1 = a2_objects["P1"], a2_objects["P2"], a2_objects["S1"]
    with pytest.raises(ValueError, match="naturality"):
        RepMap(P1, P2, {"1": Mat.zeros(a2_q.field, 0, 1),
                        "2": parse_matrix(a2_q.field, "1")})
    ok = RepMap(P1, S1, {"1": parse_matrix(a2_q.field, "1"),
                         "2": Mat.zeros(a2_q.field, 0, 1)})
    assert ok.components["1"].at(0, 0) == a2_q.field.one()


def test_kernel_examples(a2_q, a2_objects):
    P1, P2, S1 = a2_objects["P1"], a2_objects["P2"], a2_objects["S1"]
    ident = a2_q.identity(P1)
    ker, _ = a2_q.kernel(ident)
    assert a2_q.total_dim(ker) == 0
    zker, _ = a2_q.kernel(a2_q.zero_mor(P1, S1))
    assert objects_isomorphic(a2_q, zker, P1) is not None
    cover = a2_q.hom_basis(P1, S1)[0]
    kc, incl = a2_q.kernel(cover)
    assert kc.dim_vector() == P2.dim_vector()
    assert a2_q.mor_is_zero(a2_q.compose(cover, incl))
    assert a2_q.is_mono(incl)


def test_cokernel_examples(a2_q, a2_objects):
    P1, P2, S1 = a2_objects["P1"], a2_objects["P2"], a2_objects["S1"]
    c, _ = a2_q.cokernel(a2_q.identity(P1))
    assert a2_q.total_dim(c) == 0
    c2, _ = a2_q.cokernel(a2_q.zero_mor(P2, P1))
    assert objects_isomorphic(a2_q, c2, P1) is not None
    incl = a2_q.hom_basis(P2, P1)[0]
    c3, proj = a2_q.cokernel(incl)
    assert c3.dim_vector() == S1.dim_vector()
    assert a2_q.is_epi(proj)
    assert a2_q.mor_is_zero(a2_q.compose(proj, incl))


def test_image_factorization_examples(a2_q, a2_objects):
    P1, S1 = a2_objects["P1"], a2_objects["S1"]
    im, e, m = a2_q.image(a2_q.identity(P1))
    assert a2_q.mor_eq(a2_q.compose(m, e), a2_q.identity(P1))
    imz, _, _ = a2_q.image(a2_q.zero_mor(P1, S1))
    assert a2_q.total_dim(imz) == 0
    cover = a2_q.hom_basis(P1, S1)[0]
    imc, ec, mc = a2_q.image(cover)
    assert imc.dim_vector() == S1.dim_vector()
    assert a2_q.mor_eq(a2_q.compose(mc, ec), cover)
    assert a2_q.is_epi(ec) and a2_q.is_mono(mc)


def test_direct_sum_biproduct_identities(a2_f5):
    rng = random.Random(31)
    for _ in range(40):
        x = a2_f5.random_object(rng, 3)
        y = a2_f5.random_object(rng, 3)
        s, ix, iy, px, py = a2_f5.direct_sum(x, y)
        assert a2_f5.mor_eq(a2_f5.compose(px, ix), a2_f5.identity(x))
        assert a2_f5.mor_eq(a2_f5.compose(py, iy), a2_f5.identity(y))
        assert a2_f5.mor_is_zero(a2_f5.compose(py, ix))
        assert a2_f5.mor_is_zero(a2_f5.compose(px, iy))
        assert a2_f5.mor_eq(
            a2_f5.add(a2_f5.compose(ix, px), a2_f5.compose(iy, py)), a2_f5.identity(s))


def test_direct_sum_dims(a2_q, a2_objects):
    s, *_ = a2_q.direct_sum(a2_objects["P1"], a2_objects["P2"])
    assert s.dim_vector() == {"1": 1, "2": 2}
    z, i_m, _, p_m, _ = a2_q.direct_sum(a2_objects["P1"], a2_q.zero_object())
    assert a2_q.mor_eq(a2_q.compose(p_m, i_m), a2_q.identity(a2_objects["P1"]))


def test_embed_full_faithful(a2_q):
    base = a2_q.base
    rng = random.Random(5)
    for v in a2_q.quiver.vertices:
        for _ in range(10):
            a1 = base.random_object(rng, 3)
            a2_ = base.random_object(rng, 3)
            e1 = a2_q.embed_at_vertex(v, a1)
            e2 = a2_q.embed_at_vertex(v, a2_)
            assert len(a2_q.hom_basis(e1, e2)) == len(base.hom_basis(a1, a2_))
    assert a2_q.total_dim(a2_q.embed_at_vertex("1", 0)) == 0


def test_embed_exactness(a2_q):
    base = a2_q.base
    rng = random.Random(6)
    for _ in range(10):
        a, b = random_short_exact(base, rng, 3)
        for v in a2_q.quiver.vertices:
            ea = a2_q.embed_mor_at_vertex(v, a)
            eb = a2_q.embed_mor_at_vertex(v, b)
            assert is_short_exact(a2_q, ea, eb)


def test_unknown_vertex_rejected(a2_q):
    with pytest.raises(ValueError, match="vertex"):
        a2_q.embed_at_vertex("9", 1)


def test_apply_induced_identity(a2_q, a2_objects):
    fs = identity_functor(a2_q.base)
    m = a2_objects["P1"]
    assert apply_induced(fs, m).key() == m.key()


def test_apply_induced_doubles_dimensions(a2_q, a2_objects):
    fs = tensor_power_functor(a2_q.base, 2)
    m = a2_objects["P1"]
    doubled = apply_induced(fs, m)
    assert doubled.dim_vector() == {v: 2 * d for v, d in m.dim_vector().items()}


def test_induced_exact_functor_preserves_exactness(a2_f5):
    fs = tensor_power_functor(a2_f5.base, 2)
    lifted = induce_on_reps(fs, a2_f5.quiver)
    rng = random.Random(8)
    for _ in range(10):
        a, b = random_short_exact(a2_f5, rng, 3)
        fa, fb = lifted.apply_mor(a), lifted.apply_mor(b)
        assert is_short_exact(lifted.target, fa, fb)


def test_functor_certification(a2_q):
    fs = tensor_power_functor(a2_q.base, 2)
    report = certify_functor(fs, random.Random(3))
    assert report["identity"] and report["composition"] and report["additivity"]
    assert report["exact"] and report["left_exact"]


def test_pointwise_kernel_law(a2_f5, a3_f5):
    rng = random.Random(9)
    for cat in (a2_f5, a3_f5):
        for _ in range(25):
            x = cat.random_object(rng, 4)
            y = cat.random_object(rng, 4)
            f = cat.random_mor(rng, x, y)
            ker, _ = cat.kernel(f)
            coker, _ = cat.cokernel(f)
            for v in cat.quiver.vertices:
                comp = f.components[v]
                nullity = comp.cols - _rank(comp)
                assert ker.vertex_objects[v] == nullity
                assert coker.vertex_objects[v] == comp.rows - _rank(comp)


def _rank(m):
    from qha.linalg import rref
    return rref(m)[1]


def test_kernel_universal_property(a2_f5):
    from qha.category import HomSystem
    rng = random.Random(10)
    for _ in range(8):
        x = a2_f5.random_object(rng, 3)
        y = a2_f5.random_object(rng, 3)
        f = a2_f5.random_mor(rng, x, y)
        ker, incl = a2_f5.kernel(f)
        t = a2_f5.random_object(rng, 2)
        # a basis of {g : t -> x with f g = 0}, then 20 random members of it
        sys = HomSystem(a2_f5)
        slot = sys.add_unknown(t, x)
        sys.add_equation(t, y, [(slot, f, None, 1)])
        basis = [sol[slot] for sol in sys.nullspace()]
        probes = list(basis)
        for _ in range(max(0, 20 - len(basis))):
            g = a2_f5.zero_mor(t, x)
            for b in basis:
                c = a2_f5.field.from_int(rng.randrange(5))
                if c != a2_f5.field.zero():
                    g = a2_f5.add(g, a2_f5.scale(c, b))
            probes.append(g)
        for g in probes[:20]:
            u = a2_f5.factor_through_mono(incl, g)
            assert a2_f5.mor_eq(a2_f5.compose(incl, u), g)


def test_hom_group_bilinearity(a2_f5):
    rng = random.Random(11)
    for _ in range(10):
        x, y, z = (a2_f5.random_object(rng, 3) for _ in range(3))
        f1 = a2_f5.random_mor(rng, x, y)
        f2 = a2_f5.random_mor(rng, x, y)
        g = a2_f5.random_mor(rng, y, z)
        lhs = a2_f5.compose(g, a2_f5.add(f1, f2))
        rhs = a2_f5.add(a2_f5.compose(g, f1), a2_f5.compose(g, f2))
        assert a2_f5.mor_eq(lhs, rhs)
        h = a2_f5.random_mor(rng, z, x)
        lhs2 = a2_f5.compose(a2_f5.add(f1, f2), h)
        rhs2 = a2_f5.add(a2_f5.compose(f1, h), a2_f5.compose(f2, h))
        assert a2_f5.mor_eq(lhs2, rhs2)


def test_equivalence_transfer_preserves_hom_dimensions(a2_q):
    # a base self-equivalence: conjugation by fixed invertible changes of basis
    base = a2_q.base
    field = base.field
    gens = {}

    def g(n):
        if n not in gens:
            rng = random.Random(1000 + n)
            while True:
                m = base.random_mor(rng, n, n)
                from qha.linalg import inverse
                if inverse(m) is not None:
                    gens[n] = (m, inverse(m))
                    break
        return gens[n]

    from qha.rep import FunctorSpec

    def mor_map(f):
        gm, _ = g(f.rows)
        _, gi = g(f.cols)
        return gm.mul(f).mul(gi)

    fs = FunctorSpec("conjugate", base, base, lambda x: x, mor_map)
    fs.is_exact = True
    fs.is_left_exact = True
    lifted = induce_on_reps(fs, a2_q.quiver)
    rng = random.Random(12)
    for _ in range(50):
        x = a2_q.random_object(rng, 3)
        y = a2_q.random_object(rng, 3)
        fx, fy = lifted.apply_obj(x), lifted.apply_obj(y)
        assert len(a2_q.hom_basis(x, y)) == len(lifted.target.hom_basis(fx, fy))


def test_projective_cover_is_epi_and_projective(a2_f5):
    from qha.derived import certify_projective_object
    rng = random.Random(13)
    for _ in range(5):
        m = a2_f5.random_object(rng, 3)
        p, cover = a2_f5.projective_cover(m)
        assert a2_f5.is_epi(cover)
        assert certify_projective_object(a2_f5, p, random.Random(14), trials=2)


def test_injective_hull_is_mono(a2_q, a2_objects):
    ih, mono = a2_q.injective_hull(a2_objects["S2"])
    assert a2_q.is_mono(mono)
    assert ih.dim_vector() == a2_objects["P1"].dim_vector()


def test_nested_rep_category_roundtrip(a2_f5):
    nested = RepCategory(named_quiver("A2"), a2_f5)
    rng = random.Random(15)
    x = nested.random_object(rng, 2)
    y = nested.random_object(rng, 2)
    f = nested.random_mor(rng, x, y)
    ker, incl = nested.kernel(f)
    assert nested.mor_is_zero(nested.compose(f, incl))
    im, e, m = nested.image(f)
    assert nested.mor_eq(nested.compose(m, e), f)
    with pytest.raises(ValueError, match="nesting"):
        RepCategory(named_quiver("A2"), nested)


def test_catalogue_names(a2_q):
    names = [n for n, _ in a2_q.catalogue()]
    assert names == ["S1", "S2", "P1"]
    named = a2_q.named_objects()
    assert named["P2"].key() == named["S2"].key()
    assert named["I1"].key() == named["S1"].key()
    assert named["I2"].key() == named["P1"].key()
