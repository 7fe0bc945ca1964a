import random

import pytest

from qha.category import VectCategory
from qha.complexes import (
    Complex,
    cohomology_dims,
    is_quasi_iso,
    random_complex,
    stalk,
)
from qha.derived import (
    complexes_derived_isomorphic,
    hom_derived,
    injective_resolution,
)
from qha.induced import (
    DerivedFunctorSpec,
    EndAlgebra,
    build_tilting_functor,
    compare_induced_derived,
    comparison_functor_experiment,
    derive_induced,
    endomorphism_quiver,
    identity_derived_functor,
    induced_equivalence_experiment,
    morita_functor,
    parse_report_records,
    projective_generator,
    summand_decomposition,
    tilting_certificate,
)
from qha.quiver import named_quiver
from qha.rep import RepCategory, tensor_power_functor


@pytest.fixture(scope="module")
def apr(a2_q):
    t, *_ = a2_q.direct_sum(a2_q.projective_at("1"), a2_q.simple_at("1"))
    return build_tilting_functor(named_quiver("A2"), t)


def test_end_algebra_decomposition(a2_q, a2_objects):
    t, *_ = a2_q.direct_sum(a2_objects["P1"], a2_objects["S1"])
    alg = EndAlgebra(a2_q, t)
    assert alg.n == 3
    idems = alg.primitive_orthogonal_idempotents()
    assert len(idems) == 2
    summands = summand_decomposition(a2_q, t)
    dims = sorted(tuple(s.dim_vector().values()) for s in summands)
    assert dims == [(1, 0), (1, 1)]


def test_morita_generator_decomposes(a2_q):
    pg = projective_generator(a2_q)
    assert pg.dim_vector() == {"1": 1, "2": 2}
    summands = summand_decomposition(a2_q, pg)
    assert len(summands) == 2


def test_tilting_certificate_apr_passes(a2_q, a2_objects):
    t, *_ = a2_q.direct_sum(a2_objects["P1"], a2_objects["S1"])
    cert = tilting_certificate(a2_q, t)
    assert cert.passed
    assert cert.projective_dimension_ok and cert.self_extension_ok
    assert cert.summand_classes == 2


def test_tilting_certificate_rejects_wrong_count(a2_q, a2_objects):
    cert = tilting_certificate(a2_q, a2_objects["S1"])
    assert not cert.passed
    assert "summand class count 1 != 2" in cert.failing_axiom
    with pytest.raises(ValueError, match="summand class count"):
        build_tilting_functor(named_quiver("A2"), a2_objects["S1"])


def test_tilting_certificate_rejects_self_extensions():
    # S1 + S2 + P1 over A3: Ext^1(S1, S2) is nonzero, so rigidity fails
    from qha.linalg import rationals
    a3 = RepCategory(named_quiver("A3"), VectCategory(rationals()))
    t, *_ = a3.direct_sum(a3.simple_at("1"),
                          a3.direct_sum(a3.simple_at("2"), a3.projective_at("1"))[0])
    cert = tilting_certificate(a3, t)
    assert not cert.passed
    assert cert.failing_axiom == "nonzero self-extensions"


def test_tilting_certificate_rejects_high_projective_dimension(a2_f5):
    # over the nested base the corner simple has projective dimension two
    nested = RepCategory(named_quiver("A2"), a2_f5)
    corner = nested.embed_at_vertex("1", a2_f5.simple_at("1"))
    from qha.derived import projective_resolution
    res = projective_resolution(stalk(nested, corner))
    lo, hi = res.complex.window()
    if hi - lo > 1:
        cert = tilting_certificate(nested, corner)
        assert not cert.passed
        assert cert.failing_axiom == "projective dimension exceeds 1"


def test_endomorphism_quiver_shapes(a2_q, a2_objects):
    t, *_ = a2_q.direct_sum(a2_objects["P1"], a2_objects["S1"])
    gamma, classes, arrow_mors = endomorphism_quiver(a2_q, t)
    assert len(gamma.vertices) == 2
    assert len(gamma.arrows) == 1
    pg = projective_generator(a2_q)
    gamma2, _, _ = endomorphism_quiver(a2_q, pg)
    assert len(gamma2.vertices) == 2 and len(gamma2.arrows) == 1


def test_tilting_functor_images(a2_q, a2_objects, apr):
    F = apr.underlying
    assert apr.underlying.is_left_exact
    img_p1 = F.apply_obj(a2_objects["P1"])
    img_p2 = F.apply_obj(a2_objects["P2"])
    img_s1 = F.apply_obj(a2_objects["S1"])
    assert sum(img_p1.dim_vector().values()) == 1
    assert sum(img_p2.dim_vector().values()) == 0  # torsion-free part dies under Hom
    assert sum(img_s1.dim_vector().values()) == 2


def test_apr_derived_images(a2_q, a2_objects, apr):
    img = derive_induced(apr, stalk(a2_q, a2_objects["P2"]))
    assert cohomology_dims(img) == {1: 1}  # resurrected in degree one
    img0 = derive_induced(apr, stalk(a2_q, a2_objects["S1"]))
    assert cohomology_dims(img0) == {0: 2}


def test_morita_preserves_hom_dimensions_at_base(a2_q, a2_objects):
    dfm = morita_functor(a2_q)
    assert dfm.underlying.is_exact
    names = ["P1", "P2", "S1"]
    for a in names:
        for b in names:
            for n in (0, 1):
                x, y = stalk(a2_q, a2_objects[a]), stalk(a2_q, a2_objects[b])
                fx, fy = derive_induced(dfm, x), derive_induced(dfm, y)
                assert hom_derived(x, y, n)[0] == hom_derived(fx, fy, n)[0]


def test_apr_preserves_hom_dimensions_at_base(a2_q, a2_objects, apr):
    names = ["P1", "P2", "S1"]
    for a in names:
        for b in names:
            for n in (0, 1):
                x, y = stalk(a2_q, a2_objects[a]), stalk(a2_q, a2_objects[b])
                fx, fy = derive_induced(apr, x), derive_induced(apr, y)
                assert hom_derived(x, y, n)[0] == hom_derived(fx, fy, n)[0], (a, b, n)


def test_derive_induced_zero_and_identity(a2_f5):
    df = identity_derived_functor(a2_f5.base)
    zero = Complex(a2_f5, {}, {})
    assert derive_induced(df, zero).is_zero()
    rng = random.Random(50)
    x = random_complex(a2_f5, rng, 0, 1, 2)
    img = derive_induced(df, x)
    assert cohomology_dims(img) == cohomology_dims(x)
    assert complexes_derived_isomorphic(img, x)


def test_derive_induced_exact_functor_is_degreewise(a2_f5):
    from qha.rep import induce_on_reps
    fs = tensor_power_functor(a2_f5.base, 2)
    df = DerivedFunctorSpec(fs, name="double")
    lifted = induce_on_reps(fs, a2_f5.quiver)
    rng = random.Random(51)
    for _ in range(30):
        x = random_complex(a2_f5, rng, 0, 1, 2)
        img = derive_induced(df, x)
        direct = Complex(lifted.target,
                         {i: lifted.apply_obj(o) for i, o in x.objects.items()},
                         {i: lifted.apply_mor(d) for i, d in x.diffs.items()})
        assert cohomology_dims(img) == cohomology_dims(direct)
        assert complexes_derived_isomorphic(img, direct)


def test_resolution_independence(a2_q, a2_f5, apr):
    # deriving through a second, padded injective resolution gives a
    # quasi-isomorphic result, witnessed by the functor image of the
    # inclusion (a homotopy equivalence of injective resolutions, which any
    # additive functor preserves)
    from qha.complexes import (ChainMap, complex_direct_sum, compose_chain_maps, cone,
                               identity_chain_map)

    def apply_functor(fs, cx):
        return Complex(fs.target,
                       {i: fs.apply_obj(o) for i, o in cx.objects.items()},
                       {i: fs.apply_mor(d) for i, d in cx.diffs.items()})

    def check(fs, cat, x):
        res = injective_resolution(x)
        pad = cone(identity_chain_map(res.complex))
        padded, ix, _, _, _ = complex_direct_sum(res.complex, pad)
        assert is_quasi_iso(compose_chain_maps(ix, res.quasi_iso)).ok
        out1 = apply_functor(fs, res.complex)
        out2 = apply_functor(fs, padded)
        witness = ChainMap(out1, out2, {i: fs.apply_mor(c) for i, c in ix.components.items()})
        assert is_quasi_iso(witness).ok

    rng = random.Random(52)
    fs_exact = tensor_power_functor(a2_f5.base, 2)
    from qha.rep import induce_on_reps
    lifted = induce_on_reps(fs_exact, a2_f5.quiver)
    for _ in range(15):
        check(lifted, a2_f5, random_complex(a2_f5, rng, 0, 1, 2))
    # a genuinely non-exact left exact functor, at the base level
    rng_q = random.Random(53)
    for _ in range(15):
        check(apr.underlying, a2_q, random_complex(a2_q, rng_q, 0, 1, 2))


def test_square22_identity(a2_f5):
    df = identity_derived_functor(a2_f5.base)
    rng = random.Random(53)
    for _ in range(6):
        x = random_complex(a2_f5, rng, 0, 2, 2)
        cmp_ = compare_induced_derived(df, x)
        assert cmp_.passed


def test_square22_exact_functor(a2_f5):
    df = DerivedFunctorSpec(tensor_power_functor(a2_f5.base, 2), name="double")
    rng = random.Random(54)
    for _ in range(6):
        x = random_complex(a2_f5, rng, 0, 2, 2)
        cmp_ = compare_induced_derived(df, x)
        assert cmp_.passed


def test_square22_complex_of_injectives(a2_q, apr):
    # a complex of injectives: both paths collapse to the functor applied directly
    outer = RepCategory(named_quiver("A2"), a2_q)
    inj = injective_resolution(stalk(outer, outer.random_object(random.Random(1), 1)))
    x = Complex(outer, dict(inj.complex.objects), dict(inj.complex.diffs))
    cmp_ = compare_induced_derived(apr, x)
    assert cmp_.passed


def test_square22_apr_on_random_decorated_complexes(a2_q, apr):
    outer = RepCategory(named_quiver("A2"), a2_q)
    rng = random.Random(55)
    for _ in range(3):
        x = random_complex(outer, rng, 0, 1, 1)
        cmp_ = compare_induced_derived(apr, x)
        assert all(cmp_.checks.values())
        assert cmp_.passed


def test_thm21_experiment_records_tension(a2_q):
    rep = comparison_functor_experiment(named_quiver("A2"), a2_q.base, seed=7)
    recs = parse_report_records(rep.render())
    assert len(recs) == 36
    assert rep.all_checks_passed
    by_case = {r["case"]: r for r in recs}
    tension = by_case["S1,S2,shift1"]
    assert tension["left"] == 1 and tension["right"] == 0 and not tension["agree"]
    agreeing = [r for r in recs if r["agree"]]
    assert len(agreeing) == 35


def test_thm21_identity_cases_agree(a2_q):
    rep = comparison_functor_experiment(named_quiver("A2"), a2_q.base, shifts=(0,), seed=1)
    recs = parse_report_records(rep.render())
    for r in recs:
        name = r["case"].split(",")
        if name[0] == name[1]:
            assert r["left"] >= 1 and r["right"] >= 1 and r["agree"]


def test_thm21_single_vertex_all_agree(vect_f5):
    rep = comparison_functor_experiment(named_quiver("pt"), vect_f5, seed=2)
    recs = parse_report_records(rep.render())
    assert all(r["agree"] for r in recs)
    assert rep.all_checks_passed


def test_thm21_over_non_semisimple_base(a2_f5):
    # nested run: the right-side graded oracle is unavailable, the left-side
    # checks still carry every dimension
    suite = [(n, stalk(RepCategory(named_quiver("A2"), a2_f5), o))
             for n, o in RepCategory(named_quiver("A2"), a2_f5).catalogue()[:3]]
    rep = comparison_functor_experiment(named_quiver("A2"), a2_f5, suite=suite,
                                        shifts=(0, 1), seed=4)
    recs = parse_report_records(rep.render())
    assert rep.all_checks_passed
    for r in recs:
        assert "left_vs_injective_route" in r["checks"]
        assert "right_vs_graded_route" not in r["checks"]


def test_thm24_morita_full_agreement(a2_f5):
    dfm = morita_functor(a2_f5)
    rep = induced_equivalence_experiment(named_quiver("A2"), dfm, seed=3, bound=None)
    recs = parse_report_records(rep.render())
    ff = [r for r in recs if not r["case"].startswith("surj:")]
    assert ff and all(r["agree"] for r in ff)
    assert rep.all_checks_passed
    surj = [r for r in recs if r["case"].startswith("surj:")]
    assert surj and all(r["right"] == 1 for r in surj)


def test_thm24_zero_pair(a2_f5):
    dfm = morita_functor(a2_f5)
    zero = Complex(RepCategory(named_quiver("A2"), a2_f5), {}, {})
    rep = induced_equivalence_experiment(named_quiver("A2"), dfm,
                                         suite=[("zero", zero)], shifts=(0,), seed=4)
    recs = parse_report_records(rep.render())
    ff = [r for r in recs if r["case"] == "zero,zero,shift0"]
    assert ff[0]["left"] == 0 and ff[0]["right"] == 0 and ff[0]["agree"]


def test_thm24_apr_nested(a2_f5):
    t, *_ = a2_f5.direct_sum(a2_f5.projective_at("1"), a2_f5.simple_at("1"))
    df = build_tilting_functor(named_quiver("A2"), t)
    rep = induced_equivalence_experiment(named_quiver("A2"), df, seed=5, bound=6)
    recs = parse_report_records(rep.render())
    assert rep.all_checks_passed
    surj = [r for r in recs if r["case"].startswith("surj:")]
    assert all(r["right"] in (0, 1) for r in surj)
    for note in rep.notes:
        assert "preimage" in note or "not found at bound" in note


def test_reports_byte_stable(a2_q, a2_f5):
    r1 = comparison_functor_experiment(named_quiver("A2"), a2_q.base, seed=7)
    r2 = comparison_functor_experiment(named_quiver("A2"), a2_q.base, seed=7)
    assert r1.render() == r2.render()
    dfm = morita_functor(a2_f5)
    e1 = induced_equivalence_experiment(named_quiver("A2"), dfm, seed=3, bound=4)
    e2 = induced_equivalence_experiment(named_quiver("A2"), dfm, seed=3, bound=4)
    assert e1.render() == e2.render()


def test_report_round_trip(a2_q):
    rep = comparison_functor_experiment(named_quiver("A2"), a2_q.base, shifts=(0, 1), seed=9)
    text = rep.render()
    recs = parse_report_records(text)
    assert len(recs) == len(rep.cases)
    for rec, case in zip(recs, rep.cases):
        assert rec["case"] == case.case_id
        assert rec["left"] == case.left and rec["right"] == case.right
        assert rec["agree"] == case.agree
        assert rec["checks"] == case.checks
