import pytest

from coringlab.exactla import QQ, Matrix
from coringlab.bimodule import LinearMap, space
from coringlab.wreath import (
    BimoduleTwistData,
    ModuleTwist,
    check_bimodule_twisting,
    check_functor_o_dual,
    check_l_wreath,
    check_left_module_twisting,
    check_rt_object,
    check_wreath,
    check_wreath_bimodule,
    check_wreath_module,
    dual_hat,
    dual_tilde,
    extract_module_twist,
    full_t_morphism_check,
    induced_twisted_action,
    l_wreath_product,
    r_action_matrices_check,
    regular_wreath_bimodule,
    sample_dual_maps,
    strict_morphism_check,
    twisted_tensor_product,
    wreath_product,
)
from coringlab.reports import PreconditionFailure


@pytest.fixture(scope="module")
def sign(corpus):
    rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = corpus.sign_flip_ttp
    return {
        "rext": rext, "text": text, "rmap": rmap, "rw": rw, "lw": lw,
        "prod": prod_ext, "alg_rep": alg_rep, "eta_rep": eta_rep,
    }


class TestTwistedTensorProduct:
    def test_sign_flip_everything_passes(self, sign):
        assert check_rt_object(sign["rw"].object).ok
        assert check_wreath(sign["rw"]).ok
        assert check_l_wreath(sign["lw"]).ok
        assert sign["alg_rep"].ok and sign["eta_rep"].ok

    def test_brute_force_associativity(self, sign):
        p = sign["prod"].total
        f = QQ
        count = 0
        for i in range(p.dim):
            for j in range(p.dim):
                for k in range(p.dim):
                    lhs = p.mul_vec(p.mult[i][j], {k: f.one()})
                    rhs = p.mul_vec({i: f.one()}, p.mult[j][k])
                    assert lhs == rhs
                    count += 1
        assert count == 64

    def test_anticommuting_pair(self, sign):
        p = sign["prod"].total
        f = QQ
        ix = p.labels.index("x(x)1")
        iy = p.labels.index("1(x)y")
        xy = p.mul_vec({ix: f.one()}, {iy: f.one()})
        yx = p.mul_vec({iy: f.one()}, {ix: f.one()})
        assert xy and xy == {k: f.neg(v) for k, v in yx.items()}

    def test_both_wreath_views_agree(self, sign):
        lprod, lrep = l_wreath_product(sign["lw"])
        assert lrep.ok
        p = sign["prod"].total
        assert lprod.mult == p.mult
        assert lprod.unit == p.unit

    def test_plain_flip_is_commutative(self, corpus):
        rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = \
            corpus.plain_flip_ttp
        assert check_wreath(rw).ok and check_l_wreath(lw).ok and alg_rep.ok
        p = prod_ext.total
        f = QQ
        for i in range(p.dim):
            for j in range(p.dim):
                assert p.mult[i][j] == p.mult[j][i]

    def test_violating_law_three_is_named(self, corpus):
        rext, text, bad = corpus.broken_ttp_map()
        with pytest.raises(PreconditionFailure) as exc:
            twisted_tensor_product(rext, text, bad)
        assert "ttp-3" in exc.value.report.equations()

    def test_associativity_iff_laws(self, corpus, sign):
        # the product built from the corrupted twist fails associativity
        rext, text, bad = corpus.broken_ttp_map()
        rb, tb = rext.t_bimodule, text.t_bimodule
        from coringlab.wreath import RTObject, Wreath
        from coringlab.bimodule import pipe
        obj = RTObject(text, rb, bad, name="bad")
        one_r = rext.total.unit_vector()
        eta = (pipe(space(tb)).insert_central(rb, one_r, 0)
               .done(space(rb, tb), name="eta"))
        mu_w = (pipe(space(rb, rb, tb)).apply(rext.mult_map(), 0, 2, [rb])
                .done(space(rb, tb), name="mu"))
        w = Wreath(obj, eta, mu_w)
        prod_ext, alg_rep, eta_rep = wreath_product(w)
        assert not (alg_rep.ok and check_wreath(w).ok)


class TestStrictMorphisms:
    def test_identity_and_zero(self, sign):
        o = sign["rw"].object
        rb = sign["rext"].t_bimodule
        assert strict_morphism_check(LinearMap.identity(rb), o, o).ok
        assert strict_morphism_check(LinearMap.zero(rb, rb), o, o).ok

    def test_swap_fails_with_witness(self, sign):
        o = sign["rw"].object
        rb = sign["rext"].t_bimodule
        swap = LinearMap(rb, rb, Matrix.from_rows(QQ, [[0, 1], [1, 0]]))
        rep = strict_morphism_check(swap, o, o)
        assert not rep.ok and rep.witnesses

    def test_equivalence_with_full_bilinearity_route(self, sign):
        o = sign["rw"].object
        rb = sign["rext"].t_bimodule
        candidates = [
            LinearMap.identity(rb),
            LinearMap.zero(rb, rb),
            LinearMap(rb, rb, Matrix.from_rows(QQ, [[0, 1], [1, 0]])),
            LinearMap(rb, rb, Matrix.from_rows(QQ, [[1, 0], [0, 0]])),
        ]
        for f in candidates:
            assert strict_morphism_check(f, o, o).ok == \
                full_t_morphism_check(f, o, o).ok


class TestWreathModules:
    def test_regular_actions(self, sign):
        w = sign["rw"]
        yobj, l_act, r_act = regular_wreath_bimodule(w)
        assert check_wreath_module(w, "right", yobj, r_act).ok
        assert check_wreath_module(w, "left", yobj, l_act).ok
        assert check_wreath_bimodule(w, yobj, l_act, r_act).ok

    def test_zero_action_fails_unit(self, sign):
        w = sign["rw"]
        yobj, l_act, r_act = regular_wreath_bimodule(w)
        zero = LinearMap.zero(r_act.domain, r_act.codomain)
        rep = check_wreath_module(w, "right", yobj, zero)
        assert not rep.ok and "wm-unit" in rep.equations()

    def test_one_sided_zero_fails_bimodule(self, sign):
        w = sign["rw"]
        yobj, l_act, r_act = regular_wreath_bimodule(w)
        zero = LinearMap.zero(l_act.domain, l_act.codomain)
        rep = check_wreath_bimodule(w, yobj, zero, r_act)
        assert not rep.ok


class TestModuleTwisting:
    def test_carrier_equals_first_ring(self, corpus):
        mt = corpus.module_twist_self
        rep = check_left_module_twisting(mt)
        assert rep.ok, rep.summary()

    def test_action_law_matches_product_law(self, corpus, sign):
        # with X = R and the product twist, the action compatibility law and
        # the second-ring multiplicativity law evaluate identical composites
        mt = corpus.module_twist_self
        rext, text, rmap = sign["rext"], sign["text"], sign["rmap"]
        rb, tb = rext.t_bimodule, text.t_bimodule
        from coringlab.bimodule import pipe
        lhs_mt = (
            pipe(space(tb, rb, rb))
            .apply(mt.l_x, 1, 2, [rb])
            .apply(mt.twist, 0, 2, [rb, tb])
            .done(name="mt")
        )
        lhs_ttp = (
            pipe(space(tb, rb, rb))
            .apply(rext.mult_map(), 1, 2, [rb])
            .apply(rmap, 0, 2, [rb, tb])
            .done(name="ttp")
        )
        assert lhs_mt.matrix == lhs_ttp.matrix

    def test_broken_unit_law(self, corpus, sign):
        rmap = sign["rmap"]
        bad = LinearMap(
            rmap.domain, rmap.codomain,
            rmap.matrix + Matrix.from_entries(QQ, 4, 4, {(0, 0): QQ.one()}))
        mt = ModuleTwist(sign["rw"], sign["rext"],
                         sign["rext"].t_bimodule,
                         sign["rext"].mult_map(), bad)
        rep = check_left_module_twisting(mt)
        assert not rep.ok and "mt-unit" in rep.equations()

    def test_induced_action_and_inclusion(self, corpus, sign):
        mt = corpus.module_twist_self
        rep = r_action_matrices_check(
            mt, sign["text"].t_bimodule, sign["text"].mult_map(),
            sign["prod"].total, sign["rw"].rt_carrier())
        assert rep.ok, rep.summary()

    def test_converse_extraction(self, corpus, sign):
        mt = corpus.module_twist_self
        text = sign["text"]
        tb = text.t_bimodule
        rb = sign["rext"].t_bimodule
        from coringlab.bimodule import pipe
        shaped = (
            pipe(space(rb, tb, rb, tb))
            .apply(mt.twist, 1, 2, [rb, tb])
            .apply(mt.l_x, 0, 2, [rb])
            .apply(text.mult_map(), 1, 2, [tb])
            .done(space(rb, tb), name="shaped-action")
        )
        extracted = extract_module_twist(shaped, sign["rw"], sign["rext"], rb)
        assert extracted.matrix == mt.twist.matrix
        mt2 = ModuleTwist(sign["rw"], sign["rext"], rb, mt.l_x, extracted)
        assert check_left_module_twisting(mt2).ok


class TestBimoduleTwisting:
    def _data(self, corpus, sign, v_twist=None):
        mt = corpus.module_twist_self
        rmap = sign["rmap"]
        tw = v_twist if v_twist is not None else LinearMap(
            rmap.domain, rmap.codomain, rmap.matrix, "vtw")
        return BimoduleTwistData(
            mt, r_x=sign["rext"].mult_map(),
            v_carrier=sign["text"].t_bimodule,
            l_v=sign["text"].mult_map(), r_v=sign["text"].mult_map(),
            v_twist=tw)

    def test_paired_instance_commutes(self, corpus, sign):
        rep = check_bimodule_twisting(self._data(corpus, sign))
        assert rep.ok, rep.summary()

    def test_perturbed_twist_fails(self, corpus, sign):
        rmap = sign["rmap"]
        bad = LinearMap(
            rmap.domain, rmap.codomain,
            rmap.matrix + Matrix.from_entries(QQ, 4, 4, {(2, 2): QQ.one()}),
            "vbad")
        rep = check_bimodule_twisting(self._data(corpus, sign, bad))
        assert not rep.ok and rep.witnesses


class TestDualFunctors:
    def test_comparison_on_regular_module(self, sign):
        w = sign["rw"]
        yobj, l_act, _ = regular_wreath_bimodule(w)
        rep = check_functor_o_dual(w, yobj, l_act)
        assert rep.ok, rep.summary()

    def test_dual_transposes_round_trip(self, sign):
        o = sign["rw"].object
        tb = sign["text"].t_bimodule
        samples = sample_dual_maps(o, tb, sign["text"].mult_map(),
                                   count=5, seed=17)
        assert len(samples) == 5
        for g in samples:
            gh = dual_hat(o, g)
            assert dual_tilde(o, gh, tb).matrix == g.matrix
