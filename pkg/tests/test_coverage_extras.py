"""Checks for the less-travelled operations: the mirror category's morphism
product, left comodules over a cowreath, induced module structures, and the
conjugacy of unit-object tensoring."""

import pytest

from coringlab.exactla import QQ, Matrix
from coringlab.bimodule import (
    LinearMap,
    bilinearity_report,
    check_bimodule,
    pipe,
    regular_bimodule,
    space,
    unit_iso,
)
from coringlab.coring import flip_map, grouplike_coalgebra
from coringlab.cowreath import CowComodule, check_cow_comodule, check_cow_comodule_morphism
from coringlab.rcat import (
    LMorphism,
    LObject,
    canonical_c_object,
    check_l_morphism,
    check_r_object,
    identity_r_object,
    l_tensor_morphisms,
    l_tensor_objects,
    r_tensor_objects,
)
from coringlab.wreath import induced_t_bimodule, pt_bimodule


class TestMirrorMorphisms:
    @pytest.fixture()
    def lobj(self, corpus):
        d = grouplike_coalgebra(QQ, 2, name="Dm")
        return LObject(corpus.c2, d.carrier,
                       flip_map(d.carrier, corpus.c2.carrier))

    def test_identity_is_a_morphism(self, lobj):
        assert check_l_morphism(LMorphism.identity(lobj)).ok

    def test_identity_tensor_identity(self, lobj):
        t = l_tensor_morphisms(LMorphism.identity(lobj),
                               LMorphism.identity(lobj))
        assert t.map.matrix == Matrix.identity(QQ, t.src.lc.dim)
        assert check_l_morphism(t).ok

    def test_noncolinear_map_flagged(self, lobj):
        perm = Matrix.from_entries(
            QQ, lobj.lc.dim, lobj.lc.dim,
            {(0, 1): QQ.one(), (1, 0): QQ.one(),
             (2, 3): QQ.one(), (3, 2): QQ.one()})
        m = LMorphism(lobj, lobj,
                      LinearMap(lobj.lc.quotient, lobj.lc.quotient, perm))
        assert not check_l_morphism(m).ok


class TestLeftCowreathComodules:
    def test_self_left_comodule_via_delta(self, corpus):
        # the cowreath coacting on itself from the left reuses delta
        w = corpus.flip_cw
        x = CowComodule("left", w, w.object, w.delta, name="self-left")
        rep = check_cow_comodule(x)
        assert rep.ok, rep.summary()

    def test_left_morphism_identity(self, corpus):
        w = corpus.flip_cw
        x = CowComodule("left", w, w.object, w.delta)
        ident = LinearMap.identity(x.coaction.domain)
        assert check_cow_comodule_morphism(ident, x, x).ok

    def test_broken_left_coaction(self, corpus):
        w = corpus.flip_cw
        bad = CowComodule("left", w, w.object,
                          LinearMap.zero(w.delta.domain, w.delta.codomain))
        rep = check_cow_comodule(bad)
        assert not rep.ok and "comodule-counit" in rep.equations()


class TestInducedTBimodule:
    def test_regular_target(self, corpus):
        rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = \
            corpus.sign_flip_ttp
        o = rw.object
        tb = text.t_bimodule
        # X = T with multiplication on both sides
        m = induced_t_bimodule(o, tb, text.mult_map(), text.mult_map())
        assert check_bimodule(m).ok
        assert m.left_algebra is text.total

    def test_pt_bimodule_passes(self, corpus):
        rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = \
            corpus.sign_flip_ttp
        assert check_bimodule(pt_bimodule(rw.object)).ok


class TestUnitObjectConjugacy:
    def test_tensoring_with_the_unit_is_conjugate(self, corpus):
        can = canonical_c_object(corpus.c2)
        ident = identity_r_object(corpus.c2)
        oi = r_tensor_objects(can, ident)
        C = corpus.c2.carrier
        M = can.carrier
        areg = regular_bimodule(corpus.c2.base)
        u_dom = (
            pipe(space(C, oi.carrier)).refine(1).absorb_left(2)
            .done(space(C, M), name="u-dom")
        )
        u_cod = (
            pipe(space(oi.carrier, C)).refine(0).absorb_left(1)
            .done(space(M, C), name="u-cod")
        )
        assert u_cod.after(oi.twist).matrix == can.twist.after(u_dom).matrix

    def test_canonical_square_passes(self, corpus):
        can = canonical_c_object(corpus.c2)
        assert check_r_object(r_tensor_objects(can, can)).ok

    def test_unit_iso_is_bilinear(self, corpus):
        reg = regular_bimodule(corpus.z2)
        for side in ("left", "right"):
            iso, inv = unit_iso(side, reg)
            assert bilinearity_report(iso).ok
            assert bilinearity_report(inv).ok


class TestEntwiningLawSplit:
    def test_split_equation_by_equation(self, corpus):
        from coringlab.entwine import check_entwining, entwining_r_object
        from coringlab.rcat import check_r_object as rck
        for e in (corpus.flip_entwining, corpus.dk_entwining,
                  corpus.broken_entwining):
            full = set(check_entwining(e).equations())
            obj = rck(entwining_r_object(e))
            # the comultiplication/counit half fails exactly when the twist
            # object laws fail
            assert bool(full & {"entwine-comult", "entwine-counit"}) == \
                (not obj.ok)
