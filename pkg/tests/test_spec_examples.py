"""Remaining small worked examples: unit objects on the ring side, tensor
maps on a one-dimensional quotient, degenerate inputs."""

from coringlab.exactla import QQ, Matrix
from coringlab.algebra import truncated_poly_algebra
from coringlab.bimodule import (
    Bimodule,
    LinearMap,
    space,
    tensor_maps,
    tensor_over,
    unit_iso,
)
from coringlab.coring import zero_bimodule
from coringlab.cowreath import check_cowreath, entwining_lift_cowreath, flip_cowreath
from coringlab.wreath import RTObject, check_rt_object, check_wreath_bimodule, identity_rt_object


def scalar_bimodule(alg, left_scalars, right_scalars, name="M"):
    f = alg.field
    left = [Matrix.from_entries(f, 1, 1, {(0, 0): f.parse(c)})
            for c in left_scalars]
    right = [Matrix.from_entries(f, 1, 1, {(0, 0): f.parse(c)})
             for c in right_scalars]
    return Bimodule(alg, alg, 1, left, right, name=name)


def test_tensor_maps_on_one_dimensional_quotient():
    a = truncated_poly_algebra(QQ, 2)
    m = scalar_bimodule(a, [1, 0], [1, 0])
    tq = tensor_over(a, m, m)
    assert tq.dim == 1
    tm = tensor_maps(LinearMap.identity(m), LinearMap.identity(m), tq, tq)
    assert tm.matrix == Matrix.identity(QQ, 1)


def test_unit_iso_on_scalar_module_over_group_algebra(corpus):
    m = scalar_bimodule(corpus.z2, [1, 1], [1, 1])
    for side in ("left", "right"):
        iso, inv = unit_iso(side, m)
        assert iso.matrix == Matrix.identity(QQ, 1) or iso.matrix.rows == 1
        assert iso.matrix @ inv.matrix == Matrix.identity(QQ, 1)


def test_flip_cowreath_with_broken_counit_fails(corpus):
    w = flip_cowreath(corpus.c2, corpus.broken_coalgebra)
    rep = check_cowreath(w)
    assert not rep.ok and rep.witnesses


def test_lift_of_invalid_cowreath_fails(corpus):
    lifted = entwining_lift_cowreath(corpus.flip_entwining,
                                     corpus.broken_cw_delta)
    rep = check_cowreath(lifted)
    assert not rep.ok and rep.witnesses


def test_identity_rt_object(corpus):
    rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = \
        corpus.sign_flip_ttp
    ident = identity_rt_object(text)
    rep = check_rt_object(ident)
    assert rep.ok, rep.summary()


def test_zero_dimensional_wreath_bimodule_is_vacuous(corpus):
    rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = \
        corpus.sign_flip_ttp
    tb = text.t_bimodule
    z = zero_bimodule(text.base)
    twist = LinearMap(space(tb, z).quotient, space(z, tb).quotient,
                      Matrix.zeros(QQ, 0, 0))
    yobj = RTObject(text, z, twist, name="0")
    rb = rw.object.carrier
    l_act = LinearMap(space(rb, z, tb).quotient, space(z, tb).quotient,
                      Matrix.zeros(QQ, 0, 0))
    r_act = LinearMap(space(z, rb, tb).quotient, space(z, tb).quotient,
                      Matrix.zeros(QQ, 0, 0))
    rep = check_wreath_bimodule(rw, yobj, l_act, r_act)
    assert rep.ok, rep.summary()
