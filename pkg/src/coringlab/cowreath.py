"""Cowreaths: coalgebras in the twist-object category of a coring.

A cowreath bundles a twist object (M, m) with bicolinear structure maps
xi: C (x) M -> C and delta: C (x) M -> C (x) M (x) M subject to three
diagrams (a counit section law, compatibility of xi with the twist, and
coassociativity).  The same data can be checked through the abstract
coalgebra equations obtained by unfolding the categorical product of
morphisms; both routes are implemented so their equivalence is testable.

The product construction turns C (x) M into a coring over the base; the
comodule categories, the induction functors and the adjunction transposes
live here as well.
"""

from __future__ import annotations

from .algebra import multiplication_matrix
from .bimodule import (
    LinearMap,
    MapSolver,
    Matrix,
    bilinearity_report,
    pipe,
    regroup,
    regular_bimodule,
    sample_solutions,
    space,
    tensor_over,
)
from .coring import Comodule, Coring, compare_maps, flip_map
from .entwine import EntwiningStructure, entwined_coring, lift_r_object, _normal_form_matrix
from .rcat import LObject, RMorphism, RObject, check_l_object, check_r_object, r_tensor_objects
from .reports import InputError, PreconditionFailure, Report


class Cowreath:
    """A twist object with counit-like xi and comultiplication-like delta."""

    def __init__(self, object: RObject, xi: LinearMap, delta: LinearMap,
                 name=None):
        self.object = object
        self.xi = xi
        self.delta = delta
        self.name = name or f"cowreath({object.name})"
        C = object.coring.carrier
        M = object.carrier
        if xi.domain.dim != space(C, M).dim or xi.codomain.dim != C.dim:
            raise InputError(f"{self.name}: xi must map C(x)M to C")
        if (delta.domain.dim != space(C, M).dim
                or delta.codomain.dim != space(C, M, M).dim):
            raise InputError(f"{self.name}: delta must map C(x)M to C(x)M(x)M")

    @property
    def coring(self):
        return self.object.coring

    def __repr__(self):
        return f"Cowreath({self.name})"


def _structure_colinearity(w: Cowreath, rep: Report):
    """xi and delta are morphisms in the category (bicolinear maps)."""
    c = w.coring
    C, M = c.carrier, w.object.carrier
    tw = w.object.twist
    rep.extend(bilinearity_report(w.xi, "xi"))
    rep.extend(bilinearity_report(w.delta, "delta"))

    lhs = (
        pipe(space(C, M)).apply(w.xi, 0, 2, [C])
        .apply(c.comult, 0, 1, [C, C]).done(name="comult.xi")
    )
    rhs = (
        pipe(space(C, M)).apply(c.comult, 0, 1, [C, C])
        .apply(w.xi, 1, 2, [C]).done(name="(C x xi).(comult x M)")
    )
    compare_maps(rep, "xi-left-colinear", lhs, rhs)
    rhs2 = (
        pipe(space(C, M)).apply(c.comult, 0, 1, [C, C])
        .apply(tw, 1, 2, [M, C]).apply(w.xi, 0, 2, [C])
        .done(name="(xi x C).(C x tw).(comult x M)")
    )
    compare_maps(rep, "xi-right-colinear", lhs, rhs2)

    dl = (
        pipe(space(C, M)).apply(w.delta, 0, 2, [C, M, M])
        .apply(c.comult, 0, 1, [C, C]).done(name="(comult x M x M).delta")
    )
    dr = (
        pipe(space(C, M)).apply(c.comult, 0, 1, [C, C])
        .apply(w.delta, 1, 2, [C, M, M]).done(name="(C x delta).(comult x M)")
    )
    compare_maps(rep, "delta-left-colinear", dl, dr)
    dl2 = (
        pipe(space(C, M)).apply(w.delta, 0, 2, [C, M, M])
        .apply(c.comult, 0, 1, [C, C])
        .apply(tw, 1, 2, [M, C])
        .apply(tw, 2, 2, [M, C])
        .done(name="(C x tw2).(comult x MM).delta")
    )
    dr2 = (
        pipe(space(C, M)).apply(c.comult, 0, 1, [C, C])
        .apply(tw, 1, 2, [M, C])
        .apply(w.delta, 0, 2, [C, M, M])
        .done(name="(delta x C).(C x tw).(comult x M)")
    )
    compare_maps(rep, "delta-right-colinear", dl2, dr2)


def check_cowreath(w: Cowreath) -> Report:
    """The three defining diagrams, after bicolinearity of xi and delta."""
    rep = Report(f"cowreath {w.name}")
    rep.extend(check_r_object(w.object))
    _structure_colinearity(w, rep)
    c = w.coring
    C, M = c.carrier, w.object.carrier
    tw = w.object.twist

    d1 = (
        pipe(space(C, M)).apply(w.delta, 0, 2, [C, M, M])
        .apply(w.xi, 0, 2, [C]).done(name="(xi x M).delta")
    )
    compare_maps(rep, "cw-counit", d1,
                 LinearMap.identity(space(C, M).quotient))

    d2 = (
        pipe(space(C, M)).apply(w.delta, 0, 2, [C, M, M])
        .apply(tw, 0, 2, [M, C])
        .apply(w.xi, 1, 2, [C])
        .done(name="(M x xi).(tw x M).delta")
    )
    compare_maps(rep, "cw-twist", d2, tw)

    lhs = (
        pipe(space(C, M)).apply(w.delta, 0, 2, [C, M, M])
        .apply(tw, 0, 2, [M, C])
        .apply(w.delta, 1, 2, [C, M, M])
        .done(name="(M x delta).(tw x M).delta")
    )
    rhs = (
        pipe(space(C, M)).apply(w.delta, 0, 2, [C, M, M])
        .apply(w.delta, 0, 2, [C, M, M])
        .apply(tw, 0, 2, [M, C])
        .done(name="(tw x M x M).(delta x M).delta")
    )
    compare_maps(rep, "cw-coassoc", lhs, rhs)
    return rep


def check_cowreath_abstract(w: Cowreath) -> Report:
    """The coalgebra equations written through the categorical product of
    morphisms, an independent route to the same property."""
    rep = Report(f"cowreath {w.name} (abstract)")
    rep.extend(check_r_object(w.object))
    _structure_colinearity(w, rep)
    c = w.coring
    C, M = c.carrier, w.object.carrier
    tw = w.object.twist
    areg = regular_bimodule(c.base)
    ident = LinearMap.identity(space(C, M).quotient)

    e1 = (
        pipe(space(C, M))
        .apply(w.delta, 0, 2, [C, M, M])
        .apply(c.comult, 0, 1, [C, C])
        .apply(tw, 1, 2, [M, C])
        .apply(w.xi, 2, 2, [C])
        .apply(c.counit, 2, 1, [areg])
        .absorb_left(2)
        .done(name="abstract-counit-1")
    )
    compare_maps(rep, "cw-abstract-counit-1", e1, ident)

    e2 = (
        pipe(space(C, M))
        .apply(w.delta, 0, 2, [C, M, M])
        .apply(c.comult, 0, 1, [C, C])
        .apply(w.xi, 1, 2, [C])
        .apply(c.counit, 1, 1, [areg])
        .absorb_right(1)
        .done(name="abstract-counit-2")
    )
    compare_maps(rep, "cw-abstract-counit-2", e2, ident)

    lhs = (
        pipe(space(C, M))
        .apply(w.delta, 0, 2, [C, M, M])
        .apply(c.comult, 0, 1, [C, C])
        .apply(w.delta, 1, 2, [C, M, M])
        .apply(tw, 1, 2, [M, C])
        .apply(tw, 2, 2, [M, C])
        .apply(c.counit, 3, 1, [areg])
        .absorb_left(3)
        .done(name="abstract-coassoc-lhs")
    )
    rhs = (
        pipe(space(C, M))
        .apply(w.delta, 0, 2, [C, M, M])
        .apply(c.comult, 0, 1, [C, C])
        .apply(tw, 1, 2, [M, C])
        .apply(w.delta, 2, 2, [C, M, M])
        .apply(c.counit, 2, 1, [areg])
        .absorb_left(2)
        .done(name="abstract-coassoc-rhs")
    )
    compare_maps(rep, "cw-abstract-coassoc", lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# stock cowreaths


def unit_cowreath(c: Coring) -> Cowreath:
    """The base algebra with its unit twist, xi and delta the unit maps."""
    from .rcat import identity_r_object
    obj = identity_r_object(c)
    C = c.carrier
    areg = obj.carrier
    xi = pipe(space(C, areg)).absorb_left(1).done(space(C), name="xi")
    delta = (
        pipe(space(C, areg))
        .insert_central(areg, c.base.unit_vector(), 2)
        .done(space(C, areg, areg), name="delta")
    )
    return Cowreath(obj, xi, delta, name=f"unit({c.name})")


def flip_cowreath(c: Coring, d: Coring, name=None) -> Cowreath:
    """Coalgebra D over coalgebra C through the flip, xi = C (x) eps_D,
    delta = C (x) comult_D."""
    C, D = c.carrier, d.carrier
    obj = RObject(c, D, flip_map(C, D), name=f"({d.name},flip)")
    kreg = regular_bimodule(c.base)
    xi = (
        pipe(space(C, D)).apply(d.counit, 1, 1, [kreg]).absorb_left(1)
        .done(space(C), name="xi")
    )
    delta = (
        pipe(space(C, D)).apply(d.comult, 1, 1, [D, D])
        .done(space(C, D, D), name="delta")
    )
    return Cowreath(obj, xi, delta, name=name or f"flip({c.name},{d.name})")


class LCowreath:
    """Left-handed cowreath data: an object of the mirror category with
    structure maps xi: L (x) D -> D and delta: L (x) D -> L (x) L (x) D."""

    def __init__(self, lobject: LObject, xi: LinearMap, delta: LinearMap,
                 name=None):
        self.lobject = lobject
        self.xi = xi
        self.delta = delta
        self.name = name or f"lcowreath({lobject.name})"

    @property
    def coring(self):
        return self.lobject.coring


def check_l_cowreath(w: LCowreath) -> Report:
    rep = Report(f"left cowreath {w.name}")
    rep.extend(check_l_object(w.lobject))
    d = w.coring
    D, L = d.carrier, w.lobject.carrier
    tw = w.lobject.twist
    rep.extend(bilinearity_report(w.xi, "xi"))
    rep.extend(bilinearity_report(w.delta, "delta"))

    # colinearity for rho = L (x) comult, lam = (tw x D).(L x comult)
    xr_l = (
        pipe(space(L, D)).apply(w.xi, 0, 2, [D])
        .apply(d.comult, 0, 1, [D, D]).done(name="comult.xi")
    )
    xr_r = (
        pipe(space(L, D)).apply(d.comult, 1, 1, [D, D])
        .apply(w.xi, 0, 2, [D]).done(name="(xi x D).(L x comult)")
    )
    compare_maps(rep, "xi-right-colinear", xr_l, xr_r)
    xl_r = (
        pipe(space(L, D)).apply(d.comult, 1, 1, [D, D])
        .apply(tw, 0, 2, [D, L])
        .apply(w.xi, 1, 2, [D])
        .done(name="(D x xi).(tw x D).(L x comult)")
    )
    compare_maps(rep, "xi-left-colinear", xr_l, xl_r)
    dr_l = (
        pipe(space(L, D)).apply(w.delta, 0, 2, [L, L, D])
        .apply(d.comult, 2, 1, [D, D]).done(name="(LL x comult).delta")
    )
    dr_r = (
        pipe(space(L, D)).apply(d.comult, 1, 1, [D, D])
        .apply(w.delta, 0, 2, [L, L, D]).done(name="(delta x D).(L x comult)")
    )
    compare_maps(rep, "delta-right-colinear", dr_l, dr_r)
    dl_l = (
        pipe(space(L, D)).apply(w.delta, 0, 2, [L, L, D])
        .apply(d.comult, 2, 1, [D, D])
        .apply(tw, 1, 2, [D, L])
        .apply(tw, 0, 2, [D, L])
        .done(name="(tw2 x D).(LL x comult).delta")
    )
    dl_r = (
        pipe(space(L, D)).apply(d.comult, 1, 1, [D, D])
        .apply(tw, 0, 2, [D, L])
        .apply(w.delta, 1, 2, [L, L, D])
        .done(name="(D x delta).(tw x D).(L x comult)")
    )
    compare_maps(rep, "delta-left-colinear", dl_l, dl_r)

    d1 = (
        pipe(space(L, D)).apply(w.delta, 0, 2, [L, L, D])
        .apply(w.xi, 1, 2, [D]).done(name="(L x xi).delta")
    )
    compare_maps(rep, "cw-counit", d1, LinearMap.identity(space(L, D).quotient))
    d2 = (
        pipe(space(L, D)).apply(w.delta, 0, 2, [L, L, D])
        .apply(tw, 1, 2, [D, L])
        .apply(w.xi, 0, 2, [D])
        .done(name="(xi x L).(L x tw).delta")
    )
    compare_maps(rep, "cw-twist", d2, tw)
    lhs = (
        pipe(space(L, D)).apply(w.delta, 0, 2, [L, L, D])
        .apply(tw, 1, 2, [D, L])
        .apply(w.delta, 0, 2, [L, L, D])
        .done(name="(delta x L).(L x tw).delta")
    )
    rhs = (
        pipe(space(L, D)).apply(w.delta, 0, 2, [L, L, D])
        .apply(w.delta, 1, 2, [L, L, D])
        .apply(tw, 2, 2, [D, L])
        .done(name="(LL x tw).(L x delta).delta")
    )
    compare_maps(rep, "cw-coassoc", lhs, rhs)
    return rep


def coring_distributive_cowreath(c: Coring, d: Coring, dmap: LinearMap,
                                 name=None):
    """A mixed distributive law between two corings over the same base gives
    a right cowreath on D over C and left cowreath data on C over D.

    Raises PreconditionFailure naming the violated law dl-1..dl-4.
    """
    C, D = c.carrier, d.carrier
    rep = Report("distributive law")
    rep.extend(bilinearity_report(dmap, "dmap"))
    areg = regular_bimodule(c.base)

    l1 = (
        pipe(space(C, D)).apply(dmap, 0, 2, [D, C])
        .apply(c.counit, 1, 1, [areg]).absorb_left(1).done(name="lhs")
    )
    r1 = (
        pipe(space(C, D)).apply(c.counit, 0, 1, [areg]).absorb_right(0)
        .done(name="rhs")
    )
    compare_maps(rep, "dl-1", l1, r1)
    l2 = (
        pipe(space(C, D)).apply(dmap, 0, 2, [D, C])
        .apply(c.comult, 1, 1, [C, C]).done(name="lhs")
    )
    r2 = (
        pipe(space(C, D)).apply(c.comult, 0, 1, [C, C])
        .apply(dmap, 1, 2, [D, C])
        .apply(dmap, 0, 2, [D, C])
        .done(name="rhs")
    )
    compare_maps(rep, "dl-2", l2, r2)
    l3 = (
        pipe(space(C, D)).apply(dmap, 0, 2, [D, C])
        .apply(d.counit, 0, 1, [areg]).absorb_right(0).done(name="lhs")
    )
    r3 = (
        pipe(space(C, D)).apply(d.counit, 1, 1, [areg]).absorb_left(1)
        .done(name="rhs")
    )
    compare_maps(rep, "dl-3", l3, r3)
    l4 = (
        pipe(space(C, D)).apply(dmap, 0, 2, [D, C])
        .apply(d.comult, 0, 1, [D, D]).done(name="lhs")
    )
    r4 = (
        pipe(space(C, D)).apply(d.comult, 1, 1, [D, D])
        .apply(dmap, 0, 2, [D, C])
        .apply(dmap, 1, 2, [D, C])
        .done(name="rhs")
    )
    compare_maps(rep, "dl-4", l4, r4)
    if not rep.ok:
        raise PreconditionFailure(rep)

    obj = RObject(c, D, dmap, name=f"({d.name},{dmap.name})")
    xi = (
        pipe(space(C, D)).apply(d.counit, 1, 1, [areg]).absorb_left(1)
        .done(space(C), name="xi")
    )
    delta = (
        pipe(space(C, D)).apply(d.comult, 1, 1, [D, D])
        .done(space(C, D, D), name="delta")
    )
    right = Cowreath(obj, xi, delta, name=name or f"dl({c.name},{d.name})")

    lobj = LObject(d, C, dmap, name=f"({c.name},{dmap.name})")
    xi_l = (
        pipe(space(C, D)).apply(c.counit, 0, 1, [areg]).absorb_right(0)
        .done(space(D), name="xi-left")
    )
    delta_l = (
        pipe(space(C, D)).apply(c.comult, 0, 1, [C, C])
        .done(space(C, C, D), name="delta-left")
    )
    left = LCowreath(lobj, xi_l, delta_l, name=f"ldl({c.name},{d.name})")
    return right, left


def entwining_lift_cowreath(e: EntwiningStructure, n: Cowreath,
                            name=None) -> Cowreath:
    """Lift a cowreath over the coalgebra to one over the induced coring."""
    cor = entwined_coring(e)
    A = e.algebra
    f = A.field
    da = A.dim
    dc = e.coalgebra.carrier.dim
    dn = n.object.carrier.dim
    obj = lift_r_object(e, n.object)
    M = obj.carrier
    nf = _normal_form_matrix(e, cor.carrier, M, dn)
    psi = e.psi.matrix
    mu = multiplication_matrix(A)
    ia = Matrix.identity(f, da)
    src = space(cor.carrier, M)

    # xi-tilde: normal form, A x xi x A, A x psi, mu x C
    xi_flat = ia.kron(n.xi.matrix).kron(ia)
    step = ia.kron(psi)
    final = mu.kron(Matrix.identity(f, dc))
    xi_mat = final @ step @ xi_flat @ nf @ src.section
    xi = LinearMap(src.quotient, cor.carrier, xi_mat, name="xi-lift")

    # delta-tilde: normal form, A x delta x A, then the identification
    # sending a(x)c(x)u(x)v(x)b to (a(x)c) (x) (1(x)u(x)1) (x) (1(x)v(x)b)
    delta_flat = ia.kron(n.delta.matrix).kron(ia)
    dm = M.dim
    dcc = da * dc
    emb_entries = {}
    for a in range(da):
        for q in range(dc):
            cidx = a * dc + q
            for u in range(dn):
                for v in range(dn):
                    for b in range(da):
                        col = (((a * dc + q) * dn + u) * dn + v) * da + b
                        for k1, w1 in A.unit.items():
                            for k2, w2 in A.unit.items():
                                for k3, w3 in A.unit.items():
                                    m1 = (k1 * dn + u) * da + k2
                                    m2 = (k3 * dn + v) * da + b
                                    row = (cidx * dm + m1) * dm + m2
                                    key = (row, col)
                                    val = f.mul(w1, f.mul(w2, w3))
                                    emb_entries[key] = f.add(
                                        emb_entries.get(key, f.zero()), val)
    embed = Matrix.from_entries(f, dcc * dm * dm, dcc * dn * dn * da,
                                emb_entries)
    dst = space(cor.carrier, M, M)
    delta_mat = dst.project @ embed @ delta_flat @ nf @ src.section
    delta = LinearMap(src.quotient, dst.quotient, delta_mat, name="delta-lift")
    return Cowreath(obj, xi, delta, name=name or f"lift({n.name})")


# ---------------------------------------------------------------------------
# the product coring


def cowreath_product(w: Cowreath, name=None):
    """The coring on C (x) M, plus the report that xi is a coring morphism
    from it onto C."""
    c = w.coring
    C, M = c.carrier, w.object.carrier
    carrier = tensor_over(C.right_algebra, C, M)
    target = space(carrier, carrier)
    comult = (
        pipe(space(carrier))
        .refine(0)
        .apply(c.comult, 0, 1, [C, C])
        .apply(w.delta, 1, 2, [C, M, M])
        .apply(w.object.twist, 1, 2, [M, C])
        .done(target, name="comult")
    )
    areg = regular_bimodule(c.base)
    counit = (
        pipe(space(carrier))
        .refine(0)
        .apply(w.xi, 0, 2, [C])
        .apply(c.counit, 0, 1, [areg])
        .done(space(areg), name="counit")
    )
    product = Coring(c.base, carrier, comult, counit,
                     name=name or f"{c.name}(x){w.object.name}")
    xi_as_map = LinearMap(carrier, C, w.xi.matrix, name="xi")
    from .coring import check_coring_morphism
    morph = check_coring_morphism(xi_as_map, product, c,
                                  name=f"xi as coring morphism ({w.name})")
    return product, morph


# ---------------------------------------------------------------------------
# comodules over a cowreath


class CowComodule:
    """A right or left comodule over a cowreath, in unreduced form."""

    def __init__(self, side: str, cowreath: Cowreath, object: RObject,
                 coaction: LinearMap, name=None):
        if side not in ("left", "right"):
            raise InputError("side must be 'left' or 'right'")
        self.side = side
        self.cowreath = cowreath
        self.object = object
        self.coaction = coaction
        self.name = name or f"{object.name}"
        C = cowreath.coring.carrier
        X = object.carrier
        M = cowreath.object.carrier
        target = space(C, X, M) if side == "right" else space(C, M, X)
        if (coaction.domain.dim != space(C, X).dim
                or coaction.codomain.dim != target.dim):
            raise InputError(f"cow comodule {self.name}: coaction shape")


def check_cow_comodule(x: CowComodule) -> Report:
    rep = Report(f"cowreath comodule {x.name} ({x.side})")
    w = x.cowreath
    c = w.coring
    C = c.carrier
    X = x.object.carrier
    M = w.object.carrier
    xt = x.object.twist
    mt = w.object.twist
    rep.extend(check_r_object(x.object))
    rep.extend(bilinearity_report(x.coaction, "coaction"))

    # the coaction is a morphism into the product object
    prod = r_tensor_objects(x.object, w.object)
    tshape = space(C, X, M) if x.side == "right" else space(C, M, X)
    if x.side == "right":
        conv = regroup(tshape, space(C, prod.carrier))
        mor = RMorphism(x.object, prod, conv.after(x.coaction),
                        name="coaction")
        from .rcat import check_r_morphism
        rep.extend(check_r_morphism(mor))
        d1 = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, X, M])
            .apply(xt, 0, 2, [X, C])
            .apply(w.xi, 1, 2, [C])
            .done(name="(X x xi).(xt x M).rho")
        )
        compare_maps(rep, "comodule-counit", d1, xt)
        lhs = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, X, M])
            .apply(x.coaction, 0, 2, [C, X, M])
            .apply(xt, 0, 2, [X, C])
            .done(name="(xt x M x M).(rho x M).rho")
        )
        rhs = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, X, M])
            .apply(xt, 0, 2, [X, C])
            .apply(w.delta, 1, 2, [C, M, M])
            .done(name="(X x delta).(xt x M).rho")
        )
        compare_maps(rep, "comodule-coassoc", lhs, rhs)
    else:
        prod_l = r_tensor_objects(w.object, x.object)
        conv = regroup(tshape, space(C, prod_l.carrier))
        mor = RMorphism(x.object, prod_l, conv.after(x.coaction),
                        name="coaction")
        from .rcat import check_r_morphism
        rep.extend(check_r_morphism(mor))
        d1 = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, M, X])
            .apply(w.xi, 0, 2, [C])
            .done(name="(xi x X).lam")
        )
        compare_maps(rep, "comodule-counit", d1,
                     LinearMap.identity(space(C, X).quotient))
        lhs = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, M, X])
            .apply(w.delta, 0, 2, [C, M, M])
            .apply(mt, 0, 2, [M, C])
            .done(name="(tw x M x X).(delta x X).lam")
        )
        rhs = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, M, X])
            .apply(mt, 0, 2, [M, C])
            .apply(x.coaction, 1, 2, [C, M, X])
            .done(name="(M x lam).(tw x X).lam")
        )
        compare_maps(rep, "comodule-coassoc", lhs, rhs)
    return rep


def check_cow_comodule_morphism(f: LinearMap, x: CowComodule,
                                y: CowComodule) -> Report:
    """f: C (x) X -> C (x) X' commuting with the coactions."""
    rep = Report(f"cowreath comodule morphism {f.name}")
    w = x.cowreath
    C = w.coring.carrier
    X, Y = x.object.carrier, y.object.carrier
    M = w.object.carrier
    from .rcat import check_r_morphism
    rep.extend(check_r_morphism(RMorphism(x.object, y.object, f)))
    if x.side == "right":
        lhs = (
            pipe(space(C, X)).apply(f, 0, 2, [C, Y])
            .apply(y.coaction, 0, 2, [C, Y, M])
            .done(name="rho'.f")
        )
        rhs = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, X, M])
            .apply(f, 0, 2, [C, Y])
            .done(name="(f x M).rho")
        )
        compare_maps(rep, "comodule-morphism", lhs, rhs)
    else:
        mt = w.object.twist
        lhs = (
            pipe(space(C, X)).apply(f, 0, 2, [C, Y])
            .apply(y.coaction, 0, 2, [C, M, Y])
            .apply(mt, 0, 2, [M, C])
            .done(name="(tw x Y).lam'.f")
        )
        rhs = (
            pipe(space(C, X)).apply(x.coaction, 0, 2, [C, M, X])
            .apply(mt, 0, 2, [M, C])
            .apply(f, 1, 2, [C, Y])
            .done(name="(M x f).(tw x X).lam")
        )
        compare_maps(rep, "comodule-morphism", lhs, rhs)
    return rep


def cow_comodule_self(w: Cowreath) -> CowComodule:
    """(M, tw) as a right comodule over itself via delta."""
    return CowComodule("right", w, w.object, w.delta, name=f"{w.name} self")


def cow_comodule_square(w: Cowreath) -> CowComodule:
    """M (x) M with the composite twist, coacting through delta."""
    c = w.coring
    C, M = c.carrier, w.object.carrier
    sq = r_tensor_objects(w.object, w.object)
    areg = regular_bimodule(c.base)
    coaction = (
        pipe(space(C, sq.carrier))
        .refine(1)
        .apply(c.comult, 0, 1, [C, C])
        .apply(w.object.twist, 1, 2, [M, C])
        .apply(w.delta, 2, 2, [C, M, M])
        .apply(c.counit, 2, 1, [areg])
        .absorb_left(2)
        .done(space(C, sq.carrier, M), name="rho-square")
    )
    return CowComodule("right", w, sq, coaction, name=f"{w.name} square")


# ---------------------------------------------------------------------------
# functors between the comodule categories


def induced_comodule_tensor(w: Cowreath, x: Comodule, product: Coring,
                            name=None) -> Comodule:
    """Send a right comodule over C to one over the product coring by
    tensoring with M and twisting."""
    if x.side != "right":
        raise InputError("the induction functor takes right comodules")
    c = w.coring
    C, M = c.carrier, w.object.carrier
    X = x.carrier
    carrier = tensor_over(X.right_algebra, X, M)
    coaction = (
        pipe(space(carrier))
        .refine(0)
        .apply(x.coaction, 0, 1, [X, C])
        .apply(w.delta, 1, 2, [C, M, M])
        .apply(w.object.twist, 1, 2, [M, C])
        .done(space(carrier, product.carrier), name="rho-tensor")
    )
    return Comodule("right", product, carrier, coaction,
                    name=name or f"{x.name}(x)M")


def induction_xi(w: Cowreath, y: Comodule, c: Coring, name=None) -> Comodule:
    """Corestrict a comodule over the product coring along xi."""
    if y.side != "right":
        raise InputError("corestriction takes right comodules")
    C = c.carrier
    Y = y.carrier
    prod_carrier = y.coring.carrier
    coaction = (
        pipe(space(Y))
        .apply(y.coaction, 0, 1, [Y, prod_carrier])
        .apply(LinearMap(prod_carrier, C, w.xi.matrix, name="xi"), 1, 1, [C])
        .done(space(Y, C), name="rho-xi")
    )
    return Comodule("right", c, Y, coaction, name=name or f"{y.name}_xi")


def adjunction_hat(w: Cowreath, x: Comodule, y: Comodule,
                   f: LinearMap) -> LinearMap:
    """Transpose a map (Y)_xi -> X to a map Y -> X (x) M."""
    c = w.coring
    C, M = c.carrier, w.object.carrier
    X, Y = x.carrier, y.carrier
    areg = regular_bimodule(c.base)
    target = tensor_over(X.right_algebra, X, M)
    return (
        pipe(space(Y))
        .apply(y.coaction, 0, 1, [Y, y.coring.carrier])
        .refine(1)
        .apply(w.object.twist, 1, 2, [M, C])
        .apply(f, 0, 1, [X])
        .apply(c.counit, 2, 1, [areg])
        .absorb_left(2)
        .done(space(target), name=f"hat({f.name})")
    )


def adjunction_tilde(w: Cowreath, x: Comodule, y: Comodule,
                     g: LinearMap) -> LinearMap:
    """Transpose a map Y -> X (x) M back to a map (Y)_xi -> X."""
    c = w.coring
    C, M = c.carrier, w.object.carrier
    X, Y = x.carrier, y.carrier
    areg = regular_bimodule(c.base)
    return (
        pipe(space(Y))
        .apply(g, 0, 1, [X, M])
        .apply(x.coaction, 0, 1, [X, C])
        .apply(w.xi, 1, 2, [C])
        .apply(c.counit, 1, 1, [areg])
        .absorb_left(1)
        .done(space(X), name=f"tilde({g.name})")
    )


def functor_o(w: Cowreath, x: CowComodule, product: Coring,
              name=None) -> Comodule:
    """The faithful functor sending a cowreath comodule to a comodule over
    the product coring on the carrier C (x) X."""
    if x.side != "right":
        raise InputError("the comparison functor takes right comodules")
    c = w.coring
    C = c.carrier
    X = x.object.carrier
    M = w.object.carrier
    carrier = tensor_over(C.right_algebra, C, X)
    coaction = (
        pipe(space(carrier))
        .refine(0)
        .apply(c.comult, 0, 1, [C, C])
        .apply(x.coaction, 1, 2, [C, X, M])
        .apply(x.object.twist, 1, 2, [X, C])
        .done(space(carrier, product.carrier), name="rho-O")
    )
    return Comodule("right", product, carrier, coaction,
                    name=name or f"O({x.name})")


# ---------------------------------------------------------------------------
# the free/forgetful style adjunction between bicomodules and twist objects


def vw_functor_w(o: RObject, name=None) -> Comodule:
    """C (x) Y with the twisted right coaction, as a bicomodule."""
    c = o.coring
    C, Y = c.carrier, o.carrier
    carrier = tensor_over(C.right_algebra, C, Y)
    coaction = (
        pipe(space(carrier))
        .refine(0)
        .apply(c.comult, 0, 1, [C, C])
        .apply(o.twist, 1, 2, [Y, C])
        .done(space(carrier, C), name="rho-W")
    )
    return Comodule("right", c, carrier, coaction,
                    name=name or f"W({o.name})")


def vw_functor_v(z: Comodule, name=None) -> RObject:
    """The twist rho . (eps (x) Z) on the carrier of a bicomodule."""
    c = z.coring
    C, Z = c.carrier, z.carrier
    areg = regular_bimodule(c.base)
    twist = (
        pipe(space(C, Z))
        .apply(c.counit, 0, 1, [areg])
        .absorb_right(0)
        .apply(z.coaction, 0, 1, [Z, C])
        .done(space(Z, C), name="twist-V")
    )
    return RObject(c, Z, twist, name=name or f"V({z.name})")


def vw_hat(o: RObject, z: Comodule, g: LinearMap) -> LinearMap:
    """Raise g: C (x) Y -> Z to (C (x) g).(comult (x) Y)."""
    c = o.coring
    C, Y = c.carrier, o.carrier
    Z = z.carrier
    return (
        pipe(space(C, Y))
        .apply(c.comult, 0, 1, [C, C])
        .apply(g, 1, 2, [Z])
        .done(space(C, Z), name=f"hat({g.name})")
    )


def vw_tilde(o: RObject, z: Comodule, f: LinearMap) -> LinearMap:
    """Lower f: C (x) Y -> C (x) Z to (eps (x) Z).f."""
    c = o.coring
    C, Y = c.carrier, o.carrier
    Z = z.carrier
    areg = regular_bimodule(c.base)
    return (
        pipe(space(C, Y))
        .apply(f, 0, 2, [C, Z])
        .apply(c.counit, 0, 1, [areg])
        .absorb_right(0)
        .done(space(Z), name=f"tilde({f.name})")
    )


# ---------------------------------------------------------------------------
# sampling colinear maps by solving the constraints exactly


def sample_adjunction_maps(w: Cowreath, x: Comodule, y: Comodule,
                           count=5, seed=0):
    """Deterministic sample of maps (Y)_xi -> X that are bimodule maps and
    colinear for the xi-corestricted coaction."""
    c = w.coring
    C = c.carrier
    X, Y = x.carrier, y.carrier
    f_field = X.field
    solver = MapSolver(f_field, X.dim, Y.dim)
    for k in range(X.left_algebra.dim):
        solver.add_equation([
            (1, X.left_action[k], Matrix.identity(f_field, Y.dim), "none", 0),
            (-1, Matrix.identity(f_field, X.dim), Y.left_action[k], "none", 0),
        ])
    for k in range(X.right_algebra.dim):
        solver.add_equation([
            (1, X.right_action[k], Matrix.identity(f_field, Y.dim), "none", 0),
            (-1, Matrix.identity(f_field, X.dim), Y.right_action[k], "none", 0),
        ])
    y_xi = induction_xi(w, y, c)
    xc = space(X, C)
    yc = space(Y, C)
    solver.add_equation([
        (1, x.coaction.matrix, Matrix.identity(f_field, Y.dim), "none", 0),
        (-1, xc.project, yc.section @ y_xi.coaction.matrix, "right", C.dim),
    ])
    basis = solver.solve_basis()
    mats = sample_solutions(basis, count, seed, f_field)
    return [LinearMap(Y, X, m, name=f"s{i}") for i, m in enumerate(mats)]


def sample_vw_maps(o: RObject, z: Comodule, count=5, seed=0):
    """Deterministic sample of bicomodule maps C (x) Y -> Z."""
    c = o.coring
    C, Y, Z = c.carrier, o.carrier, z.carrier
    f_field = C.field
    wy = vw_functor_w(o)
    CY = wy.carrier
    solver = MapSolver(f_field, Z.dim, CY.dim)
    for k in range(Z.left_algebra.dim):
        solver.add_equation([
            (1, Z.left_action[k], Matrix.identity(f_field, CY.dim), "none", 0),
            (-1, Matrix.identity(f_field, Z.dim), CY.left_action[k], "none", 0),
        ])
    for k in range(Z.right_algebra.dim):
        solver.add_equation([
            (1, Z.right_action[k], Matrix.identity(f_field, CY.dim), "none", 0),
            (-1, Matrix.identity(f_field, Z.dim), CY.right_action[k], "none", 0),
        ])
    zc = space(Z, C)
    cyc = space(CY, C)
    solver.add_equation([
        (1, z.coaction.matrix, Matrix.identity(f_field, CY.dim), "none", 0),
        (-1, zc.project, cyc.section @ wy.coaction.matrix, "right", C.dim),
    ])
    basis = solver.solve_basis()
    mats = sample_solutions(basis, count, seed, f_field)
    return [LinearMap(CY, Z, m, name=f"s{i}") for i, m in enumerate(mats)]
