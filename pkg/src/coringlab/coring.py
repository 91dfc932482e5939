"""Corings, comodules, bicomodules, colinearity and coring morphisms.

A coring over A is an A-bimodule C with A-bilinear comultiplication
Delta: C -> C (x)_A C and counit eps: C -> A satisfying coassociativity and
the two counit laws; the counit laws are evaluated through the explicit unit
isomorphisms, never by silent identification.
"""

from __future__ import annotations

from .algebra import FinAlgebra, field_algebra
from .bimodule import (
    Bimodule,
    LinearMap,
    Matrix,
    bilinearity_report,
    k_bimodule,
    pipe,
    regular_bimodule,
    space,
    tensor_maps,
)
from .reports import InputError, Report, Witness


def compare_maps(rep: Report, tag: str, lhs: LinearMap, rhs: LinearMap,
                 max_witnesses=3):
    """Record witnesses for every basis column where lhs and rhs disagree."""
    if lhs.matrix == rhs.matrix:
        return rep
    dom, cod = lhs.domain, lhs.codomain
    count = 0
    for j in range(dom.dim):
        lc, rc = lhs.matrix.col(j), rhs.matrix.col(j)
        if lc != rc:
            rep.add(Witness(tag, (dom.basis_label(j),),
                            cod.fmt_vec(lc), cod.fmt_vec(rc)))
            count += 1
            if count >= max_witnesses:
                break
    return rep


class Coring:
    """An A-coring presented by carrier bimodule, comultiplication, counit."""

    def __init__(self, base: FinAlgebra, carrier: Bimodule, comult: LinearMap,
                 counit: LinearMap, name="C"):
        self.base = base
        self.carrier = carrier
        self.comult = comult
        self.counit = counit
        self.name = name
        cc = space(carrier, carrier)
        if comult.domain.dim != carrier.dim or comult.codomain.dim != cc.dim:
            raise InputError(
                f"coring {name}: comultiplication must map the carrier into "
                f"the {cc.dim}-dimensional tensor square")
        if counit.domain.dim != carrier.dim or counit.codomain.dim != base.dim:
            raise InputError(f"coring {name}: counit must land in the base")

    @property
    def cc(self):
        return space(self.carrier, self.carrier)

    def __repr__(self):
        return f"Coring({self.name} over {self.base.name}, dim={self.carrier.dim})"


def check_coring(c: Coring) -> Report:
    rep = Report(f"coring {c.name}")
    rep.extend(bilinearity_report(c.comult, "comult"))
    rep.extend(bilinearity_report(c.counit, "counit"))
    C = c.carrier
    lhs = (
        pipe(space(C))
        .apply(c.comult, 0, 1, [C, C])
        .apply(c.comult, 0, 1, [C, C])
        .done(name="(comult x C).comult")
    )
    rhs = (
        pipe(space(C))
        .apply(c.comult, 0, 1, [C, C])
        .apply(c.comult, 1, 1, [C, C])
        .done(name="(C x comult).comult")
    )
    compare_maps(rep, "coassoc", lhs, rhs)
    areg = regular_bimodule(c.base)
    left = (
        pipe(space(C))
        .apply(c.comult, 0, 1, [C, C])
        .apply(c.counit, 0, 1, [areg])
        .absorb_right(0)
        .done(name="(eps x C).comult")
    )
    compare_maps(rep, "counit-left", left, LinearMap.identity(C))
    right = (
        pipe(space(C))
        .apply(c.comult, 0, 1, [C, C])
        .apply(c.counit, 1, 1, [areg])
        .absorb_left(1)
        .done(name="(C x eps).comult")
    )
    compare_maps(rep, "counit-right", right, LinearMap.identity(C))
    return rep


def check_coring_morphism(phi: LinearMap, src: Coring, dst: Coring,
                          name=None) -> Report:
    """eps_dst . phi = eps_src and (phi x phi) . Delta_src = Delta_dst . phi."""
    rep = Report(name or f"coring morphism {phi.name}: {src.name} -> {dst.name}")
    if not (src.base is dst.base or src.base.mult == dst.base.mult):
        raise InputError("coring morphism needs a common base")
    rep.extend(bilinearity_report(phi, "morphism"))
    compare_maps(rep, "morphism-counit", dst.counit.after(phi), src.counit)
    pp = tensor_maps(phi, phi, src.cc.quotient, dst.cc.quotient)
    compare_maps(rep, "morphism-comult", pp.after(src.comult),
                 dst.comult.after(phi))
    return rep


class Comodule:
    """A one-sided comodule over a coring, with A-bilinear coaction."""

    def __init__(self, side: str, coring: Coring, carrier: Bimodule,
                 coaction: LinearMap, name="M"):
        if side not in ("left", "right"):
            raise InputError("side must be 'left' or 'right'")
        self.side = side
        self.coring = coring
        self.carrier = carrier
        self.coaction = coaction
        self.name = name
        C = coring.carrier
        target = space(carrier, C) if side == "right" else space(C, carrier)
        if coaction.domain.dim != carrier.dim or coaction.codomain.dim != target.dim:
            raise InputError(f"comodule {name}: coaction shape mismatch")

    def __repr__(self):
        return f"Comodule({self.name}, {self.side} over {self.coring.name})"


def check_comodule(m: Comodule) -> Report:
    rep = Report(f"comodule {m.name}")
    C = m.coring.carrier
    X = m.carrier
    rho = m.coaction
    rep.extend(bilinearity_report(rho, "coaction"))
    areg = regular_bimodule(m.coring.base)
    if m.side == "right":
        lhs = (
            pipe(space(X))
            .apply(rho, 0, 1, [X, C])
            .apply(rho, 0, 1, [X, C])
            .done(name="(rho x C).rho")
        )
        rhs = (
            pipe(space(X))
            .apply(rho, 0, 1, [X, C])
            .apply(m.coring.comult, 1, 1, [C, C])
            .done(name="(X x comult).rho")
        )
        compare_maps(rep, "coaction-coassoc", lhs, rhs)
        cu = (
            pipe(space(X))
            .apply(rho, 0, 1, [X, C])
            .apply(m.coring.counit, 1, 1, [areg])
            .absorb_left(1)
            .done(name="(X x eps).rho")
        )
        compare_maps(rep, "coaction-counit", cu, LinearMap.identity(X))
    else:
        lhs = (
            pipe(space(X))
            .apply(rho, 0, 1, [C, X])
            .apply(rho, 1, 1, [C, X])
            .done(name="(C x lam).lam")
        )
        rhs = (
            pipe(space(X))
            .apply(rho, 0, 1, [C, X])
            .apply(m.coring.comult, 0, 1, [C, C])
            .done(name="(comult x X).lam")
        )
        compare_maps(rep, "coaction-coassoc", lhs, rhs)
        cu = (
            pipe(space(X))
            .apply(rho, 0, 1, [C, X])
            .apply(m.coring.counit, 0, 1, [areg])
            .absorb_right(0)
            .done(name="(eps x X).lam")
        )
        compare_maps(rep, "coaction-counit", cu, LinearMap.identity(X))
    return rep


class Bicomodule:
    def __init__(self, left_coring: Coring, right_coring: Coring,
                 carrier: Bimodule, lam: LinearMap, rho: LinearMap, name="M"):
        self.left_coring = left_coring
        self.right_coring = right_coring
        self.carrier = carrier
        self.lam = lam
        self.rho = rho
        self.name = name

    def left_part(self):
        return Comodule("left", self.left_coring, self.carrier, self.lam,
                        name=self.name)

    def right_part(self):
        return Comodule("right", self.right_coring, self.carrier, self.rho,
                        name=self.name)


def check_bicomodule(m: Bicomodule) -> Report:
    rep = Report(f"bicomodule {m.name}")
    rep.extend(check_comodule(m.left_part()))
    rep.extend(check_comodule(m.right_part()))
    C = m.left_coring.carrier
    D = m.right_coring.carrier
    X = m.carrier
    lhs = (
        pipe(space(X))
        .apply(m.rho, 0, 1, [X, D])
        .apply(m.lam, 0, 1, [C, X])
        .done(name="(lam x D).rho")
    )
    rhs = (
        pipe(space(X))
        .apply(m.lam, 0, 1, [C, X])
        .apply(m.rho, 1, 1, [X, D])
        .done(name="(C x rho).lam")
    )
    compare_maps(rep, "bicomodule-compat", lhs, rhs)
    return rep


def is_colinear(f: LinearMap, src: Comodule, dst: Comodule) -> Report:
    """Module-map linearity plus compatibility with the coactions."""
    rep = Report(f"colinearity of {f.name}")
    if src.side != dst.side:
        raise InputError("comodule sides differ")
    rep.extend(bilinearity_report(f, "map"))
    C = src.coring.carrier
    X, Y = src.carrier, dst.carrier
    if src.side == "right":
        lhs = (
            pipe(space(X))
            .apply(src.coaction, 0, 1, [X, C])
            .apply(f, 0, 1, [Y])
            .done(name="(f x C).rho")
        )
        rhs = (
            pipe(space(X))
            .apply(f, 0, 1, [Y])
            .apply(dst.coaction, 0, 1, [Y, C])
            .done(name="rho'.f")
        )
    else:
        lhs = (
            pipe(space(X))
            .apply(src.coaction, 0, 1, [C, X])
            .apply(f, 1, 1, [Y])
            .done(name="(C x f).lam")
        )
        rhs = (
            pipe(space(X))
            .apply(f, 0, 1, [Y])
            .apply(dst.coaction, 0, 1, [C, Y])
            .done(name="lam'.f")
        )
    compare_maps(rep, "colinear", lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# constructors


def trivial_coring(a: FinAlgebra) -> Coring:
    """A as a coring over itself: comultiplication A = A (x)_A A, counit id."""
    areg = regular_bimodule(a)
    sp = space(areg, areg)
    comult = (
        pipe(space(areg))
        .insert_central(areg, a.unit_vector(), 1)
        .done(sp, name="triv-comult")
    )
    counit = LinearMap.identity(areg, name="triv-counit")
    return Coring(a, areg, comult, counit, name=f"triv({a.name})")


def coalgebra_over_field(field, dim, comult_cols, counit_row, labels=None,
                         name="C") -> Coring:
    """A coalgebra over the ground field as a coring over k.

    comult_cols[i] is the coefficient dict of Delta(e_i) on pure tensors
    (flat index j*dim + l for e_j (x) e_l); counit_row[i] is eps(e_i).
    """
    kalg = field_algebra(field)
    carrier = k_bimodule(kalg, dim, labels=labels, name=name)
    sp = space(carrier, carrier)
    entries = {}
    for i, col in enumerate(comult_cols):
        for flat, v in col.items():
            entries[(flat, i)] = field.parse(v)
    comult_flat = Matrix.from_entries(field, dim * dim, dim, entries)
    comult = LinearMap(carrier, sp.quotient, sp.project @ comult_flat,
                       name="comult")
    eps = Matrix.from_entries(
        field, 1, dim,
        {(0, i): field.parse(v) for i, v in enumerate(counit_row)
         if not field.is_zero(field.parse(v))})
    counit = LinearMap(carrier, regular_bimodule(kalg), eps, name="counit")
    return Coring(kalg, carrier, comult, counit, name=name)


def grouplike_coalgebra(field, n, name=None) -> Coring:
    """n grouplike elements: Delta(g_i) = g_i (x) g_i, eps(g_i) = 1."""
    one = field.one()
    cols = [{i * n + i: one} for i in range(n)]
    labels = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return coalgebra_over_field(field, n, cols, [one] * n, labels,
                                name or f"kZ{n}")


def grouplike_primitive_coalgebra(field, name="C[g,x]") -> Coring:
    """One grouplike g and one g-primitive x: Delta(x) = x(x)g + g(x)x."""
    one = field.one()
    cols = [{0: one}, {2: one, 1: one}]
    return coalgebra_over_field(field, 2, cols, [one, field.zero()],
                                labels=["g", "x"], name=name)


def flip_map(v: Bimodule, w: Bimodule, name="flip") -> LinearMap:
    """The flip V (x) W -> W (x) V over the ground field."""
    if v.left_algebra.dim != 1 or w.left_algebra.dim != 1:
        raise InputError("flip is only available over the ground field")
    svw = space(v, w)
    swv = space(w, v)
    f = v.field
    entries = {}
    for i in range(v.dim):
        for j in range(w.dim):
            entries[(j * v.dim + i, i * w.dim + j)] = f.one()
    mat = Matrix.from_entries(f, v.dim * w.dim, v.dim * w.dim, entries)
    return LinearMap(svw.quotient, swv.quotient,
                     swv.project @ mat @ svw.section, name)


def tensor_coalgebra(c: Coring, d: Coring, name=None) -> Coring:
    """The tensor product coalgebra of two coalgebras over the field."""
    if c.base.dim != 1 or d.base.dim != 1:
        raise InputError("tensor coalgebra needs coalgebras over the field")
    Cc, Dc = c.carrier, d.carrier
    carrier = space(Cc, Dc).quotient
    target = space(carrier, carrier)
    comult = (
        pipe(space(carrier))
        .refine(0)
        .apply(c.comult, 0, 1, [Cc, Cc])
        .apply(d.comult, 2, 1, [Dc, Dc])
        .apply(flip_map(Cc, Dc), 1, 2, [Dc, Cc])
        .done(target, name="comult")
    )
    kreg = regular_bimodule(c.base)
    counit = (
        pipe(space(carrier))
        .refine(0)
        .apply(c.counit, 0, 1, [kreg])
        .absorb_right(0)
        .apply(d.counit, 0, 1, [kreg])
        .done(space(kreg), name="counit")
    )
    return Coring(c.base, carrier, comult, counit,
                  name=name or f"{c.name}(x){d.name}")


def zero_bimodule(a: FinAlgebra, name="0") -> Bimodule:
    z = Matrix.zeros(a.field, 0, 0)
    return Bimodule(a, a, 0, [z] * a.dim, [z] * a.dim, labels=[], name=name)


def comodule_over_itself(c: Coring, side="right") -> Comodule:
    return Comodule(side, c, c.carrier, c.comult, name=f"{c.name} over itself")
