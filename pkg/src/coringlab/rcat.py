"""The monoidal category of twist objects attached to a coring, plus its
left-handed mirror.

An object is an A-bimodule M with an A-bilinear twist t: C (x) M -> M (x) C
compatible with the comultiplication and counit.  A morphism (in unreduced
form) is a C-bicolinear map C (x) M -> C (x) M', where C (x) M carries the
left coaction comult (x) M and the right coaction (C (x) t).(comult (x) M).
"""

from __future__ import annotations

from .bimodule import (
    Bimodule,
    LinearMap,
    Matrix,
    bilinearity_report,
    pipe,
    regroup,
    regular_bimodule,
    space,
    tensor_over,
)
from .coring import Bicomodule, Coring, compare_maps
from .reports import InputError, Report


class RObject:
    """A pair (M, twist) with twist: C (x) M -> M (x) C."""

    def __init__(self, coring: Coring, carrier: Bimodule, twist: LinearMap,
                 name=None):
        self.coring = coring
        self.carrier = carrier
        self.twist = twist
        self.name = name or carrier.name
        C = coring.carrier
        if (twist.domain.dim != space(C, carrier).dim
                or twist.codomain.dim != space(carrier, C).dim):
            raise InputError(f"twist of {self.name}: shape mismatch")

    @property
    def cm(self):
        return space(self.coring.carrier, self.carrier)

    @property
    def mc(self):
        return space(self.carrier, self.coring.carrier)

    def __repr__(self):
        return f"RObject({self.name} over {self.coring.name})"


class RMorphism:
    """A map C (x) M -> C (x) M' between twist objects."""

    def __init__(self, src: RObject, dst: RObject, map: LinearMap, name=None):
        self.src = src
        self.dst = dst
        self.map = map
        self.name = name or map.name
        if (map.domain.dim != src.cm.dim or map.codomain.dim != dst.cm.dim):
            raise InputError(f"morphism {self.name}: shape mismatch")

    @classmethod
    def identity(cls, o: RObject):
        return cls(o, o, LinearMap.identity(o.cm.quotient), name="id")

    @classmethod
    def zero(cls, src: RObject, dst: RObject):
        return cls(src, dst,
                   LinearMap.zero(src.cm.quotient, dst.cm.quotient), name="0")


def check_r_object(o: RObject) -> Report:
    """Bilinearity plus the twist-comultiplication and twist-counit laws."""
    rep = Report(f"twist object {o.name}")
    c = o.coring
    C, M = c.carrier, o.carrier
    rep.extend(bilinearity_report(o.twist, "twist"))
    lhs = (
        pipe(space(C, M))
        .apply(o.twist, 0, 2, [M, C])
        .apply(c.comult, 1, 1, [C, C])
        .done(name="(M x comult).twist")
    )
    rhs = (
        pipe(space(C, M))
        .apply(c.comult, 0, 1, [C, C])
        .apply(o.twist, 1, 2, [M, C])
        .apply(o.twist, 0, 2, [M, C])
        .done(name="(twist x C).(C x twist).(comult x M)")
    )
    compare_maps(rep, "twist-comult", lhs, rhs)
    areg = regular_bimodule(c.base)
    lhs2 = (
        pipe(space(C, M))
        .apply(o.twist, 0, 2, [M, C])
        .apply(c.counit, 1, 1, [areg])
        .absorb_left(1)
        .done(name="(M x eps).twist")
    )
    rhs2 = (
        pipe(space(C, M))
        .apply(c.counit, 0, 1, [areg])
        .absorb_right(0)
        .done(name="eps x M")
    )
    compare_maps(rep, "twist-counit", lhs2, rhs2)
    return rep


def check_r_morphism(m: RMorphism) -> Report:
    """Left and right C-colinearity in unreduced form."""
    rep = Report(f"twist morphism {m.name}")
    c = m.src.coring
    C = c.carrier
    M, N = m.src.carrier, m.dst.carrier
    rep.extend(bilinearity_report(m.map, "morphism"))
    lhs = (
        pipe(space(C, M))
        .apply(m.map, 0, 2, [C, N])
        .apply(c.comult, 0, 1, [C, C])
        .done(name="(comult x N).f")
    )
    rhs = (
        pipe(space(C, M))
        .apply(c.comult, 0, 1, [C, C])
        .apply(m.map, 1, 2, [C, N])
        .done(name="(C x f).(comult x M)")
    )
    compare_maps(rep, "morphism-left-colinear", lhs, rhs)
    lhs2 = (
        pipe(space(C, M))
        .apply(m.map, 0, 2, [C, N])
        .apply(c.comult, 0, 1, [C, C])
        .apply(m.dst.twist, 1, 2, [N, C])
        .done(name="(C x twist').(comult x N).f")
    )
    rhs2 = (
        pipe(space(C, M))
        .apply(c.comult, 0, 1, [C, C])
        .apply(m.src.twist, 1, 2, [M, C])
        .apply(m.map, 0, 2, [C, N])
        .done(name="(f x C).(C x twist).(comult x M)")
    )
    compare_maps(rep, "morphism-right-colinear", lhs2, rhs2)
    return rep


def identity_r_object(c: Coring) -> RObject:
    """The unit object: the base algebra with the unit-isomorphism twist."""
    areg = regular_bimodule(c.base)
    C = c.carrier
    twist = (
        pipe(space(C, areg))
        .absorb_left(1)
        .insert_central(areg, c.base.unit_vector(), 0)
        .done(space(areg, C), name="unit-twist")
    )
    return RObject(c, areg, twist, name=f"I({c.base.name})")


def r_object_bicomodule(o: RObject) -> Bicomodule:
    """The bicomodule on C (x) M induced by a twist object."""
    c = o.coring
    C, M = c.carrier, o.carrier
    X = o.cm.quotient
    lam = (
        pipe(space(C, M))
        .apply(c.comult, 0, 1, [C, C])
        .done(space(C, X), name="lam")
    )
    rho = (
        pipe(space(C, M))
        .apply(c.comult, 0, 1, [C, C])
        .apply(o.twist, 1, 2, [M, C])
        .done(space(X, C), name="rho")
    )
    return Bicomodule(c, c, X, lam, rho, name=f"C(x){o.name}")


def r_tensor_objects(o1: RObject, o2: RObject, name=None) -> RObject:
    """Monoidal product: carrier M (x) M', twist (M x t').(t x M')."""
    c = o1.coring
    C = c.carrier
    M1, M2 = o1.carrier, o2.carrier
    carrier = tensor_over(M1.right_algebra, M1, M2)
    twist = (
        pipe(space(C, carrier))
        .refine(1)
        .apply(o1.twist, 0, 2, [M1, C])
        .apply(o2.twist, 1, 2, [M2, C])
        .done(space(carrier, C), name="twist")
    )
    return RObject(c, carrier, twist, name=name or f"{o1.name}(x){o2.name}")


def r_tensor_morphisms(f: RMorphism, g: RMorphism, name=None) -> RMorphism:
    """Monoidal product of morphisms, following the defining composite."""
    c = f.src.coring
    C = c.carrier
    M1, N1 = f.src.carrier, f.dst.carrier
    M2, N2 = g.src.carrier, g.dst.carrier
    src = r_tensor_objects(f.src, g.src)
    dst = r_tensor_objects(f.dst, g.dst)
    areg = regular_bimodule(c.base)
    mp = (
        pipe(space(C, src.carrier))
        .refine(1)
        .apply(c.comult, 0, 1, [C, C])
        .apply(f.map, 1, 2, [C, N1])
        .apply(f.dst.twist, 1, 2, [N1, C])
        .apply(g.map, 2, 2, [C, N2])
        .apply(c.counit, 2, 1, [areg])
        .absorb_left(2)
        .done(space(C, dst.carrier), name="f(x)g")
    )
    return RMorphism(src, dst, mp, name=name or f"{f.name}(x){g.name}")


def canonical_c_object(c: Coring) -> RObject:
    """The twist c (x) c' -> c_(1) (x) c_(2) eps(c') + eps(c) c'_(1) (x) c'_(2)
    - c (x) c' on the carrier C itself."""
    C = c.carrier
    areg = regular_bimodule(c.base)
    term1 = (
        pipe(space(C, C))
        .apply(c.counit, 1, 1, [areg])
        .absorb_left(1)
        .apply(c.comult, 0, 1, [C, C])
        .done(name="t1")
    )
    term2 = (
        pipe(space(C, C))
        .apply(c.counit, 0, 1, [areg])
        .absorb_right(0)
        .apply(c.comult, 0, 1, [C, C])
        .done(name="t2")
    )
    ident = LinearMap.identity(space(C, C).quotient)
    twist = term1 + term2 - ident
    return RObject(c, C, twist, name=f"({c.name},can)")


def object_from_coring_morphism(phi: LinearMap, d: Coring, c: Coring) -> RObject:
    """The twist c (x) d -> eps(c) d_(1) (x) phi(d_(2)) on the carrier of d,
    attached to a coring morphism phi: D -> C over the same base."""
    C, D = c.carrier, d.carrier
    areg = regular_bimodule(c.base)
    twist = (
        pipe(space(C, D))
        .apply(c.counit, 0, 1, [areg])
        .absorb_right(0)
        .apply(d.comult, 0, 1, [D, D])
        .apply(phi, 1, 1, [C])
        .done(space(D, C), name="induced-twist")
    )
    return RObject(c, D, twist, name=f"({d.name},{phi.name})")


# ---------------------------------------------------------------------------
# algebras inside the category (wreaths over a coring)


def check_r_algebra(o: RObject, eta: LinearMap, mu: LinearMap) -> Report:
    """Verify that (eta, mu) make the twist object an algebra in the
    category: morphism conditions, unit laws, associativity.

    eta: C (x) A -> C (x) M and mu: C (x) (M (x) M) -> C (x) M.
    """
    rep = Report(f"algebra on {o.name}")
    c = o.coring
    C, M = c.carrier, o.carrier
    ident_obj = identity_r_object(c)
    o2 = r_tensor_objects(o, o)
    eta_mor = RMorphism(ident_obj, o, eta, name="eta")
    mu_mor = RMorphism(o2, o, mu, name="mu")
    rep.extend(check_r_morphism(eta_mor))
    rep.extend(check_r_morphism(mu_mor))
    id_mor = RMorphism.identity(o)

    left = r_tensor_morphisms(eta_mor, id_mor)
    lhs = mu.after(left.map)
    areg = regular_bimodule(c.base)
    unit_l = (
        pipe(space(C, left.src.carrier))
        .refine(1)
        .absorb_right(1)
        .done(space(C, M), name="lambda")
    )
    compare_maps(rep, "alg-unit-left", lhs, unit_l)

    right = r_tensor_morphisms(id_mor, eta_mor)
    rhs = mu.after(right.map)
    unit_r = (
        pipe(space(C, right.src.carrier))
        .refine(1)
        .absorb_left(2)
        .done(space(C, M), name="rho")
    )
    compare_maps(rep, "alg-unit-right", rhs, unit_r)

    mm_l = r_tensor_morphisms(mu_mor, id_mor)
    mm_r = r_tensor_morphisms(id_mor, mu_mor)
    assoc_l = mu.after(mm_l.map)
    assoc_r = mu.after(mm_r.map)
    conj = regroup(space(C, mm_l.src.carrier), space(C, mm_r.src.carrier))
    compare_maps(rep, "alg-assoc", assoc_l, assoc_r.after(conj))
    return rep


# ---------------------------------------------------------------------------
# the left-handed mirror category


class LObject:
    """A pair (twist, L) with twist: L (x) C -> C (x) L."""

    def __init__(self, coring: Coring, carrier: Bimodule, twist: LinearMap,
                 name=None):
        self.coring = coring
        self.carrier = carrier
        self.twist = twist
        self.name = name or carrier.name
        C = coring.carrier
        if (twist.domain.dim != space(carrier, C).dim
                or twist.codomain.dim != space(C, carrier).dim):
            raise InputError(f"left twist of {self.name}: shape mismatch")

    @property
    def lc(self):
        return space(self.carrier, self.coring.carrier)


def check_l_object(o: LObject) -> Report:
    rep = Report(f"left twist object {o.name}")
    c = o.coring
    C, L = c.carrier, o.carrier
    rep.extend(bilinearity_report(o.twist, "twist"))
    areg = regular_bimodule(c.base)
    lhs = (
        pipe(space(L, C))
        .apply(o.twist, 0, 2, [C, L])
        .apply(c.counit, 0, 1, [areg])
        .absorb_right(0)
        .done(name="(eps x L).twist")
    )
    rhs = (
        pipe(space(L, C))
        .apply(c.counit, 1, 1, [areg])
        .absorb_left(1)
        .done(name="L x eps")
    )
    compare_maps(rep, "twist-counit", lhs, rhs)
    lhs2 = (
        pipe(space(L, C))
        .apply(o.twist, 0, 2, [C, L])
        .apply(c.comult, 0, 1, [C, C])
        .done(name="(comult x L).twist")
    )
    rhs2 = (
        pipe(space(L, C))
        .apply(c.comult, 1, 1, [C, C])
        .apply(o.twist, 0, 2, [C, L])
        .apply(o.twist, 1, 2, [C, L])
        .done(name="(C x twist).(twist x C).(L x comult)")
    )
    compare_maps(rep, "twist-comult", lhs2, rhs2)
    return rep


def identity_l_object(c: Coring) -> LObject:
    areg = regular_bimodule(c.base)
    C = c.carrier
    twist = (
        pipe(space(areg, C))
        .absorb_right(0)
        .insert_central(areg, c.base.unit_vector(), 1)
        .done(space(C, areg), name="unit-twist")
    )
    return LObject(c, areg, twist, name=f"I({c.base.name})")


def l_tensor_objects(o1: LObject, o2: LObject, name=None) -> LObject:
    """Product object ((t1 x K).(L x t2), L (x) K)."""
    c = o1.coring
    C = c.carrier
    L, K = o1.carrier, o2.carrier
    carrier = tensor_over(L.right_algebra, L, K)
    twist = (
        pipe(space(carrier, C))
        .refine(0)
        .apply(o2.twist, 1, 2, [C, K])
        .apply(o1.twist, 0, 2, [C, L])
        .done(space(C, carrier), name="twist")
    )
    return LObject(c, carrier, twist, name=name or f"{o1.name}(x){o2.name}")


class LMorphism:
    """A map L (x) C -> L' (x) C between left twist objects."""

    def __init__(self, src: LObject, dst: LObject, map: LinearMap, name=None):
        self.src = src
        self.dst = dst
        self.map = map
        self.name = name or map.name
        if (map.domain.dim != src.lc.dim or map.codomain.dim != dst.lc.dim):
            raise InputError(f"left morphism {self.name}: shape mismatch")

    @classmethod
    def identity(cls, o: LObject):
        return cls(o, o, LinearMap.identity(o.lc.quotient), name="id")


def check_l_morphism(m: LMorphism) -> Report:
    """Colinearity for the structures rho = L x comult and
    lam = (twist x C).(L x comult)."""
    rep = Report(f"left twist morphism {m.name}")
    c = m.src.coring
    C = c.carrier
    L, K = m.src.carrier, m.dst.carrier
    rep.extend(bilinearity_report(m.map, "morphism"))
    lhs = (
        pipe(space(L, C))
        .apply(m.map, 0, 2, [K, C])
        .apply(c.comult, 1, 1, [C, C])
        .done(name="(K x comult).f")
    )
    rhs = (
        pipe(space(L, C))
        .apply(c.comult, 1, 1, [C, C])
        .apply(m.map, 0, 2, [K, C])
        .done(name="(f x C).(L x comult)")
    )
    compare_maps(rep, "morphism-right-colinear", lhs, rhs)
    lhs2 = (
        pipe(space(L, C))
        .apply(m.map, 0, 2, [K, C])
        .apply(c.comult, 1, 1, [C, C])
        .apply(m.dst.twist, 0, 2, [C, K])
        .done(name="(twist' x C).(K x comult).f")
    )
    rhs2 = (
        pipe(space(L, C))
        .apply(c.comult, 1, 1, [C, C])
        .apply(m.src.twist, 0, 2, [C, L])
        .apply(m.map, 1, 2, [K, C])
        .done(name="(C x f).(twist x C).(L x comult)")
    )
    compare_maps(rep, "morphism-left-colinear", lhs2, rhs2)
    return rep


def sample_r_morphisms(src: RObject, dst: RObject, count=5, seed=0):
    """Deterministic sample of morphisms src -> dst over a ground-field
    coring, by solving the two colinearity constraints exactly."""
    from .bimodule import MapSolver, sample_solutions
    c = src.coring
    if c.base.dim != 1:
        raise InputError("morphism sampling is implemented over the field")
    C = c.carrier
    M, N = src.carrier, dst.carrier
    f = C.field
    dc = C.dim
    dom = src.cm.quotient
    cod = dst.cm.quotient
    delta = c.cc.section @ c.comult.matrix  # flat comultiplication
    d_m = delta.kron(Matrix.identity(f, M.dim))
    d_n = delta.kron(Matrix.identity(f, N.dim))
    tw_m = src.twist.matrix
    tw_n = dst.twist.matrix
    ic = Matrix.identity(f, dc)
    solver = MapSolver(f, cod.dim, dom.dim)
    # left colinearity: (comult x N).F = (C x F).(comult x M)
    solver.add_equation([
        (1, d_n, Matrix.identity(f, dom.dim), "none", 0),
        (-1, Matrix.identity(f, dc * cod.dim), d_m, "left", dc),
    ])
    # right colinearity: (C x tw').(comult x N).F = (F x C).(C x tw).(comult x M)
    lhs_fixed = ic.kron(tw_n) @ d_n
    rhs_fixed = ic.kron(tw_m) @ d_m
    solver.add_equation([
        (1, lhs_fixed, Matrix.identity(f, dom.dim), "none", 0),
        (-1, Matrix.identity(f, cod.dim * dc), rhs_fixed, "right", dc),
    ])
    basis = solver.solve_basis()
    mats = sample_solutions(basis, count, seed, f)
    return [RMorphism(src, dst, LinearMap(dom, cod, m, name=f"r{i}"))
            for i, m in enumerate(mats)]


def l_tensor_morphisms(f: LMorphism, g: LMorphism, name=None) -> LMorphism:
    """Product of morphisms in the mirror category."""
    c = f.src.coring
    C = c.carrier
    L, Lp = f.src.carrier, f.dst.carrier
    K, Kp = g.src.carrier, g.dst.carrier
    src = l_tensor_objects(f.src, g.src)
    dst = l_tensor_objects(f.dst, g.dst)
    areg = regular_bimodule(c.base)
    mp = (
        pipe(space(src.carrier, C))
        .refine(0)
        .apply(c.comult, 2, 1, [C, C])
        .apply(g.map, 1, 2, [Kp, C])
        .apply(g.dst.twist, 1, 2, [C, Kp])
        .apply(f.map, 0, 2, [Lp, C])
        .apply(c.counit, 1, 1, [areg])
        .absorb_left(1)
        .done(space(dst.carrier, C), name="f(x)g")
    )
    return LMorphism(src, dst, mp, name=name or f"{f.name}(x){g.name}")
