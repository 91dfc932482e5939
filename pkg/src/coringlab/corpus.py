"""The shipped example instances: everything the verification suite runs on,
built programmatically so sessions and tests share one source of truth.
"""

from __future__ import annotations

from .algebra import (
    AlgebraMorphism,
    field_algebra,
    group_algebra_cyclic,
    identity_morphism,
    matrix_algebra,
    truncated_poly_algebra,
    unit_inclusion,
)
from .bimodule import LinearMap, Matrix, space
from .coring import (
    coalgebra_over_field,
    flip_map,
    grouplike_coalgebra,
    grouplike_primitive_coalgebra,
    trivial_coring,
)
from .cowreath import Cowreath, coring_distributive_cowreath, flip_cowreath, unit_cowreath
from .entwine import (
    EntwiningStructure,
    algebra_as_k_bimodule,
    doi_koppinen_entwining,
    doi_koppinen_self,
    flip_entwining,
)
from .exactla import GF, QQ
from .ore import SkewPolyData
from .wreath import ModuleTwist, RingExtension, twisted_tensor_product


class Corpus:
    """Lazily built standard instances, shared across the test suite."""

    def __init__(self):
        self._cache = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    # -- algebras -----------------------------------------------------------

    @property
    def k(self):
        return self._get("k", lambda: field_algebra(QQ))

    @property
    def z2(self):
        return self._get("z2", lambda: group_algebra_cyclic(QQ, 2, name="kZ2"))

    @property
    def z3(self):
        return self._get("z3", lambda: group_algebra_cyclic(QQ, 3, name="kZ3"))

    @property
    def tpoly2(self):
        return self._get("tpoly2", lambda: truncated_poly_algebra(QQ, 2))

    # -- corings ------------------------------------------------------------

    @property
    def triv_z2(self):
        return self._get("triv_z2", lambda: trivial_coring(self.z2))

    @property
    def c2(self):
        return self._get("c2", lambda: grouplike_coalgebra(QQ, 2, name="C2"))

    @property
    def c3(self):
        return self._get("c3", lambda: grouplike_coalgebra(QQ, 3, name="C3"))

    @property
    def d2(self):
        return self._get("d2", lambda: grouplike_coalgebra(QQ, 2, name="D2"))

    @property
    def gp(self):
        return self._get("gp", lambda: grouplike_primitive_coalgebra(QQ))

    @property
    def broken_coalgebra(self):
        """Two grouplikes but the counit kills the second one."""
        def build():
            one = QQ.one()
            return coalgebra_over_field(
                QQ, 2, [{0: one}, {3: one}], [one, QQ.zero()],
                labels=["1", "g"], name="brokenC")
        return self._get("broken_coalgebra", build)

    # -- entwinings ---------------------------------------------------------

    @property
    def flip_entwining(self):
        return self._get(
            "flip_entwining", lambda: flip_entwining(self.z2, self.c2))

    @property
    def dk_entwining(self):
        def build():
            return doi_koppinen_entwining(
                doi_koppinen_self(self.z2, self.c2), name="dk")
        return self._get("dk_entwining", build)

    @property
    def broken_entwining(self):
        def build():
            base = self.flip_entwining
            ab = algebra_as_k_bimodule(self.z2, self.c2.base)
            mat = base.psi.matrix + Matrix.from_entries(
                QQ, 4, 4, {(3, 3): QQ.one()})
            psi = LinearMap(base.psi.domain, base.psi.codomain, mat, "bad")
            return EntwiningStructure(self.z2, self.c2, psi, name="broken")
        return self._get("broken_entwining", build)

    # -- cowreaths ----------------------------------------------------------

    @property
    def flip_cw(self):
        return self._get("flip_cw", lambda: flip_cowreath(self.c2, self.d2))

    @property
    def flip_cw3(self):
        return self._get("flip_cw3", lambda: flip_cowreath(self.c2, self.c3))

    @property
    def unit_cw(self):
        return self._get("unit_cw", lambda: unit_cowreath(self.triv_z2))

    @property
    def dl_cw(self):
        def build():
            dm = flip_map(self.c2.carrier, self.d2.carrier)
            return coring_distributive_cowreath(self.c2, self.d2, dm)
        return self._get("dl_cw", build)

    @property
    def lifted_flip_cw(self):
        from .cowreath import entwining_lift_cowreath
        return self._get(
            "lifted_flip_cw",
            lambda: entwining_lift_cowreath(self.flip_entwining, self.flip_cw))

    @property
    def lifted_dk_cw(self):
        from .cowreath import entwining_lift_cowreath
        return self._get(
            "lifted_dk_cw",
            lambda: entwining_lift_cowreath(self.dk_entwining, self.flip_cw))

    @property
    def broken_cw_delta(self):
        def build():
            w = self.flip_cw
            return Cowreath(w.object, w.xi,
                            LinearMap.zero(w.delta.domain, w.delta.codomain),
                            name="broken-delta")
        return self._get("broken_cw_delta", build)

    @property
    def broken_cw_xi(self):
        def build():
            w = self.flip_cw
            return Cowreath(w.object, w.xi.scale(QQ.from_int(2)), w.delta,
                            name="broken-xi")
        return self._get("broken_cw_xi", build)

    # -- twisted tensor products ---------------------------------------------

    def _sign_flip_map(self, rext, text):
        tb, rb = text.t_bimodule, rext.t_bimodule
        ent = {}
        for i in range(2):
            for j in range(2):
                sign = QQ.from_int(-1 if (i == 1 and j == 1) else 1)
                ent[(j * 2 + i, i * 2 + j)] = sign
        return LinearMap(space(tb, rb).quotient, space(rb, tb).quotient,
                         Matrix.from_entries(QQ, 4, 4, ent), "signflip")

    @property
    def sign_flip_ttp(self):
        """Graded flip on k[x]/(x^2) (x) k[y]/(y^2); anticommuting in odd
        degrees."""
        def build():
            R = truncated_poly_algebra(QQ, 2, gen="x", name="R")
            T = truncated_poly_algebra(QQ, 2, gen="y", name="T")
            rext = RingExtension(self.k, R, unit_inclusion(self.k, R))
            text = RingExtension(self.k, T, unit_inclusion(self.k, T))
            rmap = self._sign_flip_map(rext, text)
            return (rext, text, rmap) + twisted_tensor_product(rext, text, rmap)
        return self._get("sign_flip_ttp", build)

    @property
    def plain_flip_ttp(self):
        def build():
            R = truncated_poly_algebra(QQ, 2, gen="x", name="R")
            T = truncated_poly_algebra(QQ, 2, gen="y", name="T")
            rext = RingExtension(self.k, R, unit_inclusion(self.k, R))
            text = RingExtension(self.k, T, unit_inclusion(self.k, T))
            fl = flip_map(text.t_bimodule, rext.t_bimodule)
            rmap = LinearMap(fl.domain, fl.codomain, fl.matrix, "flip")
            return (rext, text, rmap) + twisted_tensor_product(rext, text, rmap)
        return self._get("plain_flip_ttp", build)

    def broken_ttp_map(self):
        rext, text, rmap = self.sign_flip_ttp[:3]
        bad = rmap.matrix + Matrix.from_entries(QQ, 4, 4, {(2, 2): QQ.one()})
        return rext, text, LinearMap(rmap.domain, rmap.codomain, bad, "bad")

    @property
    def module_twist_self(self):
        """X = R with the twisted tensor twist itself and multiplication."""
        def build():
            rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = self.sign_flip_ttp
            return ModuleTwist(rw, rext, rext.t_bimodule, rext.mult_map(),
                               rmap, name="X=R")
        return self._get("module_twist_self", build)

    # -- skew polynomial data -------------------------------------------------

    @property
    def ore_commutative(self):
        def build():
            B = truncated_poly_algebra(QQ, 3)
            return SkewPolyData(B, identity_morphism(B),
                                Matrix.zeros(QQ, 3, 3), name="commutative")
        return self._get("ore_commutative", build)

    @property
    def ore_quantum_plane(self):
        def build():
            B = truncated_poly_algebra(QQ, 3, gen="y")
            sigma = AlgebraMorphism(
                B, B,
                Matrix.from_entries(QQ, 3, 3, {
                    (0, 0): QQ.one(), (1, 1): QQ.from_int(2),
                    (2, 2): QQ.from_int(4)}),
                name="q2")
            return SkewPolyData(B, sigma, Matrix.zeros(QQ, 3, 3),
                                name="quantum-plane")
        return self._get("ore_quantum_plane", build)

    @property
    def ore_weyl(self):
        """The derivation case needs characteristic 3 for x^3 = 0 to be
        respected by d/dx."""
        def build():
            f3 = GF(3)
            B = truncated_poly_algebra(f3, 3)
            delta = Matrix.from_entries(f3, 3, 3, {(0, 1): 1, (1, 2): 2})
            return SkewPolyData(B, identity_morphism(B), delta, name="weyl")
        return self._get("ore_weyl", build)

    @property
    def ore_weyl_target(self):
        """Endomorphisms of the length-3 truncated polynomial ring over
        GF(3), the matrix realization hosting the rewrite relation."""
        def build():
            f3 = GF(3)
            S = matrix_algebra(f3, 3)
            phi = Matrix.from_entries(f3, 9, 3, {
                (0, 0): 1, (4, 0): 1, (8, 0): 1,
                (3, 1): 1, (7, 1): 1,
                (6, 2): 1,
            })
            z = {1: 1, 5: 2}
            return S, phi, z
        return self._get("ore_weyl_target", build)

    @property
    def ore_broken(self):
        """d/dx over the rationals: the Leibniz rule fails on x . x^2."""
        def build():
            B = truncated_poly_algebra(QQ, 3)
            delta = Matrix.from_entries(QQ, 3, 3, {
                (0, 1): QQ.one(), (1, 2): QQ.from_int(2)})
            return SkewPolyData(B, identity_morphism(B), delta,
                                name="broken-derivation")
        return self._get("ore_broken", build)


CORPUS = Corpus()


def corpus_sessions() -> dict:
    """Raw session dictionaries for the shipped example files."""
    from .coring import comodule_over_itself
    from .session import SessionStore

    out = {}

    store = SessionStore.empty(QQ)
    store.algebra_name(CORPUS.z2)
    store.algebra_name(CORPUS.z3)
    out["z2_group_algebra.json"] = store.raw

    store = SessionStore.empty(QQ)
    store.add_coring("C2", CORPUS.c2)
    store.add_coring("C3", CORPUS.c3)
    store.add_coring("trivial", CORPUS.triv_z2)
    store.add_coring("broken", CORPUS.broken_coalgebra)
    store.add_comodule("C2.self", comodule_over_itself(CORPUS.c2))
    out["grouplike_coalgebras.json"] = store.raw

    store = SessionStore.empty(QQ)
    store.add_entwining("flip", CORPUS.flip_entwining)
    store.add_entwining("dk", CORPUS.dk_entwining)
    store.add_entwining("broken", CORPUS.broken_entwining)
    out["entwinings.json"] = store.raw

    store = SessionStore.empty(QQ)
    store.add_cowreath("flip", CORPUS.flip_cw)
    store.add_cowreath("unit", CORPUS.unit_cw)
    store.add_cowreath("dl", CORPUS.dl_cw[0])
    store.add_cowreath("broken-delta", CORPUS.broken_cw_delta)
    store.add_entwining("flip-ent", CORPUS.flip_entwining)
    out["cowreaths.json"] = store.raw

    store = SessionStore.empty(QQ)
    rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = CORPUS.sign_flip_ttp
    store.add_ttp("signflip", rext, text, rmap)
    wreath_name = store.add_wreath("signflip.wreath", rw)
    store.add_twisting("X=R", CORPUS.module_twist_self, wreath_name)
    store.add_ttp("broken", *CORPUS.broken_ttp_map())
    out["sign_flip_ttp.json"] = store.raw

    store = SessionStore.empty(QQ)
    store.add_skewpoly("commutative", CORPUS.ore_commutative)
    store.add_skewpoly("quantum-plane", CORPUS.ore_quantum_plane)
    store.add_skewpoly("broken-derivation", CORPUS.ore_broken)
    out["ore_rational.json"] = store.raw

    store = SessionStore.empty(GF(3))
    store.add_skewpoly("weyl", CORPUS.ore_weyl)
    out["ore_gf3.json"] = store.raw
    return out
