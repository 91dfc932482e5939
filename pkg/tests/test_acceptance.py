"""The acceptance suite: one test per criterion, each printing a pass/fail
line.  Run `pytest -s tests/test_acceptance.py` to see the lines.

Everything is exact arithmetic; every comparison is strict equality with
zero tolerance.
"""

import random

import pytest

from coringlab.corpus import CORPUS, corpus_sessions


def criterion(n, desc, ok):
    print(f"criterion {n} ({desc}): {'pass' if ok else 'FAIL'}", flush=True)
    assert ok, f"criterion {n} failed: {desc}"


@pytest.fixture(scope="module")
def session_paths(tmp_path_factory):
    from coringlab.session import write_session
    root = tmp_path_factory.mktemp("acc_sessions")
    out = {}
    for fname, raw in corpus_sessions().items():
        path = root / fname
        write_session(raw, path)
        out[fname] = str(path)
    return out


def test_criterion_1_checker_exit_codes(session_paths):
    """The command line yields exit 0 on every valid corpus structure and
    exit 1 with a witness on every broken twin."""
    from coringlab.cli import main

    runs_pass = [
        ("grouplike_coalgebras.json", ["check", "coring", "C2"]),
        ("grouplike_coalgebras.json", ["check", "coring", "C3"]),
        ("grouplike_coalgebras.json", ["check", "coring", "trivial"]),
        ("grouplike_coalgebras.json", ["check", "comodule", "C2.self"]),
        ("entwinings.json", ["check", "entwining", "flip"]),
        ("entwinings.json", ["check", "entwining", "dk"]),
        ("cowreaths.json", ["check", "cowreath", "flip"]),
        ("cowreaths.json", ["check", "cowreath", "unit"]),
        ("cowreaths.json", ["check", "cowreath", "dl"]),
        ("sign_flip_ttp.json", ["check", "wreath", "signflip"]),
        ("sign_flip_ttp.json", ["check", "twisting", "X=R"]),
        ("ore_rational.json", ["ore", "check", "--data", "commutative",
                               "--degree", "4"]),
        ("ore_rational.json", ["ore", "check", "--data", "quantum-plane",
                               "--degree", "4"]),
        ("ore_gf3.json", ["ore", "check", "--data", "weyl", "--degree", "4"]),
    ]
    runs_fail = [
        ("grouplike_coalgebras.json", ["check", "coring", "broken"]),
        ("entwinings.json", ["check", "entwining", "broken"]),
        ("cowreaths.json", ["check", "cowreath", "broken-delta"]),
        ("sign_flip_ttp.json", ["check", "wreath", "broken"]),
        ("ore_rational.json", ["ore", "check", "--data", "broken-derivation",
                               "--degree", "3"]),
    ]
    ok = True
    for fname, argv in runs_pass:
        ok = ok and main(["--session", session_paths[fname]] + argv) == 0
    for fname, argv in runs_fail:
        ok = ok and main(["--session", session_paths[fname]] + argv) == 1
    criterion("1b", "command line exit codes over the corpus", ok)


# -- 1: axiom suites on the corpus, with witnessed failures -------------------


def test_criterion_1_axiom_suites():
    from coringlab.coring import check_coring
    from coringlab.cowreath import check_cowreath
    from coringlab.entwine import check_entwining
    from coringlab.ore import check_ore_wreath
    from coringlab.wreath import check_l_wreath, check_wreath, twisted_tensor_product
    from coringlab.reports import PreconditionFailure

    ok = True
    # valid structures pass
    for c in (CORPUS.triv_z2, CORPUS.c2, CORPUS.c3):
        ok = ok and check_coring(c).ok
    for e in (CORPUS.flip_entwining, CORPUS.dk_entwining):
        ok = ok and check_entwining(e).ok
    for w in (CORPUS.flip_cw, CORPUS.flip_cw3, CORPUS.unit_cw,
              CORPUS.dl_cw[0], CORPUS.lifted_flip_cw, CORPUS.lifted_dk_cw):
        ok = ok and check_cowreath(w).ok
    rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = CORPUS.sign_flip_ttp
    ok = ok and check_wreath(rw).ok and check_l_wreath(lw).ok and alg_rep.ok
    for d in (CORPUS.ore_commutative, CORPUS.ore_quantum_plane,
              CORPUS.ore_weyl):
        ok = ok and check_ore_wreath(d, 4).ok

    # broken variants fail with a witness naming the violated equation
    def fails_with(rep, *tags):
        return (not rep.ok) and rep.witnesses and set(tags) & set(rep.equations())

    ok = ok and fails_with(check_coring(CORPUS.broken_coalgebra),
                           "counit-left", "counit-right")
    ok = ok and fails_with(check_entwining(CORPUS.broken_entwining),
                           "entwine-mult")
    ok = ok and fails_with(check_cowreath(CORPUS.broken_cw_delta),
                           "cw-counit")
    ok = ok and fails_with(check_cowreath(CORPUS.broken_cw_xi), "cw-counit",
                           "cw-twist", "xi-left-colinear")
    try:
        twisted_tensor_product(*CORPUS.broken_ttp_map())
        ok = False
    except PreconditionFailure as exc:
        ok = ok and "ttp-3" in exc.report.equations()
    ok = ok and fails_with(check_ore_wreath(CORPUS.ore_broken, 3),
                           "derivation", "mu-left-linear")
    criterion(1, "axiom suites with witnessed failures", ok)


# -- 2: equivalence of the two cowreath formulations --------------------------


def test_criterion_2_cowreath_equivalence():
    from coringlab.cowreath import check_cowreath, check_cowreath_abstract

    instances = [CORPUS.flip_cw, CORPUS.flip_cw3, CORPUS.unit_cw,
                 CORPUS.dl_cw[0], CORPUS.lifted_flip_cw, CORPUS.lifted_dk_cw,
                 CORPUS.broken_cw_delta, CORPUS.broken_cw_xi]
    ok = len(instances) >= 6
    invalid = 0
    for w in instances:
        concrete = check_cowreath(w)
        abstract = check_cowreath_abstract(w)
        ok = ok and (concrete.ok == abstract.ok)
        if not concrete.ok:
            invalid += 1
            ok = ok and bool(concrete.witnesses) and bool(abstract.witnesses)
    ok = ok and invalid >= 2
    criterion(2, "diagram and equation formulations agree", ok)


# -- 3: the product coring reproduces the tensor coalgebra --------------------


def test_criterion_3_product_reproduction():
    from coringlab.coring import check_coring, tensor_coalgebra
    from coringlab.cowreath import cowreath_product

    prod, morph = cowreath_product(CORPUS.flip_cw)
    tc = tensor_coalgebra(CORPUS.c2, CORPUS.d2)
    ok = (prod.comult.matrix == tc.comult.matrix
          and prod.counit.matrix == tc.counit.matrix
          and check_coring(prod).ok and morph.ok)
    for w in (CORPUS.flip_cw, CORPUS.flip_cw3, CORPUS.unit_cw,
              CORPUS.dl_cw[0], CORPUS.lifted_flip_cw, CORPUS.lifted_dk_cw):
        _, m = cowreath_product(w)
        ok = ok and m.ok
    criterion(3, "product coring matches the independent construction", ok)


# -- 4: adjunction transposes are mutually inverse ----------------------------


def test_criterion_4_adjunctions():
    from coringlab.coring import comodule_over_itself
    from coringlab.cowreath import (
        adjunction_hat,
        adjunction_tilde,
        cowreath_product,
        induced_comodule_tensor,
        sample_adjunction_maps,
        sample_vw_maps,
        vw_functor_w,
        vw_hat,
        vw_tilde,
    )

    ok = True
    for w in (CORPUS.flip_cw, CORPUS.flip_cw3, CORPUS.unit_cw,
              CORPUS.dl_cw[0], CORPUS.lifted_flip_cw, CORPUS.lifted_dk_cw):
        prod, _ = cowreath_product(w)
        x = comodule_over_itself(w.coring)
        y = induced_comodule_tensor(w, x, prod)
        samples = sample_adjunction_maps(w, x, y, count=5, seed=23)
        ok = ok and len(samples) == 5
        for f in samples:
            g = adjunction_hat(w, x, y, f)
            ok = ok and adjunction_tilde(w, x, y, g).matrix == f.matrix
            g2 = adjunction_hat(w, x, y, adjunction_tilde(w, x, y, g))
            ok = ok and g2.matrix == g.matrix
        z = vw_functor_w(w.object)
        vw_samples = sample_vw_maps(w.object, z, count=5, seed=29)
        ok = ok and len(vw_samples) == 5
        for g in vw_samples:
            gh = vw_hat(w.object, z, g)
            ok = ok and vw_tilde(w.object, z, gh).matrix == g.matrix
    criterion(4, "hat/tilde and raising/lowering round trips", ok)


# -- 5: lifted cowreaths -------------------------------------------------------


def test_criterion_5_lifts():
    from coringlab.coring import check_coring
    from coringlab.cowreath import check_cowreath, cowreath_product

    ok = True
    for w in (CORPUS.lifted_flip_cw, CORPUS.lifted_dk_cw):
        ok = ok and check_cowreath(w).ok
        prod, morph = cowreath_product(w)
        ok = ok and check_coring(prod).ok and morph.ok
    criterion(5, "entwining lifts pass and their products are corings", ok)


# -- 6: the graded twisted tensor product --------------------------------------


def test_criterion_6_twisted_tensor_product():
    from coringlab.exactla import QQ
    from coringlab.wreath import l_wreath_product

    rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = CORPUS.sign_flip_ttp
    p = prod_ext.total
    f = QQ
    ok = alg_rep.ok
    triples = 0
    for i in range(p.dim):
        for j in range(p.dim):
            for k in range(p.dim):
                lhs = p.mul_vec(p.mult[i][j], {k: f.one()})
                rhs = p.mul_vec({i: f.one()}, p.mult[j][k])
                ok = ok and lhs == rhs
                triples += 1
    ok = ok and triples == 64
    ix, iy = p.labels.index("x(x)1"), p.labels.index("1(x)y")
    xy = p.mul_vec({ix: f.one()}, {iy: f.one()})
    yx = p.mul_vec({iy: f.one()}, {ix: f.one()})
    ok = ok and bool(xy) and xy == {k: f.neg(v) for k, v in yx.items()}
    lprod, lrep = l_wreath_product(lw)
    ok = ok and lrep.ok and lprod.mult == p.mult and lprod.unit == p.unit
    criterion(6, "graded product is associative, noncommutative, two-sided", ok)


# -- 7: skew polynomial rings ----------------------------------------------------


def test_criterion_7_ore():
    from coringlab.ore import (
        ore_universal_check,
        ore_vs_wreath_product,
        twist_vs_skew_mul,
    )

    ok = True
    for d in (CORPUS.ore_commutative, CORPUS.ore_quantum_plane,
              CORPUS.ore_weyl):
        ok = ok and ore_vs_wreath_product(d, 4).ok
        ok = ok and twist_vs_skew_mul(d, 4).ok
    S, phi, z = CORPUS.ore_weyl_target
    ok = ok and ore_universal_check(CORPUS.ore_weyl, 4, S, phi, z).ok
    criterion(7, "twist table, rewrite product and universal extension", ok)


# -- 8: module twisting maps -----------------------------------------------------


def test_criterion_8_module_twisting():
    from coringlab.exactla import QQ, Matrix
    from coringlab.bimodule import LinearMap
    from coringlab.wreath import (
        BimoduleTwistData,
        check_bimodule_twisting,
        check_left_module_twisting,
        r_action_matrices_check,
    )

    rext, text, rmap, rw, lw, prod_ext, alg_rep, eta_rep = CORPUS.sign_flip_ttp
    mt = CORPUS.module_twist_self
    ok = check_left_module_twisting(mt).ok
    ok = ok and r_action_matrices_check(
        mt, text.t_bimodule, text.mult_map(), prod_ext.total,
        rw.rt_carrier()).ok
    paired = BimoduleTwistData(
        mt, r_x=rext.mult_map(), v_carrier=text.t_bimodule,
        l_v=text.mult_map(), r_v=text.mult_map(),
        v_twist=LinearMap(rmap.domain, rmap.codomain, rmap.matrix, "vtw"))
    ok = ok and check_bimodule_twisting(paired).ok
    perturbed = BimoduleTwistData(
        mt, r_x=rext.mult_map(), v_carrier=text.t_bimodule,
        l_v=text.mult_map(), r_v=text.mult_map(),
        v_twist=LinearMap(
            rmap.domain, rmap.codomain,
            rmap.matrix + Matrix.from_entries(QQ, 4, 4, {(3, 3): QQ.one()}),
            "vbad"))
    ok = ok and not check_bimodule_twisting(perturbed).ok
    criterion(8, "module twisting laws, induced actions, compatibility", ok)


# -- 9: infrastructure ------------------------------------------------------------


def test_criterion_9_infrastructure(tmp_path):
    from coringlab.exactla import GF, QQ, Matrix, kernel_basis, rank, rref, solve
    from coringlab.session import parse_session, serialize_session, write_session

    ok = True
    for fname, raw in corpus_sessions().items():
        path = tmp_path / fname
        write_session(raw, path)
        reparsed = parse_session(str(path))
        ok = ok and serialize_session(reparsed.raw) == serialize_session(raw)

    for field in (QQ, GF(5)):
        rng = random.Random(2024)
        for _ in range(100):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            m = Matrix.from_rows(field, [
                [field.from_int(rng.randint(-4, 4)) for _ in range(cols)]
                for _ in range(rows)])
            r, piv = rref(m)
            r2, piv2 = rref(r)
            ok = ok and r2 == r and piv2 == piv
            k = kernel_basis(m)
            ok = ok and rank(m) + k.cols == cols
            ok = ok and (m @ k).is_zero()
            x = Matrix.from_rows(field, [
                [field.from_int(rng.randint(-3, 3))] for _ in range(cols)])
            b = m @ x
            s = solve(m, b)
            ok = ok and s is not None and m @ s == b
    criterion(9, "serialization round trips and exact kernel invariants", ok)
