"""Bimodules, tensor products over an algebra as explicit quotients, and a
pipeline for building the long composite maps the checkers need.

Conventions.  Action matrices act on column vectors; `left_action[k]` is the
matrix of x -> e_k . x for the k-th basis element of the left algebra, and
`right_action[k]` of x -> x . e_k.  Tensor indices are row major: the pure
tensor m_i (x) n_j has flat index i * dim(N) + j.

M (x)_A N is the quotient of the ground-field tensor space by the span of
the balancing relations  m.a (x) n - m (x) a.n.  The quotient basis is the
set of non-pivot flat coordinates under the canonical reduced row echelon
form of that span, so it is reproducible and `section` picks pure-tensor
representatives (project . section = id).

Iterated tensors are built left associated.  A `Space` wraps a factor list
with the projection/section between the flat tensor space of its *leaves*
(atomic factors, recursively unfolding quotient factors) and the iterated
quotient; `regroup` converts between bracketings of the same leaves, which
is the explicit associator.

All values are immutable after construction and all operations are pure.
Quotients and spaces are memoized by object identity; the memo tables are
the only mutable state, so concurrent readers are safe once the structures
they share have been built.
"""

from __future__ import annotations

from .algebra import FinAlgebra
from .exactla import Matrix, kron_all
from .reports import InputError, Report, WellDefinednessError, Witness


def algebras_match(a: FinAlgebra, b: FinAlgebra) -> bool:
    return a is b or (
        a.field == b.field and a.dim == b.dim and a.mult == b.mult and a.unit == b.unit
    )


class Bimodule:
    """An (A, B)-bimodule with explicit action matrices."""

    def __init__(self, left_algebra, right_algebra, dim, left_action,
                 right_action, labels=None, name="M"):
        self.field = left_algebra.field
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.left_action = list(left_action)
        self.right_action = list(right_action)
        if len(self.left_action) != left_algebra.dim:
            raise InputError("need one left action matrix per basis element")
        if len(self.right_action) != right_algebra.dim:
            raise InputError("need one right action matrix per basis element")
        for m in self.left_action + self.right_action:
            if m.rows != dim or m.cols != dim:
                raise InputError("action matrix shape mismatch")
        self.labels = list(labels) if labels else [f"m{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise InputError("label count must equal dim")
        self.name = name

    # -- actions by arbitrary elements --------------------------------------

    def act_left_matrix(self, vec: dict) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for k, c in vec.items():
            out = out + self.left_action[k].scale(c)
        return out

    def act_right_matrix(self, vec: dict) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for k, c in vec.items():
            out = out + self.right_action[k].scale(c)
        return out

    def basis_label(self, i) -> str:
        return self.labels[i]

    def fmt_vec(self, v: dict) -> str:
        f = self.field
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            c = f.fmt(v[i])
            lab = self.basis_label(i)
            parts.append(lab if c == "1" else f"{c}*{lab}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Bimodule({self.name}, dim={self.dim})"


def check_bimodule(m: Bimodule) -> Report:
    """Unitality and associativity of both actions, and their commuting."""
    rep = Report(f"bimodule {m.name}")
    A, B = m.left_algebra, m.right_algebra
    f = m.field
    ident = Matrix.identity(f, m.dim)
    if m.act_left_matrix(A.unit) != ident:
        rep.add(Witness("left-unital", ("1",), "L(1)", "id"))
    if m.act_right_matrix(B.unit) != ident:
        rep.add(Witness("right-unital", ("1",), "R(1)", "id"))
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = m.act_left_matrix(A.mult[i][j])
            rhs = m.left_action[i] @ m.left_action[j]
            if lhs != rhs:
                rep.add(Witness("left-assoc", (A.labels[i], A.labels[j]), "L(ei*ej)", "L(ei)L(ej)"))
    for i in range(B.dim):
        for j in range(B.dim):
            lhs = m.act_right_matrix(B.mult[i][j])
            rhs = m.right_action[j] @ m.right_action[i]
            if lhs != rhs:
                rep.add(Witness("right-assoc", (B.labels[i], B.labels[j]), "R(ei*ej)", "R(ej)R(ei)"))
    for i in range(A.dim):
        for j in range(B.dim):
            lhs = m.left_action[i] @ m.right_action[j]
            rhs = m.right_action[j] @ m.left_action[i]
            if lhs != rhs:
                rep.add(Witness("actions-commute", (A.labels[i], B.labels[j]), "L;R", "R;L"))
    return rep


# ---------------------------------------------------------------------------
# stock bimodules


def regular_bimodule(a: FinAlgebra) -> Bimodule:
    """A as an (A, A)-bimodule by multiplication (cached per algebra)."""
    cached = getattr(a, "_regular_bimodule", None)
    if cached is None:
        cached = Bimodule(
            a, a, a.dim,
            [a.left_mult_matrix(i) for i in range(a.dim)],
            [a.right_mult_matrix(i) for i in range(a.dim)],
            labels=a.labels, name=a.name,
        )
        a._regular_bimodule = cached
    return cached


def k_bimodule(kalg: FinAlgebra, dim, labels=None, name="V") -> Bimodule:
    """A plain vector space as a bimodule over the one-dimensional algebra."""
    if kalg.dim != 1:
        raise InputError("k_bimodule needs the ground field algebra")
    ident = Matrix.identity(kalg.field, dim)
    return Bimodule(kalg, kalg, dim, [ident], [ident], labels, name)


def restricted_bimodule(total: FinAlgebra, iota, name=None) -> Bimodule:
    """The target of a ring extension iota: A -> T as an (A, A)-bimodule."""
    a = iota.source
    left, right = [], []
    for i in range(a.dim):
        img = iota.apply({i: a.field.one()})
        reg = regular_bimodule(total)
        left.append(reg.act_left_matrix(img))
        right.append(reg.act_right_matrix(img))
    return Bimodule(a, a, total.dim, left, right, labels=total.labels,
                    name=name or f"{total.name}|{a.name}")


# ---------------------------------------------------------------------------
# linear maps


class LinearMap:
    """A field-linear map between bimodules, stored as a matrix on the
    chosen (quotient) bases."""

    def __init__(self, domain: Bimodule, codomain: Bimodule, matrix: Matrix,
                 name="f"):
        if matrix.rows != codomain.dim or matrix.cols != domain.dim:
            raise InputError(
                f"map {name}: matrix is {matrix.rows}x{matrix.cols}, "
                f"expected {codomain.dim}x{domain.dim}"
            )
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        self.name = name

    @classmethod
    def identity(cls, b: Bimodule, name="id"):
        return cls(b, b, Matrix.identity(b.field, b.dim), name)

    @classmethod
    def zero(cls, domain, codomain, name="0"):
        return cls(domain, codomain, Matrix.zeros(domain.field, codomain.dim, domain.dim), name)

    def after(self, other: "LinearMap") -> "LinearMap":
        """self o other."""
        if other.codomain.dim != self.domain.dim:
            raise InputError("composition dimension mismatch")
        return LinearMap(other.domain, self.codomain,
                         self.matrix @ other.matrix,
                         name=f"{self.name}.{other.name}")

    def __add__(self, other):
        return LinearMap(self.domain, self.codomain, self.matrix + other.matrix,
                         name=f"{self.name}+{other.name}")

    def __sub__(self, other):
        return LinearMap(self.domain, self.codomain, self.matrix - other.matrix,
                         name=f"{self.name}-{other.name}")

    def __neg__(self):
        return LinearMap(self.domain, self.codomain, -self.matrix, name=f"-{self.name}")

    def scale(self, c):
        return LinearMap(self.domain, self.codomain, self.matrix.scale(c), name=self.name)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.domain.dim == other.domain.dim
            and self.codomain.dim == other.codomain.dim
            and self.matrix == other.matrix
        )

    __hash__ = None

    def apply(self, vec: dict) -> dict:
        return self.matrix.apply(vec)

    def __repr__(self):
        return f"LinearMap({self.name}: {self.domain.name} -> {self.codomain.name})"


def is_left_linear(f: LinearMap) -> bool:
    dom, cod = f.domain, f.codomain
    for k in range(dom.left_algebra.dim):
        if cod.left_action[k] @ f.matrix != f.matrix @ dom.left_action[k]:
            return False
    return True


def is_right_linear(f: LinearMap) -> bool:
    dom, cod = f.domain, f.codomain
    for k in range(dom.right_algebra.dim):
        if cod.right_action[k] @ f.matrix != f.matrix @ dom.right_action[k]:
            return False
    return True


def bilinearity_report(f: LinearMap, check_name=None) -> Report:
    rep = Report(check_name or f"bilinearity of {f.name}")
    dom, cod = f.domain, f.codomain
    for k in range(dom.left_algebra.dim):
        if cod.left_action[k] @ f.matrix != f.matrix @ dom.left_action[k]:
            rep.add(Witness("left-linear", (dom.left_algebra.labels[k],),
                            f"{f.name} o L", f"L o {f.name}"))
    for k in range(dom.right_algebra.dim):
        if cod.right_action[k] @ f.matrix != f.matrix @ dom.right_action[k]:
            rep.add(Witness("right-linear", (dom.right_algebra.labels[k],),
                            f"{f.name} o R", f"R o {f.name}"))
    return rep


# ---------------------------------------------------------------------------
# tensor quotients


class TensorQuotient(Bimodule):
    """M (x)_A N presented on the canonical non-pivot pure-tensor basis."""

    def __init__(self, base, factor_left, factor_right, dim, left_action,
                 right_action, project, section, free_cols, relations, name,
                 echelon=None):
        super().__init__(factor_left.left_algebra, factor_right.right_algebra,
                         dim, left_action, right_action, name=name)
        self.base = base
        self.factor_left = factor_left
        self.factor_right = factor_right
        self.project = project    # dim x (dim M * dim N)
        self.section = section    # (dim M * dim N) x dim
        self.free_cols = free_cols
        self.relations = relations
        self.echelon = echelon

    def kills(self, vec: dict) -> bool:
        """True when vec lies in the balancing relation span."""
        if self.echelon is not None:
            return not self.echelon.reduce(vec)
        return not self.project.apply(vec)

    def basis_label(self, t) -> str:
        i, j = divmod(self.free_cols[t], self.factor_right.dim)
        return f"{self.factor_left.basis_label(i)}(x){self.factor_right.basis_label(j)}"


_TENSOR_CACHE: dict = {}


def _apply_kron_side(mat: Matrix, other_dim: int, vec: dict, left: bool) -> dict:
    """(mat (x) I).apply(vec) or (I (x) mat).apply(vec) without building kron."""
    f = mat.field
    out: dict = {}
    cols = {}
    for idx, v in vec.items():
        if left:
            i, j = divmod(idx, other_dim)
            cols.setdefault(i, []).append((j, v))
        else:
            i, j = divmod(idx, mat.cols)
            cols.setdefault(j, []).append((i, v))
    for c, pairs in cols.items():
        col = mat.col(c)
        for p, w in col.items():
            for j, v in pairs:
                tgt = p * other_dim + j if left else j * mat.rows + p
                u = f.add(out.get(tgt, f.zero()), f.mul(w, v))
                if f.is_zero(u):
                    out.pop(tgt, None)
                else:
                    out[tgt] = u
    return out


def tensor_over(a: FinAlgebra, m: Bimodule, n: Bimodule, name=None) -> TensorQuotient:
    """The quotient M (x)_A N with projection, section and inherited actions.

    The inherited actions are checked to kill the balancing relations; a
    violation (possible only for inconsistent input actions) raises
    WellDefinednessError.
    """
    key = (id(a), id(m), id(n))
    cached = _TENSOR_CACHE.get(key)
    if cached is not None:
        return cached
    if not algebras_match(m.right_algebra, a) or not algebras_match(n.left_algebra, a):
        raise InputError(
            f"tensor base mismatch: {m.name} has right algebra "
            f"{m.right_algebra.name}, {n.name} has left algebra "
            f"{n.left_algebra.name}, expected {a.name}"
        )
    f = m.field
    dm, dn = m.dim, n.dim
    flat = dm * dn

    from .exactla import Echelon
    ech = Echelon(f, flat)
    relations = []
    for k in range(a.dim):
        rk = m.right_action[k]
        lk = n.left_action[k]
        for i in range(dm):
            ri = rk.col(i)
            for j in range(dn):
                rel: dict = {}
                for p, v in ri.items():
                    rel[p * dn + j] = v
                for q, w in lk.col(j).items():
                    tgt = i * dn + q
                    u = f.sub(rel.get(tgt, f.zero()), w)
                    if f.is_zero(u):
                        rel.pop(tgt, None)
                    else:
                        rel[tgt] = u
                if rel:
                    relations.append(rel)
                    ech.add(rel)
    free = ech.free_columns()
    qdim = len(free)
    pos = {c: t for t, c in enumerate(free)}
    proj_entries = {}
    for t, c in enumerate(free):
        proj_entries[(t, c)] = f.one()
    for p, row in ech.pivot_rows.items():
        for c, v in row.items():
            proj_entries[(pos[c], p)] = f.neg(v)
    project = Matrix.from_entries(f, qdim, flat, proj_entries)
    section = Matrix.from_entries(
        f, flat, qdim, {(c, t): f.one() for t, c in enumerate(free)}
    )

    left_action = [
        project @ _kron_matrix_side(m.left_action[k], dn, left=True) @ section
        for k in range(m.left_algebra.dim)
    ]
    right_action = [
        project @ _kron_matrix_side(n.right_action[k], dm, left=False) @ section
        for k in range(n.right_algebra.dim)
    ]
    tq = TensorQuotient(
        a, m, n, qdim, left_action, right_action, project, section,
        free, relations, name or f"({m.name}(x){n.name})", echelon=ech,
    )
    # the inherited actions must descend: they must map relations to relations
    for k in range(m.left_algebra.dim):
        lk = m.left_action[k]
        for rel in relations:
            img = _apply_kron_side(lk, dn, rel, left=True)
            if not tq.kills(img):
                raise WellDefinednessError(
                    f"left action of {m.left_algebra.labels[k]} does not "
                    f"descend to {tq.name}", relation=rel)
    for k in range(n.right_algebra.dim):
        rk = n.right_action[k]
        for rel in relations:
            img = _apply_kron_side(rk, dm, rel, left=False)
            if not tq.kills(img):
                raise WellDefinednessError(
                    f"right action of {n.right_algebra.labels[k]} does not "
                    f"descend to {tq.name}", relation=rel)
    _TENSOR_CACHE[key] = tq
    return tq


def _kron_matrix_side(mat: Matrix, other_dim: int, left: bool) -> Matrix:
    ident = Matrix.identity(mat.field, other_dim)
    return mat.kron(ident) if left else ident.kron(mat)


def tensor_maps(f: LinearMap, g: LinearMap, source_q: TensorQuotient,
                target_q: TensorQuotient, name=None) -> LinearMap:
    """The induced map f (x) g between tensor quotients.

    Verifies well-definedness: f (x) g must carry the relation span of the
    source into the kernel of the target projection.
    """
    if source_q.factor_left.dim != f.domain.dim or source_q.factor_right.dim != g.domain.dim:
        raise InputError("source quotient factors do not match map domains")
    if target_q.factor_left.dim != f.codomain.dim or target_q.factor_right.dim != g.codomain.dim:
        raise InputError("target quotient factors do not match map codomains")
    big = f.matrix.kron(g.matrix)
    for rel in source_q.relations:
        if not target_q.kills(big.tapply(rel)):
            raise WellDefinednessError(
                f"{f.name}(x){g.name} is not well defined on {source_q.name}: "
                f"relation {sorted(rel.items())} not killed", relation=rel)
    mat = target_q.project @ big @ source_q.section
    return LinearMap(source_q, target_q, mat, name or f"{f.name}(x){g.name}")


# ---------------------------------------------------------------------------
# spaces: iterated left-associated quotients with flat projections


def leaf_factors(b: Bimodule):
    if isinstance(b, TensorQuotient):
        return leaf_factors(b.factor_left) + leaf_factors(b.factor_right)
    return (b,)


def _deep_pair(b: Bimodule):
    """(project, section) between the leaf-flat space of b and b itself."""
    cached = getattr(b, "_deep_pair", None)
    if cached is not None:
        return cached
    if isinstance(b, TensorQuotient):
        pl, sl = _deep_pair(b.factor_left)
        pr, sr = _deep_pair(b.factor_right)
        proj = b.project @ pl.kron(pr)
        sec = sl.kron(sr) @ b.section
    else:
        proj = sec = Matrix.identity(b.field, b.dim)
    b._deep_pair = (proj, sec)
    return b._deep_pair


class Space:
    """A left-associated iterated tensor quotient of a factor list."""

    def __init__(self, factors):
        if not factors:
            raise InputError("space needs at least one factor")
        self.factors = tuple(factors)
        self.field = factors[0].field
        cur = factors[0]
        proj = Matrix.identity(self.field, cur.dim)
        sec = Matrix.identity(self.field, cur.dim)
        for nxt in factors[1:]:
            base = cur.right_algebra
            tq = tensor_over(base, cur, nxt)
            ident = Matrix.identity(self.field, nxt.dim)
            proj = tq.project @ proj.kron(ident)
            sec = sec.kron(ident) @ tq.section
            cur = tq
        self.quotient = cur
        self.project = proj      # factor flat -> quotient
        self.section = sec
        self.leaves = tuple(l for f in factors for l in leaf_factors(f))
        dp = [_deep_pair(f) for f in factors]
        self.deep_project = proj @ kron_all([p for p, _ in dp])
        self.deep_section = kron_all([s for _, s in dp]) @ sec

    @property
    def dim(self):
        return self.quotient.dim

    def leaf_flat_dim(self):
        d = 1
        for l in self.leaves:
            d *= l.dim
        return d

    def __repr__(self):
        return f"Space({'x'.join(f.name for f in self.factors)}, dim={self.dim})"


_SPACE_CACHE: dict = {}


def space(*factors) -> Space:
    key = tuple(id(f) for f in factors)
    sp = _SPACE_CACHE.get(key)
    if sp is None:
        sp = Space(factors)
        _SPACE_CACHE[key] = sp
    return sp


def regroup(src: Space, dst: Space, name="regroup") -> LinearMap:
    """Canonical isomorphism between two bracketings of the same leaves."""
    if tuple(src.leaves) != tuple(dst.leaves):
        raise InputError("regroup requires identical leaf sequences")
    return LinearMap(src.quotient, dst.quotient,
                     dst.deep_project @ src.deep_section, name)


def associator(m: Bimodule, n: Bimodule, p: Bimodule):
    """(M (x) N) (x) P -> M (x) (N (x) P), with inverse."""
    mn = tensor_over(m.right_algebra, m, n)
    np_ = tensor_over(n.right_algebra, n, p)
    left = space(mn, p)
    right = space(m, np_)
    return regroup(left, right, "assoc"), regroup(right, left, "assoc-inv")


# ---------------------------------------------------------------------------
# map pipelines


class Pipe:
    """Builds a composite map between iterated quotients stage by stage.

    The accumulated matrix acts on the flat tensor space of the current leaf
    sequence.  Every stage map must be bilinear over its outer algebras (the
    checkers verify this for user-supplied maps before piping them), which
    makes the final projection independent of the chosen representatives.
    """

    def __init__(self, source: Space):
        self.source = source
        self.factors = list(source.factors)
        self.field = source.field
        self.matrix = Matrix.identity(self.field, source.leaf_flat_dim())

    # -- geometry helpers ----------------------------------------------------

    def _leaf_dims(self):
        return [l.dim for f in self.factors for l in leaf_factors(f)]

    def _pre_post(self, at, takes):
        pre = 1
        for f in self.factors[:at]:
            for l in leaf_factors(f):
                pre *= l.dim
        mid_src = 1
        for f in self.factors[at:at + takes]:
            for l in leaf_factors(f):
                mid_src *= l.dim
        post = 1
        for f in self.factors[at + takes:]:
            for l in leaf_factors(f):
                post *= l.dim
        return pre, mid_src, post

    def _stage(self, flat_map: Matrix, at, takes, gives):
        pre, mid, post = self._pre_post(at, takes)
        if flat_map.cols != mid:
            raise InputError(
                f"stage expects flat dim {mid}, map has {flat_map.cols}")
        stage = flat_map
        if pre != 1:
            stage = Matrix.identity(self.field, pre).kron(stage)
        if post != 1:
            stage = stage.kron(Matrix.identity(self.field, post))
        self.matrix = stage @ self.matrix
        self.factors[at:at + takes] = list(gives)
        return self

    # -- stages ---------------------------------------------------------------

    def apply(self, f: LinearMap, at=0, takes=1, gives=None):
        """Apply f to the factors at positions [at, at+takes)."""
        consumed = self.factors[at:at + takes]
        dom = space(*consumed)
        if dom.quotient.dim != f.domain.dim:
            raise InputError(
                f"pipe stage {f.name}: domain dim {f.domain.dim} but slot "
                f"has dim {dom.quotient.dim}")
        gives = list(gives) if gives is not None else [f.codomain]
        cod = space(*gives)
        if cod.quotient.dim != f.codomain.dim:
            raise InputError(
                f"pipe stage {f.name}: codomain dim {f.codomain.dim} but "
                f"gives has dim {cod.quotient.dim}")
        flat_map = cod.deep_section @ f.matrix @ dom.deep_project
        return self._stage(flat_map, at, takes, gives)

    def apply_raw(self, matrix: Matrix, at, takes, gives):
        """Apply a raw leaf-flat-level matrix (for scalar formula maps)."""
        return self._stage(matrix, at, takes, list(gives))

    def insert_central(self, b: Bimodule, element: dict, at):
        """Insert a factor at a fixed central element (units of algebras)."""
        col = Matrix.from_entries(
            self.field, b.dim, 1,
            {(i, 0): v for i, v in element.items()})
        pd, sd = _deep_pair(b)
        return self._stage(sd @ col, at, 0, [b])

    def absorb_left(self, at):
        """Contract a regular-algebra factor into its left neighbour."""
        if at == 0:
            raise InputError("absorb_left needs a left neighbour")
        b = self.factors[at]
        x = self.factors[at - 1]
        mat = _contract_matrix(x, b, into_left=True)
        return self._stage(mat, at - 1, 2, [x])

    def absorb_right(self, at):
        """Contract a regular-algebra factor into its right neighbour."""
        if at == len(self.factors) - 1:
            raise InputError("absorb_right needs a right neighbour")
        b = self.factors[at]
        x = self.factors[at + 1]
        mat = _contract_matrix(x, b, into_left=False)
        return self._stage(mat, at, 2, [x])

    def refine(self, at):
        """Re-bracket: expose the two factors of a quotient factor."""
        f = self.factors[at]
        if not isinstance(f, TensorQuotient):
            raise InputError("refine needs a TensorQuotient factor")
        self.factors[at:at + 1] = [f.factor_left, f.factor_right]
        return self

    def coarsen(self, at, takes, tq: Bimodule):
        """Re-bracket: group consecutive factors whose leaves match tq's."""
        grouped = tuple(l for f in self.factors[at:at + takes] for l in leaf_factors(f))
        if grouped != leaf_factors(tq):
            raise InputError("coarsen leaves do not match")
        self.factors[at:at + takes] = [tq]
        return self

    # -- finish ---------------------------------------------------------------

    def done(self, target: Space = None, name="pipe") -> LinearMap:
        cur = space(*self.factors)
        if target is None:
            target = cur
        if tuple(target.leaves) != tuple(cur.leaves):
            raise InputError("pipe target leaves do not match")
        mat = target.deep_project @ self.matrix @ self.source.deep_section
        return LinearMap(self.source.quotient, target.quotient, mat, name)


def _contract_matrix(x: Bimodule, b: Bimodule, into_left: bool) -> Matrix:
    """Leaf-flat matrix of x (x) b -> x.b, or b (x) x -> b.x.

    b must be the regular bimodule of the algebra acting on x on that side.
    """
    f = x.field
    pb, sb = _deep_pair(b)
    px, sx = _deep_pair(x)
    actions = x.right_action if into_left else x.left_action
    alg_dim = len(actions)
    if b.dim != alg_dim:
        raise InputError("absorbed factor is not the acting algebra")
    entries = {}
    for k in range(alg_dim):
        act = actions[k]
        for i, row in act.data.items():
            for j, v in row.items():
                if into_left:
                    entries[(i, j * alg_dim + k)] = v
                else:
                    entries[(i, k * x.dim + j)] = v
    core = Matrix.from_entries(f, x.dim, x.dim * alg_dim, entries)
    flat_in = px.kron(pb) if into_left else pb.kron(px)
    return sx @ core @ flat_in


def pipe(source: Space) -> Pipe:
    return Pipe(source)


# ---------------------------------------------------------------------------
# unit isomorphisms


def unit_iso(side: str, m: Bimodule):
    """The isomorphism A (x)_A M = M (left) or M (x)_A A = M (right).

    Returns (iso, inverse) as LinearMaps on the canonical quotient bases.
    """
    if side == "left":
        a_reg = regular_bimodule(m.left_algebra)
        src = space(a_reg, m)
        iso = pipe(src).absorb_right(0).done(space(m), name="unit-l")
        inv = pipe(space(m)).insert_central(
            a_reg, m.left_algebra.unit_vector(), 0
        ).done(src, name="unit-l-inv")
    elif side == "right":
        a_reg = regular_bimodule(m.right_algebra)
        src = space(m, a_reg)
        iso = pipe(src).absorb_left(1).done(space(m), name="unit-r")
        inv = pipe(space(m)).insert_central(
            a_reg, m.right_algebra.unit_vector(), 1
        ).done(src, name="unit-r-inv")
    else:
        raise InputError("side must be 'left' or 'right'")
    ident_q = Matrix.identity(m.field, iso.domain.dim)
    ident_m = Matrix.identity(m.field, m.dim)
    if iso.matrix @ inv.matrix != ident_m or inv.matrix @ iso.matrix != ident_q:
        raise WellDefinednessError("unit isomorphism failed to invert")
    return iso, inv


def clear_caches():
    """Drop memoized tensor quotients and spaces (mostly for tests)."""
    _TENSOR_CACHE.clear()
    _SPACE_CACHE.clear()


# ---------------------------------------------------------------------------
# solving for maps subject to linear constraints


class MapSolver:
    """Finds all matrices F: in_dim -> out_dim satisfying linear equations.

    Each equation is a list of terms (sign, L, R, wrap, d) contributing
    sign * L @ w(F) @ R, where w(F) is F, F (x) I_d, or I_d (x) F.  The
    solution space is returned as its canonical kernel basis, so sampling
    from it is reproducible.
    """

    def __init__(self, field, out_dim: int, in_dim: int):
        self.field = field
        self.out_dim = out_dim
        self.in_dim = in_dim
        self.rows: list = []

    def add_equation(self, terms):
        f = self.field
        coeffs: dict = {}
        shape = None
        for sign, L, R, wrap, d in terms:
            sgn = f.one() if sign > 0 else f.neg(f.one())
            if shape is None:
                shape = (L.rows, R.cols)
            for p, lrow in L.data.items():
                for lcol, lv in lrow.items():
                    if wrap == "none":
                        i, c = lcol, None
                    elif wrap == "right":
                        i, c = divmod(lcol, d)
                    else:  # left
                        c, i = divmod(lcol, self.out_dim)
                    if i >= self.out_dim:
                        continue
                    for j in range(self.in_dim):
                        if wrap == "none":
                            rrow = j
                        elif wrap == "right":
                            rrow = j * d + c
                        else:
                            rrow = c * self.in_dim + j
                        rr = R.data.get(rrow)
                        if not rr:
                            continue
                        for q, rv in rr.items():
                            key = (p * shape[1] + q, i * self.in_dim + j)
                            val = f.add(coeffs.get(key, f.zero()),
                                        f.mul(sgn, f.mul(lv, rv)))
                            if f.is_zero(val):
                                coeffs.pop(key, None)
                            else:
                                coeffs[key] = val
        rows: dict = {}
        for (r, c), v in coeffs.items():
            rows.setdefault(r, {})[c] = v
        self.rows.extend(rows.values())
        return self

    def solve_basis(self):
        """Canonical basis of the solution space, as a list of matrices."""
        from .exactla import Echelon, kernel_basis
        n = self.out_dim * self.in_dim
        mat = Matrix(self.field, len(self.rows), n,
                     {i: dict(r) for i, r in enumerate(self.rows) if r})
        ker = kernel_basis(mat)
        out = []
        for t in range(ker.cols):
            col = ker.col(t)
            entries = {}
            for flat, v in col.items():
                i, j = divmod(flat, self.in_dim)
                entries[(i, j)] = v
            out.append(Matrix.from_entries(self.field, self.out_dim,
                                           self.in_dim, entries))
        return out


def sample_solutions(basis, count, seed, field):
    """Deterministic small-integer combinations of a solution basis."""
    import random
    rng = random.Random(seed)
    out = []
    if not basis:
        return out
    guard = 0
    while len(out) < count and guard < 50 * count:
        guard += 1
        coeffs = [rng.randint(-2, 2) for _ in basis]
        if all(c == 0 for c in coeffs):
            continue
        acc = Matrix.zeros(field, basis[0].rows, basis[0].cols)
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + b.scale(field.from_int(c))
        if acc.is_zero():
            continue
        out.append(acc)
    return out
