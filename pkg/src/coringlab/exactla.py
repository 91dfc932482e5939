"""Exact linear algebra over Q and GF(p).

Scalars are `fractions.Fraction` for Q (arbitrary precision, so row reduction
never overflows) and canonical ints in [0, p) for GF(p).  Matrices are sparse:
a map row -> {col -> nonzero scalar}.  Reduced row echelon forms are unique
for a given row space, so pivot columns, kernels and quotient bases are
reproducible no matter in which order relations are fed in.

Pivoting convention: columns are eliminated left to right; within a column
the first remaining row with a nonzero entry is used.  This matches the
textbook RREF and keeps every derived basis deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .reports import InputError


# ---------------------------------------------------------------------------
# fields


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field Q with Fraction scalars."""

    name = "QQ"
    char = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def parse(self, text):
        if isinstance(text, Fraction):
            return text
        if isinstance(text, int):
            return Fraction(text)
        return Fraction(str(text))

    def fmt(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """GF(p) with int scalars reduced to [0, p)."""

    char: int

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= 2**31 or not _is_prime(p):
            raise InputError(f"modulus {p!r} is not a prime below 2^31")
        self.p = p
        self.char = p
        self.name = f"GF({p})"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def parse(self, text):
        if isinstance(text, int):
            return text % self.p
        if isinstance(text, Fraction):
            return self.div(text.numerator % self.p, text.denominator % self.p)
        s = str(text)
        if "/" in s:
            num, den = s.split("/")
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(s) % self.p

    def fmt(self, a) -> str:
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_GF_CACHE: dict = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def field_from_name(name: str):
    name = name.strip()
    if name in ("QQ", "Q"):
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    raise InputError(f"unknown field {name!r}; use 'QQ' or 'GF(p)'")


# ---------------------------------------------------------------------------
# sparse vectors (dict col -> scalar, zeros never stored)


def vec_add_scaled(field, target: dict, src: dict, coeff):
    """target += coeff * src, in place."""
    if field.is_zero(coeff):
        return target
    for j, v in src.items():
        w = field.add(target.get(j, field.zero()), field.mul(coeff, v))
        if field.is_zero(w):
            target.pop(j, None)
        else:
            target[j] = w
    return target


def vec_scale(field, src: dict, coeff) -> dict:
    if field.is_zero(coeff):
        return {}
    return {j: field.mul(coeff, v) for j, v in src.items()}


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Sparse matrix over a fixed field.  Treat instances as immutable."""

    __slots__ = ("field", "rows", "cols", "data", "_t")

    def __init__(self, field, rows: int, cols: int, data: dict | None = None):
        if rows < 0 or cols < 0:
            raise InputError("negative matrix dimensions")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data if data is not None else {}
        self._t = None

    # -- construction ------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, field, n):
        one = field.one()
        return cls(field, n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def from_rows(cls, field, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        data = {}
        for i, row in enumerate(rows_list):
            if len(row) != cols:
                raise InputError("ragged matrix rows")
            r = {}
            for j, v in enumerate(row):
                v = field.parse(v)
                if not field.is_zero(v):
                    r[j] = v
            if r:
                data[i] = r
        return cls(field, rows, cols, data)

    @classmethod
    def from_entries(cls, field, rows, cols, entries: dict):
        data = {}
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise InputError("entry outside matrix shape")
            if not field.is_zero(v):
                data.setdefault(i, {})[j] = v
        return cls(field, rows, cols, data)

    @classmethod
    def column(cls, field, vec: dict, rows):
        data = {i: {0: v} for i, v in vec.items() if not field.is_zero(v)}
        return cls(field, rows, 1, data)

    # -- access ------------------------------------------------------------

    def entry(self, i, j):
        return self.data.get(i, {}).get(j, self.field.zero())

    def col(self, j) -> dict:
        out = {}
        for i, row in self.data.items():
            if j in row:
                out[i] = row[j]
        return out

    def row(self, i) -> dict:
        return dict(self.data.get(i, {}))

    def to_rows(self):
        z = self.field.zero()
        return [
            [self.data.get(i, {}).get(j, z) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def nnz(self):
        return sum(len(r) for r in self.data.values())

    def is_zero(self):
        return not self.data

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    __hash__ = None

    def __add__(self, other):
        self._expect_shape(other, same=True)
        f = self.field
        data = {i: dict(r) for i, r in self.data.items()}
        for i, r in other.data.items():
            tgt = data.setdefault(i, {})
            vec_add_scaled(f, tgt, r, f.one())
            if not tgt:
                del data[i]
        return Matrix(f, self.rows, self.cols, data)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one()))

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one()))

    def scale(self, coeff):
        f = self.field
        if f.is_zero(coeff):
            return Matrix(f, self.rows, self.cols)
        data = {
            i: {j: f.mul(coeff, v) for j, v in r.items()}
            for i, r in self.data.items()
        }
        return Matrix(f, self.rows, self.cols, data)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError(
                f"matmul shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        f = self.field
        data = {}
        orows = other.data
        for i, arow in self.data.items():
            acc = {}
            for k, v in arow.items():
                brow = orows.get(k)
                if brow:
                    vec_add_scaled(f, acc, brow, v)
            if acc:
                data[i] = acc
        return Matrix(f, self.rows, other.cols, data)

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse column vector."""
        f = self.field
        zero = f.zero()
        out = {}
        for i, row in self.data.items():
            acc = zero
            for j in row.keys() & vec.keys():
                acc = f.add(acc, f.mul(row[j], vec[j]))
            if not f.is_zero(acc):
                out[i] = acc
        return out

    def col_iter(self, j):
        for i, row in self.data.items():
            if j in row:
                yield i, row[j]

    def transpose(self):
        data = {}
        for i, row in self.data.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return Matrix(self.field, self.cols, self.rows, data)

    def tapply(self, vec: dict) -> dict:
        """Matrix times sparse vector, iterating columns (cached transpose);
        preferable when the vector support is much smaller than the row
        count."""
        if self._t is None:
            self._t = self.transpose()
        f = self.field
        out: dict = {}
        for j, v in vec.items():
            col = self._t.data.get(j)
            if col:
                vec_add_scaled(f, out, col, v)
        return out

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, row-major index convention."""
        f = self.field
        data = {}
        oc, orr = other.cols, other.rows
        for i1, r1 in self.data.items():
            for i2, r2 in other.data.items():
                tgt = data.setdefault(i1 * orr + i2, {})
                for j1, v1 in r1.items():
                    for j2, v2 in r2.items():
                        tgt[j1 * oc + j2] = f.mul(v1, v2)
        return Matrix(f, self.rows * orr, self.cols * oc, data)

    def _expect_shape(self, other, same=False):
        if same and (self.rows != other.rows or self.cols != other.cols):
            raise InputError("matrix shape mismatch")

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols}, nnz={self.nnz()})"


def kron_all(mats) -> Matrix:
    out = None
    for m in mats:
        out = m if out is None else out.kron(m)
    if out is None:
        raise InputError("kron of empty list")
    return out


# ---------------------------------------------------------------------------
# echelon forms


class Echelon:
    """Incrementally maintained reduced row echelon basis of a row space.

    `pivot_rows[c]` is the unique basis row with leading 1 in column c; its
    other nonzero entries sit only on non-pivot columns.  `touch[c]` indexes
    which pivot rows have a nonzero entry in column c (for back substitution).
    """

    def __init__(self, field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivot_rows: dict = {}
        self.touch: dict = {}

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec modulo the current row space (vec is not mutated).

        Stored pivot rows carry no pivot-column entries (the leading 1 is
        implicit and back substitution removed the rest), so one pass over
        the pivot columns present in vec is complete.
        """
        f = self.field
        v = dict(vec)
        for p in list(v.keys() & self.pivot_rows.keys()):
            coeff = v.pop(p)
            vec_add_scaled(f, v, self.pivot_rows[p], f.neg(coeff))
        return v

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True if the rank grew."""
        f = self.field
        v = self.reduce(vec)
        if not v:
            return False
        lead = min(v)
        v = vec_scale(f, v, f.inv(v[lead]))
        del v[lead]
        # back-substitute the new pivot into existing rows
        for q in list(self.touch.get(lead, ())):
            row = self.pivot_rows[q]
            coeff = row.pop(lead)
            self._untrack(q, (lead,))
            before = set(row)
            vec_add_scaled(f, row, v, f.neg(coeff))
            self._track(q, set(row) - before)
            for c in before - set(row):
                self._untrack(q, (c,))
        self.pivot_rows[lead] = v
        self._track(lead, v.keys())
        return True

    def _track(self, pivot, cols):
        for c in cols:
            self.touch.setdefault(c, set()).add(pivot)

    def _untrack(self, pivot, cols):
        for c in cols:
            s = self.touch.get(c)
            if s:
                s.discard(pivot)
                if not s:
                    del self.touch[c]

    def pivots(self):
        return tuple(sorted(self.pivot_rows))

    def free_columns(self):
        piv = self.pivot_rows
        return tuple(c for c in range(self.ncols) if c not in piv)

    def full_row(self, pivot) -> dict:
        row = dict(self.pivot_rows[pivot])
        row[pivot] = self.field.one()
        return row


def rref(m: Matrix):
    """Reduced row echelon form.  Returns (reduced Matrix, pivot columns)."""
    ech = Echelon(m.field, m.cols)
    for i in range(m.rows):
        row = m.data.get(i)
        if row:
            ech.add(row)
    pivots = ech.pivots()
    data = {}
    for i, p in enumerate(pivots):
        data[i] = ech.full_row(p)
    return Matrix(m.field, m.rows, m.cols, data), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form the canonical null space basis, one per free column.

    The column for free column f has 1 at coordinate f and -r[p][f] at each
    pivot coordinate p, in increasing free-column order.
    """
    ech = Echelon(m.field, m.cols)
    for i in range(m.rows):
        row = m.data.get(i)
        if row:
            ech.add(row)
    f = m.field
    free = ech.free_columns()
    data = {}
    for t, c in enumerate(free):
        data.setdefault(c, {})[t] = f.one()
        for p, row in ech.pivot_rows.items():
            if c in row:
                data.setdefault(p, {})[t] = f.neg(row[c])
    return Matrix(f, m.cols, len(free), data)


def solve(m: Matrix, rhs: Matrix):
    """Particular solution of m @ x = rhs with free variables set to 0.

    Returns None when any rhs column is outside the column space.
    """
    if rhs.rows != m.rows:
        raise InputError("rhs row count does not match")
    f = m.field
    aug_cols = m.cols + rhs.cols
    ech = Echelon(f, aug_cols)
    for i in range(m.rows):
        row = dict(m.data.get(i, {}))
        for j, v in rhs.data.get(i, {}).items():
            row[m.cols + j] = v
        if row:
            ech.add(row)
    for p in ech.pivot_rows:
        if p >= m.cols:
            return None
    data = {}
    for p, row in ech.pivot_rows.items():
        for j, v in row.items():
            if j >= m.cols:
                data.setdefault(p, {})[j - m.cols] = v
    return Matrix(f, m.cols, rhs.cols, data)
