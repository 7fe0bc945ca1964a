"""Exact dense linear algebra over the rationals and prime fields.

Every morphism in the system eventually reduces to a matrix over one of
these fields, so all arithmetic here is exact: Fraction entries for the
rationals, canonical residues in [0, p) for prime fields.  No floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


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


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: the rationals ('Q') or a prime field ('Fp')."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Fp"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp" and not _is_prime(self.p):
            raise ValueError(f"prime field order {self.p} is not prime")
        if self.kind == "Q" and self.p != 0:
            raise ValueError("rationals take no modulus")

    # -- scalar arithmetic ------------------------------------------------

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def from_int(self, n: int):
        return Fraction(n) if self.kind == "Q" else n % self.p

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.kind == "Q":
            return 1 / Fraction(a)
        return pow(a, self.p - 2, self.p)

    # -- text round trip ---------------------------------------------------

    def parse_scalar(self, text: str):
        text = text.strip()
        if self.kind == "Q":
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        return int(text) % self.p

    def format_scalar(self, a) -> str:
        if self.kind == "Q":
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a % self.p)

    def format(self) -> str:
        return "Q" if self.kind == "Q" else f"F{self.p}"


def rationals() -> FieldSpec:
    return FieldSpec("Q")


def prime_field(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)


def parse_field(text: str) -> FieldSpec:
    text = text.strip()
    if text == "Q":
        return rationals()
    if text.startswith("F") and text[1:].isdigit():
        return prime_field(int(text[1:]))
    raise ValueError(f"unknown field spec {text!r} (expected Q or F<p>)")


class Mat:
    """Immutable dense matrix with entries in a FieldSpec.

    A morphism k^cols -> k^rows acting on column vectors.  Entries are kept
    in canonical form (Fraction normalises itself; residues are reduced at
    construction), so == is a valid exactness oracle.
    """

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        if field.kind == "Q":
            entries = tuple(Fraction(e) for e in entries)
        else:
            entries = tuple(int(e) % field.p for e in entries)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(field: FieldSpec, rows_data) -> "Mat":
        rows_data = [list(r) for r in rows_data]
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if rows_data else 0
        if any(len(r) != ncols for r in rows_data):
            raise ValueError("ragged rows")
        return Mat(field, nrows, ncols, [e for r in rows_data for e in r])

    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "Mat":
        z = field.zero()
        return Mat(field, rows, cols, [z] * (rows * cols))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Mat":
        z, o = field.zero(), field.one()
        return Mat(field, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    # -- access ------------------------------------------------------------

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> "Mat":
        return Mat(self.field, self.rows, 1, [self.at(i, j) for i in range(self.rows)])

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(e == z for e in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Mat({self.field.format()}, {self.rows}x{self.cols})"

    # -- arithmetic ----------------------------------------------------------

    def add(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        f = self.field
        return Mat(f, self.rows, self.cols, [f.add(a, b) for a, b in zip(self.entries, other.entries)])

    def sub(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        f = self.field
        return Mat(f, self.rows, self.cols, [f.sub(a, b) for a, b in zip(self.entries, other.entries)])

    def neg(self) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, [f.neg(a) for a in self.entries])

    def scale(self, c) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, [f.mul(c, a) for a in self.entries])

    def mul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        oc = other.cols
        out = [0 if f.kind == "Fp" else f.zero()] * (self.rows * oc)
        se, oe = self.entries, other.entries
        for i in range(self.rows):
            ibase = i * self.cols
            obase = i * oc
            for k in range(self.cols):
                a = se[ibase + k]
                if not a:
                    continue
                kbase = k * oc
                for j in range(oc):
                    b = oe[kbase + j]
                    if b:
                        out[obase + j] += a * b
        return Mat(f, self.rows, oc, out)

    def transpose(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows,
                   [self.at(i, j) for j in range(self.cols) for i in range(self.rows)])

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("hstack row mismatch")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return Mat(self.field, self.rows, self.cols + other.cols, out)

    def _same_shape(self, other: "Mat"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    # -- text round trip -----------------------------------------------------

    def format(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"[{self.rows}x{self.cols}]"
        return ";".join(",".join(self.field.format_scalar(e) for e in self.row(i)) for i in range(self.rows))


def parse_matrix(field: FieldSpec, text: str) -> Mat:
    text = text.strip()
    if text.startswith("["):
        shape = text[1:-1]
        r, c = shape.split("x")
        return Mat.zeros(field, int(r), int(c))
    rows = [[field.parse_scalar(e) for e in row.split(",")] for row in text.split(";")]
    return Mat.from_rows(field, rows)


def rref(m: Mat) -> tuple[Mat, int, tuple[int, ...]]:
    """Reduced row-echelon form: (reduced, rank, pivot columns).

    Row space is preserved and the result is the unique RREF, so repeated
    application is the identity.
    """
    f = m.field
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    pr = 0
    for pc in range(m.cols):
        pivot_row = None
        for i in range(pr, m.rows):
            if rows[i][pc] != f.zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = f.inv(rows[pr][pc])
        rows[pr] = [f.mul(inv, e) for e in rows[pr]]
        for i in range(m.rows):
            if i != pr and rows[i][pc] != f.zero():
                c = rows[i][pc]
                rows[i] = [f.sub(a, f.mul(c, b)) for a, b in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    reduced = Mat(f, m.rows, m.cols, [e for r in rows for e in r])
    return reduced, len(pivots), tuple(pivots)


def rank(m: Mat) -> int:
    return rref(m)[1]


def nullspace(m: Mat) -> Mat:
    """Columns form the canonical RREF-derived basis of {x : m x = 0}."""
    f = m.field
    reduced, r, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    cols = []
    for fc in free:
        v = [f.zero()] * m.cols
        v[fc] = f.one()
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(reduced.at(i, fc))
        cols.append(v)
    return Mat(f, m.cols, len(cols), [cols[j][i] for i in range(m.cols) for j in range(len(cols))])


def solve(a: Mat, b: Mat) -> Mat | None:
    """One exact solution x of a x = b, or None when none exists.

    The returned solution is the canonical one with all free variables zero.
    """
    if a.rows != b.rows:
        raise ValueError(f"solve: {a.rows} equation rows vs rhs with {b.rows} rows")
    f = a.field
    aug = a.hstack(b)
    reduced, _, pivots = rref(aug)
    main_pivots = [p for p in pivots if p < a.cols]
    if len(main_pivots) != len(pivots):
        return None  # a pivot in the rhs block: inconsistent system
    out = [[f.zero()] * b.cols for _ in range(a.cols)]
    for i, pc in enumerate(main_pivots):
        for j in range(b.cols):
            out[pc][j] = reduced.at(i, a.cols + j)
    return Mat.from_rows(f, out) if a.cols else Mat(f, 0, b.cols, [])


def inverse(m: Mat) -> Mat | None:
    if m.rows != m.cols:
        return None
    x = solve(m, Mat.identity(m.field, m.rows))
    if x is None:
        return None
    return x if m.mul(x) == Mat.identity(m.field, m.rows) else None
