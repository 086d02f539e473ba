"""Exact dense linear algebra over Z, Q, and F_p.

Provides Smith normal form with unimodular transforms (arbitrary-precision
integers throughout), rank over the fraction field, exact linear solving,
and homology summands ker/im of a pair of composable differentials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .rings import QQ, ZZ, RingSpec, Scalar


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix with row-major entries over an exact ring."""

    ring: RingSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence]) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        ents = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            ents.extend(ring.normalize(x) for x in row)
        return cls(ring, r, c, tuple(ents))

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> "ExactMatrix":
        return cls(ring, rows, cols, (ring.zero,) * (rows * cols))

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "ExactMatrix":
        ents = [ring.zero] * (n * n)
        for i in range(n):
            ents[i * n + i] = ring.one
        return cls(ring, n, n, tuple(ents))

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        ents = tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        return ExactMatrix(self.ring, self.cols, self.rows, ents)

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(e == z for e in self.entries)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        R = self.ring
        a, b = self.to_lists(), other.to_lists()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                s = R.zero
                for k in range(self.cols):
                    s = R.add(s, R.mul(ai[k], b[k][j]))
                out.append(s)
        return ExactMatrix(R, self.rows, other.cols, tuple(out))

    def scaled(self, c) -> "ExactMatrix":
        c = self.ring.normalize(c)
        return ExactMatrix(
            self.ring, self.rows, self.cols, tuple(self.ring.mul(c, e) for e in self.entries)
        )

    def mul_vector(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        R = self.ring
        v = [R.normalize(x) for x in v]
        out = []
        for i in range(self.rows):
            s = R.zero
            ri = self.row(i)
            for k in range(self.cols):
                s = R.add(s, R.mul(ri[k], v[k]))
            out.append(s)
        return out


@dataclass(frozen=True)
class SNFResult:
    """left @ M @ right == diag(diagonal), with unimodular transforms."""

    diagonal: tuple
    left: ExactMatrix
    right: ExactMatrix

    def diag_matrix(self, rows: int, cols: int) -> ExactMatrix:
        ents = [0] * (rows * cols)
        for i, d in enumerate(self.diagonal):
            ents[i * cols + i] = d
        return ExactMatrix(ZZ, rows, cols, tuple(ents))


def _min_abs_pivot(m: list, t: int, rows: int, cols: int) -> Optional[tuple]:
    """Smallest-absolute-value nonzero entry of m[t:, t:], row-major tie-break."""
    best = None
    for i in range(t, rows):
        mi = m[i]
        for j in range(t, cols):
            v = mi[j]
            if v != 0 and (best is None or abs(v) < abs(best[2])):
                best = (i, j, v)
                if abs(v) == 1:
                    return best
    return best


def smith_normal_form(M: ExactMatrix) -> SNFResult:
    """Smith normal form of an integer matrix, with transforms.

    Deterministic: pivot is the smallest-absolute-value nonzero entry of the
    remaining block, scanned row-major.
    """
    if M.ring != ZZ:
        raise ValueError("SNF requires integer matrix")
    rows, cols = M.rows, M.cols
    m = M.to_lists()
    left = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    right = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, k):
        m[i], m[k] = m[k], m[i]
        left[i], left[k] = left[k], left[i]

    def swap_cols(j, k):
        for r in m:
            r[j], r[k] = r[k], r[j]
        for r in right:
            r[j], r[k] = r[k], r[j]

    def addmul_row(dst, src, q):
        # row_dst -= q * row_src
        md, ms = m[dst], m[src]
        for j in range(cols):
            md[j] -= q * ms[j]
        ld, ls = left[dst], left[src]
        for j in range(rows):
            ld[j] -= q * ls[j]

    def addmul_col(dst, src, q):
        for r in m:
            r[dst] -= q * r[src]
        for r in right:
            r[dst] -= q * r[src]

    t = 0
    n = min(rows, cols)
    while t < n:
        piv = _min_abs_pivot(m, t, rows, cols)
        if piv is None:
            break
        while True:
            i, j, _ = piv
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = m[t][t]
            done = True
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // p
                    addmul_row(i, t, q)
                    if m[i][t] != 0:
                        done = False
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // p
                    addmul_col(j, t, q)
                    if m[t][j] != 0:
                        done = False
            if done:
                break
            piv = _min_abs_pivot(m, t, rows, cols)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            a, b = m[i][i], m[i + 1][i + 1]
            if a != 0 and b % a != 0:
                changed = True
                # fold b into the block and rediagonalize the 2x2 corner
                addmul_col(i, i + 1, -1)  # col_i += col_{i+1}
                while m[i + 1][i] != 0 or m[i][i + 1] != 0:
                    if m[i + 1][i] != 0:
                        if abs(m[i + 1][i]) < abs(m[i][i]) or m[i][i] == 0:
                            swap_rows(i, i + 1)
                        if m[i + 1][i] != 0:
                            addmul_row(i + 1, i, m[i + 1][i] // m[i][i])
                    if m[i][i + 1] != 0:
                        if abs(m[i][i + 1]) < abs(m[i][i]) or m[i][i] == 0:
                            swap_cols(i, i + 1)
                        if m[i][i + 1] != 0:
                            addmul_col(i + 1, i, m[i][i + 1] // m[i][i])

    for i in range(n):
        if m[i][i] < 0:
            for j in range(cols):
                m[i][j] = -m[i][j]
            for j in range(rows):
                left[i][j] = -left[i][j]

    diag = tuple(m[i][i] for i in range(n))
    # zeros sort to the end automatically: a zero pivot means the rest is zero
    return SNFResult(
        diagonal=diag,
        left=ExactMatrix.from_rows(ZZ, left) if rows else ExactMatrix(ZZ, 0, 0, ()),
        right=ExactMatrix.from_rows(ZZ, right) if cols else ExactMatrix(ZZ, 0, 0, ()),
    )


def _to_field(M: ExactMatrix) -> tuple[RingSpec, list]:
    """Lift to the fraction field (Z -> Q); fields pass through."""
    if M.ring == ZZ:
        return QQ, [[Fraction(x) for x in M.row(i)] for i in range(M.rows)]
    return M.ring, M.to_lists()


def _row_echelon(ring: RingSpec, m: list, cols: int) -> list:
    """In-place reduction to echelon form; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != ring.zero), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ring.inv(m[r][c])
        m[r] = [ring.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != ring.zero:
                f = m[i][c]
                m[i] = [ring.sub(m[i][j], ring.mul(f, m[r][j])) for j in range(cols)]
        pivots.append(c)
        r += 1
    return pivots


def rank(M: ExactMatrix) -> int:
    """Rank over the fraction field of the ring."""
    if M.rows == 0 or M.cols == 0:
        return 0
    field, m = _to_field(M)
    return len(_row_echelon(field, m, M.cols))


def nullity(M: ExactMatrix) -> int:
    return M.cols - rank(M)


def det(M: ExactMatrix) -> Scalar:
    """Determinant over the fraction field (exact)."""
    if M.rows != M.cols:
        raise ValueError("det of non-square matrix")
    if M.rows == 0:
        return 1
    field, m = _to_field(M)
    n = M.rows
    d = field.one
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != field.zero), None)
        if pr is None:
            return M.ring.zero
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = field.neg(d)
        d = field.mul(d, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c] != field.zero:
                f = field.mul(inv, m[i][c])
                m[i] = [field.sub(m[i][j], field.mul(f, m[c][j])) for j in range(n)]
    return M.ring.normalize(d) if M.ring == ZZ else d


def solve_linear(M: ExactMatrix, b: Sequence) -> Optional[list]:
    """One exact solution of M x = b in the ring, or None.

    Over Z an integer solution is required (SNF-based); over Q/F_p plain
    elimination in the field.
    """
    if len(b) != M.rows:
        raise ValueError("dimension mismatch")
    R = M.ring
    b = [R.normalize(x) for x in b]
    if R == ZZ:
        snf = smith_normal_form(M)
        lb = snf.left.mul_vector(b)
        y = [0] * M.cols
        n = min(M.rows, M.cols)
        for i in range(M.rows):
            d = snf.diagonal[i] if i < n else 0
            if d == 0:
                if lb[i] != 0:
                    return None
            elif lb[i] % d != 0:
                return None
            else:
                y[i] = lb[i] // d
        return snf.right.mul_vector(y)

    field = R
    m = [list(M.row(i)) + [b[i]] for i in range(M.rows)]
    pivots = _row_echelon(field, m, M.cols + 1)
    if pivots and pivots[-1] == M.cols:
        return None  # inconsistent
    x = [field.zero] * M.cols
    for r, c in enumerate(pivots):
        x[c] = m[r][M.cols]
    return x


def homology_summands(d_in: ExactMatrix, d_out: ExactMatrix) -> tuple[int, list]:
    """Free rank and torsion of ker(d_out)/im(d_in).

    ``d_in`` maps into the middle module, ``d_out`` maps out of it; the
    composition must vanish.  Over a field the torsion list is empty.
    """
    if d_in.ring != d_out.ring:
        raise ValueError("ring mismatch")
    if d_out.cols != d_in.rows:
        raise ValueError("middle module dimension mismatch")
    if d_out.rows and d_in.cols and not (d_out @ d_in).is_zero():
        raise ValueError("not a complex at this degree")
    middle = d_out.cols
    r_out = rank(d_out)
    r_in = rank(d_in)
    free = middle - r_out - r_in
    torsion: list = []
    if d_in.ring == ZZ and d_in.rows and d_in.cols:
        snf = smith_normal_form(d_in)
        torsion = [d for d in snf.diagonal if d > 1]
    return free, torsion
