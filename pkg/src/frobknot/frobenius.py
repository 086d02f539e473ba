"""Rank-r algebra/coalgebra data with exact axiom checking.

Structure constants live in nested tuples: ``mult[i][j][k]`` is the e_k
coefficient of e_i * e_j, and ``comult[k][i][j]`` the e_i (x) e_j coefficient
of the coproduct of e_k.  Tensor-power bases are ordered lexicographically
with the first factor slowest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .linalg import ExactMatrix, rank, smith_normal_form, solve_linear
from .rings import ZZ, RingSpec


def _norm_tensor(ring: RingSpec, t, r: int):
    if len(t) != r or any(len(a) != r or any(len(row) != r for row in a) for a in t):
        raise ValueError("structure tensor must be r x r x r")
    return tuple(tuple(tuple(ring.normalize(x) for x in row) for row in a) for a in t)


@dataclass(frozen=True)
class FrobeniusData:
    ring: RingSpec
    rank: int
    mult: tuple
    comult: tuple
    unit: Optional[tuple] = None
    counit: Optional[tuple] = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        object.__setattr__(self, "mult", _norm_tensor(self.ring, self.mult, self.rank))
        object.__setattr__(self, "comult", _norm_tensor(self.ring, self.comult, self.rank))
        for name in ("unit", "counit"):
            v = getattr(self, name)
            if v is not None:
                v = tuple(self.ring.normalize(x) for x in v)
                if len(v) != self.rank:
                    raise ValueError(f"{name} has wrong length")
                object.__setattr__(self, name, v)
        if self.unit is not None and not self._unit_valid(self.unit):
            raise ValueError("declared unit is not a two-sided identity")
        if self.counit is not None and not self._counit_valid(self.counit):
            raise ValueError("declared counit does not split the coproduct")

    # -- elementwise operations -------------------------------------------

    def product(self, u: Sequence, v: Sequence) -> tuple:
        R, r = self.ring, self.rank
        out = [R.zero] * r
        for i in range(r):
            ui = R.normalize(u[i])
            if ui == R.zero:
                continue
            for j in range(r):
                vj = R.normalize(v[j])
                if vj == R.zero:
                    continue
                c = R.mul(ui, vj)
                for k in range(r):
                    out[k] = R.add(out[k], R.mul(c, self.mult[i][j][k]))
        return tuple(out)

    def coproduct(self, v: Sequence) -> tuple:
        """Coproduct of a vector, as an r*r coefficient tuple (first factor slow)."""
        R, r = self.ring, self.rank
        out = [R.zero] * (r * r)
        for k in range(r):
            vk = R.normalize(v[k])
            if vk == R.zero:
                continue
            for i in range(r):
                for j in range(r):
                    out[i * r + j] = R.add(out[i * r + j], R.mul(vk, self.comult[k][i][j]))
        return tuple(out)

    def _unit_valid(self, u) -> bool:
        basis = [
            tuple(self.ring.one if i == k else self.ring.zero for i in range(self.rank))
            for k in range(self.rank)
        ]
        return all(self.product(u, e) == e and self.product(e, u) == e for e in basis)

    def _counit_valid(self, eps) -> bool:
        R, r = self.ring, self.rank
        for k in range(r):
            left = [R.zero] * r
            right = [R.zero] * r
            for i in range(r):
                for j in range(r):
                    left[j] = R.add(left[j], R.mul(R.normalize(eps[i]), self.comult[k][i][j]))
                    right[i] = R.add(right[i], R.mul(R.normalize(eps[j]), self.comult[k][i][j]))
            e_k = [R.one if i == k else R.zero for i in range(r)]
            if left != e_k or right != e_k:
                return False
        return True

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        f = self.ring.format_scalar
        fmt3 = lambda t: [[[f(x) for x in row] for row in a] for a in t]
        out = {
            "ring": self.ring.to_json(),
            "rank": self.rank,
            "mult": fmt3(self.mult),
            "comult": fmt3(self.comult),
        }
        if self.unit is not None:
            out["unit"] = [f(x) for x in self.unit]
        if self.counit is not None:
            out["counit"] = [f(x) for x in self.counit]
        return out

    @classmethod
    def from_json(cls, d: dict) -> "FrobeniusData":
        ring = RingSpec.from_json(d["ring"])
        return cls(
            ring,
            d["rank"],
            d["mult"],
            d["comult"],
            tuple(d["unit"]) if d.get("unit") is not None else None,
            tuple(d["counit"]) if d.get("counit") is not None else None,
        )


def _mult_matrix(F: FrobeniusData) -> ExactMatrix:
    """r x r^2 matrix of m: A (x) A -> A, columns indexed (i, j) lex."""
    r = F.rank
    rows = [[F.mult[i][j][k] for i in range(r) for j in range(r)] for k in range(r)]
    return ExactMatrix.from_rows(F.ring, rows)


def _comult_matrix(F: FrobeniusData) -> ExactMatrix:
    """r^2 x r matrix of the coproduct, rows indexed (i, j) lex."""
    r = F.rank
    rows = [[F.comult[k][i][j] for k in range(r)] for i in range(r) for j in range(r)]
    return ExactMatrix.from_rows(F.ring, rows)


def check_axioms(F: FrobeniusData) -> dict:
    """Exact flags for the algebra/coalgebra axioms and the compatibility
    relation coproduct-of-product = (product (x) id)(id (x) coproduct)
    = (id (x) product)(coproduct (x) id).

    Over Z, "surjective" means all invariant factors are units and two
    injectivity notions are reported: full rank over the fraction field, and
    split injectivity (all invariant factors units).
    """
    R, r = F.ring, F.rank
    c, d = F.mult, F.comult
    rng = range(r)

    associative = all(
        _sum(R, (R.mul(c[i][j][s], c[s][k][l]) for s in rng))
        == _sum(R, (R.mul(c[j][k][s], c[i][s][l]) for s in rng))
        for i, j, k, l in itertools.product(rng, repeat=4)
    )
    commutative = all(c[i][j] == c[j][i] for i in rng for j in rng)
    coassociative = all(
        _sum(R, (R.mul(d[k][s][c3], d[s][c1][c2]) for s in rng))
        == _sum(R, (R.mul(d[k][c1][s], d[s][c2][c3]) for s in rng))
        for k, c1, c2, c3 in itertools.product(rng, repeat=4)
    )
    cocommutative = all(d[k][i][j] == d[k][j][i] for k in rng for i in rng for j in rng)

    frob = True
    for i, j, a, b in itertools.product(rng, repeat=4):
        lhs = _sum(R, (R.mul(c[i][j][s], d[s][a][b]) for s in rng))
        mid = _sum(R, (R.mul(c[i][u][a], d[j][u][b]) for u in rng))
        rhs = _sum(R, (R.mul(d[i][a][v], c[v][j][b]) for v in rng))
        if lhs != mid or lhs != rhs:
            frob = False
            break

    unit = F.unit if F.unit is not None else find_unit_vector(F)
    counit_ok = F.counit is not None  # validated at construction
    if not counit_ok:
        counit_ok = _find_counit(F) is not None

    M = _mult_matrix(F)
    D = _comult_matrix(F)
    if R == ZZ:
        diag = smith_normal_form(M).diagonal
        mult_surjective = len(diag) == r and all(x == 1 for x in diag)
        ddiag = smith_normal_form(D).diagonal
        nonzero = [x for x in ddiag if x != 0]
        comult_injective = rank(D) == r
        comult_split_injective = len(nonzero) == r and all(x == 1 for x in nonzero)
    else:
        mult_surjective = rank(M) == r
        comult_injective = rank(D) == r
        comult_split_injective = comult_injective

    return {
        "associative": associative,
        "commutative": commutative,
        "coassociative": coassociative,
        "cocommutative": cocommutative,
        "frobenius_relation": frob,
        "unit_ok": unit is not None,
        "counit_ok": counit_ok,
        "mult_surjective": mult_surjective,
        "comult_injective": comult_injective,
        "comult_split_injective": comult_split_injective,
    }


def _sum(R: RingSpec, xs):
    out = R.zero
    for x in xs:
        out = R.add(out, x)
    return out


def find_unit_vector(F: FrobeniusData) -> Optional[tuple]:
    """Two-sided identity found by exact linear solve, or None."""
    R, r = F.ring, F.rank
    rows, rhs = [], []
    for j in range(r):  # u * e_j = e_j and e_j * u = e_j
        for k in range(r):
            rows.append([F.mult[i][j][k] for i in range(r)])
            rhs.append(R.one if k == j else R.zero)
        for k in range(r):
            rows.append([F.mult[j][i][k] for i in range(r)])
            rhs.append(R.one if k == j else R.zero)
    sol = solve_linear(ExactMatrix.from_rows(R, rows), rhs)
    return tuple(sol) if sol is not None else None


def _find_counit(F: FrobeniusData) -> Optional[tuple]:
    R, r = F.ring, F.rank
    rows, rhs = [], []
    for k in range(r):
        for j in range(r):
            rows.append([F.comult[k][i][j] for i in range(r)])
            rhs.append(R.one if j == k else R.zero)
        for i in range(r):
            rows.append([F.comult[k][i][j] for j in range(r)])
            rhs.append(R.one if i == k else R.zero)
    sol = solve_linear(ExactMatrix.from_rows(R, rows), rhs)
    return tuple(sol) if sol is not None else None


# ---------------------------------------------------------------------------
# The two-parameter rank-2 construction and its six-parameter cover
# ---------------------------------------------------------------------------


def a5(h, t, ring: RingSpec = ZZ) -> FrobeniusData:
    """Rank-2 data on basis (1, x) with x^2 = h x + t.

    Coproduct: 1 |-> 1(x)x + x(x)1 - h 1(x)1 and x |-> x(x)x + t 1(x)1;
    counit kills 1 and sends x to 1.
    """
    n = ring.normalize
    h, t = n(h), n(t)
    mult = (((1, 0), (0, 1)), ((0, 1), (t, h)))
    comult = (
        ((ring.neg(h), 1), (1, 0)),
        ((t, 0), (0, 1)),
    )
    return FrobeniusData(ring, 2, mult, comult, unit=(1, 0), counit=(0, 1))


def a4_evaluate(pt, ring: RingSpec = ZZ) -> FrobeniusData:
    """Evaluate the six-parameter family at (a, c, e, f, h, t).

    The parameters must satisfy a*e - c*f = 0 and a*f + c*h*f - c*e*t = 1;
    otherwise the point is rejected.
    """
    a, c, e, f, h, t = (ring.normalize(x) for x in pt)
    R = ring
    if R.sub(R.mul(a, e), R.mul(c, f)) != R.zero or R.sub(
        R.add(R.mul(a, f), R.mul(c, R.mul(h, f))), R.mul(c, R.mul(e, t))
    ) != R.one:
        raise ValueError(
            "parameters must satisfy a*e = c*f and a*f + c*h*f - c*e*t = 1"
        )
    mult = (((1, 0), (0, 1)), ((0, 1), (t, h)))
    et_hf = R.sub(R.mul(e, t), R.mul(h, f))
    comult = (
        ((et_hf, f), (f, e)),
        ((R.mul(f, t), R.mul(e, t)), (R.mul(e, t), R.add(f, R.mul(e, h)))),
    )
    return FrobeniusData(R, 2, mult, comult, unit=(1, 0), counit=(R.neg(c), a))


def invert_element(F: FrobeniusData, y: Sequence) -> Optional[tuple]:
    """Multiplicative inverse of y, by solving y*z = unit."""
    if F.unit is None:
        raise ValueError("algebra has no unit")
    R, r = F.ring, F.rank
    # columns: y * e_j
    rows = [
        [_sum(R, (R.mul(R.normalize(y[i]), F.mult[i][j][k]) for i in range(r))) for j in range(r)]
        for k in range(r)
    ]
    sol = solve_linear(ExactMatrix.from_rows(R, rows), list(F.unit))
    return tuple(sol) if sol is not None else None


def twist(F: FrobeniusData, y: Sequence) -> FrobeniusData:
    """Replace counit by v |-> counit(y*v) and coproduct by v |-> coproduct
    of y^{-1}*v.  Multiplication and unit are untouched."""
    R, r = F.ring, F.rank
    y = tuple(R.normalize(x) for x in y)
    yinv = invert_element(F, y)
    if yinv is None:
        raise ValueError("twisting element is not invertible")

    def left_mult_coeffs(w):
        # column j: coefficients of w * e_j
        return [
            [_sum(R, (R.mul(w[i], F.mult[i][j][k]) for i in range(r))) for j in range(r)]
            for k in range(r)
        ]

    Ly = left_mult_coeffs(y)
    Lyi = left_mult_coeffs(yinv)
    new_counit = None
    if F.counit is not None:
        new_counit = tuple(
            _sum(R, (R.mul(F.counit[k], Ly[k][j]) for k in range(r))) for j in range(r)
        )
    new_comult = tuple(
        tuple(
            tuple(_sum(R, (R.mul(Lyi[k][j], F.comult[k][a][b]) for k in range(r))) for b in range(r))
            for a in range(r)
        )
        for j in range(r)
    )
    return FrobeniusData(R, r, F.mult, new_comult, unit=F.unit, counit=new_counit)


def dualize(F: FrobeniusData) -> FrobeniusData:
    """Swap the roles of product and coproduct (transpose the tensors);
    unit and counit trade places."""
    r = F.rank
    new_mult = tuple(
        tuple(tuple(F.comult[k][i][j] for k in range(r)) for j in range(r)) for i in range(r)
    )
    new_comult = tuple(
        tuple(tuple(F.mult[i][j][k] for j in range(r)) for i in range(r)) for k in range(r)
    )
    return FrobeniusData(F.ring, r, new_mult, new_comult, unit=F.counit, counit=F.unit)


# ---------------------------------------------------------------------------
# Tensor-power maps built from the product, coproduct, and permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Merge:
    """Apply the product to input positions (i, j); result lands at output
    position k.  Positions are 1-based."""

    i: int
    j: int
    k: int


@dataclass(frozen=True)
class Split:
    """Apply the coproduct to input position k; the two output legs land at
    positions (i, j) with the first coproduct factor at i.  1-based."""

    k: int
    i: int
    j: int


@dataclass(frozen=True)
class Perm:
    """Pure relabeling: output position p carries input factor sigma[p]
    (0-based tuple)."""

    sigma: tuple


def _tensor_index(bits: Sequence[int], r: int) -> int:
    idx = 0
    for b in bits:
        idx = idx * r + b
    return idx


def generator_map(F: FrobeniusData, n_in: int, n_out: int, op) -> ExactMatrix:
    """Matrix of the map A^(x)n_in -> A^(x)n_out applying one product,
    coproduct, or permutation and the identity elsewhere."""
    R, r = F.ring, F.rank
    ents = [[R.zero] * (r**n_in) for _ in range(r**n_out)]

    if isinstance(op, Perm):
        if n_out != n_in or sorted(op.sigma) != list(range(n_in)):
            raise ValueError("invalid permutation")
        for src in itertools.product(range(r), repeat=n_in):
            dst = tuple(src[op.sigma[p]] for p in range(n_in))
            ents[_tensor_index(dst, r)][_tensor_index(src, r)] = R.one
    elif isinstance(op, Merge):
        if n_out != n_in - 1 or not (1 <= op.i < op.j <= n_in) or not (1 <= op.k <= n_out):
            raise ValueError("invalid merge positions")
        rest_in = [p for p in range(n_in) if p not in (op.i - 1, op.j - 1)]
        rest_out = [p for p in range(n_out) if p != op.k - 1]
        for src in itertools.product(range(r), repeat=n_in):
            bi, bj = src[op.i - 1], src[op.j - 1]
            for s in range(r):
                coeff = F.mult[bi][bj][s]
                if coeff == R.zero:
                    continue
                dst = [0] * n_out
                dst[op.k - 1] = s
                for outp, inp in zip(rest_out, rest_in):
                    dst[outp] = src[inp]
                row = _tensor_index(dst, r)
                col = _tensor_index(src, r)
                ents[row][col] = R.add(ents[row][col], coeff)
    elif isinstance(op, Split):
        if n_out != n_in + 1 or not (1 <= op.k <= n_in) or not (1 <= op.i < op.j <= n_out):
            raise ValueError("invalid split positions")
        rest_in = [p for p in range(n_in) if p != op.k - 1]
        rest_out = [p for p in range(n_out) if p not in (op.i - 1, op.j - 1)]
        for src in itertools.product(range(r), repeat=n_in):
            bk = src[op.k - 1]
            for u in range(r):
                for v in range(r):
                    coeff = F.comult[bk][u][v]
                    if coeff == R.zero:
                        continue
                    dst = [0] * n_out
                    dst[op.i - 1] = u
                    dst[op.j - 1] = v
                    for outp, inp in zip(rest_out, rest_in):
                        dst[outp] = src[inp]
                    row = _tensor_index(dst, r)
                    col = _tensor_index(src, r)
                    ents[row][col] = R.add(ents[row][col], coeff)
    else:
        raise ValueError(f"unknown generator {op!r}")

    return ExactMatrix.from_rows(R, ents)


def verify_n2cob_relations(F: FrobeniusData) -> dict:
    """Check the five defining relations of the cobordism category by
    composing generator matrices, independently of check_axioms."""
    m12 = generator_map(F, 2, 1, Merge(1, 2, 1))
    d11 = generator_map(F, 1, 2, Split(1, 1, 2))
    swap = generator_map(F, 2, 2, Perm((1, 0)))

    assoc_l = m12 @ generator_map(F, 3, 2, Merge(1, 2, 1))
    assoc_r = m12 @ generator_map(F, 3, 2, Merge(2, 3, 2))
    coassoc_l = generator_map(F, 2, 3, Split(1, 1, 2)) @ d11
    coassoc_r = generator_map(F, 2, 3, Split(2, 2, 3)) @ d11
    frob_mid = d11 @ m12
    frob_l = generator_map(F, 3, 2, Merge(1, 2, 1)) @ generator_map(F, 2, 3, Split(2, 2, 3))
    frob_r = generator_map(F, 3, 2, Merge(2, 3, 2)) @ generator_map(F, 2, 3, Split(1, 1, 2))

    return {
        "associative": assoc_l.to_lists() == assoc_r.to_lists(),
        "commutative": (m12 @ swap).to_lists() == m12.to_lists(),
        "coassociative": coassoc_l.to_lists() == coassoc_r.to_lists(),
        "cocommutative": (swap @ d11).to_lists() == d11.to_lists(),
        "frobenius": frob_mid.to_lists() == frob_l.to_lists()
        and frob_mid.to_lists() == frob_r.to_lists(),
    }
