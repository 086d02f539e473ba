"""Rank-2 algebra structure tables: associativity, units, idempotents,
surjectivity, and isomorphism classification over prime fields.

A table fixes the products of two generators e1, e2.  The commutative case
stores three products (e1e1, e1e2, e2e2); the noncommutative case four.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .linalg import ExactMatrix, rank, smith_normal_form, solve_linear
from .rings import ZZ, RingSpec, Scalar

Pair = tuple[Scalar, Scalar]


class ClassificationGap(Exception):
    """An associative table matched no representative family."""


@dataclass(frozen=True)
class MultTable:
    ring: RingSpec
    e11: Pair
    e12: Pair
    e22: Pair
    e21: Optional[Pair] = None  # None means commutative: e2e1 = e1e2

    def __post_init__(self):
        norm = lambda p: (self.ring.normalize(p[0]), self.ring.normalize(p[1]))
        object.__setattr__(self, "e11", norm(self.e11))
        object.__setattr__(self, "e12", norm(self.e12))
        object.__setattr__(self, "e22", norm(self.e22))
        if self.e21 is not None:
            object.__setattr__(self, "e21", norm(self.e21))

    @property
    def commutative(self) -> bool:
        return self.e21 is None

    def product(self, i: int, j: int) -> Pair:
        """Product of basis elements e_i e_j (i, j in {1, 2})."""
        if (i, j) == (1, 1):
            return self.e11
        if (i, j) == (2, 2):
            return self.e22
        if (i, j) == (1, 2):
            return self.e12
        return self.e12 if self.e21 is None else self.e21

    def to_json(self) -> dict:
        f = self.ring.format_scalar
        prods = {
            "e1e1": [f(self.e11[0]), f(self.e11[1])],
            "e1e2": [f(self.e12[0]), f(self.e12[1])],
            "e2e2": [f(self.e22[0]), f(self.e22[1])],
        }
        if self.e21 is not None:
            prods["e2e1"] = [f(self.e21[0]), f(self.e21[1])]
        return {"ring": self.ring.to_json(), "commutative": self.commutative, "products": prods}

    @classmethod
    def from_json(cls, d: dict) -> "MultTable":
        ring = RingSpec.from_json(d["ring"])
        prods = d["products"]
        e21 = prods.get("e2e1")
        if d.get("commutative", e21 is None):
            e21 = None
        return cls(
            ring,
            tuple(prods["e1e1"]),
            tuple(prods["e1e2"]),
            tuple(prods["e2e2"]),
            tuple(e21) if e21 is not None else None,
        )


def multiply(t: MultTable, u: Pair, v: Pair) -> Pair:
    """Bilinear extension of the table to arbitrary coefficient pairs."""
    R = t.ring
    out0, out1 = R.zero, R.zero
    u = (R.normalize(u[0]), R.normalize(u[1]))
    v = (R.normalize(v[0]), R.normalize(v[1]))
    for i in (1, 2):
        if u[i - 1] == R.zero:
            continue
        for j in (1, 2):
            if v[j - 1] == R.zero:
                continue
            c = R.mul(u[i - 1], v[j - 1])
            p = t.product(i, j)
            out0 = R.add(out0, R.mul(c, p[0]))
            out1 = R.add(out1, R.mul(c, p[1]))
    return (out0, out1)


_E1 = (1, 0)
_E2 = (0, 1)
_BASIS = (_E1, _E2)


def is_associative(t: MultTable) -> bool:
    """Associativity of the bilinear extension.

    Commutative tables need only the two corner identities
    (e1 e1) e2 = e1 (e1 e2) and (e2 e2) e1 = e2 (e2 e1); noncommutative
    tables are checked on all eight basis triples.
    """
    if t.commutative:
        return multiply(t, t.e11, _E2) == multiply(t, _E1, t.e12) and multiply(
            t, t.e22, _E1
        ) == multiply(t, _E2, t.product(2, 1))
    for x, y, z in itertools.product(_BASIS, repeat=3):
        if multiply(t, multiply(t, x, y), z) != multiply(t, x, multiply(t, y, z)):
            return False
    return True


def find_unit(t: MultTable) -> Optional[Pair]:
    """Two-sided unit, found by an exact linear solve (works over Z too)."""
    R = t.ring
    rows, rhs = [], []
    for e in (_E1, _E2):
        for side in ("left", "right"):
            # u*e = e (left) resp. e*u = e (right), u = x e1 + y e2
            if side == "left":
                c1 = multiply(t, _E1, e)
                c2 = multiply(t, _E2, e)
            else:
                c1 = multiply(t, e, _E1)
                c2 = multiply(t, e, _E2)
            rows.append([c1[0], c2[0]])
            rows.append([c1[1], c2[1]])
            rhs.extend(e)
    M = ExactMatrix.from_rows(R, rows)
    sol = solve_linear(M, rhs)
    return (sol[0], sol[1]) if sol is not None else None


def idempotents(t: MultTable, bound: Optional[int] = None) -> list[Pair]:
    """All nonzero v with v*v = v.

    Over a prime field the search is exhaustive; over Z a box bound is
    required and absence within the box proves nothing outside it.
    """
    R = t.ring
    if R.kind == "Fp":
        space = itertools.product(R.elements(), repeat=2)
    elif R.kind == "Z":
        if bound is None:
            raise ValueError("idempotent search over Z needs a box bound")
        space = itertools.product(range(-bound, bound + 1), repeat=2)
    else:
        raise ValueError("idempotent enumeration needs F_p or a bounded Z box")
    out = []
    for v in space:
        if v != (0, 0) and multiply(t, v, v) == (R.normalize(v[0]), R.normalize(v[1])):
            out.append(v)
    out.sort()
    return out


def product_matrix(t: MultTable) -> ExactMatrix:
    """Matrix of m: A (x) A -> A; columns are the basis products."""
    if t.commutative:
        cols = [t.e11, t.e12, t.e22]
    else:
        cols = [t.e11, t.e12, t.product(2, 1), t.e22]
    return ExactMatrix.from_rows(t.ring, [[c[0] for c in cols], [c[1] for c in cols]])


def is_multiplication_surjective(t: MultTable) -> bool:
    M = product_matrix(t)
    if t.ring.kind == "Z":
        d = smith_normal_form(M).diagonal
        return len(d) == 2 and d[0] == 1 and d[1] == 1
    return rank(M) == 2


def gl2(ring: RingSpec):
    """All invertible 2x2 matrices over a prime field, in lexicographic order."""
    if ring.kind != "Fp":
        raise ValueError("GL2 enumeration needs a prime field")
    p = ring.p
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p != 0:
            yield ((a, b), (c, d))


def _transport(t: MultTable, g) -> MultTable:
    """Table in the basis f_j = g[0][j] e1 + g[1][j] e2."""
    R = t.ring
    det = R.sub(R.mul(g[0][0], g[1][1]), R.mul(g[0][1], g[1][0]))
    dinv = R.inv(det)
    # g^{-1} rows
    gi = (
        (R.mul(dinv, g[1][1]), R.neg(R.mul(dinv, g[0][1]))),
        (R.neg(R.mul(dinv, g[1][0])), R.mul(dinv, g[0][0])),
    )

    def back(w: Pair) -> Pair:
        return (
            R.add(R.mul(gi[0][0], w[0]), R.mul(gi[0][1], w[1])),
            R.add(R.mul(gi[1][0], w[0]), R.mul(gi[1][1], w[1])),
        )

    f1 = (g[0][0], g[1][0])
    f2 = (g[0][1], g[1][1])
    p11 = back(multiply(t, f1, f1))
    p12 = back(multiply(t, f1, f2))
    p22 = back(multiply(t, f2, f2))
    if t.commutative:
        return MultTable(R, p11, p12, p22)
    p21 = back(multiply(t, f2, f1))
    return MultTable(R, p11, p12, p22, p21)


def isomorphic(a: MultTable, b: MultTable):
    """Brute-force base change carrying a onto b, or None."""
    if a.ring != b.ring or a.ring.kind != "Fp":
        raise ValueError("isomorphism search needs matching prime fields")
    if a.commutative != b.commutative:
        return None
    for g in gl2(a.ring):
        if _transport(a, g) == b:
            return g
    return None


# ---------------------------------------------------------------------------
# Representative families
# ---------------------------------------------------------------------------


def nonresidues(ring: RingSpec) -> list:
    """Elements of F_p that are not squares of nonzero elements (0 included)."""
    squares = {(x * x) % ring.p for x in range(1, ring.p)}
    return [x for x in ring.elements() if x not in squares]


def is_nonresidue(ring: RingSpec, x) -> bool:
    return ring.normalize(x) in nonresidues(ring)


def evaluate_PR(alpha2, beta2, y, ring: RingSpec) -> Scalar:
    """The root-obstruction polynomial attached to the exceptional
    commutative family: -1 + y(5*a2 + b2^2) + y^2(-8*a2^2 - 2*a2*b2^2)
    + y^3(4*a2^3 + a2^2*b2^2)."""
    R = ring
    a2, b2, y = R.normalize(alpha2), R.normalize(beta2), R.normalize(y)
    b2sq = R.mul(b2, b2)
    a2sq = R.mul(a2, a2)
    c1 = R.add(R.mul(R.normalize(5), a2), b2sq)
    c2 = R.add(R.mul(R.normalize(-8), a2sq), R.mul(R.normalize(-2), R.mul(a2, b2sq)))
    c3 = R.add(R.mul(R.normalize(4), R.mul(a2sq, a2)), R.mul(a2sq, b2sq))
    out = R.normalize(-1)
    ypow = R.one
    for c in (c1, c2, c3):
        ypow = R.mul(ypow, y)
        out = R.add(out, R.mul(c, ypow))
    return out


def evaluate_PA(alpha2, beta2, alpha4, beta4, y, ring: RingSpec) -> Scalar:
    """General obstruction polynomial: -1 + y(4*a2 + b4)
    + y^2(2*a4*b2 - 4*a2^2 - 4*a2*b4) + y^3(a4^2 - 4*a2*a4*b2 + 4*a2^2*b4)."""
    R = ring
    a2, b2 = R.normalize(alpha2), R.normalize(beta2)
    a4, b4, y = R.normalize(alpha4), R.normalize(beta4), R.normalize(y)
    a2sq = R.mul(a2, a2)
    c1 = R.add(R.mul(R.normalize(4), a2), b4)
    c2 = R.add(
        R.mul(R.normalize(2), R.mul(a4, b2)),
        R.add(R.mul(R.normalize(-4), a2sq), R.mul(R.normalize(-4), R.mul(a2, b4))),
    )
    c3 = R.add(
        R.mul(a4, a4),
        R.add(R.mul(R.normalize(-4), R.mul(a2, R.mul(a4, b2))), R.mul(R.normalize(4), R.mul(a2sq, b4))),
    )
    out = R.normalize(-1)
    ypow = R.one
    for c in (c1, c2, c3):
        ypow = R.mul(ypow, y)
        out = R.add(out, R.mul(c, ypow))
    return out


def _half(ring: RingSpec):
    return ring.inv(ring.normalize(2))


def representative(label: str, params: tuple, ring: RingSpec) -> MultTable:
    """Instantiate a named representative family over the given ring.

    Side conditions carried by a family (nonresidue parameters, rootless
    polynomials) are checked at instantiation time over prime fields.
    """
    R = ring
    n = R.normalize

    def fp_rootless(poly) -> bool:
        return R.kind != "Fp" or all(poly(y) != R.zero for y in R.elements())

    if label == "m6":
        a2, b2 = params
        return MultTable(R, (1, 0), (a2, b2), (0, 1))
    if label == "m7":
        return MultTable(R, (1, 0), (1, _half(R)), (0, 0))
    if label == "m8":
        return MultTable(R, (1, 0), (0, _half(R)), (1, 0))
    if label == "m9":
        (b2,) = params
        if R.kind == "Fp" and R.p != 2 and n(b2) == _half(R):
            raise ValueError("m9 excludes beta2 = 1/2")
        return MultTable(R, (1, 0), (0, b2), (0, 0))
    if label == "m10":
        (a4,) = params
        return MultTable(R, (1, 0), (1, 0), (a4, 0))
    if label == "m11":
        return MultTable(R, (1, 0), (0, 0), (1, 0))
    if label == "m12":
        return MultTable(R, (1, 0), (0, 0), (0, 0))
    if label == "m13":
        return MultTable(R, (0, 1), (0, 1), (0, 0))
    if label == "m14":
        return MultTable(R, (0, 1), (0, 0), (0, 0))
    if label == "m15":
        return MultTable(R, (0, 1), (-2, 3), (-8, 8))
    if label == "m16":
        return MultTable(R, (0, 0), (1, 0), (0, 0))
    if label == "m17":
        return MultTable(R, (0, 0), (0, 0), (0, 0))
    if label == "m8_1R":
        (l2,) = params
        if R.kind == "Fp" and not is_nonresidue(R, l2):
            raise ValueError("m8_1R needs a nonresidue lambda2")
        return MultTable(R, (1, 0), (0, _half(R)), (l2, 0))
    if label == "m8_2R":
        b2, l2 = params
        if R.kind == "Fp":
            if not is_nonresidue(R, l2):
                raise ValueError("m8_2R needs a nonresidue lambda2")
            if not is_nonresidue(R, R.sub(R.one, R.mul(n(2), n(b2)))):
                raise ValueError("m8_2R needs 1 - 2*beta2 a nonresidue")
        return MultTable(R, (1, 0), (0, b2), (l2, 0))
    if label == "m11R":
        (l2,) = params
        if R.kind == "Fp" and not is_nonresidue(R, l2):
            raise ValueError("m11R needs lambda2 outside the nonzero squares")
        return MultTable(R, (1, 0), (0, 0), (l2, 0))
    if label == "m14_1R":
        (a2,) = params
        if R.kind == "Fp" and pow_in_squares(R, R.add(R.mul(n(2), n(a2)), R.one)):
            raise ValueError("m14_1R needs 2*alpha2 + 1 outside the squares")
        return MultTable(R, (1, 0), (a2, 1), (0, 0))
    if label == "m14_2R":
        (a2,) = params
        if R.kind == "Fp" and pow_in_squares(R, R.add(R.mul(n(2), n(a2)), R.one)):
            raise ValueError("m14_2R needs 2*alpha2 + 1 outside the squares")
        return MultTable(R, (1, 0), (a2, 0), (0, 0))
    if label == "m15_1R":
        a2, b2, a4, b4 = params
        if not fp_rootless(lambda y: evaluate_PA(a2, b2, a4, b4, y, R)):
            raise ValueError("m15_1R needs a rootless obstruction polynomial")
        return MultTable(R, (0, 1), (a2, b2), (a4, b4))
    # characteristic-2 families
    if label == "m2_1":
        return MultTable(R, (1, 0), (0, 1), (0, 1))
    if label == "m2_2":
        return MultTable(R, (1, 0), (0, 0), (0, 0))
    if label == "m2_3":
        return MultTable(R, (1, 0), (0, 0), (0, 1))
    if label == "m2_4":
        (a4,) = params
        return MultTable(R, (1, 0), (0, 1), (a4, 0))
    if label == "m2_5":
        (a4,) = params
        if R.kind == "Fp":
            # x^2 + x + a4 must have no roots outside {0, 1}
            for x in R.elements():
                if x in (0, 1):
                    continue
                if R.add(R.add(R.mul(x, x), x), n(a4)) == R.zero:
                    raise ValueError("m2_5 side condition violated")
        return MultTable(R, (1, 0), (0, 1), (a4, 1))
    if label == "m2_6":
        return MultTable(R, (0, 1), (0, 0), (0, 0))
    if label == "m2_7":
        return MultTable(R, (0, 0), (0, 0), (0, 0))
    if label == "m2R":
        a2, b2 = params
        a2n, b2n = n(a2), n(b2)
        a4 = R.mul(a2n, b2n)
        b4 = R.add(a2n, R.mul(b2n, b2n))
        poly = lambda y: R.add(
            R.add(R.mul(R.mul(y, R.mul(y, y)), R.mul(R.mul(a2n, a2n), R.mul(b2n, b2n))), R.mul(y, b4)),
            R.one,
        )
        if not fp_rootless(poly):
            raise ValueError("m2R needs a rootless obstruction polynomial")
        return MultTable(R, (0, 1), (a2, b2), (a4, b4))
    # noncommutative targets
    if label == "nc_left":
        return MultTable(R, (0, 0), (0, 0), (0, 1), e21=(1, 0))
    if label == "nc_right":
        return MultTable(R, (0, 0), (1, 0), (0, 1), e21=(0, 0))
    raise ValueError(f"unknown family {label!r}")


def pow_in_squares(ring: RingSpec, x) -> bool:
    """Membership of x in the full square set {y^2 : y in K} (0 included)."""
    x = ring.normalize(x)
    return any((y * y) % ring.p == x for y in range(ring.p))


def _classification_targets(ring: RingSpec):
    """Canonical list of (label, params) for associative commutative tables."""
    p = ring.p
    targets = []
    if p == 2:
        targets += [("m2_1", ()), ("m2_2", ()), ("m2_3", ())]
        targets += [("m2_4", (a4,)) for a4 in range(2)]
        for a4 in range(2):
            try:
                representative("m2_5", (a4,), ring)
                targets.append(("m2_5", (a4,)))
            except ValueError:
                pass
        targets += [("m2_6", ()), ("m2_7", ())]
        for a2, b2 in itertools.product(range(2), repeat=2):
            try:
                representative("m2R", (a2, b2), ring)
                targets.append(("m2R", (a2, b2)))
            except ValueError:
                pass
        return targets
    targets += [("m6", (0, 0)), ("m6", (0, 1)), ("m6", (1, 0))]
    targets += [("m9", (0,)), ("m9", (1,))]
    targets += [("m10", (1,)), ("m12", ()), ("m14", ()), ("m17", ())]
    for l2 in nonresidues(ring):
        try:
            representative("m8_2R", (1, l2), ring)
            targets.append(("m8_2R", (1, l2)))
        except ValueError:
            pass
    targets.append(("m11R", (0,)))
    for a2, b2 in itertools.product(range(p), repeat=2):
        a4 = (a2 * b2) % p
        b4 = (a2 + b2 * b2) % p
        try:
            representative("m15_1R", (a2, b2, a4, b4), ring)
            targets.append(("m15_1R", (a2, b2, a4, b4)))
        except ValueError:
            pass
    return targets


def classify(t: MultTable) -> tuple[str, tuple]:
    """Match an associative commutative F_p table against the representative
    families by exhaustive base-change search.  Raises ClassificationGap
    when nothing matches."""
    if t.ring.kind != "Fp":
        raise ValueError("classification runs over prime fields")
    if not t.commutative or not is_associative(t):
        raise ValueError("classification expects an associative commutative table")
    for label, params in _classification_targets(t.ring):
        rep = representative(label, params, t.ring)
        if isomorphic(t, rep) is not None:
            return label, params
    raise ClassificationGap(f"no representative matches {t.to_json()}")


def all_commutative_tables(ring: RingSpec):
    """Every commutative table over F_p (p^6 of them), lexicographic order."""
    for a1, b1, a2, b2, a4, b4 in itertools.product(ring.elements(), repeat=6):
        yield MultTable(ring, (a1, b1), (a2, b2), (a4, b4))


def all_tables(ring: RingSpec):
    """Every table over F_p (p^8 of them), lexicographic order."""
    for c in itertools.product(ring.elements(), repeat=8):
        yield MultTable(ring, (c[0], c[1]), (c[2], c[3]), (c[6], c[7]), e21=(c[4], c[5]))


def bounded_z_tables(bound: int):
    """Commutative integer tables with entries in [-bound, bound]."""
    rng = range(-bound, bound + 1)
    for a1, b1, a2, b2, a4, b4 in itertools.product(rng, repeat=6):
        yield MultTable(ZZ, (a1, b1), (a2, b2), (a4, b4))
