"""Exhaustive desk-scale verification over small prime fields and bounded
integer boxes.

Hot loops run on plain integer tuples mod p; structure objects are only
materialized for counterexample records.  Every report carries the closed
form search-space size and per-stage survivor counts so exhaustiveness is
auditable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import rank2
from .linalg import ExactMatrix, smith_normal_form
from .rings import ZZ, GF, RingSpec


@dataclass(frozen=True)
class Counterexample:
    kind: str
    data: dict


@dataclass
class VerifyReport:
    name: str
    space_size: int
    stages: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "space_size": self.space_size,
            "stages": self.stages,
            "counterexamples": [{"kind": c.kind, **c.data} for c in self.counterexamples],
        }

    def summary(self) -> str:
        stages = ", ".join(f"{k}={v}" for k, v in self.stages.items())
        return (
            f"{self.name}: {self.space_size} candidates ({stages}), "
            f"{len(self.counterexamples)} counterexamples"
        )


# ---------------------------------------------------------------------------
# Fast commutative-table helpers on plain tuples: t = (p11, p12, p22),
# each a coefficient pair.  All arithmetic mod p.
# ---------------------------------------------------------------------------


def _mulv(t, u, v, p):
    p11, p12, p22 = t
    a = (u[0] * v[0]) % p
    b = (u[0] * v[1] + u[1] * v[0]) % p
    c = (u[1] * v[1]) % p
    return (
        (a * p11[0] + b * p12[0] + c * p22[0]) % p,
        (a * p11[1] + b * p12[1] + c * p22[1]) % p,
    )


def _assoc_comm(t, p):
    p11, p12, p22 = t
    return _mulv(t, p11, (0, 1), p) == _mulv(t, (1, 0), p12, p) and _mulv(
        t, p22, (1, 0), p
    ) == _mulv(t, (0, 1), p12, p)


def _surjective_comm(t, p):
    (a1, b1), (a2, b2), (a4, b4) = t
    return (
        (a1 * b2 - a2 * b1) % p != 0
        or (a1 * b4 - a4 * b1) % p != 0
        or (a2 * b4 - a4 * b2) % p != 0
    )


def _find_unit_fp(t, p):
    for u in itertools.product(range(p), repeat=2):
        if _mulv(t, u, (1, 0), p) == (1, 0) and _mulv(t, u, (0, 1), p) == (0, 1):
            return u
    return None


def _comm_tables(p):
    for c in itertools.product(range(p), repeat=6):
        yield ((c[0], c[1]), (c[2], c[3]), (c[4], c[5]))


def _record_table(ring: RingSpec, t, e21=None) -> dict:
    mt = rank2.MultTable(ring, t[0], t[1], t[2], e21)
    return {"table": mt.to_json()}


# ---------------------------------------------------------------------------
# Theorem: surjective multiplication implies unital (commutative rank 2)
# ---------------------------------------------------------------------------


def verify_theorem_1_2(ring: RingSpec = None, zbound: int = None) -> VerifyReport:
    """Every commutative associative rank-2 table with surjective
    multiplication must admit a unit.  Runs over F_p exhaustively, or over
    the integer box [-zbound, zbound]^6."""
    if (ring is None) == (zbound is None):
        raise ValueError("give exactly one of ring= or zbound=")
    if zbound is not None:
        return _verify_1_2_bounded_z(zbound)
    if ring.kind != "Fp":
        raise ValueError("field verification needs a prime field")
    p = ring.p
    rep = VerifyReport(f"thm1.2 over F_{p}", p**6)
    n_assoc = n_surj = 0
    for t in _comm_tables(p):
        if not _assoc_comm(t, p):
            continue
        n_assoc += 1
        if not _surjective_comm(t, p):
            continue
        n_surj += 1
        if _find_unit_fp(t, p) is None:
            rep.counterexamples.append(
                Counterexample("surjective_without_unit", _record_table(ring, t))
            )
    rep.stages = {"associative": n_assoc, "surjective": n_surj}
    return rep


def _verify_1_2_bounded_z(bound: int) -> VerifyReport:
    side = 2 * bound + 1
    rep = VerifyReport(f"thm1.2 over Z box [-{bound},{bound}]", side**6)
    n_assoc = n_surj = 0
    rng = range(-bound, bound + 1)
    for c in itertools.product(rng, repeat=6):
        t = rank2.MultTable(ZZ, (c[0], c[1]), (c[2], c[3]), (c[4], c[5]))
        if not rank2.is_associative(t):
            continue
        n_assoc += 1
        if not rank2.is_multiplication_surjective(t):
            continue
        n_surj += 1
        if rank2.find_unit(t) is None:
            rep.counterexamples.append(
                Counterexample("surjective_without_unit", {"table": t.to_json()})
            )
    rep.stages = {"associative": n_assoc, "surjective": n_surj}
    return rep


# ---------------------------------------------------------------------------
# Theorem: surjective product + injective coproduct + compatibility
# forces unit and counit (rank 2 over F_p)
# ---------------------------------------------------------------------------


def _cocomm_coassoc_injective_comults(p):
    """All coproduct tensors d[k][i][j] passing cocommutativity,
    coassociativity, and full rank, from the p^8 raw space."""
    out = []
    rng = range(p)
    for c in itertools.product(rng, repeat=6):
        # cocommutative: d[k][0][1] == d[k][1][0]; 6 free entries
        d = (
            ((c[0], c[1]), (c[1], c[2])),
            ((c[3], c[4]), (c[4], c[5])),
        )
        ok = True
        for k in (0, 1):
            for c1 in (0, 1):
                for c2 in (0, 1):
                    for c3 in (0, 1):
                        lhs = sum(d[k][s][c3] * d[s][c1][c2] for s in (0, 1)) % p
                        rhs = sum(d[k][c1][s] * d[s][c2][c3] for s in (0, 1)) % p
                        if lhs != rhs:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        # injective: the two columns (flattened tensors) independent
        col0 = (d[0][0][0], d[0][0][1], d[0][1][0], d[0][1][1])
        col1 = (d[1][0][0], d[1][0][1], d[1][1][0], d[1][1][1])
        if all(
            (col0[i] * col1[j] - col0[j] * col1[i]) % p == 0
            for i in range(4)
            for j in range(i + 1, 4)
        ):
            continue
        out.append(d)
    return out


def _frobenius_relation(t, d, p) -> bool:
    c = (
        (t[0], t[1]),
        (t[1], t[2]),
    )  # c[i][j] = product pair; commutative
    for i in (0, 1):
        for j in (0, 1):
            for a in (0, 1):
                for b in (0, 1):
                    lhs = sum(c[i][j][s] * d[s][a][b] for s in (0, 1)) % p
                    mid = sum(c[i][u][a] * d[j][u][b] for u in (0, 1)) % p
                    rhs = sum(d[i][a][v] * c[v][j][b] for v in (0, 1)) % p
                    if lhs != mid or lhs != rhs:
                        return False
    return True


def verify_theorem_1_1(p: int) -> VerifyReport:
    """Pairs (product, coproduct) over F_p with surjective commutative
    associative product, injective cocommutative coassociative coproduct,
    and the compatibility relation, must carry both a unit and a counit."""
    if p not in (2, 3):
        raise ValueError("double enumeration is limited to p in {2, 3}")
    ring = GF(p)
    rep = VerifyReport(f"thm1.1 over F_{p}", p**6 * p**8)
    mults = [t for t in _comm_tables(p) if _assoc_comm(t, p) and _surjective_comm(t, p)]
    comults = _cocomm_coassoc_injective_comults(p)
    n_pairs = 0
    for t in mults:
        for d in comults:
            if not _frobenius_relation(t, d, p):
                continue
            n_pairs += 1
            unit = _find_unit_fp(t, p)
            # counit = unit of the transposed coproduct tensor
            dual = ((d[0][0][0], d[1][0][0]), (d[0][0][1], d[1][0][1]), (d[0][1][1], d[1][1][1]))
            counit = _find_unit_fp(dual, p)
            if unit is None or counit is None:
                rec = _record_table(ring, t)
                rec["comult"] = [[list(row) for row in dk] for dk in d]
                rec["missing"] = "unit" if unit is None else "counit"
                rep.counterexamples.append(Counterexample("frobenius_without_identity", rec))
    rep.stages = {
        "mult_survivors": len(mults),
        "comult_survivors": len(comults),
        "compatible_pairs": n_pairs,
    }
    return rep


# ---------------------------------------------------------------------------
# Family sweeps: stated associativity/unitality conditions, p not 2
# ---------------------------------------------------------------------------


def verify_prop_3_4(p: int) -> VerifyReport:
    """Sweep every representative family's parameter domain over F_p and
    compare is_associative / find_unit against the stated conditions."""
    if p not in (3, 5):
        raise ValueError("sweeps run over F_3 and F_5")
    ring = GF(p)
    rep = VerifyReport(f"prop3.4 sweeps over F_{p}", 0)
    checked = 0

    def expect(label, params, want_assoc, want_unital):
        nonlocal checked
        checked += 1
        t = rank2.representative(label, params, ring)
        got_assoc = rank2.is_associative(t)
        got_unital = rank2.find_unit(t) is not None
        if got_assoc != want_assoc or got_unital != want_unital:
            rep.counterexamples.append(
                Counterexample(
                    "sweep_mismatch",
                    {
                        "family": label,
                        "params": list(params),
                        "expected": {"associative": want_assoc, "unital": want_unital},
                        "got": {"associative": got_assoc, "unital": got_unital},
                    },
                )
            )

    fp = range(p)
    nonres = rank2.nonresidues(ring)
    half = pow(2, -1, p)

    for a2, b2 in itertools.product(fp, repeat=2):
        ok = (a2, b2) in ((0, 0), (0, 1), (1, 0))
        expect("m6", (a2, b2), ok, ok)
    expect("m7", (), False, False)
    expect("m8", (), False, False)
    for b2 in fp:
        if b2 == half:
            continue
        expect("m9", (b2,), b2 in (0, 1), b2 == 1)
    for a4 in fp:
        expect("m10", (a4,), a4 == 1, False)
    expect("m11", (), False, False)
    expect("m12", (), True, False)
    expect("m14", (), True, False)
    expect("m15", (), False, False)
    expect("m16", (), False, False)
    expect("m17", (), True, False)
    for l2 in nonres:
        expect("m8_1R", (l2,), False, False)
        expect("m11R", (l2,), l2 == 0, False)
        for b2 in fp:
            if (1 - 2 * b2) % p in nonres:
                expect("m8_2R", (b2, l2), b2 == 1, b2 == 1)
    for a2 in fp:
        if not rank2.pow_in_squares(ring, 2 * a2 + 1):
            expect("m14_1R", (a2,), False, False)
            expect("m14_2R", (a2,), False, False)
    for params in itertools.product(fp, repeat=4):
        a2, b2, a4, b4 = params
        if any(rank2.evaluate_PA(a2, b2, a4, b4, y, ring) == 0 for y in fp):
            continue
        ok = a4 == (a2 * b2) % p and b4 == (a2 + b2 * b2) % p
        expect("m15_1R", params, ok, False)

    rep.space_size = checked
    rep.stages = {"swept": checked}
    return rep


# ---------------------------------------------------------------------------
# Characteristic-2 classification and unitality pattern
# ---------------------------------------------------------------------------

_CHAR2_UNITAL = {"m2_1", "m2_3", "m2_4", "m2_5"}


def verify_char2_classification() -> VerifyReport:
    ring = GF(2)
    rep = VerifyReport("char-2 classification over F_2", 2**6)
    n_assoc = 0
    for t6 in _comm_tables(2):
        t = rank2.MultTable(ring, t6[0], t6[1], t6[2])
        if not rank2.is_associative(t):
            continue
        n_assoc += 1
        try:
            label, params = rank2.classify(t)
        except rank2.ClassificationGap:
            rep.counterexamples.append(
                Counterexample("classification_gap", {"table": t.to_json()})
            )
            continue
        unital = rank2.find_unit(t) is not None
        if unital != (label in _CHAR2_UNITAL):
            rep.counterexamples.append(
                Counterexample(
                    "unitality_pattern_mismatch",
                    {"table": t.to_json(), "label": label, "unital": unital},
                )
            )
    rep.stages = {"associative": n_assoc}
    return rep


# ---------------------------------------------------------------------------
# Noncommutative targets
# ---------------------------------------------------------------------------


def verify_noncommutative(p: int) -> VerifyReport:
    """Associative, surjective, noncommutative rank-2 tables over F_p all
    reduce to one of the two canonical one-sided-identity tables."""
    if p not in (2, 3):
        raise ValueError("noncommutative enumeration is limited to p in {2, 3}")
    ring = GF(p)
    rep = VerifyReport(f"noncommutative targets over F_{p}", p**8)
    targets = [
        rank2.representative("nc_left", (), ring),
        rank2.representative("nc_right", (), ring),
    ]
    n_survivors = 0
    for t in rank2.all_tables(ring):
        if t.e21 == t.e12:
            continue
        if not rank2.is_associative(t) or not rank2.is_multiplication_surjective(t):
            continue
        n_survivors += 1
        if all(rank2.isomorphic(t, tgt) is None for tgt in targets):
            rep.counterexamples.append(
                Counterexample("unmatched_noncommutative_table", {"table": t.to_json()})
            )
    rep.stages = {"survivors": n_survivors}
    return rep


# ---------------------------------------------------------------------------
# Coproduct search for a fixed product
# ---------------------------------------------------------------------------


def search_nearly_frobenius(m: rank2.MultTable) -> list:
    """All coproduct tensors over F_p compatible with the given commutative
    associative product (cocommutative, coassociative, compatibility
    relation; the zero tensor always qualifies)."""
    ring = m.ring
    if ring.kind != "Fp" or ring.p not in (2, 3):
        raise ValueError("coproduct search runs over F_2 and F_3")
    if not m.commutative or not rank2.is_associative(m):
        raise ValueError("product must be commutative and associative")
    p = ring.p
    t = (m.e11, m.e12, m.e22)
    out = []
    rng = range(p)
    for c in itertools.product(rng, repeat=6):
        d = (
            ((c[0], c[1]), (c[1], c[2])),
            ((c[3], c[4]), (c[4], c[5])),
        )
        coassoc = all(
            sum(d[k][s][c3] * d[s][c1][c2] for s in (0, 1)) % p
            == sum(d[k][c1][s] * d[s][c2][c3] for s in (0, 1)) % p
            for k, c1, c2, c3 in itertools.product((0, 1), repeat=4)
        )
        if coassoc and _frobenius_relation(t, d, p):
            out.append(d)
    out.sort()
    return out
