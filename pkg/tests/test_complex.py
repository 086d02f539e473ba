import pytest

from frobknot import complex as cx
from frobknot import diagram as dg
from frobknot import frobenius as fr
from frobknot.laurent import Laurent
from frobknot.rings import QQ, ZZ, GF

F2, F3 = GF(2), GF(3)


def build(name, F, normalize=True):
    cube = dg.build_cube(dg.BUILDERS[name]())
    return cx.build_complex(cube, F, normalize=normalize)


# --- d^2 = 0 and basic shapes ---------------------------------------------------


def test_d_squared_all_builders():
    for name in dg.BUILDERS:
        for F in (fr.a5(0, 0), fr.a5(1, 1), fr.a5(0, 1, QQ)):
            c = build(name, F)
            assert cx.verify_d_squared(c)


def test_two_crossing_two_component_ranks():
    c = build("figure10_d1", fr.a5(0, 0), normalize=False)
    assert list(c.ranks) == [2, 8, 2]
    assert cx.euler_characteristic(c) == -4


def test_unnormalized_hopf_homology():
    c = build("hopf_pos", fr.a5(0, 0), normalize=False)
    h = cx.homology(c)
    frees = [row[1] for row in sorted((i, f) for i, f, tors in _rows(h))]
    assert frees == [2, 0, 2]


def _rows(table):
    return [(r["i"], r["free_rank"], r["torsion"]) for r in table.to_json()["groups"]]


# --- integral oracles -------------------------------------------------------------


def test_left_trefoil_integral_homology():
    c = build("trefoil_left", fr.a5(0, 0))
    got = {i: (f, tors) for i, f, tors in _rows(cx.homology(c))}
    assert got.get(-3, (0, []))[0] == 1
    assert got.get(-2) == (1, [2])
    assert got.get(0, (0, []))[0] == 2
    assert got.get(-1, (0, [])) == (0, [])


def test_right_trefoil_integral_homology():
    c = build("trefoil_right", fr.a5(0, 0))
    got = {i: (f, tors) for i, f, tors in _rows(cx.homology(c))}
    assert got.get(0, (0, []))[0] == 2
    assert got.get(2) == (1, [])
    assert got.get(3) == (1, [2])


def test_deformed_homology_counts_components():
    # over the rationals with x^2 = 1 the total rank is 2^(number of components)
    for name, comps in (
        ("unknot_0", 1),
        ("unknot_1kink_pos", 1),
        ("hopf_neg", 2),
        ("trefoil_right", 1),
    ):
        c = build(name, fr.a5(0, 1, QQ))
        assert sum(f for _, f, _ in _rows(cx.homology(c))) == 2**comps


def test_disjoint_loop_doubles_ranks():
    base = dg.BUILDERS["hopf_pos"]()
    bigger = dg.LinkDiagram(base.crossings, 1, base.n_plus, base.n_minus)
    F = fr.a5(0, 0, F3)
    c1 = cx.build_complex(dg.build_cube(base), F, normalize=False)
    c2 = cx.build_complex(dg.build_cube(bigger), F, normalize=False)
    assert list(c2.ranks) == [2 * r for r in c1.ranks]


# --- Euler characteristic ------------------------------------------------------------


def test_euler_characteristic_matches_homology():
    for name in ("hopf_pos", "trefoil_left", "figure10_d1"):
        c = build(name, fr.a5(0, 0, QQ))
        chi_c = cx.euler_characteristic(c)
        chi_h = sum((-1) ** i * f for i, f, _ in _rows(cx.homology(c)))
        assert chi_c == chi_h


def test_graded_euler_characteristic_is_jones():
    for name in ("unknot_0", "hopf_pos", "hopf_neg", "trefoil_left", "trefoil_right"):
        d = dg.BUILDERS[name]()
        c = cx.build_complex(dg.build_cube(d), fr.a5(0, 0), normalize=True)
        assert cx.graded_euler_characteristic(c) == cx.jones_from_bracket(d)


def test_jones_values():
    q = Laurent.monomial
    assert cx.jones_from_bracket(dg.BUILDERS["unknot_0"]()) == q(1) + q(-1)
    assert cx.jones_from_bracket(dg.BUILDERS["hopf_pos"]()) == (
        q(0) + q(2) + q(4) + q(6)
    )
    assert cx.jones_from_bracket(dg.BUILDERS["trefoil_right"]()) == (
        q(1) + q(3) + q(5) + q(9, -1)
    )


# --- grading guards ----------------------------------------------------------------


def test_q_grading_only_for_graded_algebra():
    d = dg.BUILDERS["hopf_pos"]()
    c = cx.build_complex(dg.build_cube(d), fr.a5(1, 1), normalize=True)
    assert c.q_degrees is None
    with pytest.raises(ValueError):
        cx.graded_euler_characteristic(c)


def test_q_grading_requires_normalization():
    d = dg.BUILDERS["hopf_pos"]()
    c = cx.build_complex(dg.build_cube(d), fr.a5(0, 0), normalize=False)
    assert c.q_degrees is None


# --- homology over fields vs Z ------------------------------------------------------


def test_f2_rank_jumps_on_torsion():
    # the Z/2 in the right trefoil shows up as extra F_2 rank in two degrees
    cz = build("trefoil_right", fr.a5(0, 0))
    cf = build("trefoil_right", fr.a5(0, 0, F2))
    total_z = sum(f for _, f, _ in _rows(cx.homology(cz)))
    total_f2 = sum(f for _, f, _ in _rows(cx.homology(cf)))
    assert total_f2 == total_z + 2


def test_homology_rejects_broken_differential():
    from frobknot.linalg import ExactMatrix

    c = build("hopf_pos", fr.a5(0, 0))
    diffs = list(c.diffs)
    for k in range(2):
        rows = [[1] * diffs[k].cols for _ in range(diffs[k].rows)]
        diffs[k] = ExactMatrix.from_rows(ZZ, rows)
    bad = cx.ChainComplex(c.ring, c.shift, c.ranks, tuple(diffs), c.q_degrees, True)
    assert not cx.verify_d_squared(bad)
    with pytest.raises(ValueError):
        cx.homology(bad)


def test_json_table_shape():
    t = cx.homology(build("hopf_pos", fr.a5(0, 0)))
    j = t.to_json()
    assert j["normalized"] is True
    assert {"i", "free_rank", "torsion"} <= set(j["groups"][0].keys())
