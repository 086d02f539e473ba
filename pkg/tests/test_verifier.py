import pytest

from frobknot import frobenius as fr
from frobknot import verifier as vf
from frobknot.rings import GF

F2, F3, F5 = GF(2), GF(3), GF(5)


def test_theorem_1_2_f2():
    rep = vf.verify_theorem_1_2(ring=F2)
    assert rep.ok
    assert rep.stages["associative"] == 22
    assert rep.stages["surjective"] == 12


def test_theorem_1_2_f3():
    rep = vf.verify_theorem_1_2(ring=F3)
    assert rep.ok
    assert rep.stages["associative"] == 105
    assert rep.stages["surjective"] == 72


def test_theorem_1_2_f5():
    rep = vf.verify_theorem_1_2(ring=F5)
    assert rep.ok
    assert rep.stages["associative"] == 745
    assert rep.stages["surjective"] == 600


def test_theorem_1_2_bounded_z():
    rep = vf.verify_theorem_1_2(zbound=2)
    assert rep.ok
    assert rep.stages["associative"] == 481
    assert rep.stages["surjective"] == 180


def test_theorem_1_2_argument_validation():
    with pytest.raises(ValueError):
        vf.verify_theorem_1_2()
    with pytest.raises(ValueError):
        vf.verify_theorem_1_2(ring=F2, zbound=1)


def test_theorem_1_1_f2():
    rep = vf.verify_theorem_1_1(2)
    assert rep.ok
    assert rep.stages["mult_survivors"] == 12
    assert rep.stages["comult_survivors"] == 12
    assert rep.stages["compatible_pairs"] == 24


def test_theorem_1_1_f3():
    rep = vf.verify_theorem_1_1(3)
    assert rep.ok
    assert rep.stages["mult_survivors"] == 72
    assert rep.stages["comult_survivors"] == 72
    assert rep.stages["compatible_pairs"] == 432


def test_prop_3_4_sweeps():
    rep3 = vf.verify_prop_3_4(3)
    rep5 = vf.verify_prop_3_4(5)
    assert rep3.ok and rep5.ok
    assert rep3.stages["swept"] == 67
    assert rep5.stages["swept"] == 310


def test_char2_classification():
    rep = vf.verify_char2_classification()
    assert rep.ok
    assert rep.stages["associative"] == 22


def test_noncommutative_survivors():
    rep2 = vf.verify_noncommutative(2)
    rep3 = vf.verify_noncommutative(3)
    assert rep2.ok and rep3.ok
    assert rep2.stages["survivors"] == 6
    assert rep3.stages["survivors"] == 16


def test_search_nearly_frobenius_membership():
    from frobknot import rank2

    F = fr.a5(0, 0, F2)
    m = rank2.MultTable(F2, (1, 0), (0, 1), (0, 0))
    found = vf.search_nearly_frobenius(m)
    assert len(found) == 4
    assert F.comult in found
    zero = (((0, 0), (0, 0)), ((0, 0), (0, 0)))
    assert zero in found


def test_report_json_shape():
    rep = vf.verify_theorem_1_2(ring=F2)
    j = rep.to_json()
    assert rep.ok
    assert j["counterexamples"] == []
    assert j["name"] and j["stages"]
    assert isinstance(rep.summary(), str)
