import json

import pytest

import homposet as hp


def test_hom_z6():
    pairs = hp.hom(hp.Ring.parse("zmod:6"))
    assert [(p.ideal, p.mset) for p in pairs] == [
        ([0], [1, 5]),
        ([0, 3], [1, 2, 4, 5]),
        ([0, 2, 4], [1, 3, 5]),
    ]
    assert pairs[0] <= pairs[2]
    assert not pairs[1] <= pairs[2]
    assert pairs[1].meet(pairs[2]) == pairs[0]


def test_matrix_ring_single_element():
    ring = hp.Ring.matrix(hp.Ring.field(2, 1), 2)
    assert ring.size == 16
    assert not ring.is_commutative
    pairs = hp.hom(ring)
    assert len(pairs) == 1
    assert pairs[0].ideal == [0]
    assert pairs[0].mset == ring.units()


def test_morphisms_and_epimorphism():
    f2, f4 = hp.Ring.zmod(2), hp.Ring.field(2, 2)
    maps = hp.morphisms(f2, f4)
    assert len(maps) == 1
    assert not hp.is_epimorphism(f2, f4, maps[0])
    z6 = hp.Ring.zmod(6)
    (pi,) = hp.morphisms(z6, f2)
    assert hp.is_epimorphism(z6, f2, pi)
    assert hp.pair_of(z6, f2, pi).ideal == [0, 2, 4]


def test_render_json_and_dot():
    ring = hp.Ring.parse("zmod:6")
    doc = json.loads(hp.render(ring, "json", bar=True))
    assert doc["ring"] == "zmod:6"
    assert len(doc["elements"]) == 4
    assert len(doc["hasse"]) == 4
    assert hp.render(ring, "dot").startswith("digraph hom {")


def test_hom_z_queries():
    assert hp.z_leq("0:P=2,3", "n:12")
    assert hp.z_meet("n:4", "n:6") == "n:12"
    assert hp.z_join("n:4", "n:9") == "TOP"
    assert hp.z_rho("n:12") == "{2:2, 3:1, 0slot:0}"


def test_errors():
    with pytest.raises(hp.HomposetError):
        hp.Ring.parse("zmod:1")
    with pytest.raises(hp.HomposetError):
        hp.z_leq("n:1", "n:2")


def test_oracle_small_bound():
    report = hp.run_oracle(8)
    assert report["passed"]
    assert [c["id"] for c in report["claims"]] == list(hp.claim_ids())
    assert hp.run_oracle(1)["degenerate"]
