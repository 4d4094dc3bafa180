import math

import pytest

import index2


def test_families_complete():
    fams = index2.families()
    assert len(fams) == 22
    ids = {f["id"] for f in fams}
    assert "oct-rr" in ids and "ico1-hrsr" in ids
    assert sum(1 for f in fams if f["generator"]) == 18
    assert all(f["orientable"] for f in fams)


def test_family_fields():
    f = index2.family("oct-rr")
    assert f["type"] == "{6,4}_6"
    assert f["face_vector"] == (12, 24, 8)
    assert f["generator"] == "Octahedron"
    assert f["census"] == "R3.4*"
    assert f["planar_ratio"] is None
    with pytest.raises(KeyError):
        index2.family("oct-ff")


def test_planar_ratio():
    f = index2.family("ico1-hrsr")
    assert f["planar_ratio"] == "1/2+1/2√5"
    assert math.isclose(f["planar_ratio_value"], (1 + math.sqrt(5)) / 2)


def test_mesh_counts():
    m = index2.mesh("ico1-hrsr", ratio="tau")
    assert len(m["vertices"]) == 24
    assert len(m["faces"]) == 30
    assert m["planar_faces"] == 30
    assert all(len(face) == 4 for face in m["faces"])
    generic = index2.mesh("ico1-hrsr", ratio="3/2")
    assert generic["planar_faces"] == 0


def test_mesh_rejects_bad_ratio():
    with pytest.raises(ValueError):
        index2.mesh("oct-rr", ratio="-2")
    with pytest.raises(ValueError):
        index2.mesh("oct-rr", ratio="1")
    with pytest.raises(ValueError):
        index2.mesh("oct-rr", ratio="five")


def test_symmetry():
    s = index2.symmetry("dod1-rr")
    assert s["symmetry_order"] == 120
    assert s["index"] == 2
    assert s["orbits"] == (2, 1, 1)
    assert s["face_stabilizer"] == "dihedral of order 10"


def test_rejections():
    rej = index2.rejections()
    assert len(rej) == 12
    reasons = {(r["configuration"], r["shape"]): r["reason"] for r in rej}
    assert reasons[("oct", "rf")] == "vertex-figure"
    assert reasons[("dod2", None)] == "precheck-count"


def test_catalogue_and_classes():
    cat = index2.catalogue()
    assert len(cat) == 18
    assert cat[0]["name"] == "Tetrahedron"
    assert index2.shape_classes("oct") == ["rr", "rl", "rf", "ff"]
    assert index2.turn_alphabet("ico1") == ["hr", "sr", "sl", "hl"]
    with pytest.raises(KeyError):
        index2.shape_classes("cube9")
