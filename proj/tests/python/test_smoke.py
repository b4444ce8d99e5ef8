import json

import pytest

import matdecomp


def test_labels():
    assert matdecomp.LABELS == ("A1", "A2", "A3", "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9")


def test_catalog_entry_is_valid():
    b4 = matdecomp.catalog("B4")
    assert b4["schema"] == matdecomp.SCHEMA
    assert b4["M"] == "M5a"
    assert matdecomp.verify(b4)["ok"]
    assert len(matdecomp.catalog()) == 12


def test_scramble_canonicalize_round_trip():
    for label in matdecomp.LABELS:
        d = matdecomp.scramble(label, seed=9)
        assert matdecomp.canonicalize(d)["label"] == label


def test_finite_field_round_trip():
    d = matdecomp.scramble("B9", seed=3, field="F5")
    assert d["field"] == {"kind": "prime", "p": 5}
    assert matdecomp.canonicalize(json.loads(json.dumps(d)))["label"] == "B9"


def test_unital_s_reported():
    d = matdecomp.catalog("A1")
    d["S"][0] = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    report = matdecomp.verify(d)
    assert not report["ok"]
    assert report["failures"] == ["UnitalS"]
    with pytest.raises(matdecomp.Error) as info:
        matdecomp.canonicalize(d)
    assert info.value.code == "UnitalS"


def test_unknown_key_rejected():
    d = matdecomp.catalog("A1")
    d["comment"] = "x"
    with pytest.raises(matdecomp.Error) as info:
        matdecomp.verify(d)
    assert info.value.code == "Parse"


def test_extension_and_strict_mode():
    d = {
        "schema": "matdecomp/1",
        "S": [
            [[0, 0, 0], [1, 0, 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 0], [1, 0, 0]],
            [[0, 0, 0], [0, 0, 2], [0, 1, 0]],
            [[0, 0, 0], [0, 1, 0], [0, 0, 1]],
        ],
        "M": "M5a",
    }
    r = matdecomp.canonicalize(d)
    assert r["label"] == "B4"
    assert r["extension"] == "2"
    with pytest.raises(matdecomp.Error) as info:
        matdecomp.canonicalize(d, allow_extension=False)
    assert info.value.code == "RequiresExtension"


def test_fingerprints_and_separation():
    assert matdecomp.fingerprint("B7")["is_m2"]
    assert matdecomp.fingerprint("A2")["idem_trace_set"] == [0, 2]
    report = matdecomp.separate()
    assert report["ok"]
    assert len(report["pairs"]) == 19


def test_rota_baxter():
    r = matdecomp.rota_baxter("B5", weight=5)
    assert r["verified"]
    assert r["weight"] == "5"
    assert len(r["matrix"]) == 9
    with pytest.raises(matdecomp.Error) as info:
        matdecomp.rota_baxter("A1", weight=0)
    assert info.value.code == "ZeroWeight"


def test_search_pins():
    r = matdecomp.search(2, "M6")
    assert r["valid_decompositions"] == 52
    assert r["label_histogram"] == {"A1": 4, "A2": 24, "A3": 24}
    r = matdecomp.search(3, "M5b")
    assert r["label_histogram"] == {"B6": 27, "B7": 54, "B8": 54, "B9": 54}
    assert r["extension_histogram"] == {"B9": 54}
    assert not r["failures"]


def test_field_parsing():
    assert matdecomp.field("F_7") == {"kind": "prime", "p": 7}
    assert matdecomp.field(None) == {"kind": "rational"}
    with pytest.raises(ValueError):
        matdecomp.field("R")


def test_selftest_subset():
    results = matdecomp.selftest([1, 4, 5])
    assert [r["id"] for r in results] == [1, 4, 5]
    assert all(r["passed"] for r in results)
