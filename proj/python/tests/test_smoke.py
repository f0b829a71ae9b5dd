import json
import math
import os
from pathlib import Path

import pytest

import wa_defect

SCHEMA_DIR = Path(os.environ.get("WA_DEFECT_SCHEMA_DIR", Path(__file__).resolve().parents[2] / "schemas"))


def load_schema(name):
    return json.loads((SCHEMA_DIR / name).read_text())


def test_smith_and_kernel():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert wa_defect.smith_diagonal(a) == [2, 6, 12]
    snf = wa_defect.smith_normal_form(a)
    u, d, v = snf["u"], snf["d"], snf["v"]
    mul = lambda x, y: [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]
    assert mul(mul(u, a), v) == d
    k = wa_defect.kernel_basis([[1, 2, 3]])
    assert len(k) == 3 and len(k[0]) == 2
    assert all(sum(c * k[r][j] for r, c in enumerate([1, 2, 3])) == 0 for j in range(2))


def test_big_integers_round_trip():
    big = 10**40
    assert wa_defect.smith_diagonal([[big, 0], [0, 2 * big]]) == [big, 2 * big]
    assert wa_defect.cokernel([[2, 0], [0, 3]])["invariant_factors"] == [6]


def test_catalog_values():
    expected = {
        "klein-norm-one-both-places": [2],
        "klein-norm-one-one-place": [],
        "klein-norm-one-complement-full": [],
        "quasi-trivial-free": [],
        "perm-module-coset": [],
    }
    assert sorted(wa_defect.catalog_names()) == sorted(expected)
    for name, factors in expected.items():
        sc = wa_defect.Scenario.from_catalog(name)
        assert sc.defect()["invariant_factors"] == factors
        assert sc.defect(use_shortcuts=False)["invariant_factors"] == factors


def test_h1_klein():
    sc = wa_defect.Scenario.from_catalog("klein-norm-one-both-places")
    assert sc.h1("full")["invariant_factors"] == [2]
    assert sc.h1_bar("full")["invariant_factors"] == [2]
    assert sc.h1("t")["pretty"] == "Z/2"
    low = wa_defect.Scenario.from_catalog("klein-norm-one-complement-full")
    assert low.h1("t-1")["invariant_factors"] == []


def test_documents_match_schemas():
    jsonschema = pytest.importorskip("jsonschema")
    scenario_schema = load_schema("scenario.schema.json")
    result_schema = load_schema("result.schema.json")
    for name in wa_defect.catalog_names():
        doc = wa_defect.catalog(name)
        jsonschema.validate(doc, scenario_schema)
        result = wa_defect.Scenario.from_json(doc).defect()
        jsonschema.validate(result, result_schema)
        assert result["order"] == math.prod(result["invariant_factors"])


def test_schema_rejection():
    doc = wa_defect.catalog("quasi-trivial-free")
    doc["unexpected"] = 1
    with pytest.raises(wa_defect.SchemaError):
        wa_defect.Scenario.from_json(doc)
    doc = wa_defect.catalog("quasi-trivial-free")
    doc["module"]["action"][0][0][0] = 0.5
    with pytest.raises(wa_defect.SchemaError):
        wa_defect.Scenario.from_json(doc)
    with pytest.raises(wa_defect.LookupError):
        wa_defect.Scenario.from_catalog("missing")


def test_module_validation_error():
    text = json.dumps({"group": {"permutation_generators": [[1, 0]]},
                       "module": {"generators": 1, "action": [[[2]]]}, "S": [], "S_complement": []})
    with pytest.raises(wa_defect.ModuleError):
        wa_defect.Scenario.from_text(text)


def test_file_round_trip(tmp_path):
    path = tmp_path / "klein.json"
    path.write_text(json.dumps(wa_defect.catalog("klein-norm-one-both-places")))
    a = wa_defect.Scenario.from_file(str(path)).defect()
    b = wa_defect.Scenario.from_catalog("klein-norm-one-both-places").defect()
    a.pop("timings_ms")
    b.pop("timings_ms")
    assert a == b


def test_abelianization_and_selfcheck():
    assert wa_defect.abelianization("A4")["invariant_factors"] == [3]
    assert wa_defect.abelianization("Q8")["invariant_factors"] == [2, 2]
    results = wa_defect.selfcheck(seed=4)
    assert results and all(passed for _, passed, _ in results)
