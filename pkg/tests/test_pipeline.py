"""Job configs, reports, character tables and the worked examples."""

from fractions import Fraction

import pytest

from wtoric.exact import QuadraticNumber
from wtoric.pipeline import (
    ConfigError,
    JobConfig,
    character_table,
    conjugacy_classes,
    example,
    format_linear,
    format_scalar,
    is_rational_integer,
    run,
    selftest_cases,
)
from wtoric.algebra import build_graded_algebra, face_complex_of, linear_forms
from wtoric.polytope import build_w_polytope
from wtoric.roots import build_root_system, generate_group


@pytest.mark.parametrize("bad", [
    {"type_label": "E8", "lambda_set": [[1] * 8]},
    {"type_label": "A2", "lambda_set": [[1, -1]]},
    {"type_label": "A2", "lambda_set": [[0, 0]]},
    {"type_label": "A2", "lambda_set": [[1, 1, 1]]},
    {"type_label": "A2", "lambda_set": []},
    {"type_label": "A2", "lambda_set": [[1, 1]], "K": [3]},
    {"type_label": "A2", "lambda_set": [[1, 1]], "checks": ["bogus"]},
    {"type_label": "A2", "lambda_set": [[1, 1]], "checks": []},
    {"type_label": "A2", "lambda_set": [[1, 1]], "rank": 3},
    {"type_label": "A2", "lambda_set": [[1, 1]], "scaling": "metric"},
    {"type_label": "A2", "lambda_set": [[1, 1]], "colour": "red"},
    {"type_label": "A5", "lambda_set": [[1] * 5]},
    {"lambda_set": [[1, 1]]},
    {"type_label": "A2", "lambda_set": [["x", 1]]},
])
def test_config_rejects(bad):
    with pytest.raises(ConfigError):
        JobConfig.from_dict(bad)


def test_config_normalizes():
    c = JobConfig.from_dict({"type_label": "B2", "lambda_set": [["1/2", 1]], "K": [2, 1, 2], "checks": "all"})
    assert c.lambda_set == [(Fraction(1, 2), Fraction(1))]
    assert c.K == [1, 2]
    assert c.checks == ["classify", "algebra", "characters", "iso", "scaling"]
    assert c.to_dict()["lambda_set"] == [["1/2", "1"]]


def test_rank_cap_env(monkeypatch):
    monkeypatch.setenv("WTORIC_RANK_CAP", "4")
    JobConfig.from_dict({"type_label": "A4", "lambda_set": [[1, 1, 1, 1]], "checks": ["classify"]})
    monkeypatch.setenv("WTORIC_RANK_CAP", "2")
    with pytest.raises(ConfigError):
        JobConfig.from_dict({"type_label": "A3", "lambda_set": [[1, 1, 1]]})


def test_run_deterministic():
    cfg = {"type_label": "B2", "lambda_set": [[1, 2]], "K": [1], "checks": ["all"]}
    ra = run(cfg)
    assert ra.to_json() == run(cfg).to_json()
    assert "timings" not in ra.data


def test_run_report_contents():
    rep = run({"type_label": "A2", "lambda_set": [[1, 1]], "K": [1, 2], "checks": ["all"]})
    assert rep.ok and rep.exit_code == 0
    d = rep.data
    assert d["polytope"]["n_vertices"] == 6 and d["polytope"]["n_facets"] == 6
    names = d["classify"]["quotient_facets"]
    assert len(names) == 4 and names[2:] == ["Y1", "Y2"]
    assert all(d["structure"]["P"].values())
    assert d["dossier"]["all"]
    assert all(d["dossier"]["c_coefficients"].values())
    assert d["scaling"]["ok"]
    assert d["characters"]["integral"]


def test_timings_optional():
    rep = run({"type_label": "A2", "lambda_set": [[1, 1]], "checks": ["classify"], "timings": True})
    assert "polytope" in rep.data["timings"]


def test_degenerate_gate():
    cfg = {"type_label": "A3", "lambda_set": [[1, 0, 0]], "checks": ["all"]}
    rep = run(cfg)
    assert not rep.ok and rep.exit_code == 1
    assert "force_degenerate" in rep.data["errors"][0]
    rep = run(dict(cfg, force_degenerate=True))
    assert rep.data["experimental"]


def test_degenerate_polygon_allowed():
    rep = run({"type_label": "B2", "lambda_set": [[0, 1]], "K": [1], "checks": ["all"]})
    assert rep.ok
    assert rep.data["experimental"] is False


def test_build_error_is_reported():
    # a dominated second point is not a vertex of the hull
    rep = run({"type_label": "A2", "lambda_set": [[1, 1], [2, 2]], "checks": ["all"]})
    assert not rep.ok
    assert rep.data["errors"][0].startswith("build:")


def test_conjugacy_classes():
    for t, sizes in [("A2", [1, 2, 3]), ("B2", [1, 1, 2, 2, 2]), ("I2(5)", [1, 2, 2, 5]), ("A3", [1, 3, 6, 6, 8])]:
        g = generate_group(build_root_system(t))
        cls = conjugacy_classes(g)
        assert sorted(len(c) for c in cls) == sizes
        assert sum(len(c) for c in cls) == len(g)


def test_character_table_orthogonality():
    """Multiplicity of the trivial character in each graded piece is an integer."""
    rs = build_root_system("B3")
    g = generate_group(rs)
    p = build_w_polytope(rs, g, [rs.weight_to_root((1, 1, 1))])
    ga = build_graded_algebra(face_complex_of(p), linear_forms(p), rs.field)
    table = character_table(ga, p)
    for d in range(4):
        s = sum(row["class_size"] * row["traces"][d] for row in table)
        assert s % len(g) == 0
    assert all(is_rational_integer(t) for row in table for t in row["traces"])


def test_formatting():
    assert format_scalar(Fraction(3)) == "3"
    assert format_scalar(QuadraticNumber(Fraction(1), Fraction(-1), 5)) == "1 - sqrt5"
    assert format_linear({"a": 1, "b": -2, "c": 0}, ["a", "b", "c"]) == "a - 2*b"
    assert is_rational_integer(QuadraticNumber(Fraction(2), Fraction(0), 5))
    assert not is_rational_integer(QuadraticNumber(Fraction(1, 2), Fraction(-1, 2), 5))


def test_hexagon_golden():
    rep, diff = example("a2-hexagon")
    assert diff == ""
    assert rep.ok


def test_pentagon_golden_differs_only_in_trace():
    rep, diff = example("i25-pentagon")
    changed = [l for l in diff.splitlines() if l[:1] in "+-" and not l.startswith(("+++", "---"))]
    assert changed == ["-Tr(r2) on A^1 = 1 - sqrt5", "+Tr(r2) on A^1 = 1"]
    assert not rep.ok
    assert rep.data["dossier"]["all"]


def test_selftest_case_list():
    cases = selftest_cases()
    labels = [c[0] for c in cases]
    assert len(labels) == len(set(labels))
    assert sum(1 for l in labels if l.startswith("A3 ")) == 16
    assert not any(l.startswith("A4") for l in labels)
    assert any(l.startswith("B4") for l, _ in selftest_cases(rank4=True))
