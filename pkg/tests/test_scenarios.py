"""The built-in verification scenarios and the report layer."""

import json

import pytest

from fanocalc import dsl
from fanocalc.scenarios import (
    BUILTIN_NOTES,
    BUILTIN_SOURCES,
    Assertion,
    Report,
    Scenario,
    builtin_scenarios,
    run,
)

BUILTIN_NAMES = [
    "gr25-chern",
    "gr26-v14-plane",
    "moduli-counts",
    "sanity-p4-line",
    "v12-link",
    "v14-link",
    "w22-line-link",
    "w5-invariants",
    "w5-pi-link",
    "w5-xi-link",
]


def test_builtin_names_and_shapes():
    scenarios = builtin_scenarios()
    assert [s.name for s in scenarios] == sorted(BUILTIN_SOURCES)
    assert sorted(BUILTIN_SOURCES) == sorted(BUILTIN_NAMES)
    for source_name, source in BUILTIN_SOURCES.items():
        document = dsl.parse(source)
        assert [node.name for node in document.scenarios] == [source_name]


def test_all_builtin_scenarios_pass():
    report = run(builtin_scenarios())
    assert report.failed == 0, report.to_text()
    assert report.total == 70
    assert len(report.scenarios) == 10
    assert report.passed


def test_report_is_deterministic():
    first = run(builtin_scenarios()).to_json()
    second = run(builtin_scenarios()).to_json()
    assert first == second


def test_scenarios_are_isolated():
    full = {s["name"]: s for s in run(builtin_scenarios()).to_dict()["scenarios"]}
    for name in ("v14-link", "moduli-counts"):
        subset = [s for s in builtin_scenarios() if s.name == name]
        partial = run(subset).to_dict()["scenarios"]
        assert partial == [full[name]]


def test_report_scenarios_are_sorted_regardless_of_input_order():
    scenarios = builtin_scenarios()
    report = run(list(reversed(scenarios)))
    names = [s.name for s in report.scenarios]
    assert names == sorted(names)


def test_json_schema():
    payload = json.loads(run(builtin_scenarios()).to_json())
    assert set(payload) == {"scenarios", "total", "failed"}
    assert payload["total"] == 70
    assert payload["failed"] == 0
    for scenario in payload["scenarios"]:
        assert set(scenario) == {"name", "assertions", "pass"}
        for assertion in scenario["assertions"]:
            assert set(assertion) == {"label", "expected", "actual", "pass", "cite"}


def test_deliberate_failure_is_reported_not_raised():
    source = (
        'scenario "broken" {\n'
        "  profile W22 h4 4 index 3 c2h2 20 chi 1 euler 12\n"
        "  center curve genus 0 hc 1\n"
        '  assert quartic(H - E, H - E, H - E, H - E) == 0 cite "wrong on purpose"\n'
        "}\n"
    )
    report = run(dsl.parse(source).build())
    assert report.total == 1
    assert report.failed == 1
    row = report.to_dict()["scenarios"][0]["assertions"][0]
    assert row["actual"] == 1
    assert row["expected"] == 0
    assert row["pass"] is False
    assert "FAIL broken/a01" in report.to_text()


def test_setup_errors_become_failed_assertions():
    source = 'scenario "no-model" { assert euler() == 0 cite "missing statements" }'
    report = run(dsl.parse(source).build())
    assert report.failed == 1
    row = report.to_dict()["scenarios"][0]["assertions"][0]
    assert isinstance(row["actual"], str)
    assert row["actual"].startswith("error: ")


def test_profile_literal_cross_check_failure():
    source = (
        'scenario "liar" {\n'
        "  profile W5 h4 6 index 3 ambient gr25 codim 2 chi 1 euler 6\n"
        "  center curve genus 0 hc 1\n"
        '  assert quartic(H, H, H, H) == 6 cite "wrong h4 literal"\n'
        "}\n"
    )
    report = run(dsl.parse(source).build())
    assert report.failed == 1
    row = report.to_dict()["scenarios"][0]["assertions"][0]
    assert "disagree" in row["actual"]


def test_not_equal_comparison():
    source = 'scenario "ne" { assert 2 - 1 != 2 cite "trivial" }'
    report = run(dsl.parse(source).build())
    assert report.failed == 0


def test_empty_run():
    report = run([])
    assert report.total == 0
    assert report.failed == 0
    assert report.to_dict() == {"scenarios": [], "total": 0, "failed": 0}


def test_notes_surface_only_in_verbose_text():
    report = run(builtin_scenarios())
    plain = report.to_text()
    verbose = report.to_text(verbose=True)
    assert "note " not in plain
    assert "note v14-link:" in verbose
    assert "note sanity-p4-line:" in verbose
    # notes never enter the JSON schema
    assert "note" not in json.loads(report.to_json())["scenarios"][0]


def test_builtin_notes_attach_to_known_scenarios():
    assert set(BUILTIN_NOTES) <= set(BUILTIN_SOURCES)
    by_name = {s.name: s for s in builtin_scenarios()}
    for name, notes in BUILTIN_NOTES.items():
        assert by_name[name].notes == list(notes)


def test_assertion_rejects_unknown_operator():
    with pytest.raises(ValueError):
        Assertion("x", "c", "<=", lambda: 0, lambda: 0)


def test_fraction_rendering():
    scenario = Scenario(
        "fractions",
        [
            Assertion(
                "half",
                "solve keeps exact rationals",
                "==",
                lambda: __import__("fractions").Fraction(1, 2),
                lambda: __import__("fractions").Fraction(1, 2),
            )
        ],
    )
    row = run([scenario]).to_dict()["scenarios"][0]["assertions"][0]
    assert row["expected"] == "1/2"
    assert row["pass"] is True


# ---------------------------------------------------------------------------
# completeness: every quoted numerical claim appears exactly once

ANCHORS = [
    # (scenario, label, citation fragment, expected value)
    ("gr25-chern", "deg", "degree 5", 5),
    ("gr25-chern", "whitney2", "c_1(I)", 0),
    ("gr25-chern", "quot-top", "c_r(Q)", 1),
    ("gr25-chern", "c1", "c_1(G) = 5 sigma_{1,0}", 5),
    ("gr25-chern", "c2-a", "11 sigma_{2,0}", 11),
    ("gr25-chern", "c2-b", "12 sigma_{1,1}", 12),
    ("gr25-chern", "c3-a", "15 sigma_{3,0}", 15),
    ("gr25-chern", "c3-b", "30 sigma_{2,1}", 30),
    ("gr25-chern", "c4-a", "35 sigma_{3,1}", 35),
    ("gr25-chern", "c4-b", "25 sigma_{2,2}", 25),
    ("w5-invariants", "c1", "c_1(W) = 3 sigma_{1,0}", 3),
    ("w5-invariants", "c2-a", "4 sigma_{2,0}", 4),
    ("w5-invariants", "c2-b", "5 sigma_{1,1}", 5),
    ("w5-invariants", "euler", "Eu(W) = 6", 6),
    ("w5-invariants", "nb-c1", "(r - 3) l = 0", 0),
    ("w5-invariants", "xi-c2", "sigma_{2,2}-plane Xi", 2),
    ("w5-invariants", "pi-c2", "sigma_{3,1}-plane Pi", 1),
    ("w5-invariants", "h2-xi", "2 Xi + 3 Pi", 1),
    ("w5-invariants", "h2-pi", "Pi . Xi = -1", 1),
    ("w5-invariants", "det", "unimodular", 1),
    ("w22-line-link", "L4", "(rho*H - E)^4 = 1", 1),
    ("w22-line-link", "L3D", "(2 rho*H - 3E) = 0", 0),
    ("w22-line-link", "L2D2", "quintic surface", -5),
    ("w22-line-link", "chi", "dim |rho*H - E| = 4", 5),
    ("w5-xi-link", "L4", "(H* - E)^4 = 1", 1),
    ("w5-xi-link", "L3E", "(H* - E)^3 . E = 1", 1),
    ("w5-xi-link", "R-check", "hence k = 2", 0),
    ("w5-pi-link", "L4", "(rho*H - E)^4 = 0", 0),
    ("w5-pi-link", "L3E", "(rho*H - E)^3 . E = 2", 2),
    ("w5-pi-link", "chi", "dim |rho*H - E| = 4", 5),
    ("w5-pi-link", "KE3", "K_E^3", -46),
    ("w5-pi-link", "degY", "deg Y = 1", 1),
    ("w5-pi-link", "euler", "Eu(W) + 3 = 9", 9),
    ("w5-pi-link", "fibers", "exactly one two-dimensional fiber", 1),
    ("gr26-v14-plane", "deg", "deg = 2g - 2 = 14", 14),
    ("gr26-v14-plane", "genus", "genus 8", 14),
    ("gr26-v14-plane", "c1", "c_1(V) = 2 sigma_{1,0}", 2),
    ("gr26-v14-plane", "c2-a", "c_2(V) = 2 sigma_{2,0}", 2),
    ("gr26-v14-plane", "c2-b", "4 sigma_{1,1}", 4),
    ("gr26-v14-plane", "euler", "Eu(V) = 12", 12),
    ("gr26-v14-plane", "nb-c1", "c_1(N_{Pi/V})", -1),
    ("gr26-v14-plane", "nb-c2", "c_2(N_{Pi/V}) = 2", 2),
    ("v14-link", "L4", "(rho*H - E)^4 = 5", 5),
    ("v14-link", "chi", "dim |rho*H - E| = 7", 8),
    ("v14-link", "contracted", "is contracted", 0),
    ("v14-link", "L2D2", "D^2 = -7", -7),
    ("v14-link", "upsilonE", "(rho*H - E)^3 . E = 5", 5),
    ("v14-link", "degF", "L^2 . F = 7", 7),
    ("v14-link", "LKF", "L . (-K_F) = 5", 5),
    ("v14-link", "eulerF", "Eu(F)", 9),
    ("v14-link", "K2F", "Noether formula K_F^2 = 3", 3),
    ("v14-link", "rkPic", "rk Pic(F) = 7", 7),
    ("v14-link", "curve-genus", "smooth curve of genus 2", 2),
    ("v12-link", "L4", "(2 rho*H - E)^4 = 12", 12),
    ("v12-link", "genus", "genus g = L^4/2 + 1 = 7", 12),
    ("v12-link", "chi", "dim |2 rho*H - E| = 9", 10),
    ("v12-link", "L3D", "hence k = 1", 0),
    ("v12-link", "L2D2", "D^2 = -1", -1),
    ("v12-link", "degF", "L^2 . phi(D) = 1", 1),
    ("moduli-counts", "dim-g", "dim G = 32", 32),
    ("moduli-counts", "dim-ambient", "dim Gr(11,15) = 44", 44),
    ("moduli-counts", "dim-family", "dim G + dim P = 43", 43),
    ("moduli-counts", "v14 codim", "codimension 1", 1),
    ("moduli-counts", "quadrics", "dimension 5 + 7 = 12", 12),
    ("moduli-counts", "pencils", "Gr(2,12)", 20),
    ("moduli-counts", "count", "20 - 7 = 13", 13),
]


def test_every_cited_claim_is_verified_exactly_once():
    report = run(builtin_scenarios())
    rows = {}
    for scenario in report.to_dict()["scenarios"]:
        for row in scenario["assertions"]:
            rows[(scenario["name"], row["label"])] = row
    seen = set()
    for scenario_name, label, fragment, expected in ANCHORS:
        key = (scenario_name, label)
        assert key not in seen, f"duplicate anchor {key}"
        seen.add(key)
        assert key in rows, f"missing assertion {key}"
        row = rows[key]
        assert fragment in row["cite"], (key, row["cite"])
        assert row["expected"] == expected, (key, row["expected"])
        assert row["pass"] is True, key
