import json

import pandas as pd
import pytest

import cevian  # noqa
from cevian.generators import GeneratorSpec
from cevian.metrics import control_flip_rates, is_control, pass_counts, unary_metrics
from cevian.statements import FAIL, NA, NOFLIP, PASS
from cevian.suite import COLUMNS, default_controls, default_workers, run_cell, run_suite, run_suites, strtobool


@pytest.fixture(scope="module")
def report():
    return run_suite(GeneratorSpec(seed=42, count=3), workers=1, controls=True)


def test_report_shape(report):
    assert list(report.columns) == COLUMNS
    main = report[~is_control(report)]
    assert len(main) == 3 * 9
    assert set(main["statement"]) == {
        "theorem1",
        "tangent_conic",
        "theorem2",
        "theorem3",
        "theorem4",
        "biconditional",
        "corollary1",
        "corollary2",
        "conjugate",
    }
    assert report.attrs["instances"] == 3


def test_all_main_cells_pass_or_na(report):
    main = report[~is_control(report)]
    assert set(main["status"]) <= {PASS, NA}
    assert set(main.loc[main["statement"] == "biconditional", "status"]) == {NA}
    assert not report.verdicts.has_failures


def test_controls(report):
    controls = report[is_control(report)]
    assert not controls.empty
    assert not any(s.startswith("conjugate") for s in controls["statement"])
    assert set(controls.loc[controls["statement"] == "theorem4~control", "status"]) == {PASS}
    assert control_flip_rates(report)["theorem4~control"] == 1.0


@pytest.mark.parametrize("mode, flavor", [("isogonal", "trace"), ("isotomic", "trace"), ("isogonal", "conic")])
def test_every_control_flips(mode, flavor):
    report = run_suite(GeneratorSpec(seed=11, count=20, mode=mode, flavor=flavor), workers=1, controls=True)
    rates = control_flip_rates(report)
    assert len(rates) >= 5
    assert (rates >= 0.95).all(), rates.to_dict()
    assert not report.verdicts.has_failures


def test_controls_that_do_not_flip_are_not_failures(mocker):
    from cevian.statements import Theorem4

    mocker.patch.object(Theorem4, "flipped", lambda self, witnesses: False)
    report = run_suite(GeneratorSpec(seed=3, count=2), workers=1, controls=True)
    controls = report[report["statement"] == "theorem4~control"]
    assert set(controls["status"]) == {NOFLIP}
    assert not report.verdicts.has_failures
    assert report.verdicts.metrics()["noflip"] == len(controls) > 0
    assert control_flip_rates(report)["theorem4~control"] == 0.0


def test_witnesses_are_json(report):
    witnesses = json.loads(report.loc[report["statement"] == "theorem1", "witnesses"].iloc[0])
    assert witnesses == {"R": "0", "R'": "0"}


def test_reports_are_reproducible(report):
    again = run_suite(GeneratorSpec(seed=42, count=3), workers=1, controls=True)
    assert again.verdicts.to_lines() == report.verdicts.to_lines()


def test_worker_pool_gives_the_same_report():
    spec = GeneratorSpec(seed=9, count=2, mode="isotomic")
    serial = run_suite(spec, workers=1, controls=False)
    pooled = run_suite(spec, workers=2, controls=False)
    assert pooled.verdicts.to_lines() == serial.verdicts.to_lines()


def test_empty_suite():
    report = run_suite(GeneratorSpec(seed=1, count=0), workers=1)
    assert report.empty
    assert report.verdicts.to_lines() == ""
    assert not report.verdicts.has_failures
    assert unary_metrics(report)["cells"] == 0


def test_free_mode_is_not_applicable():
    rows, _, _ = run_cell(GeneratorSpec(seed=4, count=1, mode="free"), 0)
    statuses = {row["statement"]: row["status"] for row in rows}
    assert statuses["theorem1"] == NA
    assert statuses["biconditional"] == PASS
    assert not any(row["statement"].endswith("~control") for row in rows)


def test_conic_and_pair_flavors():
    specs = [GeneratorSpec(seed=2, count=2, flavor="conic"), GeneratorSpec(seed=2, count=2, flavor="pairs")]
    report = run_suites(specs, workers=1, controls=True)
    main = report[~is_control(report)]
    assert set(main["flavor"]) == {"conic", "pairs"}
    assert set(main.loc[main["flavor"] == "pairs", "statement"]) == {"perspective"}
    assert set(main["status"]) <= {PASS, NA}
    assert report.attrs["instances"] == 4


def test_environment_defaults(monkeypatch):
    monkeypatch.setenv("CEVIAN_WORKERS", "3")
    monkeypatch.setenv("CEVIAN_NEGATIVE_CONTROLS", "off")
    assert default_workers() == 3
    assert default_controls() is False
    assert strtobool("Yes") == 1
    with pytest.raises(ValueError):
        strtobool("maybe")


def test_failures_are_reported(mocker):
    from cevian.statements import Theorem1, Verdict

    mocker.patch.object(Theorem1, "evaluate", lambda self, cfg: Verdict("theorem1", FAIL, (("R", 1),), cfg.fingerprint))
    report = run_suite(GeneratorSpec(seed=5, count=2), workers=1, controls=False)
    failures = report.verdicts.failures()
    assert list(failures["statement"]) == ["theorem1", "theorem1"]
    refs = report.verdicts.references()
    assert [r.data["index"] for r in refs] == [0, 1]
    assert refs[0].replay().fingerprint == failures["fingerprint"].iloc[0]


def test_pass_counts(report):
    counts = pass_counts(report)
    assert list(counts.columns) == [PASS, FAIL, NA]
    assert counts.loc[("theorem2", "isogonal", "trace"), PASS] == 3
    assert counts[FAIL].sum() == 0


def test_metrics(report):
    metrics = report.verdicts.metrics()
    assert metrics["cells"] == 27
    assert metrics["fail"] == 0
    assert metrics["pass"] + metrics["na"] == 27
    assert metrics["rejection_rate"] >= 0


def test_accessor_needs_report_columns():
    with pytest.raises(AttributeError):
        pd.DataFrame({"a": [1]}).verdicts


def test_to_lines_format():
    df = pd.DataFrame(
        [
            {"statement": "theorem4", "mode": "isotomic", "flavor": "trace", "index": 1, "status": PASS, "fingerprint": "b"},
            {"statement": "theorem1", "mode": "isotomic", "flavor": "trace", "index": 0, "status": NA, "fingerprint": "a"},
        ]
    )
    assert df.verdicts.to_lines() == "theorem1\tisotomic\ttrace\t0\tNA\ta\ntheorem4\tisotomic\ttrace\t1\tPASS\tb\n"
