import json
from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reflow_lens.errors import RecipeFormatError
from reflow_lens.recipe import (
    PTFE_PROPERTIES,
    ProcessRecipe,
    ProcessStep,
    Severity,
    StepKind,
    dumps,
    loads,
    recipe_to_dict,
    reference_recipe,
    validate_recipe,
)

REF = reference_recipe()


def _index(kind, temperature=None):
    for i, s in enumerate(REF.steps):
        if s.kind is kind and (temperature is None or s.temperature_c == temperature):
            return i
    raise LookupError(kind)


def test_reference_values():
    bake3 = REF.steps[_index(StepKind.BAKE, 260.0)]
    assert 10.0 <= bake3.duration_min <= 15.0
    reflow = REF.steps[_index(StepKind.REFLOW)]
    assert (reflow.temperature_c, reflow.duration_min) == (160.0, 15.0)
    spin = REF.steps[_index(StepKind.SPIN_COAT)]
    assert spin.spin_segments == ((1000.0, 10.0), (2000.0, 40.0))


def test_reference_passes_cleanly():
    report = validate_recipe(REF)
    assert report.passed
    assert report.findings == ()


def test_long_hot_bake_is_peel_off_error():
    i = _index(StepKind.BAKE, 260.0)
    bad = REF.replace_step(i, replace(REF.steps[i], duration_min=40.0))
    report = validate_recipe(bad)
    assert [(f.severity, f.rule_id, f.step_index) for f in report.findings] == [(Severity.ERROR, "R1", i)]


def test_exactly_30_minutes_triggers_r1():
    i = _index(StepKind.BAKE, 165.0)
    bad = REF.replace_step(i, replace(REF.steps[i], duration_min=30.0))
    assert [f.rule_id for f in validate_recipe(bad).errors] == ["R1"]


def test_fast_ramp_is_crack_error():
    i = next(k for k, s in enumerate(REF.steps) if s.ramp_from_c == 25.0)
    bad = REF.replace_step(i, replace(REF.steps[i], duration_min=2.0))
    report = validate_recipe(bad)
    assert [(f.severity, f.rule_id) for f in report.findings] == [(Severity.ERROR, "R2")]
    assert "47.5" in report.findings[0].message


def test_ramp_ceiling_configurable():
    relaxed = ProcessRecipe(REF.name, REF.steps, max_ramp_c_per_min=50.0)
    i = next(k for k, s in enumerate(REF.steps) if s.ramp_from_c == 25.0)
    assert validate_recipe(relaxed.replace_step(i, replace(REF.steps[i], duration_min=2.0))).passed


def test_cold_reflow_warns():
    i = _index(StepKind.REFLOW)
    report = validate_recipe(REF.replace_step(i, replace(REF.steps[i], temperature_c=150.0)))
    assert [(f.severity, f.rule_id) for f in report.findings] == [(Severity.WARNING, "R3")]


def test_out_of_order_coating_bakes_warn():
    steps = list(REF.steps)
    steps[2], steps[3] = steps[3], steps[2]
    report = validate_recipe(ProcessRecipe("swapped", tuple(steps)))
    assert [(f.severity, f.rule_id, f.step_index) for f in report.findings] == [(Severity.WARNING, "R4", 3)]


def test_missing_clean_is_error():
    report = validate_recipe(ProcessRecipe("dirty", REF.steps[1:]))
    assert [(f.rule_id, f.step_index) for f in report.errors] == [("R5", 0)]


def test_findings_sorted_by_step():
    steps = list(REF.steps[1:])
    steps[3] = replace(steps[3], duration_min=45.0)  # 260 C bake
    report = validate_recipe(ProcessRecipe("multi", tuple(steps)))
    assert [f.step_index for f in report.findings] == sorted(f.step_index for f in report.findings)
    assert {f.rule_id for f in report.findings} == {"R1", "R5"}


def test_validation_is_deterministic():
    i = _index(StepKind.BAKE, 260.0)
    bad = REF.replace_step(i, replace(REF.steps[i], duration_min=40.0))
    assert validate_recipe(bad).to_json() == validate_recipe(bad).to_json()


@given(st.floats(30.0, 500.0), st.floats(0.0, 500.0))
def test_r1_monotone_in_duration(minutes, extra):
    i = _index(StepKind.BAKE, 260.0)
    shorter = REF.replace_step(i, replace(REF.steps[i], duration_min=minutes))
    longer = REF.replace_step(i, replace(REF.steps[i], duration_min=minutes + extra))
    assert any(f.rule_id == "R1" for f in validate_recipe(shorter).findings)
    assert any(f.rule_id == "R1" for f in validate_recipe(longer).findings)


def test_structural_errors():
    with pytest.raises(RecipeFormatError):
        ProcessStep(StepKind.SPIN_COAT)
    with pytest.raises(RecipeFormatError):
        ProcessStep(StepKind.BAKE, temperature_c=100.0)
    with pytest.raises(RecipeFormatError):
        ProcessStep(StepKind.CLEAN, ramp_from_c=25.0)
    with pytest.raises(RecipeFormatError):
        ProcessRecipe("empty", ())


def test_json_round_trip():
    assert loads(dumps(REF)) == REF


def test_json_without_max_ramp_uses_default():
    data = recipe_to_dict(REF)
    del data["max_ramp_c_per_min"]
    assert loads(json.dumps(data)) == REF


def test_json_unknown_keys_named():
    data = recipe_to_dict(REF)
    data["owner"] = "x"
    with pytest.raises(RecipeFormatError, match="owner"):
        loads(json.dumps(data))
    data = recipe_to_dict(REF)
    data["steps"][2]["equipment"] = "hot plate"
    with pytest.raises(RecipeFormatError, match=r"steps\[2\].*equipment"):
        loads(json.dumps(data))


def test_json_bad_kind():
    data = recipe_to_dict(REF)
    data["steps"][0]["kind"] = "Etch"
    with pytest.raises(RecipeFormatError, match="Etch"):
        loads(json.dumps(data))


def test_ptfe_properties_read_only():
    assert PTFE_PROPERTIES["melt_point_c"] == 340.0
    assert PTFE_PROPERTIES["ptfe_content_pct"] == 60.0
    assert PTFE_PROPERTIES["ph"] == 9.0
    with pytest.raises(TypeError):
        PTFE_PROPERTIES["ph"] = 7.0
