"""Fabrication recipe model, the PTFE/AZ4620 reference recipe, and a rule checker.

Rules
-----
R1  coating bake at >= 165 C lasting >= 30 min: PTFE peel-off risk (error)
R2  heating ramp faster than ``max_ramp_c_per_min``: thermal-crack risk (error)
R3  reflow below the 160 C glass transition: resist will not flow (warning)
R4  coating bakes not in non-decreasing temperature order (warning)
R5  spin coat with no earlier clean step (error)

A "coating bake" is any Bake in the unbroken run of Bake steps directly
after a SpinCoat.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Any

from .errors import RecipeFormatError

GLASS_TRANSITION_C = 160.0
PEEL_OFF_TEMP_C = 165.0
PEEL_OFF_MINUTES = 30.0
# 25 -> 120 C in 10 min is the only ramp known to be safe
DEFAULT_MAX_RAMP_C_PER_MIN = (120.0 - 25.0) / 10.0

# Liquid PTFE dispersion (ALGOFLOND 60/A) data sheet values; informational only.
PTFE_PROPERTIES = MappingProxyType(
    {
        "melt_point_c": 340.0,
        "melt_point_f": 644.0,
        "ptfe_content_pct": 60.0,
        "nonionic_surfactant_on_mixture_pct": 3.0,
        "nonionic_surfactant_on_solid_pct": 6.0,
        "ph": 9.0,
        "specific_gravity_20c": 1.52,
        "conductivity_us_per_cm": 700.0,
        "avg_particle_size_um": 0.24,
        "brookfield_viscosity_35c_mpa_s": 20.0,
    }
)


class StepKind(enum.Enum):
    CLEAN = "Clean"
    SPIN_COAT = "SpinCoat"
    BAKE = "Bake"
    EXPOSE = "Expose"
    DEVELOP = "Develop"
    REFLOW = "Reflow"
    COOL = "Cool"


class Severity(enum.Enum):
    ERROR = "Error"
    WARNING = "Warning"


@dataclass(frozen=True)
class ProcessStep:
    kind: StepKind
    temperature_c: float | None = None
    duration_min: float | None = None
    spin_segments: tuple[tuple[float, float], ...] | None = None  # (rpm, seconds)
    ramp_from_c: float | None = None

    def __post_init__(self):
        if not isinstance(self.kind, StepKind):
            raise RecipeFormatError(f"step kind must be a StepKind, got {self.kind!r}")
        if self.kind is StepKind.SPIN_COAT:
            if not self.spin_segments:
                raise RecipeFormatError("SpinCoat step requires spin_segments")
            for rpm, seconds in self.spin_segments:
                if rpm <= 0 or seconds <= 0:
                    raise RecipeFormatError(f"spin segment ({rpm}, {seconds}) must be positive")
        if self.kind in (StepKind.BAKE, StepKind.REFLOW):
            if self.temperature_c is None or self.duration_min is None:
                raise RecipeFormatError(f"{self.kind.value} step requires temperature_c and duration_min")
        if self.duration_min is not None and self.duration_min <= 0:
            raise RecipeFormatError(f"duration_min must be positive, got {self.duration_min}")
        if self.ramp_from_c is not None and self.kind not in (StepKind.BAKE, StepKind.REFLOW):
            raise RecipeFormatError(f"ramp_from_c only applies to Bake/Reflow, not {self.kind.value}")

    @property
    def ramp_rate(self) -> float | None:
        """Heating rate in C/min when the step ramps up from ``ramp_from_c``."""
        if self.ramp_from_c is None:
            return None
        return (self.temperature_c - self.ramp_from_c) / self.duration_min


@dataclass(frozen=True)
class ProcessRecipe:
    name: str
    steps: tuple[ProcessStep, ...]
    max_ramp_c_per_min: float = DEFAULT_MAX_RAMP_C_PER_MIN

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise RecipeFormatError("recipe has no steps")
        if not self.max_ramp_c_per_min > 0:
            raise RecipeFormatError(f"max_ramp_c_per_min must be positive, got {self.max_ramp_c_per_min}")

    def replace_step(self, index: int, step: ProcessStep) -> "ProcessRecipe":
        steps = list(self.steps)
        steps[index] = step
        return ProcessRecipe(self.name, tuple(steps), self.max_ramp_c_per_min)


@dataclass(frozen=True, order=True)
class Finding:
    step_index: int
    rule_id: str
    severity: Severity = field(compare=False)
    message: str = field(compare=False)

    def as_dict(self) -> dict[str, Any]:
        return {
            "severity": self.severity.value,
            "rule_id": self.rule_id,
            "step_index": self.step_index,
            "message": self.message,
        }


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.findings

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.ERROR)

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.WARNING)

    def to_json(self) -> str:
        return json.dumps({"findings": [f.as_dict() for f in self.findings]}, indent=2)


def reference_recipe() -> ProcessRecipe:
    """PTFE-coated silicon, AZ4620 columns, oven reflow into ball lenses."""
    s = ProcessStep
    return ProcessRecipe(
        name="ptfe-az4620-ball-lens",
        steps=(
            # piranha 3:1, DI rinse 5 min, N2 dry, dehydration bake
            s(StepKind.CLEAN, temperature_c=120.0),
            s(StepKind.SPIN_COAT, spin_segments=((1000.0, 10.0), (2000.0, 40.0))),
            s(StepKind.BAKE, temperature_c=110.0, duration_min=10.0),
            s(StepKind.BAKE, temperature_c=165.0, duration_min=10.0),
            s(StepKind.BAKE, temperature_c=260.0, duration_min=15.0),
            s(StepKind.EXPOSE),
            s(StepKind.DEVELOP),
            s(StepKind.BAKE, temperature_c=120.0, duration_min=10.0, ramp_from_c=25.0),
            s(StepKind.REFLOW, temperature_c=GLASS_TRANSITION_C, duration_min=15.0, ramp_from_c=120.0),
            s(StepKind.COOL, temperature_c=25.0),
        ),
    )


def coating_bake_groups(recipe: ProcessRecipe) -> list[list[int]]:
    groups = []
    steps = recipe.steps
    for i, step in enumerate(steps):
        if step.kind is not StepKind.SPIN_COAT:
            continue
        group = []
        j = i + 1
        while j < len(steps) and steps[j].kind is StepKind.BAKE:
            group.append(j)
            j += 1
        if group:
            groups.append(group)
    return groups


def validate_recipe(recipe: ProcessRecipe) -> ValidationReport:
    findings = []
    steps = recipe.steps

    seen_clean = False
    for i, step in enumerate(steps):
        if step.kind is StepKind.CLEAN:
            seen_clean = True
        elif step.kind is StepKind.SPIN_COAT and not seen_clean:
            findings.append(Finding(i, "R5", Severity.ERROR, "spin coat without a preceding clean step"))

    for group in coating_bake_groups(recipe):
        for i in group:
            step = steps[i]
            if step.temperature_c >= PEEL_OFF_TEMP_C and step.duration_min >= PEEL_OFF_MINUTES:
                findings.append(Finding(
                    i, "R1", Severity.ERROR,
                    f"peel-off risk: {step.duration_min:g} min at {step.temperature_c:g} C "
                    f"(limit < {PEEL_OFF_MINUTES:g} min at >= {PEEL_OFF_TEMP_C:g} C)",
                ))
        for prev, cur in zip(group, group[1:]):
            if steps[cur].temperature_c < steps[prev].temperature_c:
                findings.append(Finding(
                    cur, "R4", Severity.WARNING,
                    f"coating bake drops from {steps[prev].temperature_c:g} C to {steps[cur].temperature_c:g} C",
                ))

    for i, step in enumerate(steps):
        rate = step.ramp_rate
        if rate is not None and rate > recipe.max_ramp_c_per_min:
            findings.append(Finding(
                i, "R2", Severity.ERROR,
                f"thermal-crack risk: ramp {rate:g} C/min exceeds {recipe.max_ramp_c_per_min:g} C/min",
            ))
        if step.kind is StepKind.REFLOW and step.temperature_c < GLASS_TRANSITION_C:
            findings.append(Finding(
                i, "R3", Severity.WARNING,
                f"reflow at {step.temperature_c:g} C is below the {GLASS_TRANSITION_C:g} C glass transition; resist will not reflow",
            ))

    return ValidationReport(tuple(sorted(findings)))


_STEP_KEYS = {"kind", "temperature_c", "duration_min", "ramp_from_c", "spin_segments"}
_RECIPE_KEYS = {"name", "max_ramp_c_per_min", "steps"}


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise RecipeFormatError(f"{where}: expected a number, got {value!r}")
    return float(value)


def step_from_dict(data: dict, where: str = "step") -> ProcessStep:
    if not isinstance(data, dict):
        raise RecipeFormatError(f"{where}: expected an object")
    for key in data:
        if key not in _STEP_KEYS:
            raise RecipeFormatError(f"{where}: unknown key {key!r}")
    if "kind" not in data:
        raise RecipeFormatError(f"{where}: missing 'kind'")
    try:
        kind = StepKind(data["kind"])
    except ValueError:
        choices = ", ".join(k.value for k in StepKind)
        raise RecipeFormatError(f"{where}: unknown kind {data['kind']!r} (expected one of {choices})") from None
    kwargs: dict[str, Any] = {}
    for key in ("temperature_c", "duration_min", "ramp_from_c"):
        if data.get(key) is not None:
            kwargs[key] = _number(data[key], f"{where}.{key}")
    if data.get("spin_segments") is not None:
        segs = data["spin_segments"]
        if not isinstance(segs, list) or not all(isinstance(s, list) and len(s) == 2 for s in segs):
            raise RecipeFormatError(f"{where}.spin_segments: expected [[rpm, seconds], ...]")
        kwargs["spin_segments"] = tuple(
            (_number(r, f"{where}.spin_segments"), _number(t, f"{where}.spin_segments")) for r, t in segs
        )
    try:
        return ProcessStep(kind, **kwargs)
    except RecipeFormatError as exc:
        raise RecipeFormatError(f"{where}: {exc}") from None


def step_to_dict(step: ProcessStep) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": step.kind.value}
    for key in ("temperature_c", "duration_min", "ramp_from_c"):
        value = getattr(step, key)
        if value is not None:
            out[key] = value
    if step.spin_segments is not None:
        out["spin_segments"] = [[rpm, sec] for rpm, sec in step.spin_segments]
    return out


def recipe_from_dict(data: dict) -> ProcessRecipe:
    if not isinstance(data, dict):
        raise RecipeFormatError("recipe must be a JSON object")
    for key in data:
        if key not in _RECIPE_KEYS:
            raise RecipeFormatError(f"unknown key {key!r}")
    if not isinstance(data.get("name"), str):
        raise RecipeFormatError("recipe 'name' must be a string")
    if not isinstance(data.get("steps"), list):
        raise RecipeFormatError("recipe 'steps' must be a list")
    steps = tuple(step_from_dict(s, f"steps[{i}]") for i, s in enumerate(data["steps"]))
    max_ramp = data.get("max_ramp_c_per_min")
    if max_ramp is None:
        return ProcessRecipe(data["name"], steps)
    return ProcessRecipe(data["name"], steps, _number(max_ramp, "max_ramp_c_per_min"))


def recipe_to_dict(recipe: ProcessRecipe) -> dict[str, Any]:
    return {
        "name": recipe.name,
        "max_ramp_c_per_min": recipe.max_ramp_c_per_min,
        "steps": [step_to_dict(s) for s in recipe.steps],
    }


def dumps(recipe: ProcessRecipe) -> str:
    return json.dumps(recipe_to_dict(recipe), indent=2)


def loads(text: str) -> ProcessRecipe:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecipeFormatError(f"invalid JSON: {exc}") from None
    return recipe_from_dict(data)


def load(path: str | Path) -> ProcessRecipe:
    return loads(Path(path).read_text(encoding="utf-8"))
