"""Scenario configuration: a model plus everything a simulation run needs.

JSON layout (the model block alone is also accepted and gets defaults):

    {
      "name": "optional label",
      "model": {
        "params": {"a": ..., "b": ..., "b1": ..., "c": ..., "d": ...,
                    "d1": ..., "r": ..., "alpha": ..., "tau": ..., "delta": ...},
        "f": {"kind": "bilinear"},
        "V": {"kind": "linear", "k": 1.0},
        "P": {"kind": "linear", "k": 1.0}
      },
      "history": {"kind": "constant", "state": [1.0, 1.0, 1.0]},
      "horizon": 100.0,
      "step": 0.01,            // optional; defaults from the delays
      "reference": {...}       // optional published values for cross-checks
    }

Response kinds: zero | linear(k) | bilinear | saturating_incidence(k) |
fractional_mix | saturating_unary(k) | power_sum(p1, p2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ConfigError, DomainError
from .integrator import ConstantHistory, HistorySpec, history_from_dict
from .model import ModelSpec, State

__all__ = ["ScenarioConfig", "scenario_from_dict", "load_scenario", "dump_scenario"]


@dataclass(frozen=True)
class ScenarioConfig:
    model: ModelSpec
    history: HistorySpec
    horizon: float
    step: float | None = None
    name: str | None = None
    reference: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "model": self.model.to_dict(),
            "history": self.history.to_dict(),
            "horizon": self.horizon,
        }
        if self.step is not None:
            d["step"] = self.step
        if self.name is not None:
            d["name"] = self.name
        if self.reference:
            d["reference"] = self.reference
        return d


def scenario_from_dict(d: dict) -> ScenarioConfig:
    """Parse a scenario (or bare model) dict, raising ConfigError with the
    offending field named."""
    if not isinstance(d, dict):
        raise ConfigError("configuration must be a JSON object", field="<root>")
    if "model" not in d and "params" in d:
        d = {"model": d}
    if "model" not in d:
        raise ConfigError("configuration needs a 'model' block", field="model")
    try:
        model = ModelSpec.from_dict(d["model"])
    except (DomainError, TypeError, KeyError) as exc:
        raise ConfigError(f"bad model block: {exc}", field="model") from exc

    if "history" in d:
        try:
            history = history_from_dict(d["history"])
        except (KeyError, ValueError, TypeError) as exc:
            raise ConfigError(f"bad history block: {exc}", field="history") from exc
    else:
        history = ConstantHistory(State(1.0, 1.0, 1.0))

    horizon = d.get("horizon", 100.0)
    if not isinstance(horizon, (int, float)) or horizon <= 0:
        raise ConfigError(f"horizon must be a positive number, got {horizon!r}", field="horizon")
    step = d.get("step")
    if step is not None and (not isinstance(step, (int, float)) or step <= 0):
        raise ConfigError(f"step must be a positive number, got {step!r}", field="step")
    name = d.get("name")
    reference = d.get("reference", {})
    if not isinstance(reference, dict):
        raise ConfigError("reference block must be an object", field="reference")
    return ScenarioConfig(
        model=model, history=history, horizon=float(horizon),
        step=None if step is None else float(step),
        name=name, reference=reference,
    )


def load_scenario(path) -> ScenarioConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}", field="<file>") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {path}: {exc}", field="<json>") from exc
    return scenario_from_dict(data)


def dump_scenario(cfg: ScenarioConfig, fh) -> None:
    json.dump(cfg.to_dict(), fh, indent=2, sort_keys=True)
    fh.write("\n")
