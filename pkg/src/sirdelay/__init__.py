"""Delayed SIR-type epidemic models with vaccination and treatment.

Library layout:

* :mod:`sirdelay.model` - model definition, right-hand side, linearization
* :mod:`sirdelay.equilibria` - disease-free and endemic steady states
* :mod:`sirdelay.stability` - closed-form stability criteria
* :mod:`sirdelay.charroots` - characteristic-root scan (the numerical oracle)
* :mod:`sirdelay.integrator` - method-of-steps RK4 with dense output
* :mod:`sirdelay.analytics` - trajectory classification and delay sweeps
* :mod:`sirdelay.report` - combined stability reports
* :mod:`sirdelay.presets` - bundled example systems ex5_1 ... ex5_7
"""

from .analytics import Classification, SweepRow, classify, sweep
from .charroots import char_roots_scan, find_delay_crossing, max_real_part
from .config import ScenarioConfig, load_scenario, scenario_from_dict
from .cubic import solve_cubic_real
from .equilibria import (
    Equilibrium,
    all_equilibria,
    find_disease_free,
    find_endemic,
    is_bilinear_special_case,
)
from .errors import ConfigError, DomainError, IntegrationError
from .integrator import (
    ConstantHistory,
    SampledHistory,
    Trajectory,
    dense_eval,
    integrate,
)
from .model import (
    JacCoeffs,
    ModelSpec,
    Params,
    State,
    eval_rhs,
    jacobian_coeffs,
    jacobian_coeffs_fd,
)
from .presets import PRESET_NAMES, load_preset, preset_model
from .report import StabilityReport, build_stability_report, render_report, report_to_json
from .responses import (
    Bilinear,
    FractionalMix,
    Linear,
    PowerSum,
    ResponseFn,
    SaturatingIncidence,
    SaturatingUnary,
    Zero,
    response_eval,
    response_partial,
)
from .stability import (
    CharCoeffs,
    char_coeffs,
    delay_free_stable,
    delta_analysis,
    general_delay_analysis,
    global_verdict,
    pseudo_delay_cubic,
    tau_critical,
    tau_from_pseudo_delay,
    tau_persistence,
)

__version__ = "0.1.0"
