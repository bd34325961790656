"""
Parameter sweeps, presets and tabular output.
"""
from .spec import Axis, Overlay, SweepSpec, parse_axis, parse_overlay
from .scenarios import SCENARIOS, build_pair, get_scenario, resolve_parameters
from .runner import SweepRow, SweepTable, compute_row, run_sweep
from .presets import PRESETS, Preset, get_preset
from .analysis import CurveSummary, summarize_curve, summarize_table
from .emit import emit, render
