"""Saddle-point gait planning for straight walking with ankle strategies."""
from .params import AnthroProfile, SpeedModels, speed_models, step_bounds
from .planner import GaitRequest, StabilityReport, TrajectoryLog, plan_walk

__all__ = ["AnthroProfile", "SpeedModels", "speed_models", "step_bounds",
           "GaitRequest", "StabilityReport", "TrajectoryLog", "plan_walk"]
__version__ = "0.1.0"
