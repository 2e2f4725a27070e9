"""Exception types raised by the planner."""


class SaddleWalkError(Exception):
    """Base class for all planner errors."""


class InvalidInputError(SaddleWalkError, ValueError):
    pass


class NoStableStepError(SaddleWalkError):
    """The XCoM lower bound meets the reach limit: no stable step exists."""


class DegeneratePostureError(SaddleWalkError):
    pass


class UndefinedTargetError(SaddleWalkError):
    pass


class OverextensionError(SaddleWalkError):
    def __init__(self, t, distance, length):
        super().__init__(
            f"pendulum overextended at t={t:.6f} s: horizontal distance "
            f"{distance:.6f} m >= leg length {length:.6f} m"
        )
        self.t = t


class UnreachableElongationError(SaddleWalkError):
    pass


class DegenerateWindowError(SaddleWalkError):
    pass


class InsufficientDataError(SaddleWalkError):
    pass


class InvalidPostureError(SaddleWalkError):
    pass


class PlanningError(SaddleWalkError):
    """A module error raised while planning, tagged with where it happened."""

    def __init__(self, step, t, cause):
        super().__init__(f"step {step} at t={t:.4f} s: {cause}")
        self.step = step
        self.t = t
        self.cause = cause


class ConfigError(SaddleWalkError, ValueError):
    def __init__(self, message, line=None):
        self.detail = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MocapError(SaddleWalkError, ValueError):
    pass
