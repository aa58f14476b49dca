"""Inertial random walk that drives both the sprite and the background."""

from dataclasses import dataclass, field

import numpy as np

from .actions import GlobalAction

#: (dx, dy) applied to a position for each action; y grows downward.
DELTAS = {
    GlobalAction.LEFT: (-1, 0),
    GlobalAction.RIGHT: (1, 0),
    GlobalAction.UP: (0, -1),
    GlobalAction.DOWN: (0, 1),
    GlobalAction.STAY: (0, 0),
}

_ACTION_ORDER = (
    GlobalAction.LEFT,
    GlobalAction.RIGHT,
    GlobalAction.UP,
    GlobalAction.DOWN,
    GlobalAction.STAY,
)


@dataclass(frozen=True)
class WalkConfig:
    """Parameters of the walk.

    ``bounds`` is the frame size (width, height); positions are constrained to
    [0, W - fw] x [0, H - fh] where ``footprint`` = (fw, fh) is the size of the
    object occupying the position. ``max_offset`` caps the Chebyshev distance
    from the starting point (used for the background walk).
    """

    p_inertia: float
    step_s: int
    bounds: tuple[int, int]
    footprint: tuple[int, int] = (1, 1)
    max_offset: int | None = None

    def __post_init__(self):
        if not 0.0 <= self.p_inertia <= 1.0:
            raise ValueError(f"p_inertia must be in [0, 1], got {self.p_inertia}")
        if self.step_s < 1:
            raise ValueError(f"step_s must be >= 1, got {self.step_s}")
        if self.bounds[0] <= 0 or self.bounds[1] <= 0:
            raise ValueError(f"bounds must be positive, got {self.bounds}")
        if self.position_domain()[0] < 0 or self.position_domain()[1] < 0:
            raise ValueError(
                f"bounds {self.bounds} smaller than footprint {self.footprint}"
            )

    def position_domain(self) -> tuple[int, int]:
        """Inclusive maxima (x_max, y_max) of valid positions."""
        return (self.bounds[0] - self.footprint[0], self.bounds[1] - self.footprint[1])


@dataclass(frozen=True)
class WalkTrace:
    positions: list[tuple[int, int]]
    actions: list[GlobalAction] = field(default_factory=list)

    def __len__(self):
        return len(self.positions)

    def offsets(self) -> list[tuple[int, int]]:
        """Displacements from the starting position."""
        x0, y0 = self.positions[0]
        return [(x - x0, y - y0) for x, y in self.positions]


def _admissible(pos, start, cfg: WalkConfig):
    x_max, y_max = cfg.position_domain()
    out = []
    for a in _ACTION_ORDER:
        dx, dy = DELTAS[a]
        nx, ny = pos[0] + dx * cfg.step_s, pos[1] + dy * cfg.step_s
        if not (0 <= nx <= x_max and 0 <= ny <= y_max):
            continue
        if cfg.max_offset is not None and max(abs(nx - start[0]), abs(ny - start[1])) > cfg.max_offset:
            continue
        out.append(a)
    return out


def sample_walk(length: int, cfg: WalkConfig, rng_seed: int) -> WalkTrace:
    """Sample ``length`` positions with the inertial boundary-aware policy.

    The previous action repeats with probability ``p_inertia`` whenever it is
    still admissible; otherwise a fresh action is drawn uniformly from the
    admissible set (which always contains `stay`).
    """
    if length < 2:
        raise ValueError(f"walk length must be >= 2, got {length}")
    rng = np.random.Generator(np.random.PCG64(rng_seed))
    x_max, y_max = cfg.position_domain()
    pos = (int(rng.integers(0, x_max + 1)), int(rng.integers(0, y_max + 1)))
    start = pos
    positions = [pos]
    actions: list[GlobalAction] = []
    prev: GlobalAction | None = None
    for _ in range(length - 1):
        adm = _admissible(pos, start, cfg)
        if prev is not None and prev in adm and rng.random() < cfg.p_inertia:
            act = prev
        else:
            act = adm[rng.integers(len(adm))]
        dx, dy = DELTAS[act]
        pos = (pos[0] + dx * cfg.step_s, pos[1] + dy * cfg.step_s)
        positions.append(pos)
        actions.append(act)
        prev = act
    return WalkTrace(positions=positions, actions=actions)


def validate_trace(trace: WalkTrace, cfg: WalkConfig) -> None:
    """Raise ValueError if the trace violates the walk invariants."""
    x_max, y_max = cfg.position_domain()
    if len(trace.actions) != len(trace.positions) - 1:
        raise ValueError("actions length must be positions length - 1")
    for x, y in trace.positions:
        if not (0 <= x <= x_max and 0 <= y <= y_max):
            raise ValueError(f"position ({x}, {y}) outside [0, {x_max}] x [0, {y_max}]")
    sx, sy = trace.positions[0]
    for t, act in enumerate(trace.actions):
        dx, dy = DELTAS[act]
        expect = (trace.positions[t][0] + dx * cfg.step_s, trace.positions[t][1] + dy * cfg.step_s)
        if trace.positions[t + 1] != expect:
            raise ValueError(f"step {t}: position inconsistent with action {act.value}")
        if cfg.max_offset is not None:
            x, y = trace.positions[t + 1]
            if max(abs(x - sx), abs(y - sy)) > cfg.max_offset:
                raise ValueError(f"step {t}: offset exceeds cap {cfg.max_offset}")
