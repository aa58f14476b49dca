"""Action vocabularies of the W-Sprites world and the global->local conditioning rule."""

from enum import Enum

import numpy as np


class GlobalAction(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    UP = "up"
    DOWN = "down"
    STAY = "stay"


class LocalAction(str, Enum):
    WALK_FRONT = "walk_front"
    WALK_LEFT = "walk_left"
    WALK_RIGHT = "walk_right"
    SPELLCAST_FRONT = "spellcast_front"
    SPELLCAST_LEFT = "spellcast_left"
    SPELLCAST_RIGHT = "spellcast_right"
    SLASH_FRONT = "slash_front"
    SLASH_LEFT = "slash_left"
    SLASH_RIGHT = "slash_right"


#: Local actions used to animate a sprite that is not translating.
STATIC_ACTIONS = (
    LocalAction.SPELLCAST_FRONT,
    LocalAction.SPELLCAST_LEFT,
    LocalAction.SPELLCAST_RIGHT,
    LocalAction.SLASH_FRONT,
    LocalAction.SLASH_LEFT,
    LocalAction.SLASH_RIGHT,
)

_WALK_FOR = {
    GlobalAction.RIGHT: LocalAction.WALK_RIGHT,
    GlobalAction.LEFT: LocalAction.WALK_LEFT,
    GlobalAction.UP: LocalAction.WALK_FRONT,
    GlobalAction.DOWN: LocalAction.WALK_FRONT,
}


def condition_local_actions(global_actions, rng_seed: int) -> list[LocalAction]:
    """Map each global step to a local animation action.

    Directed shifts force the matching walk action; each `stay` step draws one
    of the six static actions uniformly (an independent draw per step).
    """
    rng = np.random.Generator(np.random.PCG64(rng_seed))
    out = []
    for g in global_actions:
        g = GlobalAction(g)
        if g is GlobalAction.STAY:
            out.append(STATIC_ACTIONS[rng.integers(len(STATIC_ACTIONS))])
        else:
            out.append(_WALK_FOR[g])
    return out
