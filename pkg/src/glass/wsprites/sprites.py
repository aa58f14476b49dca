"""Procedural sprite bitmaps and an optional sprite-sheet loader.

Characters are drawn on a 24-unit design grid scaled to the requested pixel
size. For every local action the alpha silhouette is the union of all pose
phases and therefore constant while the action repeats; the 4-phase animation
only changes colors inside it. This keeps the mask footprint (and its
centroid) an exact function of the walk position.
"""

from functools import lru_cache
from pathlib import Path

import numpy as np
from PIL import Image

from ..errors import AssetError
from .actions import LocalAction

#: Number of animation phases per local action.
PHASES = 4

#: Number of distinct characters (4 appearance attributes with 6 values each).
NUM_CHARACTERS = 1296

_SKIN = np.array(
    [(247, 212, 170), (224, 178, 132), (198, 142, 100), (160, 104, 70), (120, 78, 52), (234, 192, 150)],
    dtype=np.float32,
)
_OUTFIT = np.array(
    [(196, 64, 52), (58, 112, 196), (64, 160, 84), (180, 140, 48), (130, 78, 176), (70, 170, 170)],
    dtype=np.float32,
)
_HAIR = np.array(
    [(52, 38, 28), (230, 200, 90), (150, 60, 30), (30, 30, 34), (200, 120, 160), (120, 120, 126)],
    dtype=np.float32,
)
_PANTS = np.array(
    [(60, 60, 70), (96, 70, 40), (40, 70, 96), (80, 90, 60), (90, 50, 50), (50, 50, 50)],
    dtype=np.float32,
)

_BLADE = np.array((225, 228, 235), dtype=np.float32)
_BLADE_DIM = np.array((110, 112, 120), dtype=np.float32)
_ORB = np.array((255, 240, 120), dtype=np.float32)
_ORB_DIM = np.array((150, 140, 90), dtype=np.float32)
_EYE = np.array((20, 20, 24), dtype=np.float32)


def character_palette(sprite_id: int):
    """Decompose a character id (< 1296) into its four appearance attributes."""
    if not 0 <= sprite_id < NUM_CHARACTERS:
        raise ValueError(f"sprite_id must be in [0, {NUM_CHARACTERS}), got {sprite_id}")
    d = []
    n = sprite_id
    for _ in range(4):
        d.append(n % 6)
        n //= 6
    return {
        "skin": _SKIN[d[0]],
        "outfit": _OUTFIT[d[1]],
        "hair": _HAIR[d[2]],
        "hair_style": d[2],
        "pants": _PANTS[d[3]],
    }


class _Grid:
    """Boolean shape helpers on the 24-unit design grid."""

    def __init__(self, size: int):
        self.size = size
        s = 24.0 / size
        gy, gx = np.mgrid[0:size, 0:size].astype(np.float32)
        self.x = (gx + 0.5) * s
        self.y = (gy + 0.5) * s

    def rect(self, x0, x1, y0, y1):
        return (self.x >= x0) & (self.x < x1) & (self.y >= y0) & (self.y < y1)

    def disc(self, cx, cy, r):
        return (self.x - cx) ** 2 + (self.y - cy) ** 2 <= r * r


def _facing(action: LocalAction) -> str:
    name = action.value
    if name.endswith("_left"):
        return "left"
    if name.endswith("_right"):
        return "right"
    return "front"


def _kind(action: LocalAction) -> str:
    return action.value.split("_")[0]


def _draw_character(g: _Grid, pal, kind: str, phase: int):
    """Draw the right-facing/front variant; returns (rgb float canvas, alpha bool)."""
    rgb = np.zeros((g.size, g.size, 3), dtype=np.float32)
    alpha = np.zeros((g.size, g.size), dtype=bool)

    def paint(mask, color):
        rgb[mask] = color
        alpha[mask] = True

    head = g.disc(12, 7, 4.2)
    torso = g.rect(8, 16, 11, 17)
    leg_l = g.rect(8.5, 11.5, 17, 23)
    leg_r = g.rect(12.5, 15.5, 17, 23)

    paint(torso, pal["outfit"])
    paint(leg_l, pal["pants"])
    paint(leg_r, pal["pants"])
    paint(head, pal["skin"])

    # Hair: style selects the cap depth and side coverage.
    style = pal["hair_style"]
    depth = 5.4 + 0.5 * (style % 3)
    hair = head & (g.y < depth)
    if style >= 3:
        hair |= head & (g.x < 9.5)
    paint(hair, pal["hair"])

    # Phase-dependent walk shading: swinging limbs rendered as brightness,
    # alpha untouched. swing in {-1, 0, +1, 0} over the 4 phases.
    swing = (0, 1, 0, -1)[phase % PHASES]

    if kind == "walk":
        paint(leg_l, pal["pants"] * (1.25 + 0.45 * swing))
        paint(leg_r, pal["pants"] * (1.25 - 0.45 * swing))
        boot = g.rect(8.5, 15.5, 21.5, 23)
        paint(boot & (leg_l | leg_r), pal["pants"] * 0.55)
        arm_l = g.rect(5.8, 8, 11, 16.5)
        arm_r = g.rect(16, 18.2, 11, 16.5)
        paint(arm_l, pal["skin"] * (1.0 + 0.25 * swing))
        paint(arm_r, pal["skin"] * (1.0 - 0.25 * swing))
    elif kind == "slash":
        arm_l = g.rect(5.8, 8, 11, 16.5)
        paint(arm_l, pal["skin"])
        # Sweep fan on the right; the blade position cycles inside it.
        fan = g.rect(16, 22.5, 4.5, 16)
        paint(fan, _BLADE_DIM * 0.55)
        arm_r = g.rect(16, 19, 10.5, 13.5)
        paint(arm_r, pal["skin"])
        y0 = 4.5 + 2.8 * (phase % PHASES)
        blade = g.rect(18.5, 22.5, y0, y0 + 2.6)
        paint(blade & fan, _BLADE)
    elif kind == "spellcast":
        # Both arms raised; an orb charges above the head.
        arm_l = g.rect(5.2, 7.6, 5.5, 12)
        arm_r = g.rect(16.4, 18.8, 5.5, 12)
        glow = 0.85 + 0.15 * (phase % PHASES)
        paint(arm_l, pal["skin"] * glow)
        paint(arm_r, pal["skin"] * glow)
        orb_zone = g.disc(12, 2.4, 2.2)
        paint(orb_zone, _ORB_DIM)
        if phase >= 1:
            core = g.disc(12, 2.4, 0.7 + 0.5 * phase)
            paint(core & orb_zone, _ORB * (0.7 + 0.1 * phase))
    else:  # pragma: no cover - enum is closed
        raise AssetError(f"unknown action kind '{kind}'")

    return rgb, alpha


def _draw_face(g: _Grid, rgb, facing: str):
    head_y = (g.y >= 6.0) & (g.y < 8.0)
    if facing == "front":
        eyes = head_y & (((g.x >= 9.5) & (g.x < 11)) | ((g.x >= 13) & (g.x < 14.5)))
    else:
        # Drawn on the right-facing variant; left is produced later by mirroring.
        eyes = head_y & (g.x >= 13.5) & (g.x < 15.2)
    rgb[eyes] = _EYE


def render_sprite(sprite_id: int, action: LocalAction, phase: int, size: int):
    """Render one pose; returns (rgb uint8 (S,S,3), alpha uint8 (S,S) in {0, 255})."""
    pal = character_palette(sprite_id)
    g = _Grid(size)
    kind = _kind(action)
    facing = _facing(action)
    rgb, alpha = _draw_character(g, pal, kind, phase % PHASES)
    _draw_face(g, rgb, facing)
    if facing == "left":
        rgb = rgb[:, ::-1]
        alpha = alpha[:, ::-1]
    rgb = np.clip(rgb, 0, 255).astype(np.uint8)
    return rgb, np.where(alpha, np.uint8(255), np.uint8(0))


class ProceduralSprites:
    """Built-in character art; one of 1296 appearance combinations per id."""

    def __init__(self, size: int = 48):
        if size < 8:
            raise ValueError(f"sprite size must be >= 8, got {size}")
        self.size = size

    @lru_cache(maxsize=4096)
    def _render(self, sprite_id, action, phase):
        return render_sprite(sprite_id, action, phase, self.size)

    def get(self, sprite_id: int, action: LocalAction, phase: int):
        rgb, alpha = self._render(sprite_id, LocalAction(action), phase % PHASES)
        return rgb.copy(), alpha.copy()


class SheetSprites:
    """User-supplied sprite sheets: a 9-row x 4-column grid of RGBA cells.

    Rows follow the LocalAction enum order, columns are animation phases. A
    directory may hold several sheets; sprite ids index them round-robin.
    """

    def __init__(self, path, size: int | None = None):
        path = Path(path)
        if path.is_dir():
            files = sorted(path.glob("*.png"))
            if not files:
                raise AssetError(f"no .png sprite sheets in directory {path}")
        elif path.is_file():
            files = [path]
        else:
            raise AssetError(f"sprite sheet path does not exist: {path}")
        self._sheets = [self._load(f, size) for f in files]
        self.size = self._sheets[0][0][(LocalAction.WALK_FRONT, 0)][0].shape[0]

    @staticmethod
    def _load(file: Path, size):
        actions = list(LocalAction)
        img = np.asarray(Image.open(file).convert("RGBA"))
        h, w = img.shape[:2]
        if h % len(actions) or w % PHASES:
            raise AssetError(
                f"sheet {file} is {w}x{h}, not a {PHASES}-column x {len(actions)}-row grid"
            )
        cell_h, cell_w = h // len(actions), w // PHASES
        if cell_h != cell_w:
            raise AssetError(f"sheet {file} cells are {cell_w}x{cell_h}, expected square")
        cells = {}
        for r, action in enumerate(actions):
            for c in range(PHASES):
                cell = img[r * cell_h : (r + 1) * cell_h, c * cell_w : (c + 1) * cell_w]
                if size is not None and size != cell_h:
                    pil = Image.fromarray(cell).resize((size, size), Image.NEAREST)
                    cell = np.asarray(pil)
                rgb = cell[..., :3].copy()
                alpha = np.where(cell[..., 3] > 0, np.uint8(255), np.uint8(0))
                cells[(action, c)] = (rgb, alpha)
        return cells, file

    def get(self, sprite_id: int, action: LocalAction, phase: int):
        cells, file = self._sheets[sprite_id % len(self._sheets)]
        key = (LocalAction(action), phase % PHASES)
        if key not in cells:  # pragma: no cover - load() fills the full grid
            raise AssetError(f"sheet {file} has no cell for {key}")
        rgb, alpha = cells[key]
        return rgb.copy(), alpha.copy()
