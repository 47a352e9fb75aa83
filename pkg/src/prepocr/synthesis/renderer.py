import math
import textwrap
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from PIL import Image, ImageDraw
from scipy import ndimage

from prepocr import constants
from prepocr.exceptions import RenderError
from prepocr.imaging.gray_image import GrayImage
from prepocr.models.line_metadata import LineMetadata
from prepocr.models.render_result import RenderResult
from prepocr.models.render_spec import RenderSpec
from prepocr.synthesis import fonts
from prepocr.utils import seeds
from preputils import logging

logger = logging.get_logger(__name__)

GLYPH_PADDING = 2


@dataclass
class _PlacedGlyph:
    mask: Image.Image
    x: float
    y: float


def wrap_lines(text: str, wrap_width: int) -> List[str]:
    lines = []
    for paragraph in text.splitlines():
        lines.extend(textwrap.wrap(paragraph, width=wrap_width, break_long_words=True))
    return lines


def render_base(spec: RenderSpec, seed: int) -> RenderResult:
    """
    Renders `spec.text` as dark glyphs on a white page.

    Glyphs are placed one by one so that spacing, offset and rotation jitter apply per character; the
    page tilt and a sinusoidal baseline bend then shift every glyph vertically as a function of its x
    position. All random draws come from one generator seeded with `seed`, in a fixed order.
    """
    spec.validate()
    lines = wrap_lines(spec.text, spec.wrap_width)
    if not lines:
        raise RenderError("Nothing to render: text has no printable content")

    font = fonts.load_font(spec.font, spec.font_size)
    ascent, descent = font.getmetrics()
    line_height = ascent + descent
    rng = seeds.create_rng(seed)

    tilt = math.radians(rng.uniform(*spec.page_tilt_range))
    bend_amplitude = rng.uniform(*spec.bend_amplitude_range)
    bend_phase = rng.uniform(0.0, 2.0 * math.pi)
    ink_spread = int(rng.integers(int(spec.ink_spread_range[0]), int(spec.ink_spread_range[1]) + 1))

    glyphs: List[_PlacedGlyph] = []
    line_spans = []
    baseline_y = float(ascent)
    for line_index, line in enumerate(lines):
        if line_index > 0:
            baseline_y += line_height * (1.0 + rng.uniform(*spec.line_spacing_jitter))
        x = float(rng.integers(int(spec.indent_range[0]), int(spec.indent_range[1]) + 1))
        line_start = x
        for char in line:
            advance = font.getlength(char)
            dx = rng.uniform(*spec.char_offset_range)
            dy = rng.uniform(*spec.char_offset_range)
            angle = rng.uniform(*spec.char_rotation_range)
            mask = _glyph_mask(font, char, line_height, angle)
            if mask is not None:
                glyphs.append(_PlacedGlyph(mask, x + dx - GLYPH_PADDING, baseline_y - ascent + dy - GLYPH_PADDING))
            x += advance * (1.0 + rng.uniform(*spec.char_spacing_jitter))
        line_spans.append((line_index, line, line_start, x, baseline_y))

    if not glyphs:
        raise RenderError("Text contains no renderable glyphs for font {}".format(spec.font))

    content_width = max(span[3] for span in line_spans) or 1.0

    def vertical_shift(x_pos: float) -> float:
        return x_pos * math.tan(tilt) + bend_amplitude * math.sin(2.0 * math.pi * x_pos / content_width + bend_phase)

    for glyph in glyphs:
        glyph.y += vertical_shift(glyph.x + glyph.mask.width / 2.0)

    min_x = min(glyph.x for glyph in glyphs)
    min_y = min(glyph.y for glyph in glyphs)
    max_x = max(glyph.x + glyph.mask.width for glyph in glyphs)
    max_y = max(glyph.y + glyph.mask.height for glyph in glyphs)
    offset_x = spec.margins - min_x
    offset_y = spec.margins - min_y
    width = int(math.ceil(max_x - min_x)) + 2 * spec.margins
    height = int(math.ceil(max_y - min_y)) + 2 * spec.margins

    page = Image.new("L", (width, height), constants.WHITE)
    for glyph in glyphs:
        position = (int(math.floor(glyph.x + offset_x + 0.5)), int(math.floor(glyph.y + offset_y + 0.5)))
        page.paste(constants.BLACK, position, mask=glyph.mask)

    data = np.asarray(page, dtype=np.uint8)
    if ink_spread > 0:
        for _ in range(ink_spread):
            data = ndimage.grey_erosion(data, size=(3, 3), mode="nearest")
    elif ink_spread < 0:
        for _ in range(-ink_spread):
            data = ndimage.grey_dilation(data, size=(3, 3), mode="nearest")

    metadata = []
    for line_index, line, line_start, line_end, line_baseline in line_spans:
        left = (line_start + offset_x, line_baseline + vertical_shift(line_start) + offset_y)
        right = (line_end + offset_x, line_baseline + vertical_shift(line_end) + offset_y)
        top = min(left[1], right[1]) - ascent - abs(bend_amplitude)
        bottom = max(left[1], right[1]) + descent + abs(bend_amplitude)
        bbox = (
            max(0, int(math.floor(left[0]))),
            max(0, int(math.floor(top))),
            min(width, int(math.ceil(right[0]))),
            min(height, int(math.ceil(bottom))),
        )
        metadata.append(LineMetadata(line_index, line, left, right, bbox))

    logger.trace("Rendered {} lines into {}x{} page (seed {})", len(lines), width, height, seed)
    return RenderResult(GrayImage(data), metadata)


def _glyph_mask(font, char: str, line_height: int, angle: float) -> Optional[Image.Image]:
    if char.isspace():
        return None
    bbox = font.getbbox(char)
    glyph_width = max(1, int(math.ceil(max(bbox[2], font.getlength(char)))))
    mask = Image.new("L", (glyph_width + 2 * GLYPH_PADDING, line_height + 2 * GLYPH_PADDING), 0)
    ImageDraw.Draw(mask).text((GLYPH_PADDING, GLYPH_PADDING), char, fill=255, font=font)
    if mask.getbbox() is None:
        return None
    if angle != 0.0:
        # rotation about the glyph box center, padding absorbs the corners
        return mask.rotate(angle, resample=Image.Resampling.BICUBIC)
    return mask
