import threading

from PIL import ImageFont

from prepocr import constants
from prepocr.exceptions import FontLoadError
from preputils import logging

logger = logging.get_logger(__name__)

# FreeType faces are not shared between threads
_thread_fonts = threading.local()


def load_font(font: str, size: int) -> ImageFont.FreeTypeFont:
    """
    Loads a font file at `size` points. The name "default" selects Pillow's bundled scalable font.
    Loaded fonts are cached per worker thread.
    """
    cache = getattr(_thread_fonts, "cache", None)
    if cache is None:
        cache = _thread_fonts.cache = {}
    key = (font, size)
    if key in cache:
        return cache[key]
    try:
        if font == constants.DEFAULT_FONT:
            loaded = ImageFont.load_default(size)
        else:
            loaded = ImageFont.truetype(font, size)
    except (OSError, ValueError) as e:
        raise FontLoadError("Could not load font {} at size {}: {}".format(font, size, e))
    if not hasattr(loaded, "getmetrics"):
        raise FontLoadError("Font {} is not scalable; Pillow needs FreeType support".format(font))
    logger.debug("Loaded font {} at size {}", font, size)
    cache[key] = loaded
    return loaded
