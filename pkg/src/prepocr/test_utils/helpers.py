import os
from typing import List

import numpy as np

from prepocr import constants
from prepocr.imaging import image_io
from prepocr.imaging.gray_image import GrayImage
from prepocr.utils import json_utils, seeds

SAMPLE_CORPUS = (
    "It was the best of times, it was the worst of times, it was the age of wisdom, it was the age of "
    "foolishness, it was the epoch of belief, it was the epoch of incredulity, it was the season of Light, "
    "it was the season of Darkness, it was the spring of hope, it was the winter of despair, we had "
    "everything before us, we had nothing before us, we were all going direct to Heaven, we were all going "
    "direct the other way. In short, the period was so far like the present period, that some of its "
    "noisiest authorities insisted on its being received, for good or for evil, in the superlative degree "
    "of comparison only. There were a king with a large jaw and a queen with a plain face, on the throne "
    "of England; there were a king with a large jaw and a queen with a fair face, on the throne of France. "
    "In both countries it was clearer than crystal to the lords of the State preserves of loaves and "
    "fishes, that things in general were settled for ever."
)

IN_DOMAIN_WORDS = (
    "the", "of", "and", "to", "in", "was", "that", "with", "for", "his", "had", "her", "which", "from", "they",
    "this", "were", "there", "been", "their", "when", "would", "some", "more", "time", "into", "upon", "about",
    "other", "could", "these", "people", "house", "before", "little", "great", "never", "should", "another",
    "morning", "evening", "letter", "matter", "street", "window", "garden", "mother", "father", "children",
    "country", "village", "church", "master", "himself", "nothing", "without", "through", "between", "against",
    "remember", "answered", "returned", "moment", "together", "certain", "several", "company", "believe",
)


def random_image(width: int, height: int, seed: int = 0) -> GrayImage:
    rng = seeds.create_rng(seed)
    return GrayImage(rng.integers(0, 256, size=(height, width), dtype=np.uint8))


def two_level_image(width: int, height: int, dark: int, light: int, dark_fraction: float) -> GrayImage:
    data = np.full(width * height, light, dtype=np.uint8)
    data[:int(round(width * height * dark_fraction))] = dark
    return GrayImage(data.reshape(height, width))


def text_like_image(width: int, height: int, seed: int = 0, ink: int = 20, paper: int = 235) -> GrayImage:
    """
    Dense rows of short dark strokes on a light page, standing in for printed text.
    """
    rng = seeds.create_rng(seed)
    data = np.full((height, width), paper, dtype=np.uint8)
    for top in range(4, height - 10, 14):
        x = 2
        while x < width - 4:
            stroke_width = int(rng.integers(2, 5))
            stroke_height = int(rng.integers(6, 11))
            data[top:top + stroke_height, x:x + stroke_width] = ink
            x += stroke_width + int(rng.integers(2, 6))
    return GrayImage(data)


def mutate_pixels(img: GrayImage, count: int, seed: int = 0) -> GrayImage:
    rng = seeds.create_rng(seed)
    data = img.data.copy()
    rows = rng.integers(0, img.height, size=count)
    cols = rng.integers(0, img.width, size=count)
    data[rows, cols] = rng.integers(0, constants.MAX_INTENSITY + 1, size=count, dtype=np.uint8)
    return GrayImage(data)


def sample_sentences() -> List[str]:
    return [sentence.strip() + "." for sentence in SAMPLE_CORPUS.split(".") if sentence.strip()]


def write_pages_manifest(directory: str, texts: List[str], with_clean: bool = True, width: int = 160,
                         height: int = 140) -> str:
    """
    One text-like page image per text, listed in `<directory>/pages.jsonl` with the text as page
    ground truth. The clean reference, when written, is the page image itself.
    """
    entries = []
    for index, text in enumerate(texts):
        image_name = "page{:03d}.png".format(index)
        image_io.save_png(text_like_image(width, height, seed=index), os.path.join(directory, image_name))
        entry = {"page_id": "p{:03d}".format(index), "image": image_name, "gt_text": text}
        if with_clean:
            entry["clean"] = image_name
        entries.append(entry)
    manifest_path = os.path.join(directory, "pages.jsonl")
    json_utils.write_jsonl(manifest_path, entries)
    return manifest_path


def in_domain_text(length: int, seed: int = 0) -> str:
    """
    At least `length` characters of sentences drawn from a small fixed vocabulary, so that a
    language model trained on one seed's text is in-domain for another seed's.
    """
    rng = seeds.create_rng(seed)
    sentences = []
    total = 0
    while total < length:
        words = [IN_DOMAIN_WORDS[int(index)] for index in rng.integers(0, len(IN_DOMAIN_WORDS),
                                                                            size=int(rng.integers(5, 13)))]
        sentence = " ".join(words).capitalize() + "."
        sentences.append(sentence)
        total += len(sentence) + 1
    return " ".join(sentences)
