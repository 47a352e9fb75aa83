import unicodedata
from typing import List


def normalize_text(text: str) -> str:
    """
    NFC, every whitespace run (newlines included) collapsed to one space, ends stripped.
    """
    return " ".join(unicodedata.normalize("NFC", text).split())


def split_words(text: str) -> List[str]:
    return text.split()
