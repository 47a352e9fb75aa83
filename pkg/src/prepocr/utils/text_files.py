import os

from prepocr import constants


def write_text(path: str, text: str) -> None:
    """
    Writes `text` exactly, without newline translation.
    """
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding=constants.DEFAULT_TEXT_ENCODING, newline="") as text_file:
        text_file.write(text)


def read_text(path: str) -> str:
    with open(path, encoding=constants.DEFAULT_TEXT_ENCODING, newline="") as text_file:
        return text_file.read()
