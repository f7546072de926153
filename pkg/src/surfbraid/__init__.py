"""Positive presentations of surface braid groups and an exact solver for B_2 of the torus."""

from .ces_solver import INSTANCES, NormalForm, normal_form
from .presentations import Presentation, build_presentation, read_presentation, write_presentation
from .words import Alphabet, Word, parse_word

__all__ = [
    "Alphabet",
    "INSTANCES",
    "NormalForm",
    "Presentation",
    "Word",
    "build_presentation",
    "normal_form",
    "parse_word",
    "read_presentation",
    "write_presentation",
]
