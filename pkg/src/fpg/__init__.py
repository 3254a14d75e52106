"""Finitely presented group workbench: words, presentations, coset enumeration,
abelianization, consequence certificates and presentation assembly."""

from .words import Word, w
from .presentation import FinitePresentation, parse_presentation
from .datasets import builtin

__all__ = ["Word", "w", "FinitePresentation", "parse_presentation", "builtin"]
