"""Non-crossing partition lattices of types A and B and their buildings."""

from .coxeter import (
    CoxeterSpec,
    Element,
    Family,
    Reflection,
    ReducedWord,
    all_reflections,
    coxeter_element,
    parse_element,
    parse_word,
    reduced_words_of,
    reflection_length,
)

__version__ = "0.1.0"
