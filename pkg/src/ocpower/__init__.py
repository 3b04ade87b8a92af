"""One-counter machines, block codings, and the level build pipelines."""

from .machines import (CounterMachine, DFA, ERASER, LetterMorphism, Trans,
                       accepts, apply_letter_morphism, counter_bound,
                       enumerate_accepted, intersect_regular, realtime_pad,
                       union_machines, validate_machine)

__all__ = [
    "CounterMachine", "DFA", "ERASER", "LetterMorphism", "Trans",
    "accepts", "apply_letter_morphism", "counter_bound",
    "enumerate_accepted", "intersect_regular", "realtime_pad",
    "union_machines", "validate_machine",
]

__version__ = "0.1.0"
