"""Backspace evaluation and the exponentiation substitution, end to end.

Run:  python3 demos/eraser_walkthrough.py
"""

from ocpower.eraser import (ERASER, eval_approx, eval_tilde, exp_substitute,
                            in_l3)
from ocpower.machines import accepts, enumerate_accepted
from ocpower.pi_pipeline import p_base_machine

B = ERASER


def show(w):
    ap = eval_approx(w)
    print("  %-12r tilde=%-6r approx=%-10r balanced=%s"
          % (w, eval_tilde(w), ap if isinstance(ap, str) else "UNDERFLOW",
             in_l3(w)))


print("Backspace evaluation (the eraser letter prints as %r):" % B)
show("ab" + B)
show("a" + B + B + "b")      # underflow: a backspace hits the empty word
show("ab" + B + B)           # balanced: evaluates to the empty word
show("aa" + B + "b" + B + B)

print()
print("Exponentiation: substitute every letter a of a base machine by")
print("(balanced word)·a.  One counter is added; here the base is the")
print("language 0*1:")
base = p_base_machine(2)     # 0*1
lifted = exp_substitute(base)
print("  base k=%d, lifted k=%d" % (base.k, lifted.k))
for w in ["1", "01", "0" + B + "1", "00" + B + B + "01", "0" + B + "01"]:
    print("  %-14r -> %s" % (w, "accept" if accepts(lifted, w) else "reject"))

print()
print("Shortest accepted words of the lifted machine:")
print(" ", " ".join(repr(w) for w in enumerate_accepted(lifted, 4)))
