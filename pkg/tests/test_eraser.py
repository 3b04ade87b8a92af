import itertools

from hypothesis import given, strategies as st

from ocpower.eraser import (ERASER, eval_approx, eval_tilde, exp_substitute,
                            h_factor_oracle, in_l3, l3_grammar_check,
                            l3a_machine)
from ocpower.machines import accepts, validate_machine
from ocpower.pi_pipeline import a0_machine

WORDS3 = st.text(alphabet=["a", "b", ERASER], max_size=14)


@given(WORDS3)
def test_tilde_never_contains_backspace(w):
    assert ERASER not in eval_tilde(w)


@given(WORDS3)
def test_approx_refines_tilde(w):
    ap = eval_approx(w)
    if isinstance(ap, str):
        assert ap == eval_tilde(w)


@given(WORDS3)
def test_balanced_iff_empty_evaluation(w):
    assert in_l3(w) == (eval_approx(w) == "")
    assert in_l3(w) == l3_grammar_check(w)


@given(WORDS3, WORDS3)
def test_balanced_closed_under_concatenation(u, v):
    if in_l3(u) and in_l3(v):
        assert in_l3(u + v)


def test_marked_machine_small_words():
    m = l3a_machine("a", ("a", "b"))
    assert validate_machine(m) == []
    for n in range(8):
        for tup in itertools.product(("a", "b", ERASER), repeat=n):
            w = "".join(tup)
            assert accepts(m, w) == bool(w and w[-1] == "a"
                                         and in_l3(w[:-1]))


def test_exp_substitute_matches_oracle():
    base = a0_machine()
    lifted = exp_substitute(base)
    assert validate_machine(lifted) == []
    oracle = h_factor_oracle(lambda w: accepts(base, w), sorted(base.alphabet))
    for n in range(7):
        for tup in itertools.product(sorted(base.alphabet) + [ERASER],
                                     repeat=n):
            w = "".join(tup)
            assert accepts(lifted, w) == oracle(w), w
