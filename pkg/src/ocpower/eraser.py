"""Backspace evaluation, the balanced language L3, and the exponentiation
substitution a -> L3.a applied to machines.

Evaluation scans left to right; an ordinary letter is appended, the eraser
letter removes the last letter of the evaluation so far.  The tilde variant
lets a backspace on the empty evaluation do nothing; the approx variant makes
it Underflow (a value, not an exception, so oracles stay total).
"""

import functools

from .machines import (ERASER, CounterMachine, Trans, _all_patterns)


class _Underflow:
    def __repr__(self):
        return "Underflow"

    def __bool__(self):
        return False


UNDERFLOW = _Underflow()


def eval_tilde(w):
    out = []
    for ch in w:
        if ch == ERASER:
            if out:
                out.pop()
        else:
            out.append(ch)
    return "".join(out)


def eval_approx(w):
    """Evaluation that is UNDERFLOW when a backspace hits the empty word."""
    out = []
    for ch in w:
        if ch == ERASER:
            if not out:
                return UNDERFLOW
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def in_l3(w):
    """w evaluates to the empty word without underflow.

    Equivalent to: equal numbers of letters and backspaces, and no prefix
    with more backspaces than letters (a Dyck condition with every ordinary
    letter as an opening bracket).
    """
    return eval_approx(w) == ""


@functools.lru_cache(maxsize=1 << 20)
def l3_grammar_check(w):
    """Independent grammar-based oracle for L3.

    Derivability from {S -> aS<S, S -> a<S, S -> lambda} (a any ordinary
    letter, < the eraser), decided by a memoised substring table.
    """
    if w == "":
        return True
    if w[0] == ERASER:
        return False
    # S -> a < S
    if len(w) >= 2 and w[1] == ERASER and l3_grammar_check(w[2:]):
        return True
    # S -> a S < S with the inner S covering w[1:i], the eraser at i
    for i in range(1, len(w)):
        if w[i] == ERASER and l3_grammar_check(w[1:i]) and l3_grammar_check(w[i + 1:]):
            return True
    return False


def remove_letter(w, d):
    return "".join(ch for ch in w if ch != d)


def l3a_machine(a, alphabet):
    """Deterministic one-counter machine for L3.a (final state + zero counter).

    The machine stores the previous letter in its control state and applies
    its +1/-1 counter effect one step late, so that when the input ends the
    counter holds the balance of everything before the last letter and the
    state says whether that last letter was `a`.
    """
    if a == ERASER:
        raise ValueError("the distinguished letter cannot be the eraser")
    if a not in alphabet:
        raise ValueError("letter %r not in alphabet" % a)
    sigma = set(alphabet) | {ERASER}
    start = "start"
    def hold(ch):
        if ch == a:
            return "held_a"
        if ch == ERASER:
            return "held_bs"
        return "held_other"
    states = {start, "held_a", "held_other", "held_bs"}
    trans = []
    for ch in sigma:
        trans.append(Trans(start, ch, (0,), hold(ch), (0,)))
    for held, effect in (("held_a", 1), ("held_other", 1), ("held_bs", -1)):
        for ch in sigma:
            if effect == 1:
                trans.append(Trans(held, ch, (0,), hold(ch), (1,)))
                trans.append(Trans(held, ch, (1,), hold(ch), (1,)))
            else:
                # decrement needs a nonzero counter; a zero counter here means
                # the balance would go negative, so the run just dies
                trans.append(Trans(held, ch, (1,), hold(ch), (-1,)))
    return CounterMachine(1, states, sigma, start, {"held_a"}, trans,
                          real_time=True, acceptance="final_zero",
                          lambda_chain_bound=0)


def exp_substitute(m):
    """Machine for h(L(m)) where h(a) = L3.a, with one extra counter.

    At every state with an outgoing letter-transition the machine may instead
    run an L3 segment on the new counter (ordinary letter +1, eraser -1); the
    original counters are frozen (delta 0) during the segment, and the
    original letter-transitions require the new counter to be zero, which is
    exactly the balanced-segment boundary.
    """
    if ERASER in m.alphabet:
        raise ValueError("alphabet already contains the eraser letter")
    if not m.real_time:
        raise ValueError("substitution needs a real-time machine")
    if m.acceptance != "final_zero":
        raise ValueError("substitution needs final_zero acceptance")
    k = m.k
    sigma = set(m.alphabet) | {ERASER}
    trans = []
    for t in m.transitions:
        trans.append(Trans(t.src, t.letter, t.pattern + (0,), t.dst,
                           t.delta + (0,)))
    has_out = {t.src for t in m.transitions if t.letter is not None}
    zero_delta = (0,) * k
    for q in has_out:
        for pat in _all_patterns(k):
            for ch in m.alphabet:
                trans.append(Trans(q, ch, pat + (0,), q, zero_delta + (1,)))
                trans.append(Trans(q, ch, pat + (1,), q, zero_delta + (1,)))
            trans.append(Trans(q, ERASER, pat + (1,), q, zero_delta + (-1,)))
    return CounterMachine(k + 1, m.states, sigma, m.initial, m.finals, trans,
                          real_time=True, acceptance="final_zero",
                          lambda_chain_bound=m.lambda_chain_bound)


def h_factor_oracle(base_oracle, alphabet):
    """Membership oracle for h(L) with h(a) = L3.a, by dynamic programming.

    base_oracle decides L over `alphabet`; the result decides words over
    alphabet + eraser.  Used as the independent check for exp_substitute.
    """
    def member(w):
        n = len(w)
        # reach[i] = set of letter-words a_1..a_r consumed when position i is
        # a factor boundary; we only need the set of base-language prefixes,
        # so store the letter word itself (lengths stay tiny at desk scale).
        reach = {0: {""}}
        for i in range(n + 1):
            if i not in reach:
                continue
            for j in range(i + 1, n + 1):
                seg = w[i:j]
                if seg[-1] == ERASER:
                    continue
                if in_l3(seg[:-1]):
                    for pref in reach[i]:
                        reach.setdefault(j, set()).add(pref + seg[-1])
        return any(base_oracle(u) for u in reach.get(n, ()))
    return member
