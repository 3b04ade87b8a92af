"""Block-coded run languages and the Pi-side build pipeline.

The central language here, over a base alphabet Sigma plus three marker
letters (zero, one, two), describes finite runs of a two-counter subject
machine in a unary block coding: block i is

    0^{v_i} a_i 1 0^{w_i} 0^{z_i} 2 0^{u_{i+1}}

where v_0 = 1, the subject has a transition chain q_0 -> ... -> q_n from its
initial state with letters a_i whose zero-patterns match the 2/3-divisibility
of v_i, w_i = v_i * 2^l * 3^l' for the transition's counter delta (l, l'),
u_{i+1} = z_i, and the last block has q_n final and w_{n-1} coprime to 6.
Only the zero-patterns of the counters are checked, not their values; the
values ride along as the 2- and 3-adic valuations of the block lengths.

A one-counter machine recognises this language: the counter carries the block
lengths, the state tracks the length mod 6 (which determines the divisibility
pattern) and, during w-blocks, a position inside a cycle of length A that
decrements D times per cycle to scale the counter by D/A.

On top of that sit the auxiliary block language catching a length-discipline
violation near the end of a word, and the pipeline that alternates the
backspace substitution with this run coding to climb the hierarchy.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .codings import GParams, encode_g, valuations_23
from .eraser import exp_substitute, h_factor_oracle
from .machines import (CounterMachine, DFA, LetterMorphism, Trans,
                       apply_letter_morphism, realtime_pad, union_machines)
from .reduce import compact, reduce_machine

DEFAULT_MARKERS = ("0", "1", "2")


class FeasibilityError(ValueError):
    """A run block does not fit into the geometric block budget."""

    def __init__(self, letter_index, needed, available):
        self.letter_index = letter_index
        self.needed = needed
        self.available = available
        super().__init__(
            "block for letter index %d needs length %d but the coding only "
            "provides %d; increase l" % (letter_index, needed, available))


class WitnessError(ValueError):
    pass


class UnsupportedLevel(ValueError):
    pass


def a0_machine():
    """The two-counter test subject with L = {ab} used throughout the tests."""
    trans = [
        Trans("q0", "a", (0, 0), "q2", (1, 0)),
        Trans("q2", "b", (1, 0), "q1", (-1, 0)),
    ]
    return CounterMachine(2, {"q0", "q1", "q2"}, {"a", "b"}, "q0", {"q1"},
                          trans, real_time=True, acceptance="final_zero",
                          lambda_chain_bound=0)


def _pattern_for_count(v):
    # zero-pattern (counter > 0 flags) of the 2- and 3-adic valuations of v
    return (1 if v % 2 == 0 else 0, 1 if v % 3 == 0 else 0)


def _factor(delta):
    fr = Fraction(2) ** delta[0] * Fraction(3) ** delta[1]
    return (fr.numerator, fr.denominator)


def _check_subject(subject):
    if subject.k != 2:
        raise ValueError("subject must have exactly two counters")
    if not subject.real_time:
        raise ValueError("subject must be real-time")
    if subject.acceptance != "final_zero":
        raise ValueError("subject must accept by final state + zero counters")


# -- run-coding witnesses -------------------------------------------------

@dataclass(frozen=True)
class ScriptLWitness:
    """A fully cut-up parse of a run-coding word.

    u_lens[i] is the 0-run after block i's marker two; states has length
    n + 1; deltas are the subject counter deltas, one per block.
    """
    letters: tuple
    v_lens: tuple
    w_lens: tuple
    z_lens: tuple
    u_lens: tuple
    states: tuple
    deltas: tuple

    @property
    def n(self):
        return len(self.letters)

    def to_word(self, markers=DEFAULT_MARKERS):
        z, o, t = markers
        parts = []
        for i in range(self.n):
            parts.append(z * self.v_lens[i] + self.letters[i] + o
                         + z * (self.w_lens[i] + self.z_lens[i]) + t
                         + z * self.u_lens[i])
        return "".join(parts)


def validate_witness(subject, wit):
    """Internal-consistency problems of a witness, as a list of messages."""
    bad = []
    n = wit.n
    if n == 0:
        return ["empty witness"]
    if not (len(wit.v_lens) == len(wit.w_lens) == len(wit.z_lens)
            == len(wit.u_lens) == n and len(wit.states) == n + 1
            and len(wit.deltas) == n):
        return ["field lengths inconsistent"]
    if wit.v_lens[0] != 1:
        bad.append("first block must have v-length 1")
    if wit.states[0] != subject.initial:
        bad.append("run does not start in the subject's initial state")
    if wit.states[-1] not in subject.finals:
        bad.append("run does not end in a final state")
    available = set(subject.transitions)
    for i in range(n):
        v, w = wit.v_lens[i], wit.w_lens[i]
        pat = _pattern_for_count(v)
        t = Trans(wit.states[i], wit.letters[i], pat, wit.states[i + 1],
                  wit.deltas[i])
        if t not in available:
            bad.append("block %d uses a transition the subject lacks: %r"
                       % (i, t))
        num, den = _factor(wit.deltas[i])
        if w * den != v * num:
            bad.append("block %d: w = %d is not v * %s/%s" % (i, w, num, den))
        if wit.z_lens[i] < 0 or wit.u_lens[i] != wit.z_lens[i]:
            bad.append("block %d: u-length %d differs from z-length %d"
                       % (i, wit.u_lens[i], wit.z_lens[i]))
        if v < 1:
            bad.append("block %d: empty v-run" % i)
    last_w = wit.w_lens[-1]
    if last_w % 2 == 0 or last_w % 3 == 0:
        bad.append("last w-length %d is not coprime to 6" % last_w)
    return bad


# -- the definitional oracle ----------------------------------------------

def _parse_blocks(w, sigma, markers):
    """Cut w into (p_i, a_i, m_i) block triples plus the trailing 0-run.

    Returns (blocks, trailing) or None if the shape is wrong.
    """
    z, o, t = markers
    blocks = []
    i, n = 0, len(w)
    while True:
        p = 0
        while i < n and w[i] == z:
            p += 1
            i += 1
        if i == n:
            return (blocks, p) if blocks else None
        a = w[i]
        if a not in sigma:
            return None
        i += 1
        if i == n or w[i] != o:
            return None
        i += 1
        m = 0
        while i < n and w[i] == z:
            m += 1
            i += 1
        if i == n or w[i] != t:
            return None
        i += 1
        blocks.append((p, a, m))


def script_l_oracle(subject, w, markers=DEFAULT_MARKERS, want_witness=False):
    """Definitional membership test by dynamic programming over the blocks.

    With want_witness, returns a ScriptLWitness or None instead of a bool.
    """
    _check_subject(subject)
    parsed = _parse_blocks(w, subject.alphabet, markers)
    fail = None if want_witness else False
    if parsed is None:
        return fail
    blocks, trailing = parsed
    n = len(blocks)
    if blocks[0][0] != 1:
        return fail
    # frontier: (state, v-length) -> parent pointer (prev key, w, z)
    frontier = {(subject.initial, 1): None}
    parents = [dict(frontier)]
    for i, (_, a, m) in enumerate(blocks):
        last = (i == n - 1)
        nxt = {}
        for (q, v) in parents[i]:
            pat = _pattern_for_count(v)
            for t in subject.letter_transitions(q, a):
                if t.pattern != pat:
                    continue
                num, den = _factor(t.delta)
                if (v * num) % den:
                    continue
                wlen = v * num // den
                zlen = m - wlen
                if zlen < 0:
                    continue
                if last:
                    if (t.dst in subject.finals and wlen % 2 and wlen % 3
                            and trailing == zlen):
                        key = (t.dst, wlen)
                        nxt.setdefault(key, ((q, v), t, wlen, zlen))
                else:
                    # the next v-run is whatever the next 0-run leaves after
                    # the u-part mirroring this block's z-part
                    v_next = blocks[i + 1][0] - zlen
                    if v_next >= 1:
                        key = (t.dst, v_next)
                        nxt.setdefault(key, ((q, v), t, wlen, zlen))
        parents.append(nxt)
        if not nxt:
            return fail
    if not want_witness:
        return True
    # walk the parent pointers back from any surviving last-block entry
    key = next(iter(sorted(parents[n], key=repr)))
    letters, vs, ws, zs, us, states, deltas = [], [], [], [], [], [], []
    for i in range(n, 0, -1):
        prev, t, wlen, zlen = parents[i][key]
        letters.append(t.letter)
        vs.append(prev[1])
        ws.append(wlen)
        zs.append(zlen)
        us.append(zlen)
        states.append(t.dst)
        deltas.append(t.delta)
        key = prev
    states.append(subject.initial)
    return ScriptLWitness(tuple(reversed(letters)), tuple(reversed(vs)),
                          tuple(reversed(ws)), tuple(reversed(zs)),
                          tuple(reversed(us)), tuple(reversed(states)),
                          tuple(reversed(deltas)))


def script_l_oracle_naive(subject, w, markers=DEFAULT_MARKERS):
    """Brute-force cross-check: try every subject transition sequence."""
    _check_subject(subject)
    parsed = _parse_blocks(w, subject.alphabet, markers)
    if parsed is None:
        return False
    blocks, trailing = parsed
    n = len(blocks)
    if blocks[0][0] != 1:
        return False
    for seq in product(subject.transitions, repeat=n):
        if seq[0].src != subject.initial or seq[-1].dst not in subject.finals:
            continue
        if any(seq[i].dst != seq[i + 1].src for i in range(n - 1)):
            continue
        v = 1
        ok = True
        for i, (p, a, m) in enumerate(blocks):
            t = seq[i]
            if t.letter != a or t.pattern != _pattern_for_count(v):
                ok = False
                break
            num, den = _factor(t.delta)
            if (v * num) % den:
                ok = False
                break
            wlen = v * num // den
            zlen = m - wlen
            if zlen < 0:
                ok = False
                break
            if i == n - 1:
                if not (wlen % 2 and wlen % 3 and trailing == zlen):
                    ok = False
                break
            v = blocks[i + 1][0] - zlen
            if v < 1:
                ok = False
                break
        if ok:
            return True
    return False


def script_l_shape_dfa(sigma, markers=DEFAULT_MARKERS):
    """Complete DFA of the block shape (0* a 1 0* 2)+ 0*, for subtree pruning.

    Every run-coding word conforms, so a dead state soundly kills a subtree.
    Finals are all non-dead states: liveness is all that pruning uses.
    """
    z, o, t = markers
    alphabet = set(sigma) | set(markers)
    trans = {}
    for ch in alphabet:
        trans[("s0", ch)] = ("s0" if ch == z else
                             "s1" if ch in sigma else "dead")
        trans[("s1", ch)] = "s2" if ch == o else "dead"
        trans[("s2", ch)] = ("s2" if ch == z else
                             "s0" if ch == t else "dead")
        trans[("dead", ch)] = "dead"
    return DFA({"s0", "s1", "s2", "dead"}, alphabet, "s0",
               {"s0", "s1", "s2"}, trans)


# -- the one-counter machine ----------------------------------------------

def script_l_machine(subject, markers=DEFAULT_MARKERS):
    """One-counter machine for the run-coding language of a 2-counter subject.

    State components: the subject state reached so far, the current block
    length mod 6, and (inside w-blocks) a position in a decrement cycle of
    length A realising the factor A/D.  The w-gadgets are keyed by target
    state and factor, so parallel subject transitions share them; the gadget
    variant tracking w mod 6 for the coprime-to-6 last block is only built
    for final subject states.
    """
    _check_subject(subject)
    z, o, t = markers
    if set(markers) & set(subject.alphabet):
        raise ValueError("markers collide with the subject alphabet")
    if len(set(markers)) != 3:
        raise ValueError("need three distinct markers")
    trans = []
    states = set()
    max_chain = 0

    def add(src, letter, pat, dst, delta):
        states.add(src)
        states.add(dst)
        trans.append(Trans(src, letter, (pat,), dst, (delta,)))

    init = "init"
    a0 = ("a0", subject.initial)
    add(init, z, 0, a0, 1)

    # v-phase states: counter accumulates the block length, the state its
    # residue mod 6 (which fixes the subject zero-pattern the block encodes)
    gadgets = set()
    for q in subject.states:
        for r in range(6):
            add(("v", q, r), z, 1, ("v", q, (r + 1) % 6), 1)

    for tt in subject.transitions:
        fac = _factor(tt.delta)
        for r in range(6):
            if tt.pattern != _pattern_for_count(r if r else 6):
                continue
            sources = [("v", tt.src, r)]
            if tt.src == subject.initial and r == 1:
                sources.append(a0)
            for src in sources:
                add(src, tt.letter, 1, ("w0", tt.dst, fac, False), 0)
                gadgets.add((tt.dst, fac, False))
                if tt.dst in subject.finals:
                    add(src, tt.letter, 1, ("w0", tt.dst, fac, True), 0)
                    gadgets.add((tt.dst, fac, True))

    for (q2, fac, last) in sorted(gadgets, key=repr):
        A, D = fac
        sched = [D * (j + 1) // A - D * j // A for j in range(A)]
        max_chain = max(max_chain, max(sched) - 1)
        if last:
            add(("w0", q2, fac, True), o, 1, ("W", q2, fac, 0, 0), 0)
            for j in range(A):
                for m6 in range(6):
                    cur = ("W", q2, fac, j, m6)
                    nj = (j + 1) % A
                    nm = (m6 + 1) % 6
                    d = sched[j]
                    if d == 0:
                        add(cur, z, 0, ("W", q2, fac, nj, nm), 0)
                        add(cur, z, 1, ("W", q2, fac, nj, nm), 0)
                    elif d == 1:
                        add(cur, z, 1, ("W", q2, fac, nj, nm), -1)
                    else:
                        add(cur, z, 1, ("Wl", q2, fac, j, d - 1, nm), -1)
                        for c in range(d - 1, 0, -1):
                            dst = (("W", q2, fac, nj, nm) if c == 1
                                   else ("Wl", q2, fac, j, c - 1, nm))
                            add(("Wl", q2, fac, j, c, nm), None, 1, dst, -1)
            for m6 in (1, 5):
                bnd = ("W", q2, fac, 0, m6)
                add(bnd, z, 0, ("z", q2, True), 1)
                add(bnd, t, 0, ("u", q2, True), 0)
        else:
            add(("w0", q2, fac, False), o, 1, ("w", q2, fac, 0), 0)
            for j in range(A):
                cur = ("w", q2, fac, j)
                nj = (j + 1) % A
                d = sched[j]
                if d == 0:
                    add(cur, z, 0, ("w", q2, fac, nj), 0)
                    add(cur, z, 1, ("w", q2, fac, nj), 0)
                elif d == 1:
                    add(cur, z, 1, ("w", q2, fac, nj), -1)
                else:
                    add(cur, z, 1, ("wl", q2, fac, j, d - 1), -1)
                    for c in range(d - 1, 0, -1):
                        dst = (("w", q2, fac, nj) if c == 1
                               else ("wl", q2, fac, j, c - 1))
                        add(("wl", q2, fac, j, c), None, 1, dst, -1)
            bnd = ("w", q2, fac, 0)
            add(bnd, z, 0, ("z", q2, False), 1)
            add(bnd, t, 0, ("u", q2, False), 0)

    finals = set()
    for q2 in subject.states:
        for last in (False, True):
            zq = ("z", q2, last)
            uq = ("u", q2, last)
            if not any(g[0] == q2 and g[2] == last for g in gadgets):
                continue
            add(zq, z, 1, zq, 1)
            add(zq, t, 1, uq, 0)
            add(uq, z, 1, uq, -1)
            if last:
                finals.add(uq)
            else:
                add(uq, z, 0, ("v", q2, 1), 1)

    alphabet = set(subject.alphabet) | {z, o, t}
    m = CounterMachine(1, states, alphabet, init, finals, trans,
                       real_time=(max_chain == 0), acceptance="final_zero",
                       lambda_chain_bound=max_chain)
    return m


# -- the near-end length-violation language -------------------------------

def mu_five_oracle(w, sigma, markers=DEFAULT_MARKERS):
    """Definitional test for the auxiliary block language: a leading 0, then
    blocks a 1 0^{P_i} 2 0^{Q_i} with P_i >= 1, at least two blocks, and the
    second-to-last block violating the discipline: P != Q there, or the last
    P is not six times it."""
    z, o, t = markers
    if not w or w[0] != z:
        return False
    i, n = 1, len(w)
    ps, qs = [], []
    while i < n:
        a = w[i]
        if a not in sigma:
            return False
        i += 1
        if i == n or w[i] != o:
            return False
        i += 1
        p = 0
        while i < n and w[i] == z:
            p += 1
            i += 1
        if p == 0 or i == n or w[i] != t:
            return False
        i += 1
        q = 0
        while i < n and w[i] == z:
            q += 1
            i += 1
        ps.append(p)
        qs.append(q)
    if len(ps) < 2:
        return False
    return ps[-2] != qs[-2] or ps[-1] != 6 * ps[-2]


def mu_five_shape_dfa(sigma, markers=DEFAULT_MARKERS):
    """Prefix-shape DFA of 0 (a 1 0+ 2 0*)* for pruning."""
    z, o, t = markers
    alphabet = set(sigma) | set(markers)
    # m0: expect the leading zero; mA: block boundary / trailing zeros;
    # m1: after the letter; m2: inside the P-run (>=1 seen); m3: after two
    trans = {}
    for ch in alphabet:
        trans[("m0", ch)] = "mA" if ch == z else "dead"
        trans[("mA", ch)] = "m1" if ch in sigma else "dead"
        trans[("m1", ch)] = "m2" if ch == o else "dead"
        trans[("m2", ch)] = "m3" if ch == z else "dead"
        trans[("m3", ch)] = ("m3" if ch == z else
                             "m4" if ch == t else "dead")
        trans[("m4", ch)] = ("m4" if ch == z else
                             "m1" if ch in sigma else "dead")
        trans[("dead", ch)] = "dead"
    return DFA({"m0", "mA", "m1", "m2", "m3", "m4", "dead"}, alphabet, "m0",
               {"m0", "mA", "m1", "m2", "m3", "m4"}, trans)


def mu_five_machine(sigma, markers=DEFAULT_MARKERS):
    """Real-time one-counter machine for the auxiliary block language.

    The machine guesses which block is second-to-last and which disjunct
    fails there, then verifies it with the counter: either Q differs from P
    (undershoot via skipped increments, or overshoot via extra decrements),
    or the last P differs from 6P (checked in groups of six zeros).
    """
    z, o, t = markers
    if set(markers) & set(sigma):
        raise ValueError("markers collide with the base alphabet")
    trans = []
    states = set()

    def add(src, letter, pat, dst, delta=0):
        states.add(src)
        states.add(dst)
        trans.append(Trans(src, letter, (pat,), dst, (delta,)))

    add("i", z, 0, "A", 0)
    for a in sorted(sigma):
        for branch in ("S1", "D1", "D2"):
            add("A", a, 0, branch, 0)
            add("SQ", a, 0, branch, 0)
    # skipped (not-yet-guessed) blocks: shape check only
    add("S1", o, 0, "SP0", 0)
    add("SP0", z, 0, "SP", 0)
    add("SP", z, 0, "SP", 0)
    add("SP", t, 0, "SQ", 0)
    add("SQ", z, 0, "SQ", 0)

    # disjunct one: P != Q at the second-to-last block
    add("D1", o, 0, "D1P", 0)
    #   Q < P: skip k >= 1 zeros of P, count the rest, drain Q exactly
    add("D1P", z, 0, "D1a_skip", 0)
    add("D1a_skip", z, 0, "D1a_skip", 0)
    add("D1a_skip", z, 0, "D1a_cnt", 1)
    add("D1a_cnt", z, 1, "D1a_cnt", 1)
    add("D1a_skip", t, 0, "LbA", 0)
    add("D1a_cnt", t, 1, "D1a_Q", 0)
    add("D1a_Q", z, 1, "D1a_Q", -1)
    #   Q > P: count all of P, drain it, then require at least one extra
    add("D1P", z, 0, "D1b_cnt", 1)
    add("D1b_cnt", z, 1, "D1b_cnt", 1)
    add("D1b_cnt", t, 1, "D1b_Q", 0)
    add("D1b_Q", z, 1, "D1b_Q", -1)
    add("D1b_Q", z, 0, "D1b_x", 0)
    add("D1b_x", z, 0, "D1b_x", 0)
    for a in sorted(sigma):
        add("D1a_Q", a, 0, "Lb1", 0)
        add("LbA", a, 0, "Lb1", 0)
        add("D1b_x", a, 0, "Lb1", 0)
    # the last block after disjunct one: shape only
    add("Lb1", o, 0, "LbP0", 0)
    add("LbP0", z, 0, "LbP", 0)
    add("LbP", z, 0, "LbP", 0)
    add("LbP", t, 0, "LbQ", 0)
    add("LbQ", z, 0, "LbQ", 0)

    # disjunct two: last P is not 6 times the second-to-last P
    add("D2", o, 0, "D2P", 0)
    #   last P > 6c: count c, consume 6 zeros per unit, then >= 1 extra
    add("D2P", z, 0, "D2c_cnt", 1)
    add("D2c_cnt", z, 1, "D2c_cnt", 1)
    add("D2c_cnt", t, 1, "D2c_Q", 0)
    add("D2c_Q", z, 1, "D2c_Q", 0)
    for a in sorted(sigma):
        add("D2c_Q", a, 1, "D2c_a", 0)
    add("D2c_a", o, 1, ("D2c_g", 0), 0)
    for g in range(1, 5):
        add(("D2c_g", g), z, 1, ("D2c_g", g + 1), 0)
    add(("D2c_g", 5), z, 1, ("D2c_g", 0), -1)
    add(("D2c_g", 0), z, 1, ("D2c_g", 1), 0)
    add(("D2c_g", 0), z, 0, "D2c_x", 0)
    add("D2c_x", z, 0, "D2c_x", 0)
    add("D2c_x", t, 0, "D2c_Q2", 0)
    add("D2c_Q2", z, 0, "D2c_Q2", 0)
    #   last P < 6c: skip k >= 1 units of c, then drain exactly with a
    #   remainder of at most five zeros
    add("D2P", z, 0, "D2d_skip", 0)
    add("D2d_skip", z, 0, "D2d_skip", 0)
    add("D2d_skip", z, 0, "D2d_cnt", 1)
    add("D2d_cnt", z, 1, "D2d_cnt", 1)
    add("D2d_skip", t, 0, "D2d_Q", 0)
    add("D2d_cnt", t, 1, "D2d_Q", 0)
    add("D2d_Q", z, 0, "D2d_Q", 0)
    add("D2d_Q", z, 1, "D2d_Q", 0)
    for a in sorted(sigma):
        add("D2d_Q", a, 0, "D2d_a", 0)
        add("D2d_Q", a, 1, "D2d_a", 0)
    add("D2d_a", o, 0, "D2d_fresh", 0)
    add("D2d_a", o, 1, "D2d_fresh", 0)
    add("D2d_fresh", z, 1, ("D2d_g", 1), 0)
    add("D2d_fresh", z, 0, ("D2d_r", 1), 0)
    for g in range(1, 5):
        add(("D2d_g", g), z, 1, ("D2d_g", g + 1), 0)
    add(("D2d_g", 5), z, 1, "D2d_g0", -1)
    add("D2d_g0", z, 1, ("D2d_g", 1), 0)
    add("D2d_g0", z, 0, ("D2d_r", 1), 0)
    add("D2d_g0", t, 0, "D2d_Q2", 0)
    for rr in range(1, 5):
        add(("D2d_r", rr), z, 0, ("D2d_r", rr + 1), 0)
    for rr in range(1, 6):
        add(("D2d_r", rr), t, 0, "D2d_Q2", 0)
    add("D2d_Q2", z, 0, "D2d_Q2", 0)

    finals = {"LbQ", "D2c_Q2", "D2d_Q2"}
    alphabet = set(sigma) | set(markers)
    return CounterMachine(1, states, alphabet, "i", finals, trans,
                          real_time=True, acceptance="final_zero",
                          lambda_chain_bound=0)


# -- geometric-coding witnesses (forward and backward) --------------------

def _accepting_run(m, w):
    """A list of transitions forming an accepting run of m on w, or None."""
    n = len(w)
    seen = set()

    def dfs(pos, q, cs, acc):
        if pos == n:
            return list(acc) if q in m.finals and not any(cs) else None
        key = (pos, q, cs)
        if key in seen:
            return None
        seen.add(key)
        for t in m.letter_transitions(q, w[pos]):
            if any((cs[i] == 0) != (t.pattern[i] == 0) for i in range(m.k)):
                continue
            acc.append(t)
            res = dfs(pos + 1, t.dst,
                      tuple(cs[i] + t.delta[i] for i in range(m.k)), acc)
            if res is not None:
                return res
            acc.pop()
        return None

    return dfs(0, m.initial, (0,) * m.k, [])


def claim2_forward(subject, factors, p, markers=DEFAULT_MARKERS):
    """Cut the geometric coding of the concatenated factors into run-coding
    witnesses, one per factor.

    Each factor must be accepted by the subject.  Raises FeasibilityError
    (naming the offending global letter index) when a run block outgrows its
    geometric budget; enlarging p.l always fixes that.
    """
    _check_subject(subject)
    if not factors:
        return []
    wits = []
    t_global = 0
    for factor in factors:
        if not factor:
            raise ValueError("factors must be nonempty")
        run = _accepting_run(subject, factor)
        if run is None:
            raise WitnessError("subject rejects factor %r" % factor)
        letters, vs, ws, zs, us, states, deltas = [], [], [], [], [], [], []
        states.append(subject.initial)
        v = 1
        for tt in run:
            budget = p.N * 6 ** (p.l + t_global)
            num, den = _factor(tt.delta)
            wlen = v * num // den
            if wlen > budget:
                raise FeasibilityError(t_global, wlen, budget)
            zlen = budget - wlen
            letters.append(tt.letter)
            vs.append(v)
            ws.append(wlen)
            zs.append(zlen)
            us.append(zlen)
            states.append(tt.dst)
            deltas.append(tt.delta)
            v = wlen
            t_global += 1
        wits.append(ScriptLWitness(tuple(letters), tuple(vs), tuple(ws),
                                   tuple(zs), tuple(us), tuple(states),
                                   tuple(deltas)))
    return wits


def claim2_backward(subject, wits, p, markers=DEFAULT_MARKERS):
    """Validate witnesses and reassemble the coded word they tile.

    Returns the list of subject words, one per witness.  Raises
    WitnessError when any
    witness is inconsistent or the tiling does not reproduce the coding
    (short of its final zero, which would start the next factor).
    """
    _check_subject(subject)
    z = markers[0]
    letters = []
    t_global = 0
    for wi, wit in enumerate(wits):
        bad = validate_witness(subject, wit)
        if bad:
            raise WitnessError("witness %d: %s" % (wi, "; ".join(bad)))
        for i in range(wit.n):
            budget = p.N * 6 ** (p.l + t_global)
            if wit.w_lens[i] + wit.z_lens[i] != budget:
                raise WitnessError(
                    "witness %d block %d: w+z = %d does not fill the "
                    "budget %d" % (wi, i, wit.w_lens[i] + wit.z_lens[i],
                                   budget))
            t_global += 1
        letters.append("".join(wit.letters))
    tiled = "".join(wit.to_word(markers) for wit in wits)
    coded = encode_g(p, "".join(letters), markers)
    if tiled + z != coded:
        raise WitnessError("witness words do not tile the coding")
    return letters


# -- the build pipeline ---------------------------------------------------

_LETTER_POOL = "0123456789abcdefghijklmnopqrstuvwxyz"


def fresh_letters(used, count):
    out = []
    for ch in _LETTER_POOL:
        if ch not in used:
            out.append(ch)
            if len(out) == count:
                return tuple(out)
    raise ValueError("letter pool exhausted")


def codes_morphism(alphabet, pad_letter=None):
    """Prefix-free binary block codes 0^j 1, longest code for the pad."""
    letters = sorted(a for a in alphabet if a != pad_letter)
    images = {}
    for j, a in enumerate(letters, start=1):
        images[a] = "0" * j + "1"
    if pad_letter is not None:
        images[pad_letter] = "0" * (len(letters) + 1) + "1"
    return LetterMorphism(images)


def decode_codes(w, morphism):
    """Greedy inverse of a 0^j 1 block code; None when w is not in its image."""
    rev = {img: a for a, img in morphism.images.items()}
    out = []
    i, n = 0, len(w)
    while i < n:
        j = i
        while j < n and w[j] == "0":
            j += 1
        if j == n or w[j] != "1":
            return None
        code = w[i:j + 1]
        if code not in rev:
            return None
        out.append(rev[code])
        i = j + 1
    return "".join(out)


def strip_padding(w, pad_letter, pad_count):
    """Inverse of a 'pad_count pads after every letter' morphism, or None."""
    out = []
    i, n = 0, len(w)
    pad = pad_letter * pad_count
    while i < n:
        if w[i] == pad_letter:
            return None
        out.append(w[i])
        if w[i + 1:i + 1 + pad_count] != pad:
            return None
        i += 1 + pad_count
    return "".join(out)


@dataclass
class PipelineArtifact:
    machine: CounterMachine
    label: str
    stages: list
    meta: dict


def _log(stages, name, m):
    stages.append({"stage": name, "states": len(m.states),
                   "transitions": len(m.transitions)})


def p_base_machine(n):
    if n == 1:
        trans = [Trans("i", "0", (), "f", ())]
        return CounterMachine(0, {"i", "f"}, {"0", "1"}, "i", {"f"}, trans,
                              real_time=True, acceptance="final_zero",
                              lambda_chain_bound=0)
    if n == 2:
        trans = [Trans("i", "0", (), "i", ()),
                 Trans("i", "1", (), "f", ())]
        return CounterMachine(0, {"i", "f"}, {"0", "1"}, "i", {"f"}, trans,
                              real_time=True, acceptance="final_zero",
                              lambda_chain_bound=0)
    raise ValueError("base machines exist for levels 1 and 2 only")


def build_pn(n, reduce_stages=True):
    """Machine whose omega-power sits at level n of the Pi hierarchy.

    Levels 1 and 2 are hand-built; level 3 is the backspace substitution of
    level 2 recoded to binary; higher levels alternate the substitution, the
    run coding of the resulting two-counter machine (joined with the
    length-violation catcher), a real-time padding, and the binary recoding.
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    stages = []
    if n <= 2:
        m = p_base_machine(n)
        _log(stages, "base", m)
        return PipelineArtifact(m, "P%d" % n, stages, {})
    if n == 3:
        sub = exp_substitute(p_base_machine(2))
        _log(stages, "substitute", sub)
        codes = codes_morphism(sub.alphabet)
        m = apply_letter_morphism(sub, codes)
        _log(stages, "recode", m)
        if reduce_stages:
            m = reduce_machine(m)
            _log(stages, "reduce", m)
        return PipelineArtifact(m, "P3", stages,
                                {"codes": codes, "inner": sub})
    prev = build_pn(n - 1, reduce_stages=reduce_stages)
    subject = exp_substitute(prev.machine)
    _log(stages, "substitute", subject)
    markers = fresh_letters(subject.alphabet, 3)
    lm = script_l_machine(subject, markers)
    _log(stages, "run-coding", lm)
    mm = mu_five_machine(subject.alphabet, markers)
    _log(stages, "violation", mm)
    if reduce_stages:
        lm = reduce_machine(lm)
        _log(stages, "reduce run-coding", lm)
    b = union_machines(lm, mm)
    _log(stages, "union", b)
    pad_letter = fresh_letters(set(b.alphabet), 1)[0]
    padded = realtime_pad(b, pad_letter, 6)
    _log(stages, "pad", padded)
    if reduce_stages:
        padded = reduce_machine(padded)
        _log(stages, "reduce padded", padded)
    padded = compact(padded)
    codes = codes_morphism(padded.alphabet, pad_letter=pad_letter)
    # the recoding preserves trimness, so no reduction pass afterwards: the
    # quotient finds nothing on shared-suffix code chains and trim would just
    # rebuild multi-million-entry adjacency maps
    m = apply_letter_morphism(padded, codes)
    _log(stages, "recode", m)
    meta = {"codes": codes, "pad_letter": pad_letter, "pad_count": 6,
            "markers": markers, "subject": subject, "prev": prev}
    return PipelineArtifact(m, "P%d" % n, stages, meta)


def pn_oracle(art):
    """Definitional membership oracle matching a build_pn artifact.

    Decodes the binary block codes, strips the padding, and applies the
    stage-defining language conditions, with the previous level's machine as
    the subject.  Independent of the run-coding and padding machinery under
    test.
    """
    label = art.label
    if label == "P1":
        return lambda w: w == "0"
    if label == "P2":
        return lambda w: len(w) >= 1 and w[-1] == "1" and set(w[:-1]) <= {"0"}
    if label == "P3":
        base = pn_oracle(PipelineArtifact(None, "P2", [], {}))
        inner = h_factor_oracle(base, {"0", "1"})
        codes = art.meta["codes"]

        def member3(w):
            dec = decode_codes(w, codes)
            return dec is not None and inner(dec)
        return member3
    codes = art.meta["codes"]
    pad_letter = art.meta["pad_letter"]
    pad_count = art.meta["pad_count"]
    markers = art.meta["markers"]
    subject = art.meta["subject"]
    sigma = subject.alphabet

    def member(w):
        dec = decode_codes(w, codes)
        if dec is None:
            return False
        inner = strip_padding(dec, pad_letter, pad_count)
        if inner is None:
            return False
        return (script_l_oracle(subject, inner, markers)
                or mu_five_oracle(inner, sigma, markers))
    return member
