"""k-counter automata and the closure operations the pipelines need.

A machine is a finite-state control with k nonnegative counters.  Every
transition carries a zero-pattern (which counters must be zero / nonzero for
the transition to fire) and a delta vector in {-1,0,+1}^k.  A counter that is
tested zero can never be decremented on the same step.  Words are plain Python
strings, one character per letter; the eraser letter is the single character
ERASER (written ``BS`` in the textual format and on the command line).
"""

from bisect import bisect_left, bisect_right
from collections import deque
from typing import NamedTuple, Optional

ERASER = "↞"  # backspace letter


class Trans(NamedTuple):
    src: object
    letter: Optional[str]  # None means a lambda-transition
    pattern: tuple         # zero-pattern, 0 = counter must be 0, 1 = must be > 0
    dst: object
    delta: tuple           # in {-1,0,1}^k

    def sort_key(self):
        return (repr(self.src), self.letter or "", self.pattern,
                repr(self.dst), self.delta)


class CounterMachine:
    """Immutable-by-convention k-counter automaton.

    acceptance is "final" (final state) or "final_zero" (final state and all
    counters zero).  lambda_chain_bound limits consecutive lambda-steps during
    any simulation; 8 is a loose default, the constructions here need <= 5.
    """

    def __init__(self, k, states, alphabet, initial, finals, transitions,
                 real_time=True, acceptance="final_zero", lambda_chain_bound=8):
        self.k = k
        self.states = frozenset(states)
        self.alphabet = frozenset(alphabet)
        self.initial = initial
        self.finals = frozenset(finals)
        trans_list = [t if isinstance(t, Trans) else Trans(*t)
                      for t in transitions]
        # plain tuple sort when states/letters are comparable (cheap, no key
        # objects: the multi-million-state pipeline stages depend on this),
        # falling back to repr-keyed sort for structured state names
        try:
            trans_list.sort()
        except TypeError:
            trans_list.sort(key=Trans.sort_key)
            self._direct_sorted = False
        else:
            self._direct_sorted = True
        deduped = []
        prev = None
        for t in trans_list:
            if t != prev:
                deduped.append(t)
                prev = t
        self.transitions = tuple(deduped)
        self.real_time = real_time
        self.acceptance = acceptance
        self.lambda_chain_bound = lambda_chain_bound
        self._index = None
        self._lambda_index = None

    # -- indexing ---------------------------------------------------------

    _BISECT_THRESHOLD = 500_000

    def _build_index(self):
        if (self._direct_sorted
                and len(self.transitions) > self._BISECT_THRESHOLD
                and not self.has_lambda()):
            # huge machine: look transitions up by binary search on the
            # sorted tuple instead of materialising a dict over all of them
            self._index = "bisect"
            self._lambda_index = {}
            return
        by_letter = {}
        lam = {}
        for t in self.transitions:
            if t.letter is None:
                lam.setdefault(t.src, []).append(t)
            else:
                by_letter.setdefault((t.src, t.letter), []).append(t)
        self._index = by_letter
        self._lambda_index = lam

    def letter_transitions(self, state, letter):
        if self._index is None:
            self._build_index()
        if self._index == "bisect":
            key = lambda t: (t.src, t.letter)
            lo = bisect_left(self.transitions, (state, letter), key=key)
            hi = bisect_right(self.transitions, (state, letter), key=key)
            return self.transitions[lo:hi]
        return self._index.get((state, letter), ())

    def lambda_transitions(self, state):
        if self._index is None:
            self._build_index()
        return self._lambda_index.get(state, ())

    def has_lambda(self):
        return any(t.letter is None for t in self.transitions)

    def __repr__(self):
        return ("CounterMachine(k=%d, |Q|=%d, |T|=%d, alphabet=%s)"
                % (self.k, len(self.states), len(self.transitions),
                   "".join(sorted(self.alphabet))))


class DFA:
    """Plain complete DFA used for regular intersections and shape pruning."""

    def __init__(self, states, alphabet, initial, finals, trans):
        self.states = frozenset(states)
        self.alphabet = frozenset(alphabet)
        self.initial = initial
        self.finals = frozenset(finals)
        self.trans = dict(trans)
        for s in self.states:
            for a in self.alphabet:
                if (s, a) not in self.trans:
                    raise ValueError("DFA transition function not total at %r,%r"
                                     % (s, a))

    def accept(self, w):
        s = self.initial
        for ch in w:
            s = self.trans[(s, ch)]
        return s in self.finals

    def live_states(self):
        """States from which some final state is reachable."""
        rev = {}
        for (s, a), d in self.trans.items():
            rev.setdefault(d, set()).add(s)
        live = set(self.finals)
        work = list(live)
        while work:
            s = work.pop()
            for p in rev.get(s, ()):
                if p not in live:
                    live.add(p)
                    work.append(p)
        return live


class LetterMorphism:
    """Letter-to-word map; every image must be nonempty."""

    def __init__(self, images):
        self.images = dict(images)
        for a, w in self.images.items():
            if not w:
                raise ValueError("empty image for letter %r" % a)

    @property
    def source(self):
        return frozenset(self.images)

    def apply(self, w):
        return "".join(self.images[ch] for ch in w)


class LanguageOracle:
    """A decidable membership predicate over a declared alphabet."""

    def __init__(self, alphabet, predicate, tag=""):
        self.alphabet = frozenset(alphabet)
        self.predicate = predicate
        self.tag = tag

    def __call__(self, w):
        return self.predicate(w)


# -- validation -----------------------------------------------------------

def validate_machine(m):
    """Return a list of violation messages; empty list means the machine is ok."""
    bad = []
    if m.k < 0:
        bad.append("counter count negative")
    if m.initial not in m.states:
        bad.append("initial state unknown")
    if not m.finals <= m.states:
        bad.append("final states unknown: %r" % sorted(map(repr, m.finals - m.states)))
    if m.acceptance not in ("final", "final_zero"):
        bad.append("unknown acceptance mode %r" % (m.acceptance,))
    for t in m.transitions:
        if t.src not in m.states or t.dst not in m.states:
            bad.append("transition references unknown state: %r" % (t,))
            continue
        if t.letter is not None and t.letter not in m.alphabet:
            bad.append("transition letter outside alphabet: %r" % (t,))
        if len(t.pattern) != m.k or len(t.delta) != m.k:
            bad.append("pattern/delta arity mismatch: %r" % (t,))
            continue
        for i in range(m.k):
            if t.pattern[i] not in (0, 1) or t.delta[i] not in (-1, 0, 1):
                bad.append("pattern/delta out of range: %r" % (t,))
                break
            if t.pattern[i] == 0 and t.delta[i] == -1:
                bad.append("zero-test violated (decrement on zero-tested counter): %r"
                           % (t,))
                break
        if m.real_time and t.letter is None:
            bad.append("real-time machine has a lambda-transition: %r" % (t,))
    return bad


# -- simulation -----------------------------------------------------------

def _lambda_closure(m, configs, bound):
    """All configs reachable by at most lambda_chain_bound lambda-steps.

    configs is a set of (state, counters); counters capped at `bound`.
    """
    if m._index is None:
        m._build_index()
    lam = m._lambda_index
    if not lam:
        return configs
    out = set(configs)
    depth = m.lambda_chain_bound
    frontier = configs
    for _ in range(depth):
        nxt = set()
        for (q, cs) in frontier:
            for t in lam.get(q, ()):
                ok = True
                for i in range(m.k):
                    c = cs[i]
                    if (c == 0) != (t.pattern[i] == 0):
                        ok = False
                        break
                    if c + t.delta[i] > bound:
                        ok = False
                        break
                if not ok:
                    continue
                nc = tuple(cs[i] + t.delta[i] for i in range(m.k))
                cfg = (t.dst, nc)
                if cfg not in out:
                    out.add(cfg)
                    nxt.add(cfg)
        if not nxt:
            break
        frontier = nxt
    return out


def initial_configs(m, bound):
    zero = (0,) * m.k
    return _lambda_closure(m, {(m.initial, zero)}, bound)


def step_configs(m, configs, letter, bound):
    """One input letter: letter-transitions then a lambda closure."""
    if m._index is None:
        m._build_index()
    k = m.k
    nxt = set()
    for (q, cs) in configs:
        for t in m.letter_transitions(q, letter):
            ok = True
            for i in range(k):
                c = cs[i]
                if (c == 0) != (t.pattern[i] == 0):
                    ok = False
                    break
                if c + t.delta[i] > bound:
                    ok = False
                    break
            if not ok:
                continue
            nxt.add((t.dst, tuple(cs[i] + t.delta[i] for i in range(k))))
    if not nxt:
        return nxt
    return _lambda_closure(m, nxt, bound)


def configs_accept(m, configs):
    if m.acceptance == "final":
        return any(q in m.finals for (q, _) in configs)
    return any(q in m.finals and not any(cs) for (q, cs) in configs)


def counter_bound(m, word_len):
    return (word_len + 1) * (m.lambda_chain_bound + 1)


def accepts(m, w):
    """Breadth-first configuration search; order-independent verdict."""
    for ch in w:
        if ch not in m.alphabet:
            raise ValueError("letter %r outside machine alphabet" % ch)
    bound = counter_bound(m, len(w))
    configs = initial_configs(m, bound)
    for ch in w:
        configs = step_configs(m, configs, ch, bound)
        if not configs:
            return False
    return configs_accept(m, configs)


def enumerate_accepted(m, max_len):
    """All accepted words of length <= max_len, shortest first then lexicographic."""
    letters = sorted(m.alphabet)
    bound = counter_bound(m, max_len)
    found = []
    init = initial_configs(m, bound)

    def walk(word, configs):
        if configs_accept(m, configs):
            found.append(word)
        if len(word) >= max_len:
            return
        for ch in letters:
            nxt = step_configs(m, configs, ch, bound)
            if nxt:
                walk(word + ch, nxt)

    walk("", init)
    found.sort(key=lambda w: (len(w), w))
    return found


# -- closure operations ---------------------------------------------------

def intersect_regular(m, d):
    """Product of a counter machine with a DFA; counters untouched."""
    if m.alphabet != d.alphabet:
        raise ValueError("alphabet mismatch between machine and DFA")
    states = set()
    transitions = []
    init = (m.initial, d.initial)
    work = deque([init])
    states.add(init)
    msucc = {}
    for t in m.transitions:
        msucc.setdefault(t.src, []).append(t)
    while work:
        (q, s) = work.popleft()
        for t in msucc.get(q, ()):
            s2 = s if t.letter is None else d.trans[(s, t.letter)]
            dst = (t.dst, s2)
            transitions.append(Trans((q, s), t.letter, t.pattern, dst, t.delta))
            if dst not in states:
                states.add(dst)
                work.append(dst)
    finals = {(q, s) for (q, s) in states if q in m.finals and s in d.finals}
    return CounterMachine(m.k, states, m.alphabet, init, finals, transitions,
                          real_time=m.real_time, acceptance=m.acceptance,
                          lambda_chain_bound=m.lambda_chain_bound)


def _pad_counters(m, k):
    """View m as a k-counter machine (k >= m.k) with inert extra counters."""
    if k == m.k:
        return m
    extra = k - m.k
    pat_pad = (0,) * extra
    delta_pad = (0,) * extra
    trans = [Trans(t.src, t.letter, t.pattern + pat_pad, t.dst, t.delta + delta_pad)
             for t in m.transitions]
    return CounterMachine(k, m.states, m.alphabet, m.initial, m.finals, trans,
                          real_time=m.real_time, acceptance=m.acceptance,
                          lambda_chain_bound=m.lambda_chain_bound)


def union_machines(m1, m2):
    """Nondeterministic union via a fresh initial state.

    Both machines start with all counters zero, so branching duplicates the
    initial out-transitions; no lambda-step is needed and real_time survives
    whenever both inputs are real-time.
    """
    if m1.alphabet != m2.alphabet:
        raise ValueError("alphabet mismatch")
    if m1.acceptance != m2.acceptance:
        raise ValueError("acceptance-mode mismatch")
    k = max(m1.k, m2.k)
    m1 = _pad_counters(m1, k)
    m2 = _pad_counters(m2, k)
    init = ("u",)
    states = {init}
    transitions = []
    finals = set()
    zero_pat = (0,) * k
    for tag, m in (("l", m1), ("r", m2)):
        for s in m.states:
            states.add((tag, s))
        for f in m.finals:
            finals.add((tag, f))
        for t in m.transitions:
            transitions.append(Trans((tag, t.src), t.letter, t.pattern,
                                     (tag, t.dst), t.delta))
            if t.src == m.initial and t.pattern == zero_pat:
                transitions.append(Trans(init, t.letter, t.pattern,
                                         (tag, t.dst), t.delta))
        if m.initial in m.finals:
            finals.add(init)
    return CounterMachine(k, states, m1.alphabet, init, finals, transitions,
                          real_time=m1.real_time and m2.real_time,
                          acceptance=m1.acceptance,
                          lambda_chain_bound=max(m1.lambda_chain_bound,
                                                 m2.lambda_chain_bound))


def apply_letter_morphism(m, f):
    """Image machine for {f(w) : w in L(m)}.

    Each transition on letter a is rerouted through a chain spelling f(a); the
    counter effect happens on the first chain step, the remaining steps are
    counter-neutral and keyed by (target, remaining suffix) so common suffixes
    (e.g. the 0^j 1 block codes) share states.
    """
    if m.alphabet != f.source:
        raise ValueError("morphism source does not match machine alphabet")
    target_alphabet = set()
    for w in f.images.values():
        target_alphabet.update(w)
    states = set(m.states)
    transitions = []
    all_patterns = _all_patterns(m.k)
    zero_delta = (0,) * m.k
    chain_states = set()
    for t in m.transitions:
        if t.letter is None:
            transitions.append(t)
            continue
        img = f.images[t.letter]
        if len(img) == 1:
            transitions.append(Trans(t.src, img, t.pattern, t.dst, t.delta))
            continue
        # chain states spelling the code suffix; string-named when the host
        # state is a string so the result stays cheaply sortable
        def chain(dst, suffix):
            if isinstance(dst, str):
                return dst + ":" + suffix
            return (dst, suffix)
        first_dst = chain(t.dst, img[1:])
        transitions.append(Trans(t.src, img[0], t.pattern, first_dst, t.delta))
        suffix = img[1:]
        while suffix:
            cur = chain(t.dst, suffix)
            if cur in chain_states:
                break
            chain_states.add(cur)
            nxt = chain(t.dst, suffix[1:]) if len(suffix) > 1 else t.dst
            for pat in all_patterns:
                transitions.append(Trans(cur, suffix[0], pat, nxt, zero_delta))
            suffix = suffix[1:]
    states.update(chain_states)
    return CounterMachine(m.k, states, target_alphabet, m.initial, m.finals,
                          transitions, real_time=m.real_time,
                          acceptance=m.acceptance,
                          lambda_chain_bound=m.lambda_chain_bound)


def _all_patterns(k):
    pats = [()]
    for _ in range(k):
        pats = [p + (b,) for p in pats for b in (0, 1)]
    return pats


def realtime_pad(m, pad_letter, pad_count):
    """Real-time machine for h(L(m)) with h(a) = a pad^pad_count.

    The lambda-steps of m are rescheduled onto the pad letters following the
    input letter they used to follow; this needs every maximal lambda-chain to
    fit into pad_count - 1 steps and no lambda-transition enabled before the
    first letter.
    """
    if pad_letter in m.alphabet:
        raise ValueError("pad letter already in alphabet")
    if m.lambda_chain_bound > pad_count - 1 and m.has_lambda():
        raise ValueError("lambda-chain bound %d exceeds pad_count-1 = %d"
                         % (m.lambda_chain_bound, pad_count - 1))
    zero_pat = (0,) * m.k
    for t in m.transitions:
        if t.letter is None and t.src == m.initial and t.pattern == zero_pat:
            raise ValueError("lambda-transition enabled from the initial "
                             "configuration cannot be padded")
    alphabet = set(m.alphabet) | {pad_letter}
    states = set()
    transitions = []
    all_patterns = _all_patterns(m.k)
    zero_delta = (0,) * m.k
    for q in m.states:
        for j in range(pad_count + 1):
            states.add((q, j))
    lam = {}
    for t in m.transitions:
        if t.letter is None:
            lam.setdefault(t.src, []).append(t)
    for t in m.transitions:
        if t.letter is not None:
            transitions.append(Trans((t.src, 0), t.letter, t.pattern,
                                     (t.dst, pad_count), t.delta))
    for q in m.states:
        for j in range(1, pad_count + 1):
            # idle pad step
            for pat in all_patterns:
                transitions.append(Trans((q, j), pad_letter, pat, (q, j - 1),
                                         zero_delta))
            # host one lambda-step of m on this pad letter
            for t in lam.get(q, ()):
                transitions.append(Trans((q, j), pad_letter, t.pattern,
                                         (t.dst, j - 1), t.delta))
    finals = {(q, 0) for q in m.finals}
    return CounterMachine(m.k, states, alphabet, (m.initial, 0), finals,
                          transitions, real_time=True, acceptance=m.acceptance,
                          lambda_chain_bound=0)
