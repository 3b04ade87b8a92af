"""Separator-block languages and the Sigma-side build pipeline.

Over the four-letter alphabet 0,1,2,3 (0/1 binary payload, 2/3 separators):

* mu0, mu1, mu2 catch prefix-level violations of the separator discipline
  (a "23" occurring past the start; a block whose length does not exceed the
  previous one's by exactly one, anchored at 3...2...3 or 2...3...2);
* pi0 is the regular set of well-started prefixes (empty first block, one
  payload letter after the final separator);
* pi1 = f(L) substitutes every letter a of a base language L by words
  a t 3 u v 2 w with |t| = |u| even and |v| = |w| >= 3 odd, so an
  extra counter can check the length equalities online.

Their union A, the level pipeline build_sn on top of it, the witness layer
tying block tilings to the diagonal coding (forward/backward of the
vertical-position identity), and the case classifier for finite A-tilings.
"""

from dataclasses import dataclass

from .codings import k_prefix_check, pair
from .machines import (CounterMachine, DFA, Trans, apply_letter_morphism,
                       realtime_pad, union_machines)
from .pi_pipeline import (PipelineArtifact, UnsupportedLevel, _log, build_pn,
                          codes_morphism, compact, decode_codes, fresh_letters,
                          mu_five_machine, mu_five_oracle, reduce_machine,
                          script_l_machine, script_l_oracle, strip_padding)

ALPH4 = ("0", "1", "2", "3")
_BIN = {"0", "1"}


# -- definitional oracles -------------------------------------------------

def mu0_oracle(w):
    """Some nonempty prefix is followed by the two separators 2 3."""
    return "23" in w[1:]


def _mu_neq_oracle(w, first, second):
    # a prefix v FIRST v' SECOND v'' FIRST with binary v', v'' and
    # |v''| != |v'| + 1
    n = len(w)
    for i in range(n):
        if w[i] != first:
            continue
        for j in range(i + 1, n):
            if w[j] == second:
                if not all(c in _BIN for c in w[i + 1:j]):
                    break
                for k in range(j + 1, n):
                    if w[k] == first:
                        if (all(c in _BIN for c in w[j + 1:k])
                                and k - j - 1 != j - i):
                            return True
                        break
                    if w[k] not in _BIN:
                        break
    return False


def mu1_oracle(w):
    return _mu_neq_oracle(w, "3", "2")


def mu2_oracle(w):
    return _mu_neq_oracle(w, "2", "3")


def pi0_oracle(w):
    """2 3 b* (2 b* 3 b*)* 2 b : empty first block, one letter after the
    final separator."""
    if len(w) < 4 or w[0] != "2" or w[1] != "3" or w[-1] not in _BIN:
        return False
    body = w[2:-2]
    if w[-2] != "2":
        return False
    expect = "2"  # separators alternate, next full one must be 2
    for ch in body:
        if ch in _BIN:
            continue
        if ch != expect:
            return False
        expect = "3" if expect == "2" else "2"
    return expect == "2"  # an even number of full separators in the body


def parse_pi1_units(w):
    """Deterministic cut of w into (at, u, v, wpart) unit tuples, or None.

    at is the leading payload run up to the first 3 (its first letter is the
    substituted base letter); u takes |at| - 1 following payload letters; v
    runs to the next 2; wpart takes |v| letters.
    """
    units = []
    i, n = 0, len(w)
    while i < n:
        j = i
        while j < n and w[j] in _BIN:
            j += 1
        if j == n or w[j] != "3" or j == i or (j - i) % 2 == 0:
            return None
        at = w[i:j]
        ulen = len(at) - 1
        u = w[j + 1:j + 1 + ulen]
        if len(u) < ulen or not set(u) <= _BIN:
            return None
        i = j + 1 + ulen
        j = i
        while j < n and w[j] in _BIN:
            j += 1
        if j == n or w[j] != "2":
            return None
        v = w[i:j]
        if len(v) < 3 or len(v) % 2 == 0:
            return None
        wpart = w[j + 1:j + 1 + len(v)]
        if len(wpart) < len(v) or not set(wpart) <= _BIN:
            return None
        units.append((at, u, v, wpart))
        i = j + 1 + len(v)
    return units if units else None


def f_shape_oracle(w):
    """w is a single substitution unit for its first letter."""
    units = parse_pi1_units(w)
    return units is not None and len(units) == 1


def pi1_oracle(w, l_predicate):
    units = parse_pi1_units(w)
    if units is None:
        return False
    return bool(l_predicate("".join(unit[0][0] for unit in units)))


def defn_oracle(which, w):
    table = {"mu0": mu0_oracle, "mu1": mu1_oracle, "mu2": mu2_oracle,
             "pi0": pi0_oracle, "f_shape": f_shape_oracle}
    if which not in table:
        raise ValueError("unknown definitional oracle %r" % which)
    return table[which](w)


def exists_one_oracle(w):
    """The canonical regular base language: some position holds a 1."""
    return "1" in w


def a_oracle(w, l_predicate=exists_one_oracle):
    return (mu0_oracle(w) or mu1_oracle(w) or mu2_oracle(w)
            or pi0_oracle(w) or pi1_oracle(w, l_predicate))


# -- component machines ---------------------------------------------------

def s1_machine():
    """Words starting with 0, or with 1 0^k 1."""
    trans = []
    for b in ("0", "1"):
        trans.append(Trans("z", b, (), "z", ()))
        trans.append(Trans("acc", b, (), "acc", ()))
    trans.append(Trans("i", "0", (), "z", ()))
    trans.append(Trans("i", "1", (), "o", ()))
    trans.append(Trans("o", "0", (), "o", ()))
    trans.append(Trans("o", "1", (), "acc", ()))
    return CounterMachine(0, {"i", "z", "o", "acc"}, {"0", "1"}, "i",
                          {"z", "acc"}, trans, real_time=True,
                          acceptance="final_zero", lambda_chain_bound=0)


def exists_one_machine():
    trans = [Trans("e0", "0", (), "e0", ()),
             Trans("e0", "1", (), "e1", ()),
             Trans("e1", "0", (), "e1", ()),
             Trans("e1", "1", (), "e1", ())]
    return CounterMachine(0, {"e0", "e1"}, {"0", "1"}, "e0", {"e1"}, trans,
                          real_time=True, acceptance="final_zero",
                          lambda_chain_bound=0)


def mu0_machine():
    trans = []
    for ch in ALPH4:
        trans.append(Trans("g0", ch, (), "g1", ()))
        trans.append(Trans("acc", ch, (), "acc", ()))
        if ch == "2":
            trans.append(Trans("g1", ch, (), "g2", ()))
            trans.append(Trans("g2", ch, (), "g2", ()))
        else:
            trans.append(Trans("g1", ch, (), "g1", ()))
            if ch == "3":
                trans.append(Trans("g2", ch, (), "acc", ()))
            else:
                trans.append(Trans("g2", ch, (), "g1", ()))
    return CounterMachine(0, {"g0", "g1", "g2", "acc"}, set(ALPH4), "g0",
                          {"acc"}, trans, real_time=True,
                          acceptance="final_zero", lambda_chain_bound=0)


def _mu_neq_machine(first, second, tag):
    """One-counter machine for the anchored length-mismatch language.

    Two guessed branches: the middle run is strictly longer than the closing
    run plus one (count it all, then require two extra letters after the
    counter drains), or at most equal (skip some of it, drain exactly).
    """
    trans = []
    states = set()

    def add(src, letter, pat, dst, delta=0):
        states.add(src)
        states.add(dst)
        trans.append(Trans(src, letter, (pat,), dst, (delta,)))

    for ch in ALPH4:
        add("p", ch, 0, "p", 0)
        add("acc", ch, 0, "acc", 0)
    add("p", first, 0, "c0", 0)
    for b in ("0", "1"):
        # count the whole middle run (no skips): serves both branches
        add("c0", b, 0, "cb", 1)
        add("cb", b, 1, "cb", 1)
        # skip at least one, then count the rest: short-side branch only
        add("c0", b, 0, "sk", 0)
        add("sk", b, 0, "sk", 0)
        add("sk", b, 0, "cs", 1)
        add("cs", b, 1, "cs", 1)
    # long side: closing run at least two longer than the counter
    add("c0", second, 0, "x0", 0)
    add("cb", second, 1, "dbig", 0)
    for b in ("0", "1"):
        add("dbig", b, 1, "dbig", -1)
        add("dbig", b, 0, "x1", 0)
        add("x0", b, 0, "x1", 0)
        add("x1", b, 0, "x2", 0)
        add("x2", b, 0, "x2", 0)
    add("x2", first, 0, "acc", 0)
    # short side: closing run drains the (partial) count exactly
    add("c0", second, 0, "ds", 0)
    add("sk", second, 0, "ds", 0)
    add("cb", second, 1, "ds", 0)
    add("cs", second, 1, "ds", 0)
    for b in ("0", "1"):
        add("ds", b, 1, "ds", -1)
    add("ds", first, 0, "acc", 0)
    m = CounterMachine(1, states, set(ALPH4), "p", {"acc"}, trans,
                       real_time=True, acceptance="final_zero",
                       lambda_chain_bound=0)
    m.tag = tag
    return m


def mu1_machine():
    return _mu_neq_machine("3", "2", "mu1")


def mu2_machine():
    return _mu_neq_machine("2", "3", "mu2")


def pi0_machine():
    trans = []
    trans.append(Trans("r0", "2", (), "r1", ()))
    trans.append(Trans("r1", "3", (), "rb", ()))
    for b in ("0", "1"):
        trans.append(Trans("rb", b, (), "rb", ()))
        trans.append(Trans("rc", b, (), "rc", ()))
        trans.append(Trans("rf", b, (), "racc", ()))
    trans.append(Trans("rb", "2", (), "rc", ()))
    trans.append(Trans("rb", "2", (), "rf", ()))
    trans.append(Trans("rc", "3", (), "rb", ()))
    return CounterMachine(0, {"r0", "r1", "rb", "rc", "rf", "racc"},
                          set(ALPH4), "r0", {"racc"}, trans, real_time=True,
                          acceptance="final_zero", lambda_chain_bound=0)


def pi1_machine(l_machine):
    """Substitution image f(L) with one extra counter on top of L's.

    The new counter measures |t| against |u| and |v| against |w|; it is back
    to zero exactly at unit boundaries, where the next base letter drives an
    L-transition.  Parity and the >= 3 floor live in the control state.
    """
    if not l_machine.real_time:
        raise ValueError("base machine must be real-time")
    if l_machine.alphabet != {"0", "1"}:
        raise ValueError("base machine must have the binary alphabet")
    if l_machine.k > 1:
        raise ValueError("base machine may have at most one counter")
    if l_machine.acceptance != "final_zero":
        raise ValueError("base machine must accept by final state + zero")
    kl = l_machine.k
    trans = []
    states = set()

    def lift(pat, extra_p, delta, extra_d):
        return (pat + (extra_p,), delta + (extra_d,))

    zero_p = (0,) * kl
    zero_d = (0,) * kl
    boundaries = {("b",): l_machine.initial}
    # letter transitions fire at unit boundaries (new counter zero)
    for t in l_machine.transitions:
        srcs = [("w", t.src)]
        if t.src == l_machine.initial:
            srcs.append(("b",))
        for src in srcs:
            p, d = lift(t.pattern, 0, t.delta, 0)
            states.add(src)
            states.add(("t", t.dst, 0))
            trans.append(Trans(src, t.letter, p, ("t", t.dst, 0), d))
    for q in l_machine.states:
        # t-run: count up, parity in the state, then 3 at even parity
        for par in (0, 1):
            for b in ("0", "1"):
                for np in (0, 1):
                    p, d = lift(zero_p, np, zero_d, 1)
                    trans.append(Trans(("t", q, par), b, p,
                                       ("t", q, 1 - par), d))
            states.add(("t", q, par))
        for np in (0, 1):
            p, d = lift(zero_p, np, zero_d, 0)
            trans.append(Trans(("t", q, 0), "3", p, ("u", q), d))
        # u-run drains the counter; its end is the zero test
        for b in ("0", "1"):
            p, d = lift(zero_p, 1, zero_d, -1)
            trans.append(Trans(("u", q), b, p, ("u", q), d))
            p, d = lift(zero_p, 0, zero_d, 1)
            trans.append(Trans(("u", q), b, p, ("v", q, 1, 1), d))
        states.add(("u", q))
        # v-run: count up again, track parity and the >= 3 floor
        for par in (0, 1):
            for c in (1, 2, 3):
                for b in ("0", "1"):
                    p, d = lift(zero_p, 1, zero_d, 1)
                    trans.append(Trans(("v", q, par, c), b, p,
                                       ("v", q, 1 - par, min(c + 1, 3)), d))
                states.add(("v", q, par, c))
        p, d = lift(zero_p, 1, zero_d, 0)
        trans.append(Trans(("v", q, 1, 3), "2", p, ("w", q), d))
        # w-run drains; at zero the next unit's base letter takes over
        for b in ("0", "1"):
            p, d = lift(zero_p, 1, zero_d, -1)
            trans.append(Trans(("w", q), b, p, ("w", q), d))
        states.add(("w", q))
    states.add(("b",))
    finals = {("w", q) for q in l_machine.finals}
    if l_machine.initial in l_machine.finals:
        finals.add(("b",))
    return CounterMachine(kl + 1, states, set(ALPH4), ("b",), finals, trans,
                          real_time=True, acceptance="final_zero",
                          lambda_chain_bound=0)


def assemble_A(l_machine):
    """Union of the five component machines over the four-letter alphabet."""
    parts = [mu0_machine(), mu1_machine(), mu2_machine(), pi0_machine(),
             pi1_machine(l_machine)]
    m = parts[0]
    for nxt in parts[1:]:
        m = union_machines(m, nxt)
    return m


def pi0_prefix_dfa():
    """Viability DFA: live states are exactly the prefixes of pi0 words.

    Tracks only the alternating separator discipline; every non-dead state
    can still be completed to a full pi0 word, so liveness is exactly
    prefix-viability."""
    states = {"r0", "r1", "rb", "rc", "dead"}
    trans = {}
    for s in states:
        for ch in ALPH4:
            trans[(s, ch)] = "dead"
    trans[("r0", "2")] = "r1"
    trans[("r1", "3")] = "rb"
    for b in ("0", "1"):
        trans[("rb", b)] = "rb"
        trans[("rc", b)] = "rc"
    trans[("rb", "2")] = "rc"       # either a pair separator or the last 2
    trans[("rc", "3")] = "rb"
    return DFA(states, set(ALPH4), "r0", states - {"dead"}, trans)


def pi1_prefix_dfa():
    """Conservative viability DFA for prefixes of substitution images.

    Abstracts the length equalities away and keeps only the run structure:
    payload runs separated by alternating 3/2, with the run between 3 and 2
    at least three letters (u may be empty but v never is) and the run
    after a 2 at least three (the w part).  Supersets of the prefix set are
    sound for pruning."""
    # state: (expected separator, letters in current payload run, capped)
    states = set()
    trans = {}

    def name(exp, c):
        return "%s%d" % (exp, c)

    for exp, need in (("3", 1), ("2", 3)):
        for c in range(4):
            s = name(exp, c)
            states.add(s)
            for b in ("0", "1"):
                trans[(s, b)] = name(exp, min(c + 1, 3))
            for sep in ("2", "3"):
                if sep == exp and c >= need:
                    trans[(s, sep)] = name("3" if exp == "2" else "2", 0)
                else:
                    trans[(s, sep)] = "dead"
    states.add("dead")
    for ch in ALPH4:
        trans[("dead", ch)] = "dead"
    return DFA(states, set(ALPH4), name("3", 0), states - {"dead"}, trans)


def accepting_sinks(m):
    """Final states looping on every letter with zero counters.

    A configuration resting in one (with zero counters) accepts every
    extension; the crosscheck walker uses that to cut subtrees.
    """
    zero_pat = (0,) * m.k
    zero_delta = (0,) * m.k
    loops = {}
    for t in m.transitions:
        if (t.src == t.dst and t.letter is not None
                and t.pattern == zero_pat and t.delta == zero_delta):
            loops.setdefault(t.src, set()).add(t.letter)
    return {q for q in m.finals if loops.get(q, set()) >= m.alphabet}


# -- the build pipeline ---------------------------------------------------

def build_sn(n, reduce_stages=True):
    """Machine whose omega-power sits at level n of the Sigma hierarchy.

    Level 1 is hand-built; level 2 only exists by an external construction
    and is refused; level 3 assembles A over the regular base {w : some
    position holds 1}; higher levels assemble A over the previous Pi-level
    machine and push the result through the same run-coding reduction the
    Pi pipeline uses.
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    if n == 2:
        raise UnsupportedLevel("level 2 comes from an external construction "
                               "and is not built here")
    stages = []
    if n == 1:
        m = s1_machine()
        _log(stages, "base", m)
        return PipelineArtifact(m, "S1", stages, {})
    if n == 3:
        m = assemble_A(exists_one_machine())
        _log(stages, "assemble", m)
        if reduce_stages:
            m = reduce_machine(m)
            _log(stages, "reduce", m)
        return PipelineArtifact(m, "S3", stages,
                                {"l_predicate": exists_one_oracle})
    prev = build_pn(n - 1, reduce_stages=reduce_stages)
    subject = assemble_A(prev.machine)
    _log(stages, "assemble", subject)
    if reduce_stages:
        subject = reduce_machine(subject)
        _log(stages, "reduce assembled", subject)
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
    m = apply_letter_morphism(padded, codes)
    _log(stages, "recode", m)
    meta = {"codes": codes, "pad_letter": pad_letter, "pad_count": 6,
            "markers": markers, "subject": subject, "prev": prev}
    return PipelineArtifact(m, "S%d" % n, stages, meta)


def sn_oracle(art):
    """Definitional membership oracle matching a build_sn artifact."""
    label = art.label
    if label == "S1":
        return lambda w: (bool(w) and set(w) <= _BIN
                          and (w[0] == "0"
                               or (w[0] == "1" and "1" in w[1:]
                                   and set(w[1:w.index("1", 1)]) <= {"0"})))
    if label == "S3":
        pred = art.meta["l_predicate"]
        return lambda w: a_oracle(w, pred)
    codes = art.meta["codes"]
    pad_letter = art.meta["pad_letter"]
    pad_count = art.meta["pad_count"]
    markers = art.meta["markers"]
    subject = art.meta["subject"]

    def member(w):
        dec = decode_codes(w, codes)
        if dec is None:
            return False
        inner = strip_padding(dec, pad_letter, pad_count)
        if inner is None:
            return False
        return (script_l_oracle(subject, inner, markers)
                or mu_five_oracle(inner, subject.alphabet, markers))
    return member


# -- the vertical-position witness layer ----------------------------------

@dataclass(frozen=True)
class Lemma16Witness:
    """Bookkeeping for a block tiling realising given letter words on the
    vertical 2N: the padded bit sequence, the cut blocks, and one unit
    descriptor (at, u, v, w) per realised letter."""
    N: int
    words: tuple
    blocks: tuple        # s_0 .. s_last (the last one possibly partial)
    units: tuple         # parse_pi1_units-style tuples, one per letter
    k_counts: tuple      # letters per factor word

    def m_q(self, q):
        return 2 * self.N + 2 * q + 2

    def s_span(self, p, q):
        return sum(self.k_counts[p:q + 1]) + (q - p + 1)


def _alpha_from_letters(N, letters, fill, length):
    alpha = [fill] * length
    for q, ch in enumerate(letters):
        pos = pair(2 * N, 2 * q + 1)
        if pos >= length:
            raise ValueError("alpha prefix too short")
        alpha[pos] = ch
    return "".join(alpha)


def _blocks_of_alpha(alpha, count):
    """Cut the K0 blocks s_0..s_{count-1} out of a bit sequence; block s_m
    is the m-th diagonal chunk, reversed for odd m."""
    blocks = []
    pos = 0
    for m in range(count):
        chunk = alpha[pos:pos + m]
        if len(chunk) < m:
            raise ValueError("alpha prefix too short for block %d" % m)
        blocks.append(chunk[::-1] if m % 2 == 1 else chunk)
        pos += m
    return blocks


def lemma16_backward(N, words, alpha_fill="0"):
    """Tile a K0-prefix realising the given letter words on vertical 2N.

    Returns (factors, witness): the first factor is the pi0 lead-in, then
    one pi1 factor per word, grouping one unit per letter.  The bit at
    position <2N, 2q+1> of the diagonal image is the q-th realised letter;
    everything unconstrained is alpha_fill.
    """
    if alpha_fill not in ("0", "1"):
        raise ValueError("filler must be a single bit")
    words = [str(w) for w in words]
    for w in words:
        if not w or not set(w) <= _BIN:
            raise ValueError("factor words must be nonempty binary words")
    letters = "".join(words)
    R = len(letters)
    top = 2 * N + 2 * R + 2          # last block touched (partially)
    length = top * (top + 1) // 2 + (2 * R + 1)
    alpha = _alpha_from_letters(N, letters, alpha_fill, length)
    blocks = _blocks_of_alpha(alpha, top)
    last_partial = alpha[top * (top - 1) // 2:]
    last_partial = (last_partial[::-1] if top % 2 == 1 else last_partial)
    # NB: the final block is only ever consumed from its front, and top is
    # even, so no reversal subtlety arises on the partial block
    blocks.append(last_partial)
    sep = lambda m: "2" if m % 2 == 0 else "3"
    pi0 = []
    for m in range(2 * N + 2):
        pi0.append(sep(m) + blocks[m])
    pi0.append("2" + blocks[2 * N + 2][0])
    factors = ["".join(pi0)]
    units = []
    q = 0
    for w in words:
        parts = []
        for _ in w:
            mq = 2 * N + 2 * q + 2
            at = blocks[mq][2 * q + 1:]
            uv = blocks[mq + 1]
            u, v = uv[:2 * N], uv[2 * N:]
            wpart = blocks[mq + 2][:2 * q + 3]
            units.append((at, u, v, wpart))
            parts.append(at + "3" + u + v + "2" + wpart)
            q += 1
        factors.append("".join(parts))
    wit = Lemma16Witness(N, tuple(words), tuple(blocks), tuple(units),
                         tuple(len(w) for w in words))
    return factors, wit


def lemma16_forward(factors):
    """Recover (N, letter words, report) from a pi0 + pi1* tiling.

    The report records, per realised letter, its global index q, the block
    M_q it lives in, and the diagonal position <2N, 2q+1> it determines;
    it also carries the K0 prefix verdict of the concatenation.
    """
    if not factors:
        raise ValueError("need at least the lead-in factor")
    head = factors[0]
    if not pi0_oracle(head):
        raise ValueError("first factor is not a well-started prefix "
                         "(it must begin with 2)")
    # count the full blocks of the lead-in: separators seen minus the last
    seps = sum(1 for ch in head if ch in ("2", "3"))
    full_blocks = seps - 1
    if full_blocks % 2 != 0:
        raise ValueError("lead-in block count is odd")
    N = (full_blocks - 2) // 2
    if N < 0:
        raise ValueError("lead-in too short")
    words = []
    q = 0
    report = []
    for fct in factors[1:]:
        units = parse_pi1_units(fct)
        if units is None:
            raise ValueError("factor %r is not a substitution image" % fct)
        letters = []
        for (at, u, v, wpart) in units:
            if len(at) != 2 * N + 1:
                raise ValueError(
                    "unit %d has payload length %d, expected %d"
                    % (q, len(at), 2 * N + 1))
            if len(v) != 2 * q + 3:
                raise ValueError(
                    "unit %d has block sliver length %d, expected %d"
                    % (q, len(v), 2 * q + 3))
            letters.append(at[0])
            report.append({"q": q, "block": 2 * N + 2 * q + 2,
                           "position": pair(2 * N, 2 * q + 1),
                           "letter": at[0]})
            q += 1
        words.append("".join(letters))
    gamma = "".join(factors)
    return N, words, {"units": report,
                      "k0_prefix": k_prefix_check(gamma, 0)}


# -- the case classifier for finite A-tilings -----------------------------

class MuPower:
    def __repr__(self):
        return "MuPower"

    def __eq__(self, other):
        return isinstance(other, MuPower)

    def __hash__(self):
        return hash("MuPower")


class InK0:
    def __repr__(self):
        return "InK0"

    def __eq__(self, other):
        return isinstance(other, InK0)

    def __hash__(self):
        return hash("InK0")


@dataclass(frozen=True)
class Shifted:
    t: str
    i: int
    N: int
    v: str

    def __post_init__(self):
        if len(self.v) != 2 * self.N + 1:
            raise ValueError("sliver length must be 2N+1")


def _in_mu(w):
    return mu0_oracle(w) or mu1_oracle(w) or mu2_oracle(w)


def claim2_classify(factors, l_predicate=exists_one_oracle):
    """Case analysis for a finite tiling by words of A.

    All factors in mu -> MuPower.  A well-started lead-in followed by
    substitution images whose concatenation keeps the block discipline ->
    InK0.  Otherwise the shortest all-pi1 tail determines a shift: its
    first unit fixes N and the starting block height i, the tail's first
    2N+1 letters form the sliver v, and the rest must keep the K_{N+i+1}
    discipline; everything before the tail is the mu-prefix t.
    """
    if not factors:
        raise ValueError("empty factorization")
    certs = []
    for w in factors:
        kinds = set()
        if _in_mu(w):
            kinds.add("mu")
        if pi0_oracle(w):
            kinds.add("pi0")
        if pi1_oracle(w, l_predicate):
            kinds.add("pi1")
        if not kinds:
            raise ValueError("factor %r is not certified by any component"
                             % w)
        certs.append(kinds)
    if all("mu" in k for k in certs):
        return MuPower()
    if ("pi0" in certs[0] and all("pi1" in k for k in certs[1:])
            and k_prefix_check("".join(factors), 0)):
        return InK0()
    # shortest tail of substitution images
    m0 = len(factors)
    while m0 > 0 and "pi1" in certs[m0 - 1]:
        m0 -= 1
    if m0 == len(factors):
        raise ValueError("no substitution-image tail to classify")
    t = "".join(factors[:m0])
    if t and not _in_mu(t):
        raise ValueError("prefix before the tail is not a violation word")
    tail = "".join(factors[m0:])
    units = parse_pi1_units(tail)
    if units is None:
        raise ValueError("tail does not cut into substitution units")
    at0, _, v0, _ = units[0]
    N = (len(at0) - 1) // 2
    i = (len(v0) - 3) // 2
    sliver = tail[:2 * N + 1]
    rest = tail[2 * N + 1:]
    if not k_prefix_check(rest, N + i + 1):
        raise ValueError("tail after the sliver violates the block "
                         "discipline for level %d" % (N + i + 1))
    return Shifted(t, i, N, sliver)
