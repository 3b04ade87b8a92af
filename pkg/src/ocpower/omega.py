"""Finite-stage and ultimately-periodic reasoning about omega-powers.

A word sigma = w0 w1 ... belongs to the omega-power of L when every w_i is a
nonempty L-word.  This module covers the decidable shadows of that notion:
factorizations of finite words, prefix-of-omega-power tests, exact
ultimately-periodic membership for regular bases (lasso search), and a
capped, certificate-producing search for counter-machine bases.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Factorization:
    """Cut positions 0 = c_0 < ... < c_r = |w| with one flag per factor."""
    cuts: tuple
    certified: tuple = ()

    def __post_init__(self):
        if list(self.cuts) != sorted(set(self.cuts)):
            raise ValueError("cuts must be strictly increasing")

    def factors(self, w):
        return [w[self.cuts[i]:self.cuts[i + 1]]
                for i in range(len(self.cuts) - 1)]

    @property
    def interior(self):
        return self.cuts[1:-1]


@dataclass(frozen=True)
class UPWord:
    """Ultimately periodic word: stem u followed by period v repeated."""
    u: str
    v: str

    def __post_init__(self):
        if not self.v:
            raise ValueError("period must be nonempty")

    def prefix(self, n):
        if n <= len(self.u):
            return self.u[:n]
        r = n - len(self.u)
        reps = r // len(self.v) + 1
        return self.u + (self.v * reps)[:r]

    def letter(self, i):
        if i < len(self.u):
            return self.u[i]
        return self.v[(i - len(self.u)) % len(self.v)]


def factorizations(w, oracle, limit):
    """All factorizations of w into nonempty oracle words, up to `limit`
    many, in lexicographic cut order."""
    if limit <= 0:
        raise ValueError("limit must be positive")
    out = []
    n = len(w)

    def go(pos, cuts):
        if len(out) >= limit:
            return
        if pos == n:
            out.append(Factorization(tuple(cuts),
                                     (True,) * (len(cuts) - 1)))
            return
        for nxt in range(pos + 1, n + 1):
            if oracle(w[pos:nxt]):
                cuts.append(nxt)
                go(nxt, cuts)
                cuts.pop()
                if len(out) >= limit:
                    return

    go(0, [0])
    return out


def is_omega_power_prefix(w, oracle, alphabet=None, extension_bound=8):
    """w = w_1 ... w_r p with every w_i a nonempty oracle word and p a
    proper prefix of some oracle word (p possibly empty, r possibly 0).

    The proper-prefix condition is checked by trying extensions of p up to
    extension_bound letters over the given alphabet (the oracle's own
    alphabet when none is passed).
    """
    if alphabet is None:
        alphabet = getattr(oracle, "alphabet", None)
        if alphabet is None:
            raise ValueError("need an alphabet to search extensions")
    alphabet = sorted(alphabet)
    n = len(w)
    reach = [False] * (n + 1)
    reach[0] = True
    for j in range(1, n + 1):
        reach[j] = any(reach[i] and oracle(w[i:j]) for i in range(j))

    def extends(p):
        frontier = [p]
        for _ in range(extension_bound):
            nxt = []
            for x in frontier:
                for a in alphabet:
                    y = x + a
                    if oracle(y):
                        return True
                    nxt.append(y)
            frontier = nxt
        return False

    for i in range(n, -1, -1):
        if reach[i] and (i == n or extends(w[i:])):
            return True
    return False


def up_membership_regular(x, dfa):
    """Exact: u v^omega is an infinite product of nonempty L(dfa)-words.

    Lasso search over the product of the period positions with the standard
    omega-power automaton of the DFA (run the DFA; whenever it would enter
    an accepting state, optionally close the factor and restart).
    """
    if not isinstance(x, UPWord):
        x = UPWord(*x)
    # states reachable after the stem, with factor restarts allowed
    cur = {dfa.initial}
    for ch in x.u:
        nxt = set()
        for q in cur:
            d = dfa.trans[(q, ch)]
            nxt.add(d)
            if d in dfa.finals:
                nxt.add(dfa.initial)
        cur = nxt
    # product graph over (dfa state, period position); reset edges marked
    p = len(x.v)
    edges = {}
    for q in dfa.states:
        for i in range(p):
            d = dfa.trans[(q, x.v[i])]
            outs = [((d, (i + 1) % p), False)]
            if d in dfa.finals:
                outs.append(((dfa.initial, (i + 1) % p), True))
            edges[(q, i)] = outs
    start = {(q, 0) for q in cur}
    seen = set(start)
    work = list(start)
    while work:
        node = work.pop()
        for nxt, _ in edges[node]:
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    # a reset edge inside a reachable cycle certifies the lasso
    for node in seen:
        for nxt, reset in edges[node]:
            if reset and _reaches(edges, nxt, node):
                return True
    return False


def _reaches(edges, src, dst):
    seen = {src}
    work = [src]
    while work:
        node = work.pop()
        if node == dst:
            return True
        for nxt, _ in edges[node]:
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return False


# -- bounded search for counter-machine bases -----------------------------

@dataclass(frozen=True)
class UPVerdict:
    kind: str                      # "yes" | "no" | "unknown"
    certificate: tuple = None      # replayable steps for "yes"
    reason: str = ""

    def __bool__(self):
        return self.kind == "yes"


def up_membership_bounded(x, m, counter_cap=64, unroll_cap=20000):
    """u v^omega against the omega-power of a counter-machine language.

    Yes carries a replayable lasso certificate whose factor boundaries are
    accepting zero-counter configurations; No is sound only relative to the
    caps (counters <= counter_cap, explored nodes <= unroll_cap); Unknown
    means a cap was hit before the search space closed.
    """
    if not isinstance(x, UPWord):
        x = UPWord(*x)
    zero = (0,) * m.k
    capped = False

    def expand(q, cs, read, consumed):
        """One-step successors: lambda moves, a factor reset, or the next
        input letter; steps are (tag, payload) for the certificate."""
        nonlocal capped
        outs = []
        ch = x.letter(consumed)
        for t in m.transitions:
            if t.src != q:
                continue
            if t.letter is not None and t.letter != ch:
                continue
            ok = True
            for i in range(m.k):
                want = t.pattern[i]
                if (cs[i] == 0) != (want == 0):
                    ok = False
                    break
            if not ok:
                continue
            nc = tuple(cs[i] + t.delta[i] for i in range(m.k))
            if any(c > counter_cap for c in nc):
                capped = True
                continue
            if t.letter is None:
                outs.append((("lambda", t), (q, cs, read, consumed),
                             (t.dst, nc, read, consumed)))
            else:
                outs.append((("letter", t), (q, cs, read, consumed),
                             (t.dst, nc, True, consumed + 1)))
        if read and q in m.finals and cs == zero:
            outs.append((("reset",), (q, cs, read, consumed),
                         (m.initial, zero, False, consumed)))
        return outs

    # breadth-first closure; node identity folds the consumed count onto
    # the period position once the stem is gone
    def key(node):
        q, cs, read, consumed = node
        if consumed < len(x.u):
            return (q, cs, read, ("stem", consumed))
        return (q, cs, read, ("per", (consumed - len(x.u)) % len(x.v)))

    start = (m.initial, zero, False, 0)
    seen = {key(start): start}
    work = [start]
    edges = {}
    while work:
        node = work.pop()
        outs = expand(*node)
        edges.setdefault(key(node), [])
        for step, src, dst in outs:
            edges[key(node)].append((step, key(dst)))
            if key(dst) not in seen:
                if len(seen) >= unroll_cap:
                    capped = True
                    continue
                seen[key(dst)] = dst
                work.append(dst)
    # lasso: a reachable reset edge lying on a cycle
    for src_k, outs in edges.items():
        for step, dst_k in outs:
            if step[0] == "reset" and _reach_keys(edges, dst_k, src_k):
                cert = _certificate(edges, key(start), src_k, dst_k, step)
                if cert is not None and replay_certificate(x, m, cert):
                    return UPVerdict("yes", cert)
    if capped:
        return UPVerdict("unknown", None, "search cap hit")
    return UPVerdict("no", None, "exhausted under caps")


def _reach_keys(edges, src, dst):
    seen = {src}
    work = [src]
    while work:
        n = work.pop()
        if n == dst:
            return True
        for _, nxt in edges.get(n, ()):
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return False


def _path_steps(edges, src, dst):
    """Shortest step path src -> dst in the explored graph."""
    if src == dst:
        return []
    prev = {src: None}
    work = [src]
    while work:
        nxt_work = []
        for n in work:
            for step, nxt in edges.get(n, ()):
                if nxt not in prev:
                    prev[nxt] = (n, step)
                    if nxt == dst:
                        steps = []
                        cur = dst
                        while prev[cur] is not None:
                            cur, st = prev[cur]
                            steps.append(st)
                        return steps[::-1]
                    nxt_work.append(nxt)
        work = nxt_work
    return None


def _certificate(edges, start_k, loop_src, loop_dst, reset_step):
    head = _path_steps(edges, start_k, loop_src)
    back = _path_steps(edges, loop_dst, loop_src)
    if head is None or back is None:
        return None
    return (tuple(head), tuple([reset_step] + back))


def replay_certificate(x, m, cert):
    """Step the machine through (head, cycle) and confirm every move: the
    cycle must be traversable twice, consume at least one letter, and every
    reset must sit on an accepting zero-counter configuration."""
    if not isinstance(x, UPWord):
        x = UPWord(*x)
    head, cycle = cert
    zero = (0,) * m.k
    q, cs, read, consumed = m.initial, zero, False, 0

    def apply(step):
        nonlocal q, cs, read, consumed
        if step[0] == "reset":
            if not (read and q in m.finals and cs == zero):
                return False
            q, read = m.initial, False
            return True
        t = step[1]
        if t.src != q:
            return False
        for i in range(m.k):
            if (cs[i] == 0) != (t.pattern[i] == 0):
                return False
        if step[0] == "letter":
            if t.letter != x.letter(consumed):
                return False
            consumed += 1
            read = True
        elif t.letter is not None:
            return False
        q = t.dst
        cs = tuple(cs[i] + t.delta[i] for i in range(m.k))
        return True

    for step in head:
        if not apply(step):
            return False
    if consumed < len(x.u):
        return False
    base = consumed
    for rep in range(2):
        before = consumed
        for step in cycle:
            if not apply(step):
                return False
        if consumed == before:
            return False
        if not any(s[0] == "reset" for s in cycle):
            return False
    # the cycle must return to the same period position
    return (consumed - base) % len(x.v) == 0
