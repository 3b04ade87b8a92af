"""Language-preserving size reduction for counter machines.

Internal plumbing for the build pipelines, whose raw constructions multiply
state counts by large constants at every stage.  Two sound passes:

* trim: drop states that are unreachable in the transition graph, or from
  which no final state is reachable even ignoring counters.  Both sets
  over-approximate the configuration-level notions, so dropping them cannot
  change the language.

* quotient: forward-bisimulation partition refinement on the labelled graph
  (label = letter, zero-pattern, delta, plus the final flag), then merge each
  class into one state.  Bisimilar states accept the same suffix languages
  from equal counter values, so the quotient is language-equal.
"""

from .machines import CounterMachine, Trans


def trim(m):
    succ = {}
    pred = {}
    for t in m.transitions:
        succ.setdefault(t.src, set()).add(t.dst)
        pred.setdefault(t.dst, set()).add(t.src)
    reach = {m.initial}
    work = [m.initial]
    while work:
        q = work.pop()
        for d in succ.get(q, ()):
            if d not in reach:
                reach.add(d)
                work.append(d)
    live = set(m.finals)
    work = list(live)
    while work:
        q = work.pop()
        for p in pred.get(q, ()):
            if p not in live:
                live.add(p)
                work.append(p)
    keep = reach & live
    keep.add(m.initial)  # keep the initial state even if the language is empty
    if keep == m.states:
        return m
    trans = [t for t in m.transitions if t.src in keep and t.dst in keep]
    return CounterMachine(m.k, keep, m.alphabet, m.initial, m.finals & keep,
                          trans, real_time=m.real_time, acceptance=m.acceptance,
                          lambda_chain_bound=m.lambda_chain_bound)


def quotient(m):
    states = sorted(m.states, key=repr)
    block = {}
    for q in states:
        block[q] = 1 if q in m.finals else 0
    out = {}
    for t in m.transitions:
        out.setdefault(t.src, []).append(t)
    while True:
        sigs = {}
        for q in states:
            sig = frozenset((t.letter, t.pattern, t.delta, block[t.dst])
                            for t in out.get(q, ()))
            sigs[q] = (block[q], sig)
        numbering = {}
        new_block = {}
        for q in states:
            s = sigs[q]
            if s not in numbering:
                numbering[s] = len(numbering)
            new_block[q] = numbering[s]
        if len(set(new_block.values())) == len(set(block.values())):
            block = new_block
            break
        block = new_block
    rep = {}
    for q in states:
        b = block[q]
        if b not in rep:
            rep[b] = q
    mapped = {q: rep[block[q]] for q in states}
    if all(mapped[q] == q for q in states):
        return m
    trans = {Trans(mapped[t.src], t.letter, t.pattern, mapped[t.dst], t.delta)
             for t in m.transitions}
    new_states = set(rep.values())
    finals = {mapped[q] for q in m.finals}
    return CounterMachine(m.k, new_states, m.alphabet, mapped[m.initial],
                          finals, trans, real_time=m.real_time,
                          acceptance=m.acceptance,
                          lambda_chain_bound=m.lambda_chain_bound)


def compact(m):
    """Rename states to fixed-width strings s000000, s000001, ...

    The renaming is canonical (initial state first, the rest sorted by their
    repr), so rebuilding a machine twice gives identical results.  Uniform
    string states make later constructor sorts and binary-search lookups
    cheap, which the large pipeline stages depend on.
    """
    order = [m.initial] + sorted((q for q in m.states if q != m.initial),
                                 key=repr)
    width = max(6, len(str(len(order))))
    names = {q: "s%0*d" % (width, i) for i, q in enumerate(order)}
    trans = [Trans(names[t.src], t.letter, t.pattern, names[t.dst], t.delta)
             for t in m.transitions]
    return CounterMachine(m.k, set(names.values()), m.alphabet,
                          names[m.initial], {names[q] for q in m.finals},
                          trans, real_time=m.real_time, acceptance=m.acceptance,
                          lambda_chain_bound=m.lambda_chain_bound)


def reduce_machine(m, max_rounds=6, quotient_limit=5000):
    """Trim, and additionally quotient while the machine is small.

    The refinement loop in quotient recomputes every signature per round and
    the number of rounds can approach the state count, so on the recoded
    pipeline outputs (where it never finds anything to merge anyway) it is
    skipped; trim alone is linear.
    """
    cur = trim(m)
    if len(cur.transitions) > quotient_limit:
        return cur
    prev = None
    for _ in range(max_rounds):
        if prev is not None and len(cur.states) == prev:
            break
        prev = len(cur.states)
        cur = trim(quotient(cur))
    return cur
