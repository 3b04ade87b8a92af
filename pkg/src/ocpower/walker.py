"""Exhaustive machine-vs-oracle equivalence checking over a prefix tree.

Enumerating every word up to the acceptance bounds one by one is hopeless
(the 5-letter bound-12 check alone names ~3*10^8 words), so the check walks
the prefix tree once, stepping the machine's configuration set and the
oracle's incremental state letter by letter, and prunes a subtree only when
both sides provably give the same verdict on every extension:

* both reject everything below: the machine has no live configuration (no run
  can revive) and the oracle state is dead (its language is contained in a
  shape language whose DFA cannot reach a final state any more);
* both accept everything below: the machine has reached an accepting sink
  configuration (a final state looping on every letter with counters zero)
  and the oracle reports itself extension-closed at this point.

Either way every word up to the bound is covered exactly.
"""

from .machines import (configs_accept, counter_bound, initial_configs,
                       step_configs)


class WordOracle:
    """Adapter turning a plain word predicate into an incremental oracle.

    Optionally takes a prune DFA whose language contains the predicate's (so
    a dead DFA state soundly rejects the whole subtree) and a monotone flag
    function saying the predicate is true on every extension.
    """

    def __init__(self, predicate, prune_dfa=None, forever_fn=None):
        self.predicate = predicate
        self.dfa = prune_dfa
        self.live = prune_dfa.live_states() if prune_dfa is not None else None
        self.forever_fn = forever_fn

    def initial(self):
        return ("", self.dfa.initial if self.dfa is not None else None)

    def step(self, st, ch):
        word, ds = st
        if ds is not None:
            ds = self.dfa.trans[(ds, ch)]
        return (word + ch, ds)

    def accepts(self, st):
        return self.predicate(st[0])

    def dead(self, st):
        return self.live is not None and st[1] not in self.live

    def forever(self, st):
        return self.forever_fn is not None and self.forever_fn(st[0])


class CrosscheckResult:
    def __init__(self):
        self.compared = 0
        self.mismatches = []

    @property
    def ok(self):
        return not self.mismatches

    def __repr__(self):
        return ("CrosscheckResult(compared=%d, mismatches=%d)"
                % (self.compared, len(self.mismatches)))


def _subtree_size(branching, depth):
    total = 0
    power = 1
    for _ in range(depth + 1):
        total += power
        power *= branching
    return total


def crosscheck(machine, oracle, alphabet, max_len,
               machine_sinks=None, max_mismatches=20):
    """Compare machine and oracle on every word over `alphabet` up to max_len.

    machine_sinks: optional set of machine states that are final and loop on
    every letter with all counters zero; a configuration sitting there makes
    the machine accept every extension.
    """
    letters = sorted(alphabet)
    nb = len(letters)
    bound = counter_bound(machine, max_len)
    res = CrosscheckResult()
    sinks = machine_sinks or frozenset()

    root_cfg = initial_configs(machine, bound)
    stack = [("", root_cfg, oracle.initial())]
    while stack:
        word, configs, ost = stack.pop()
        ma = configs_accept(machine, configs)
        oa = oracle.accepts(ost)
        res.compared += 1
        if ma != oa:
            res.mismatches.append(word)
            if len(res.mismatches) >= max_mismatches:
                return res
        depth_left = max_len - len(word)
        if depth_left == 0:
            continue
        if not configs and oracle.dead(ost):
            res.compared += _subtree_size(nb, depth_left) - 1
            continue
        if sinks and oracle.forever(ost):
            if any(q in sinks and not any(cs) for (q, cs) in configs):
                res.compared += _subtree_size(nb, depth_left) - 1
                continue
        for ch in letters:
            stack.append((word + ch,
                          step_configs(machine, configs, ch, bound),
                          oracle.step(ost, ch)))
    return res
