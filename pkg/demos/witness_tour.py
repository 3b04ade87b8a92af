"""Witness transformations: factorizations carried across the codings.

Run:  python3 demos/witness_tour.py
"""

from ocpower.codings import GParams, encode_g
from ocpower.pi_pipeline import (DEFAULT_MARKERS, a0_machine, claim2_backward,
                                 claim2_forward)
from ocpower.sigma_pipeline import (claim2_classify, lemma16_backward,
                                    lemma16_forward)

MK = DEFAULT_MARKERS

print("Run-coding witnesses: a factorization of a word into subject")
print("words is cut into one block-parse per factor, tiling the coding.")
sub = a0_machine()
p = GParams(1, 2)
factors = ["ab", "ab"]
wits = claim2_forward(sub, factors, p, MK)
for i, w in enumerate(wits):
    print("  factor %d: letters=%s v=%s w=%s z=%s"
          % (i, "".join(w.letters), w.v_lens, w.w_lens, w.z_lens))
coded = encode_g(p, "".join(factors), MK)
tiled = "".join(w.to_word(MK) for w in wits)
print("  coding length %d; witness words tile it: %s"
      % (len(coded), tiled + MK[0] == coded))
print("  backward recovers the factors:", claim2_backward(sub, wits, p, MK))

print()
print("Block tilings: letter words are realized on a vertical of the")
print("diagonal coding; the lead-in factor plus one substitution image")
print("per word tile a prefix of the separator-block space.")
factors, wit = lemma16_backward(1, ["10", "1"])
for i, f in enumerate(factors):
    print("  factor %d (%d letters): %s" % (i, len(f), f))
n, words, report = lemma16_forward(factors)
print("  forward recovers N=%d words=%s, block discipline: %s"
      % (n, words, report["k0_prefix"]))

print()
print("Classifying finite tilings:")
print("  all violation words   ->", claim2_classify(["023", "323"]))
print("  lead-in + images      ->", claim2_classify(factors))
print("  violation + tail      ->", claim2_classify(["023"] + factors[1:]))
