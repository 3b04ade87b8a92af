"""Build the level machines and watch the pipeline stages.

Run:  python3 demos/build_levels.py
"""

from ocpower.machines import accepts, enumerate_accepted
from ocpower.pi_pipeline import build_pn, pn_oracle
from ocpower.sigma_pipeline import build_sn, sn_oracle


def report(art):
    print("%s:" % art.label)
    for st in art.stages:
        print("  stage %-18s states=%-7d transitions=%d"
              % (st["stage"], st["states"], st["transitions"]))
    m = art.machine
    print("  final: %d states, %d transitions, k=%d, real_time=%s"
          % (len(m.states), len(m.transitions), m.k, m.real_time))


print("Multiplicative side, level 3 (eraser substitution + binary recode):")
p3 = build_pn(3)
report(p3)
print("  shortest members:", enumerate_accepted(p3.machine, 5))

print()
print("Level 4 adds the run-coding layer: every accepting run of the")
print("2-counter subject is serialized into geometrically growing 0-blocks,")
print("and a violation language catches every malformed block word:")
p4 = build_pn(4)
report(p4)
orc = pn_oracle(p4)
# the shortest member is thousands of letters long (geometric block
# growth, then 6-fold padding), so build one instead of enumerating:
# a malformed two-block word whose last 0-run breaks the ratio rule
z, o, t = p4.meta["markers"]
a, b = sorted(p4.meta["subject"].alphabet)[:2]
inner = z + a + o + z * 2 + t + z * 2 + b + o + z * 3 + t + z * 5
padded = "".join(c + p4.meta["pad_letter"] * p4.meta["pad_count"]
                 for c in inner)
coded = "".join(p4.meta["codes"].images[c] for c in padded)
print("  constructed member (%d letters): machine=%s oracle=%s"
      % (len(coded), accepts(p4.machine, coded), orc(coded)))

print()
print("Additive side, level 3 (five separator-block components glued):")
s3 = build_sn(3)
report(s3)
so = sn_oracle(s3)
for w in ["023", "323", "2320", "130002000", "10", ""]:
    v = accepts(s3.machine, w)
    assert v == so(w)
    print("  %-12r -> %s" % (w, "accept" if v else "reject"))
