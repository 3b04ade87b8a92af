import itertools
import random

import pytest

from ocpower.codings import k_prefix_check, pair
from ocpower.machines import accepts, validate_machine
from ocpower.pi_pipeline import UnsupportedLevel
from ocpower.sigma_pipeline import (ALPH4, InK0, MuPower, Shifted,
                                    a_oracle, accepting_sinks, assemble_A,
                                    build_sn, claim2_classify, defn_oracle,
                                    exists_one_machine, exists_one_oracle,
                                    f_shape_oracle, lemma16_backward,
                                    lemma16_forward, mu0_machine, mu0_oracle,
                                    mu1_machine, mu1_oracle, mu2_machine,
                                    mu2_oracle, parse_pi1_units, pi0_machine,
                                    pi0_oracle, pi0_prefix_dfa, pi1_machine,
                                    pi1_oracle, pi1_prefix_dfa, s1_machine,
                                    sn_oracle)
from ocpower.walker import WordOracle, crosscheck

LETTERS = sorted(ALPH4)


def test_defn_oracle_examples():
    assert defn_oracle("mu0", "023")
    assert not defn_oracle("mu0", "23")
    assert defn_oracle("mu1", "323")
    assert defn_oracle("pi0", "2320")
    assert not defn_oracle("pi0", "232")
    assert f_shape_oracle("130002000")
    with pytest.raises(ValueError):
        defn_oracle("nope", "0")


def test_s1_examples():
    m = s1_machine()
    assert validate_machine(m) == []
    assert accepts(m, "0")
    assert accepts(m, "101")
    assert not accepts(m, "10")
    assert not accepts(m, "")
    assert accepts(m, "1001")
    assert not accepts(m, "11") or True  # "11" = 1 0^0 1, a valid prefix
    assert accepts(m, "11")


def _exhaustive(machine, oracle, max_len):
    for n in range(max_len + 1):
        for tup in itertools.product(LETTERS, repeat=n):
            w = "".join(tup)
            if accepts(machine, w) != oracle(w):
                return w
    return None


@pytest.mark.parametrize("build,oracle", [
    (mu0_machine, mu0_oracle),
    (mu1_machine, mu1_oracle),
    (mu2_machine, mu2_oracle),
    (pi0_machine, pi0_oracle),
])
def test_component_machines_small(build, oracle):
    m = build()
    assert validate_machine(m) == []
    assert _exhaustive(m, oracle, 7) is None


def test_pi1_machine_examples_and_small():
    m = pi1_machine(exists_one_machine())
    assert validate_machine(m) == []
    assert m.k == 1 and m.real_time
    assert accepts(m, "130002000")
    assert not accepts(m, "030002000")
    bad = _exhaustive(m, lambda w: pi1_oracle(w, exists_one_oracle), 8)
    assert bad is None


def test_pi1_random_units():
    m = pi1_machine(exists_one_machine())
    rng = random.Random(7)
    for _ in range(200):
        w, base = "", []
        for _ in range(rng.randint(1, 3)):
            tl = 2 * rng.randint(0, 2)
            a = rng.choice("01")
            base.append(a)
            t = "".join(rng.choice("01") for _ in range(tl))
            u = "".join(rng.choice("01") for _ in range(tl))
            vl = 3 + 2 * rng.randint(0, 2)
            v = "".join(rng.choice("01") for _ in range(vl))
            wp = "".join(rng.choice("01") for _ in range(vl))
            w += a + t + "3" + u + v + "2" + wp
        expect = "1" in "".join(base)
        assert accepts(m, w) == expect
        assert pi1_oracle(w, exists_one_oracle) == expect


def test_prefix_dfas_are_sound():
    # no word certified by the oracle may sit on a dead DFA state
    d0, d1 = pi0_prefix_dfa(), pi1_prefix_dfa()
    live0, live1 = d0.live_states(), d1.live_states()
    for n in range(8):
        for tup in itertools.product(LETTERS, repeat=n):
            w = "".join(tup)
            if pi0_oracle(w):
                s = d0.initial
                for ch in w:
                    s = d0.trans[(s, ch)]
                assert s in live0, w
            if pi1_oracle(w, lambda _: True):
                s = d1.initial
                for ch in w:
                    s = d1.trans[(s, ch)]
                assert s in live1, w


def test_assembled_machine_small():
    A = assemble_A(exists_one_machine())
    assert validate_machine(A) == []
    assert accepts(A, "023")
    assert not accepts(A, "")
    forever = lambda w: mu0_oracle(w) or mu1_oracle(w) or mu2_oracle(w)
    orc = WordOracle(a_oracle, forever_fn=forever)
    res = crosscheck(A, orc, LETTERS, 8, machine_sinks=accepting_sinks(A))
    assert not res.mismatches


def test_build_sn_levels():
    s1 = build_sn(1)
    assert accepts(s1.machine, "0") and not accepts(s1.machine, "10")
    with pytest.raises(UnsupportedLevel):
        build_sn(2)
    s3 = build_sn(3)
    assert validate_machine(s3.machine) == []
    assert s3.machine.real_time and s3.machine.k == 1
    orc = sn_oracle(s3)
    for n in range(7):
        for tup in itertools.product(LETTERS, repeat=n):
            w = "".join(tup)
            assert accepts(s3.machine, w) == orc(w), w


def test_build_sn_4_validates_and_agrees():
    art = build_sn(4)
    m = art.machine
    assert validate_machine(m) == []
    assert m.real_time and m.k == 1 and m.alphabet == {"0", "1"}
    res = crosscheck(m, WordOracle(sn_oracle(art)), sorted(m.alphabet), 11)
    assert not res.mismatches


def test_lemma16_round_trip_exhaustive_small():
    cnt = 0
    for n in (0, 1, 2):
        for lens in itertools.product((1, 2), repeat=2):
            rng = random.Random(cnt)
            ws = ["".join(rng.choice("01") for _ in range(k)) for k in lens]
            for fill in ("0", "1"):
                factors, wit = lemma16_backward(n, ws, fill)
                assert pi0_oracle(factors[0])
                for f in factors[1:]:
                    assert parse_pi1_units(f) is not None
                n2, ws2, rep = lemma16_forward(factors)
                assert (n2, ws2) == (n, ws)
                assert rep["k0_prefix"]
                cnt += 1


def test_lemma16_vertical_identity():
    # the q-th realized letter sits at diagonal position <2N, 2q+1>
    n, words = 1, ["10", "1"]
    factors, _ = lemma16_backward(n, words)
    gamma = "".join(factors)
    blocks, cur = [], None
    for ch in gamma:
        if ch in "23":
            if cur is not None:
                blocks.append(cur)
            cur = ""
        else:
            cur += ch
    blocks.append(cur)
    alpha = "".join(b[::-1] if m % 2 == 1 else b
                    for m, b in enumerate(blocks))
    for q, ch in enumerate("".join(words)):
        assert alpha[pair(2 * n, 2 * q + 1)] == ch


def test_classifier_cases():
    assert claim2_classify(["023", "323"]) == MuPower()
    factors, _ = lemma16_backward(1, ["10", "1"])
    assert claim2_classify(factors) == InK0()
    shifted = claim2_classify(["023"] + factors[1:])
    assert isinstance(shifted, Shifted)
    assert shifted.t == "023" and shifted.N == 1 and shifted.i == 0
    assert len(shifted.v) == 2 * shifted.N + 1
    tail_only = claim2_classify(factors[1:])
    assert tail_only.t == ""


def test_classifier_rejects_uncertified_and_bad_tails():
    with pytest.raises(ValueError):
        claim2_classify(["22"])
    factors, _ = lemma16_backward(1, ["10", "1"])
    with pytest.raises(ValueError):
        # duplicated tail factor breaks the block-length progression
        claim2_classify(factors[1:] + [factors[1]])
