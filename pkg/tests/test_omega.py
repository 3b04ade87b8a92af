import itertools
import random

import pytest

from ocpower.machines import CounterMachine, DFA, LanguageOracle, Trans
from ocpower.omega import (Factorization, UPWord, factorizations,
                           is_omega_power_prefix, replay_certificate,
                           up_membership_bounded, up_membership_regular)
from ocpower.pi_pipeline import build_pn

P2 = LanguageOracle({"0", "1"},
                    lambda w: bool(w) and set(w[:-1]) <= {"0"}
                    and w[-1] == "1", "P2")

P2_DFA = DFA({"s", "f", "d"}, {"0", "1"}, "s", {"f"},
             {("s", "0"): "s", ("s", "1"): "f", ("f", "0"): "d",
              ("f", "1"): "d", ("d", "0"): "d", ("d", "1"): "d"})


def test_factorization_type():
    f = Factorization((0, 2, 4))
    assert f.interior == (2,)
    assert f.factors("0101") == ["01", "01"]
    with pytest.raises(ValueError):
        Factorization((0, 2, 1))
    with pytest.raises(ValueError):
        UPWord("0", "")


def test_factorizations_examples():
    assert [f.interior for f in factorizations("0101", P2, 10)] == [(2,)]
    assert [f.interior for f in factorizations("1", P2, 10)] == [()]
    assert factorizations("00", P2, 10) == []


def test_factorizations_matches_naive():
    rng = random.Random(5)

    def naive(w):
        n = len(w)
        res = set()
        for bits in itertools.product((0, 1), repeat=max(0, n - 1)):
            cuts = ((0,) + tuple(i + 1 for i, b in enumerate(bits) if b)
                    + (n,))
            cuts = tuple(sorted(set(cuts)))
            if all(P2(w[cuts[i]:cuts[i + 1]])
                   for i in range(len(cuts) - 1)):
                res.add(cuts)
        return sorted(res)

    for _ in range(150):
        w = "".join(rng.choice("01") for _ in range(rng.randint(0, 12)))
        got = sorted(f.cuts for f in factorizations(w, P2, 10 ** 6))
        assert got == naive(w), w


def test_factorizations_respects_limit():
    # 1^n factorizes in 2^(n-1) ways over {1, 11}
    orc = LanguageOracle({"1"}, lambda w: w in ("1", "11"))
    got = factorizations("1" * 10, orc, 7)
    assert len(got) == 7


def test_prefix_examples():
    assert is_omega_power_prefix("00", P2)
    assert is_omega_power_prefix("", P2)
    one = LanguageOracle({"0", "1"}, lambda w: w == "1")
    assert not is_omega_power_prefix("0", one)


def test_prefix_monotone():
    rng = random.Random(9)
    for _ in range(200):
        w = "".join(rng.choice("01") for _ in range(rng.randint(1, 10)))
        if is_omega_power_prefix(w, P2):
            assert is_omega_power_prefix(w[:-1], P2)


def test_up_regular_examples():
    assert up_membership_regular(UPWord("", "01"), P2_DFA)
    assert not up_membership_regular(UPWord("1", "0"), P2_DFA)
    single0 = DFA({"a", "b", "d"}, {"0"}, "a", {"b"},
                  {("a", "0"): "b", ("b", "0"): "d", ("d", "0"): "d"})
    assert up_membership_regular(UPWord("", "0"), single0)


def test_up_regular_period_criterion():
    for ul in range(5):
        for vl in range(1, 5):
            for u in itertools.product("01", repeat=ul):
                for v in itertools.product("01", repeat=vl):
                    x = UPWord("".join(u), "".join(v))
                    assert up_membership_regular(x, P2_DFA) == ("1" in x.v)


def test_up_bounded_levels():
    p1 = build_pn(1).machine
    verdict = up_membership_bounded(UPWord("", "0"), p1)
    assert verdict.kind == "yes"
    assert replay_certificate(UPWord("", "0"), p1, verdict.certificate)
    assert up_membership_bounded(UPWord("", "1"), p1).kind == "no"
    p2 = build_pn(2).machine
    assert up_membership_bounded(UPWord("", "01"), p2).kind == "yes"
    assert up_membership_bounded(UPWord("1", "0"), p2).kind == "no"


def test_up_bounded_cap_semantics():
    m = CounterMachine(
        1, {"a", "b"}, {"0", "1"}, "a", {"b"},
        [Trans("a", "0", (0,), "a", (1,)), Trans("a", "0", (1,), "a", (1,)),
         Trans("a", "1", (1,), "b", (-1,)),
         Trans("b", "1", (1,), "b", (-1,))],
        real_time=True, acceptance="final_zero", lambda_chain_bound=0)
    x = UPWord("", "0" * 10 + "1" * 10)
    assert up_membership_bounded(x, m, counter_cap=4).kind == "unknown"
    good = up_membership_bounded(x, m, counter_cap=64)
    assert good.kind == "yes"
    assert replay_certificate(x, m, good.certificate)


def test_certificates_do_not_replay_on_other_words():
    p1 = build_pn(1).machine
    cert = up_membership_bounded(UPWord("", "0"), p1).certificate
    assert not replay_certificate(UPWord("", "1"), p1, cert)
