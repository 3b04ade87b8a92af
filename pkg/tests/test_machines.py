import itertools

import pytest

from ocpower.machine_io import parse_machine, word_in, word_out, write_machine
from ocpower.machines import (ERASER, CounterMachine, DFA, LetterMorphism,
                              Trans, accepts, apply_letter_morphism,
                              enumerate_accepted, intersect_regular,
                              realtime_pad, union_machines, validate_machine)


def counting_machine():
    # a^n b^n via one counter
    trans = [
        Trans("p", "a", (0,), "p", (1,)),
        Trans("p", "a", (1,), "p", (1,)),
        Trans("p", "b", (1,), "q", (-1,)),
        Trans("q", "b", (1,), "q", (-1,)),
    ]
    return CounterMachine(1, {"p", "q"}, {"a", "b"}, "p", {"q"}, trans,
                          real_time=True, acceptance="final_zero",
                          lambda_chain_bound=0)


def test_counting_language():
    m = counting_machine()
    assert validate_machine(m) == []
    for n in range(1, 6):
        assert accepts(m, "a" * n + "b" * n)
    for w in ("", "a", "b", "ab" * 2, "aabb" + "a", "aab", "abb"):
        assert accepts(m, w) == bool(w and len(w) % 2 == 0
                                     and w == "a" * (len(w) // 2)
                                     + "b" * (len(w) // 2))


def test_validate_catches_zero_test_violation():
    t = [Trans("p", "a", (0,), "p", (-1,))]
    m = CounterMachine(1, {"p"}, {"a"}, "p", {"p"}, t, real_time=True,
                       acceptance="final_zero", lambda_chain_bound=0)
    assert any("zero-test" in msg for msg in validate_machine(m))


def test_enumerate_accepted_sorted():
    m = counting_machine()
    got = enumerate_accepted(m, 6)
    assert got == ["ab", "aabb", "aaabbb"]


def test_union_and_intersection():
    m = counting_machine()
    single = CounterMachine(0, {"x", "y"}, {"a", "b"},
                            "x", {"y"}, [Trans("x", "a", (), "y", ())],
                            real_time=True, acceptance="final_zero",
                            lambda_chain_bound=0)
    u = union_machines(m, single)
    assert validate_machine(u) == []
    assert accepts(u, "a") and accepts(u, "aabb") and not accepts(u, "ba")

    # intersect with "even length" DFA
    d = DFA({0, 1}, {"a", "b"}, 0, {0},
            {(s, c): 1 - s for s in (0, 1) for c in ("a", "b")})
    x = intersect_regular(m, d)
    assert accepts(x, "aabb") and accepts(x, "ab")
    assert not accepts(x, "aab")


def test_realtime_pad_round_trip():
    m = counting_machine()
    p = realtime_pad(m, "#", 2)
    assert validate_machine(p) == []
    assert p.real_time
    assert accepts(p, "a##a##b##b##")
    assert not accepts(p, "a##b#b##")
    assert not accepts(p, "ab")


def test_letter_morphism_image():
    m = counting_machine()
    f = LetterMorphism({"a": "01", "b": "1"})
    h = apply_letter_morphism(m, f)
    assert validate_machine(h) == []
    assert accepts(h, "01011 1".replace(" ", ""))
    assert accepts(h, "0101" + "11")
    assert accepts(h, "011")          # image of "ab"
    assert not accepts(h, "1")        # image of "b" alone
    assert not accepts(h, "0101")     # image of "aa"
    assert not accepts(h, "0111")     # image of "abb"


def test_machine_io_round_trip():
    m = counting_machine()
    text = write_machine(m)
    back = parse_machine(text)
    assert write_machine(back) == text
    for n in range(7):
        for tup in itertools.product("ab", repeat=n):
            w = "".join(tup)
            assert accepts(m, w) == accepts(back, w)


def test_word_escaping():
    w = "a" + ERASER + "b"
    assert word_in(word_out(w)) == w
    assert "BS" in word_out(w)


def test_transition_ordering_is_canonical():
    t = [Trans("b", "x", (0,), "a", (0,)), Trans("a", "x", (0,), "b", (0,))]
    m1 = CounterMachine(1, {"a", "b"}, {"x"}, "a", {"b"}, t,
                        real_time=True, acceptance="final_zero",
                        lambda_chain_bound=0)
    m2 = CounterMachine(1, {"a", "b"}, {"x"}, "a", {"b"}, t[::-1],
                        real_time=True, acceptance="final_zero",
                        lambda_chain_bound=0)
    assert m1.transitions == m2.transitions
