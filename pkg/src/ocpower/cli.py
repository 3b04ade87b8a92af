"""Command-line entry point.

Exit codes: 0 success (and `accept` verdict true), 1 `accept` verdict false
or suite failure, 2 usage error, 3 malformed input file, 4 unsupported
construction.  Words on the command line use the two-letter sequence "BS"
for the backspace letter.
"""

import argparse
import sys

from . import acceptance, codings, eraser, omega, pi_pipeline, sigma_pipeline
from .machine_io import (MachineFormatError, load_machine, save_machine,
                         word_in, word_out, write_machine)
from .machines import LanguageOracle, accepts, enumerate_accepted
from .walker import WordOracle, crosscheck

USAGE_ERROR, FILE_ERROR, UNSUPPORTED = 2, 3, 4


def _build_parser():
    p = argparse.ArgumentParser(prog="ocpower")
    sub = p.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("build-pn", help="build the level-n multiplicative "
                       "side machine")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--out", help="write the machine to this file")
    b.add_argument("--no-reduce", action="store_true")

    b = sub.add_parser("build-sn", help="build the level-n additive side "
                       "machine")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--out")
    b.add_argument("--no-reduce", action="store_true")

    b = sub.add_parser("accept", help="decide membership; exit code is the "
                       "verdict")
    b.add_argument("--machine", required=True)
    b.add_argument("--word", required=True)

    b = sub.add_parser("enumerate", help="list accepted words up to a "
                       "length")
    b.add_argument("--machine", required=True)
    b.add_argument("--max-len", type=int, required=True)

    b = sub.add_parser("crosscheck", help="machine vs definitional oracle "
                       "over all words up to a length")
    b.add_argument("--which", required=True,
                   choices=["script-l", "mu-five", "mu0", "mu1", "mu2",
                            "pi0", "pi1", "pn3", "sn3"])
    b.add_argument("--max-len", type=int, required=True)

    b = sub.add_parser("eraser", help="evaluate backspaces")
    b.add_argument("action", choices=["eval"])
    b.add_argument("--mode", choices=["tilde", "approx"], required=True)
    b.add_argument("--word", required=True)

    b = sub.add_parser("pair")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--p", type=int, required=True)
    b = sub.add_parser("unpair")
    b.add_argument("--q", type=int, required=True)

    b = sub.add_parser("encode-g")
    b.add_argument("--N", type=int, required=True)
    b.add_argument("--l", type=int, required=True)
    b.add_argument("--prefix", default="")
    b = sub.add_parser("decode-g")
    b.add_argument("--word", required=True)

    b = sub.add_parser("phi", help="block homeomorphism")
    b.add_argument("action", choices=["encode", "decode"])
    b.add_argument("--l", type=int, required=True)
    b.add_argument("--alpha", help="binary sequence (encode)")
    b.add_argument("--word", help="separator-structured word (decode)")

    b = sub.add_parser("factorize")
    b.add_argument("--word", required=True)
    b.add_argument("--oracle", required=True,
                   choices=["p1", "p2", "l3", "mu0", "mu1", "mu2", "pi0"])
    b.add_argument("--limit", type=int, default=100)

    b = sub.add_parser("upword", help="ultimately periodic membership")
    b.add_argument("--stem", default="")
    b.add_argument("--period", required=True)
    b.add_argument("--machine", help="counter machine file (bounded search)")
    b.add_argument("--base", choices=["p1", "p2"],
                   help="built-in regular base (exact)")
    b.add_argument("--counter-cap", type=int, default=64)
    b.add_argument("--unroll-cap", type=int, default=20000)

    b = sub.add_parser("classify", help="case analysis of a finite tiling")
    b.add_argument("--factors", required=True,
                   help="file with one factor word per line")

    b = sub.add_parser("suite", help="run the acceptance battery")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--only", help="comma-separated criterion numbers")
    b.add_argument("--timings", action="store_true")
    return p


_ORACLES = {
    "p1": lambda w: w == "0",
    "p2": lambda w: bool(w) and set(w[:-1]) <= {"0"} and w[-1] == "1",
    "l3": eraser.in_l3,
    "mu0": sigma_pipeline.mu0_oracle,
    "mu1": sigma_pipeline.mu1_oracle,
    "mu2": sigma_pipeline.mu2_oracle,
    "pi0": sigma_pipeline.pi0_oracle,
}

_ORACLE_ALPHABETS = {
    "p1": "01", "p2": "01", "l3": ("a", "b", eraser.ERASER),
    "mu0": "0123", "mu1": "0123", "mu2": "0123", "pi0": "0123",
}


def _emit_artifact(art, out):
    for stage in art.stages:
        print("stage %-18s states=%d transitions=%d"
              % (stage["stage"], stage["states"], stage["transitions"]))
    m = art.machine
    print("machine label=%s states=%d transitions=%d k=%d real_time=%s"
          % (art.label, len(m.states), len(m.transitions), m.k,
             m.real_time))
    if out:
        save_machine(m, out)
        print("written %s" % out)


def _cmd_crosscheck(args):
    which = args.which
    if which in ("script-l", "mu-five"):
        sub = pi_pipeline.a0_machine()
        mk = pi_pipeline.DEFAULT_MARKERS
        alpha = sorted(sub.alphabet | set(mk))
        if which == "script-l":
            m = pi_pipeline.script_l_machine(sub, mk)
            orc = WordOracle(
                lambda w: pi_pipeline.script_l_oracle(sub, w, mk),
                prune_dfa=pi_pipeline.script_l_shape_dfa(sub.alphabet, mk))
        else:
            m = pi_pipeline.mu_five_machine(sub.alphabet, mk)
            orc = WordOracle(
                lambda w: pi_pipeline.mu_five_oracle(w, sub.alphabet, mk),
                prune_dfa=pi_pipeline.mu_five_shape_dfa(sub.alphabet, mk))
        sinks = None
    elif which in ("mu0", "mu1", "mu2", "pi0", "pi1"):
        alpha = sorted(sigma_pipeline.ALPH4)
        builders = {"mu0": sigma_pipeline.mu0_machine,
                    "mu1": sigma_pipeline.mu1_machine,
                    "mu2": sigma_pipeline.mu2_machine,
                    "pi0": sigma_pipeline.pi0_machine}
        if which == "pi1":
            m = sigma_pipeline.pi1_machine(sigma_pipeline.exists_one_machine())
            orc = WordOracle(lambda w: sigma_pipeline.pi1_oracle(
                w, sigma_pipeline.exists_one_oracle),
                prune_dfa=sigma_pipeline.pi1_prefix_dfa())
            sinks = None
        else:
            m = builders[which]()
            oracle = _ORACLES.get(which, sigma_pipeline.pi0_oracle)
            closed = which.startswith("mu")
            orc = WordOracle(oracle,
                             forever_fn=oracle if closed else None,
                             prune_dfa=None if closed
                             else sigma_pipeline.pi0_prefix_dfa())
            sinks = sigma_pipeline.accepting_sinks(m) if closed else None
    elif which == "pn3":
        art = pi_pipeline.build_pn(3)
        m = art.machine
        alpha = sorted(m.alphabet)
        orc = WordOracle(pi_pipeline.pn_oracle(art))
        sinks = None
    else:  # sn3
        art = sigma_pipeline.build_sn(3)
        m = art.machine
        alpha = sorted(m.alphabet)
        forever = lambda w: (sigma_pipeline.mu0_oracle(w)
                             or sigma_pipeline.mu1_oracle(w)
                             or sigma_pipeline.mu2_oracle(w))
        orc = WordOracle(sigma_pipeline.sn_oracle(art), forever_fn=forever)
        sinks = sigma_pipeline.accepting_sinks(m)
    res = crosscheck(m, orc, alpha, args.max_len, machine_sinks=sinks)
    print("compared=%d mismatches=%d" % (res.compared, len(res.mismatches)))
    for w in res.mismatches[:20]:
        print("mismatch %s" % word_out(w))
    return 0 if not res.mismatches else 1


def run(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0,) else 0

    try:
        if args.cmd == "build-pn":
            art = pi_pipeline.build_pn(args.n,
                                       reduce_stages=not args.no_reduce)
            _emit_artifact(art, args.out)
            return 0
        if args.cmd == "build-sn":
            art = sigma_pipeline.build_sn(args.n,
                                          reduce_stages=not args.no_reduce)
            _emit_artifact(art, args.out)
            return 0
        if args.cmd == "accept":
            m = load_machine(args.machine)
            verdict = accepts(m, word_in(args.word))
            print("accept" if verdict else "reject")
            return 0 if verdict else 1
        if args.cmd == "enumerate":
            m = load_machine(args.machine)
            for w in enumerate_accepted(m, args.max_len):
                print(word_out(w))
            return 0
        if args.cmd == "crosscheck":
            return _cmd_crosscheck(args)
        if args.cmd == "eraser":
            w = word_in(args.word)
            if args.mode == "tilde":
                print(word_out(eraser.eval_tilde(w)))
            else:
                res = eraser.eval_approx(w)
                print("UNDERFLOW" if not isinstance(res, str)
                      else word_out(res))
            return 0
        if args.cmd == "pair":
            print(codings.pair(args.n, args.p))
            return 0
        if args.cmd == "unpair":
            n, p = codings.unpair(args.q)
            print("%d %d" % (n, p))
            return 0
        if args.cmd == "encode-g":
            p = codings.GParams(args.N, args.l)
            print(codings.encode_g(p, args.prefix))
            return 0
        if args.cmd == "decode-g":
            res = codings.decode_g(args.word)
            if res == codings.NOT_IN_RANGE:
                print("not-in-range")
                return 1
            p, prefix = res
            print("N=%d l=%d prefix=%s" % (p.N, p.l, prefix))
            return 0
        if args.cmd == "phi":
            if args.action == "encode":
                if args.alpha is None:
                    print("phi encode needs --alpha", file=sys.stderr)
                    return USAGE_ERROR
                d = codings.phi_inverse(args.alpha, args.l)
                print(codings.serialize_k_prefix(d))
            else:
                if args.word is None:
                    print("phi decode needs --word", file=sys.stderr)
                    return USAGE_ERROR
                d = _parse_k_prefix(args.word, args.l)
                print(codings.phi_forward(d))
            return 0
        if args.cmd == "factorize":
            oracle = _ORACLES[args.oracle]
            w = word_in(args.word)
            for f in omega.factorizations(w, oracle, args.limit):
                print("cuts %s  factors %s"
                      % (",".join(map(str, f.interior)) or "-",
                         " ".join(word_out(x) for x in f.factors(w))))
            return 0
        if args.cmd == "upword":
            x = omega.UPWord(word_in(args.stem), word_in(args.period))
            if args.base:
                dfa = _base_dfa(args.base)
                verdict = omega.up_membership_regular(x, dfa)
                print("yes" if verdict else "no")
                return 0 if verdict else 1
            if not args.machine:
                print("upword needs --machine or --base", file=sys.stderr)
                return USAGE_ERROR
            m = load_machine(args.machine)
            v = omega.up_membership_bounded(x, m, args.counter_cap,
                                            args.unroll_cap)
            print(v.kind if v.kind != "no" else "no (bounded)")
            if v.kind == "yes":
                print("certificate %s" % _trace(v.certificate))
            elif v.reason:
                print("reason %s" % v.reason)
            return 0 if v.kind == "yes" else 1
        if args.cmd == "classify":
            try:
                with open(args.factors) as fh:
                    factors = [word_in(line.strip()) for line in fh
                               if line.strip()]
            except OSError as exc:
                print("cannot read factors file: %s" % exc, file=sys.stderr)
                return FILE_ERROR
            case = sigma_pipeline.claim2_classify(factors)
            print(case)
            return 0
        if args.cmd == "suite":
            only = None
            if args.only:
                only = tuple(int(x) for x in args.only.split(","))
            report = acceptance.run_suite(seed=args.seed, only=only,
                                          timings=args.timings)
            sys.stdout.write(report)
            return 0 if report.splitlines()[-1].startswith("result=pass") \
                else 1
    except pi_pipeline.UnsupportedLevel as exc:
        print("unsupported: %s" % exc, file=sys.stderr)
        return UNSUPPORTED
    except (MachineFormatError, FileNotFoundError, IsADirectoryError) as exc:
        print("bad input file: %s" % exc, file=sys.stderr)
        return FILE_ERROR
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    parser.error("unknown command")


def _parse_k_prefix(w, l):
    blocks = []
    i = 0
    m = 0 if l == 0 else 1
    while i < len(w):
        if l == 0:
            want_sep = "2" if m % 2 == 0 else "3"
        else:
            want_sep = "3" if m % 2 == 1 else "2"
        if w[i] != want_sep:
            raise ValueError("expected separator %s before block %d"
                             % (want_sep, m))
        i += 1
        n = codings.block_length(l, m)
        s = w[i:i + n]
        if len(s) < n:
            raise ValueError("block %d incomplete" % m)
        blocks.append(s)
        i += n
        m += 1
    return codings.DiagonalPrefix(l, tuple(blocks))


def _base_dfa(name):
    from .machines import DFA
    if name == "p1":
        return DFA({"a", "b", "d"}, {"0", "1"}, "a", {"b"},
                   {("a", "0"): "b", ("a", "1"): "d", ("b", "0"): "d",
                    ("b", "1"): "d", ("d", "0"): "d", ("d", "1"): "d"})
    return DFA({"s", "f", "d"}, {"0", "1"}, "s", {"f"},
               {("s", "0"): "s", ("s", "1"): "f", ("f", "0"): "d",
                ("f", "1"): "d", ("d", "0"): "d", ("d", "1"): "d"})


def _trace(cert):
    head, cycle = cert

    def step(s):
        if s[0] == "reset":
            return "reset"
        t = s[1]
        letter = "-" if t.letter is None else t.letter
        return "%s:%s->%s" % (letter, t.src, t.dst)
    return ("head[%s] cycle[%s]"
            % (" ".join(step(s) for s in head),
               " ".join(step(s) for s in cycle)))


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
