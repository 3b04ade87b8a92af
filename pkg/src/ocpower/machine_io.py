"""Line-oriented textual machine format.

    kcm k=<int> alphabet=<comma-list> real_time=<0|1> accept=<final|final_zero> lambda_bound=<int>
    state <name> [initial] [final]
    trans <q> <letter|EPS> <zero-pattern> <q'> <delta-vector>

The eraser letter is written BS.  For k = 0 the zero-pattern and delta-vector
are written as "-".  Unknown directives are rejected.  States with structured
internal identities are renamed s0, s1, ... on write (initial state first,
then sorted), so writing is deterministic but not name-preserving.
"""

from .machines import ERASER, CounterMachine, Trans


class MachineFormatError(ValueError):
    pass


def letter_out(ch):
    return "BS" if ch == ERASER else ch


def letter_in(tok):
    return ERASER if tok == "BS" else tok


def word_out(w):
    return "".join(letter_out(ch) for ch in w)


def word_in(s):
    return s.replace("BS", ERASER)


def write_machine(m):
    names = {}
    order = [m.initial] + sorted((q for q in m.states if q != m.initial),
                                 key=repr)
    for i, q in enumerate(order):
        names[q] = "s%d" % i
    lines = []
    lines.append("kcm k=%d alphabet=%s real_time=%d accept=%s lambda_bound=%d"
                 % (m.k, ",".join(letter_out(a) for a in sorted(m.alphabet)),
                    1 if m.real_time else 0,
                    "final_zero" if m.acceptance == "final_zero" else "final",
                    m.lambda_chain_bound))
    for q in order:
        flags = ""
        if q == m.initial:
            flags += " initial"
        if q in m.finals:
            flags += " final"
        lines.append("state %s%s" % (names[q], flags))
    def fmt_vec(vec, digits=False):
        if not vec:
            return "-"
        if digits:
            return "".join(str(x) for x in vec)
        return ",".join(str(x) for x in vec)
    for t in sorted(m.transitions,
                    key=lambda t: (names[t.src], t.letter or "", t.pattern,
                                   names[t.dst], t.delta)):
        lines.append("trans %s %s %s %s %s"
                     % (names[t.src],
                        "EPS" if t.letter is None else letter_out(t.letter),
                        fmt_vec(t.pattern, digits=True),
                        names[t.dst], fmt_vec(t.delta)))
    return "\n".join(lines) + "\n"


def parse_machine(text):
    header = None
    states = {}
    initial = None
    finals = set()
    transitions = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "kcm":
            if header is not None:
                raise MachineFormatError("line %d: duplicate kcm header" % ln)
            header = {}
            for item in parts[1:]:
                if "=" not in item:
                    raise MachineFormatError("line %d: bad header item %r" % (ln, item))
                key, val = item.split("=", 1)
                header[key] = val
            for key in ("k", "alphabet", "real_time", "accept", "lambda_bound"):
                if key not in header:
                    raise MachineFormatError("line %d: missing header key %r" % (ln, key))
        elif parts[0] == "state":
            if len(parts) < 2:
                raise MachineFormatError("line %d: state needs a name" % ln)
            name = parts[1]
            states[name] = True
            for flag in parts[2:]:
                if flag == "initial":
                    if initial is not None:
                        raise MachineFormatError("line %d: second initial state" % ln)
                    initial = name
                elif flag == "final":
                    finals.add(name)
                else:
                    raise MachineFormatError("line %d: unknown state flag %r" % (ln, flag))
        elif parts[0] == "trans":
            if len(parts) != 6:
                raise MachineFormatError("line %d: trans needs 5 fields" % ln)
            src, letter_tok, pat_tok, dst, delta_tok = parts[1:]
            letter = None if letter_tok == "EPS" else letter_in(letter_tok)
            if pat_tok == "-":
                pattern = ()
            else:
                if not all(c in "01" for c in pat_tok):
                    raise MachineFormatError("line %d: bad zero-pattern %r" % (ln, pat_tok))
                pattern = tuple(int(c) for c in pat_tok)
            if delta_tok == "-":
                delta = ()
            else:
                try:
                    delta = tuple(int(x) for x in delta_tok.split(","))
                except ValueError:
                    raise MachineFormatError("line %d: bad delta vector %r" % (ln, delta_tok))
            transitions.append(Trans(src, letter, pattern, dst, delta))
        else:
            raise MachineFormatError("line %d: unknown directive %r" % (ln, parts[0]))
    if header is None:
        raise MachineFormatError("missing kcm header")
    if initial is None:
        raise MachineFormatError("no initial state")
    try:
        k = int(header["k"])
        lam_bound = int(header["lambda_bound"])
        rt = int(header["real_time"])
    except ValueError:
        raise MachineFormatError("non-integer header field")
    if header["accept"] not in ("final", "final_zero"):
        raise MachineFormatError("bad accept mode %r" % header["accept"])
    alphabet = {letter_in(tok) for tok in header["alphabet"].split(",") if tok}
    unknown = {t.src for t in transitions} | {t.dst for t in transitions}
    unknown -= set(states)
    if unknown:
        raise MachineFormatError("transitions reference unknown states %s"
                                 % sorted(unknown))
    return CounterMachine(k, set(states), alphabet, initial, finals, transitions,
                          real_time=bool(rt),
                          acceptance=header["accept"],
                          lambda_chain_bound=lam_bound)


def load_machine(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_machine(fh.read())


def save_machine(m, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_machine(m))
