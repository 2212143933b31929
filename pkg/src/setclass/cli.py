"""Line-oriented command language and the ``setclass`` executable.

A script is a sequence of commands, one per line; ``#`` starts a comment.
Results print to the transcript (stdout); the first error stops the run with
a line-numbered diagnostic on stderr.

Exit status: 0 ok, 1 assertion failed, 2 parse/usage/precondition error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

from . import boolean_stone as bs
from . import encode, generate as gen, partitions as parts, ramsey, semiring_tools as semi
from . import structures as st
from .core import Partition, ResourceError, SetClass, SetClassError, SetSeq, Subset, Universe, trace
from .export import to_dot, to_json
from .setops import OpWord, apply_word, liminf_seq, lim_seq, limsup_seq

EXIT_OK, EXIT_ASSERT, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class ScriptError(Exception):
    """Parse or usage error in a command."""


class AssertionFailed(Exception):
    pass


# ---------------------------------------------------------------- literals

_LIT_TOKEN = re.compile(r"\s*([\[\]{},]|[^\s\[\]{},]+)")


def parse_nested(text: str):
    """Parse bracketed literals such as ``[{1,2},{}]``; both bracket kinds nest as lists."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _LIT_TOKEN.match(text, pos)
        if not m:
            break
        tokens.append(m.group(1))
        pos = m.end()
    closing = {"[": "]", "{": "}"}

    def parse(i):
        tok = tokens[i]
        if tok in closing:
            items = []
            i += 1
            while True:
                if i >= len(tokens):
                    raise ScriptError(f"unclosed {tok!r} in {text!r}")
                if tokens[i] == closing[tok]:
                    return items, i + 1
                if tokens[i] in ("]", "}"):
                    raise ScriptError(f"mismatched {tokens[i]!r} in {text!r}")
                item, i = parse(i)
                items.append(item)
                if i < len(tokens) and tokens[i] == ",":
                    i += 1
        if tok in ("]", "}", ","):
            raise ScriptError(f"unexpected {tok!r} in {text!r}")
        return tok, i + 1

    if not tokens:
        raise ScriptError("empty literal")
    value, end = parse(0)
    if end != len(tokens):
        raise ScriptError(f"trailing text after literal {text!r}")
    return value


def subset_from(u: Universe, item) -> Subset:
    if not isinstance(item, list) or any(isinstance(x, list) for x in item):
        raise ScriptError(f"expected a subset literal like {{1,2}}, got {item!r}")
    return u.subset(item)


def class_from(u: Universe, text: str) -> SetClass:
    if text.strip() == "powerset":
        return u.powerset()
    val = parse_nested(text)
    if not isinstance(val, list):
        raise ScriptError(f"expected a class literal like [{{1}},{{1,2}}], got {text!r}")
    return SetClass(u, tuple(subset_from(u, x).bits for x in val))


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def fmt_witness(u: Universe, w) -> str:
    out = []
    for x in w:
        out.append(str(Subset(u, x)) if isinstance(x, int) else str(x))
    return " ".join(out)


# ---------------------------------------------------------------- session


@dataclass
class Command:
    name: str
    usage: str
    summary: str
    handler: Callable


@dataclass
class Session:
    overwrite: bool = False
    base_dir: Path = field(default_factory=Path.cwd)
    bindings: dict[str, Any] = field(default_factory=dict)
    history: list[str] = field(default_factory=list)
    output: list[str] = field(default_factory=list)
    universe: Optional[Universe] = None

    def emit(self, line: str = ""):
        self.output.append(line)

    # -- binding helpers

    def bind(self, name: str, value, force: bool = False):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
            raise ScriptError(f"bad name {name!r}")
        if name in self.bindings and not (force or self.overwrite):
            raise ScriptError(f"name {name!r} is already bound (use the '!' form of the command to rebind)")
        self.bindings[name] = value

    def get(self, name: str, kind=None):
        if name not in self.bindings:
            raise ScriptError(f"unknown name {name!r}")
        v = self.bindings[name]
        if kind is not None and not isinstance(v, kind):
            want = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
            raise ScriptError(f"{name!r} is a {type(v).__name__}, expected {want}")
        return v

    def cls(self, name: str) -> SetClass:
        v = self.get(name)
        if isinstance(v, Partition):
            return v.as_class()
        if not isinstance(v, SetClass):
            raise ScriptError(f"{name!r} is a {type(v).__name__}, expected a class")
        return v

    def current_universe(self, override: Optional[str] = None) -> Universe:
        if override:
            return self.get(override, Universe)
        if self.universe is None:
            raise ScriptError("no universe defined yet")
        return self.universe

    # -- execution

    def execute(self, line: str):
        text = line.strip()
        if not text or text.startswith("#"):
            return
        word, _, rest = text.partition(" ")
        force = word.endswith("!")
        word = word.rstrip("!")
        cmd = COMMANDS.get(word)
        if cmd is None:
            raise ScriptError(f"unknown command {word!r} (try 'help')")
        self.history.append(text)
        cmd.handler(self, rest.strip(), force)


def _split_as(args: str) -> tuple[str, Optional[str]]:
    m = re.match(r"^(.*?)\s+as\s+(\S+)$", args)
    if m:
        return m.group(1).strip(), m.group(2)
    return args, None


def _split_in(args: str) -> tuple[str, Optional[str]]:
    m = re.match(r"^(\S+)\s+in\s+(\S+)\s*(=.*)$", args)
    if m:
        return f"{m.group(1)} {m.group(3)}", m.group(2)
    return args, None


def _name_eq(args: str, what: str) -> tuple[str, str]:
    m = re.match(r"^(\S+)\s*=\s*(.+)$", args)
    if not m:
        raise ScriptError(f"usage: {what} NAME [in UNIVERSE] = LITERAL")
    return m.group(1), m.group(2).strip()


def _words(args: str, count: int, usage: str) -> list[str]:
    w = args.split()
    if len(w) != count:
        raise ScriptError(f"usage: {usage}")
    return w


# ---------------------------------------------------------------- commands


def cmd_universe(s: Session, args: str, force: bool):
    w = args.split()
    if len(w) < 2:
        raise ScriptError("usage: universe NAME SIZE [LABEL ...]")
    name = w[0]
    try:
        size = int(w[1])
    except ValueError:
        raise ScriptError(f"universe size must be an integer, got {w[1]!r}") from None
    labels = tuple(w[2:]) or None
    u = Universe(name, size, labels)
    s.bind(name, u, force)
    s.universe = u
    s.emit(f"universe {name} = {u.whole()}")


def cmd_class(s: Session, args: str, force: bool):
    args, uname = _split_in(args)
    name, lit = _name_eq(args, "class")
    u = s.current_universe(uname)
    if lit in s.bindings:
        value = s.cls(lit)
    else:
        value = class_from(u, lit)
    s.bind(name, value, force)
    s.emit(f"{name} = {value}")


def cmd_partition(s: Session, args: str, force: bool):
    args, uname = _split_in(args)
    name, lit = _name_eq(args, "partition")
    u = s.current_universe(uname)
    val = parse_nested(lit)
    if not isinstance(val, list):
        raise ScriptError("partition literal must be a list of blocks")
    try:
        p = Partition(u, tuple(subset_from(u, b).bits for b in val))
    except SetClassError as exc:
        raise ScriptError(str(exc)) from None
    s.bind(name, p, force)
    s.emit(f"{name} = {p}")


def cmd_seq(s: Session, args: str, force: bool):
    args, uname = _split_in(args)
    name, lit = _name_eq(args, "seq")
    u = s.current_universe(uname)
    m = re.match(r"^(?:prefix\s+(\[.*?\])\s+)?cycle\s+(\[.*\])$", lit)
    if not m:
        raise ScriptError("usage: seq NAME = [prefix [..]] cycle [..]")
    pre = class_list(u, m.group(1)) if m.group(1) else ()
    cyc = class_list(u, m.group(2))
    seq = SetSeq(u, pre, cyc)
    s.bind(name, seq, force)
    s.emit(f"{name} = {seq}")


def class_list(u: Universe, text: str) -> tuple[int, ...]:
    """Ordered list of subsets (repeats kept), for sequences."""
    val = parse_nested(text)
    if not isinstance(val, list):
        raise ScriptError("expected a list of subsets")
    return tuple(subset_from(u, x).bits for x in val)


def cmd_print(s: Session, args: str, force: bool):
    name = _words(args, 1, "print NAME")[0]
    v = s.get(name)
    s.emit(f"{name} = {v if not isinstance(v, Universe) else v.whole()}")


def cmd_op(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    name, word = _words(args, 2, "op NAME WORD [as NEW]")
    word_obj = OpWord.parse(word)
    res = apply_word(s.cls(name), word_obj)
    note = " (finite collapse of countable operators)" if word_obj.collapsed else ""
    s.emit(f"{name}_{word_obj} = {res}{note}")
    if target:
        s.bind(target, res, force)


def _flag_line(u: Universe, key: str, flag: st.Flag) -> str:
    line = f"  {key}: {fmt_bool(flag.value)}"
    if flag.witness:
        line += f" [witness: {fmt_witness(u, flag.witness)}]"
    if flag.note:
        line += f" ({flag.note})"
    return line


def cmd_classify(s: Session, args: str, force: bool):
    name = _words(args, 1, "classify NAME")[0]
    c = s.cls(name)
    rep = st.classify(c)
    s.emit(f"classify {name}:")
    for key in sorted(rep.flags):
        s.emit(_flag_line(c.universe, key, rep.flags[key]))
    for alias, real in sorted(st.ALIASES.items()):
        s.emit(f"  {alias}: {fmt_bool(rep.flags[real].value)} (alias of {real}; {st.FINITE_COLLAPSE})")


def cmd_closure(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    kind, name = _words(args, 2, "closure KIND NAME [as NEW]")
    res = gen.generate(s.cls(name), kind)
    s.emit(f"{kind}({name}) = {res}")
    if target:
        s.bind(target, res, force)


def cmd_hierarchy(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    kind, name = _words(args, 2, "hierarchy B|SigmaPi NAME [as NEW]")
    tr = gen.hierarchy(s.cls(name), kind)
    s.emit(f"hierarchy {tr.flavor} {name}: stabilized at {tr.stabilized_at}, K = {tr.kolmogoroff_number}")
    for st_ in tr.stages:
        s.emit(f"  level {st_.level}: upper = {st_.upper}")
        s.emit(f"  level {st_.level}: lower = {st_.lower}")
        s.emit(f"  level {st_.level}: ambiguous = {st_.ambiguous}")
    if target:
        s.bind(target, tr, force)


def _meet_join(fn, label):
    def handler(s: Session, args: str, force: bool):
        args, target = _split_as(args)
        a, b = _words(args, 2, f"{label} P Q [as NEW]")
        res = fn(s.get(a, Partition), s.get(b, Partition))
        s.emit(f"{label}({a},{b}) = {res}")
        if target:
            s.bind(target, res, force)

    return handler


def cmd_refines(s: Session, args: str, force: bool):
    a, b = _words(args, 2, "refines P Q")
    s.emit(f"refines({a},{b}) = {fmt_bool(parts.refines(s.get(a, Partition), s.get(b, Partition)))}")


def cmd_lattice(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    uname = _words(args, 1, "lattice UNIVERSE [as NEW]")[0]
    nodes = parts.partition_lattice(s.get(uname, Universe))
    ncov = sum(len(n.covers) for n in nodes)
    s.emit(f"partition lattice of {uname}: {len(nodes)} partitions, {ncov} covering pairs")
    for i, n in enumerate(nodes):
        s.emit(f"  n{i} = {n.partition} covers {','.join(f'n{j}' for j in n.covers) or '-'}")
    if target:
        s.bind(target, nodes, force)


def cmd_bell(s: Session, args: str, force: bool):
    n = _words(args, 1, "bell N")[0]
    try:
        k = int(n)
    except ValueError:
        raise ScriptError(f"bell needs an integer, got {n!r}") from None
    s.emit(f"bell({k}) = {parts.bell(k)}")


def cmd_sparts(s: Session, args: str, force: bool):
    m = re.match(r"^(\S+)\s+(.+)$", args)
    if not m:
        raise ScriptError("usage: sparts NAME SUBSET")
    c = s.cls(m.group(1))
    sub = subset_from(c.universe, parse_nested(m.group(2)))
    found = list(parts.s_partitions(c, sub))
    s.emit(f"partitions of {sub} by {m.group(1)}: {len(found)}")
    for cov in found:
        s.emit("  " + "[" + ",".join(str(Subset(c.universe, b)) for b in cov) + "]")


def cmd_kol(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    name = _words(args, 1, "kol NAME [as NEW]")[0]
    res = semi.kol_ring(s.cls(name))
    s.emit(f"kol({name}) = {res}")
    if target:
        s.bind(target, res, force)


def cmd_stone(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    name = _words(args, 1, "stone NAME [as NEW]")[0]
    ring = s.cls(name)
    sp = bs.stone(ring)
    rep = bs.duality_check(ring)
    s.emit(f"stone({name}): {len(sp.points)} points, compact {fmt_bool(sp.compact)}, "
           f"reconstruction isomorphic {fmt_bool(rep.isomorphic)}")
    for i, p in enumerate(sp.points):
        s.emit(f"  p{i} = {p}")
    if target:
        s.bind(target, sp, force)


def cmd_primes(s: Session, args: str, force: bool):
    name = _words(args, 1, "primes NAME")[0]
    ps = bs.primes(s.cls(name))
    s.emit(f"primes({name}): {len(ps)}")
    for p in ps:
        s.emit(f"  {p}")


def cmd_atoms(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    name = _words(args, 1, "atoms NAME [as NEW]")[0]
    res = st.atoms(s.cls(name))
    s.emit(f"atoms({name}) = {res}")
    if target:
        s.bind(target, res, force)


def cmd_ideal(s: Session, args: str, force: bool):
    ring, ideal = _words(args, 2, "ideal RING IDEAL")
    r = s.cls(ring)
    rep = st.ideal_classify(r, s.cls(ideal))
    s.emit(f"ideal {ideal} in {ring}:")
    for key in ("is_ideal", "proper", "is_prime", "is_maximal", "is_principal"):
        s.emit(_flag_line(r.universe, key, getattr(rep, key)))


def cmd_filter(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    name = _words(args, 1, "filter NAME [as NEW]")[0]
    c = s.cls(name)
    rep = st.filter_ops(c)
    s.emit(f"filter {name}:")
    for key in ("filter", "ultrafilter", "filterbase", "has_fip"):
        s.emit(_flag_line(c.universe, key, getattr(rep, key)))
    if rep.generated is not None:
        s.emit(f"  generated = {rep.generated}")
        if target:
            s.bind(target, rep.generated, force)


def cmd_trace(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    m = re.match(r"^(\S+)\s+(.+)$", args)
    if not m:
        raise ScriptError("usage: trace NAME SUBSET [as NEW]")
    c = s.cls(m.group(1))
    x0 = subset_from(c.universe, parse_nested(m.group(2)))
    res = trace(c, x0)
    s.emit(f"trace({m.group(1)},{x0}) = {res}")
    if target:
        s.bind(target, res, force)


def cmd_localize(s: Session, args: str, force: bool):
    args, target = _split_as(args)
    name = _words(args, 1, "localize NAME [as NEW]")[0]
    res = gen.localize(s.cls(name))
    s.emit(f"localize({name}) = {res}")
    if target:
        s.bind(target, res, force)


def cmd_chi(s: Session, args: str, force: bool):
    name = _words(args, 1, "chi SEQ")[0]
    seq = s.get(name, SetSeq)
    prof = encode.chi_sequence(seq)
    vals = ", ".join(f"{seq.universe.label(i)}: {v}" for i, v in enumerate(prof.values))
    s.emit(f"chi({name}) = {vals}")
    for key in ("constant_sequence", "pairwise_disjoint", "increasing", "decreasing", "convergent"):
        s.emit(f"  {key}: {fmt_bool(getattr(prof, key))}")


def cmd_lim(s: Session, args: str, force: bool):
    name = _words(args, 1, "lim SEQ")[0]
    seq = s.get(name, SetSeq)
    lim = lim_seq(seq)
    s.emit(f"limsup({name}) = {limsup_seq(seq)}")
    s.emit(f"liminf({name}) = {liminf_seq(seq)}")
    s.emit(f"lim({name}) = {lim if lim is not None else 'does not exist'}")


def cmd_criteria(s: Session, args: str, force: bool):
    name = _words(args, 1, "criteria NAME")[0]
    rep = gen.closure_criteria_check(s.cls(name))
    s.emit(f"closure criteria for {name}:")
    for c in rep.checks:
        s.emit(f"  {c.name}: closure side {fmt_bool(c.closure_equal)}, containment side "
               f"{fmt_bool(c.containment)}, agree {fmt_bool(c.agrees)}")
    s.emit(f"  rB - Br = {rep.rb_minus_br}")
    s.emit(f"  Br - rB = {rep.br_minus_rb}")


def cmd_ramsey(s: Session, args: str, force: bool):
    args, uname = (args, None)
    m = re.match(r"^(.*?)\s+in\s+(\S+)$", args)
    if m:
        args, uname = m.group(1), m.group(2)
    w = args.split(maxsplit=3)
    if len(w) != 4:
        raise ScriptError("usage: ramsey N M K all|cycle|FILE [in UNIVERSE]")
    try:
        n, mcol, k = (int(x) for x in w[:3])
    except ValueError:
        raise ScriptError("ramsey: N, M and K must be integers") from None
    u = s.current_universe(uname)
    src = w[3]
    if src == "all":
        count, bad = ramsey.sweep(u, n, mcol, k)
        if bad is None:
            s.emit(f"ramsey {u.name} n={n} m={mcol} k={k}: all {count} colorings have a monochromatic {k}-subset")
        else:
            s.emit(f"ramsey {u.name} n={n} m={mcol} k={k}: coloring {count} has no monochromatic {k}-subset")
        return
    if src == "cycle":
        if n != 2 or mcol != 2:
            raise ScriptError("the cycle coloring colors pairs with 2 colors")
        col = ramsey.cycle_coloring(u.size)
        col = ramsey.Coloring(u, 2, 2, col.assignment)
    else:
        path = (s.base_dir / src)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ScriptError(f"cannot read coloring file {src!r}: {exc.strerror}") from None
        col = ramsey.load_coloring(u, text, mcol)
        if col.n != n:
            raise ScriptError(f"coloring file colors {col.n}-subsets, expected {n}")
    hit = ramsey.monochromatic(col, k)
    if hit is None:
        s.emit(f"ramsey {u.name} n={n} m={mcol} k={k} {src}: no monochromatic {k}-subset")
    else:
        s.emit(f"ramsey {u.name} n={n} m={mcol} k={k} {src}: monochromatic {hit[0]} color {hit[1]}")


def cmd_export(s: Session, args: str, force: bool):
    m = re.match(r"^(\S+)\s+(json|dot)(?:\s*>\s*(\S+))?$", args)
    if not m:
        raise ScriptError("usage: export NAME json|dot [> FILE]")
    name, fmt, dest = m.groups()
    v = s.get(name)
    text = to_json(v) if fmt == "json" else to_dot(v, name)
    if dest:
        (s.base_dir / dest).write_text(text + "\n")
        s.emit(f"exported {name} as {fmt} to {dest}")
    else:
        for line in text.split("\n"):
            s.emit(line)


# -- assertions


def _resolve(s: Session, text: str, hint: Optional[Universe] = None):
    text = text.strip()
    m = re.fullmatch(r"(K|bell|size|stabilized)\((\S+)\)", text)
    if m:
        fn, arg = m.groups()
        if fn == "bell":
            return parts.bell(int(arg))
        if fn == "size":
            return len(s.get(arg))
        tr = s.get(arg)
        if not isinstance(tr, gen.HierarchyTrace):
            tr = gen.hierarchy(s.cls(arg), "B")
        return tr.kolmogoroff_number if fn == "K" else tr.stabilized_at
    if re.fullmatch(r"-?\d+", text):
        return int(text)
    if text in s.bindings:
        v = s.bindings[text]
        return v
    if text.startswith("["):
        return class_from(hint or s.current_universe(), text)
    if text.startswith("{"):
        return subset_from(hint or s.current_universe(), parse_nested(text))
    raise ScriptError(f"cannot evaluate {text!r}")


def _universe_of(v) -> Optional[Universe]:
    return getattr(v, "universe", None)


def _equal(a, b) -> bool:
    if isinstance(a, Partition) and isinstance(b, SetClass):
        a = a.as_class()
    if isinstance(b, Partition) and isinstance(a, SetClass):
        b = b.as_class()
    return a == b


def evaluate_assertion(s: Session, expr: str) -> bool:
    expr = expr.strip()
    if expr.startswith("not "):
        return not evaluate_assertion(s, expr[4:])
    m = re.fullmatch(r"(\{.*?\})\s+(in|notin)\s+(\S+)", expr)
    if m:
        c = s.cls(m.group(3))
        sub = subset_from(c.universe, parse_nested(m.group(1)))
        return (sub in c) == (m.group(2) == "in")
    m = re.fullmatch(r"(.+?)\s*(==|!=)\s*(.+)", expr)
    if m:
        left = _resolve(s, m.group(1))
        right = _resolve(s, m.group(3), _universe_of(left))
        return _equal(left, right) == (m.group(2) == "==")
    m = re.fullmatch(r"(\S+)\s+subset\s+(\S+)", expr)
    if m:
        return s.cls(m.group(1)) <= s.cls(m.group(2))
    m = re.fullmatch(r"refines\s+(\S+)\s+(\S+)", expr)
    if m:
        return parts.refines(s.get(m.group(1), Partition), s.get(m.group(2), Partition))
    m = re.fullmatch(r"(\w+)\s+(\S+)", expr)
    if m:
        flag, name = m.groups()
        rep = st.classify(s.cls(name))
        try:
            return bool(getattr(rep, flag))
        except AttributeError:
            raise ScriptError(f"unknown structure flag {flag!r}") from None
    raise ScriptError(f"cannot parse assertion {expr!r}")


def cmd_assert(s: Session, args: str, force: bool):
    if not args:
        raise ScriptError("usage: assert EXPR")
    if not evaluate_assertion(s, args):
        raise AssertionFailed(f"assertion failed: {args}")
    s.emit(f"ok: {args}")


def cmd_help(s: Session, args: str, force: bool):
    name = args.strip()
    if name:
        cmd = COMMANDS.get(name)
        if cmd is None:
            raise ScriptError(f"no help for unknown command {name!r}")
        s.emit(f"{cmd.usage}")
        s.emit(f"  {cmd.summary}")
        return
    for key in sorted(COMMANDS):
        s.emit(f"{COMMANDS[key].usage:<48} {COMMANDS[key].summary}")


ASSERT_HELP = (
    "check a condition, stop with status 1 if false. Forms: {1,2} in|notin C; "
    "A == B; A != B; A subset B; refines P Q; FLAG C (any classify flag); "
    "prefix 'not' negates. A and B may be names, literals, integers, K(C), "
    "stabilized(C), bell(n) or size(C)."
)

COMMANDS: dict[str, Command] = {
    c.name: c
    for c in [
        Command("universe", "universe NAME SIZE [LABEL ...]", "define a universe and make it current", cmd_universe),
        Command("class", "class NAME [in U] = [{..},..]|powerset|NAME", "bind a class of subsets", cmd_class),
        Command("partition", "partition NAME [in U] = [[..],..]", "bind a partition of the universe", cmd_partition),
        Command("seq", "seq NAME [in U] = [prefix [..]] cycle [..]", "bind an eventually periodic sequence", cmd_seq),
        Command("print", "print NAME", "show a bound value", cmd_print),
        Command("op", "op NAME WORD [as NEW]", "apply an operator word such as rsrs, s_d, SigmaDelta", cmd_op),
        Command("classify", "classify NAME", "report every structure flag with witnesses", cmd_classify),
        Command("closure", "closure KIND NAME [as NEW]",
                "generated class; KIND is " + "|".join(gen.KINDS), cmd_closure),
        Command("hierarchy", "hierarchy B|SigmaPi NAME [as NEW]", "stagewise hierarchy and Kolmogoroff number",
                cmd_hierarchy),
        Command("meet", "meet P Q [as NEW]", "common refinement of two partitions", _meet_join(parts.meet, "meet")),
        Command("join", "join P Q [as NEW]", "finest partition refined by both", _meet_join(parts.join, "join")),
        Command("refines", "refines P Q", "whether P refines Q", cmd_refines),
        Command("lattice", "lattice U [as NEW]", "partition lattice with covering pairs", cmd_lattice),
        Command("bell", "bell N", "number of partitions of N points", cmd_bell),
        Command("sparts", "sparts NAME SUBSET", "all partitions of a member by class members", cmd_sparts),
        Command("kol", "kol NAME [as NEW]", "ring of disjoint unions of a semiring", cmd_kol),
        Command("stone", "stone NAME [as NEW]", "prime spectrum of a ring with the duality check", cmd_stone),
        Command("primes", "primes NAME", "prime ideals of a ring", cmd_primes),
        Command("atoms", "atoms NAME [as NEW]", "minimal nonempty members of a ring", cmd_atoms),
        Command("ideal", "ideal RING IDEAL", "ideal, prime, maximal and principal flags", cmd_ideal),
        Command("filter", "filter NAME [as NEW]", "filter flags and the generated filter", cmd_filter),
        Command("trace", "trace NAME SUBSET [as NEW]", "restriction of a class to a subset", cmd_trace),
        Command("localize", "localize NAME [as NEW]", "subsets whose trace stays in the class", cmd_localize),
        Command("chi", "chi SEQ", "exact base-3 encoding of a sequence with shape flags", cmd_chi),
        Command("lim", "lim SEQ", "upper and lower limits of a sequence", cmd_lim),
        Command("criteria", "criteria NAME", "closure-versus-containment criteria evaluated both ways",
                cmd_criteria),
        Command("ramsey", "ramsey N M K all|cycle|FILE [in U]",
                "monochromatic K-subsets for M-colorings of N-subsets", cmd_ramsey),
        Command("export", "export NAME json|dot [> FILE]", "canonical JSON or DOT rendering", cmd_export),
        Command("assert", "assert EXPR", ASSERT_HELP, cmd_assert),
        Command("help", "help [COMMAND]", "list commands or describe one", cmd_help),
    ]
}


# ---------------------------------------------------------------- runner


@dataclass
class RunResult:
    status: int
    transcript: str
    diagnostic: str = ""


def run_lines(lines, source: str = "<script>", overwrite: bool = False, base_dir: Optional[Path] = None) -> RunResult:
    s = Session(overwrite=overwrite, base_dir=base_dir or Path.cwd())
    status, diag = EXIT_OK, ""
    for lineno, line in enumerate(lines, 1):
        try:
            s.execute(line)
        except AssertionFailed as exc:
            status, diag = EXIT_ASSERT, f"{source}:{lineno}: {exc}"
        except ResourceError as exc:
            status, diag = EXIT_RESOURCE, f"{source}:{lineno}: error: {exc}"
        except (ScriptError, SetClassError) as exc:
            status, diag = EXIT_USAGE, f"{source}:{lineno}: error: {exc}"
        if status:
            break
    text = "\n".join(s.output)
    return RunResult(status, text + "\n" if text else "", diag)


def run_script(path) -> RunResult:
    p = Path(path)
    try:
        lines = p.read_text().splitlines()
    except OSError as exc:
        return RunResult(EXIT_USAGE, "", f"{path}: error: {exc.strerror}")
    return run_lines(lines, str(path), base_dir=p.parent)


def _emit(res: RunResult, out=None):
    out = out or sys.stdout
    out.write(res.transcript)
    if res.diagnostic:
        print(res.diagnostic, file=sys.stderr)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="setclass", description="Finite set-class algebra workbench.")
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run script files in order, one session each")
    run.add_argument("scripts", nargs="+", help="script paths, or - for stdin")
    run.add_argument("--overwrite", action="store_true", help="allow rebinding names without '!'")
    ev = sub.add_parser("eval", help="run commands given on the command line, in one session")
    ev.add_argument("lines", nargs="+")
    ev.add_argument("--overwrite", action="store_true")
    hp = sub.add_parser("help", help="describe the command language")
    hp.add_argument("topic", nargs="?")
    args = ap.parse_args(argv)

    if args.command == "help":
        res = run_lines([f"help {args.topic or ''}"], "<help>")
        _emit(res)
        return res.status
    if args.command == "eval":
        res = run_lines(args.lines, "<eval>", overwrite=args.overwrite)
        _emit(res)
        return res.status
    status = EXIT_OK
    for path in args.scripts:
        if path == "-":
            res = run_lines(sys.stdin.read().splitlines(), "<stdin>", overwrite=args.overwrite)
        else:
            p = Path(path)
            try:
                lines = p.read_text().splitlines()
            except OSError as exc:
                print(f"{path}: error: {exc.strerror}", file=sys.stderr)
                return EXIT_USAGE
            res = run_lines(lines, path, overwrite=args.overwrite, base_dir=p.parent)
        _emit(res)
        if res.status:
            return res.status
    return status


if __name__ == "__main__":
    sys.exit(main())
