"""Command-line front end.

Exit codes: 0 pass, 1 property violated, 2 usage or horizon error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import extension as ext
from . import rauzy as rz
from .errors import HorizonExceeded, NoSpecialVertex, TreeSetError
from .freegroup import GroupElement, is_basis_of_free_group, rank, subgroup_graph
from .generators import default_prefix_len, load_source
from .graphs import quotient
from .returns import (first_return_words, first_return_words_oracle,
                      shortest_bispecial_extension)
from .words import Alphabet, read_word_set

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    source: str | None
    max_len: int
    horizon: int
    order: int | None = None
    out_dir: str | None = None
    emit_dot: bool = False
    oracle: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.horizon < 4 * self.max_len + 8:
            raise ValueError(f"horizon {self.horizon} < 4m+8 = {4 * self.max_len + 8}")


def default_horizon(m: int, n: int | None = None) -> int:
    return max(4 * m + 8, 12 * m, (n or 0) + 2)


class Reporter:
    def __init__(self, out=None):
        self.out = out or sys.stdout

    def __call__(self, *lines):
        for line in lines:
            print(line, file=self.out)


def _fmt_vertex(alphabet: Alphabet):
    def fmt(v):
        if isinstance(v, frozenset):
            return "{" + ",".join(sorted(fmt(u) for u in v)) + "}"
        if isinstance(v, tuple) and all(isinstance(a, int) for a in v):
            return alphabet.format(v) or "ε"
        return str(v)
    return fmt


def _word(alphabet: Alphabet, w) -> str:
    return alphabet.format(w) or "ε"


def _write(cfg: RunConfig, name: str, text: str):
    os.makedirs(cfg.out_dir, exist_ok=True)
    with open(os.path.join(cfg.out_dir, name), "w") as fh:
        fh.write(text)


def _factor_set(cfg: RunConfig):
    return load_source(cfg.source).factor_set(cfg.horizon)


def cmd_check_tree(cfg: RunConfig, say: Reporter) -> int:
    F = _factor_set(cfg)
    report = ext.check_tree_condition(F, cfg.max_len)
    if report.ok:
        say(f"ok: tree condition holds for all {report.checked} words of length <= {cfg.max_len}")
        return EXIT_OK
    word = _word(F.alphabet, report.word)
    say(f"counterexample: {word}",
        report.graph.to_dot(lambda w: _word(F.alphabet, w), name="extension").rstrip())
    return EXIT_FAIL


def return_set_rows(F, m: int, source=None, oracle: bool = False) -> list:
    """One row per word of length <= m: (word, size, basis, type tag, status)."""
    k = len(F.letters())
    prefix = source.prefix(default_prefix_len(F.max_len)) if oracle else None
    rows = []
    for x in F.words_up_to(m):
        word = _word(F.alphabet, x)
        try:
            R = first_return_words(F, x)
        except HorizonExceeded as exc:
            rows.append((word, "-", "-", "-", f"SKIP: {exc}"))
            continue
        basis = is_basis_of_free_group(R.words, k)
        tag = _type_tag(F, x)
        ok = len(R) == k and basis
        status = "pass" if ok else "fail"
        if oracle and first_return_words_oracle(prefix, x) != R.as_set():
            status = "fail: oracle disagrees"
        rows.append((word, str(len(R)), "yes" if basis else "no", tag, status))
    return rows


def _type_tag(F, x) -> str:
    try:
        _, _, y = shortest_bispecial_extension(F, x)
        G = rz.rauzy_graph(F, len(y))
        return rz.classify_type(rz.type_graph(G), y).tag
    except (TreeSetError, ValueError):
        return "-"


def cmd_verify_theorem(cfg: RunConfig, say: Reporter) -> int:
    F = _factor_set(cfg)
    rows = return_set_rows(F, cfg.max_len, load_source(cfg.source), cfg.oracle)
    say("word\t|R|\tbasis\ttype\tstatus")
    for row in rows:
        say("\t".join(row))
    if any(r[4].startswith("fail") for r in rows):
        return EXIT_FAIL
    if any(r[4].startswith("SKIP") for r in rows):
        return EXIT_USAGE
    return EXIT_OK


def cmd_rauzy(cfg: RunConfig, say: Reporter) -> int:
    F = _factor_set(cfg)
    n = cfg.order
    G = rz.rauzy_graph(F, n)
    fmt = _fmt_vertex(F.alphabet)
    dot = G.as_labeled().to_dot(F.alphabet.format, f"rauzy_{n}", fmt)
    strong = rz.is_strongly_connected(G)
    say(f"# order {n}: {len(G.vertices)} vertices, {len(G.edges)} edges, "
        f"strongly connected: {'yes' if strong else 'no'}")
    if n >= 1:
        classes = rz.theta_equivalence(F, n)
        say("# theta classes: " + " ".join("{" + ",".join(fmt(w) for w in c) + "}"
                                          for c in classes))
        q = quotient(G.as_labeled(), classes)
        iso = rz.graphs_isomorphic(q, rz.rauzy_graph(F, n - 1).as_labeled())
        say(f"# quotient isomorphic to G_{n - 1}: {'yes' if iso else 'no'}")
    if cfg.emit_dot:
        _write(cfg, f"rauzy_{n}.dot", dot)
        try:
            T = rz.type_graph(G)
            _write(cfg, f"type_{n}.dot", T.to_dot(F.alphabet.format, f"type_{n}", fmt))
        except NoSpecialVertex:
            pass
    else:
        say(dot.rstrip())
    return EXIT_OK if strong else EXIT_FAIL


def cmd_fold(cfg: RunConfig, say: Reporter, gens_path: str | None = None,
             alphabet: str | None = None) -> int:
    if gens_path:
        with open(gens_path) as fh:
            text = fh.read()
        lines = [l.split("#", 1)[0].strip() for l in text.splitlines()]
        lines = [l for l in lines if l]
        letters = alphabet or "".join(sorted({c for l in lines for c in l if c != "'"}))
        A = Alphabet.of(letters)
        gens = [GroupElement.parse(l, A) for l in lines]
        sg = subgroup_graph(gens, A)
        say(sg.to_labeled().to_dot(A.format, "folded").rstrip())
        basis = is_basis_of_free_group(gens, A)
        say(f"basis: {'yes' if basis else 'no'} rank: {rank(sg)}")
        return EXIT_OK if basis else EXIT_FAIL
    F = _factor_set(cfg)
    n = cfg.order
    G = rz.rauzy_graph(F, n).as_labeled()
    G = G.with_base(G.vertices[0])
    folded = rz.stallings_fold(G)
    fmt = _fmt_vertex(F.alphabet)
    dot = folded.to_dot(F.alphabet.format, f"folded_{n}", fmt)
    k = len(F.letters())
    is_rose = rz.is_rose(folded, k)
    sg = rz.fold_to_stallings(G)
    if cfg.emit_dot:
        _write(cfg, f"folded_{n}.dot", dot)
    else:
        say(dot.rstrip())
    say(f"rose: {'yes' if is_rose else 'no'} rank: {rank(sg)}")
    return EXIT_OK if is_rose else EXIT_FAIL


def cmd_classify(cfg: RunConfig, say: Reporter) -> int:
    F = _factor_set(cfg)
    n = cfg.order
    G = rz.rauzy_graph(F, n)
    try:
        T = rz.type_graph(G)
    except NoSpecialVertex as exc:
        say(f"periodic: {exc}")
        return EXIT_FAIL
    fmt = _fmt_vertex(F.alphabet)
    if cfg.emit_dot:
        _write(cfg, f"type_{n}.dot", T.to_dot(F.alphabet.format, f"type_{n}", fmt))
    results = rz.classify_rauzy(G)
    if not results:
        say(f"no bispecial vertex at order {n}")
        return EXIT_OK
    for tc in results:
        say(f"{tc.tag} bispecial={fmt(tc.bispecial_vertex)}")
        if tc.witness:
            say("  " + " ".join(f"{k}={F.alphabet.format(v)}" for k, v in sorted(tc.witness.items())))
    return EXIT_FAIL if any(tc.tag == "Other" for tc in results) else EXIT_OK


def cmd_returns(cfg: RunConfig, say: Reporter, word: str) -> int:
    src = load_source(cfg.source)
    F = src.factor_set(cfg.horizon)
    x = F.parse(word if word not in ("ε", "-") else "")
    R = first_return_words(F, x)
    for r in R:
        say(F.format(r))
    say(f"# horizon: {R.horizon_used} of {F.max_len}")
    if cfg.oracle:
        oracle = first_return_words_oracle(src.prefix(default_prefix_len(F.max_len)), x)
        agree = oracle == R.as_set()
        say(f"# oracle: {'agrees' if agree else 'DISAGREES'}")
        return EXIT_OK if agree else EXIT_FAIL
    return EXIT_OK


def cmd_complexity(cfg: RunConfig, say: Reporter) -> int:
    F = _factor_set(cfg)
    say("n\tp(n)")
    for n in range(cfg.max_len + 1):
        say(f"{n}\t{ext.complexity(F, n)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-m", "--max-len", type=int, default=6)
    common.add_argument("-n", "--order", type=int, default=1)
    common.add_argument("--horizon", type=int)
    common.add_argument("--emit-dot", metavar="DIR")
    common.add_argument("--oracle", action="store_true")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="treeset", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check-tree", "verify-theorem", "rauzy", "classify", "complexity"):
        sub.add_parser(name, parents=[common]).add_argument("source")
    fold = sub.add_parser("fold", parents=[common])
    fold.add_argument("source", nargs="?")
    fold.add_argument("--gens", metavar="FILE")
    fold.add_argument("--alphabet")
    ret = sub.add_parser("returns", parents=[common])
    ret.add_argument("source")
    ret.add_argument("word", nargs="?")
    ret.add_argument("--check-theorem", action="store_true")
    return p


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    say = Reporter(out)
    m = args.max_len
    try:
        cfg = RunConfig(
            command=args.command,
            source=args.source,
            max_len=m,
            horizon=args.horizon if args.horizon is not None else default_horizon(m, args.order),
            order=args.order,
            out_dir=args.emit_dot,
            emit_dot=args.emit_dot is not None,
            oracle=args.oracle,
            seed=args.seed,
        )
        if args.command == "fold":
            if not args.gens and not args.source:
                raise ValueError("fold needs a source or --gens FILE")
            return cmd_fold(cfg, say, args.gens, args.alphabet)
        if args.command == "returns":
            if args.check_theorem:
                return cmd_verify_theorem(cfg, say)
            if args.word is None:
                raise ValueError("returns needs a word (or --check-theorem)")
            return cmd_returns(cfg, say, args.word)
        handler = {
            "check-tree": cmd_check_tree,
            "verify-theorem": cmd_verify_theorem,
            "rauzy": cmd_rauzy,
            "classify": cmd_classify,
            "complexity": cmd_complexity,
        }[args.command]
        return handler(cfg, say)
    except (TreeSetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
