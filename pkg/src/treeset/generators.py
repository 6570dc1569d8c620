"""Word sources: substitution fixed points, block decodings, factor sets."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import NotProlongable, StabilizationFailed, TooManyBlocks
from .words import EMPTY, Alphabet, FactorSet, Word

PREFIX_ENV = "TREESET_PREFIX_LEN"


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    images: tuple  # images[a] is the Word f(a)

    def __post_init__(self):
        images = tuple(tuple(im) for im in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.alphabet):
            raise ValueError("need exactly one image per letter")
        if any(not im for im in images):
            raise ValueError("images must be nonempty")

    def __call__(self, word: Word) -> Word:
        return tuple(b for a in word for b in self.images[a])

    def is_prolongable(self, seed: int) -> bool:
        im = self.images[seed]
        return len(im) >= 2 and im[0] == seed

    @classmethod
    def parse(cls, rules: str) -> "Substitution":
        """Build from ``a=ab,b=a`` style text; letters ordered as listed."""
        pairs = []
        for part in rules.split(","):
            lhs, sep, rhs = part.partition("=")
            if not sep or len(lhs.strip()) != 1:
                raise ValueError(f"bad rule {part!r}")
            pairs.append((lhs.strip(), rhs.strip()))
        alphabet = Alphabet.of(lhs for lhs, _ in pairs)
        return cls(alphabet, tuple(alphabet.parse(rhs) for _, rhs in pairs))


def fixed_point_prefix(s: Substitution, seed: int, min_len: int) -> Word:
    """A prefix of length >= min_len of the fixed point f^ω(seed)."""
    if not s.is_prolongable(seed):
        raise NotProlongable(f"f({s.alphabet.symbols[seed]}) does not start with it "
                             "or has length < 2")
    return _iterate(s, seed, max(min_len, 1))


@lru_cache(maxsize=64)
def _iterate(s: Substitution, seed: int, min_len: int) -> Word:
    w = (seed,)
    while len(w) < min_len:
        w = s(w)
    return w


def block_decode(w: Word, k: int, names: Alphabet, table: dict | None = None) -> Word:
    """Recode `w` by non-overlapping blocks of length k.

    Blocks get names in order of first appearance unless `table` maps each
    block (a Word) to a name index.  A trailing partial block is dropped.
    """
    w = tuple(w)
    if k < 1 or len(w) < k:
        raise ValueError("need 1 <= k <= len(w)")
    table = dict(table) if table else {}
    auto = not table
    out = []
    for i in range(0, len(w) - k + 1, k):
        block = w[i:i + k]
        if block not in table:
            if not auto:
                raise TooManyBlocks(f"block {block} missing from the decoding table")
            if len(table) >= len(names):
                raise TooManyBlocks(f"more than {len(names)} distinct blocks of length {k}")
            table[block] = len(table)
        out.append(table[block])
    return tuple(out)


def _windows(p: Word, n: int) -> set:
    return {p[i:i + n] for i in range(len(p) - n + 1)}


def factor_set_from_prefix(p: Word, L: int, alphabet: Alphabet | None = None,
                           source_tag: str = "") -> FactorSet:
    """All factors of length <= L of the prefix `p`, with a stabilization check.

    The length-L factors of p and of its first half must coincide, and p
    needs at least 4L letters; otherwise StabilizationFailed is raised.
    """
    p = tuple(p)
    if alphabet is None:
        alphabet = Alphabet.of(chr(ord("a") + i) for i in range(max(p, default=0) + 1))
    if L == 0:
        return FactorSet(alphabet, 0, [EMPTY], source_tag)
    if len(p) < 4 * L:
        raise StabilizationFailed(f"prefix of length {len(p)} is shorter than 4L = {4 * L}")
    top = _windows(p, L)
    if _windows(p[:len(p) // 2], L) != top:
        raise StabilizationFailed(f"length-{L} factors still growing at prefix length {len(p)}")
    members = {EMPTY}
    # every factor of p of length <= L is a factor of some length-L window
    for win in top:
        for i in range(L):
            for j in range(i + 1, L + 1):
                members.add(win[i:j])
    return FactorSet(alphabet, L, members, source_tag)


@dataclass(frozen=True)
class Source:
    """A named infinite word, available through arbitrarily long prefixes."""

    name: str
    alphabet: Alphabet
    prefix: Callable[[int], Word]

    def factor_set(self, L: int, prefix_len: int | None = None) -> FactorSet:
        n = prefix_len or default_prefix_len(L)
        return _cached_factor_set(self, L, n)


@lru_cache(maxsize=64)
def _cached_factor_set(src: Source, L: int, n: int) -> FactorSet:
    return factor_set_from_prefix(src.prefix(n)[:n], L, src.alphabet, src.name)


def default_prefix_len(L: int) -> int:
    env = os.environ.get(PREFIX_ENV)
    if env:
        return int(env)
    return max(16 * L, 1000)


FIBONACCI = Substitution.parse("a=ab,b=a")
TRIBONACCI = Substitution.parse("a=ab,b=ac,c=a")
CHACON = Substitution.parse("a=aabc,b=bc,c=abc")

FIB2_NAMES = Alphabet.of("uvw")
FIB2_TABLE = {(0, 0): 0, (0, 1): 1, (1, 0): 2}  # aa->u, ab->v, ba->w


def substitution_source(s: Substitution, seed: int = 0, name: str = "") -> Source:
    def prefix(n, s=s, seed=seed):
        return fixed_point_prefix(s, seed, n)
    return Source(name or "subst", s.alphabet, prefix)


def _fib2_prefix(n: int) -> Word:
    return block_decode(fixed_point_prefix(FIBONACCI, 0, 2 * n), 2, FIB2_NAMES, FIB2_TABLE)


fibonacci = substitution_source(FIBONACCI, name="fib")
tribonacci = substitution_source(TRIBONACCI, name="trib")
chacon = substitution_source(CHACON, name="chacon")
fibonacci_block2 = Source("fib2", FIB2_NAMES, _fib2_prefix)

BUNDLED = {"fib": fibonacci, "trib": tribonacci, "chacon": chacon, "fib2": fibonacci_block2}


def load_source(name: str) -> Source:
    """Resolve a source specifier.

    ``fib``, ``trib``, ``chacon``, ``fib2``, ``subst:a=ab,b=a@a`` (inline
    substitution and seed letter) or ``file:<path>`` (raw word text).
    """
    if name in BUNDLED:
        return BUNDLED[name]
    if name.startswith("subst:"):
        body = name[len("subst:"):]
        rules, _, seed = body.partition("@")
        s = Substitution.parse(rules)
        seed_idx = s.alphabet.index(seed) if seed else 0
        return substitution_source(s, seed_idx, name=name)
    if name.startswith("file:"):
        path = name[len("file:"):]
        with open(path) as fh:
            text = "".join(fh.read().split())
        alphabet = Alphabet.of(sorted(set(text)))
        word = alphabet.parse(text)

        def prefix(n, word=word):
            return word

        return Source(name, alphabet, prefix)
    raise ValueError(f"unknown source {name!r}")
