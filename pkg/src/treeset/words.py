"""Alphabets, words and finite truncations of factorial languages.

A word is a plain tuple of symbol indices into an :class:`Alphabet`; the
empty tuple is the empty word.  A :class:`FactorSet` holds every word of a
factorial language up to a length bound (the *horizon*) and refuses to
answer questions about longer words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EmptyWordInCode, HorizonExceeded

Word = tuple  # tuple[int, ...]

EMPTY: Word = ()


def length_lex(word: Word):
    """Sort key: shorter words first, then lexicographic in alphabet order."""
    return (len(word), word)


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise ValueError("alphabet must have at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in {symbols}")
        for s in symbols:
            if not isinstance(s, str) or not s or not s.isprintable() or s.isspace():
                raise ValueError(f"bad symbol {s!r}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(range(len(self.symbols)))

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise ValueError(f"symbol {symbol!r} not in alphabet {self.symbols}") from None

    def parse(self, text: str) -> Word:
        """Read a word written with symbols concatenated.

        Multi-character symbols are matched greedily, longest first.
        """
        if all(len(s) == 1 for s in self.symbols):
            return tuple(self.index(ch) for ch in text)
        by_len = sorted(self.symbols, key=len, reverse=True)
        out = []
        i = 0
        while i < len(text):
            for s in by_len:
                if text.startswith(s, i):
                    out.append(self.symbols.index(s))
                    i += len(s)
                    break
            else:
                raise ValueError(f"cannot parse {text!r} at position {i}")
        return tuple(out)

    def format(self, word: Word) -> str:
        return "".join(self.symbols[i] for i in word)

    def letters(self) -> list:
        return [(i,) for i in range(len(self.symbols))]

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "Alphabet":
        return cls(tuple(symbols))


def factors(word: Sequence, max_len: int | None = None) -> set:
    """All factors of `word` (including the empty word) of length <= max_len."""
    word = tuple(word)
    n = len(word)
    top = n if max_len is None else min(n, max_len)
    out = {EMPTY}
    for k in range(1, top + 1):
        for i in range(n - k + 1):
            out.add(word[i:i + k])
    return out


def is_prefix(p: Word, w: Word) -> bool:
    return len(p) <= len(w) and tuple(w[:len(p)]) == tuple(p)


def is_suffix(s: Word, w: Word) -> bool:
    return len(s) <= len(w) and (not s or tuple(w[len(w) - len(s):]) == tuple(s))


def occurrences(x: Word, y: Word) -> list:
    """Start positions of every occurrence of `x` in `y`."""
    k = len(x)
    return [i for i in range(len(y) - k + 1) if tuple(y[i:i + k]) == tuple(x)]


class FactorSet:
    """A factorial language truncated at length `max_len`.

    Membership of words longer than the horizon raises
    :class:`HorizonExceeded` instead of answering ``False``.
    """

    def __init__(self, alphabet: Alphabet, max_len: int, members: Iterable[Word],
                 source_tag: str = ""):
        if max_len < 0:
            raise ValueError("max_len must be non-negative")
        self.alphabet = alphabet
        self.max_len = max_len
        self.source_tag = source_tag
        by_len: dict = {n: set() for n in range(max_len + 1)}
        for w in members:
            w = tuple(w)
            if len(w) > max_len:
                raise ValueError(f"member of length {len(w)} beyond horizon {max_len}")
            if any(not 0 <= a < len(alphabet) for a in w):
                raise ValueError(f"word {w} has letters outside the alphabet")
            by_len[len(w)].add(w)
        by_len[0].add(EMPTY)
        self._by_len = {n: frozenset(s) for n, s in by_len.items()}
        self.members = frozenset().union(*self._by_len.values())

    def __repr__(self):
        tag = f" {self.source_tag!r}" if self.source_tag else ""
        return f"<FactorSet{tag} |A|={len(self.alphabet)} L={self.max_len} size={len(self.members)}>"

    def check_horizon(self, n: int, what: str = ""):
        if n > self.max_len:
            raise HorizonExceeded(n, self.max_len, what)

    def __contains__(self, w) -> bool:
        w = tuple(w)
        self.check_horizon(len(w), "membership")
        return w in self._by_len[len(w)]

    def words(self, n: int) -> list:
        """Members of length exactly `n` in length-lex order."""
        self.check_horizon(n, "words of length n")
        return sorted(self._by_len[n])

    def words_up_to(self, m: int) -> Iterator[Word]:
        for n in range(m + 1):
            yield from self.words(n)

    def letters(self) -> list:
        """A ∩ F, i.e. the letters actually occurring."""
        return [w[0] for w in self.words(1)] if self.max_len >= 1 else []

    def parse(self, text: str) -> Word:
        return self.alphabet.parse(text)

    def format(self, word: Word) -> str:
        return self.alphabet.format(word)


def contains(F: FactorSet, w: Word) -> bool:
    return tuple(w) in F


def residual(u: Word, X: Iterable[Word]) -> set:
    """Right residual: all v with uv in X."""
    u = tuple(u)
    return {tuple(x[len(u):]) for x in X if is_prefix(u, tuple(x))}


def is_factorial(S: Iterable[Word]) -> bool:
    S = {tuple(w) for w in S}
    if EMPTY not in S:
        return False
    # closing under dropping one letter at either end is enough
    return all(w[1:] in S and w[:-1] in S for w in S if w)


def _check_code(V) -> list:
    V = [tuple(v) for v in V]
    if any(len(v) == 0 for v in V):
        raise EmptyWordInCode("the empty word cannot belong to a code")
    return V


def is_prefix_code(V: Iterable[Word]) -> bool:
    V = sorted(set(_check_code(V)))
    # in lexicographic order a prefix sorts immediately before some extension
    return all(not is_prefix(a, b) for a, b in zip(V, V[1:]))


def is_suffix_code(U: Iterable[Word]) -> bool:
    return is_prefix_code(tuple(reversed(u)) for u in _check_code(U))


def is_f_maximal_prefix_code(V: Iterable[Word], F: FactorSet, after: Word = EMPTY) -> bool:
    """Whether the prefix code `V` is maximal in F (or in after⁻¹F).

    Maximal here means every word p of the language with |p| <= max |V| is
    prefix-comparable with some element of V.  With `after` set to a word
    w the language is the residual w⁻¹F = {p | wp in F}.
    """
    V = _check_code(V)
    if not V:
        return False
    after = tuple(after)
    top = max(len(v) for v in V)
    F.check_horizon(len(after) + top, "maximal prefix code")
    if after not in F:
        return False
    for n in range(top + 1):
        for w in F.words(len(after) + n):
            if not is_prefix(after, w):
                continue
            p = w[len(after):]
            if not any(is_prefix(v, p) or is_prefix(p, v) for v in V):
                return False
    return True


def is_f_maximal_suffix_code(U: Iterable[Word], F: FactorSet, before: Word = EMPTY) -> bool:
    """Suffix dual of :func:`is_f_maximal_prefix_code` for F or F·before⁻¹."""
    U = _check_code(U)
    if not U:
        return False
    before = tuple(before)
    top = max(len(u) for u in U)
    F.check_horizon(len(before) + top, "maximal suffix code")
    if before not in F:
        return False
    for n in range(top + 1):
        for w in F.words(len(before) + n):
            if not is_suffix(before, w):
                continue
            s = w[:len(w) - len(before)]
            if not any(is_suffix(u, s) or is_suffix(s, u) for u in U):
                return False
    return True


def read_word_set(text: str, alphabet: Alphabet) -> list:
    """Parse the one-word-per-line text format (``#`` comments, blanks ignored)."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(alphabet.parse(line))
    return out


def write_word_set(words: Iterable[Word], alphabet: Alphabet, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [alphabet.format(w) for w in sorted(set(map(tuple, words)), key=length_lex)]
    return "\n".join(lines) + "\n"
