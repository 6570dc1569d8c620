"""Return words, first return words and the reduction to bispecial words."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConjugacyViolated, HorizonExceeded, NoOccurrence, PeriodicSet
from .extension import left_extensions, right_extensions
from .freegroup import GroupElement, contains_element, reduce, subgroup_graph
from .rauzy import TypeClass, reduce_infinite2
from .words import EMPTY, FactorSet, Word, is_suffix, length_lex, occurrences


@dataclass(frozen=True)
class ReturnSet:
    base_word: Word
    words: tuple  # length-lex order
    horizon_used: int

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def as_set(self) -> set:
        return set(self.words)


def first_return_words(F: FactorSet, x: Word) -> ReturnSet:
    """R_F(x), certified complete against the factor set.

    Every right extension of x inside F is followed until it ends with a new
    occurrence of x; if some branch reaches the horizon first the set cannot
    be certified and HorizonExceeded is raised.
    """
    x = tuple(x)
    if x not in F:
        raise ValueError("x is not a member of the factor set")
    found = []
    used = len(x)
    stack = [EMPTY]
    while stack:
        r = stack.pop()
        for a in sorted(right_extensions(F, x + r), reverse=True):
            r2 = r + (a,)
            if is_suffix(x, x + r2):
                found.append(r2)
                used = max(used, len(x) + len(r2))
            else:
                if len(x) + len(r2) + 1 > F.max_len:
                    raise HorizonExceeded(len(x) + len(r2) + 1, F.max_len,
                                          "first return words")
                stack.append(r2)
    return ReturnSet(x, tuple(sorted(found, key=length_lex)), used)


def return_words(F: FactorSet, x: Word) -> set:
    """Γ_F(x) restricted to |xr| <= horizon."""
    x = tuple(x)
    first_return_words(F, x)  # raises if the horizon is too short to close R_F(x)
    out = set()
    stack = [EMPTY]
    while stack:
        r = stack.pop()
        if len(x) + len(r) + 1 > F.max_len:
            continue
        for a in right_extensions(F, x + r):
            r2 = r + (a,)
            if is_suffix(x, x + r2):
                out.add(r2)
            stack.append(r2)
    return out


def first_return_words_oracle(prefix: Word, x: Word) -> set:
    """Return words read directly between consecutive occurrences of x in a prefix."""
    prefix, x = tuple(prefix), tuple(x)
    pos = occurrences(x, prefix)
    if len(pos) < 2:
        raise NoOccurrence(f"x occurs {len(pos)} time(s) in the prefix; need two")
    k = len(x)
    return {prefix[p + k:q + k] for p, q in zip(pos, pos[1:])}


def is_unioccurrent(x: Word, y: Word) -> bool:
    return len(occurrences(tuple(x), tuple(y))) == 1


def shortest_bispecial_extension(F: FactorSet, x: Word) -> tuple:
    """(u, v, y) with y = uxv the shortest bispecial word containing x.

    u is grown letter by letter to the left while ux has a single left
    extension, v likewise to the right.
    """
    x = tuple(x)
    if x not in F:
        raise ValueError("x is not a member of the factor set")
    n = len(x)
    F.check_horizon(n + 1, "periodicity check")
    if not any(len(right_extensions(F, w)) > 1 for w in F.words(n)):
        raise PeriodicSet(f"no right-special word of length {n}")
    u = EMPTY
    while True:
        lefts = left_extensions(F, u + x)
        if len(lefts) != 1:
            break
        u = (next(iter(lefts)),) + u
    if not lefts:
        raise ValueError(f"{u + x} is not left-extendable")
    v = EMPTY
    while True:
        rights = right_extensions(F, x + v)
        if len(rights) != 1:
            break
        v = v + (next(iter(rights)),)
    if not rights:
        raise ValueError(f"{x + v} is not right-extendable")
    y = u + x + v
    F.check_horizon(len(y) + 1, "bispecial check")
    return u, v, y


def conjugate_by(v: Word, words) -> set:
    """{ v·r·v⁻¹ } where each r must end with v (residual reading)."""
    v = tuple(v)
    out = set()
    for r in words:
        r = tuple(r)
        if not is_suffix(v, r):
            raise ConjugacyViolated(f"return word {r} does not end with {v}", r)
        out.add(v + r[:len(r) - len(v)])
    return out


def conjugacy_check(F: FactorSet, x: Word) -> bool:
    """Check R_F(x) = v R_F(y) v⁻¹ for the shortest bispecial y = uxv.

    Returns True or raises ConjugacyViolated naming a mismatching element.
    """
    x = tuple(x)
    u, v, y = shortest_bispecial_extension(F, x)
    rx = first_return_words(F, x).as_set()
    ry = first_return_words(F, y).as_set()
    conj = conjugate_by(v, ry)
    if conj != rx:
        bad = sorted(conj ^ rx, key=length_lex)[0]
        raise ConjugacyViolated(f"R(x) and v R(y) v^-1 differ at {bad}", bad)
    return True


def infinite_case_exponent(R, tc: TypeClass):
    """The n with R = {u, v wⁿ t, v wⁿ⁺¹ t}, or None."""
    witness = tc.witness
    if tc.tag == "Infinite2":
        _, witness = reduce_infinite2(tc)
    elif tc.tag != "Infinite1":
        raise ValueError(f"not an infinite-case type: {tc.tag}")
    R = {tuple(r) for r in R}
    u, v, w, t = (witness[k] for k in "uvwt")
    longest = max(map(len, R), default=0)
    n = 0
    while len(v) + n * len(w) + len(t) <= longest:
        if R == {u, v + w * n + t, v + w * (n + 1) + t}:
            return n
        n += 1
    return None


def infinite_case_shape_check(F: FactorSet, x: Word, tc: TypeClass) -> bool:
    if tc.tag not in ("Infinite1", "Infinite2"):
        raise ValueError(f"infinite-case check does not apply to {tc.tag}")
    if tuple(tc.bispecial_vertex) != tuple(x):
        raise ValueError("x must be the bispecial vertex of the type")
    return infinite_case_exponent(first_return_words(F, x).as_set(), tc) is not None


def finite_case_expected(tc: TypeClass) -> set:
    """Table entry for Finite1..Finite5 under the witness bindings."""
    u, v, w, t, z = (tc.witness.get(k, ()) for k in "uvwtz")
    table = {
        "Finite1": [u, v, w],
        "Finite2": [u, v + w, v + t],
        "Finite3": [u, v + w, t + w],
        "Finite4": [u, v + w + z, v + t + z],
        "Finite5": [u + t, u + w + z, v + z],
    }
    return set(table[tc.tag])


def finite_case_generators(tc: TypeClass) -> list:
    """Z for Finite6 / Finite7."""
    u, v, w, t, z = (tc.witness.get(k, ()) for k in "uvwtz")
    if tc.tag == "Finite6":
        return [u + z + w, u + z + t, v + z + t, v + z + w]
    if tc.tag == "Finite7":
        return [u + w, u + t, v + w, v + t]
    raise ValueError(f"no generator set Z for {tc.tag}")


def finite_case_table_check(F: FactorSet, x: Word, tc: TypeClass) -> bool:
    if tc.tag not in ("Finite1", "Finite2", "Finite3", "Finite4", "Finite5",
                      "Finite6", "Finite7"):
        raise ValueError(f"finite-case check does not apply to {tc.tag}")
    R = first_return_words(F, x).as_set()
    if tc.tag in ("Finite6", "Finite7"):
        if len(R) != 3:
            return False
        H = subgroup_graph([GroupElement.from_word(z) for z in finite_case_generators(tc)],
                           len(F.alphabet))
        return all(contains_element(H, GroupElement.from_word(r)) for r in R)
    return R == finite_case_expected(tc)


def ladder_identities(tc: TypeClass, n: int) -> list:
    """The pairs (target, product) from the two ladder identities at i = n and n+1.

    vw^{i-1}t = vw^i t (vw^{i+1} t)^{-1} vw^i t  and
    vw^{i+2}t = vw^{i+1} t (vw^i t)^{-1} vw^{i+1} t.
    """
    u, v, w, t = (GroupElement.from_word(tc.witness[k]) for k in "uvwt")

    def ladder(i):
        return v * w ** i * t

    out = []
    for i in (n, n + 1):
        out.append((ladder(i - 1), ladder(i) * ladder(i + 1).inverse() * ladder(i)))
        out.append((ladder(i + 2), ladder(i + 1) * ladder(i).inverse() * ladder(i + 1)))
    return out
