"""Pattern types and the two containment predicates.

Classical containment asks for any subsequence order-isomorphic to the
pattern.  The bivincular predicate `contains_fishburn` is specialized to the
single decorated pattern that defines Fishburn permutations: positions
i < j with (p_i, p_{i+1}, p_j) forming a 231 copy and p_i = p_j + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from fishburn.perm import ParseError, Permutation, check_distinct_values, parse_values

MAX_PATTERN_SIZE = 9  # keeps the compact digit encoding unambiguous


@dataclass(frozen=True)
class ClassicalPattern:
    """A pattern matched by order-isomorphic subsequences, no adjacency."""

    body: Permutation
    # For each pattern index j, the index (< j) holding the nearest smaller /
    # nearest larger pattern value.  A candidate for slot j only needs
    # comparing against these two chosen entries: the already-matched prefix
    # is order-isomorphic to the pattern prefix, so the nearest neighbours
    # bound the candidate against every earlier choice.
    _below: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _above: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        k = len(self.body)
        if not 1 <= k <= MAX_PATTERN_SIZE:
            raise ValueError(f"pattern size must be 1..{MAX_PATTERN_SIZE}, got {k}")
        vals = self.body.values
        below, above = [], []
        for j in range(k):
            lo = max((m for m in range(j) if vals[m] < vals[j]),
                     key=lambda m: vals[m], default=-1)
            hi = min((m for m in range(j) if vals[m] > vals[j]),
                     key=lambda m: vals[m], default=-1)
            below.append(lo)
            above.append(hi)
        object.__setattr__(self, "_below", tuple(below))
        object.__setattr__(self, "_above", tuple(above))

    def __len__(self) -> int:
        return len(self.body)

    def __str__(self) -> str:
        return "".join(str(v) for v in self.body.values)

    def complement(self) -> "ClassicalPattern":
        return ClassicalPattern(self.body.complement())


@dataclass(frozen=True)
class PatternSet:
    """A duplicate-free set of classical patterns plus the Fishburn flag."""

    classical: tuple[ClassicalPattern, ...] = ()
    fishburn: bool = False

    def __post_init__(self):
        if len(set(self.classical)) != len(self.classical):
            raise ValueError("duplicate classical pattern in set")

    @classmethod
    def parse(cls, text: str, fishburn: bool = False) -> "PatternSet":
        """Build from comma-separated pattern text, e.g. "321,1423,2143"."""
        tokens = [tok.strip() for tok in text.split(",") if tok.strip()]
        return cls(tuple(parse_pattern(tok) for tok in tokens), fishburn)

    def __str__(self) -> str:
        body = ",".join(str(p) for p in self.classical)
        return body + ("+fishburn" if self.fishburn else "")


def parse_pattern(text: str) -> ClassicalPattern:
    """Parse one pattern from compact digits or space-separated integers."""
    values = parse_values(text)
    if not values:
        raise ParseError("empty pattern")
    if len(values) > MAX_PATTERN_SIZE:
        raise ParseError(f"pattern {text!r} longer than {MAX_PATTERN_SIZE}")
    check_distinct_values(values, f"pattern {text!r}")
    missing = set(range(1, len(values) + 1)) - set(values)
    if missing:
        raise ParseError(f"invalid pattern {text!r}: value {min(missing)} missing")
    return ClassicalPattern(Permutation(values))


def occurs_in(word: Sequence[int], pattern: ClassicalPattern) -> bool:
    """Does any subsequence of word realize the pattern?

    word may be any sequence of distinct integers (e.g. a search prefix);
    only relative order matters.
    """
    body = pattern.body.values
    below, above = pattern._below, pattern._above
    k, n = len(body), len(word)
    if k > n:
        return False
    chosen = [0] * k

    def extend(j: int, start: int) -> bool:
        lo_i, hi_i = below[j], above[j]
        for i in range(start, n - (k - 1 - j)):
            v = word[i]
            if lo_i >= 0 and chosen[lo_i] >= v:
                continue
            if hi_i >= 0 and chosen[hi_i] <= v:
                continue
            chosen[j] = v
            if j == k - 1 or extend(j + 1, i + 1):
                return True
        return False

    return extend(0, 0)


def occurs_ending_at(word: Sequence[int], last: int, pattern: ClassicalPattern) -> bool:
    """Does an occurrence of pattern end exactly at index `last` of word?

    The search kernel extends prefixes one position at a time, so any new
    classical occurrence must use the newest position as its final element;
    this anchored check is what keeps the incremental test sound.
    """
    body = pattern.body.values
    below, above = pattern._below, pattern._above
    k = len(body)
    if k - 1 > last:
        return False
    v_last = word[last]
    if k == 1:
        return True
    r_last = body[k - 1]
    chosen = [0] * k
    chosen[k - 1] = v_last

    def extend(j: int, start: int) -> bool:
        lo_i, hi_i = below[j], above[j]
        want_lt = body[j] < r_last
        stop = last - (k - 2 - j)
        final = j == k - 2
        for i in range(start, stop):
            v = word[i]
            if (v < v_last) != want_lt:
                continue
            if lo_i >= 0 and chosen[lo_i] >= v:
                continue
            if hi_i >= 0 and chosen[hi_i] <= v:
                continue
            chosen[j] = v
            if final or extend(j + 1, i + 1):
                return True
        return False

    return extend(0, 0)


def contains_classical(p: Permutation, pattern: ClassicalPattern) -> bool:
    return occurs_in(p.values, pattern)


def contains_fishburn(p: Permutation) -> bool:
    """Does p contain positions i < j with (p_i, p_{i+1}, p_j) a 231 copy
    and p_i = p_j + 1?

    Since values are distinct, scanning each adjacent ascent (p_i, p_{i+1})
    and locating the value p_i - 1 decides this in linear time.
    """
    values = p.values
    n = len(values)
    pos = {v: i for i, v in enumerate(values)}
    for i in range(n - 1):
        v = values[i]
        if values[i + 1] > v and v >= 2 and pos[v - 1] >= i + 2:
            return True
    return False


def avoids(p: Permutation, patterns: PatternSet) -> bool:
    """Does p avoid every pattern in the set (and the Fishburn pattern if flagged)?"""
    if patterns.fishburn and contains_fishburn(p):
        return False
    return not any(occurs_in(p.values, pat) for pat in patterns.classical)
