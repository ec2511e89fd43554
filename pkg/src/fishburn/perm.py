"""The permutation value type and its structural operations.

A permutation of length n is a rearrangement of {1, ..., n}; positions and
values are one-indexed throughout, matching the combinatorics literature.
The empty permutation (n = 0) is valid and avoids every pattern.

Text encoding: entries as decimal integers separated by single spaces
("3 1 2 4 7 5 6").  On input only, a single run of digits ("3124756") is
accepted as a compact form for lengths up to 9.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class ParseError(ValueError):
    """Raised when text does not encode a permutation or pattern."""


@dataclass(frozen=True)
class Permutation:
    """An immutable rearrangement of {1, ..., n}.

    >>> Permutation((2, 1, 3)).complement()
    Permutation((2, 3, 1))
    >>> len(Permutation(()))
    0
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a rearrangement of 1..{len(values)}: {values!r}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __repr__(self) -> str:
        return f"Permutation({self.values!r})"

    def complement(self) -> "Permutation":
        """Replace each entry v by n+1-v.  An involution."""
        n = len(self.values)
        return Permutation(tuple(n + 1 - v for v in self.values))

    def direct_sum(self, other: "Permutation") -> "Permutation":
        """Concatenate self with other shifted up by len(self).

        >>> Permutation((1, 2)).direct_sum(Permutation((1, 2, 3)))
        Permutation((1, 2, 3, 4, 5))
        """
        k = len(self.values)
        return Permutation(self.values + tuple(v + k for v in other.values))

    def insert_max_at(self, site: int) -> "Permutation":
        """Insert the new maximum n+1 into the gap indexed by site.

        Site 0 is the gap before the first entry, site n the gap after the
        last; the relative order of existing entries is preserved.
        """
        n = len(self.values)
        if not 0 <= site <= n:
            raise ValueError(f"site {site} out of range 0..{n}")
        return Permutation(self.values[:site] + (n + 1,) + self.values[site:])

    def remove_max(self) -> "Permutation":
        """Delete the maximum entry (inverse of insert_max_at)."""
        n = len(self.values)
        if n == 0:
            raise ValueError("empty permutation has no maximum")
        i = self.values.index(n)
        return Permutation(self.values[:i] + self.values[i + 1 :])

    def left_to_right_maxima(self) -> frozenset[int]:
        """The set of entries greater than every entry to their left."""
        out = []
        best = 0
        for v in self.values:
            if v > best:
                out.append(v)
                best = v
        return frozenset(out)

    def position_of_one(self) -> int:
        """The one-based position of the entry 1."""
        if not self.values:
            raise ValueError("empty permutation has no entry 1")
        return self.values.index(1) + 1

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.values)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        return cls(parse_values(text))


def identity(n: int) -> Permutation:
    """The increasing permutation 1 2 ... n."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return Permutation(tuple(range(1, n + 1)))


def parse_values(text: str) -> tuple[int, ...]:
    """Decode a space-separated or compact-digit value sequence.

    Values are not checked for forming a permutation here; callers decide
    what invariants apply (full permutation, pattern, query prefix).
    """
    tokens = text.split()
    if not tokens:
        return ()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        token = tokens[0]
        if not token.isdigit():
            raise ParseError(f"invalid token {token!r}: expected digits or space-separated integers")
        if "0" in token:
            raise ParseError(f"invalid token {token!r}: compact form uses digits 1-9 only")
        return tuple(int(ch) for ch in token)
    out = []
    for token in tokens:
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"invalid token {token!r}: not an integer") from None
        if value < 1:
            raise ParseError(f"invalid token {token!r}: values must be positive")
        out.append(value)
    return tuple(out)


def check_distinct_values(values: Sequence[int], what: str) -> None:
    """Reject duplicated entries, naming the first offender."""
    seen = set()
    for v in values:
        if v in seen:
            raise ParseError(f"invalid {what}: value {v} repeats")
        seen.add(v)
