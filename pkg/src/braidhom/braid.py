"""Braid words, possibly with singular (4-valent) letters, and closures.

Words are written "n: l1 l2 ..." where each letter is +i or -i for a
positive/negative crossing of strands i, i+1, or "i!" for a singular
crossing.  The empty word "1:" closes up to the unknot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

POS, NEG, SING = 1, -1, 0


@dataclass(frozen=True)
class Word:
    """A braid word on n strands; kinds are +1, -1, or 0 (singular)."""

    n: int
    entries: tuple  # of (strand index i, kind)

    def __post_init__(self):
        assert self.n >= 1
        for i, kind in self.entries:
            assert 1 <= i < self.n, f"letter index {i} out of range for n={self.n}"
            assert kind in (POS, NEG, SING)

    @classmethod
    def parse(cls, text: str) -> "Word":
        head, _, tail = text.partition(":")
        if not _:
            raise ValueError(f"missing ':' in word {text!r}")
        n = int(head.strip())
        entries = []
        for tok in tail.split():
            if tok.endswith("!"):
                entries.append((int(tok[:-1]), SING))
            else:
                v = int(tok)
                entries.append((abs(v), POS if v > 0 else NEG))
        return cls(n, tuple(entries))

    def __str__(self):
        bits = []
        for i, kind in self.entries:
            if kind == SING:
                bits.append(f"{i}!")
            else:
                bits.append(str(i * kind))
        return f"{self.n}: " + " ".join(bits) if bits else f"{self.n}:"

    @property
    def singular_positions(self) -> tuple:
        return tuple(t for t, (_, k) in enumerate(self.entries) if k == SING)

    @property
    def is_singular(self) -> bool:
        return bool(self.singular_positions)

    @property
    def writhe(self) -> int:
        """Sum of crossing signs; singular letters contribute nothing."""
        return sum(k for _, k in self.entries if k != SING)

    @property
    def writhe_top(self) -> int:
        """Writhe with every singular letter counted as positive."""
        return sum(1 if k == SING else k for _, k in self.entries)

    def permutation(self) -> tuple:
        """Image of each strand (0-based) through the braid, bottom to top."""
        perm = list(range(self.n))
        for i, _ in self.entries:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return tuple(perm)

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.n
        cycles = 0
        for s in range(self.n):
            if seen[s]:
                continue
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
        return cycles

    @property
    def is_knot_closure(self) -> bool:
        return self.cycle_count() == 1

    def mirror(self) -> "Word":
        return Word(self.n, tuple((i, -k if k != SING else SING)
                                  for i, k in self.entries))

    def resolutions(self):
        """All ways of resolving singular letters into +/- crossings.

        Yields (choices, resolved word, number of negative choices), with
        choices ordered along singular_positions.
        """
        sings = self.singular_positions
        for choice in product((POS, NEG), repeat=len(sings)):
            entries = list(self.entries)
            for pos, c in zip(sings, choice):
                entries[pos] = (entries[pos][0], c)
            mu = sum(1 for c in choice if c == NEG)
            yield choice, Word(self.n, tuple(entries)), mu

    def resolve(self, choice) -> "Word":
        sings = self.singular_positions
        assert len(choice) == len(sings)
        entries = list(self.entries)
        for pos, c in zip(sings, choice):
            entries[pos] = (entries[pos][0], c)
        return Word(self.n, tuple(entries))

    def connected_sum(self, other: "Word") -> "Word":
        """Stack the two words on n1 + n2 - 1 strands (closure = sum)."""
        shift = self.n - 1
        entries = list(self.entries)
        entries += [(i + shift, k) for i, k in other.entries]
        return Word(self.n + other.n - 1, tuple(entries))

    def signed_letters(self) -> list:
        """Letters as signed integers; only valid for non-singular words."""
        assert not self.is_singular
        return [i * k for i, k in self.entries]
