"""Shared machinery for the axiom checkers: violation reports and the
exhaustive-vs-sampled subset regime."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

DEFAULT_SUBSET_CAP = 12
DEFAULT_SUBSET_SAMPLES = 512

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"


@dataclass(frozen=True)
class Violation:
    """A failed check: which checker, which clause, and a witness."""

    check: str
    clause: str
    witness: str

    def __str__(self) -> str:
        return f"{self.check}: {self.clause} violated at {self.witness}"


@dataclass(frozen=True)
class LawReport:
    """Outcome of one law instance (triangle identity, naturality square,
    sequent property)."""

    name: str
    ok: bool
    detail: str = ""


def subset_cap() -> int:
    """Carrier size up to which subset-indexed axioms are checked on all
    2^n subsets; GRADED_TOPOS_SUBSET_CAP overrides the default."""
    raw = os.environ.get("GRADED_TOPOS_SUBSET_CAP")
    if raw is None:
        return DEFAULT_SUBSET_CAP
    try:
        return max(0, int(raw))
    except ValueError:
        return DEFAULT_SUBSET_CAP


def subset_regime(n: int, cap: int | None = None) -> str:
    return EXHAUSTIVE if n <= (subset_cap() if cap is None else cap) else SAMPLED


def subset_masks(n: int, cap: int | None = None, samples: int = DEFAULT_SUBSET_SAMPLES) -> list[int]:
    """Bitmask subsets of range(n) to check.

    Exhaustive (all 2^n masks) when n is within the cap; otherwise the empty
    set, all singletons, all pairs, the full set, and `samples` uniformly
    drawn masks from a deterministic generator.
    """
    if subset_regime(n, cap) == EXHAUSTIVE:
        return list(range(1 << n))
    masks = {0, (1 << n) - 1}
    for i in range(n):
        masks.add(1 << i)
        for j in range(i + 1, n):
            masks.add((1 << i) | (1 << j))
    rng = random.Random(n * 0x9E3779B9 + 1)
    for _ in range(samples):
        masks.add(rng.randrange(1 << n))
    return sorted(masks)


def mask_elements(mask: int, items: tuple) -> list:
    return [items[i] for i in range(len(items)) if mask >> i & 1]
