"""Subset-sum utilities: the selection vector used by signing, and an exact solver."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadLength, LengthMismatch, TooLarge

MAX_SOLVE_N = 24


@dataclass(frozen=True)
class BinaryVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"entries must be 0 or 1: {bits}")
        object.__setattr__(self, "bits", bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def is_zero(self) -> bool:
        return not any(self.bits)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> BinaryVector:
        # bit 0 of the mask is x_1
        return cls(tuple((mask >> i) & 1 for i in range(n)))

    def to_mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))


@dataclass(frozen=True)
class SubsetSumInstance:
    weights: tuple[int, ...]
    target: int

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        if int(self.target) < 0:
            raise ValueError("target must be non-negative")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "target", int(self.target))

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def from_dict(cls, d: dict) -> SubsetSumInstance:
        return cls(tuple(d["weights"]), d["target"])

    def to_dict(self) -> dict:
        return {"weights": list(self.weights), "target": self.target}


def sample_selection_vector(n: int, rng: random.Random) -> BinaryVector:
    """Uniform nonzero vector in {0,1}^n (rejection sampling)."""
    if n < 1:
        raise BadLength(f"vector length must be >= 1, got {n}")
    while True:
        bits = tuple(rng.randrange(2) for _ in range(n))
        if any(bits):
            return BinaryVector(bits)


def _half_sums(weights: tuple[int, ...]) -> list[int]:
    sums = [0]
    for w in weights:
        sums += [s + w for s in sums]
    # sums[mask] is the weight of that mask over `weights`
    return sums


def subset_sum_solve(inst: SubsetSumInstance) -> BinaryVector | None:
    """Return the lowest-mask solution, or None if no subset sums to the target.

    Splits the weights into low and high halves; mask order is decided by the
    high half first, so scanning high masks upward and taking the smallest low
    mask with the complementary sum yields the globally lowest mask.
    """
    n = inst.n
    if n > MAX_SOLVE_N:
        raise TooLarge(f"n={n} exceeds exhaustive bound {MAX_SOLVE_N}")
    k = n // 2
    low = _half_sums(inst.weights[:k])
    high = _half_sums(inst.weights[k:])
    first_low: dict[int, int] = {}
    for mask, s in enumerate(low):
        first_low.setdefault(s, mask)
    for hmask, hs in enumerate(high):
        lmask = first_low.get(inst.target - hs)
        if lmask is not None:
            return BinaryVector.from_mask(lmask | (hmask << k), n)
    return None


def verify_subset(inst: SubsetSumInstance, x: BinaryVector) -> bool:
    if len(x) != inst.n:
        raise LengthMismatch(f"vector length {len(x)} != instance size {inst.n}")
    return sum(b * w for b, w in zip(x, inst.weights)) == inst.target
