"""The chromatic bound recursion of the main argument."""

from __future__ import annotations

from dataclasses import dataclass

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class ConstantsTable:
    s: int
    kappa: int | None
    r: int
    c_prime: int
    w: tuple[int, ...]  # w[j] for j = 0..s
    c: int

    def to_json(self) -> dict:
        return {"s": self.s, "kappa": self.kappa, "r": self.r, "c_prime": self.c_prime,
                "w": list(self.w), "c": self.c}


def constants_table(s: int, r: int, c_prime: int, kappa: int | None = None,
                    limit: int = INT64_MAX) -> ConstantsTable:
    """``w_s = 0``, ``w_j = w_{j+1} r + c'`` down to ``j = 0``, and ``c = (w_1 + 1) r``.

    Raises ``OverflowError`` as soon as a value exceeds ``limit`` (signed
    64-bit by default), since the values are meant to be exchanged as
    machine integers.
    """
    if s < 1 or r < 1 or c_prime < 0:
        raise ValueError("need s >= 1, r >= 1, c' >= 0")
    w = [0] * (s + 1)
    for j in range(s - 1, -1, -1):
        w[j] = w[j + 1] * r + c_prime
        if w[j] > limit:
            raise OverflowError(f"w_{j} exceeds {limit} (s={s}, r={r}, c'={c_prime})")
    c = (w[1] + 1) * r
    if c > limit:
        raise OverflowError(f"c exceeds {limit} (s={s}, r={r}, c'={c_prime})")
    return ConstantsTable(s, kappa, r, c_prime, tuple(w), c)
