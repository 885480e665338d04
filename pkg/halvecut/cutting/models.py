from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, isqrt
from typing import Optional

from halvecut.core import config
from halvecut.core.errors import CuttingError
from halvecut.geom import Line, as_rational

SAMPLED = "sampled"
VERTICAL_REFINEMENT = "vertical-refinement"


def ceil_log2(r: int) -> int:
    """ceil(log2 r), clamped to at least 1."""
    return max(1, (r - 1).bit_length())


def ceil_sqrt(n: int) -> int:
    root = isqrt(n)
    return root if root * root == n else root + 1


@dataclass(frozen=True)
class CuttingParams:
    eps: Fraction
    net_constant_c: int = field(default_factory=lambda: config.NET_CONSTANT_C)
    seed: int = field(default_factory=lambda: config.SEED)
    max_retries: int = field(default_factory=lambda: config.MAX_RETRIES)
    oversample_alpha: Optional[int] = None

    def __post_init__(self) -> None:
        eps = as_rational(self.eps)
        if not (0 < eps <= 1):
            raise CuttingError(f"eps must lie in (0, 1], got {eps}")
        object.__setattr__(self, "eps", eps)
        if self.net_constant_c < 1 or self.max_retries < 1:
            raise CuttingError("net_constant_c and max_retries must be positive")
        if self.oversample_alpha is not None and not (1 <= self.oversample_alpha <= self.r ** 3):
            raise CuttingError(f"oversample_alpha must lie in [1, r^3], got {self.oversample_alpha}")

    @property
    def r(self) -> int:
        return ceil(10 / self.eps)

    @property
    def log_r(self) -> int:
        return ceil_log2(self.r)

    @property
    def alpha(self) -> int:
        if self.oversample_alpha is not None:
            return self.oversample_alpha
        return ceil_sqrt(self.r * self.log_r)

    @property
    def delta(self) -> Fraction:
        return Fraction(1, 2 * self.alpha * self.r)

    def sample_size(self, constant: Optional[int] = None) -> int:
        """nu = c * alpha * r * log r."""
        c = self.net_constant_c if constant is None else constant
        return c * self.alpha * self.r * self.log_r


@dataclass(frozen=True)
class CuttingStats:
    sample_size: int = 0
    sampled_lines: int = 0
    refined_faces: int = 0
    refinement_complexity: int = 0
    refinement_lines: int = 0
    attempts: int = 0
    net_constant: int = 0
    alpha: int = 0


@dataclass(frozen=True)
class Cutting:
    lines: tuple[Line, ...]
    provenance: tuple[str, ...]
    stats: CuttingStats = CuttingStats()

    @classmethod
    def empty(cls) -> Cutting:
        return cls((), ())

    @property
    def size(self) -> int:
        return len(self.lines)

    def __len__(self) -> int:
        return len(self.lines)

    def tagged(self, tag: str) -> list[Line]:
        return [line for line, t in zip(self.lines, self.provenance) if t == tag]
