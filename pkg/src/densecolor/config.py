"""Run configuration: enumeration caps, search budget, seed, output format.

Every cap is enforced with an explicit error; no oracle ever degrades to an
approximate answer when an instance is too large.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class RunConfig:
    density_max_n: int = 20          # odd-subset enumeration cap
    chi_index_max_edges: int = 40    # exact chromatic-index cap
    total_max_elements: int = 24     # exact total-coloring cap (n + m)
    embed_exact_max_n: int = 12      # branch-and-bound embedding fallback cap
    node_budget: int = 5_000_000     # backtracking nodes per oracle call
    seed: int = 0
    output_format: str = "text"

    def __post_init__(self) -> None:
        for name in (
            "density_max_n",
            "chi_index_max_edges",
            "total_max_elements",
            "embed_exact_max_n",
            "node_budget",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")

    def with_overrides(self, **kwargs: object) -> "RunConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CONFIG = RunConfig()
