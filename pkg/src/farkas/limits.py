"""Guards for the exponential enumerations.

Every brute-force operation checks one of these limits and raises
LimitExceeded instead of hanging.  The defaults are sized for interactive
desk-scale inputs; callers can pass a custom Limits to raise or lower
them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    afr_oracle_max_size: int = 8  # subsets scanned: 2^m - 1
    wfr_max_size: int = 16  # sign patterns: m * 2^(m-1)
    wfr_oracle_max_size: int = 10  # sign patterns: 3^m
    box_enumeration: int = 10_000_000  # integer points per exhaustive search
    odd_cycle_max_vertices: int = 12

    def override_all(self, value: int) -> "Limits":
        """One knob for the CLI's --limit flag: set every guard to `value`."""
        return replace(
            self,
            afr_oracle_max_size=value,
            wfr_max_size=value,
            wfr_oracle_max_size=value,
            box_enumeration=value,
            odd_cycle_max_vertices=value,
        )


DEFAULT_LIMITS = Limits()
