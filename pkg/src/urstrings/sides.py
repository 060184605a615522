"""Which disjunct of the editors principle a witness satisfies."""
from __future__ import annotations

import enum


class Side(enum.Enum):
    LEFT = "left"    # x ⋆ w = u and y = w ⋆ v
    RIGHT = "right"  # x = u ⋆ w and w ⋆ y = v
    BOTH = "both"    # w is empty, both hold
