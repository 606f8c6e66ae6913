from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Boolean answer with an optional reason tag, witness and governing clause.

    Truthiness follows ``value`` so verdicts can be used directly in ``if``.
    """

    value: bool
    reason: str | None = None
    witness: Any = None
    clause: str | None = None

    def __bool__(self) -> bool:
        return self.value
