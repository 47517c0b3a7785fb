"""Calendar periods at monthly or annual granularity."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

MONTHLY = "monthly"
ANNUAL = "annual"

_MONTH_RE = re.compile(r"^(\d{4})-(\d{2})(?:-(\d{2}))?$")
_YEAR_RE = re.compile(r"^(\d{4})$")


class PeriodError(ValueError):
    """Raised for unparseable or inconsistent calendar periods."""


@total_ordering
@dataclass(frozen=True)
class Period:
    """A calendar month ("2020-01") or year ("2020")."""

    year: int
    month: int | None = None  # None for annual periods

    @property
    def freq(self) -> str:
        return ANNUAL if self.month is None else MONTHLY

    @classmethod
    def parse(cls, text: str) -> "Period":
        """Parse "YYYY-MM", "YYYY-MM-DD" (day dropped), or "YYYY"."""
        text = text.strip()
        m = _MONTH_RE.match(text)
        if m:
            year, month = int(m.group(1)), int(m.group(2))
            if not 1 <= month <= 12:
                raise PeriodError(f"month out of range in {text!r}")
            return cls(year, month)
        m = _YEAR_RE.match(text)
        if m:
            return cls(int(m.group(1)))
        raise PeriodError(f"cannot parse period {text!r}")

    def ordinal(self) -> int:
        """Position on the calendar grid of this period's frequency."""
        if self.month is None:
            return self.year
        return self.year * 12 + (self.month - 1)

    def __add__(self, steps: int) -> "Period":
        if self.month is None:
            return Period(self.year + steps)
        o = self.ordinal() + steps
        return Period(o // 12, o % 12 + 1)

    def __sub__(self, other: "Period") -> int:
        self._check_same_freq(other)
        return self.ordinal() - other.ordinal()

    def __lt__(self, other: "Period") -> bool:
        self._check_same_freq(other)
        return self.ordinal() < other.ordinal()

    def _check_same_freq(self, other: "Period") -> None:
        if self.freq != other.freq:
            raise PeriodError(
                f"cannot mix {self.freq} and {other.freq} periods"
            )

    def __str__(self) -> str:
        if self.month is None:
            return f"{self.year:04d}"
        return f"{self.year:04d}-{self.month:02d}"
