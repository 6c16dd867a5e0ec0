"""Graded Betti tables for an ideal I or its quotient S/I."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field


@dataclass
class BettiTable:
    """Finitely supported map (i, j) -> beta_{i,j}.

    ``kind`` says whether the numbers are those of the ideal I or of S/I;
    they differ by the shift beta_{i,j}(I) = beta_{i+1,j}(S/I).  ``weights``
    is set when j is a weighted degree.
    """

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    kind: str = "ideal"
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("ideal", "quotient"):
            raise ValueError(f"unknown table kind {self.kind!r}")
        self.entries = {k: v for k, v in self.entries.items() if v}
        if any(v < 0 for v in self.entries.values()):
            raise ValueError("Betti numbers are non-negative")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def add(self, i: int, j: int, mult: int = 1) -> None:
        if mult:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + mult

    @property
    def weighted(self) -> bool:
        return self.weights is not None and any(w != 1 for w in self.weights)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        return [self.total(i) for i in range(max(i for i, _ in self.entries) + 1)]

    def to_ideal(self) -> BettiTable:
        if self.kind == "ideal":
            return self
        out = {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1}
        return BettiTable(out, "ideal", self.weights)

    def to_quotient(self) -> BettiTable:
        if self.kind == "quotient":
            return self
        out = {(i + 1, j): v for (i, j), v in self.entries.items()}
        if out:
            out[(0, 0)] = 1
        return BettiTable(out, "quotient", self.weights)

    def same_numbers(self, other: BettiTable) -> bool:
        """Equality after bringing both tables to the ideal indexing."""
        return self.to_ideal().entries == other.to_ideal().entries

    def diff(self, other: BettiTable) -> dict[tuple[int, int], tuple[int, int]]:
        a, b = self.to_ideal().entries, other.to_ideal().entries
        return {k: (a.get(k, 0), b.get(k, 0)) for k in sorted(set(a) | set(b)) if a.get(k, 0) != b.get(k, 0)}

    def sorted_entries(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "entries": [list(t) for t in self.sorted_entries()]}
        if self.weights is not None:
            out["weights"] = list(self.weights)
        return out

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        w = data.get("weights")
        return cls(
            {(int(i), int(j)): int(v) for i, j, v in data["entries"]},
            data.get("kind", "ideal"),
            tuple(w) if w is not None else None,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "j", "beta"])
        writer.writerows(self.sorted_entries())
        return buf.getvalue()

    def pretty(self) -> str:
        """Macaulay2-style display: rows are j - i, columns are i."""
        if not self.entries:
            return "(zero table)"
        imax = max(i for i, _ in self.entries)
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = ["      " + "".join(f"{i:>{width}}" for i in range(imax + 1))]
        for r in rows:
            cells = []
            for i in range(imax + 1):
                v = self.entries.get((i, i + r), 0)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>4}: " + "".join(cells))
        return "\n".join(lines)


def regularity(table: BettiTable) -> int:
    """max{j - i : beta_{i,j} != 0} in the table's own indexing."""
    if not table.entries:
        raise ValueError("regularity of an empty table is undefined")
    return max(j - i for i, j in table.entries)


def pdim(table: BettiTable) -> int:
    if not table.entries:
        raise ValueError("projective dimension of an empty table is undefined")
    return max(i for i, _ in table.entries)
