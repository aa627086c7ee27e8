"""The four worked examples on a 13-edge path, transcribed.

Each panel lists the marked positions, the edge labels read from ``v_0`` to
``v_13`` and the last vertex reached by forward arcs (arcs after it point
back towards it).
"""

from __future__ import annotations

from dataclasses import dataclass

from antimagic.graph import OrientedLabeling


@dataclass(frozen=True)
class Panel:
    title: str
    m: int
    h: tuple[int, ...]
    labels: tuple[int, ...]
    sink: int

    def labeling(self) -> OrientedLabeling:
        arcs = []
        for k, lab in enumerate(self.labels, 1):
            arcs.append((k - 1, k, lab) if k <= self.sink else (k, k - 1, lab))
        return OrientedLabeling(self.m + 1, arcs)


PANELS = (
    Panel("l even, s=1", 13, (3, 4, 7, 9, 10, 11), (13, 1, 11, 10, 8, 3, 9, 4, 7, 6, 5, 2, 12), 11),
    Panel("l even, s=2", 13, (4, 5, 7, 8, 11), (13, 1, 11, 10, 9, 3, 8, 7, 6, 4, 5, 2, 12), 11),
    Panel("l odd, s=0", 13, (3, 5, 6, 7, 10), (13, 1, 11, 3, 9, 8, 7, 5, 4, 6, 10, 2, 12), 10),
    Panel("l odd, s=1", 13, (4, 5, 6, 7, 10), (13, 1, 11, 9, 8, 7, 6, 4, 3, 5, 10, 2, 12), 10),
)
