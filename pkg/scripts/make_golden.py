"""Write tests/golden/figure1_panel{1..4}.json from the transcribed figure data.

The files are built from the hand-transcribed label sequences and sink
positions in ``antimagic.figure1``, never from the construction, so the
golden test compares two independent sources.
"""

from pathlib import Path

from antimagic.figure1 import PANELS
from antimagic.formats import dumps, emit_labeling

OUT = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for k, panel in enumerate(PANELS, 1):
        path = OUT / f"figure1_panel{k}.json"
        path.write_text(dumps(emit_labeling(panel.labeling())))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
