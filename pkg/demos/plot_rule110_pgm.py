"""
A rule 110 space-time diagram
=============================

Writes a plain PGM image with one row per time step. Any image viewer can
open it.
"""

import json
import sys
import tempfile
from pathlib import Path

from groupca import cli

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.gettempdir()) / "rule110.pgm"
system = {
    "group": "Z",
    "alphabet": 2,
    "rule": "builtin:rule110",
    "configuration": {"kind": "finite_support", "background": 0, "support": {"[0]": 1}},
    "window": [-60, 4],
}
system_path = out.with_suffix(".json")
system_path.write_text(json.dumps(system))

cli.main(["run", str(system_path), "--steps", "12"])
cli.main(["run", str(system_path), "--steps", "60", "--format", "pgm", "--out", str(out)])
print("wrote", out)
