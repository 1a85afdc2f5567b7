"""Rewrite the golden files under tests/golden from the current code.

Run only after a deliberate change to output formats; review the diff.
"""

import io
import os
import shlex
from pathlib import Path

from sl2traces.cli import run
from sl2traces.freegroup import parse_word
from sl2traces.tracecalc import TraceTable, trace_poly

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    table = TraceTable()
    words = (GOLDEN / "words.txt").read_text().splitlines()
    polys = [str(trace_poly(parse_word(w), table)) for w in words]
    (GOLDEN / "polys.txt").write_text("\n".join(polys) + "\n")

    # the script names its JSON inputs relative to the golden directory
    os.chdir(GOLDEN)
    out = io.StringIO()
    for line in (GOLDEN / "cli_script.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        buf = io.StringIO()
        status = run(shlex.split(line), out=buf, err=buf)
        out.write(f"$ {line}\n{buf.getvalue()}[exit {status}]\n")
    (GOLDEN / "cli_expected.txt").write_text(out.getvalue())


if __name__ == "__main__":
    main()
