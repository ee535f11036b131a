"""Round-tripping algebras through the text workspace format.

Workspaces are plain text: semigroups, linear map families, operator
families, and algebras, all by name. The serializer is canonical, so
parse(serialize(ws)) == ws and formatting is idempotent, which makes
the files diff-friendly.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from bihomega import (cyclic_group, make_two_dim_example, parse_workspace,
                      serialize_workspace, two_dim_params,
                      workspace_for_instance)

W = cyclic_group(2)
inst = make_two_dim_example(
    two_dim_params(W, [[1, -1], [-1, 1]], [1, -1], [1, -1]), reading="e2")

ws = workspace_for_instance("signed", "W", inst)
text = serialize_workspace(ws)
print(text)

back = parse_workspace(text)
print("round trip preserves the instance:",
      back.algebras["signed"] == inst)
print("serialization is idempotent:",
      serialize_workspace(back) == text)

# the same file drives the command line tool
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "signed.bho"
    path.write_text(text)
    for argv in (["check", str(path)],
                 ["check", str(path), "--axiom", "bihom-associativity"]):
        proc = subprocess.run([sys.executable, "-m", "bihomega.cli"] + argv,
                              capture_output=True, text=True)
        print(f"\n$ bihomega {' '.join(argv)}   (exit {proc.returncode})")
        print(proc.stdout, end="")
