"""Regenerate tests/golden/*.json from tests/cli_fixtures.py.

Run by hand after an intentional output change; the test suite never writes.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from cli_fixtures import ALL  # noqa: E402

from punctual.cli import render, run  # noqa: E402

GOLDEN = pathlib.Path(__file__).parent / "golden"

if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in ALL.items():
        report, code, pretty = run(argv)
        (GOLDEN / f"{name}.json").write_text(render(report, pretty) + "\n", encoding="utf-8")
        print(name, code)
