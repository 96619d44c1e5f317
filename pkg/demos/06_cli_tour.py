"""The command-line surface, driven in-process.

Each subcommand is a thin wrapper over the library; `check` runs the whole
battery of consistency checks and its exit code reports the outcome.
"""

from pathlib import Path

from hyperline.cli import main

DATA = Path(__file__).parent / "data"
TRIO = str(DATA / "trio.hg")
COLLAR = str(DATA / "collar3.hg")


def run(argv):
    print(f"$ hyperline {' '.join(argv)}")
    code = main(argv)
    print(f"[exit {code}]\n")


run(["info", TRIO])
run(["line", TRIO, "--format", "edgelist"])
run(["spectrum", TRIO, "--matrix", "signless-laplacian"])
run(["collar", COLLAR])
run(["check", TRIO])
run(["generate", "--n", "6", "--m", "4", "--max-card", "4", "--seed", "42"])
