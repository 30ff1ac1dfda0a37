"""Print predicted vs published geometry for the 80/70/60 um patterns."""
from reflow_lens.cli import run

if __name__ == "__main__":
    raise SystemExit(run(["table3", "--text"]))
