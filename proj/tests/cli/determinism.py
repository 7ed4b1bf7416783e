"""Repeated runs (and different worker counts) must produce byte-identical output."""

import os
import subprocess
import sys
import tempfile

COMMANDS = [
    ["selftest"],
    ["--fixture", "two-level", "density"],
    ["--fixture", "four-level-quasi", "--format", "json", "density", "--t-end", "100", "--samples", "5001"],
    ["--fixture", "four-level-quasi", "covariance-check"],
    ["--fixture", "three-level-sqrt2", "expect", "--f", '[{"label":[0,1],"re":0.5},{"label":[0,-1],"re":0.5}]'],
    ["--fixture", "three-level-sqrt2", "limit", "--depth", "8", "--f", '[{"label":[1,0],"re":0.5},{"label":[-1,0],"re":0.5}]'],
    ["three-level", "--epsilon", "sqrt2"],
    ["classical", "--t-star", "9000.125"],
    ["--spectrum", '{"bases":["1","golden"],"levels":[[0,0],[1,0],[0,1]]}', "--seed", "12", "density"],
]


def run(exe: str, args: list[str], threads: str, out_path: str) -> bytes:
    env = dict(os.environ, CHRONOS_THREADS=threads)
    subprocess.run([exe, "--out", out_path, *args], env=env, check=True, capture_output=True)
    with open(out_path, "rb") as fh:
        return fh.read()


def main() -> int:
    exe = sys.argv[1]
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for i, args in enumerate(COMMANDS):
            outputs = [run(exe, args, threads, os.path.join(tmp, f"{i}_{j}.out"))
                       for j, threads in enumerate(["1", "3", "1", "0"])]
            same = all(o == outputs[0] for o in outputs) and len(outputs[0]) > 0
            print(("PASS " if same else "FAIL ") + " ".join(args))
            failures += not same
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
