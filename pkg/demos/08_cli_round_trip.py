"""Driving the command-line tool: solve, verify, convert to boxes and back."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def cli(*args):
    done = subprocess.run([sys.executable, "-m", "boxicity.cli", *args], capture_output=True, text=True)
    return done.returncode, json.loads(done.stdout) if done.stdout.strip() else None


work = Path(tempfile.mkdtemp())
code, cert = cli("unionbox", "--family", "octahedron")
print("unionbox exit", code, "value", cert["value"])
(work / "cert.json").write_text(json.dumps(cert))

print("verify:", cli("verify", str(work / "cert.json")))
code, rep = cli("boxes", str(work / "cert.json"))
print("boxes: d =", rep["d"])
(work / "rep.json").write_text(json.dumps(rep))
code, back = cli("project", str(work / "rep.json"))
print("project -> localbox value", back["value"])

cert["complement_cover"]["bags"][0].pop()
(work / "bad.json").write_text(json.dumps(cert))
print("tampered:", cli("verify", str(work / "bad.json")))
