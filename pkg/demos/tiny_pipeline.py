"""The whole command-line pipeline at smoke-test scale, in a temporary directory.

datagen -> three training stages -> sample -> eval -> no-visual ablation.
Takes a few minutes on one CPU core; the numbers are meaningless at this size.
"""

import json
import sys
import tempfile
from pathlib import Path

from unividit.cli import main
from unividit.media import save_strip
from unividit.world import make_sample

CONFIG = Path(__file__).resolve().parent.parent / "configs" / "smoke.json"


def run(*args):
    print("$ unividit", " ".join(args))
    if main(list(args)) != 0:
        sys.exit(1)


def write_instruction(root: Path) -> Path:
    s = make_sample("incontext_edit_delete", 3, "test")
    refs = []
    for r in s.instruction.refs:
        name = f"ref{r.ref_id}.png"
        save_strip(r.payload, root / name)
        refs.append({"id": r.ref_id, "kind": r.kind, "path": name, "frames": int(r.payload.shape[0])})
    doc = {"task": s.instruction.task, "text": " ".join(s.instruction.text), "refs": refs, "source_video_ref": s.instruction.source_video_ref}
    path = root / "instruction.json"
    path.write_text(json.dumps(doc, indent=2))
    print("instruction:", doc["text"])
    return path


with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    base = ["--config", str(CONFIG), "--seed", "0"]
    run("datagen", *base, "--out", str(root / "data"))
    run("train", *base, "--stage", "1", "--steps", "20", "--resume", str(root / "data"), "--out", str(root / "s1"))
    run("train", *base, "--stage", "2", "--steps", "10", "--resume", str(root / "s1"), "--out", str(root / "s2"))
    run("train", *base, "--stage", "3", "--steps", "20", "--resume", str(root / "s2"), "--out", str(root / "s3"))
    run("sample", *base, "--resume", str(root / "s3"), "--instruction", str(write_instruction(root)), "--out", str(root / "sample"))
    run("eval", *base, "--suite", "t2v", "--suite", "ic_edit_delete", "--resume", str(root / "s3"), "--out", str(root / "eval"))
    run("ablate", *base, "--kind", "no_visual_for_mmdit", "--suite", "ic_gen_single", "--steps", "10", "--resume", str(root / "s2"), "--out", str(root / "ablate"))
