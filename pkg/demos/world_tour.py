"""One sample per task from the synthetic world, scored by the exact oracles.

Writes world_tour.png (one row per task) and prints each instruction next to
the prompt-following score of the ground truth and of a random scene.
"""

import sys

from unividit import evaluation as ev
from unividit.media import contact_sheet
from unividit.world import make_sample

TASKS = ["t2i", "t2v", "i2v", "image_edit", "incontext_gen", "incontext_edit_insert", "incontext_edit_delete", "incontext_edit_style"]


def main(out="world_tour.png"):
    rand = ev.random_output()
    rows = []
    for task in TASKS:
        s = make_sample(task, 7, "test")
        truth = ev.prompt_following(s.instruction, s.target)
        noise = ev.prompt_following(s.instruction, rand(s.instruction, 7))
        print(f"{task:<24} truth {truth:.1f}  random {noise:.1f}  | {' '.join(s.instruction.text)}")
        rows.append(s.target)
    contact_sheet(rows, out)
    print(f"wrote {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
