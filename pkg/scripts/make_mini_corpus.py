#!/usr/bin/env python3
"""Regenerate the bundled synthetic mini corpus under src/framelens/data/mini.

The output is a pure function of the seed; rerunning this script must leave
the checked-in files byte-identical (the test suite enforces this).
"""

import pathlib

from framelens.synth import DEFAULT_SEED, generate_mini_corpus

OUT_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "framelens" / "data" / "mini"


def main():
    manifest = generate_mini_corpus(OUT_DIR, seed=DEFAULT_SEED)
    counts = manifest["counts"]
    print(
        f"wrote mini corpus to {OUT_DIR}: {counts['documents']} documents, "
        f"{counts['sentences']} sentences, {counts['instances']} instances, "
        f"{counts['events']} events"
    )


if __name__ == "__main__":
    main()
