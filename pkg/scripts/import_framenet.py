#!/usr/bin/env python3
"""Compile a FrameNet XML release into the runtime KB format.

Usage: python scripts/import_framenet.py /path/to/fndata-1.7 out/kb.jsonl

The output file plugs into load_kb together with an agentivity table and an
optional role-mapping table (see docs/formats.md).
"""

import argparse

from framelens.fnimport import compile_framenet


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("release_dir", help="FrameNet release directory (contains frame/)")
    parser.add_argument("out_path", help="output KB record file")
    args = parser.parse_args()
    n_frames, n_relations = compile_framenet(args.release_dir, args.out_path)
    print(f"compiled {n_frames} frames and {n_relations} relations into {args.out_path}")


if __name__ == "__main__":
    main()
