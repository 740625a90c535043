#!/usr/bin/env python3
"""Export a bounded odd-predecessor tree for rendering with graphviz.

    python scripts/export_tree.py --root 1 --max-value 500 --max-depth 8 --out tree.gv
    dot -Tpng -O tree.gv
"""

import argparse
import sys
from pathlib import Path

from collatzlab import build_tree, tree_to_dot, tree_to_json


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--root", type=int, default=1)
    ap.add_argument("--max-value", type=int, default=500)
    ap.add_argument("--max-depth", type=int, default=8)
    ap.add_argument("--format", choices=("dot", "json"), default="dot")
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)

    node = build_tree(args.root, args.max_value, args.max_depth)
    text = tree_to_dot(node) if args.format == "dot" else tree_to_json(node)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
