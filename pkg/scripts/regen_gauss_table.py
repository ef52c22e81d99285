"""Regenerate src/hypercontig/_gauss_table.py from the seed relations.

    python scripts/regen_gauss_table.py          # rewrite the table
    python scripts/regen_gauss_table.py --check  # exit 1 if it is stale
"""

import argparse
import pathlib
import sys

from hypercontig.exprio import print_expr
from hypercontig.gauss_core import derive_gauss_relations

TARGET = pathlib.Path(__file__).resolve().parents[1] / "src" / "hypercontig" / "_gauss_table.py"


def render() -> str:
    lines = [
        '"""Generated by scripts/regen_gauss_table.py; do not edit by hand."""',
        "",
        "GAUSS_RELATIONS = (",
    ]
    for names, rel in derive_gauss_relations():
        lines.append(f"    ({names!r}, (")
        for s, c in rel.terms:
            lines.append(f"        ({tuple(s)!r}, {print_expr(c)!r}),")
        lines.append("    )),")
    lines.append(")")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args(argv)
    text = render()
    if args.check:
        current = TARGET.read_text() if TARGET.exists() else ""
        if current != text:
            print(f"{TARGET} is stale", file=sys.stderr)
            return 1
        print("table up to date")
        return 0
    TARGET.write_text(text)
    print(f"wrote {TARGET}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
