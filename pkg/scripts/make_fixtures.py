"""Regenerate the checked-in Cayley-table fixtures.

SL(2,3) is enumerated as 2x2 matrices over GF(3) with determinant 1, the
identity first and the rest in lexicographic order of their entries.
"""

import itertools
from pathlib import Path

from hclab.corpus import FIXTURES_DIR, dump_cayley_text
from hclab.group import from_cayley_table


def sl23_table():
    mats = [m for m in itertools.product(range(3), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 3 == 1]
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)
    index = {m: i for i, m in enumerate(mats)}

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    table = [[index[mul(x, y)] for y in mats] for x in mats]
    labels = [f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]]" for m in mats]
    return table, labels


def main(out_dir: Path = FIXTURES_DIR):
    table, labels = sl23_table()
    G = from_cayley_table(table, "SL23", labels)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "sl23.cayley").write_text(dump_cayley_text(G))
    print(f"wrote {out_dir / 'sl23.cayley'} (order {G.order})")


if __name__ == "__main__":
    main()
