"""Named group constructors, the spec-string grammar, the Cayley-table file
format, and the default verification corpus.

Spec strings (also the canonical names of corpus groups)::

    C12  D8  Q8  Dic3  S4  A5  SL23  EA(3,2)  SD(5,4,2)  prod(C3,S3)  file:PATH

``D<m>`` is the dihedral group of order m and ``Dic<n>`` the dicyclic group
of order 4n (``Q8`` is Dic2). ``SD(m,n,k)`` is C_m x| C_n with the generator
of C_n acting by x -> x^k.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import config
from .errors import FileFormatError, InvalidAction, SpecParseError
from .group import Group, direct_product, from_cayley_table

CORPUS_VERSION = "1"

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # Cyclic | Dihedral | Dicyclic | ElementaryAbelian | Symmetric | Alternating | SL23 | SemidirectCyclic | Product | FromFile
    params: tuple[int, ...] = ()
    factors: tuple[GroupSpec, ...] = ()
    path: str | None = None

    @property
    def canonical_name(self) -> str:
        k, p = self.kind, self.params
        if k == "Cyclic":
            return f"C{p[0]}"
        if k == "Dihedral":
            return f"D{2 * p[0]}"
        if k == "Dicyclic":
            return "Q8" if p[0] == 2 else f"Dic{p[0]}"
        if k == "ElementaryAbelian":
            return f"EA({p[0]},{p[1]})"
        if k == "Symmetric":
            return f"S{p[0]}"
        if k == "Alternating":
            return f"A{p[0]}"
        if k == "SL23":
            return "SL23"
        if k == "SemidirectCyclic":
            return f"SD({p[0]},{p[1]},{p[2]})"
        if k == "Product":
            return f"prod({self.factors[0].canonical_name},{self.factors[1].canonical_name})"
        if k == "FromFile":
            return f"file:{self.path}"
        raise ValueError(f"unknown kind {k!r}")

    @property
    def expected_order(self) -> int | None:
        k, p = self.kind, self.params
        if k == "Cyclic":
            return p[0]
        if k == "Dihedral":
            return 2 * p[0]
        if k == "Dicyclic":
            return 4 * p[0]
        if k == "ElementaryAbelian":
            return p[0] ** p[1]
        if k == "Symmetric":
            return _factorial(p[0])
        if k == "Alternating":
            return max(1, _factorial(p[0]) // 2)
        if k == "SL23":
            return 24
        if k == "SemidirectCyclic":
            return p[0] * p[1]
        if k == "Product":
            a, b = (f.expected_order for f in self.factors)
            return a * b if a and b else None
        return None


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# Constructors. Element orderings are deterministic and put the identity at 0.


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return Group(table, f"C{n}", [f"a^{i}" for i in range(n)])


def dihedral(n: int) -> Group:
    """Order 2n: elements r^i s^j stored at index i + n*j."""
    if n < 1:
        raise ValueError("dihedral parameter must be positive")

    def mul(x, y):
        i, j = x % n, x // n
        k, l = y % n, y // n
        i2 = (i + (-k if j else k)) % n
        return i2 + n * ((j + l) % 2)

    m = 2 * n
    table = [[mul(x, y) for y in range(m)] for x in range(m)]
    labels = [f"r^{x % n}" + ("s" if x >= n else "") for x in range(m)]
    return Group(table, f"D{m}", labels)


def dicyclic(n: int) -> Group:
    """Order 4n: a^i x^j at index i + 2n*j, with x^2 = a^n and x^-1 a x = a^-1."""
    if n < 1:
        raise ValueError("dicyclic parameter must be positive")
    m = 2 * n

    def mul(u, v):
        i, j = u % m, u // m
        k, l = v % m, v // m
        if not j:
            return (i + k) % m + m * l
        i2 = i - k
        if l:
            return (i2 + n) % m
        return i2 % m + m

    table = [[mul(u, v) for v in range(2 * m)] for u in range(2 * m)]
    labels = [f"a^{u % m}" + ("x" if u >= m else "") for u in range(2 * m)]
    return Group(table, "Q8" if n == 2 else f"Dic{n}", labels)


def elementary_abelian(p: int, k: int) -> Group:
    vecs = list(itertools.product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(vecs)}
    table = [[index[tuple((x + y) % p for x, y in zip(a, b))] for b in vecs] for a in vecs]
    return Group(table, f"EA({p},{k})", ["".join(map(str, v)) for v in vecs])


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = perm[j]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "()"


def _perm_group(perms: list[tuple[int, ...]], name: str) -> Group:
    # a*b applies a first, then b
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(b[a[i]] for i in range(len(a)))] for b in perms] for a in perms]
    return Group(table, name, [_cycle_label(p) for p in perms])


def _is_even(perm: tuple[int, ...]) -> bool:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return inversions % 2 == 0


def symmetric(n: int) -> Group:
    config.check_cap("symmetric", _factorial(n), "order")
    return _perm_group(list(itertools.permutations(range(n))), f"S{n}")


def alternating(n: int) -> Group:
    config.check_cap("alternating", max(1, _factorial(n) // 2), "order")
    perms = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return _perm_group(perms, f"A{n}")


def semidirect_cyclic(m: int, n: int, k: int) -> Group:
    """C_m x| C_n = <a, b | a^m, b^n, b a b^-1 = a^k>; a^i b^j at index i + m*j."""
    from math import gcd

    if m < 1 or n < 1:
        raise ValueError("orders must be positive")
    if gcd(k, m) != 1 or pow(k, n, m) != 1 % m:
        raise InvalidAction(f"x -> x^{k} is not an action of C{n} on C{m}")
    config.check_cap("semidirect_cyclic", m * n, "order")
    kp = [pow(k, j, m) for j in range(n)]

    def mul(u, v):
        i, j = u % m, u // m
        i2, l = v % m, v // m
        return (i + i2 * kp[j]) % m + m * ((j + l) % n)

    table = [[mul(u, v) for v in range(m * n)] for u in range(m * n)]
    labels = [f"a^{u % m}b^{u // m}" for u in range(m * n)]
    return Group(table, f"SD({m},{n},{k})", labels)


def sl23() -> Group:
    return load_group(FIXTURES_DIR / "sl23.cayley")


# Cayley-table files


def parse_cayley_text(text: str, default_name: str = "G") -> Group:
    lines = text.splitlines()
    rows: list[list[int]] = []
    name = default_name
    labels: dict[int, str] = {}
    body = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise FileFormatError("empty file", line=1)
    lineno, first = body[0]
    try:
        n = int(first.strip())
    except ValueError:
        raise FileFormatError(f"expected group order, got {first.strip()!r}", line=lineno, column=1)
    if n < 1:
        raise FileFormatError("group order must be at least 1", line=lineno, column=1)
    config.check_cap("load_group", n, "order")
    if len(body) < n + 1:
        raise FileFormatError(f"expected {n} table rows, found {len(body) - 1}", line=len(lines))
    for lineno, ln in body[1:n + 1]:
        parts = ln.split()
        if len(parts) != n:
            raise FileFormatError(f"expected {n} entries, found {len(parts)}", line=lineno)
        row = []
        for col, tok in enumerate(parts, start=1):
            try:
                row.append(int(tok))
            except ValueError:
                raise FileFormatError(f"not an integer: {tok!r}", line=lineno, column=col)
        rows.append(row)
    for lineno, ln in body[n + 1:]:
        word, _, rest = ln.strip().partition(" ")
        if word == "name" and rest:
            name = rest.strip()
        elif word == "label":
            idx, _, lab = rest.strip().partition(" ")
            try:
                i = int(idx)
            except ValueError:
                raise FileFormatError(f"bad label index {idx!r}", line=lineno, column=7)
            if not 0 <= i < n:
                raise FileFormatError(f"label index {i} out of range", line=lineno, column=7)
            labels[i] = lab.strip()
        else:
            raise FileFormatError(f"unrecognized trailing line {ln.strip()!r}", line=lineno, column=1)
    element_labels = [labels.get(i, str(i)) for i in range(n)] if labels else None
    return from_cayley_table(rows, name, element_labels)


def _resolve(path: str | Path) -> Path:
    p = Path(path)
    if p.exists():
        return p
    alt = Path(__file__).parent / p
    if alt.exists():
        return alt
    return p


def load_group(path: str | Path) -> Group:
    """Load a group from the Cayley-table text format.

    Relative paths that do not exist are retried under the package directory,
    so ``fixtures/sl23.cayley`` works from any working directory.
    """
    p = _resolve(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}")
    return parse_cayley_text(text, default_name=p.stem)


def dump_cayley_text(G: Group) -> str:
    out = [str(G.order)]
    out += [" ".join(map(str, row)) for row in G.table]
    out.append(f"name {G.name}")
    if G.element_labels is not None:
        out += [f"label {i} {lab}" for i, lab in enumerate(G.element_labels)]
    return "\n".join(out) + "\n"


# Spec strings

_SIMPLE = re.compile(r"(C|D|Dic|S|A)(\d+)")
_CALL = re.compile(r"(EA|SD|prod)\(")


def parse_spec(text: str) -> GroupSpec:
    spec, pos = _parse(text, 0)
    if pos != len(text):
        raise SpecParseError("trailing input", text, pos)
    return spec


def _parse(text: str, pos: int) -> tuple[GroupSpec, int]:
    if text.startswith("file:", pos):
        if pos != 0:
            raise SpecParseError("file: only allowed at top level", text, pos)
        path = text[5:]
        if not path:
            raise SpecParseError("missing path", text, 5)
        return GroupSpec("FromFile", path=path), len(text)
    for literal, spec in (("SL23", GroupSpec("SL23")), ("Q8", GroupSpec("Dicyclic", (2,)))):
        if text.startswith(literal, pos):
            return spec, pos + len(literal)
    m = _CALL.match(text, pos)
    if m:
        head = m.group(1)
        pos = m.end()
        if head == "prod":
            a, pos = _parse(text, pos)
            pos = _expect(text, pos, ",")
            b, pos = _parse(text, pos)
            pos = _expect(text, pos, ")")
            return GroupSpec("Product", factors=(a, b)), pos
        nums, pos = _int_list(text, pos)
        want = 2 if head == "EA" else 3
        if len(nums) != want:
            raise SpecParseError(f"{head} takes {want} integers", text, pos)
        if head == "EA":
            return GroupSpec("ElementaryAbelian", tuple(nums)), pos
        return GroupSpec("SemidirectCyclic", tuple(nums)), pos
    m = _SIMPLE.match(text, pos)
    if m:
        head, num = m.group(1), int(m.group(2))
        if head == "C":
            return GroupSpec("Cyclic", (num,)), m.end()
        if head == "D":
            if num < 2 or num % 2:
                raise SpecParseError("dihedral order must be even and at least 2", text, pos)
            return GroupSpec("Dihedral", (num // 2,)), m.end()
        if head == "Dic":
            return GroupSpec("Dicyclic", (num,)), m.end()
        if head == "S":
            return GroupSpec("Symmetric", (num,)), m.end()
        return GroupSpec("Alternating", (num,)), m.end()
    raise SpecParseError("expected a group spec", text, pos)


def _expect(text: str, pos: int, ch: str) -> int:
    if not text.startswith(ch, pos):
        raise SpecParseError(f"expected {ch!r}", text, pos)
    return pos + 1


def _int_list(text: str, pos: int) -> tuple[list[int], int]:
    m = re.compile(r"\s*(-?\d+)\s*((?:,\s*-?\d+\s*)*)\)").match(text, pos)
    if not m:
        raise SpecParseError("expected integer list", text, pos)
    nums = [int(x) for x in re.findall(r"-?\d+", text[pos:m.end()])]
    return nums, m.end()


_BUILDERS: dict[str, Callable[..., Group]] = {
    "Cyclic": cyclic,
    "Dihedral": dihedral,
    "Dicyclic": dicyclic,
    "ElementaryAbelian": elementary_abelian,
    "Symmetric": symmetric,
    "Alternating": alternating,
    "SemidirectCyclic": semidirect_cyclic,
}


def realize(spec: GroupSpec | str) -> Group:
    """Build the group a spec describes, named by its canonical name."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    expected = spec.expected_order
    if expected is not None:
        config.check_cap("realize", expected, "order")
    if spec.kind == "FromFile":
        return load_group(spec.path)
    if spec.kind == "SL23":
        G = sl23()
    elif spec.kind == "Product":
        a, b = (realize(f) for f in spec.factors)
        G = direct_product(a, b)
    else:
        G = _BUILDERS[spec.kind](*spec.params)
    G.name = spec.canonical_name
    return G


DEFAULT_SPECS = (
    [f"C{n}" for n in list(range(1, 13)) + [16, 27]]
    + ["EA(2,3)", "EA(3,2)", "D8", "D10", "D12", "D14", "D16", "Q8", "Dic3"]
    + ["S3", "S4", "S5", "A4", "A5", "SL23"]
    + ["prod(C3,S3)", "prod(C2,A4)", "prod(D8,C3)", "SD(5,4,2)", "SD(7,3,2)", "prod(C4,C2)"]
)


def standard_corpus() -> list[tuple[GroupSpec, Group]]:
    """The default corpus, in fixed order. Append-only across versions."""
    return [(parse_spec(s), realize(s)) for s in DEFAULT_SPECS]
