"""Backward structure of the odd-only map.

Every odd y not divisible by 3 has infinitely many odd predecessors x with
odd_step(x) = y; they come in closed form from two residue branches:

  y = 6n-1 (y = 5 mod 6):  x = 2^p n - (1 + 2^(p-1))/3      for p = 4, 6, 8, ...
  y = 6n-5 (y = 1 mod 6):  x = 2^p n - (1 + 5 2^(p-1))/3    for p = 3, 5, 7, ...

where p counts standard-map steps from x to y.  These closed forms cover
every predecessor larger than y.  When y = 5 mod 6 there is additionally a
single smaller predecessor, (2y-1)/3, reached in one halving; the tree
builder includes it, while the formula enumerator and its brute-force
oracle stick to the larger family.  Odd multiples of 3 have no
predecessors at all (3x+1 is never divisible by 3), so they begin branches
of the predecessor tree.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .core import next_odd_distance, odd_step


class OddKind(enum.Enum):
    """Behavior class of an odd value under the odd-only map."""

    DECREASING = "4n+1"  # next odd value is smaller
    INCREASING = "4n-1"  # next odd value is larger
    TRIVIAL = "trivial"  # the fixed point 1


@dataclass(frozen=True, slots=True)
class OddClass:
    kind: OddKind
    n: int | None
    multiple_of_3: bool


def classify(x: int) -> OddClass:
    """Residue class of an odd x: 4n+1 (descends), 4n-1 (ascends), or 1.

    The multiple-of-3 flag is orthogonal and marks branch roots.
    """
    if not isinstance(x, int) or x < 1 or not x & 1:
        raise ValueError(f"classify requires an odd integer >= 1, got {x!r}")
    if x == 1:
        return OddClass(OddKind.TRIVIAL, None, False)
    if x & 3 == 1:
        return OddClass(OddKind.DECREASING, (x - 1) // 4, x % 3 == 0)
    return OddClass(OddKind.INCREASING, (x + 1) // 4, x % 3 == 0)


def _branch(y: int) -> tuple[int, int, int] | None:
    """(n, first exponent p, numerator multiplier) for y's residue branch."""
    r = y % 6
    if r == 5:
        return (y + 1) // 6, 4, 1
    if r == 1:
        return (y + 5) // 6, 3, 5
    return None  # odd multiple of 3: no predecessors


def predecessors_formula(y: int, count: int) -> list[int]:
    """First `count` odd predecessors of y in increasing order, closed form.

    Empty for odd multiples of 3.
    """
    if not isinstance(y, int) or y < 1 or not y & 1:
        raise ValueError(f"predecessors require an odd integer >= 1, got {y!r}")
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be an integer >= 1, got {count!r}")
    branch = _branch(y)
    if branch is None:
        return []
    n, p, mult = branch
    out = []
    for _ in range(count):
        out.append((1 << p) * n - (1 + mult * (1 << (p - 1))) // 3)
        p += 2
    return out


def smaller_predecessor(y: int) -> int | None:
    """The unique predecessor below y, or None.

    Exists exactly when y = 5 mod 6: x = (2y-1)/3, an ascending-class value
    one halving away from y.  It is the only preimage the closed-form
    branches do not produce.
    """
    if not isinstance(y, int) or y < 1 or not y & 1:
        raise ValueError(f"predecessors require an odd integer >= 1, got {y!r}")
    if y % 6 != 5:
        return None
    return (2 * y - 1) // 3


def predecessors_upto(y: int, max_value: int) -> list[int]:
    """The complete preimage of y under the odd-only map, up to max_value.

    Ascending; includes the smaller predecessor when it exists, then the
    closed-form family while it stays within the bound.
    """
    if not isinstance(y, int) or y < 1 or not y & 1:
        raise ValueError(f"predecessors require an odd integer >= 1, got {y!r}")
    out = []
    small = smaller_predecessor(y)
    if small is not None and small <= max_value:
        out.append(small)
    branch = _branch(y)
    if branch is None:
        return out
    n, p, mult = branch
    while True:
        x = (1 << p) * n - (1 + mult * (1 << (p - 1))) // 3
        if x > max_value:
            return out
        out.append(x)
        p += 2


def predecessors_direct(y: int, max_exponent: int) -> list[int]:
    """Brute-force oracle for the closed form: odd x with 3x+1 = y*2^k.

    Scans exponents k = 2..max_exponent, which is exactly the
    larger-than-y family the formula produces; the k = 1 case is the
    smaller predecessor and is reported by smaller_predecessor instead.
    """
    if not isinstance(y, int) or y < 1 or not y & 1:
        raise ValueError(f"predecessors require an odd integer >= 1, got {y!r}")
    out = []
    for k in range(2, max_exponent + 1):
        t = (y << k) - 1
        if t % 3 == 0:
            out.append(t // 3)
    return out


@dataclass(frozen=True, slots=True)
class OddTreeNode:
    """Node of the finite predecessor expansion.

    ``truncated`` marks a node whose in-range predecessors exist but were
    not expanded because the depth limit was reached; the value bound alone
    never sets it, since every non-multiple-of-3 has predecessors beyond
    any finite bound.
    """

    value: int
    odd_class: OddClass
    children: tuple["OddTreeNode", ...]
    truncated: bool


def build_tree(root: int, max_value: int, max_depth: int) -> OddTreeNode:
    """Expand predecessors of root, keeping children <= max_value and depth <= max_depth.

    The fixed point 1 is never listed as its own child, which keeps the
    expansion finite at the trivial cycle.
    """
    if not isinstance(root, int) or root < 1 or not root & 1:
        raise ValueError(f"tree root must be an odd integer >= 1, got {root!r}")
    if max_value < 1 or max_depth < 0:
        raise ValueError("max_value must be >= 1 and max_depth >= 0")

    def expand(value: int, depth: int) -> OddTreeNode:
        preds = [p for p in predecessors_upto(value, max_value) if p != value]
        if depth == max_depth:
            return OddTreeNode(value, classify(value), (), truncated=bool(preds))
        children = tuple(expand(p, depth + 1) for p in preds)
        return OddTreeNode(value, classify(value), children, truncated=False)

    return expand(root, 0)


@dataclass(frozen=True, slots=True)
class RootsReport:
    """Outcome of checking that no odd-step image is a multiple of 3."""

    n_max: int
    checked: int
    counterexamples: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_roots(n_max: int) -> RootsReport:
    """Check odd_step(x) % 3 != 0 for every odd x <= n_max.

    Any counterexample would mean an odd multiple of 3 is reachable under
    the odd-only map; the expected report is empty.
    """
    if not isinstance(n_max, int) or n_max < 3:
        raise ValueError(f"n_max must be an integer >= 3, got {n_max!r}")
    bad = []
    checked = 0
    for x in range(1, n_max + 1, 2):
        checked += 1
        t = 3 * x + 1
        t //= t & -t
        if t % 3 == 0:
            bad.append(x)
    return RootsReport(n_max, checked, tuple(bad))


def tree_to_dict(node: OddTreeNode) -> dict:
    """JSON-ready view: value, class label, root3 flag, truncation, children."""
    return {
        "value": node.value,
        "class": node.odd_class.kind.value,
        "root3": node.odd_class.multiple_of_3,
        "truncated": node.truncated,
        "children": [tree_to_dict(c) for c in node.children],
    }


def tree_to_json(node: OddTreeNode) -> str:
    return json.dumps(tree_to_dict(node), indent=2) + "\n"


def tree_to_dot(node: OddTreeNode) -> str:
    """Graphviz source; edges point child -> parent, labeled with the number
    of standard-map steps between them, and multiples of 3 are drawn as
    filled red boxes (branch roots)."""
    lines = [
        "digraph odd_predecessors {",
        "  rankdir=BT;",
        '  node [shape=circle, fontname="monospace"];',
    ]

    def emit(n: OddTreeNode) -> None:
        if n.odd_class.multiple_of_3:
            lines.append(
                f'  "{n.value}" [shape=box, style=filled, fillcolor=red, fontcolor=white];'
            )
        elif n.truncated:
            lines.append(f'  "{n.value}" [peripheries=2];')
        for child in n.children:
            steps = next_odd_distance(child.value)
            lines.append(f'  "{child.value}" -> "{n.value}" [label="{steps}"];')
            emit(child)

    emit(node)
    lines.append("}")
    return "\n".join(lines) + "\n"


def consistent_edges(node: OddTreeNode) -> bool:
    """True when every child maps to its parent under the odd-only map."""
    return all(
        odd_step(c.value) == node.value and consistent_edges(c)
        for c in node.children
    )
