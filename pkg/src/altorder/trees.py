"""Plane tree encodings of noncrossing partitions.

Shapes are nested tuples: a plane rooted tree is the tuple of its subtrees
in left-to-right order, so a single vertex is ``()``.  Ternary trees use
``None`` for an empty tree and a 3-tuple for an internal node.

Conventions for the bicolored tree of ``x`` in NC_N, with
``y = x^-1 (1 ... N)``:

* white vertices are cycles of ``x``, black vertices cycles of ``y``, and
  edge ``i`` joins the two cycles containing ``i``;
* going clockwise around a vertex from edge ``i`` reaches the edge of the
  next entry of its cycle;
* cutting the marked edge ``1`` leaves a white-side and a black-side tree;
  the children of a vertex are listed counter-clockwise, starting just after
  the edge towards its parent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .errors import MalformedTree, NotNoncrossing, NotOnc, WrongFlavor
from .noncrossing import is_noncrossing, onc_membership
from .perm import Permutation, compose, inverse, long_cycle

WHITE, BLACK = "white", "black"
EVEN, TERNARY = "even", "ternary"


def tree_edges(t: tuple) -> int:
    return sum(1 + tree_edges(c) for c in t)


def is_even_tree(t) -> bool:
    return isinstance(t, tuple) and len(t) % 2 == 0 and all(is_even_tree(c) for c in t)


def is_ternary_tree(t) -> bool:
    return t is None or (isinstance(t, tuple) and len(t) == 3 and all(is_ternary_tree(c) for c in t))


def ternary_internal(t) -> int:
    return 0 if t is None else 1 + sum(ternary_internal(c) for c in t)


def tree_to_string(t: tuple) -> str:
    """Nested parentheses, e.g. ``(()())`` for a root with two leaves."""
    return "(" + "".join(tree_to_string(c) for c in t) + ")"


def tree_from_string(s: str) -> tuple:
    stack = [[]]
    for ch in s.strip():
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if len(stack) < 2:
                raise MalformedTree(f"unbalanced tree string {s!r}")
            done = tuple(stack.pop())
            stack[-1].append(done)
        elif not ch.isspace():
            raise MalformedTree(f"unexpected character {ch!r}")
    if len(stack) != 1 or len(stack[0]) != 1:
        raise MalformedTree(f"tree string {s!r} does not describe one tree")
    return stack[0][0]


@dataclass(frozen=True)
class PlaneRootedTree:
    shape: object
    flavor: str

    def __post_init__(self):
        ok = is_even_tree(self.shape) if self.flavor == EVEN else (
            is_ternary_tree(self.shape) if self.flavor == TERNARY else None)
        if ok is None:
            raise WrongFlavor(f"unknown flavor {self.flavor!r}")
        if not ok:
            raise WrongFlavor(f"shape is not a valid {self.flavor} tree")

    @property
    def size(self) -> int:
        """Edges for an even tree, internal nodes for a ternary tree."""
        return tree_edges(self.shape) if self.flavor == EVEN else ternary_internal(self.shape)


@dataclass(frozen=True)
class BicoloredPlaneTree:
    """Edge-rooted bicolored plane tree, stored as the two sides of its root edge."""

    white_side: tuple
    black_side: tuple

    @property
    def edges(self) -> int:
        return 1 + tree_edges(self.white_side) + tree_edges(self.black_side)

    def rotation_system(self) -> tuple:
        """``(colors, rotations, ends, marked)`` of the underlying plane tree.

        ``rotations[v]`` lists the edges at ``v`` in clockwise order, starting
        at the edge towards the white root's parent side (the marked edge for
        the two roots); ``ends[e] = (white vertex, black vertex)``.
        """
        return rooted_rotation(self.white_side + (self.black_side,), WHITE)

    def degrees(self) -> tuple:
        """``(white degrees, black degrees, degree of the black root)``."""
        colors, rotations, _, _ = self.rotation_system()
        white = sorted((len(r) for c, r in zip(colors, rotations) if c == WHITE), reverse=True)
        black = sorted((len(r) for c, r in zip(colors, rotations) if c == BLACK), reverse=True)
        return tuple(white), tuple(black), len(self.black_side) + 1

    def to_nested(self) -> dict:
        """JSON-ready nesting from the white end of the marked edge.

        The black end of the marked edge is the last child of the root.
        """

        def node(t: tuple, color: str) -> dict:
            other = BLACK if color == WHITE else WHITE
            return {"color": color, "children": [node(c, other) for c in t]}

        root = node(self.white_side, WHITE)
        marked = node(self.black_side, BLACK)
        marked["marked_edge"] = True
        root["children"].append(marked)
        return root

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_nested(), indent=indent)

    def to_dot(self, labels: dict | None = None, name: str = "phi") -> str:
        """Undirected DOT drawing; ``labels`` maps edge ids to edge labels."""
        colors, rotations, ends, marked = self.rotation_system()
        lines = [f"graph {name} {{", "  node [shape=circle, label=\"\", width=0.2];"]
        for v, c in enumerate(colors):
            fill = "white" if c == WHITE else "black"
            lines.append(f"  v{v} [style=filled, fillcolor={fill}];")
        for e, (w, b) in enumerate(ends):
            attrs = []
            if labels is not None:
                attrs.append(f'label="{labels[e]}"')
            if e == marked:
                attrs.append("color=red, penwidth=2")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  v{w} -- v{b}{suffix};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# the correspondence


def _hang(label: int, here: Permutation, there: Permutation) -> tuple:
    """Subtree at the vertex of ``here`` entered through edge ``label``.

    Its children are the later entries of that cycle, listed backwards;
    each leads to a vertex of ``there``.
    """
    out = []
    j = here(label)
    while j != label:
        out.append(j)
        j = here(j)
    return tuple(_hang(c, there, here) for c in reversed(out))


def phi(x: Permutation) -> BicoloredPlaneTree:
    """Bicolored plane tree of ``x`` in NC_N, rooted at the edge labeled 1."""
    if x.n < 1:
        raise NotNoncrossing("degree must be positive")
    if not is_noncrossing(x):
        raise NotNoncrossing(f"{x} is not below the long cycle")
    y = compose(inverse(x), long_cycle(x.n))
    return BicoloredPlaneTree(_hang(1, x, y), _hang(1, y, x))


def rooted_rotation(shape: tuple, root_color: str) -> tuple:
    """Rotation system of a rooted plane tree whose last root child is distinguished.

    Children are read counter-clockwise after the parent edge; at the root
    the clockwise order starts at the last child.  Returns
    ``(colors, rotations, ends, distinguished edge)``.
    """
    if not shape:
        raise MalformedTree("the root needs at least one edge")
    colors, rotations, ends = [], [], []

    def build(t: tuple, color: str, parent_edge) -> int:
        v = len(colors)
        colors.append(color)
        rotations.append(None)
        other = BLACK if color == WHITE else WHITE
        child_edges = []
        for c in t:
            e = len(ends)
            ends.append(None)
            u = build(c, other, e)
            ends[e] = (v, u) if color == WHITE else (u, v)
            child_edges.append(e)
        if parent_edge is None:
            rotations[v] = (child_edges[-1],) + tuple(reversed(child_edges[:-1]))
        else:
            rotations[v] = (parent_edge,) + tuple(reversed(child_edges))
        return v

    build(shape, root_color, None)
    return colors, rotations, ends, rotations[0][0]


def label_walk(rotation: tuple, start_label: int = 1) -> dict:
    """Edge id -> label, walking clockwise from the distinguished edge.

    Every labeled step crosses an edge from its white to its black end; the
    labels run ``start_label, ..., N, 1, ...`` cyclically.
    """
    colors, rotations, ends, start = rotation
    succ = {}
    for v, rot in enumerate(rotations):
        for i, e in enumerate(rot):
            succ[(v, e)] = rot[(i + 1) % len(rot)]
    n = len(ends)
    labels = {}
    e = start
    for step in range(n):
        if e in labels:
            raise MalformedTree("labeling walk revisited an edge")
        labels[e] = (start_label - 1 + step) % n + 1
        e2 = succ[(ends[e][1], e)]
        e = succ[(ends[e2][0], e2)]
    if e != start or len(labels) != n:
        raise MalformedTree("labeling walk did not close up")
    return labels


def _white_cycles(rotation: tuple, labels: dict) -> list:
    colors, rotations, _, _ = rotation
    return [[labels[e] for e in rot] for c, rot in zip(colors, rotations) if c == WHITE]


def phi_labels(tree: BicoloredPlaneTree) -> dict:
    return label_walk(tree.rotation_system(), 1)


def phi_inverse(tree: BicoloredPlaneTree) -> Permutation:
    rot = tree.rotation_system()
    return Permutation.from_cycles(_white_cycles(rot, label_walk(rot, 1)), tree.edges)


def onc_tree_pair(x: Permutation) -> tuple:
    """Even trees left by cutting the marked edge of ``phi(x)``, x in ONC of odd degree."""
    if x.n % 2 == 0 or not onc_membership(x).member:
        raise NotOnc(f"{x} is not in ONC_{x.n} with odd degree")
    t = phi(x)
    return t.white_side, t.black_side


def onc_tree_pair_inverse(pair: tuple) -> Permutation:
    white, black = pair
    if not (is_even_tree(white) and is_even_tree(black)):
        raise WrongFlavor("both components must be even trees")
    return phi_inverse(BicoloredPlaneTree(white, black))


def onc_even_tree(x: Permutation) -> tuple:
    """Even tree for x in ONC of even degree.

    The only even-degree vertex of ``phi(x)`` is the black vertex on edge N;
    it becomes the root, with edge N as its last child.
    """
    n = x.n
    if n % 2 == 1 or not onc_membership(x).member:
        raise NotOnc(f"{x} is not in ONC_{n} with even degree")
    y = compose(inverse(x), long_cycle(n))
    return _hang(n, y, x) + (_hang(n, x, y),)


def onc_even_tree_inverse(t: tuple) -> Permutation:
    if not is_even_tree(t) or not t:
        raise WrongFlavor("expected a nonempty even tree")
    rot = rooted_rotation(t, BLACK)
    n = len(rot[2])
    return Permutation.from_cycles(_white_cycles(rot, label_walk(rot, n)), n)


# ---------------------------------------------------------------------------
# even trees and ternary trees


def even_ternary(t: tuple):
    """Pair children (c1, c2), (c3, c4), ... into a right comb of ternary nodes."""
    if not is_even_tree(t):
        raise WrongFlavor("not an even tree")

    def enc(children: tuple):
        if not children:
            return None
        return (enc(children[0]), enc(children[1]), enc(children[2:]))

    return enc(t)


def ternary_even(t) -> tuple:
    if not is_ternary_tree(t):
        raise WrongFlavor("not a ternary tree")

    def dec(node) -> tuple:
        if node is None:
            return ()
        a, b, rest = node
        return (dec(a), dec(b)) + dec(rest)

    return dec(t)


def enumerate_even_trees(edges: int) -> list:
    """All even trees with the given number of edges."""
    memo = {}

    def forests(e: int, parity: int) -> list:
        # ordered forests of even trees with e edges total and a number of
        # trees congruent to ``parity`` mod 2
        key = (e, parity)
        if key in memo:
            return memo[key]
        out = [()] if e == 0 and parity == 0 else []
        for first in range(1, e + 1):
            for head in trees(first):
                for tail in forests(e - first, 1 - parity):
                    out.append((head,) + tail)
        memo[key] = out
        return out

    def trees(e: int) -> list:
        # trees hanging from an edge, e counting that edge
        return forests(e - 1, 0)

    return forests(edges, 0) if edges >= 0 else []


def enumerate_ternary_trees(internal: int) -> list:
    memo = {0: [None]}

    def go(k: int) -> list:
        if k in memo:
            return memo[k]
        out = []
        for i in range(k):
            for j in range(k - i):
                for a in go(i):
                    for b in go(j):
                        for c in go(k - 1 - i - j):
                            out.append((a, b, c))
        memo[k] = out
        return out

    return go(internal)


def count_even_trees(edges: int) -> int:
    """Closed form; zero for odd edge counts."""
    if edges < 0 or edges % 2:
        return 0
    m = edges // 2
    return comb(3 * m, m) // (2 * m + 1)
