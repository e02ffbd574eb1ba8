"""Planar trees with distinguished leaves, their contraction posets, and A(T).

A tree is built from :class:`Leaf` and :class:`Node` values; children are
ordered and leaves carry a distinguished flag.  ``None`` stands for the empty
tree, the only object with no vertices.  Vertices are numbered in preorder
from 0 (the root), and an edge is named by the number of its lower vertex.

A :class:`TreePoint` decorates every internal node, in preorder, with an
A-element whose arity is the node's valence.  Contracting an edge composes
the decorations at its two ends; an undistinguished leaf contributes the
arity-0 element.  A node left without children becomes an undistinguished
leaf, which keeps the representation canonical.

Faces of the associahedron are indexed by leaf count by default
(``indexing="leaves"``: K(n) has dimension n - 2).  ``indexing="shifted"``
moves everything down by one so that K(2) is the interval.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence, Union

from .generators import random_a
from .operad import EMPTY_A, ONE, AElement, circ


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class Leaf:
    distinguished: bool = True


@dataclass(frozen=True)
class Node:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise TreeError("a node needs at least one child; use an undistinguished leaf")


Vertex = Union[Leaf, Node]


def _vertex_json(v: Vertex):
    if isinstance(v, Leaf):
        return 1 if v.distinguished else 0
    return [_vertex_json(c) for c in v.children]


def _vertex_from_json(data) -> Vertex:
    if isinstance(data, list):
        return Node(tuple(_vertex_from_json(c) for c in data))
    if data in (0, 1) and not isinstance(data, bool):
        return Leaf(bool(data))
    raise TreeError(f"bad tree JSON fragment {data!r}")


@dataclass(frozen=True)
class PlanarTree:
    root: Vertex

    def vertices(self) -> tuple[tuple[Vertex, Optional[int], int], ...]:
        """Preorder list of ``(vertex, parent id, position among siblings)``."""
        return self._preorder

    @cached_property
    def _preorder(self):
        out: list[tuple[Vertex, Optional[int], int]] = []

        def walk(v, parent, pos):
            me = len(out)
            out.append((v, parent, pos))
            if isinstance(v, Node):
                for k, c in enumerate(v.children):
                    walk(c, me, k)

        walk(self.root, None, 0)
        return tuple(out)

    def nodes(self) -> list[Node]:
        return [v for v, _, _ in self.vertices() if isinstance(v, Node)]

    @cached_property
    def valences(self) -> tuple[int, ...]:
        return tuple(len(v.children) for v in self.nodes())

    @cached_property
    def n(self) -> int:
        return sum(1 for v, _, _ in self.vertices() if isinstance(v, Leaf) and v.distinguished)

    @property
    def undistinguished(self) -> int:
        return sum(1 for v, _, _ in self.vertices() if isinstance(v, Leaf) and not v.distinguished)

    @property
    def internal_nodes(self) -> int:
        return len(self.nodes())

    def to_json(self):
        return _vertex_json(self.root)

    @classmethod
    def from_json(cls, data) -> Optional["PlanarTree"]:
        return None if data is None else cls(_vertex_from_json(data))

    def __str__(self):
        def show(v):
            if isinstance(v, Leaf):
                return "*" if v.distinguished else "o"
            return "(" + " ".join(show(c) for c in v.children) + ")"
        return show(self.root)


Tree = Optional[PlanarTree]
EMPTY_TREE: Tree = None


def star(n: int) -> PlanarTree:
    if n < 1:
        raise TreeError("stars need at least one leaf")
    return PlanarTree(Node(tuple(Leaf() for _ in range(n))))


def tree_json(t: Tree):
    return None if t is None else t.to_json()


def n_of(t: Tree) -> int:
    return 0 if t is None else t.n


def node_count(t: Tree) -> int:
    return 0 if t is None else t.internal_nodes


# -- grafting --------------------------------------------------------------

@dataclass(frozen=True)
class Graft:
    tree: Tree
    origin: tuple[tuple[str, int], ...]  # per result node: ("outer"|"inner", node index)
    edge: Optional[int]  # vertex id of the grafted root, None for the empty graft


@lru_cache(maxsize=1 << 16)
def graft_data(t: PlanarTree, i: int, t2: Tree) -> Graft:
    if t is None:
        raise TreeError("cannot graft onto the empty tree")
    if not 1 <= i <= t.n:
        raise TreeError(f"leaf index {i} out of range 1..{t.n}")
    counter = itertools.count(1)
    origin: list[tuple[str, int]] = []
    outer_nodes = itertools.count()
    graft_vertex: list[int] = []
    vid = itertools.count()

    def inner_walk(v: Vertex, inner_nodes) -> Vertex:
        next(vid)
        if isinstance(v, Leaf):
            return v
        origin.append(("inner", next(inner_nodes)))
        return Node(tuple(inner_walk(c, inner_nodes) for c in v.children))

    def walk(v: Vertex) -> Vertex:
        if isinstance(v, Leaf):
            if v.distinguished and next(counter) == i:
                if t2 is None:
                    next(vid)
                    return Leaf(False)
                graft_vertex.append(next(vid))
                return _inner_root(t2.root)
            next(vid)
            return v
        next(vid)
        origin.append(("outer", next(outer_nodes)))
        return Node(tuple(walk(c) for c in v.children))

    def _inner_root(v: Vertex) -> Vertex:
        inner_nodes = itertools.count()
        if isinstance(v, Leaf):
            return v
        origin.append(("inner", next(inner_nodes)))
        return Node(tuple(inner_walk(c, inner_nodes) for c in v.children))

    root = walk(t.root)
    return Graft(PlanarTree(root), tuple(origin), graft_vertex[0] if graft_vertex else None)


def graft(t: PlanarTree, i: int, t2: Tree) -> PlanarTree:
    """Replace the i-th distinguished leaf of ``t`` (1-based) by ``t2``."""
    return graft_data(t, i, t2).tree


# -- contractions ----------------------------------------------------------

def contractible_edges(t: Tree) -> list[int]:
    """Edges ending in an internal node or an undistinguished leaf."""
    if t is None:
        return []
    return [k for k, (v, parent, _) in enumerate(t.vertices())
            if parent is not None and (isinstance(v, Node) or not v.distinguished)]


@dataclass(frozen=True)
class TreePoint:
    tree: Tree
    decorations: tuple[AElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "decorations", tuple(self.decorations))
        valences = () if self.tree is None else self.tree.valences
        if len(valences) != len(self.decorations):
            raise TreeError(f"{len(valences)} internal nodes but {len(self.decorations)} decorations")
        for k, (val, a) in enumerate(zip(valences, self.decorations)):
            if a.arity != val:
                raise TreeError(f"node {k} has valence {val} but its decoration has arity {a.arity}")

    def to_json(self) -> dict:
        return {"tree": tree_json(self.tree), "decorations": [a.to_json() for a in self.decorations]}

    @classmethod
    def from_json(cls, data: dict) -> "TreePoint":
        return cls(PlanarTree.from_json(data["tree"]), tuple(AElement.from_json(a) for a in data["decorations"]))


@dataclass(frozen=True)
class Contraction:
    source: Tree
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        bad = self.edges - set(contractible_edges(self.source))
        if bad:
            raise TreeError(f"edges {sorted(bad)} cannot be contracted in {self.source}")

    @property
    def target(self) -> Tree:
        return _run_contraction(self, None)[0]

    def vertex_map(self) -> dict[int, int]:
        """Surviving source vertex id -> target vertex id."""
        return _run_contraction(self, None)[2]

    def then(self, other: "Contraction") -> "Contraction":
        """The composite: first ``self``, then ``other`` on ``self.target``."""
        if other.source != self.target:
            raise TreeError("contractions do not compose: target and source differ")
        back = {w: v for v, w in self.vertex_map().items()}
        return Contraction(self.source, self.edges | {back[e] for e in other.edges})

    def to_json(self) -> dict:
        return {"source": tree_json(self.source), "edges": sorted(self.edges)}


def _run_contraction(c: Contraction, decorations: Optional[Sequence[AElement]]):
    """Shared worker: returns (target tree, target decorations, vertex map)."""
    if c.source is None:
        return None, (), {}
    verts = c.source.vertices()
    decs = iter(decorations) if decorations is not None else None
    dec_of: dict[int, Optional[AElement]] = {}
    children_of: dict[int, list[int]] = {k: [] for k in range(len(verts))}
    for k, (v, parent, _) in enumerate(verts):
        if isinstance(v, Node):
            dec_of[k] = next(decs) if decs is not None else None
        if parent is not None:
            children_of[parent].append(k)

    def fold(k):
        """Decoration of k with contracted children merged in, and the surviving child items."""
        d = dec_of[k]
        items: list = []
        for child in children_of[k]:
            if child not in c.edges:
                items.append(finish(child))
                continue
            if isinstance(verts[child][0], Leaf):
                cd, citems = EMPTY_A, []
            else:
                cd, citems = fold(child)
            if d is not None:
                d = circ(d, len(items) + 1, cd)
            items.extend(citems)
        return d, items

    def finish(k):
        v = verts[k][0]
        if isinstance(v, Leaf):
            return v, (), [k]
        d, items = fold(k)
        if not items:
            return Leaf(False), (), [k]
        node = Node(tuple(iv for iv, _, _ in items))
        head = () if d is None else (d,)
        return node, head + tuple(x for _, ds, _ in items for x in ds), [k] + [i for _, _, ids in items for i in ids]

    root, out_decs, ids = finish(0)
    vmap = {src: tgt for tgt, src in enumerate(ids)}
    return PlanarTree(root), out_decs, vmap


def contract(c: Contraction, pt: TreePoint) -> TreePoint:
    if pt.tree != c.source:
        raise TreeError("point does not live on the contraction's source tree")
    tree, decs, _ = _run_contraction(c, pt.decorations)
    return TreePoint(tree, decs)


def full_contraction(t: Tree) -> Contraction:
    return Contraction(t, frozenset(contractible_edges(t)))


def evaluate(pt: TreePoint) -> AElement:
    """Contract every edge: the A(n) element the decorated tree composes to."""
    out = contract(full_contraction(pt.tree), pt)
    return out.decorations[0] if out.decorations else EMPTY_A


# -- eta, iota -------------------------------------------------------------

def eta(t: PlanarTree, i: int, t2: Tree, pt: TreePoint) -> tuple[TreePoint, TreePoint]:
    """Split a point of A(t o_i t2) into points of A(t) and A(t2)."""
    g = graft_data(t, i, t2)
    if pt.tree != g.tree:
        raise TreeError("point does not live on the grafted tree")
    outer = [a for a, (side, _) in zip(pt.decorations, g.origin) if side == "outer"]
    inner = [a for a, (side, _) in zip(pt.decorations, g.origin) if side == "inner"]
    return TreePoint(t, tuple(outer)), TreePoint(t2, tuple(inner))


def eta_inv(p1: TreePoint, i: int, p2: TreePoint) -> TreePoint:
    g = graft_data(p1.tree, i, p2.tree)
    decs = [p1.decorations[k] if side == "outer" else p2.decorations[k] for side, k in g.origin]
    return TreePoint(g.tree, tuple(decs))


def iota(pt: TreePoint) -> tuple[TreePoint, TreePoint]:
    """The unit: a point of A(T) becomes (1 on S_1, point) over S_1 o T."""
    return TreePoint(star(1), (ONE,)), pt


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _shapes(nodes: int, leaves: int, min_valence: int = 1) -> tuple[Vertex, ...]:
    """All planar shapes with exactly ``nodes`` internal nodes and ``leaves`` leaves."""
    if nodes == 0:
        return (Leaf(),) if leaves == 1 else ()
    return tuple(Node(f) for f in _forests(nodes - 1, leaves, min_valence) if len(f) >= min_valence)


@lru_cache(maxsize=None)
def _forests(nodes: int, leaves: int, min_valence: int) -> tuple[tuple[Vertex, ...], ...]:
    out = []
    for n1 in range(nodes + 1):
        for l1 in range(1, leaves + 1):
            firsts = _shapes(n1, l1, min_valence)
            if not firsts:
                continue
            if n1 == nodes and l1 == leaves:
                out.extend((f,) for f in firsts)
                continue
            for rest in _forests(nodes - n1, leaves - l1, min_valence):
                out.extend((f,) + rest for f in firsts)
    return tuple(out)


def _flag_leaves(v: Vertex, flags: Iterator[bool]) -> Vertex:
    if isinstance(v, Leaf):
        return Leaf(next(flags))
    return Node(tuple(_flag_leaves(c, flags) for c in v.children))


def trees_with(n: int, nodes: int, undistinguished: int = 0, min_valence: int = 1) -> list[PlanarTree]:
    leaves = n + undistinguished
    out = []
    for shape in _shapes(nodes, leaves, min_valence):
        if nodes == 0:
            if undistinguished == 0:
                out.append(PlanarTree(shape))
            continue
        for spots in itertools.combinations(range(leaves), undistinguished):
            flags = [k not in spots for k in range(leaves)]
            out.append(PlanarTree(_flag_leaves(shape, iter(flags))))
    return out


@dataclass
class TreePoset:
    n: int
    trees: list[Tree]
    covers: list[tuple[int, int, int]]  # (source index, target index, edge id)

    def index(self, t: Tree) -> int:
        return self.trees.index(t)

    def reachable(self) -> list[set[int]]:
        succ: list[set[int]] = [set() for _ in self.trees]
        for a, b, _ in self.covers:
            succ[a].add(b)
        order = sorted(range(len(self.trees)), key=lambda k: _weight(self.trees[k]))
        reach: list[set[int]] = [set() for _ in self.trees]
        for k in order:
            for b in succ[k]:
                reach[k] |= {b} | reach[b]
        return reach

    def to_dot(self) -> str:
        lines = ["digraph T {"]
        for k, t in enumerate(self.trees):
            lines.append(f'  t{k} [label="{"empty" if t is None else t}"];')
        for a, b, e in self.covers:
            lines.append(f'  t{a} -> t{b} [label="{e}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "trees": [tree_json(t) for t in self.trees],
            "covers": [list(c) for c in self.covers],
        }


def _weight(t: Tree) -> int:
    return 0 if t is None else t.internal_nodes + t.undistinguished


def enumerate_Tn(n: int, max_internal_nodes: int, max_undistinguished: int = 0) -> TreePoset:
    """Trees with n distinguished leaves up to the bounds, plus single-edge contractions."""
    if n < 0 or max_internal_nodes < 0 or max_undistinguished < 0:
        raise ValueError("bounds must be nonnegative")
    trees: list[Tree] = [None] if n == 0 else []
    for u in range(max_undistinguished + 1):
        for k in range(max_internal_nodes + 1):
            trees.extend(trees_with(n, k, u))
    index = {t: k for k, t in enumerate(trees)}
    covers = []
    for a, t in enumerate(trees):
        for e in contractible_edges(t):
            target = Contraction(t, frozenset({e})).target
            covers.append((a, index[target], e))
    return TreePoset(n, trees, covers)


def catalan(k: int) -> int:
    c = [1]
    for m in range(1, k + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[k]


# -- associahedra ----------------------------------------------------------

@dataclass
class Associahedron:
    n: int  # as requested, in the chosen indexing
    leaves: int
    faces: list[PlanarTree]
    dims: list[int]
    boundary: list[tuple[int, int]]  # (face, codimension-one face of it)

    @property
    def f_vector(self) -> list[int]:
        top = max(self.dims)
        return [self.dims.count(d) for d in range(top + 1)]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d for d in self.dims)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "leaves": self.leaves,
            "f_vector": self.f_vector,
            "euler_characteristic": self.euler_characteristic,
            "faces": [{"tree": f.to_json(), "dim": d} for f, d in zip(self.faces, self.dims)],
            "boundary": [list(b) for b in self.boundary],
        }

    def to_dot(self) -> str:
        """Hasse diagram of the face lattice, edges pointing to boundary faces."""
        lines = ["digraph K {"]
        for k, (f, d) in enumerate(zip(self.faces, self.dims)):
            lines.append(f'  f{k} [label="{f} (dim {d})"];')
        for face, of in self.boundary:
            lines.append(f"  f{face} -> f{of};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def associahedron_faces(n: int, indexing: str = "leaves") -> Associahedron:
    if indexing == "leaves":
        leaves = n
    elif indexing == "shifted":
        leaves = n + 1
    else:
        raise ValueError(f"unknown indexing {indexing!r}")
    if leaves < 2:
        raise ValueError(f"K({n}) needs at least two leaves in {indexing} indexing")
    faces = [t for k in range(1, leaves) for t in trees_with(leaves, k, min_valence=2)]
    index = {t: k for k, t in enumerate(faces)}
    dims = [(leaves - 1) - t.internal_nodes for t in faces]
    boundary = []
    for k, t in enumerate(faces):
        for e in contractible_edges(t):
            boundary.append((index[Contraction(t, frozenset({e})).target], k))
    boundary.sort()
    return Associahedron(n, leaves, faces, dims, boundary)


# -- coherence -------------------------------------------------------------

def random_shape(rng: random.Random, nodes: int, max_children: int = 3) -> Vertex:
    """Random planar shape with exactly ``nodes`` internal nodes."""
    if nodes == 0:
        return Leaf()
    k = rng.randint(1, min(max_children, nodes + 1))
    split = [0] * k
    for _ in range(nodes - 1):
        split[rng.randrange(k)] += 1
    return Node(tuple(random_shape(rng, s, max_children) for s in split))


def _leaf_count(v: Vertex) -> int:
    if isinstance(v, Leaf):
        return 1
    return sum(_leaf_count(c) for c in v.children)


def random_tree(rng: random.Random, nodes: int, undist_prob: float = 0.2) -> PlanarTree:
    shape = random_shape(rng, nodes)
    count = _leaf_count(shape)
    flags = [rng.random() >= undist_prob for _ in range(count)]
    return PlanarTree(_flag_leaves(shape, iter(flags)))


def random_point(rng: random.Random, t: Tree, max_den: int = 64) -> TreePoint:
    valences = () if t is None else t.valences
    return TreePoint(t, tuple(random_a(rng, v, max_den) for v in valences))


@dataclass
class CoherenceReport:
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    def tick(self, name: str):
        self.checks[name] = self.checks.get(name, 0) + 1

    def fail(self, name: str, **witness):
        self.failures.append({"check": name, **witness})

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": dict(sorted(self.checks.items())), "failures": self.failures}


def _small_trees(max_nodes: int) -> list[Tree]:
    """Exhaustive pool: at most three leaves, at most one undistinguished, plus the empty tree."""
    pool: list[Tree] = [None]
    for n in range(1, 4):
        for u in range(min(1, 3 - n) + 1):
            for k in range(1, max_nodes + 1):
                pool.extend(trees_with(n, k, u))
    return pool


def _square(report: CoherenceReport, t1: PlanarTree, i: int, t2: Tree, j: int, t3: Tree,
            rng: Optional[random.Random], points: int):
    """Transitivity square for (t1 o_i t2) o_j t3, sequential or parallel."""
    n2 = n_of(t2)
    left_outer = graft(t1, i, t2)
    left = graft(left_outer, j, t3)
    if i <= j < i + n2:
        # t3 lands on a leaf of t2
        jj = j - i + 1
        right_inner = graft(t2, jj, t3)
        right = graft(t1, i, right_inner)
        kind = "sequential"
    else:
        # t3 lands on a leaf of t1
        n3 = n_of(t3)
        jj = j if j < i else j - n2 + 1
        ii = i if j >= i + n2 else i + n3 - 1
        right_inner = graft(t1, jj, t3)
        right = graft(right_inner, ii, t2)
        kind = "parallel"
    report.tick(f"graft associativity ({kind})")
    if left != right:
        report.fail(f"graft associativity ({kind})", left=tree_json(left), right=tree_json(right))
        return
    for _ in range(points):
        pt = random_point(rng, left)
        a, c = eta(left_outer, j, t3, pt)
        x1, x2 = eta(t1, i, t2, a)
        if kind == "sequential":
            y1, b = eta(t1, i, right_inner, pt)
            y2, y3 = eta(t2, jj, t3, b)
        else:
            b, y2 = eta(right_inner, ii, t2, pt)
            y1, y3 = eta(t1, jj, t3, b)
        report.tick(f"transitivity square ({kind})")
        if (x1, x2, c) != (y1, y2, y3):
            report.fail(f"transitivity square ({kind})", point=pt.to_json(), i=i, j=j)


def _graft_contract(report: CoherenceReport, t1: PlanarTree, i: int, t2: Tree, rng):
    """eta inverse followed by full contraction equals composing the two evaluations."""
    x1, x2 = random_point(rng, t1), random_point(rng, t2)
    report.tick("eta inverse then contract")
    if evaluate(eta_inv(x1, i, x2)) != circ(evaluate(x1), i, evaluate(x2)):
        report.fail("eta inverse then contract", outer=x1.to_json(), inner=x2.to_json(), i=i)


def _units(report: CoherenceReport, t: PlanarTree, rng, points: int):
    for _ in range(points):
        pt = random_point(rng, t)
        # left unit: S_1 o T with the new root decorated 1, contracted back
        s1, same = iota(pt)
        up = eta_inv(s1, 1, same)
        edge = graft_data(star(1), 1, t).edge
        report.tick("left unit triangle")
        if contract(Contraction(up.tree, frozenset({edge})), up) != pt:
            report.fail("left unit triangle", point=pt.to_json())
        for i in range(1, t.n + 1):
            up = eta_inv(pt, i, TreePoint(star(1), (ONE,)))
            edge = graft_data(t, i, star(1)).edge
            report.tick("right unit triangle")
            if contract(Contraction(up.tree, frozenset({edge})), up) != pt:
                report.fail("right unit triangle", point=pt.to_json(), i=i)


def _functoriality(report: CoherenceReport, t: PlanarTree, rng, points: int):
    edges = contractible_edges(t)
    if not edges:
        return
    for _ in range(points):
        first = frozenset(e for e in edges if rng.random() < 0.5)
        c1 = Contraction(t, first)
        rest = contractible_edges(c1.target)
        c2 = Contraction(c1.target, frozenset(e for e in rest if rng.random() < 0.5))
        pt = random_point(rng, t)
        report.tick("contraction functoriality")
        if contract(c1.then(c2), pt) != contract(c2, contract(c1, pt)):
            report.fail("contraction functoriality", point=pt.to_json(), first=sorted(first))


def check_partial_lax_coherence(n_max: int = 4, trials: int = 500, seed: int = 0) -> CoherenceReport:
    """Exhaustive squares for trees up to ``n_max`` nodes, then random points on larger trees.

    Each exhaustive triple is checked at one random point; the random phase
    draws ``trials`` triples whose graft has at most six internal nodes.
    """
    rng = random.Random(seed)
    report = CoherenceReport()
    pool = _small_trees(n_max)
    by_nodes: dict[int, list[Tree]] = {}
    for t in pool:
        by_nodes.setdefault(node_count(t), []).append(t)

    def fitting(budget: int):
        return [t for k in range(budget + 1) for t in by_nodes.get(k, [])]

    for t1 in pool:
        if t1 is None or t1.n == 0:
            continue
        _units(report, t1, rng, 1)
        _functoriality(report, t1, rng, 1)
        for i in range(1, t1.n + 1):
            for t2 in fitting(n_max - node_count(t1)):
                _graft_contract(report, t1, i, t2, rng)
                mid = t1.n + n_of(t2) - 1
                for t3 in fitting(n_max - node_count(t1) - node_count(t2)):
                    for j in range(1, mid + 1):
                        report.tick(f"exhaustive squares (up to {n_max} nodes)")
                        _square(report, t1, i, t2, j, t3, rng, 1)
    done = 0
    while done < trials:
        a = rng.randint(1, 3)
        b = rng.randint(0, 2)
        c = rng.randint(0, 6 - a - b)
        t1 = random_tree(rng, a)
        if t1.n == 0:
            t1 = star(2)
        t2 = random_tree(rng, b) if b else None
        t3 = random_tree(rng, c) if c else None
        i = rng.randint(1, t1.n)
        mid = t1.n + n_of(t2) - 1
        if mid < 1:
            continue
        j = rng.randint(1, mid)
        done += 1
        report.tick("random squares (up to 6 nodes)")
        _square(report, t1, i, t2, j, t3, rng, 1)
        _graft_contract(report, t1, i, t2, rng)
        big = graft(graft(t1, i, t2), j, t3)
        if big.n >= 1:
            report.tick("random unit triangles (up to 6 nodes)")
            _units(report, big, rng, 1)
        _functoriality(report, big, rng, 1)
    return report
