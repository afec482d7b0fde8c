#!/usr/bin/env python3
"""
Corr CLI - Fine Markings
Pants vertices with ordered legs, cuts, traversal words and normal forms

A marking is stored combinatorially: every vertex is a sphere with at most
three holes whose legs are listed in cyclic order, legs[0] being the
distinguished edge. A leg is ("b", boundary_id) or ("c", cut_id, side) where
side +1 marks the outgoing copy of the cut circle. Cuts joining a vertex to
itself are handle cuts and carry a frame, the integer matrix whose columns
are the current cut class and its dual class.

The cut graph may also contain cycles through several vertices. The
unframed cuts then form a spanning forest and every remaining cut, a
chord, carries the frame of its cycle. A traversal reads a chord like a
handle: its two ends must be read one right after the other, outgoing end
first, and together give one K leaf.

Version: 1.0.0
"""

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.config import FORMAT_VERSION
from ..core.errors import DataFormatError, InvalidLocation, PreconditionViolated
from ..utils.helpers import read_json
from .surface import OUT, ExtendedSurface

Leg = Tuple[Any, ...]
Leaf = Tuple[str, Any]
Frame = Tuple[int, int, int, int]

IDENTITY_FRAME: Frame = (1, 0, 0, 1)
MAX_LEGS = 3


def boundary_leg(bid: str) -> Leg:
    return ("b", bid)


def cut_leg(cid: int, side: int) -> Leg:
    return ("c", cid, side)


def is_cut(leg: Leg) -> bool:
    return leg[0] == "c"


def leg_to_str(leg: Leg) -> str:
    if is_cut(leg):
        return f"c:{leg[1]}{'+' if leg[2] > 0 else '-'}"
    return f"b:{leg[1]}"


def leg_from_str(text: str) -> Leg:
    kind, _, rest = text.partition(":")
    if kind == "b" and rest:
        return boundary_leg(rest)
    if kind == "c" and len(rest) > 1 and rest[-1] in "+-":
        return cut_leg(int(rest[:-1]), 1 if rest[-1] == "+" else -1)
    raise DataFormatError(f"Malformed leg '{text}'", {"leg": text})


@dataclass(frozen=True)
class Vertex:
    id: int
    legs: Tuple[Leg, ...]


@dataclass(frozen=True)
class Cut:
    id: int
    frame: Optional[Frame] = None


@dataclass
class Traversal:
    """Depth-first reading of one component, starting at the root's distinguished leg."""
    root: Optional[int]
    leaves: List[Leaf] = field(default_factory=list)
    spans: Dict[Tuple[int, int], Tuple[int, int]] = field(default_factory=dict)
    entries: Dict[int, Optional[int]] = field(default_factory=dict)
    order: List[int] = field(default_factory=list)
    cut_order: List[int] = field(default_factory=list)
    # span key -> (chord, at_end): the span holds one end of the chord, the
    # outgoing one at its end or the incoming one at its start; the K leaf is left out
    straddles: Dict[Tuple[int, int], Tuple[int, bool]] = field(default_factory=dict)
    # chords whose two ends are not read consecutively
    split_chords: List[int] = field(default_factory=list)


def _join_chords(tr: Traversal, raw: List[Leaf], raw_spans: Dict[Tuple[int, int], Tuple[int, int]]) -> None:
    """Merges the two ends of every chord into one K leaf and maps the spans over."""
    position: List[int] = []
    closing: Dict[int, int] = {}
    j = 0
    while j < len(raw):
        leaf = raw[j]
        position.append(len(tr.leaves))
        if leaf[0] == "H":
            cid, side = leaf[1]
            if side > 0 and j + 1 < len(raw) and raw[j + 1] == ("H", (cid, -1)):
                position.append(len(tr.leaves))
                closing[j] = cid
                tr.leaves.append(("K", cid))
                j += 2
                continue
            if cid not in tr.split_chords:
                tr.split_chords.append(cid)
        tr.leaves.append(leaf)
        j += 1
    position.append(len(tr.leaves))
    for key, (start, end) in raw_spans.items():
        first, last = position[start], position[end]
        if end > start and end - 1 in closing:
            tr.straddles[key] = (closing[end - 1], True)
        if end > start and start - 1 in closing:
            tr.straddles[key] = (closing[start - 1], False)
            first += 1
        tr.spans[key] = (first, last)


@dataclass(frozen=True)
class FineMarking:
    surface: ExtendedSurface
    vertices: Tuple[Vertex, ...]
    cuts: Tuple[Cut, ...] = ()
    central: int = 0

    # ======================================================================
    # Lookup
    # ======================================================================

    @cached_property
    def _vertex_map(self) -> Dict[int, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def _cut_map(self) -> Dict[int, Cut]:
        return {c.id: c for c in self.cuts}

    @cached_property
    def _ends(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """(cut id, side) -> (vertex id, leg index)."""
        ends = {}
        for v in self.vertices:
            for i, leg in enumerate(v.legs):
                if is_cut(leg):
                    ends[(leg[1], leg[2])] = (v.id, i)
        return ends

    def vertex(self, vid: int) -> Vertex:
        if vid not in self._vertex_map:
            raise InvalidLocation(f"No vertex {vid}", {"vertex": vid})
        return self._vertex_map[vid]

    def cut(self, cid: int) -> Cut:
        if cid not in self._cut_map:
            raise InvalidLocation(f"No cut {cid}", {"cut": cid})
        return self._cut_map[cid]

    def cut_ends(self, cid: int) -> List[Tuple[int, int, int]]:
        """[(vertex id, leg index, side)] for the outgoing then the incoming copy."""
        self.cut(cid)
        return [(*self._ends[(cid, side)], side) for side in (1, -1)]

    def is_self_cut(self, cid: int) -> bool:
        (u, _, _), (v, _, _) = self.cut_ends(cid)
        return u == v

    def is_chord(self, cid: int) -> bool:
        """A framed cut between two different vertices."""
        return self.cut(cid).frame is not None and not self.is_self_cut(cid)

    def has_chords(self) -> bool:
        return any(self.is_chord(c.id) for c in self.cuts)

    def parallel_cuts(self, cid: int) -> List[int]:
        """Other cuts joining the same two vertices as cid."""
        (u, _, _), (w, _, _) = self.cut_ends(cid)
        out = []
        for c in self.cuts:
            if c.id == cid:
                continue
            (a, _, _), (b, _, _) = self.cut_ends(c.id)
            if {a, b} == {u, w}:
                out.append(c.id)
        return out

    def boundary_vertex(self, bid: str) -> Tuple[int, int]:
        for v in self.vertices:
            for i, leg in enumerate(v.legs):
                if leg == boundary_leg(bid):
                    return v.id, i
        raise InvalidLocation(f"Boundary '{bid}' is not attached to any vertex", {"boundary": bid})

    def next_vertex_id(self) -> int:
        return max((v.id for v in self.vertices), default=-1) + 1

    def next_cut_id(self) -> int:
        return max((c.id for c in self.cuts), default=0) + 1

    # ======================================================================
    # Graph Structure
    # ======================================================================

    def graph(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        for v in self.vertices:
            G.add_node(v.id, legs=len(v.legs))
        for c in self.cuts:
            (u, _, _), (w, _, _) = self.cut_ends(c.id)
            G.add_edge(u, w, key=c.id)
        return G

    @cached_property
    def _components(self) -> List[List[int]]:
        G = self.graph()
        pieces = [sorted(p) for p in nx.connected_components(G)]
        by_boundary, closed = {}, []
        for piece in pieces:
            ids = frozenset(leg[1] for vid in piece for leg in self.vertex(vid).legs if not is_cut(leg))
            if ids:
                by_boundary[ids] = piece
            else:
                closed.append(piece)
        closed.sort(key=min)
        out = []
        for comp in self.surface.components:
            if comp.is_closed():
                if not closed:
                    raise DataFormatError("A closed component has no vertices")
                out.append(closed.pop(0))
                continue
            piece = by_boundary.pop(frozenset(comp.ids()), None)
            if piece is None:
                raise DataFormatError("Vertex pieces do not match the surface components",
                                      {"component": comp.ids()})
            out.append(piece)
        if by_boundary or closed:
            raise DataFormatError("Marking has pieces that belong to no surface component")
        return out

    def component_vertices(self) -> List[List[int]]:
        return self._components

    def component_of_vertex(self, vid: int) -> int:
        for k, piece in enumerate(self._components):
            if vid in piece:
                return k
        raise InvalidLocation(f"No vertex {vid}", {"vertex": vid})

    def root(self, k: int) -> Optional[int]:
        comp = self.surface.components[k]
        if comp.boundary:
            return self.boundary_vertex(comp.boundary[0].id)[0]
        piece = self._components[k]
        return min(piece) if piece else None

    def traverse(self, k: int) -> Traversal:
        tr = Traversal(self.root(k))
        raw: List[Leaf] = []
        raw_spans: Dict[Tuple[int, int], Tuple[int, int]] = {}

        def visit(vid: int, entry: Optional[int]) -> None:
            tr.entries[vid] = entry
            tr.order.append(vid)
            legs = self.vertex(vid).legs
            n = len(legs)
            indices = range(n) if entry is None else [(entry + j) % n for j in range(1, n)]
            for i in indices:
                leg = legs[i]
                start = len(raw)
                if not is_cut(leg):
                    raw.append(("b", leg[1]))
                else:
                    cid, side = leg[1], leg[2]
                    if cid not in tr.cut_order:
                        tr.cut_order.append(cid)
                    other, other_index = self._ends[(cid, -side)]
                    if other == vid:
                        if side > 0:
                            raw.append(("K", cid))
                    elif self.cut(cid).frame is not None:
                        raw.append(("H", (cid, side)))
                    else:
                        visit(other, other_index)
                raw_spans[(vid, i)] = (start, len(raw))

        if tr.root is not None:
            visit(tr.root, None)
        _join_chords(tr, raw, raw_spans)
        return tr

    def words(self) -> List[Tuple[Leaf, ...]]:
        """
        One traversal word per component.

        Raises:
            PreconditionViolated: a chord's ends are not read one after the other
        """
        out = []
        for k in range(len(self.surface.components)):
            tr = self.traverse(k)
            if tr.split_chords:
                raise PreconditionViolated(
                    f"Cycle cut {tr.split_chords[0]}: its ends are not read one after the other",
                    {"cut": tr.split_chords[0]},
                )
            out.append(tuple(tr.leaves))
        return out

    def component_genus(self, k: int) -> int:
        piece = set(self._components[k])
        cuts = sum(1 for c in self.cuts if self.cut_ends(c.id)[0][0] in piece)
        return cuts - len(piece) + 1

    # ======================================================================
    # Validation
    # ======================================================================

    def validate(self) -> "FineMarking":
        """Raises DataFormatError (or PreconditionViolated for unsupported shapes); returns self."""
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise DataFormatError("Vertex ids must be unique")
        known = set(self.surface.boundary_ids())
        seen = []
        for v in self.vertices:
            if len(v.legs) > MAX_LEGS:
                raise DataFormatError(f"Vertex {v.id} has {len(v.legs)} legs; fine markings allow {MAX_LEGS}",
                                      {"vertex": v.id})
            for leg in v.legs:
                if is_cut(leg):
                    if leg[1] not in self._cut_map or leg[2] not in (1, -1):
                        raise DataFormatError(f"Leg {leg_to_str(leg)} names no declared cut", {"vertex": v.id})
                else:
                    if leg[1] not in known:
                        raise DataFormatError(f"Leg {leg_to_str(leg)} names no boundary", {"vertex": v.id})
                    seen.append(leg[1])
        if sorted(seen) != sorted(known):
            raise DataFormatError("Every boundary circle must appear on exactly one leg")
        cut_legs = [leg for v in self.vertices for leg in v.legs if is_cut(leg)]
        for c in self.cuts:
            sides = sorted(leg[2] for leg in cut_legs if leg[1] == c.id)
            if sides != [-1, 1]:
                raise DataFormatError(f"Cut {c.id} needs one outgoing and one incoming end", {"cut": c.id})
            if self.is_self_cut(c.id) and c.frame is None:
                raise DataFormatError(f"Handle cut {c.id} needs a frame", {"cut": c.id})

        forest = nx.Graph()
        forest.add_nodes_from(ids)
        for c in self.cuts:
            (u, _, _), (w, _, _) = self.cut_ends(c.id)
            if u == w or c.frame is not None:
                continue
            if nx.has_path(forest, u, w):
                raise PreconditionViolated(f"Cut {c.id} closes a cycle of unframed cuts; one cut of every cycle "
                                           f"carries its frame", {"cut": c.id})
            forest.add_edge(u, w)
        for c in self.cuts:
            (u, _, _), (w, _, _) = self.cut_ends(c.id)
            if u != w and c.frame is not None and not nx.has_path(forest, u, w):
                raise DataFormatError(f"Cut {c.id} carries a frame but closes no cycle", {"cut": c.id})

        for k, comp in enumerate(self.surface.components):
            g = self.component_genus(k)
            if g != comp.genus:
                raise DataFormatError(f"Component {k} has genus {comp.genus} but the marking gives {g}",
                                      {"component": k})
        return self

    # ======================================================================
    # Normal Form
    # ======================================================================

    def normal_form(self) -> "FineMarking":
        """Vertices and cuts renumbered in traversal order."""
        vmap: Dict[int, int] = {}
        cmap: Dict[int, int] = {}
        for k in range(len(self.surface.components)):
            tr = self.traverse(k)
            for vid in tr.order:
                vmap[vid] = len(vmap)
            for cid in tr.cut_order:
                cmap.setdefault(cid, len(cmap) + 1)

        def relabel(leg: Leg) -> Leg:
            return cut_leg(cmap[leg[1]], leg[2]) if is_cut(leg) else leg

        vertices = sorted((Vertex(vmap[v.id], tuple(relabel(l) for l in v.legs)) for v in self.vertices),
                          key=lambda v: v.id)
        cuts = sorted((Cut(cmap[c.id], c.frame) for c in self.cuts), key=lambda c: c.id)
        return FineMarking(self.surface, tuple(vertices), tuple(cuts), self.central)

    def same_as(self, other: "FineMarking", ignore_central: bool = False) -> bool:
        a, b = self.normal_form(), other.normal_form()
        if ignore_central:
            a, b = replace(a, central=0), replace(b, central=0)
        return a == b

    # ======================================================================
    # Rewriting Helpers
    # ======================================================================

    def with_vertices(self, vertices: Sequence[Vertex], cuts: Optional[Sequence[Cut]] = None,
                      surface: Optional[ExtendedSurface] = None, central: Optional[int] = None) -> "FineMarking":
        return FineMarking(
            surface if surface is not None else self.surface,
            tuple(sorted(vertices, key=lambda v: v.id)),
            tuple(sorted(cuts if cuts is not None else self.cuts, key=lambda c: c.id)),
            self.central if central is None else central,
        )

    def replace_vertex(self, vertex: Vertex) -> "FineMarking":
        return self.with_vertices([vertex if v.id == vertex.id else v for v in self.vertices])

    def replace_frame(self, cid: int, frame: Frame) -> "FineMarking":
        self.cut(cid)
        return self.with_vertices(self.vertices, [Cut(c.id, frame) if c.id == cid else c for c in self.cuts])

    # ======================================================================
    # JSON
    # ======================================================================

    def to_json(self) -> Dict[str, Any]:
        return {
            "format_version": FORMAT_VERSION,
            "surface": self.surface.to_json(),
            "vertices": [{"id": v.id, "legs": [leg_to_str(l) for l in v.legs]} for v in self.vertices],
            "cuts": [{"id": c.id, **({"frame": list(c.frame)} if c.frame else {})} for c in self.cuts],
            "central": self.central,
            "words": [[f"{kind}:{ident}" for kind, ident in w] for w in self.words()],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "FineMarking":
        try:
            surface = ExtendedSurface.from_json(data["surface"])
            vertices = []
            for v in data["vertices"]:
                legs = tuple(leg_from_str(s) for s in v["legs"])
                d = int(v.get("distinguished", 0))
                vertices.append(Vertex(int(v["id"]), legs[d:] + legs[:d]))
            cuts = [Cut(int(c["id"]), tuple(c["frame"]) if c.get("frame") else None)
                    for c in data.get("cuts", [])]
        except (KeyError, TypeError, ValueError) as e:
            raise DataFormatError(f"Malformed marking: {e}") from e
        marking = cls(surface, tuple(sorted(vertices, key=lambda v: v.id)),
                      tuple(sorted(cuts, key=lambda c: c.id)), int(data.get("central", 0)))
        return marking.validate()


def load_marking(path) -> FineMarking:
    return FineMarking.from_json(read_json(path))


# ============================================================================
# Standard Markings
# ============================================================================

def standard_marking(n: int, eps: Optional[Sequence[int]] = None, genus: int = 0,
                     ids: Optional[Sequence[str]] = None) -> FineMarking:
    """
    Chain marking of a genus-g sphere with n holes.

    Up to three legs fit on a single vertex; otherwise the legs (boundaries
    first, then one leg per handle) are distributed along a chain of pants
    joined by cuts 1, 2, ... Each handle is a vertex with a self-cut, except
    the one-holed and closed torus, which are single vertices.
    """
    eps = list(eps) if eps is not None else [OUT] * n
    if len(eps) != n or n < 0 or genus < 0:
        raise DataFormatError("standard_marking needs n >= 0, genus >= 0 and one orientation per hole")
    surface = ExtendedSurface.sphere(eps, ids, genus)
    items: List[Leg] = [boundary_leg(b) for b in surface.components[0].ids()]

    if genus == 1 and n <= 1:
        vertex = Vertex(0, tuple(items) + (cut_leg(1, 1), cut_leg(1, -1)))
        return FineMarking(surface, (vertex,), (Cut(1, IDENTITY_FRAME),)).validate()

    cuts: List[Cut] = []
    vertices: List[Vertex] = []
    m = len(items) + genus
    chain_cuts = max(m - 3, 0)
    cuts.extend(Cut(k + 1) for k in range(chain_cuts))
    next_cut = chain_cuts + 1
    for h in range(genus):
        connector, handle = next_cut, next_cut + 1
        next_cut += 2
        cuts.extend([Cut(connector), Cut(handle, IDENTITY_FRAME)])
        items.append(cut_leg(connector, 1))
        vertices.append(Vertex(-1 - h, (cut_leg(connector, -1), cut_leg(handle, 1), cut_leg(handle, -1))))

    if m <= MAX_LEGS:
        chain = [Vertex(0, tuple(items))]
    else:
        chain = [Vertex(0, (items[0], items[1], cut_leg(1, 1)))]
        for k in range(1, m - 3):
            chain.append(Vertex(k, (cut_leg(k, -1), items[k + 1], cut_leg(k + 1, 1))))
        chain.append(Vertex(m - 3, (cut_leg(m - 3, -1), items[m - 2], items[m - 1])))
    offset = len(chain)
    handles = [Vertex(offset - 1 - v.id, v.legs) for v in vertices]
    return FineMarking(surface, tuple(chain + handles), tuple(cuts)).validate()


def one_holed_torus(orientation: int = OUT, bid: str = "1") -> FineMarking:
    return standard_marking(1, [orientation], genus=1, ids=[bid])


def disjoint_union(first: FineMarking, second: FineMarking) -> FineMarking:
    """Second marking's vertex and cut ids are shifted past the first's."""
    dv, dc = first.next_vertex_id(), first.next_cut_id() - 1

    def shift(leg: Leg) -> Leg:
        return cut_leg(leg[1] + dc, leg[2]) if is_cut(leg) else leg

    vertices = list(first.vertices) + [Vertex(v.id + dv, tuple(shift(l) for l in v.legs)) for v in second.vertices]
    cuts = list(first.cuts) + [Cut(c.id + dc, c.frame) for c in second.cuts]
    return FineMarking(first.surface.disjoint_union(second.surface), tuple(vertices), tuple(cuts),
                       first.central + second.central).validate()
