"""Finitely presented trees of matroids.

A presentation is a finite explicit prefix (which holds every real edge)
together with a finite core of states. Transitions glue a copy of a state
below a prefix node or below another state along an explicit label
bijection. Unfolding from the prefix root yields a possibly infinite tree of
matroids; the priorities on transitions define Ψ as a max-parity condition
on its infinite branches: a branch is in Ψ when the largest priority it
crosses infinitely often is even.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx

from matroid_common import InputError, format_set, sort_labels
from matroid_common.config import ToolkitLimits, resolve_limits
from matroid_common.exceptions import check_cap

from matroid_trees.explicit import ExplicitTreeOfMatroids

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from matroid_kernel import Matroid

logger = logging.getLogger(__name__)

TransitionKey = tuple[str, str]


@dataclass(frozen=True)
class Transition:
    """A glued copy of ``target`` below ``source``.

    Attributes:
        source: A prefix node or a core state.
        name: Unique among the transitions leaving ``source``; it names the
            child in unfolded node ids.
        target: The core state that is copied.
        mapping: Pairs ``(source label, target label)`` identifying the
            interface, sorted by source label.
        priority: Parity priority of crossing this transition.
    """

    source: str
    name: str
    target: str
    mapping: tuple[tuple[str, str], ...]
    priority: int = 0

    @classmethod
    def build(
        cls,
        source: str,
        name: str,
        target: str,
        mapping: Mapping[str, str],
        priority: int = 0,
    ) -> Transition:
        """Normalise the label map and check it is a nonempty bijection."""
        if not mapping:
            msg = f"Transition {source}/{name} has an empty interface"
            raise InputError(msg)
        if len(set(mapping.values())) != len(mapping):
            msg = f"Transition {source}/{name} maps two labels to one"
            raise InputError(msg)
        if priority < 0:
            msg = f"Transition {source}/{name} has negative priority {priority}"
            raise InputError(msg)
        return cls(source, name, target, tuple(sorted(mapping.items())), priority)

    @property
    def key(self) -> TransitionKey:
        """``(source, name)``."""
        return (self.source, self.name)

    @property
    def source_labels(self) -> frozenset[str]:
        """Interface labels on the source side."""
        return frozenset(a for a, _ in self.mapping)

    @property
    def target_labels(self) -> frozenset[str]:
        """Interface labels on the target side."""
        return frozenset(b for _, b in self.mapping)

    def to_target(self) -> dict[str, str]:
        """Source label to target label."""
        return dict(self.mapping)

    def to_source(self) -> dict[str, str]:
        """Target label to source label."""
        return {b: a for a, b in self.mapping}


@dataclass(frozen=True)
class NodeOrigin:
    """Where an unfolded node came from.

    Attributes:
        key: The prefix node or core state that was copied.
        labels: Local label to unfolded label.
        depth: Distance from the prefix root.
        via: The transition that created the copy; ``None`` for prefix nodes.
    """

    key: str
    labels: Mapping[str, str]
    depth: int
    via: Transition | None = None


@dataclass(frozen=True)
class Unfolding:
    """An explicit tree obtained from a presentation.

    Attributes:
        tree: The explicit tree of matroids. Boundary labels mark where the
            truncation cut the tree.
        origins: One entry per node of ``tree``.
    """

    tree: ExplicitTreeOfMatroids
    origins: Mapping[str, NodeOrigin] = field(repr=False)

    @property
    def complete(self) -> bool:
        """Nothing was cut off."""
        return not self.tree.boundary

    def relabelling(self) -> dict[str, tuple[str, Mapping[str, str]]]:
        """Node to ``(origin key, label map)``, as used to carry representations over."""
        return {node: (o.key, o.labels) for node, o in self.origins.items()}


@dataclass(frozen=True)
class TreePresentation:
    """A finite prefix, a finite core of states and prioritised transitions.

    Attributes:
        prefix: The explicit prefix tree; its root is the root of the unfolding.
        states: Core state name to matroid. Every core label is an interface.
        transitions: All transitions, ordered by ``(source, name)``.
        name: Informational.
    """

    prefix: ExplicitTreeOfMatroids
    states: Mapping[str, Matroid] = field(repr=False)
    transitions: tuple[Transition, ...]
    name: str = field(default="", compare=False)

    # ========================================================================
    # Construction
    # ========================================================================

    @classmethod
    def build(  # noqa: C901, PLR0912
        cls,
        prefix: Mapping[str, Matroid],
        states: Mapping[str, Matroid],
        transitions: Iterable[Transition],
        *,
        root: str | None = None,
        name: str = "",
        limits: ToolkitLimits | None = None,
    ) -> TreePresentation:
        """Validate a presentation.

        Prefix adjacency is read off shared labels. Each transition's
        interface must be disjoint from the other interfaces at its source;
        for every transition into a state, its target labels together with
        the state's outgoing interfaces must be exactly the state's ground
        set, so real edges occur only in the prefix.

        Raises:
            InputError: On any structural violation, including unreachable
                core states.
        """
        clash = sorted(set(prefix) & set(states))
        if clash:
            msg = f"Names {clash} are used both for prefix nodes and core states"
            raise InputError(msg)
        tree = ExplicitTreeOfMatroids.build(prefix, root=root, limits=limits)
        ordered = tuple(sorted(transitions, key=lambda t: t.key))

        seen: set[TransitionKey] = set()
        used_at: dict[str, set[str]] = {}
        for t in ordered:
            if t.key in seen:
                msg = f"Duplicate transition name {t.name} at {t.source}"
                raise InputError(msg)
            seen.add(t.key)
            if t.target not in states:
                msg = f"Transition {t.source}/{t.name} targets unknown state {t.target}"
                raise InputError(msg)
            holder = prefix.get(t.source) or states.get(t.source)
            if holder is None:
                msg = f"Transition {t.source}/{t.name} leaves unknown node {t.source}"
                raise InputError(msg)
            missing = t.source_labels - frozenset(holder.ground)
            if missing:
                msg = f"Transition {t.source}/{t.name}: {format_set(missing)} not in {t.source}"
                raise InputError(msg)
            if not t.target_labels <= frozenset(states[t.target].ground):
                msg = f"Transition {t.source}/{t.name}: target labels not in {t.target}"
                raise InputError(msg)
            if t.source in prefix and t.source_labels & tree.dummies:
                msg = f"Transition {t.source}/{t.name} reuses prefix dummy edges"
                raise InputError(msg)
            taken = used_at.setdefault(t.source, set())
            if taken & t.source_labels:
                shared = format_set(taken & t.source_labels)
                msg = f"Interfaces leaving {t.source} overlap in {shared}"
                raise InputError(msg)
            taken |= t.source_labels

        for t in ordered:
            outgoing = used_at.get(t.target, set())
            ground = frozenset(states[t.target].ground)
            if t.target_labels & outgoing:
                shared = format_set(t.target_labels & outgoing)
                msg = f"State {t.target} reuses its incoming interface {shared}"
                raise InputError(msg)
            if t.target_labels | outgoing != ground:
                stray = format_set(ground - t.target_labels - outgoing)
                msg = f"State {t.target} entered by {t.source}/{t.name} has real edges {stray}"
                raise InputError(msg)

        reached = {t.target for t in ordered if t.source in prefix}
        frontier = list(reached)
        while frontier:
            state = frontier.pop()
            for t in ordered:
                if t.source == state and t.target not in reached:
                    reached.add(t.target)
                    frontier.append(t.target)
        unreachable = sorted(set(states) - reached)
        if unreachable:
            msg = f"Core states {unreachable} are unreachable from the prefix"
            raise InputError(msg)
        return cls(tree, dict(states), ordered, name)

    # ========================================================================
    # Queries
    # ========================================================================

    @property
    def root(self) -> str:
        """The prefix root."""
        return self.prefix.root

    @cached_property
    def matroids(self) -> dict[str, Matroid]:
        """Prefix nodes and core states together."""
        return {**self.prefix.matroids, **self.states}

    def matroid(self, key: str) -> Matroid:
        """The matroid of a prefix node or core state."""
        if key not in self.matroids:
            msg = f"Unknown node or state '{key}'"
            raise InputError(msg)
        return self.matroids[key]

    def outgoing(self, source: str) -> tuple[Transition, ...]:
        """Transitions leaving a prefix node or state, by name."""
        return tuple(t for t in self.transitions if t.source == source)

    def transition(self, key: TransitionKey) -> Transition:
        """Look a transition up by ``(source, name)``."""
        for t in self.transitions:
            if t.key == key:
                return t
        msg = f"No transition {key[0]}/{key[1]}"
        raise InputError(msg)

    @cached_property
    def real_edges(self) -> frozenset[str]:
        """``E``: the ground elements, all of them in the prefix."""
        leaving: set[str] = set()
        for t in self.transitions:
            if t.source in self.prefix.matroids:
                leaving |= t.source_labels
        return self.prefix.ground - leaving

    @cached_property
    def is_overlap_one(self) -> bool:
        """Every interface, in the prefix and on transitions, has one label."""
        return self.prefix.is_overlap_one and all(len(t.mapping) == 1 for t in self.transitions)

    @cached_property
    def has_finite_unfolding(self) -> bool:
        """The core transition graph has no cycle."""
        core = nx.DiGraph()
        core.add_nodes_from(self.states)
        core.add_edges_from(
            (t.source, t.target) for t in self.transitions if t.source in self.states
        )
        return nx.is_directed_acyclic_graph(core)

    def element_node(self, element: str) -> str:
        """The prefix node holding a real edge."""
        if element not in self.real_edges:
            msg = f"'{element}' is not a real edge of the presentation"
            raise InputError(msg)
        return self.prefix.node_of(element)

    # ========================================================================
    # Derived presentations
    # ========================================================================

    def dual(self) -> TreePresentation:
        """Every prefix and core matroid dualised; the transitions are unchanged."""
        return replace(
            self,
            prefix=self.prefix.dual(),
            states={s: m.dual() for s, m in self.states.items()},
        )

    def minor(self, contract: Iterable[str] = (), delete: Iterable[str] = ()) -> TreePresentation:
        """Contract and delete real edges inside the prefix.

        Raises:
            InputError: If the sets touch dummy edges or overlap.
        """
        touched = (frozenset(contract) | frozenset(delete)) - self.real_edges
        if touched:
            msg = f"{format_set(touched)} are not real edges of the prefix"
            raise InputError(msg)
        return replace(self, prefix=self.prefix.minor(contract, delete))

    def contract(self, elements: Iterable[str]) -> TreePresentation:
        """Contract real edges."""
        return self.minor(contract=elements)

    def delete(self, elements: Iterable[str]) -> TreePresentation:
        """Delete real edges."""
        return self.minor(delete=elements)

    def reprioritized(self, priorities: Mapping[TransitionKey, int]) -> TreePresentation:
        """Replace the priorities of the named transitions.

        Raises:
            InputError: If a key names no transition or a priority is negative.
        """
        unknown = sorted(set(priorities) - {t.key for t in self.transitions})
        if unknown:
            msg = f"Unknown transitions {unknown}"
            raise InputError(msg)
        if any(p < 0 for p in priorities.values()):
            msg = "Priorities must be non-negative"
            raise InputError(msg)
        return replace(
            self,
            transitions=tuple(
                replace(t, priority=priorities.get(t.key, t.priority)) for t in self.transitions
            ),
        )

    def shifted(self, amount: int = 1) -> TreePresentation:
        """Add ``amount`` to every priority; an odd shift complements Ψ."""
        return self.reprioritized({t.key: t.priority + amount for t in self.transitions})

    # ========================================================================
    # Unfolding
    # ========================================================================

    def truncate(self, depth: int, *, limits: ToolkitLimits | None = None) -> Unfolding:
        """Unfold from the root down to ``depth``.

        Copies of states get ids ``parent.name`` after the transition that
        created them; their non-interface labels become ``id/label``, and
        their incoming interface takes the parent's names. Interfaces leading
        below ``depth`` are left open as boundary labels.

        Raises:
            InputError: If ``depth`` is negative.
            ResourceCapError: If more than ``tree_node_cap`` nodes are needed.
        """
        if depth < 0:
            msg = f"Depth must be non-negative, got {depth}"
            raise InputError(msg)
        cap = resolve_limits(limits).tree_node_cap
        kept_prefix = self.prefix.truncate(depth)
        origins: dict[str, NodeOrigin] = {
            node: NodeOrigin(
                node, {x: x for x in self.prefix.matroids[node].ground}, self.prefix.depths[node]
            )
            for node in kept_prefix.nodes
        }
        matroids: dict[str, Matroid] = {n: self.prefix.matroids[n] for n in kept_prefix.nodes}
        edges: list[tuple[str, str]] = list(kept_prefix.edges)
        boundary: set[str] = set(kept_prefix.boundary)

        queue = deque(sorted(kept_prefix.nodes))
        while queue:
            node = queue.popleft()
            origin = origins[node]
            for t in self.outgoing(origin.key):
                if origin.depth + 1 > depth:
                    boundary |= {origin.labels[a] for a in t.source_labels}
                    continue
                child = f"{node}.{t.name}"
                back = t.to_source()
                labels = {
                    x: origin.labels[back[x]] if x in back else f"{child}/{x}"
                    for x in self.states[t.target].ground
                }
                origins[child] = NodeOrigin(t.target, labels, origin.depth + 1, t)
                matroids[child] = self.states[t.target].relabel(labels)
                edges.append((node, child))
                check_cap("tree_node_cap", cap, len(matroids))
                queue.append(child)

        tree = ExplicitTreeOfMatroids.build(
            matroids, edges, root=self.root, boundary=boundary, limits=limits
        )
        logger.debug(
            "trees.unfold",
            extra={"depth": depth, "nodes": len(tree.nodes), "open": len(tree.boundary)},
        )
        return Unfolding(tree, origins)

    def unfold(self, *, limits: ToolkitLimits | None = None) -> Unfolding:
        """The whole (finite) unfolding.

        Raises:
            InputError: If the core has a cycle, so the unfolding is infinite.
        """
        if not self.has_finite_unfolding:
            msg = "The core has a cycle; truncate to a depth instead"
            raise InputError(msg)
        bound = max(self.prefix.depths.values()) + len(self.states) + 1
        return self.truncate(bound, limits=limits)

    def describe(self) -> str:
        """Short summary used in reports."""
        return (
            f"{len(self.prefix.nodes)} prefix node(s), {len(self.states)} state(s), "
            f"{len(self.transitions)} transition(s), real edges {format_set(self.real_edges)}"
        )


def state_names(presentation: TreePresentation) -> tuple[str, ...]:
    """Core states in canonical order."""
    return sort_labels(presentation.states)
