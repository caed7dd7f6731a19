"""Reachability of dead ends and decisive cycles once one player's moves are fixed."""

from __future__ import annotations

from typing import TYPE_CHECKING

import networkx as nx

from parity_game_api import Player

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from parity_game_api import ParityArena


def restricted_graph(
    arena: ParityArena, fixed: Player, choices: Mapping[int, int], within: Iterable[int]
) -> nx.DiGraph:
    """The moves left once ``fixed`` always plays ``choices``.

    Positions of ``fixed`` without a choice keep no move at all.
    """
    nodes = set(within)
    graph = nx.DiGraph()
    graph.add_nodes_from(sorted(nodes))
    for v in sorted(nodes):
        if arena.owner(v) is fixed:
            target = choices.get(v)
            if target is not None and target in nodes:
                graph.add_edge(v, target)
            continue
        graph.add_edges_from((v, u) for u in arena.successors(v) if u in nodes)
    return graph


def winning_cycles(arena: ParityArena, graph: nx.DiGraph, player: Player) -> set[int]:
    """Positions on cycles whose largest priority favours ``player``."""
    found: set[int] = set()
    priorities = sorted({arena.priority(v) for v in graph})
    for top in priorities:
        if Player.for_priority(top) is not player:
            continue
        low = graph.subgraph(v for v in graph if arena.priority(v) <= top)
        for component in nx.strongly_connected_components(low):
            if not any(arena.priority(v) == top for v in component):
                continue
            if len(component) > 1 or any(low.has_edge(v, v) for v in component):
                found |= component
    return found


def escapes(arena: ParityArena, graph: nx.DiGraph, fixed: Player) -> frozenset[int]:
    """Positions from which ``fixed``'s opponent wins against the fixed moves.

    The opponent wins by reaching a position where ``fixed`` is stuck, or a
    cycle whose largest priority favours the opponent.
    """
    stuck = {v for v in graph if arena.owner(v) is fixed and graph.out_degree(v) == 0}
    goals = stuck | winning_cycles(arena, graph, fixed.opponent)
    reached = set(goals)
    for goal in goals:
        reached |= nx.ancestors(graph, goal)
    return frozenset(reached)
