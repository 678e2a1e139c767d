import math
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Set, Tuple

import networkx as nx
from loguru import logger
from pydantic import ValidationError

from ..costalgebra import CostExpr, bell
from ..datamodel import BroadcastMode, BroadcastSchedule, QFlyTopology, RoutePath
from ..errors import TopologyError

INTRA_GROUP_FANOUT_BELL = 2


def build_topology(num_groups: int = 64, nodes_per_group: int = 12, offsets: Iterable[int] = (1, 2, 4, 8, 16, 32), **kwargs) -> QFlyTopology:
    """
    Validate and build a Q-Fly topology.

    Raises:
        TopologyError: if an offset is out of range or repeated.
    """
    try:
        topo = QFlyTopology(num_groups=num_groups, nodes_per_group=nodes_per_group, offsets=tuple(offsets), **kwargs)
    except ValidationError as e:
        raise TopologyError(f"Invalid topology: {e}") from e
    if topo.duplex_offsets:
        logger.debug(f"Duplex offsets for {num_groups} groups: {topo.duplex_offsets}")
    return topo


@lru_cache(maxsize=32)
def _circulant(num_groups: int, offsets: Tuple[int, ...]) -> nx.Graph:
    # Offsets are traversed in both directions, so the undirected circulant graph is the routing graph.
    return nx.circulant_graph(num_groups, list(offsets))


@lru_cache(maxsize=32)
def _distances(num_groups: int, offsets: Tuple[int, ...]) -> Dict[int, Dict[int, int]]:
    return dict(nx.all_pairs_shortest_path_length(_circulant(num_groups, offsets)))


def inter_group_graph(topo: QFlyTopology) -> nx.Graph:
    return _circulant(topo.num_groups, topo.offsets)


def shortest_distances(topo: QFlyTopology) -> Mapping[int, Mapping[int, int]]:
    """Breadth-first hop counts between every ordered pair of groups."""
    return _distances(topo.num_groups, topo.offsets)


def diameter(topo: QFlyTopology) -> int:
    """
    Largest shortest-path hop count over all group pairs.

    Raises:
        TopologyError: if some group cannot reach another.
    """
    distances = shortest_distances(topo)
    worst = 0
    for src in range(topo.num_groups):
        reached = distances[src]
        if len(reached) < topo.num_groups:
            raise TopologyError(f"Inter-group graph is disconnected: group {src} reaches {len(reached)} groups")
        worst = max(worst, max(reached.values()))
    return worst


def _steps(topo: QFlyTopology) -> List[int]:
    """Signed offsets in routing preference order: larger offsets first, forward before backward."""
    steps: List[int] = []
    for offset in sorted(topo.offsets, reverse=True):
        steps.append(offset)
        if (2 * offset) % topo.num_groups != 0:
            steps.append(-offset)
    return steps


def route(topo: QFlyTopology, src: int, dst: int) -> RoutePath:
    """
    Shortest path between two groups.

    Ties go to the larger offset first, then to the lower next group index.

    Raises:
        TopologyError: for invalid groups or an unreachable destination.
    """
    g = topo.num_groups
    if not (0 <= src < g and 0 <= dst < g):
        raise TopologyError(f"Groups must lie in [0, {g - 1}], got {src} -> {dst}")
    if src == dst:
        raise TopologyError("Source and destination groups must differ")

    to_dst = shortest_distances(topo)[dst]
    if src not in to_dst:
        raise TopologyError(f"Group {dst} is unreachable from group {src}")

    path = [src]
    current = src
    while current != dst:
        remaining = to_dst[current]
        candidates = []
        for rank, step in enumerate(_steps(topo)):
            nxt = (current + step) % g
            if to_dst.get(nxt) == remaining - 1:
                candidates.append((rank, nxt))
        # rank orders by offset size; among equal ranks the lower group wins
        _, current = min(candidates)
        path.append(current)
    return RoutePath(groups=path)


def switch_ports(topo: QFlyTopology) -> int:
    """One port per node in the group plus one duplex port per offset."""
    return topo.nodes_per_group + len(topo.offsets)


def _fresh_destinations(order: List[int], received: Set[int], count: int) -> List[int]:
    picked = []
    for group in order:
        if group not in received:
            picked.append(group)
            if len(picked) == count:
                break
    return picked


def broadcast_rounds(topo: QFlyTopology, mode: BroadcastMode = BroadcastMode.SOURCE_LIMITED, root: int = 0) -> BroadcastSchedule:
    """
    Round-based fan-out of the root group's value to every group.

    Each sender issues at most len(offsets) routed sends per round. In source-limited
    mode only the root sends; in relaying mode every group already holding the value
    sends too, so it never needs more rounds than source-limited mode.
    """
    g = topo.num_groups
    if not 0 <= root < g:
        raise TopologyError(f"Root group {root} outside [0, {g - 1}]")
    fan = len(topo.offsets)
    distances = shortest_distances(topo)

    def preference(src: int) -> List[int]:
        # nearest groups first, then by index
        return sorted(range(g), key=lambda dst: (distances[src].get(dst, g), dst))

    received: Set[int] = {root}
    holders: List[int] = [root]
    rounds: List[List[Tuple[int, int]]] = []
    while len(received) < g:
        senders = [root] if mode == BroadcastMode.SOURCE_LIMITED else sorted(holders)
        sends: List[Tuple[int, int]] = []
        for src in senders:
            for dst in _fresh_destinations(preference(src), received, fan):
                received.add(dst)
                sends.append((src, dst))
        if not sends:
            raise TopologyError("Broadcast made no progress")
        holders.extend(dst for _, dst in sends)
        rounds.append(sends)

    logger.debug(f"{mode.value} broadcast over {g} groups finished in {len(rounds)} rounds")
    return BroadcastSchedule(root=root, mode=mode, rounds=rounds)


def inter_group_rounds(topo: QFlyTopology) -> int:
    """Source-limited broadcast length, ceil((g - 1) / |offsets|)."""
    return math.ceil((topo.num_groups - 1) / len(topo.offsets))


def analytic_broadcast_cost(topo: QFlyTopology, domain: Tuple = (2, 10)) -> CostExpr:
    """
    Fan-out of one variable per group to every group, in T_Bell.

    Intra-group GHZ fan-out (2), source-limited inter-group rounds, and the worst-case
    rearrangement of all g variables across the group's nodes. Duplicate copies are
    removed by measurement at no cost.
    """
    slope = INTRA_GROUP_FANOUT_BELL + inter_group_rounds(topo) + topo.num_groups
    return bell(slope, domain)
