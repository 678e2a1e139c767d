from .qfly import (
    analytic_broadcast_cost,
    broadcast_rounds,
    build_topology,
    diameter,
    inter_group_graph,
    inter_group_rounds,
    route,
    shortest_distances,
    switch_ports,
)

__all__ = [
    "analytic_broadcast_cost",
    "broadcast_rounds",
    "build_topology",
    "diameter",
    "inter_group_graph",
    "inter_group_rounds",
    "route",
    "shortest_distances",
    "switch_ports",
]
