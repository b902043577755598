"""Gauge-invariant ideal lattices of finite graph algebras, computed on vertex sets."""

from .errors import (
    CapacityError,
    GraphError,
    InvariantViolation,
    NotSatHerError,
    OwnershipError,
    ParseError,
    UnknownVertexError,
)
from .graph import (
    CycleWitness,
    Edge,
    Graph,
    VertexSet,
    backward_closure,
    find_entryless_cycle,
    forward_closure,
    has_condition_L,
)
from .ideals import (
    IdealLattice,
    LatticeLimits,
    SatHerSet,
    enumerate_sat_her,
    hereditary_closure,
    is_hereditary,
    is_regular,
    is_saturated,
    join,
    meet,
    perp,
    perp_perp,
    quotient_graph,
    regular_ideals,
    saturate,
)
from .io import parse_graph, serialize_graph, to_dot

__version__ = "0.1.0"
