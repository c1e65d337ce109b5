"""Cat and TC of graphs and wild one-dimensional spaces."""

from ._wildcat import (
    AtomError,
    Error,
    Graph,
    GraphError,
    InfiniteRankError,
    ParseError,
    Plan,
    PlanFormatError,
    Space,
    UnstableExpressionError,
    betti1,
    cat,
    cat_graph,
    info,
    parse_space,
    plan_graph,
    run,
    tc,
    tc_graph,
    truncate,
    wrk,
    zero_divisor_cuplength,
)

__all__ = [name for name in dir() if not name.startswith("_")]
