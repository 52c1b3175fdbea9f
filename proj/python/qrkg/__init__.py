"""q-composite random key graph toolkit.

Samplers for the G_q(n, K, P) / Erdos-Renyi / binomial q-intersection
models, decisive or certified three-valued property checkers
(min degree, k-connectivity, k-robustness, Hamilton cycle, perfect
matching), the closed-form threshold side (edge probabilities, deviations,
limit probabilities, critical design parameters, transition-width
predictions) and a deterministic Monte-Carlo engine.
"""

from qrkg._core import (  # noqa: F401
    Graph,
    __version__,
    asymptotic_edge_probability,
    check,
    critical_key_pool,
    critical_key_ring,
    critical_node_count,
    deviation,
    er_coupling_probability,
    estimate_point,
    exact_edge_probability,
    graph_from_edges,
    graph_json,
    limit_probability,
    min_degree,
    oracle_check,
    predicted_width,
    sample_binomial_intersection,
    sample_er,
    sample_key_rings,
    sample_rkg,
    sweep_csv,
)
