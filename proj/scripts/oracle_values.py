#!/usr/bin/env python3
"""Reference values from networkx/numpy for a fixed set of graphs.

Writes tests/data/oracle_values.json. The C++ unit tests compare solve() and
spectral_truth() against this file; rerun only when the graph set changes.

    python3 scripts/oracle_values.py > tests/data/oracle_values.json
"""
import json
import sys

import networkx as nx
import numpy as np

APPENDIX = [(1, 7), (1, 12), (1, 6), (1, 3), (1, 2), (7, 3), (7, 6), (7, 12), (12, 3),
            (6, 17), (6, 9), (3, 2), (4, 5), (4, 8), (4, 10), (4, 11), (5, 15), (5, 16),
            (5, 8), (5, 10), (5, 13), (5, 11), (5, 14), (8, 10), (10, 11), (10, 14),
            (11, 16), (11, 13), (16, 18), (13, 18), (17, 9), (17, 19), (9, 19)]


def shift(g):
    return nx.relabel_nodes(g, {v: v + 1 for v in g.nodes()})


def graphs():
    out = {}
    g = nx.Graph()
    g.add_nodes_from(range(1, 20))
    g.add_edges_from(APPENDIX)
    out["appendix"] = g
    out["watts"] = shift(nx.connected_watts_strogatz_graph(12, 4, 0.3, seed=3))
    out["petersen"] = shift(nx.petersen_graph())
    w = shift(nx.connected_watts_strogatz_graph(10, 4, 0.4, seed=5))
    rng = np.random.default_rng(5)
    for u, v in w.edges():
        w[u][v]["weight"] = int(rng.integers(1, 11))
    out["weighted"] = w
    d = nx.gnp_random_graph(10, 0.3, seed=2, directed=True)
    out["digraph"] = shift(d)
    dag = nx.DiGraph()
    dag.add_nodes_from(range(1, 10))
    r = np.random.default_rng(11)
    for u in range(1, 10):
        for v in range(u + 1, 10):
            if r.random() < 0.3:
                dag.add_edge(u, v)
    out["dag"] = dag
    f = nx.DiGraph()
    f.add_nodes_from(range(1, 9))
    r = np.random.default_rng(13)
    for u in range(1, 9):
        for v in range(1, 9):
            if u != v and not f.has_edge(v, u) and r.random() < 0.35:
                f.add_edge(u, v, weight=int(r.integers(1, 21)))
    out["flow"] = f
    out["tournament"] = shift(nx.tournament.random_tournament(6, seed=1))
    return out


def graph_json(g):
    edges = []
    for u, v, data in g.edges(data=True):
        edges.append([u, v, data["weight"]] if "weight" in data else [u, v])
    return {"n": g.number_of_nodes(), "directed": g.is_directed(), "edges": edges}


def spectral(g):
    # Spectral tasks ignore edge weights.
    a = nx.to_numpy_array(g, nodelist=sorted(g.nodes()), weight=None)
    lam = np.sort(np.linalg.eigvalsh(a))[::-1]
    lap = np.diag(a.sum(axis=1)) - a
    mu = np.sort(np.linalg.eigvalsh(lap))
    n, m = g.number_of_nodes(), g.number_of_edges()
    s = mu / mu.sum()
    s = s[s > 1e-15]
    vals, vecs = np.linalg.eigh(a)
    top = np.abs(vecs[:, np.argmax(vals)])
    return {
        "graph_energy": float(np.abs(lam).sum()),
        "n_components": float(nx.number_connected_components(g)),
        "sum_lambda_squared": float((lam ** 2).sum()),
        "algebraic_connectivity": float(mu[1]),
        "estrada_index": float(np.exp(lam).sum()),
        "laplacian_energy": float(np.abs(mu - 2 * m / n).sum()),
        "natural_connectivity": float(np.log(np.exp(lam).mean())),
        "spectral_gap": float(lam[0] - lam[1]),
        "spectral_radius": float(np.abs(lam).max()),
        "heat_trace_t1": float(np.exp(-mu).sum()),
        "von_neumann_entropy": float(-(s * np.log(s)).sum()),
        # Only meaningful when the top eigenvalue is simple.
        "eigenvector_cent_top": float(top.max()) if lam[0] - lam[1] > 1e-9 else None,
    }


def largest(g):
    # Matches the solver: all largest components when several tie.
    comps = list(nx.connected_components(g))
    size = max(len(c) for c in comps)
    return [g.subgraph(c) for c in comps if len(c) == size]


def undirected_cases(name, g):
    n = g.number_of_nodes()
    node, u, v = 3, 2, 5
    src, dst = 1, n
    cases = []

    def add(task, params, answer, tol=None):
        cases.append({"graph": name, "task": task, "params": params, "answer": answer,
                      **({"tol": tol} if tol is not None else {})})

    add("node_number", {}, n)
    add("edge_number", {}, g.number_of_edges())
    add("degree", {"node": node}, g.degree(node))
    add("neighbor", {"node": node}, sorted(g.neighbors(node)))
    add("common_neighbor", {"u": u, "v": v}, sorted(nx.common_neighbors(g, u, v)))
    add("edge_existence", {"u": u, "v": v}, g.has_edge(u, v))
    add("density", {}, nx.density(g), 1e-12)
    add("is_regular", {}, nx.is_regular(g))
    add("is_bipartite", {}, nx.is_bipartite(g))
    add("has_cycle", {}, not nx.is_forest(g))
    add("is_eulerian", {}, nx.is_eulerian(g))
    add("connected_component_number", {}, nx.number_connected_components(g))
    add("triangles", {}, sum(nx.triangles(g).values()) // 3)
    add("clustering_coefficient", {"node": node}, nx.clustering(g, node), 1e-12)
    add("degree_centrality", {"node": node}, nx.degree_centrality(g)[node], 1e-12)
    add("avg_neighbor_degree", {"node": node},
        nx.average_neighbor_degree(g, nodes=[node])[node], 1e-12)
    add("closeness_centrality", {"node": node}, nx.closeness_centrality(g, node), 1e-12)
    add("harmonic_centrality", {"node": node}, nx.harmonic_centrality(g)[node], 1e-12)
    add("betweenness_centrality", {"node": node},
        nx.betweenness_centrality(g, normalized=True)[node], 1e-12)
    add("adamic_adar_index", {"u": u, "v": v},
        next(nx.adamic_adar_index(g, [(u, v)]))[2], 1e-12)
    add("jaccard_coefficient", {"u": u, "v": v},
        next(nx.jaccard_coefficient(g, [(u, v)]))[2], 1e-12)
    add("resource_allocation_index", {"u": u, "v": v},
        next(nx.resource_allocation_index(g, [(u, v)]))[2], 1e-12)
    add("local_connectivity", {"source": src, "target": dst}, nx.has_path(g, src, dst))
    add("bridges", {}, sorted([min(a, b), max(a, b)] for a, b in nx.bridges(g)))
    add("global_efficiency", {}, nx.global_efficiency(g), 1e-12)
    add("pagerank", {"node": node},
        nx.pagerank(g, alpha=0.85, tol=1e-14, max_iter=10000)[node], 1e-7)
    add("weighted_minimum_spanning_tree", {},
        float(sum(d.get("weight", 1) for _, _, d in nx.minimum_spanning_edges(g))), 1e-12)
    parts = largest(g)
    add("diameter", {}, max(nx.diameter(p) for p in parts))
    add("radius", {}, min(nx.radius(p) for p in parts))
    if nx.is_connected(g):
        add("center", {}, sorted(nx.center(g)))
        add("periphery", {}, sorted(nx.periphery(g)))
        add("barycenter", {}, sorted(nx.barycenter(g)))
        add("wiener_index", {}, int(nx.wiener_index(g)))
        path = nx.shortest_path_length(g, src, dst)
        add("shortest_path_length", {"source": src, "target": dst}, path)
        wpath = nx.shortest_path_length(g, src, dst, weight="weight")
        add("weighted_shortest_path_length", {"source": src, "target": dst}, float(wpath))
    return cases


def directed_cases(name, g):
    n = g.number_of_nodes()
    node = 3
    cases = []

    def add(task, params, answer, tol=None):
        cases.append({"graph": name, "task": task, "params": params, "answer": answer,
                      **({"tol": tol} if tol is not None else {})})

    add("node_number", {}, n)
    add("edge_number", {}, g.number_of_edges())
    add("degree", {"node": node}, g.degree(node))
    add("neighbor", {"node": node}, sorted(g.successors(node)))
    add("density", {}, nx.density(g), 1e-12)
    add("strongly_connected_number", {}, nx.number_strongly_connected_components(g))
    add("is_tournament", {}, nx.tournament.is_tournament(g))
    add("has_cycle", {}, not nx.is_directed_acyclic_graph(g))
    add("local_connectivity", {"source": 1, "target": n}, nx.has_path(g, 1, n))
    add("pagerank", {"node": node},
        nx.pagerank(g, alpha=0.85, tol=1e-14, max_iter=10000)[node], 1e-7)
    add("closeness_centrality", {"node": node}, nx.closeness_centrality(g, node), 1e-12)
    add("harmonic_centrality", {"node": node}, nx.harmonic_centrality(g)[node], 1e-12)
    add("betweenness_centrality", {"node": node},
        nx.betweenness_centrality(g, normalized=True)[node], 1e-12)
    if nx.is_directed_acyclic_graph(g):
        add("topological_sort", {}, list(nx.lexicographical_topological_sort(g)))
    if name == "flow":
        add("maximal_flow", {"source": 1, "target": n},
            float(nx.maximum_flow_value(g, 1, n, capacity="weight")), 1e-12)
    return cases


def main():
    gs = graphs()
    cases = []
    spectra = {}
    for name, g in gs.items():
        if g.is_directed():
            cases += directed_cases(name, g)
        else:
            cases += undirected_cases(name, g)
            spectra[name] = spectral(g)
    doc = {
        "networkx": nx.__version__,
        "graphs": {name: graph_json(g) for name, g in gs.items()},
        "cases": cases,
        "spectral": spectra,
    }
    json.dump(doc, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
