//! Weighted digraph of a square matrix, strongly connected components and
//! cyclicity.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
    pub weight: Rational,
}

/// Directed graph on nodes `0..node_count` with at most one arc per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    node_count: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a graph, rejecting out-of-range endpoints and duplicate arcs.
    pub fn from_arcs(node_count: usize, arcs: Vec<Arc>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut out = vec![Vec::new(); node_count];
        for (idx, arc) in arcs.iter().enumerate() {
            if arc.source >= node_count || arc.target >= node_count {
                return Err(Error::DimensionMismatch(format!(
                    "arc ({}, {}) outside {node_count} nodes",
                    arc.source, arc.target
                )));
            }
            if !seen.insert((arc.source, arc.target)) {
                return Err(Error::DimensionMismatch(format!(
                    "duplicate arc ({}, {})",
                    arc.source, arc.target
                )));
            }
            out[arc.source].push(idx);
        }
        Ok(Digraph {
            node_count,
            arcs,
            out,
        })
    }

    pub fn empty(node_count: usize) -> Self {
        Digraph {
            node_count,
            arcs: Vec::new(),
            out: vec![Vec::new(); node_count],
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn out_arcs(&self, node: usize) -> impl Iterator<Item = &Arc> + '_ {
        self.out[node].iter().map(move |&idx| &self.arcs[idx])
    }

    pub fn successors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_arcs(node).map(|a| a.target)
    }

    pub fn has_arc(&self, source: usize, target: usize) -> bool {
        self.successors(source).any(|t| t == target)
    }

    pub fn has_loop(&self, node: usize) -> bool {
        self.has_arc(node, node)
    }

    /// `(source, target)` pairs sorted row-major.
    pub fn arc_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = self.arcs.iter().map(|a| (a.source, a.target)).collect();
        pairs.sort_unstable();
        pairs
    }

    /// Nodes with at least one incident arc.
    pub fn active_nodes(&self) -> Vec<usize> {
        let mut active = vec![false; self.node_count];
        for a in &self.arcs {
            active[a.source] = true;
            active[a.target] = true;
        }
        (0..self.node_count).filter(|&v| active[v]).collect()
    }
}

/// Partition of the nodes into strongly connected components.
///
/// Components are listed by increasing smallest node; nodes inside a
/// component are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    /// `true` for a single node without a loop.
    pub trivial: Vec<bool>,
}

impl SccDecomposition {
    pub fn non_trivial(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.components
            .iter()
            .zip(&self.trivial)
            .filter(|(_, &t)| !t)
            .map(|(c, _)| c)
    }

    pub fn non_trivial_count(&self) -> usize {
        self.trivial.iter().filter(|&&t| !t).count()
    }
}

/// Graph of a square matrix: arc `(i, j)` of weight `A_ij` iff `A_ij` is
/// finite.
pub fn graph_of_matrix(a: &TropMatrix) -> Result<Digraph> {
    let n = a.require_square()?;
    let mut arcs = Vec::new();
    let mut out = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if let Some(weight) = a.get(i, j).value() {
                out[i].push(arcs.len());
                arcs.push(Arc {
                    source: i,
                    target: j,
                    weight,
                });
            }
        }
    }
    Ok(Digraph {
        node_count: n,
        arcs,
        out,
    })
}

/// Tarjan's algorithm, iterative so that deep graphs do not overflow the
/// stack.
pub fn scc(g: &Digraph) -> SccDecomposition {
    const UNVISITED: usize = usize::MAX;
    let n = g.node_count;
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw_components: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0;
    // (node, position in its successor list)
    let mut call_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call_stack.push((root, 0));
        while let Some(&(v, pos)) = call_stack.last() {
            if pos == 0 && index[v] == UNVISITED {
                index[v] = next_index;
                lowlink[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&arc_idx) = g.out[v].get(pos) {
                call_stack.last_mut().expect("non-empty").1 += 1;
                let w = g.arcs[arc_idx].target;
                if index[w] == UNVISITED {
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
                continue;
            }
            call_stack.pop();
            if let Some(&(parent, _)) = call_stack.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
            if lowlink[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                raw_components.push(comp);
            }
        }
    }

    raw_components.sort_by_key(|c| c[0]);
    let mut component_of = vec![0; n];
    for (cid, comp) in raw_components.iter().enumerate() {
        for &v in comp {
            component_of[v] = cid;
        }
    }
    let trivial = raw_components
        .iter()
        .map(|c| c.len() == 1 && !g.has_loop(c[0]))
        .collect();
    SccDecomposition {
        component_of,
        components: raw_components,
        trivial,
    }
}

/// Gcd of the circuit lengths inside a non-trivial strongly connected
/// component, from breadth-first levels: the gcd of `level(u) + 1 - level(v)`
/// over the component's arcs.
pub fn cyclicity_scc(g: &Digraph, component: &[usize]) -> Result<usize> {
    let Some(&root) = component.first() else {
        return Err(Error::TrivialComponent);
    };
    if component.len() == 1 && !g.has_loop(root) {
        return Err(Error::TrivialComponent);
    }
    let mut inside = vec![false; g.node_count];
    for &v in component {
        inside[v] = true;
    }
    let mut level: Vec<Option<i64>> = vec![None; g.node_count];
    level[root] = Some(0);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let next = level[u].unwrap() + 1;
        for w in g.successors(u) {
            if inside[w] && level[w].is_none() {
                level[w] = Some(next);
                queue.push_back(w);
            }
        }
    }
    let mut gcd = 0i64;
    for &u in component {
        let Some(lu) = level[u] else {
            return Err(Error::Internal(format!(
                "node {u} is not reachable inside its component"
            )));
        };
        for w in g.successors(u) {
            if inside[w] {
                let lw = level[w].expect("component node reached");
                gcd = gcd.gcd(&(lu + 1 - lw));
            }
        }
    }
    if gcd == 0 {
        return Err(Error::TrivialComponent);
    }
    Ok(gcd as usize)
}

/// Lcm of the cyclicities of the non-trivial components. The graph must be
/// completely reducible (no arc between two different components).
pub fn cyclicity_graph(g: &Digraph) -> Result<usize> {
    let decomposition = scc(g);
    for a in &g.arcs {
        if decomposition.component_of[a.source] != decomposition.component_of[a.target] {
            return Err(Error::NotCompletelyReducible(a.source, a.target));
        }
    }
    let value = decomposition
        .non_trivial()
        .try_fold(1usize, |acc, comp| Ok(acc.lcm(&cyclicity_scc(g, comp)?)));
    value
}
