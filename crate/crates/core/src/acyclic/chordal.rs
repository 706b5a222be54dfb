use super::members;

/// A simple undirected graph on `{0, …, n-1}` stored as adjacency masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Symmetrizes the masks and drops loops.
    pub fn from_adjacency(mut adj: Vec<u64>) -> Self {
        for v in 0..adj.len() {
            adj[v] &= !(1 << v);
            for w in members(adj[v]) {
                adj[w] |= 1 << v;
            }
        }
        Self { adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            adj[a] |= 1 << b;
        }
        Self::from_adjacency(adj)
    }

    pub fn complete(n: usize) -> Self {
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self::from_adjacency(vec![all; n])
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = members(frontier).iter().fold(0, |m, &v| m | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen.count_ones() as usize == self.adj.len()
    }

    /// Vertices in maximum cardinality search order: each step visits an
    /// unvisited vertex with the most visited neighbours, lowest index on
    /// ties.
    pub fn mcs_order(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by_key(|&v| ((self.adj[v] & visited).count_ones(), std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            visited |= 1 << v;
            order.push(v);
        }
        order
    }

    /// A vertex of the reversed search order whose later neighbours do not
    /// form a clique, if the order is not a perfect elimination order.
    pub fn non_simplicial_vertex(&self, elimination: &[usize]) -> Option<usize> {
        let mut remaining: u64 = elimination.iter().fold(0, |m, &v| m | 1 << v);
        for &v in elimination {
            remaining &= !(1 << v);
            let later = self.adj[v] & remaining;
            if members(later).iter().any(|&w| later & !(1 << w) & !self.adj[w] != 0) {
                return Some(v);
            }
        }
        None
    }
}

/// Chordality via maximum cardinality search: the graph is chordal exactly
/// when the reversed search order is a perfect elimination order.
pub fn is_chordal(g: &Graph) -> bool {
    let mut order = g.mcs_order();
    order.reverse();
    g.non_simplicial_vertex(&order).is_none()
}
