/// Undirected graph with positive integer edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(u32, u32, u64)>,
}

impl WeightedGraph {
    /// Parallel edges are merged by adding weights; zero weights and loops are dropped.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32, u64)>) -> Self {
        let mut e: Vec<(u32, u32, u64)> = edges
            .into_iter()
            .filter(|&(u, v, w)| u != v && w > 0)
            .map(|(u, v, w)| (u.min(v), u.max(v), w))
            .collect();
        e.sort_unstable();
        let mut merged: Vec<(u32, u32, u64)> = Vec::with_capacity(e.len());
        for (u, v, w) in e {
            assert!((v as usize) < n, "edge endpoint out of range");
            match merged.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 += w,
                _ => merged.push((u, v, w)),
            }
        }
        Self { n, edges: merged }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::new(
            a + b,
            (0..a).flat_map(|u| (0..b).map(move |v| (u as u32, (a + v) as u32, 1))),
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32, u64)] {
        &self.edges
    }

    /// Weighted degree of each vertex.
    pub fn degrees(&self) -> Vec<u64> {
        let mut d = vec![0; self.n];
        for &(u, v, w) in &self.edges {
            d[u as usize] += w;
            d[v as usize] += w;
        }
        d
    }

    /// Number of neighbours of each vertex.
    pub fn valencies(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v, _) in &self.edges {
            d[u as usize] += 1;
            d[v as usize] += 1;
        }
        d
    }

    pub fn num_components(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for &(u, v, _) in &self.edges {
            uf.union(u as usize, v as usize);
        }
        uf.components()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.num_components() == 1
    }

    /// Proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v, _) in &self.edges {
            adj[u as usize].push(v as usize);
            adj[v as usize].push(u as usize);
        }
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        stack.push(v);
                    } else if colour[v] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }
}

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.count -= 1;
        }
    }

    pub fn components(&self) -> usize {
        self.count
    }
}
