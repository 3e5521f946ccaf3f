use std::collections::HashMap;

use petgraph::algo::{condensation, toposort};
use petgraph::graph::DiGraph;
use petgraph::visit::EdgeRef;

use crate::error::Result;
use crate::freealg::{RelationSet, WeightedOrder, Word};

/// `K<X>/(obstructions)` for a finite set of words.
#[derive(Debug, Clone)]
pub struct MonomialAlgebra {
    order: WeightedOrder,
    obstructions: Vec<Word>,
}

/// Dimensions `h_0..h_N` of the graded components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub coefficients: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    /// Growth of polynomial degree `d`; this is the GK dimension.
    Polynomial(u32),
    Exponential,
}

impl std::fmt::Display for Growth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Growth::Polynomial(d) => write!(f, "{d}"),
            Growth::Exponential => f.write_str("exponential"),
        }
    }
}

/// Ufnarovski graph: vertices are the normal words of length `L − 1`, and
/// each normal word of length `L` gives an edge from its prefix to its
/// suffix, where `L = max(2, longest obstruction)`. Normal words of length
/// at least `L − 1` are exactly the paths.
#[derive(Debug, Clone)]
pub struct UfnGraph {
    pub window: usize,
    pub vertices: Vec<Word>,
    /// `(from, to, appended letter)`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl MonomialAlgebra {
    /// Drops obstructions that contain another one, and duplicates.
    pub fn new(order: &WeightedOrder, obstructions: &[Word]) -> Result<MonomialAlgebra> {
        for w in obstructions {
            order.check_word(w)?;
        }
        let mut sorted: Vec<Word> = obstructions.to_vec();
        sorted.sort_by_key(|w| (w.len(), w.clone()));
        sorted.dedup();
        let mut kept: Vec<Word> = Vec::new();
        for w in sorted {
            if !kept.iter().any(|k| w.contains(k)) {
                kept.push(w);
            }
        }
        kept.sort_by(|a, b| order.cmp(a, b));
        Ok(MonomialAlgebra { order: order.clone(), obstructions: kept })
    }

    /// The leading words of `rels`.
    pub fn from_relations(rels: &RelationSet) -> MonomialAlgebra {
        MonomialAlgebra::new(rels.order(), &rels.leading_words()).expect("leading words use known generators")
    }

    pub fn order(&self) -> &WeightedOrder {
        &self.order
    }

    pub fn obstructions(&self) -> &[Word] {
        &self.obstructions
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        !self.obstructions.iter().any(|o| w.contains(o))
    }

    fn all_words(&self, len: usize) -> Vec<Word> {
        let n = self.order.num_generators();
        let mut words = vec![Vec::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w: Vec<usize>| {
                    (0..n).map(move |x| {
                        let mut v = w.clone();
                        v.push(x);
                        v
                    })
                })
                .filter(|v| self.is_normal(&Word::from_letters(v)))
                .collect();
        }
        words.into_iter().map(|v| Word::from_letters(&v)).collect()
    }

    pub fn graph(&self) -> UfnGraph {
        let window = self.obstructions.iter().map(Word::len).max().unwrap_or(0).max(2);
        let vertices = self.all_words(window - 1);
        let index: HashMap<&Word, usize> = vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            for x in 0..self.order.num_generators() {
                let long = v.concat(&Word::letter(x));
                if !self.is_normal(&long) {
                    continue;
                }
                let to = index[&long.slice(1, long.len())];
                edges.push((i, to, x));
            }
        }
        UfnGraph { window, vertices, edges }
    }

    /// `h_q` = number of normal words of weighted degree `q`, by dynamic
    /// programming over the Ufnarovski graph.
    pub fn hilbert(&self, max_degree: u64) -> HilbertData {
        let top = max_degree as usize;
        let mut h = vec![0u64; top + 1];
        let graph = self.graph();
        for len in 0..graph.window - 1 {
            for w in self.all_words(len) {
                let d = self.order.degree(&w) as usize;
                if d <= top {
                    h[d] += 1;
                }
            }
        }
        // dp[q][v]: normal words of degree q, length ≥ L − 1, ending in v
        let nv = graph.vertices.len();
        let mut dp = vec![vec![0u64; nv]; top + 1];
        for (i, v) in graph.vertices.iter().enumerate() {
            let d = self.order.degree(v) as usize;
            if d <= top {
                dp[d][i] += 1;
            }
        }
        let mut out_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for &(from, to, x) in &graph.edges {
            out_edges[from].push((to, self.order.weight(x) as usize));
        }
        for q in 0..=top {
            for v in 0..nv {
                let count = dp[q][v];
                if count == 0 {
                    continue;
                }
                h[q] += count;
                for &(to, w) in &out_edges[v] {
                    if q + w <= top {
                        dp[q + w][to] += count;
                    }
                }
            }
        }
        HilbertData { coefficients: h }
    }

    /// Growth read off the Ufnarovski graph: exponential if some strongly
    /// connected component carries more than one cycle, otherwise the
    /// largest number of cyclic components met by one path.
    pub fn growth(&self) -> Growth {
        let g = self.graph();
        let mut dg: DiGraph<(), ()> = DiGraph::new();
        let nodes: Vec<_> = (0..g.vertices.len()).map(|_| dg.add_node(())).collect();
        for &(a, b, _) in &g.edges {
            dg.add_edge(nodes[a], nodes[b], ());
        }
        let internal_edges = |comp: &[petgraph::graph::NodeIndex], dg: &DiGraph<(), ()>| {
            comp.iter()
                .map(|&v| dg.edges(v).filter(|e| comp.contains(&e.target())).count())
                .sum::<usize>()
        };
        let comps = petgraph::algo::tarjan_scc(&dg);
        let mut cyclic_of_node = vec![false; dg.node_count()];
        for comp in &comps {
            let e = internal_edges(comp, &dg);
            if e > comp.len() {
                return Growth::Exponential;
            }
            if e > 0 {
                for v in comp {
                    cyclic_of_node[v.index()] = true;
                }
            }
        }
        // Longest chain of cyclic components in the condensation.
        let cond = condensation(dg.map(|i, _| i, |_, _| ()), true);
        let order = toposort(&cond, None).expect("condensation is acyclic");
        let weight = |c: petgraph::graph::NodeIndex| u32::from(cyclic_of_node[cond[c][0].index()]);
        let mut best: HashMap<petgraph::graph::NodeIndex, u32> = HashMap::new();
        let mut overall = 0;
        for c in order {
            let here = best.get(&c).copied().unwrap_or(0) + weight(c);
            overall = overall.max(here);
            for n in cond.neighbors(c) {
                let slot = best.entry(n).or_insert(0);
                *slot = (*slot).max(here);
            }
        }
        Growth::Polynomial(overall)
    }
}
