use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Articulation points and maximal 2-connected blocks of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cut_vertices: VertexSet,
    /// Sorted by their vertex lists; a bridge forms a two-vertex block.
    pub blocks: Vec<VertexSet>,
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    cuts: VertexSet,
    blocks: Vec<VertexSet>,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.disc[v] == 0 {
                children += 1;
                self.edge_stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cuts.insert(u);
        }
    }
}

impl Graph {
    pub fn block_decomposition(&self) -> Result<BlockDecomposition> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n == 1 {
            return Ok(BlockDecomposition {
                cut_vertices: VertexSet::EMPTY,
                blocks: vec![VertexSet::singleton(0)],
            });
        }
        let mut dfs = Dfs {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            edge_stack: Vec::new(),
            cuts: VertexSet::EMPTY,
            blocks: Vec::new(),
        };
        if self.n > 0 {
            dfs.visit(0, None);
        }
        let mut blocks = dfs.blocks;
        blocks.sort_by_key(|b| b.to_vec());
        Ok(BlockDecomposition {
            cut_vertices: dfs.cuts,
            blocks,
        })
    }

    pub fn cut_vertices(&self) -> Result<VertexSet> {
        Ok(self.block_decomposition()?.cut_vertices)
    }

    pub fn blocks(&self) -> Result<Vec<VertexSet>> {
        Ok(self.block_decomposition()?.blocks)
    }
}
