//! Harish-Chandra cells as connected components of the wall-crossing graph.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use petgraph::dot::{Config, Dot};
use petgraph::graph::{NodeIndex, UnGraph};
use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::hmap::{associated_variety_of, HmapError};
use crate::involution::SignedInvolution;
use crate::signed::OrbitDescriptor;
use crate::verify::root_pairs;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error(transparent)]
    Hmap(#[from] HmapError),
    #[error("cell check failed at {sigma}: {detail}")]
    VerificationFailure { sigma: String, detail: String },
}

/// One edge `σ → σ'` of `T_{αβ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellEdge {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct CellGraph {
    pub n: usize,
    pub p: usize,
    pub vertices: Vec<SignedInvolution>,
    pub edges: Vec<CellEdge>,
    /// Vertex indices of each cell, cells ordered by their first vertex.
    pub cells: Vec<Vec<usize>>,
}

/// Builds the graph of all wall-crossing edges on `S_{n,p}`.
pub fn cells(n: usize, p: usize) -> Result<CellGraph, CellError> {
    let vertices: Vec<SignedInvolution> = SignedInvolution::enumerate(n, p).collect();
    let index: BTreeMap<&SignedInvolution, usize> = vertices.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut edges = Vec::new();
    let mut uf = UnionFind::<usize>::new(vertices.len());
    for (i, sigma) in vertices.iter().enumerate() {
        let tau = sigma.tau();
        for (alpha, beta) in root_pairs(n) {
            if tau.contains(&alpha) || !tau.contains(&beta) {
                continue;
            }
            let out = sigma.wall_cross(alpha, beta).map_err(HmapError::from)?;
            for t in out {
                let j = index[&t];
                uf.union(i, j);
                edges.push(CellEdge { from: i, to: j, label: format!("({alpha},{beta})") });
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..vertices.len() {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut cells: Vec<Vec<usize>> = groups.into_values().collect();
    cells.sort();
    Ok(CellGraph { n, p, vertices, edges, cells })
}

impl CellGraph {
    pub fn descriptors(&self) -> Result<Vec<OrbitDescriptor>, CellError> {
        self.vertices
            .iter()
            .map(|s| associated_variety_of(s).map_err(CellError::from))
            .collect()
    }

    /// Checks that the cells are exactly the fibers of the orbit
    /// descriptor. Returns the descriptor of each cell.
    pub fn verify(&self) -> Result<Vec<OrbitDescriptor>, CellError> {
        let desc = self.descriptors()?;
        let mut per_cell = Vec::new();
        let mut owner: BTreeMap<&OrbitDescriptor, usize> = BTreeMap::new();
        for (c, cell) in self.cells.iter().enumerate() {
            let d = &desc[cell[0]];
            if let Some(&v) = cell.iter().find(|&&v| desc[v] != *d) {
                return Err(self.failure(v, format!("descriptor {} differs from {} in the same cell", desc[v], d)));
            }
            if let Some(prev) = owner.insert(d, c) {
                return Err(self.failure(cell[0], format!("descriptor {d} also labels cell {prev}")));
            }
            per_cell.push(d.clone());
        }
        let distinct: BTreeSet<&OrbitDescriptor> = desc.iter().collect();
        if distinct.len() != self.cells.len() {
            return Err(CellError::VerificationFailure {
                sigma: String::new(),
                detail: format!("{} cells but {} descriptors", self.cells.len(), distinct.len()),
            });
        }
        Ok(per_cell)
    }

    fn failure(&self, v: usize, detail: String) -> CellError {
        CellError::VerificationFailure { sigma: self.vertices[v].to_string(), detail }
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Graphviz rendering; vertices carry the text form of the parameter.
    pub fn to_dot(&self) -> String {
        let mut g: UnGraph<String, String> = UnGraph::new_undirected();
        let nodes: Vec<NodeIndex> = self.vertices.iter().map(|s| g.add_node(s.to_string())).collect();
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            let key = (e.from.min(e.to), e.from.max(e.to), e.label.clone());
            if seen.insert(key) {
                g.add_edge(nodes[e.from], nodes[e.to], e.label.clone());
            }
        }
        format!("{}", Dot::with_config(&g, &[Config::GraphContentOnly]))
            .lines()
            .fold(String::from("graph cells {\n"), |mut s, l| {
                let _ = writeln!(s, "{l}");
                s
            })
            + "}\n"
    }

    /// One line per cell: size, descriptor and members.
    pub fn summary(&self) -> Result<String, CellError> {
        let desc = self.descriptors()?;
        let mut s = String::new();
        for (i, cell) in self.cells.iter().enumerate() {
            let members: Vec<String> = cell.iter().map(|&v| format!("{{{}}}", self.vertices[v])).collect();
            let _ = writeln!(s, "cell {i}: size {} orbit {} : {}", cell.len(), desc[cell[0]], members.join(" "));
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two() {
        let g = cells(2, 1).unwrap();
        let mut sizes = g.cell_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);
        let lone = g.cells.iter().find(|c| c.len() == 1).unwrap();
        assert_eq!(g.vertices[lone[0]].to_string(), "(1,2)-");
        g.verify().unwrap();
        assert_eq!(cells(1, 1).unwrap().cell_sizes(), vec![1]);
        let g = cells(2, 2).unwrap();
        assert_eq!(g.cell_sizes(), vec![1]);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn dot_output() {
        let dot = cells(2, 1).unwrap().to_dot();
        assert!(dot.starts_with("graph cells {"));
        assert!(dot.contains("\"(1,2)+\""));
        assert!(dot.contains("(2e1,e2-e1)"));
    }

    #[test]
    fn cells_are_descriptor_fibers() {
        for n in 1..=4 {
            for p in 0..=n {
                cells(n, p).unwrap().verify().unwrap();
            }
        }
    }
}
