//! Diagrams of complexes and chain maps, and their homology quivers.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::{Arrow, TypeAQuiverRep};
use crate::complex::{CellComplex, CellularMap, FilteredComplex, SimplicialComplex};
use crate::error::{parse_err, Error, Result};
use crate::field::Field;
use crate::homology::{homology_basis, induced_map, HomologyBasis};
use crate::sparse::{strip, SparseMatrix};

#[derive(Clone, Debug)]
pub enum NodePayload {
    Complex(Arc<CellComplex>),
    /// A vector space, with the homology basis it came from if any.
    Space { dim: usize, basis: Option<Arc<HomologyBasis>> },
}

impl NodePayload {
    fn dim(&self) -> Option<usize> {
        match self {
            NodePayload::Space { dim, .. } => Some(*dim),
            NodePayload::Complex(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum EdgePayload {
    Map(CellularMap),
    Matrix(SparseMatrix),
}

/// A directed multigraph with complexes or spaces on the nodes and maps on
/// the edges.
#[derive(Clone, Debug)]
pub struct Diagram {
    field: Field,
    nodes: BTreeMap<usize, NodePayload>,
    edges: Vec<(usize, usize, EdgePayload)>,
}

impl Diagram {
    pub fn new(field: Field) -> Diagram {
        Diagram {
            field,
            nodes: BTreeMap::new(),
            edges: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nodes(&self) -> &BTreeMap<usize, NodePayload> {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, EdgePayload)] {
        &self.edges
    }

    pub fn add_node(&mut self, id: usize, payload: NodePayload) -> Result<()> {
        if let NodePayload::Complex(c) = &payload {
            if c.field() != self.field {
                return Err(Error::FieldMismatch(self.field, c.field()));
            }
        }
        if self.nodes.insert(id, payload).is_some() {
            return Err(Error::Validation(format!("node {id} listed twice")));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, src: usize, dst: usize, payload: EdgePayload) -> Result<()> {
        let (Some(s), Some(t)) = (self.nodes.get(&src), self.nodes.get(&dst)) else {
            return Err(Error::Validation(format!("edge {src} -> {dst} has an unknown endpoint")));
        };
        let ok = match (&payload, s, t) {
            (EdgePayload::Map(f), NodePayload::Complex(a), NodePayload::Complex(b)) => {
                **f.source() == **a && **f.target() == **b
            }
            (EdgePayload::Matrix(m), NodePayload::Space { dim: a, .. }, NodePayload::Space { dim: b, .. }) => {
                m.shape() == (*b, *a) && m.field() == self.field
            }
            _ => false,
        };
        if !ok {
            return Err(Error::DimensionMismatch(format!("edge {src} -> {dst} does not fit its endpoints")));
        }
        self.edges.push((src, dst, payload));
        Ok(())
    }

    /// Nodes from simplicial complexes and edges from vertex maps.
    pub fn from_simplicial(
        field: Field,
        nodes: &[(usize, SimplicialComplex)],
        edges: &[(usize, usize, BTreeMap<usize, usize>)],
    ) -> Result<Diagram> {
        let mut d = Diagram::new(field);
        let by_id: BTreeMap<usize, &SimplicialComplex> = nodes.iter().map(|(i, c)| (*i, c)).collect();
        for (id, c) in nodes {
            d.add_node(*id, NodePayload::Complex(c.complex_arc()))?;
        }
        for (s, t, vmap) in edges {
            let (Some(a), Some(b)) = (by_id.get(s), by_id.get(t)) else {
                return Err(Error::Validation(format!("edge {s} -> {t} has an unknown endpoint")));
            };
            let f = CellularMap::from_vertex_map(a, b, vmap)?;
            d.add_edge(*s, *t, EdgePayload::Map(f))?;
        }
        Ok(d)
    }

    /// Nodes `1..=N` holding the prefixes of a filtration after each cell,
    /// joined by inclusions.
    pub fn prefix_inclusions(fc: &FilteredComplex) -> Result<Diagram> {
        let field = fc.field();
        let mut d = Diagram::new(field);
        let prefixes: Vec<Arc<CellComplex>> = (1..=fc.len()).map(|t| Arc::new(fc.prefix(t))).collect();
        for (t, c) in prefixes.iter().enumerate() {
            d.add_node(t + 1, NodePayload::Complex(Arc::clone(c)))?;
        }
        for t in 1..prefixes.len() {
            let (a, b) = (&prefixes[t - 1], &prefixes[t]);
            let chain = (0..a.num_dims())
                .map(|k| inclusion(field, b.num_cells(k), a.num_cells(k)))
                .collect();
            let f = CellularMap::from_chain_matrices(Arc::clone(a), Arc::clone(b), chain)?;
            d.add_edge(t, t + 1, EdgePayload::Map(f))?;
        }
        Ok(d)
    }

    /// Read a diagram on nodes `lo, lo+1, ..., hi` with one space per node
    /// and one matrix between each consecutive pair as a type-A quiver.
    pub fn to_type_a(&self) -> Result<TypeAQuiverRep> {
        let ids: Vec<usize> = self.nodes.keys().copied().collect();
        let Some(&lo) = ids.first() else {
            return Err(Error::Validation("diagram has no nodes".into()));
        };
        if ids.iter().enumerate().any(|(i, &id)| id != lo + i) {
            return Err(Error::Validation("node ids must be consecutive".into()));
        }
        let dims = self
            .nodes
            .values()
            .map(|p| p.dim().ok_or_else(|| Error::Validation("node holds a complex, not a space".into())))
            .collect::<Result<Vec<_>>>()?;
        let n = ids.len();
        let mut arrows = vec![None; n.saturating_sub(1)];
        let mut mats = vec![None; n.saturating_sub(1)];
        for (s, t, p) in &self.edges {
            let EdgePayload::Matrix(m) = p else {
                return Err(Error::Validation("edge holds a chain map, not a matrix".into()));
            };
            let (e, a) = if *t == s + 1 {
                (s - lo, Arrow::Forward)
            } else if *s == t + 1 {
                (t - lo, Arrow::Backward)
            } else {
                return Err(Error::Validation(format!("edge {s} -> {t} does not join consecutive nodes")));
            };
            if arrows[e].replace(a).is_some() {
                return Err(Error::Validation(format!("more than one edge between nodes {} and {}", e + lo, e + lo + 1)));
            }
            mats[e] = Some(m.clone());
        }
        let arrows = arrows
            .into_iter()
            .enumerate()
            .map(|(e, a)| a.ok_or_else(|| Error::Validation(format!("no edge between nodes {} and {}", e + lo, e + lo + 1))))
            .collect::<Result<Vec<_>>>()?;
        TypeAQuiverRep::new(self.field, dims, arrows, mats.into_iter().map(|m| m.unwrap()).collect())
    }
}

fn inclusion(field: Field, rows: usize, cols: usize) -> SparseMatrix {
    SparseMatrix::from_triplets(field, rows, cols, (0..cols).map(|i| (i, i, field.one()))).expect("prefix fits")
}

/// Replace each complex by its `k`-th homology and each chain map by the
/// induced map. Nodes are handled in parallel, then edges.
pub fn diagram_to_quiver(d: &Diagram, k: usize) -> Result<Diagram> {
    let nodes: Vec<(usize, &NodePayload)> = d.nodes.iter().map(|(i, p)| (*i, p)).collect();
    let bases: Vec<(usize, Arc<HomologyBasis>)> = nodes
        .par_iter()
        .map(|(id, p)| match p {
            NodePayload::Complex(c) => Ok((*id, Arc::new(homology_basis(c, k)))),
            NodePayload::Space { .. } => Err(Error::Validation(format!("node {id} already holds a space"))),
        })
        .collect::<Result<_>>()?;
    let by_id: BTreeMap<usize, Arc<HomologyBasis>> = bases.into_iter().collect();
    let mats: Vec<SparseMatrix> = d
        .edges
        .par_iter()
        .map(|(s, t, p)| match p {
            EdgePayload::Map(f) => induced_map(f, k, &by_id[s], &by_id[t]),
            EdgePayload::Matrix(_) => Err(Error::Validation(format!("edge {s} -> {t} already holds a matrix"))),
        })
        .collect::<Result<_>>()?;
    let mut out = Diagram::new(d.field);
    for (id, b) in by_id {
        out.add_node(
            id,
            NodePayload::Space {
                dim: b.betti(k),
                basis: Some(b),
            },
        )?;
    }
    for ((s, t, _), m) in d.edges.iter().zip(mats) {
        out.add_edge(*s, *t, EdgePayload::Matrix(m))?;
    }
    Ok(out)
}

/// File references of a diagram file: `node <id> <complex-file>` and
/// `edge <src> <dst> <vertexmap-file>` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramSpec {
    pub nodes: Vec<(usize, String)>,
    pub edges: Vec<(usize, usize, String)>,
}

pub fn parse_diagram(text: &str) -> Result<DiagramSpec> {
    let mut spec = DiagramSpec::default();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let Some(s) = strip(line) else { continue };
        let toks: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad node id {t:?}")));
        match toks[..] {
            ["node", id, path] => spec.nodes.push((num(id)?, path.to_string())),
            ["edge", a, b, path] => spec.edges.push((num(a)?, num(b)?, path.to_string())),
            _ => return Err(parse_err(lineno, format!("unexpected line {s:?}"))),
        }
    }
    Ok(spec)
}
