//! Cograph recognition and cotrees.
//!
//! A cotree's internal nodes are labeled union or join, alternate along
//! every root-to-leaf path and have at least two children. Leaves carry the
//! vertex ids `0..n`.

mod procedures;
mod sexpr;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

pub use procedures::{
    homogeneous_children, is_well_equi_hued_cograph, procedure_values, uniform_assignment_property,
    Procedure, ValueAssignment,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CotreeError {
    #[error("graph is not a cograph")]
    NotCograph,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: &'static str },
    #[error("invalid cotree: {0}")]
    Invalid(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Union,
    Join,
}

impl Label {
    pub fn flip(self) -> Label {
        match self {
            Label::Union => Label::Join,
            Label::Join => Label::Union,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Label::Union => 'U',
            Label::Join => 'J',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf(usize),
    Internal { label: Label, children: Vec<Node> },
}

impl Node {
    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf(_))
    }

    pub fn children(&self) -> &[Node] {
        match self {
            Node::Leaf(_) => &[],
            Node::Internal { children, .. } => children,
        }
    }

    pub fn label(&self) -> Option<Label> {
        match self {
            Node::Leaf(_) => None,
            Node::Internal { label, .. } => Some(*label),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(v) => out.push(*v),
            Node::Internal { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn leaf_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 1,
            Node::Internal { children, .. } => children.iter().map(Node::leaf_count).sum(),
        }
    }

    fn min_leaf(&self) -> usize {
        match self {
            Node::Leaf(v) => *v,
            Node::Internal { children, .. } => {
                children.iter().map(Node::min_leaf).min().expect("internal node has children")
            }
        }
    }

    /// Lifts the children of same-label internal children into this node.
    pub fn flatten(self) -> Node {
        match self {
            Node::Leaf(_) => self,
            Node::Internal { label, children } => {
                let mut flat = Vec::with_capacity(children.len());
                for child in children.into_iter().map(Node::flatten) {
                    match child {
                        Node::Internal {
                            label: l,
                            children: grand,
                        } if l == label => flat.extend(grand),
                        other => flat.push(other),
                    }
                }
                Node::Internal {
                    label,
                    children: flat,
                }
            }
        }
    }

    fn swap_labels(&mut self) {
        if let Node::Internal { label, children } = self {
            *label = label.flip();
            children.iter_mut().for_each(Node::swap_labels);
        }
    }

    /// Sorts children by (leaf count, unlabeled shape, least leaf) and
    /// returns the shape string.
    fn canonicalize(&mut self) -> String {
        match self {
            Node::Leaf(_) => ".".to_string(),
            Node::Internal { label, children } => {
                let mut keyed: Vec<(usize, String, usize, Node)> = children
                    .drain(..)
                    .map(|mut c| {
                        let shape = c.canonicalize();
                        (c.leaf_count(), shape, c.min_leaf(), c)
                    })
                    .collect();
                keyed.sort_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
                let mut shape = format!("({}", label.symbol());
                for (_, s, _, c) in keyed {
                    shape.push_str(&s);
                    children.push(c);
                }
                shape.push(')');
                shape
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cotree {
    root: Node,
    order: usize,
}

impl Cotree {
    /// Validates alternation, arity and leaf ids; child order is kept.
    pub fn new(root: Node) -> Result<Cotree, CotreeError> {
        fn check(node: &Node, parent: Option<Label>) -> Result<(), CotreeError> {
            if let Node::Internal { label, children } = node {
                if children.len() < 2 {
                    return Err(CotreeError::Invalid("internal node with fewer than two children"));
                }
                if parent == Some(*label) {
                    return Err(CotreeError::Invalid("adjacent internal nodes share a label"));
                }
                for c in children {
                    check(c, Some(*label))?;
                }
            }
            Ok(())
        }
        check(&root, None)?;
        let mut leaves = root.leaves();
        let order = leaves.len();
        if order > MAX_ORDER {
            return Err(CotreeError::Invalid("more than 64 leaves"));
        }
        leaves.sort_unstable();
        if leaves.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(CotreeError::Invalid("leaf ids must be 0..n, each once"));
        }
        Ok(Cotree { root, order })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The same tree with children in canonical order.
    pub fn canonical(mut self) -> Cotree {
        self.root.canonicalize();
        self
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&sexpr::emit(&self.root))
    }
}

impl std::str::FromStr for Cotree {
    type Err = CotreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Cotree::new(sexpr::parse(s)?)
    }
}

fn decompose(g: &Graph, comp: &Graph, set: VertexSet) -> Option<Node> {
    if set.len() == 1 {
        return Some(Node::Leaf(set.first().expect("one vertex")));
    }
    let (label, parts) = match g.components_within(set) {
        parts if parts.len() > 1 => (Label::Union, parts),
        _ => match comp.components_within(set) {
            parts if parts.len() > 1 => (Label::Join, parts),
            _ => return None,
        },
    };
    let children = parts
        .into_iter()
        .map(|p| decompose(g, comp, p))
        .collect::<Option<Vec<_>>>()?;
    Some(Node::Internal { label, children })
}

/// Recursive decomposition: either `g` or its complement is disconnected
/// at every level with more than one vertex.
pub fn is_cograph(g: &Graph) -> bool {
    g.order() == 0 || decompose(g, &g.complement(), g.vertices()).is_some()
}

/// Direct scan of all 4-sets for an induced path.
pub fn contains_induced_p4(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s: VertexSet = [a, b, c, d].into_iter().collect();
                    let h = g.induced(s);
                    // P4 is the only connected 4-vertex graph with 3 edges
                    // and maximum degree 2.
                    if h.size() == 3 && h.is_connected() && (0..4).all(|v| h.degree(v) <= 2) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// The canonical cotree of a cograph.
pub fn build_cotree(g: &Graph) -> Result<Cotree, CotreeError> {
    if g.order() == 0 {
        return Err(CotreeError::EmptyGraph);
    }
    let root = decompose(g, &g.complement(), g.vertices()).ok_or(CotreeError::NotCograph)?;
    Ok(Cotree::new(root.flatten())
        .expect("decomposition yields a valid cotree")
        .canonical())
}

pub fn cotree_to_graph(t: &Cotree) -> Graph {
    fn expand(node: &Node, rows: &mut [u64]) -> u64 {
        match node {
            Node::Leaf(v) => 1 << v,
            Node::Internal { label, children } => {
                let masks: Vec<u64> = children.iter().map(|c| expand(c, rows)).collect();
                let all = masks.iter().fold(0, |a, m| a | m);
                if *label == Label::Join {
                    for &m in &masks {
                        for v in VertexSet::from_bits(m).iter() {
                            rows[v] |= all & !m;
                        }
                    }
                }
                all
            }
        }
    }
    let mut rows = vec![0u64; t.order()];
    expand(t.root(), &mut rows);
    Graph::from_rows_symmetrized(t.order(), &rows)
}

/// Swaps every internal label; the result expands to the complement.
pub fn cotree_complement(t: &Cotree) -> Cotree {
    let mut out = t.clone();
    out.root.swap_labels();
    out
}
