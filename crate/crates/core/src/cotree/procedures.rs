//! Value procedures on cotrees and the uniform assignment property.
//!
//! Depth is measured from the root of the tree being evaluated. Procedure 1
//! sums at even depth and takes maxima at odd depth; Procedure 2 does the
//! opposite. Leaves are 1. On a join root Procedure 1 yields the clique
//! number; on a union root Procedure 2 does.

use super::{Cotree, Node};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Procedure {
    One,
    Two,
}

impl Procedure {
    fn sums_at(self, depth: usize) -> bool {
        match self {
            Procedure::One => depth % 2 == 0,
            Procedure::Two => depth % 2 == 1,
        }
    }
}

/// Node values in preorder (the order of [`Cotree`]'s text form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueAssignment {
    pub values: Vec<usize>,
}

impl ValueAssignment {
    pub fn root(&self) -> usize {
        self.values[0]
    }

    /// The tree's text form with `=value` after each internal label.
    pub fn annotate(&self, t: &Cotree) -> String {
        fn go(node: &Node, values: &[usize], at: &mut usize, out: &mut String) {
            let value = values[*at];
            *at += 1;
            match node {
                Node::Leaf(v) => out.push_str(&v.to_string()),
                Node::Internal { label, children } => {
                    out.push('(');
                    out.push(label.symbol());
                    out.push('=');
                    out.push_str(&value.to_string());
                    for c in children {
                        out.push(' ');
                        go(c, values, at, out);
                    }
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        go(t.root(), &self.values, &mut 0, &mut out);
        out
    }
}

pub fn procedure_values(t: &Cotree, which: Procedure) -> ValueAssignment {
    fn go(node: &Node, depth: usize, which: Procedure, out: &mut Vec<usize>) -> usize {
        let slot = out.len();
        out.push(1);
        let children = node.children();
        if children.is_empty() {
            return 1;
        }
        let vals = children.iter().map(|c| go(c, depth + 1, which, out));
        let value = if which.sums_at(depth) {
            vals.sum()
        } else {
            vals.max().expect("internal node has children")
        };
        out[slot] = value;
        value
    }
    let mut values = Vec::new();
    go(t.root(), 0, which, &mut values);
    ValueAssignment { values }
}

/// Under Procedure 1 the children of each odd-depth node share a value,
/// and under Procedure 2 the children of each even-depth node do.
pub fn uniform_assignment_property(t: &Cotree) -> bool {
    // Returns (Procedure 1 value, Procedure 2 value) or None on failure.
    fn go(node: &Node, depth: usize) -> Option<(usize, usize)> {
        let children = node.children();
        if children.is_empty() {
            return Some((1, 1));
        }
        let vals = children
            .iter()
            .map(|c| go(c, depth + 1))
            .collect::<Option<Vec<_>>>()?;
        let uniform = |pick: fn(&(usize, usize)) -> usize| vals.windows(2).all(|w| pick(&w[0]) == pick(&w[1]));
        let ok = if depth % 2 == 1 {
            uniform(|v| v.0)
        } else {
            uniform(|v| v.1)
        };
        if !ok {
            return None;
        }
        let sum = |pick: fn(&(usize, usize)) -> usize| vals.iter().map(pick).sum::<usize>();
        let max = |pick: fn(&(usize, usize)) -> usize| vals.iter().map(pick).max().unwrap_or(1);
        Some(if depth % 2 == 0 {
            (sum(|v| v.0), max(|v| v.1))
        } else {
            (max(|v| v.0), sum(|v| v.1))
        })
    }
    go(t.root(), 0).is_some()
}

/// No internal node has both leaf and internal children.
pub fn homogeneous_children(t: &Cotree) -> bool {
    fn go(node: &Node) -> bool {
        let children = node.children();
        let leaves = children.iter().filter(|c| c.is_leaf()).count();
        (leaves == 0 || leaves == children.len()) && children.iter().all(go)
    }
    go(t.root())
}

/// Well-equi-huedness of the expanded cograph, read off the cotree.
pub fn is_well_equi_hued_cograph(t: &Cotree) -> bool {
    uniform_assignment_property(t)
}
