use crate::graph::{Graph, VertexSet};

/// A partition of the vertex set into cliques of order at least 2, if one
/// exists. The lowest uncovered vertex is always placed first, so each
/// partition is tried once.
pub fn clique_partition_min2(g: &Graph) -> Option<Vec<VertexSet>> {
    fn go(g: &Graph, uncovered: VertexSet, acc: &mut Vec<VertexSet>) -> bool {
        let Some(v) = uncovered.first() else {
            return true;
        };
        let pool = g.neighbors(v).intersection(uncovered).bits();
        let mut sub = pool;
        while sub != 0 {
            let part = VertexSet::from_bits(sub).with(v);
            if g.is_clique(part) {
                acc.push(part);
                if go(g, uncovered.difference(part), acc) {
                    return true;
                }
                acc.pop();
            }
            sub = (sub - 1) & pool;
        }
        false
    }
    if g.order() == 0 {
        return Some(Vec::new());
    }
    let mut acc = Vec::new();
    go(g, g.vertices(), &mut acc).then_some(acc)
}
