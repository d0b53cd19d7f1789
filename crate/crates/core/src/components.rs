//! Strong components in acyclic order.

use crate::graph::Digraph;

/// Strong components `C_1, ..., C_l` with no arc from a later component to an
/// earlier one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongDecomposition {
    pub components: Vec<Vec<usize>>,
    /// Index of the component holding each vertex.
    pub component_of: Vec<usize>,
}

impl StrongDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn first(&self) -> &[usize] {
        &self.components[0]
    }

    pub fn last(&self) -> &[usize] {
        &self.components[self.components.len() - 1]
    }

    /// Re-checks the partition, per-component strength and acyclic ordering.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        let n = d.n();
        if self.component_of.len() != n {
            return false;
        }
        let mut count = 0;
        for (i, comp) in self.components.iter().enumerate() {
            if comp.is_empty() || comp.iter().any(|&v| v >= n || self.component_of[v] != i) {
                return false;
            }
            count += comp.len();
            if !d.induced(comp).is_strong() {
                return false;
            }
        }
        count == n
            && d.arcs()
                .all(|(u, v)| self.component_of[u] <= self.component_of[v])
    }
}

/// Tarjan's algorithm, iterative. Components come out sink-first, so the list
/// is reversed at the end; vertices inside a component are sorted.
pub fn strong_decomposition(d: &Digraph) -> StrongDecomposition {
    let n = d.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let outs = d.out_neighbors(v);
            if *pos < outs.len() {
                let w = outs[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
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
                components.push(comp);
            }
        }
    }

    components.reverse();
    let mut component_of = vec![0; n];
    for (i, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = i;
        }
    }
    StrongDecomposition {
        components,
        component_of,
    }
}
