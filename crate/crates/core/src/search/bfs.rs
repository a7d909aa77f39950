use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::{SearchLimits, SearchProblem};
use crate::error::{Error, Result};

/// Shortest path found by [`bfs_shortest`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchPath<M, S> {
    pub distance: usize,
    pub moves: Vec<M>,
    /// Visited states from the initial state to the goal, inclusive.
    pub states: Vec<S>,
}

struct Node<M, S> {
    state: S,
    parent: usize,
    mv: Option<M>,
    depth: usize,
}

/// Breadth-first search to the first goal state dequeued.
pub fn bfs_shortest<P, G>(
    problem: &P,
    mut is_goal: G,
    limits: SearchLimits,
) -> Result<SearchPath<P::Move, P::State>>
where
    P: SearchProblem,
    G: FnMut(&P::State) -> bool,
{
    let start = problem.initial();
    let mut seen = BTreeSet::new();
    seen.insert(problem.canonical_key(&start));
    let mut nodes = Vec::new();
    nodes.push(Node {
        state: start,
        parent: usize::MAX,
        mv: None,
        depth: 0,
    });
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    let mut buf = Vec::new();

    while let Some(id) = queue.pop_front() {
        if is_goal(&nodes[id].state) {
            return Ok(unwind(nodes, id));
        }
        let depth = nodes[id].depth;
        buf.clear();
        problem.expand(&nodes[id].state, &mut buf);
        if !buf.is_empty() && depth + 1 > limits.max_depth {
            return Err(Error::DepthLimit(limits.max_depth));
        }
        for (mv, next) in buf.drain(..) {
            let key = problem.canonical_key(&next);
            if seen.contains(&key) {
                continue;
            }
            if seen.len() >= limits.max_states {
                return Err(Error::StateLimit(limits.max_states));
            }
            seen.insert(key);
            nodes.push(Node {
                state: next,
                parent: id,
                mv: Some(mv),
                depth: depth + 1,
            });
            queue.push_back(nodes.len() - 1);
        }
    }
    Err(Error::Unreachable)
}

fn unwind<M, S>(nodes: Vec<Node<M, S>>, goal: usize) -> SearchPath<M, S> {
    let mut chain = Vec::new();
    let mut at = goal;
    while at != usize::MAX {
        chain.push(at);
        at = nodes[at].parent;
    }
    chain.reverse();
    let mut slots: Vec<Option<Node<M, S>>> = nodes.into_iter().map(Some).collect();
    let mut moves = Vec::with_capacity(chain.len() - 1);
    let mut states = Vec::with_capacity(chain.len());
    for i in chain {
        let node = slots[i].take().expect("node visited once");
        if let Some(m) = node.mv {
            moves.push(m);
        }
        states.push(node.state);
    }
    SearchPath {
        distance: moves.len(),
        moves,
        states,
    }
}

/// BFS distances from the initial state to every reachable state, keyed canonically.
pub fn bfs_distances<P: SearchProblem>(
    problem: &P,
    limits: SearchLimits,
) -> Result<BTreeMap<Vec<u8>, usize>> {
    let start = problem.initial();
    let mut dist = BTreeMap::new();
    dist.insert(problem.canonical_key(&start), 0usize);
    let mut queue = VecDeque::new();
    queue.push_back((start, 0usize));
    let mut buf = Vec::new();
    while let Some((state, d)) = queue.pop_front() {
        buf.clear();
        problem.expand(&state, &mut buf);
        if !buf.is_empty() && d + 1 > limits.max_depth {
            return Err(Error::DepthLimit(limits.max_depth));
        }
        for (_, next) in buf.drain(..) {
            let key = problem.canonical_key(&next);
            if dist.contains_key(&key) {
                continue;
            }
            if dist.len() >= limits.max_states {
                return Err(Error::StateLimit(limits.max_states));
            }
            dist.insert(key, d + 1);
            queue.push_back((next, d + 1));
        }
    }
    Ok(dist)
}

/// States reachable after exactly `k` moves, one representative per key.
pub type Layer<S> = BTreeMap<Vec<u8>, S>;

/// Layers `S_0..=S_n`, where `S_{k+1}` is every successor of `S_k`.
///
/// Layers are not deduplicated against each other: a state may appear in
/// several layers of the same parity.
pub fn bfs_layer_sets<P: SearchProblem>(
    problem: &P,
    n: usize,
    limits: SearchLimits,
) -> Result<Vec<Layer<P::State>>> {
    if n > limits.max_depth {
        return Err(Error::DepthLimit(limits.max_depth));
    }
    let start = problem.initial();
    let mut first = Layer::new();
    first.insert(problem.canonical_key(&start), start);
    let mut layers = Vec::with_capacity(n + 1);
    layers.push(first);
    let mut total = 1usize;
    let mut buf = Vec::new();
    for _ in 0..n {
        let mut next = Layer::new();
        for state in layers.last().expect("nonempty").values() {
            buf.clear();
            problem.expand(state, &mut buf);
            for (_, s) in buf.drain(..) {
                let key = problem.canonical_key(&s);
                if let alloc::collections::btree_map::Entry::Vacant(slot) = next.entry(key) {
                    total += 1;
                    if total > limits.max_states {
                        return Err(Error::StateLimit(limits.max_states));
                    }
                    slot.insert(s);
                }
            }
        }
        layers.push(next);
    }
    Ok(layers)
}
