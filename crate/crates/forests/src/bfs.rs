use std::collections::VecDeque;

use pfcore::{from_compatible_pair, invert, reading_word, specification, ParkingFunction};

use crate::forest::{RootedForest, Vertex};

/// The two breadth-first vertex orders a forest supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfsOrder {
    /// All roots first, then each level of the whole forest left to right,
    /// children of one vertex ascending.
    LevelOrder,
    /// One tree at a time: a root, then that tree breadth-first; when its
    /// queue drains, the next root.
    TreeByTree,
}

/// The vertices of the forest in the chosen breadth-first order, all
/// `m + s` of them.
pub fn bfs_vertices(forest: &RootedForest, order: BfsOrder) -> Vec<Vertex> {
    let (of_root, of_car) = forest.children();
    let total = forest.cars() + forest.roots();
    let mut out = Vec::with_capacity(total);
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    match order {
        BfsOrder::LevelOrder => {
            queue.extend((1..=forest.roots()).map(Vertex::Root));
            while let Some(v) = queue.pop_front() {
                out.push(v);
                for &c in children_of(v, &of_root, &of_car) {
                    queue.push_back(Vertex::Car(c));
                }
            }
        }
        BfsOrder::TreeByTree => {
            let mut next_root = 1;
            while out.len() < total {
                let v = queue.pop_front().unwrap_or_else(|| {
                    let r = Vertex::Root(next_root);
                    next_root += 1;
                    r
                });
                out.push(v);
                for &c in children_of(v, &of_root, &of_car) {
                    queue.push_back(Vertex::Car(c));
                }
            }
        }
    }
    out
}

fn children_of<'a>(
    v: Vertex,
    of_root: &'a [Vec<usize>],
    of_car: &'a [Vec<usize>],
) -> &'a [usize] {
    match v {
        Vertex::Root(g) => &of_root[g - 1],
        Vertex::Car(c) => &of_car[c - 1],
    }
}

/// Encodes a forest with `m` cars and `s` roots as a parking function on
/// `n = m + s - 1` spots.
///
/// The breadth-first order determines everything: spot `k` receives as many
/// cars as the k-th vertex has children, and those cars are the children
/// themselves, ranked by when they appear in the order. The two orders give
/// two different bijections onto the same set of parking functions.
pub fn forest_to_pf(forest: &RootedForest, order: BfsOrder) -> ParkingFunction {
    let vertices = bfs_vertices(forest, order);
    let (of_root, of_car) = forest.children();
    let n = forest.cars() + forest.roots() - 1;

    let counts: Vec<usize> = vertices[..n]
        .iter()
        .map(|&v| children_of(v, &of_root, &of_car).len())
        .collect();
    let word: Vec<usize> = vertices
        .iter()
        .filter_map(|&v| match v {
            Vertex::Car(c) => Some(c),
            Vertex::Root(_) => None,
        })
        .collect();

    from_compatible_pair(&counts, &invert(&word))
        .expect("a breadth-first reading of a forest is always compatible")
}

/// Decodes [`forest_to_pf`]: rebuilds the forest whose breadth-first order
/// realizes the parking function's counts and ranks.
pub fn pf_to_forest(pf: &ParkingFunction, order: BfsOrder) -> RootedForest {
    let counts = specification(pf);
    let word = reading_word(pf);
    let n = pf.spots();
    let roots = n + 1 - pf.cars();
    let mut parent: Vec<Vertex> = vec![Vertex::Root(1); pf.cars()];
    let mut cursor = 0usize;

    match order {
        BfsOrder::LevelOrder => {
            let mut vertices: Vec<Vertex> = (1..=roots).map(Vertex::Root).collect();
            for k in 0..n {
                let v = vertices[k];
                for _ in 0..counts[k] {
                    let c = word[cursor];
                    cursor += 1;
                    parent[c - 1] = v;
                    vertices.push(Vertex::Car(c));
                }
            }
        }
        BfsOrder::TreeByTree => {
            let mut queue: VecDeque<Vertex> = VecDeque::new();
            let mut next_root = 1;
            for &count in counts.iter() {
                let v = queue.pop_front().unwrap_or_else(|| {
                    let r = Vertex::Root(next_root);
                    next_root += 1;
                    r
                });
                for _ in 0..count {
                    let c = word[cursor];
                    cursor += 1;
                    parent[c - 1] = v;
                    queue.push_back(Vertex::Car(c));
                }
            }
        }
    }
    debug_assert_eq!(cursor, pf.cars());
    RootedForest::new(roots, parent).expect("breadth-first decoding yields a forest")
}
