use std::fmt;

/// A vertex of a rooted forest: one of `s` unlabeled roots (numbered for
/// reference) or one of `m` labeled non-root vertices, called cars here
/// because the bijections in this crate match them with parking cars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Root(usize),
    Car(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Root(g) => write!(f, "0{g}"),
            Vertex::Car(c) => write!(f, "{c}"),
        }
    }
}

/// Why a parent assignment fails to be a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestError {
    NoRoots,
    RootOutOfRange { car: usize, root: usize, roots: usize },
    CarOutOfRange { car: usize, parent: usize, cars: usize },
    Cycle { car: usize },
}

impl fmt::Display for ForestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestError::NoRoots => write!(f, "a forest needs at least one root"),
            ForestError::RootOutOfRange { car, root, roots } => {
                write!(f, "car {car} hangs from root {root}, but there are only {roots}")
            }
            ForestError::CarOutOfRange { car, parent, cars } => {
                write!(f, "car {car} hangs from car {parent}, but there are only {cars}")
            }
            ForestError::Cycle { car } => {
                write!(f, "car {car} is its own ancestor")
            }
        }
    }
}

impl std::error::Error for ForestError {}

/// A forest of `roots` rooted trees whose non-root vertices are labeled
/// `1..=m`. Stored as the parent of every car; roots have no parent.
///
/// ```
/// use forests::{RootedForest, Vertex};
///
/// // Two trees: car 2 under the first root with child 1; car 3 alone.
/// let f = RootedForest::new(
///     2,
///     vec![Vertex::Car(2), Vertex::Root(1), Vertex::Root(2)],
/// )
/// .unwrap();
/// assert_eq!(f.inversions(), 1); // car 2 sits above the smaller car 1
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedForest {
    roots: usize,
    parent: Vec<Vertex>,
}

impl RootedForest {
    /// Validates a parent assignment: parents in range, no car an ancestor
    /// of itself.
    pub fn new(roots: usize, parent: Vec<Vertex>) -> Result<Self, ForestError> {
        if roots == 0 {
            return Err(ForestError::NoRoots);
        }
        let cars = parent.len();
        for (i, &p) in parent.iter().enumerate() {
            match p {
                Vertex::Root(g) if g < 1 || g > roots => {
                    return Err(ForestError::RootOutOfRange { car: i + 1, root: g, roots })
                }
                Vertex::Car(c) if c < 1 || c > cars => {
                    return Err(ForestError::CarOutOfRange { car: i + 1, parent: c, cars })
                }
                _ => {}
            }
        }
        // Walk each car's ancestor chain once, marking finished chains.
        let mut state = vec![0u8; cars + 1]; // 0 unseen, 1 on current chain, 2 done
        for start in 1..=cars {
            let mut chain = Vec::new();
            let mut v = start;
            loop {
                if state[v] == 2 {
                    break;
                }
                if state[v] == 1 {
                    return Err(ForestError::Cycle { car: v });
                }
                state[v] = 1;
                chain.push(v);
                match parent[v - 1] {
                    Vertex::Root(_) => break,
                    Vertex::Car(c) => v = c,
                }
            }
            for v in chain {
                state[v] = 2;
            }
        }
        Ok(RootedForest { roots, parent })
    }

    pub fn roots(&self) -> usize {
        self.roots
    }

    pub fn cars(&self) -> usize {
        self.parent.len()
    }

    pub fn parent_of(&self, car: usize) -> Vertex {
        self.parent[car - 1]
    }

    pub fn parents(&self) -> &[Vertex] {
        &self.parent
    }

    /// Children of every vertex, ascending: `.0[g-1]` under root `g`,
    /// `.1[c-1]` under car `c`.
    pub fn children(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut of_root = vec![Vec::new(); self.roots];
        let mut of_car = vec![Vec::new(); self.cars()];
        for (i, &p) in self.parent.iter().enumerate() {
            match p {
                Vertex::Root(g) => of_root[g - 1].push(i + 1),
                Vertex::Car(c) => of_car[c - 1].push(i + 1),
            }
        }
        // Push order is ascending already, but make the contract explicit.
        for l in of_root.iter_mut().chain(of_car.iter_mut()) {
            l.sort_unstable();
        }
        (of_root, of_car)
    }

    /// The root index whose tree contains each car: `root_of()[c-1]`.
    pub fn root_of(&self) -> Vec<usize> {
        let cars = self.cars();
        let mut root = vec![0usize; cars];
        for start in 1..=cars {
            let mut path = Vec::new();
            let mut v = start;
            let g = loop {
                if root[v - 1] != 0 {
                    break root[v - 1];
                }
                path.push(v);
                match self.parent[v - 1] {
                    Vertex::Root(g) => break g,
                    Vertex::Car(c) => v = c,
                }
            };
            for v in path {
                root[v - 1] = g;
            }
        }
        root
    }

    /// Number of pairs where a car hangs, possibly indirectly, below a car
    /// with a larger label.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for start in 1..=self.cars() {
            let mut v = start;
            while let Vertex::Car(c) = self.parent[v - 1] {
                if c > start {
                    count += 1;
                }
                v = c;
            }
        }
        count
    }

    /// Number of cars whose label is smallest in their own subtree.
    pub fn subtree_minima(&self) -> usize {
        let (_, of_car) = self.children();
        // Compute each car's subtree minimum bottom-up by label descent:
        // process cars in decreasing label order? Children can have larger
        // labels, so do an explicit post-order instead.
        let cars = self.cars();
        let mut min_below = vec![usize::MAX; cars + 1];
        let mut order = Vec::with_capacity(cars);
        let mut stack: Vec<usize> = (1..=cars)
            .filter(|&c| matches!(self.parent[c - 1], Vertex::Root(_)))
            .collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(of_car[v - 1].iter().copied());
        }
        for &v in order.iter().rev() {
            let mut min = v;
            for &c in &of_car[v - 1] {
                min = min.min(min_below[c]);
            }
            min_below[v] = min;
        }
        (1..=cars).filter(|&v| min_below[v] == v).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::running_example;

    #[test]
    fn children_are_sorted_per_vertex() {
        let f = running_example();
        let (of_root, of_car) = f.children();
        assert_eq!(of_root, vec![vec![2, 4], vec![], vec![6], vec![3]]);
        assert_eq!(of_car[3], vec![1, 7]); // children of car 4
        assert_eq!(of_car[2], vec![5, 9]); // children of car 3
        assert_eq!(f.root_of(), vec![1, 1, 4, 1, 4, 3, 1, 4, 4]);
    }

    #[test]
    fn inversions_count_large_over_small() {
        assert_eq!(running_example().inversions(), 1); // only 4 above 1
    }

    #[test]
    fn rejects_cycles_and_bad_parents() {
        assert_eq!(
            RootedForest::new(1, vec![Vertex::Car(2), Vertex::Car(1)]).unwrap_err(),
            ForestError::Cycle { car: 1 }
        );
        assert_eq!(
            RootedForest::new(1, vec![Vertex::Car(1)]).unwrap_err(),
            ForestError::Cycle { car: 1 }
        );
        assert_eq!(
            RootedForest::new(2, vec![Vertex::Root(3)]).unwrap_err(),
            ForestError::RootOutOfRange { car: 1, root: 3, roots: 2 }
        );
        assert!(RootedForest::new(0, vec![]).is_err());
    }

    #[test]
    fn subtree_minima_of_the_example() {
        // Every car except 4 is smallest in its subtree: car 4 holds car 1
        // below it.
        assert_eq!(running_example().subtree_minima(), 8);
    }
}
