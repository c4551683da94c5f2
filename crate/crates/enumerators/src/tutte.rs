//! Tutte polynomials of complete graphs, computed two independent
//! ways: by deletion-contraction on multigraphs, and by summing the
//! statistic monomial `x^cm y^disp` over classical parking functions.
//! A third identity relates products of complete-graph Tutte
//! polynomials to parking functions with more spots than cars.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use pfcore::critical_lr_maxima;

use crate::counts::{enumerate_pf, for_each_composition, multinomial};
use crate::error::Error;
use crate::poly::XyPoly;

/// Largest `n` accepted by [`tutte_complete`]. Deletion-contraction
/// canonicalizes intermediate multigraphs by brute-force vertex
/// permutation, which stops being reasonable beyond K_7.
pub const MAX_COMPLETE: usize = 6;

/// Loopless multigraph on a small labeled vertex set, stored as the
/// strict upper triangle of its edge-multiplicity matrix. Loops never
/// need storing: deletion-contraction peels them off as `y` factors
/// the moment a contraction would create them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Multigraph {
    vertices: usize,
    mult: Vec<u32>,
}

impl Multigraph {
    fn complete(vertices: usize) -> Self {
        let pairs = vertices * vertices.saturating_sub(1) / 2;
        Multigraph { vertices, mult: vec![1; pairs] }
    }

    fn slot(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b && b < self.vertices);
        // Row-major upper triangle: row a starts after all earlier rows.
        a * (2 * self.vertices - a - 1) / 2 + (b - a - 1)
    }

    fn multiplicity(&self, a: usize, b: usize) -> u32 {
        self.mult[self.slot(a, b)]
    }

    fn first_edge(&self) -> Option<(usize, usize)> {
        for a in 0..self.vertices {
            for b in a + 1..self.vertices {
                if self.multiplicity(a, b) > 0 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    fn without_one_copy(&self, a: usize, b: usize) -> Multigraph {
        let mut g = self.clone();
        let s = g.slot(a, b);
        g.mult[s] -= 1;
        g
    }

    /// Merges `b` into `a` and drops the edges between them; returns
    /// the contracted graph and how many loops the merge created
    /// (the parallel copies beyond the contracted one).
    fn contracted(&self, a: usize, b: usize) -> (Multigraph, u32) {
        let loops = self.multiplicity(a, b) - 1;
        let mut g = Multigraph {
            vertices: self.vertices - 1,
            mult: vec![0; (self.vertices - 1) * (self.vertices - 2) / 2],
        };
        let renumber = |v: usize| if v > b { v - 1 } else { v };
        for p in 0..self.vertices {
            for q in p + 1..self.vertices {
                if (p, q) == (a, b) {
                    continue;
                }
                let w = self.multiplicity(p, q);
                if w == 0 {
                    continue;
                }
                let (mut p2, mut q2) = (renumber(if p == b { a } else { p }), renumber(if q == b { a } else { q }));
                if p2 > q2 {
                    std::mem::swap(&mut p2, &mut q2);
                }
                let s = g.slot(p2, q2);
                g.mult[s] += w;
            }
        }
        (g, loops)
    }

    /// True when the single copy of `{a, b}` is the only route between
    /// its endpoints.
    fn is_bridge(&self, a: usize, b: usize) -> bool {
        if self.multiplicity(a, b) != 1 {
            return false;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(v) = stack.pop() {
            for u in 0..self.vertices {
                if u == v || seen[u] {
                    continue;
                }
                let (p, q) = if v < u { (v, u) } else { (u, v) };
                let w = self.multiplicity(p, q);
                let skip_direct = (p, q) == (a.min(b), a.max(b));
                if w > if skip_direct { 1 } else { 0 } {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        !seen[b]
    }

    /// Lexicographically smallest multiplicity matrix over all vertex
    /// relabelings. Slow but sound; weaker keys (multiplicity multisets
    /// and the like) identify non-isomorphic graphs.
    fn canonical_key(&self) -> Vec<u32> {
        let n = self.vertices;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u32>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut key = Vec::with_capacity(self.mult.len());
            for a in 0..n {
                for b in a + 1..n {
                    let (i, j) = if p[a] < p[b] { (p[a], p[b]) } else { (p[b], p[a]) };
                    key.push(self.multiplicity(i, j));
                }
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        });
        best.unwrap_or_default()
    }
}

fn permute(items: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    if from == items.len() {
        visit(items);
        return;
    }
    for i in from..items.len() {
        items.swap(from, i);
        permute(items, from + 1, visit);
        items.swap(from, i);
    }
}

/// Tutte polynomial of the complete graph on `n + 1` vertices by
/// memoized deletion-contraction.
pub fn tutte_complete(n: usize) -> Result<XyPoly, Error> {
    if n > MAX_COMPLETE {
        return Err(Error::TooLarge { size: n, max: MAX_COMPLETE });
    }
    let mut memo: HashMap<Vec<u32>, XyPoly> = HashMap::new();
    Ok(tutte_with_memo(&Multigraph::complete(n + 1), &mut memo))
}

fn tutte_with_memo(g: &Multigraph, memo: &mut HashMap<Vec<u32>, XyPoly>) -> XyPoly {
    let Some((a, b)) = g.first_edge() else {
        return XyPoly::one();
    };
    let key = g.canonical_key();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let result = if g.is_bridge(a, b) {
        let (contracted, loops) = g.contracted(a, b);
        debug_assert_eq!(loops, 0);
        let mut t = XyPoly::zero();
        for (xd, yd, c) in tutte_with_memo(&contracted, memo).terms() {
            t.add_term(xd + 1, yd, c);
        }
        t
    } else {
        let deleted = tutte_with_memo(&g.without_one_copy(a, b), memo);
        let (contracted, loops) = g.contracted(a, b);
        let sub = tutte_with_memo(&contracted, memo);
        let mut t = deleted;
        for (xd, yd, c) in sub.terms() {
            t.add_term(xd, yd + loops, c);
        }
        t
    };
    memo.insert(key, result.clone());
    result
}

/// Same polynomial without the memo table, as a cross-check that the
/// canonicalization never conflates distinct graphs. Kept to modest
/// sizes; the recursion tree is exponential in the edge count.
pub fn tutte_complete_unmemoized(n: usize) -> Result<XyPoly, Error> {
    const MAX_PLAIN: usize = 5;
    if n > MAX_PLAIN {
        return Err(Error::TooLarge { size: n, max: MAX_PLAIN });
    }
    Ok(tutte_plain(&Multigraph::complete(n + 1)))
}

fn tutte_plain(g: &Multigraph) -> XyPoly {
    let Some((a, b)) = g.first_edge() else {
        return XyPoly::one();
    };
    if g.is_bridge(a, b) {
        let (contracted, _) = g.contracted(a, b);
        let mut t = XyPoly::zero();
        for (xd, yd, c) in tutte_plain(&contracted).terms() {
            t.add_term(xd + 1, yd, c);
        }
        return t;
    }
    let mut t = tutte_plain(&g.without_one_copy(a, b));
    let (contracted, loops) = g.contracted(a, b);
    for (xd, yd, c) in tutte_plain(&contracted).terms() {
        t.add_term(xd, yd + loops, c);
    }
    t
}

/// `Σ x^{cm(π)} y^{disp(π)}` over classical parking functions of `n`
/// cars, the parking-function expression for the Tutte polynomial of
/// K_{n+1}.
pub fn tutte_from_pf(n: usize, cap: u128) -> Result<XyPoly, Error> {
    let mut total = XyPoly::zero();
    for pf in enumerate_pf(n, n, cap)? {
        total.add_term(
            critical_lr_maxima(&pf) as u32,
            pf.displacement() as u32,
            &BigInt::one(),
        );
    }
    Ok(total)
}

/// Both sides of the forest convolution identity: distributing `m`
/// cars over `s` trees multiplies complete-graph Tutte polynomials on
/// the left, and the statistic sum over `PF(m, m+s-1)` sits on the
/// right. Returned as a pair so callers assert equality themselves.
pub fn forest_tutte_identity(m: usize, s: usize, cap: u128) -> Result<(XyPoly, XyPoly), Error> {
    if s == 0 {
        return Err(Error::BadHoles { reason: "at least one tree is required".into() });
    }
    let mut complete_cache: Vec<XyPoly> = Vec::with_capacity(m + 1);
    for part in 0..=m {
        complete_cache.push(tutte_complete(part)?);
    }

    let mut left = XyPoly::zero();
    for_each_composition(m, s, |sizes| {
        let mut product = XyPoly::monomial(0, 0, multinomial(sizes));
        for &part in sizes {
            product = &product * &complete_cache[part];
        }
        left += &product;
    });

    let mut right = XyPoly::zero();
    for pf in enumerate_pf(m, m + s - 1, cap)? {
        right.add_term(
            critical_lr_maxima(&pf) as u32,
            pf.displacement() as u32,
            &BigInt::one(),
        );
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::counts::count_pf;
    use crate::counts::DEFAULT_ENUM_CAP;

    fn triangle() -> XyPoly {
        let mut t = XyPoly::monomial(2, 0, BigInt::one());
        t.add_term(1, 0, &BigInt::one());
        t.add_term(0, 1, &BigInt::one());
        t
    }

    #[test]
    fn complete_graph_basics() {
        assert_eq!(tutte_complete(0).unwrap(), XyPoly::one());
        assert_eq!(tutte_complete(1).unwrap(), XyPoly::monomial(1, 0, BigInt::one()));
        assert_eq!(tutte_complete(2).unwrap(), triangle());
        assert!(tutte_complete(MAX_COMPLETE + 1).is_err());

        for n in 0..=5 {
            let spanning_trees = tutte_complete(n).unwrap().eval(&BigInt::one(), &BigInt::one());
            assert_eq!(spanning_trees, count_pf(n, n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn memoized_and_plain_paths_agree() {
        for n in 0..=4 {
            assert_eq!(
                tutte_complete(n).unwrap(),
                tutte_complete_unmemoized(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn parking_side_matches_deletion_contraction() {
        assert_eq!(tutte_from_pf(1, DEFAULT_ENUM_CAP).unwrap(), tutte_complete(1).unwrap());
        assert_eq!(tutte_from_pf(2, DEFAULT_ENUM_CAP).unwrap(), triangle());
        assert_eq!(
            tutte_from_pf(4, DEFAULT_ENUM_CAP)
                .unwrap()
                .eval(&BigInt::one(), &BigInt::one()),
            BigInt::from(125)
        );
    }

    #[test]
    fn convolution_identity_on_a_small_case() {
        let (left, right) = forest_tutte_identity(2, 2, DEFAULT_ENUM_CAP).unwrap();
        let mut expected = XyPoly::monomial(2, 0, BigInt::from(4));
        expected.add_term(1, 0, &BigInt::from(2));
        expected.add_term(0, 1, &BigInt::from(2));
        assert_eq!(left, expected);
        assert_eq!(right, expected);

        let (l0, r0) = forest_tutte_identity(0, 3, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(l0, XyPoly::one());
        assert_eq!(r0, XyPoly::one());
    }
}
