//! Brute-force count of labeled graphs with a prescribed number of
//! edges whose components each capture exactly one root vertex. The
//! same number is reachable from parking functions as a binomial sum
//! over displacement, which is exactly what the tests assert.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::counts::{binomial, enumerate_pf};
use crate::error::Error;

/// Counts graphs on `m + s` labeled vertices (roots are the first `s`)
/// with exactly `m + k` edges and exactly `s` connected components,
/// one root per component.
pub fn graph_count_components(m: usize, s: usize, k: usize, cap: u128) -> Result<BigInt, Error> {
    let vertices = m + s;
    let mut edges = Vec::new();
    for a in 0..vertices {
        for b in a + 1..vertices {
            edges.push((a, b));
        }
    }
    let picked = m + k;
    if picked > edges.len() {
        return Ok(BigInt::zero());
    }
    let need = subset_count(edges.len(), picked);
    if need > cap {
        return Err(Error::ResourceLimit { need, cap });
    }

    let mut count = BigInt::zero();
    let mut chosen: Vec<usize> = (0..picked).collect();
    loop {
        if qualifies(vertices, s, &chosen, &edges) {
            count += BigInt::one();
        }
        if !next_combination(&mut chosen, edges.len()) {
            break;
        }
    }
    Ok(count)
}

/// The parking-function side of the same count:
/// `Σ C(disp(π), k)` over `PF(m, m+s-1)`.
pub fn displacement_binomial_sum(m: usize, s: usize, k: usize, cap: u128) -> Result<BigInt, Error> {
    let mut total = BigInt::zero();
    for pf in enumerate_pf(m, m + s - 1, cap)? {
        total += binomial(pf.displacement(), k);
    }
    Ok(total)
}

fn subset_count(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn qualifies(vertices: usize, roots: usize, chosen: &[usize], edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut components = vertices;
    for &e in chosen {
        let (a, b) = edges[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    if components != roots {
        return false;
    }
    // With exactly `roots` components left, bijectivity between roots and
    // components is equivalent to no two roots sharing one.
    let mut seen = vec![false; vertices];
    for r in 0..roots {
        let rep = find(&mut parent, r);
        if seen[rep] {
            return false;
        }
        seen[rep] = true;
    }
    true
}

/// Advances `chosen` to the next k-subset of `0..n` in lexicographic
/// order; false when it was the last one.
fn next_combination(chosen: &mut [usize], n: usize) -> bool {
    let k = chosen.len();
    for i in (0..k).rev() {
        if chosen[i] < n - (k - i) {
            chosen[i] += 1;
            for j in i + 1..k {
                chosen[j] = chosen[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::DEFAULT_ENUM_CAP;

    #[test]
    fn labeled_trees_and_the_triangle() {
        assert_eq!(graph_count_components(2, 1, 0, 1000).unwrap(), BigInt::from(3));
        assert_eq!(graph_count_components(2, 1, 1, 1000).unwrap(), BigInt::from(1));
        assert_eq!(graph_count_components(0, 2, 0, 1000).unwrap(), BigInt::one());
    }

    #[test]
    fn agrees_with_the_displacement_sum() {
        for total in 2..=5 {
            for s in 1..total {
                let m: usize = total - s;
                let max_disp = m * m.saturating_sub(1) / 2;
                for k in 0..=max_disp {
                    assert_eq!(
                        graph_count_components(m, s, k, DEFAULT_ENUM_CAP).unwrap(),
                        displacement_binomial_sum(m, s, k, DEFAULT_ENUM_CAP).unwrap(),
                        "m={m} s={s} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn refuses_oversized_effort() {
        assert!(matches!(
            graph_count_components(6, 2, 10, 10).unwrap_err(),
            Error::ResourceLimit { .. }
        ));
    }
}
