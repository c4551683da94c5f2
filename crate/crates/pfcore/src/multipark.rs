use crate::error::Error;
use crate::parking::is_parking_function;

/// Decides whether a budget assignment on the complete graph is feasible,
/// by brute force over vertex subsets.
///
/// The graph has vertices `0..=n`. The first `n - m + 1` vertices carry an
/// unlimited budget; vertex `n - m + i` carries `budgets[i - 1]`. The
/// assignment is feasible when every nonempty subset `U` either contains an
/// unlimited vertex as its minimum, or contains some vertex whose budget is
/// exceeded by its `n + 1 - |U|` edges leaving `U`.
///
/// Feasible assignments correspond exactly to parking functions: `budgets`
/// is feasible if and only if adding one to each entry yields a parking
/// function on `n` spots (see the crate tests). Runtime is `O(2^n)`; this
/// is a cross-validation oracle for small `n`, not a production check.
pub fn complete_graph_budgets_ok(budgets: &[usize], n: usize) -> Result<bool, Error> {
    let m = budgets.len();
    if m > n {
        return Err(Error::TooManyCars { cars: m, spots: n });
    }
    assert!(n <= 20, "subset oracle is exponential; keep n small");
    let vertices = n + 1;
    let unlimited = n - m + 1; // vertices 0..unlimited have no budget cap
    for subset in 1u32..(1 << vertices) {
        let lowest = subset.trailing_zeros() as usize;
        if lowest < unlimited {
            continue;
        }
        let outside = vertices as u32 - subset.count_ones();
        let mut feasible = false;
        let mut rest = subset;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (budgets[v - unlimited] as u32) < outside {
                feasible = true;
                break;
            }
        }
        if !feasible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The preference sequence associated with a budget assignment: one more
/// than each budget.
pub fn budgets_to_prefs(budgets: &[usize]) -> Vec<usize> {
    budgets.iter().map(|&g| g + 1).collect()
}

/// The budget assignment associated with a preference sequence: one less
/// than each preference.
pub fn prefs_to_budgets(prefs: &[usize]) -> Vec<usize> {
    prefs.iter().map(|&p| p - 1).collect()
}

/// Convenience wrapper: does the budget assignment's preference sequence
/// park? Out-of-range preferences count as "no".
pub fn budgets_park(budgets: &[usize], n: usize) -> bool {
    let prefs = budgets_to_prefs(budgets);
    matches!(is_parking_function(&prefs, n), Ok(true))
}
