use pfcore::{invert, park, ParkingFunction, SegmentDecomposition};

use crate::forest::{RootedForest, Vertex};

/// Encodes a parking function as a forest so that total displacement
/// becomes the forest's inversion count, and lucky cars become the cars
/// that are smallest in their own subtree.
///
/// The function splits into classical segments at its empty spots; segment
/// `g` becomes the tree under root `g`. Within one segment of `l` cars:
///
/// 1. Park the segment. Let `tau` list the cars by the spot they take.
/// 2. Hang each car below the first larger car to its right in `tau`
///    (below the segment root when none exists). Parents carry larger
///    labels than children, so there are no label inversions yet.
/// 3. Walk the trees in preorder, children by ascending current label. A
///    vertex whose car was displaced `d` spots trades its label for the
///    `(d+1)`-st smallest current label in its subtree. Each trade plants
///    a larger label above a smaller one, recording the displacement as
///    inversions.
/// 4. Read the final labels as local car names `1..=l` and translate to
///    the segment's cars, smallest to smallest.
///
/// The inverse is [`forest_to_pf_disp`].
pub fn pf_to_forest_disp(pf: &ParkingFunction) -> RootedForest {
    let dec = SegmentDecomposition::of(pf);
    let mut parent = vec![Vertex::Root(1); pf.cars()];
    for (g, seg) in dec.segments.iter().enumerate() {
        // Cars arrive in index order, so a segment's members are already
        // ascending: the k-th member is both the k-th arrival and the k-th
        // smallest, and local-to-global translation is one lookup.
        let members = &dec.members[g];
        for (label0, parent_label) in segment_to_tree(seg.prefs()).iter().enumerate() {
            parent[members[label0] - 1] = match parent_label {
                None => Vertex::Root(g + 1),
                Some(p) => Vertex::Car(members[p - 1]),
            };
        }
    }
    RootedForest::new(dec.segments.len(), parent)
        .expect("trades preserve the tree shape, which is acyclic")
}

/// Decodes [`pf_to_forest_disp`]: recovers the unique parking function on
/// `cars + roots - 1` spots whose displacement forest is the given one.
pub fn forest_to_pf_disp(forest: &RootedForest) -> ParkingFunction {
    let spots = forest.cars() + forest.roots() - 1;
    let root_of = forest.root_of();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); forest.roots()];
    for c in 1..=forest.cars() {
        members[root_of[c - 1] - 1].push(c); // ascending by construction
    }

    let mut prefs = vec![0usize; forest.cars()];
    let mut low = 0usize;
    for (g, cars) in members.iter().enumerate() {
        let local_of = |v: usize| cars.binary_search(&v).expect("member of this tree") + 1;
        let local_parents: Vec<Option<usize>> = cars
            .iter()
            .map(|&c| match forest.parent_of(c) {
                Vertex::Root(r) => {
                    debug_assert_eq!(r, g + 1);
                    None
                }
                Vertex::Car(p) => Some(local_of(p)),
            })
            .collect();
        let word = tree_to_segment(&local_parents);
        for (k, &c) in cars.iter().enumerate() {
            prefs[c - 1] = low + word[k];
        }
        low += cars.len() + 1; // skip the empty spot closing this gap
    }
    ParkingFunction::new(prefs, spots)
        .expect("decoding a displacement forest always parks")
}

/// Forward pass on one classical segment. Takes the preference word,
/// returns the trees as `parent[label-1]` keyed by final labels `1..=l`,
/// `None` meaning the segment root.
fn segment_to_tree(word: &[usize]) -> Vec<Option<usize>> {
    let l = word.len();
    if l == 0 {
        return Vec::new();
    }
    let outcome = park(word, l).expect("segments are classical parking functions");
    let mut tau = vec![0usize; l];
    for (car0, &spot) in outcome.spot_of_car.iter().enumerate() {
        tau[spot - 1] = car0 + 1;
    }

    // Car k hangs below the first larger car to its right in tau.
    let mut aux_parent: Vec<Option<usize>> = vec![None; l + 1];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); l + 1];
    let mut top: Vec<usize> = Vec::new();
    for p in 0..l {
        let k = tau[p];
        match tau[p + 1..].iter().find(|&&j| j > k) {
            Some(&j) => {
                aux_parent[k] = Some(j);
                children[j].push(k);
            }
            None => top.push(k),
        }
    }

    // Preorder label trading. label[v] is the current label at vertex v,
    // holder its inverse. Nothing above a top vertex ever trades, so
    // sorting the tops once respects the ascending-label visit rule.
    let mut label: Vec<usize> = (0..=l).collect();
    let mut holder: Vec<usize> = (0..=l).collect();
    top.sort_unstable();
    let mut stack: Vec<usize> = top.iter().rev().copied().collect();
    while let Some(v) = stack.pop() {
        let mut subtree_labels = Vec::new();
        collect_labels(v, &children, &label, &mut subtree_labels);
        subtree_labels.sort_unstable();
        let wanted = subtree_labels[outcome.displacement_of_car[v - 1]];
        let mine = label[v];
        let other = holder[wanted];
        label[v] = wanted;
        holder[wanted] = v;
        label[other] = mine;
        holder[mine] = other;
        // Children still hold their pre-visit labels; fix the order now.
        let mut kids = children[v].clone();
        kids.sort_unstable_by_key(|&c| label[c]);
        stack.extend(kids.iter().rev());
    }

    // Re-key the trees by final labels.
    let mut parent_by_label = vec![None; l];
    for v in 1..=l {
        parent_by_label[label[v] - 1] = aux_parent[v].map(|p| label[p]);
    }
    parent_by_label
}

fn collect_labels(v: usize, children: &[Vec<usize>], label: &[usize], out: &mut Vec<usize>) {
    out.push(label[v]);
    for &c in &children[v] {
        collect_labels(c, children, label, out);
    }
}

/// A label that an ancestor's trade left inside the current subtree:
/// `planted` now stands where car `displaced` originally stood.
#[derive(Debug, Clone, Copy)]
struct Plant {
    planted: usize,
    displaced: usize,
}

/// Inverse pass on one segment's trees, keyed by final labels. Returns the
/// preference word, indexed by car.
fn tree_to_segment(parent_by_label: &[Option<usize>]) -> Vec<usize> {
    let l = parent_by_label.len();
    if l == 0 {
        return Vec::new();
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); l + 1];
    let mut top: Vec<usize> = Vec::new();
    for b in 1..=l {
        match parent_by_label[b - 1] {
            Some(p) => children[p].push(b),
            None => top.push(b),
        }
    }
    // Final labels below each vertex, sorted. A trade only permutes labels
    // inside the trading vertex's subtree, so this is also the label set
    // present there when the forward pass visited the vertex.
    let mut subtree: Vec<Vec<usize>> = vec![Vec::new(); l + 1];
    for &t in &top {
        fill_subtree(t, &children, &mut subtree);
    }

    let mut displacement = vec![0usize; l + 1]; // indexed by car
    let mut tau = Vec::with_capacity(l);
    // Top subtrees hold no plants, so their cars are exactly their labels
    // and the top cars are the subtree maxima.
    let mut tops: Vec<(usize, usize)> = top
        .iter()
        .map(|&t| (*subtree[t].last().expect("nonempty"), t))
        .collect();
    tops.sort_unstable_by(|a, b| b.cmp(a));
    for &(car, t) in &tops {
        unwind(t, car, Vec::new(), &children, &subtree, &mut displacement, &mut tau);
    }

    let spot_of_car = invert(&tau);
    (1..=l).map(|k| spot_of_car[k - 1] - displacement[k]).collect()
}

fn fill_subtree(v: usize, children: &[Vec<usize>], subtree: &mut Vec<Vec<usize>>) {
    let mut labels = vec![v];
    for &c in &children[v] {
        fill_subtree(c, children, subtree);
        labels.extend_from_slice(&subtree[c]);
    }
    labels.sort_unstable();
    subtree[v] = labels;
}

/// Undoes the forward trades below `vertex`, whose car is `car`: records
/// each car's displacement and appends this subtree's block of `tau`.
fn unwind(
    vertex: usize,
    car: usize,
    mut plants: Vec<Plant>,
    children: &[Vec<usize>],
    subtree: &[Vec<usize>],
    displacement: &mut [usize],
    tau: &mut Vec<usize>,
) {
    // The vertex is keyed by its final label, the one its trade fetched:
    // the (d+1)-smallest then in its subtree, whose label set never
    // changed afterwards.
    let label = vertex;
    displacement[car] = subtree[vertex]
        .binary_search(&label)
        .expect("a vertex's final label lies in its own subtree");

    // What the vertex held before trading: its car, unless an ancestor
    // planted something else here.
    let held = match plants.iter().position(|p| p.displaced == car) {
        Some(i) => plants.swap_remove(i).planted,
        None => car,
    };
    if held != label {
        // The trade pushed `held` down to wherever `label` sat. If `label`
        // was itself a plant, the chain collapses.
        match plants.iter_mut().find(|p| p.planted == label) {
            Some(p) => p.planted = held,
            None => plants.push(Plant { planted: held, displaced: label }),
        }
    }

    // Hand each plant to the child subtree its label sits in, and recover
    // every child's car: the largest original label of its subtree, i.e.
    // the final labels with plants undone.
    let mut kids: Vec<(usize, usize, Vec<Plant>)> = Vec::with_capacity(children[vertex].len());
    let mut handed_out = 0usize;
    for &c in &children[vertex] {
        let child_plants: Vec<Plant> = plants
            .iter()
            .filter(|p| subtree[c].binary_search(&p.planted).is_ok())
            .copied()
            .collect();
        handed_out += child_plants.len();
        let mut originals = subtree[c].clone();
        for p in &child_plants {
            let at = originals
                .binary_search(&p.planted)
                .expect("plant sits in this subtree");
            originals.remove(at);
        }
        for p in &child_plants {
            let at = originals
                .binary_search(&p.displaced)
                .expect_err("original labels are distinct");
            originals.insert(at, p.displaced);
        }
        kids.push((*originals.last().expect("nonempty"), c, child_plants));
    }
    debug_assert_eq!(handed_out, plants.len(), "every plant lands in exactly one child");

    // Blocks of tau: children in descending car order, parent closing.
    kids.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    for (child_car, c, child_plants) in kids {
        unwind(c, child_car, child_plants, children, subtree, displacement, tau);
    }
    tau.push(car);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_worked_nine_car_example() {
        let pf = ParkingFunction::new(vec![3, 1, 9, 1, 10, 7, 3, 11, 10], 12).unwrap();
        let forest = pf_to_forest_disp(&pf);
        let expect = RootedForest::new(
            4,
            vec![
                Vertex::Car(2),  // 1
                Vertex::Root(1), // 2
                Vertex::Car(8),  // 3
                Vertex::Car(7),  // 4
                Vertex::Car(3),  // 5
                Vertex::Root(3), // 6
                Vertex::Car(2),  // 7
                Vertex::Root(4), // 8
                Vertex::Car(5),  // 9
            ],
        )
        .unwrap();
        assert_eq!(forest, expect);
        assert_eq!(forest.inversions(), pf.displacement());
        assert_eq!(forest.inversions(), 4);
        assert_eq!(forest.subtree_minima(), pf.lucky_count());
        assert_eq!(forest.subtree_minima(), 6);
        assert_eq!(forest_to_pf_disp(&forest), pf);
    }

    #[test]
    fn single_segment_words() {
        // (1,1): the second car is displaced once, so 2 ends up above 1.
        let pf = ParkingFunction::new(vec![1, 1], 2).unwrap();
        let forest = pf_to_forest_disp(&pf);
        assert_eq!(forest.parents(), &[Vertex::Car(2), Vertex::Root(1)]);
        assert_eq!(forest_to_pf_disp(&forest), pf);

        // (1,2): nobody displaced; 1 sits on top of 2.
        let pf = ParkingFunction::new(vec![1, 2], 2).unwrap();
        let forest = pf_to_forest_disp(&pf);
        assert_eq!(forest.parents(), &[Vertex::Root(1), Vertex::Car(1)]);
        assert_eq!(forest_to_pf_disp(&forest), pf);

        // (2,1): two top vertices side by side under the root.
        let pf = ParkingFunction::new(vec![2, 1], 2).unwrap();
        let forest = pf_to_forest_disp(&pf);
        assert_eq!(forest.parents(), &[Vertex::Root(1), Vertex::Root(1)]);
        assert_eq!(forest_to_pf_disp(&forest), pf);
    }

    #[test]
    fn empty_function_empty_forest() {
        let pf = ParkingFunction::new(vec![], 3).unwrap();
        let forest = pf_to_forest_disp(&pf);
        assert_eq!(forest.roots(), 4);
        assert_eq!(forest.cars(), 0);
        assert_eq!(forest_to_pf_disp(&forest), pf);
    }
}
