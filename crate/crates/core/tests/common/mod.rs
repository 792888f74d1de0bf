//! Brute-force oracles. Everything here works from a plain boolean order
//! matrix and the textbook definitions, without the library's bitsets,
//! closure or canonical forms.

#![allow(dead_code)]

use relres::Poset;

pub type Order = Vec<Vec<bool>>;

/// Every partial order on `0..n` contained in the natural order, found by
/// scanning all strictly upper-triangular relations and keeping the
/// transitive ones.
pub fn upper_triangular_orders(n: usize) -> Vec<Order> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(leq[a][b] && leq[b][c]) || leq[a][c])));
        if transitive {
            out.push(leq);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least relabeled adjacency matrix over all permutations.
pub fn canonical_form(leq: &Order, perms: &[Vec<usize>]) -> Vec<bool> {
    let n = leq.len();
    perms
        .iter()
        .map(|p| {
            let mut code = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    code.push(leq[p[i]][p[j]]);
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// One representative per isomorphism class, in first-seen order.
pub fn dedup_orders(orders: Vec<Order>) -> Vec<Order> {
    let Some(n) = orders.first().map(Vec::len) else {
        return orders;
    };
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    orders
        .into_iter()
        .filter(|o| seen.insert(canonical_form(o, &perms)))
        .collect()
}

pub fn least_upper_bound(leq: &Order, a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let ub: Vec<usize> = (0..n).filter(|&z| leq[a][z] && leq[b][z]).collect();
    ub.iter().copied().find(|&z| ub.iter().all(|&w| leq[z][w]))
}

pub fn greatest_lower_bound(leq: &Order, a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let lb: Vec<usize> = (0..n).filter(|&z| leq[z][a] && leq[z][b]).collect();
    lb.iter().copied().find(|&z| lb.iter().all(|&w| leq[w][z]))
}

pub fn is_lattice(leq: &Order) -> bool {
    let n = leq.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            least_upper_bound(leq, a, b).is_some() && greatest_lower_bound(leq, a, b).is_some()
        })
    })
}

pub fn has_top(leq: &Order) -> bool {
    let n = leq.len();
    (0..n).any(|t| (0..n).all(|x| leq[x][t]))
}

/// Isomorphism classes of lattices of size `n`.
pub fn lattices(n: usize) -> Vec<Order> {
    dedup_orders(
        upper_triangular_orders(n)
            .into_iter()
            .filter(is_lattice)
            .collect(),
    )
}

pub fn posets_with_top(n: usize) -> Vec<Order> {
    dedup_orders(
        upper_triangular_orders(n)
            .into_iter()
            .filter(has_top)
            .collect(),
    )
}

pub fn order_of(poset: &Poset) -> Order {
    let n = poset.len();
    (0..n)
        .map(|a| (0..n).map(|b| poset.leq(a, b)).collect())
        .collect()
}

pub fn poset_of(leq: &Order) -> Poset {
    let names = (0..leq.len()).map(|i| format!("e{i}")).collect();
    Poset::from_leq(names, |a, b| leq[a][b]).unwrap()
}

/// `max { x : (a ∨ b) ∧ x = b }` straight from the definition.
pub fn sectional_pc(leq: &Order, a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let ab = least_upper_bound(leq, a, b)?;
    let solutions: Vec<usize> = (0..n)
        .filter(|&x| greatest_lower_bound(leq, ab, x) == Some(b))
        .collect();
    solutions
        .iter()
        .copied()
        .find(|&x| solutions.iter().all(|&y| leq[y][x]))
}

/// `max { x : a ∧ x ≤ b }`.
pub fn relative_pc(leq: &Order, a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let solutions: Vec<usize> = (0..n)
        .filter(|&x| greatest_lower_bound(leq, a, x).is_some_and(|m| leq[m][b]))
        .collect();
    solutions
        .iter()
        .copied()
        .find(|&x| solutions.iter().all(|&y| leq[y][x]))
}

/// `x ∧ y = x ∧ z` implies `x ∧ (y ∨ z) = x ∧ y`, for all triples.
pub fn meet_semidistributive(leq: &Order) -> bool {
    let n = leq.len();
    let j = |a, b| least_upper_bound(leq, a, b).unwrap();
    let m = |a, b| greatest_lower_bound(leq, a, b).unwrap();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(x, y) != m(x, z) || m(x, j(y, z)) == m(x, y))))
}

/// All set partitions of `0..n` as restricted growth strings.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// `blocks` respects every operation given as a full table.
pub fn compatible(blocks: &[usize], ops: &[Vec<Vec<usize>>]) -> bool {
    let n = blocks.len();
    ops.iter().all(|op| {
        (0..n).all(|x1| {
            (0..n).all(|x2| {
                blocks[x1] != blocks[x2]
                    || (0..n).all(|y1| {
                        (0..n).all(|y2| {
                            blocks[y1] != blocks[y2] || (blocks[op[x1][y1]] == blocks[op[x2][y2]])
                        })
                    })
            })
        })
    })
}

/// Partitions compatible with `ops`, each as a sorted list of blocks.
pub fn congruences(n: usize, ops: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = partitions(n)
        .into_iter()
        .filter(|p| compatible(p, ops))
        .map(|p| blocks_of(&p))
        .collect();
    out.sort();
    out
}

pub fn blocks_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (x, &l) in labels.iter().enumerate() {
        blocks.entry(l).or_default().push(x);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort();
    out
}

pub fn table_rows(op: &relres::BinOp) -> Vec<Vec<usize>> {
    let n = op.size();
    (0..n)
        .map(|a| (0..n).map(|b| op.at(a, b)).collect())
        .collect()
}

pub fn join_rows(leq: &Order) -> Vec<Vec<usize>> {
    let n = leq.len();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| least_upper_bound(leq, a, b).unwrap())
                .collect()
        })
        .collect()
}

pub fn meet_rows(leq: &Order) -> Vec<Vec<usize>> {
    let n = leq.len();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| greatest_lower_bound(leq, a, b).unwrap())
                .collect()
        })
        .collect()
}

pub fn bell(n: usize) -> usize {
    partitions(n).len()
}
