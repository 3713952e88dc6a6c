//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use multiorder::order::CharVector;
use multiorder::{Multipartition, Partition, Rational};

/// Contents `χ_l + x − y`, recomputed from the rows.
pub fn contents(m: &Multipartition, chi: &CharVector) -> Vec<Rational> {
    let mut out = Vec::new();
    for (l, p) in m.components().iter().enumerate() {
        for (y, &len) in p.rows().iter().enumerate() {
            for x in 0..len {
                out.push(chi.entries()[l] + (x as i64 - y as i64));
            }
        }
    }
    out
}

fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if owner[v].is_none() || augment(owner[v].unwrap(), adj, seen, owner) {
            owner[v] = Some(u);
            return true;
        }
    }
    false
}

/// `Λ ≥ M` as the existence of a perfect matching of boxes with
/// `Cont(a) ≥ Cont(σ(a))`, found by augmenting paths.
pub fn geq_oracle(lambda: &Multipartition, mu: &Multipartition, chi: &CharVector) -> bool {
    let a = contents(lambda, chi);
    let b = contents(mu, chi);
    assert_eq!(a.len(), b.len());
    assert!(a.len() <= 6, "matching oracle is only meant for small n");
    let adj: Vec<Vec<usize>> = a
        .iter()
        .map(|x| (0..b.len()).filter(|&j| *x >= b[j]).collect())
        .collect();
    let mut owner = vec![None; b.len()];
    (0..a.len()).all(|u| augment(u, &adj, &mut vec![false; b.len()], &mut owner))
}

/// The classical dominance order on partitions of the same size.
pub fn dominance(lambda: &[usize], mu: &[usize]) -> bool {
    let len = lambda.len().max(mu.len());
    let (mut s, mut t) = (0, 0);
    for k in 0..len {
        s += lambda.get(k).copied().unwrap_or(0);
        t += mu.get(k).copied().unwrap_or(0);
        if s < t {
            return false;
        }
    }
    true
}

/// All partitions of `n` with parts at most `max`, by recursion.
pub fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `r`-multipartitions of `n`, by recursion over the first component.
pub fn multipartitions(n: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    if r == 1 {
        return partitions(n, n).into_iter().map(|p| vec![p]).collect();
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for head in partitions(k, k) {
            for mut tail in multipartitions(n - k, r - 1) {
                tail.insert(0, head.clone());
                out.push(tail);
            }
        }
    }
    out
}

pub fn to_multipartition(rows: &[Vec<usize>]) -> Multipartition {
    Multipartition::new(
        rows.iter()
            .map(|p| Partition::new(p.clone()).unwrap())
            .collect(),
    )
    .unwrap()
}

/// Number of `r`-multipartitions of `n` from the product of partition
/// generating functions.
pub fn multipartition_count(n: usize, r: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    let mut acc = vec![0u64; n + 1];
    acc[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u64; n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += acc[i] * p[j];
            }
        }
        acc = next;
    }
    acc[n]
}

/// A random character with entries `a/den`, `|a| ≤ spread·den`.
pub fn random_chi(rng: &mut impl rand::Rng, r: usize, den: i64, spread: i64) -> CharVector {
    let entries = (0..r)
        .map(|_| Rational::new(rng.gen_range(-spread * den..=spread * den), den))
        .collect();
    CharVector::new(entries).unwrap()
}

/// Genericity recomputed from the definition.
pub fn generic_oracle(chi: &CharVector, n: usize) -> bool {
    let e = chi.entries();
    for i in 0..e.len() {
        for j in 0..e.len() {
            if i != j {
                let d = e[i] - e[j];
                if (0..n as i64).any(|k| d == Rational::from_integer(k)) {
                    return false;
                }
            }
        }
    }
    true
}

fn box_set(m: &Multipartition) -> BTreeSet<(usize, usize, usize)> {
    let mut out = BTreeSet::new();
    for (l, p) in m.components().iter().enumerate() {
        for (y, &len) in p.rows().iter().enumerate() {
            for x in 0..len {
                out.insert((l, y, x));
            }
        }
    }
    out
}

/// Adjacency from the definition: the two difference sets each sit in one
/// component and are translates of each other.
pub fn adjacent_oracle(a: &Multipartition, b: &Multipartition) -> bool {
    let (sa, sb) = (box_set(a), box_set(b));
    let d1: Vec<_> = sa.difference(&sb).copied().collect();
    let d2: Vec<_> = sb.difference(&sa).copied().collect();
    if d1.is_empty() || d1.len() != d2.len() {
        return false;
    }
    if d1.iter().any(|c| c.0 != d1[0].0) || d2.iter().any(|c| c.0 != d2[0].0) {
        return false;
    }
    let dy = d2[0].1 as i64 - d1[0].1 as i64;
    let dx = d2[0].2 as i64 - d1[0].2 as i64;
    let moved: BTreeSet<_> = d1
        .iter()
        .map(|&(_, y, x)| (y as i64 + dy, x as i64 + dx))
        .collect();
    let target: BTreeSet<_> = d2.iter().map(|&(_, y, x)| (y as i64, x as i64)).collect();
    moved == target
}

/// `Λ ▷ M` by depth-first search through all multipartitions of the same
/// shape, using only the oracles above.
pub fn triangle_oracle(lambda: &Multipartition, mu: &Multipartition, chi: &CharVector) -> bool {
    let universe: Vec<Multipartition> = multipartitions(lambda.size(), lambda.r())
        .iter()
        .map(|rows| to_multipartition(rows))
        .collect();
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(u) = stack.pop() {
        if &u == mu {
            return true;
        }
        for v in &universe {
            if !seen.contains(v) && adjacent_oracle(&u, v) && geq_oracle(&u, v, chi) {
                seen.insert(v.clone());
                stack.push(v.clone());
            }
        }
    }
    false
}
