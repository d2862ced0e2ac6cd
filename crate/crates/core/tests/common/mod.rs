#![allow(dead_code)]

use std::collections::BTreeSet;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use nalgebra::DMatrix;
use walk_entropy::graph6::read_graphs;
use walk_entropy::Graph;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}

/// Every connected graph on 8 nodes, one per isomorphism class.
pub fn connected8() -> Vec<Graph> {
    let file = File::open(data_path("connected8.g6")).expect("corpus file");
    read_graphs(BufReader::new(file)).expect("corpus parses")
}

/// `e^{βA}` by summing the power series until the next term is negligible.
pub fn series_expm(a: &DMatrix<f64>, beta: f64) -> DMatrix<f64> {
    let n = a.nrows();
    let mut sum = DMatrix::<f64>::identity(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    let norm = a.norm() * beta;
    let mut bound = 1.0;
    for k in 1..1000 {
        term = &term * a * (beta / k as f64);
        sum += &term;
        bound *= norm / k as f64;
        if k as f64 > norm && bound < 1e-17 * sum.trace() {
            break;
        }
    }
    sum
}

/// Graph on `n` nodes from bits over the upper triangle, row by row.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut it = bits.iter();
    for i in 0..n {
        for j in i + 1..n {
            if *it.next().unwrap_or(&false) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
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

fn connected_mask(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let fresh = adj[v] & !seen;
        seen |= fresh;
        for w in 0..n {
            if fresh >> w & 1 == 1 {
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Isomorphism classes of graphs on `n` nodes, found by relabelling every
/// labelled graph under every permutation. Only practical for `n <= 6`.
pub fn brute_force_classes(n: usize, connected_only: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut adj = vec![0u32; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        if connected_only && n > 0 && !connected_mask(n, &adj) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().fold(0u32, |acc, (b, &(i, j))| {
                    acc | (((adj[p[i]] >> p[j]) & 1) << b)
                })
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

/// Degree-1 node count and whether some 5 nodes are pairwise adjacent.
pub fn pendants_and_k5(g: &Graph) -> (usize, bool) {
    let pendants = g.degrees().iter().filter(|&&d| d == 1).count();
    let n = g.n();
    let mut has_k5 = false;
    let mut pick = Vec::new();
    fn search(g: &Graph, start: usize, pick: &mut Vec<usize>, found: &mut bool) {
        if *found {
            return;
        }
        if pick.len() == 5 {
            *found = true;
            return;
        }
        for v in start..g.n() {
            if pick.iter().all(|&u| g.has_edge(u, v)) {
                pick.push(v);
                search(g, v + 1, pick, found);
                pick.pop();
            }
        }
    }
    if n >= 5 {
        search(g, 0, &mut pick, &mut has_k5);
    }
    (pendants, has_k5)
}
