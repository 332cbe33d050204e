// Shared helpers for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use leaper_cycles::VertexPath;

/// Named listings from `data/worked_example.txt`.
pub fn worked_example() -> HashMap<String, VertexPath> {
    let text = include_str!("data/worked_example.txt");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (name, body) = l.split_once(':').expect("name: listing");
            (name.to_string(), parse_listing(body))
        })
        .collect()
}

/// Parses `(0,1,0) -> (1,1,0) -> ...`.
pub fn parse_listing(body: &str) -> VertexPath {
    let rows: Vec<Vec<u8>> = body
        .split("->")
        .map(|t| {
            t.trim()
                .trim_start_matches('(')
                .trim_end_matches(')')
                .split(',')
                .map(|c| c.trim().parse::<u8>().expect("0 or 1"))
                .collect()
        })
        .collect();
    VertexPath::from_coords(&rows).expect("well-formed listing")
}

/// Undirected Hamiltonian cycles of the change-`h` graph on `{0,1}^k`,
/// by trying every ordering of the non-origin vertices.
pub fn count_by_permutation(k: u32, h: u32) -> u64 {
    fn permute(rest: &mut [u64], i: usize, h: u32, out: &mut u64) {
        if i == rest.len() {
            let n = rest.len() + 1;
            let at = |j: usize| if j == 0 { 0 } else { rest[j - 1] };
            if (0..n).all(|j| (at(j) ^ at((j + 1) % n)).count_ones() == h) {
                *out += 1;
            }
            return;
        }
        for j in i..rest.len() {
            rest.swap(i, j);
            permute(rest, i + 1, h, out);
            rest.swap(i, j);
        }
    }
    let mut rest: Vec<u64> = (1..1u64 << k).collect();
    let mut directed = 0;
    permute(&mut rest, 0, h, &mut directed);
    directed / 2
}

pub fn report(id: &str, title: &str, started: std::time::Instant, failures: Vec<String>) {
    let elapsed = started.elapsed();
    if failures.is_empty() {
        println!("[PASS] {id} {title} ({elapsed:.2?})");
    } else {
        println!("[FAIL] {id} {title} ({elapsed:.2?})");
        for f in &failures {
            println!("       {f}");
        }
        panic!(
            "{id} failed with {} problem(s): {}",
            failures.len(),
            failures.join("; ")
        );
    }
}
