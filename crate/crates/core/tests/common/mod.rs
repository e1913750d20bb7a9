#![allow(dead_code)]

use std::collections::BTreeSet;

use superq::centralizer::BraidWord;

fn w(text: &str) -> Vec<u8> {
    text.split_whitespace().map(|t| t.parse().unwrap()).collect()
}

pub const B2: [&str; 3] = ["", "1", "1 1"];

/// The 20 words of `B_3` in deglex order.
pub const B3: [&str; 20] = [
    "", "1", "2", "1 1", "1 2", "2 1", "2 2", "1 1 2", "1 2 1", "1 2 2", "2 1 1", "2 2 1", "1 1 2 1", "1 1 2 2",
    "1 2 1 1", "1 2 2 1", "2 1 1 2", "2 2 1 1", "1 1 2 1 1", "1 1 2 2 1",
];

pub fn words(list: &[&str]) -> Vec<BraidWord> {
    list.iter().map(|t| BraidWord(w(t))).collect()
}

/// How `a < b` is read in the conditions that define `B_4`.
#[derive(Clone, Copy, Debug)]
pub enum Reading {
    Deglex,
    ListPosition,
}

fn less(reading: Reading, a: &[u8], b: &[u8]) -> bool {
    match reading {
        Reading::Deglex => (a.len(), a) < (b.len(), b),
        Reading::ListPosition => {
            let pos = |x: &[u8]| B3.iter().position(|t| w(t) == x).expect("threshold lies in B3");
            pos(a) < pos(b)
        }
    }
}

/// Literal expansion of the closed description of `B_4` in terms of `B_3`.
pub fn b4_literal(reading: Reading) -> BTreeSet<Vec<u8>> {
    let b3: Vec<Vec<u8>> = B3.iter().map(|t| w(t)).collect();
    let lt = |a: &[u8], t: &str| less(reading, a, &w(t));
    let cat = |a: &[u8], t: &str| [a, &w(t)[..]].concat();
    let mut s: BTreeSet<Vec<u8>> = b3.iter().cloned().collect();
    s.insert(w("3 2 2 3"));
    for a in &b3 {
        for t in ["3", "3 3", "3 2"] {
            s.insert(cat(a, t));
        }
        if lt(a, "2 2 1 1") {
            s.insert(cat(a, "3 3 2"));
            s.insert(cat(a, "3 2 2"));
        }
        if lt(a, "2 1 1 2") {
            s.insert(cat(a, "3 2 1"));
        }
        if lt(a, "2 2 1") && *a != w("1 2 2") {
            s.insert(cat(a, "3 3 2 1"));
        }
        if lt(a, "2 2 1") && *a != w("1 1 2") && *a != w("1 2 2") {
            s.insert(cat(a, "3 2 2 1"));
        }
        if lt(a, "1 2 2") {
            s.insert(cat(a, "3 2 1 1"));
        }
    }
    for t in [
        "3 3 2 2", "1 3 3 2 2", "1 1 3 3 2 2", "2 1 3 3 2 2", "3 3 2 2 1", "1 3 3 2 2 1", "3 3 2 1 1", "1 3 3 2 1 1",
        "2 3 3 2 1 1", "1 1 3 3 2 1 1", "3 2 1 1 2", "2 3 2 1 1 2", "3 3 2 1 1 2", "3 2 2 1 1", "2 3 2 2 1 1",
        "3 3 2 2 1 1",
    ] {
        s.insert(w(t));
    }
    s
}
