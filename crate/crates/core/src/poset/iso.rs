//! Poset isomorphism by colour refinement on the cover graph plus
//! individualisation and backtracking.

use std::collections::BTreeMap;

use super::FinitePoset;

/// An isomorphism `p → q` as an index map, or `None`.
pub fn poset_isomorphic(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.cover_count() != q.cover_count() {
        return None;
    }
    let pair = [p, q];
    let init = pair.map(|x| {
        let h = height(x);
        (0..x.len())
            .map(|i| {
                vec![
                    h[i],
                    x.upper_covers(i).len(),
                    x.lower_covers(i).len(),
                    x.up_set(i).count_ones(..),
                    x.down_set(i).count_ones(..),
                ]
            })
            .collect::<Vec<_>>()
    });
    let colours = canonical(&init)?;
    let colours = refine(pair, colours)?;
    search(pair, colours)
}

fn height(p: &FinitePoset) -> Vec<usize> {
    let mut h = vec![0usize; p.len()];
    for &j in p.linear_extension() {
        h[j] = p.lower_covers(j).iter().map(|&i| h[i] + 1).max().unwrap_or(0);
    }
    h
}

type Colours = [Vec<usize>; 2];

/// Relabels signatures of both posets onto shared small integers. Fails
/// when the two colour histograms differ.
fn canonical<S: Ord + Clone>(sigs: &[Vec<S>; 2]) -> Option<Colours> {
    let mut ids: BTreeMap<S, [usize; 2]> = BTreeMap::new();
    for (side, sig) in sigs.iter().enumerate() {
        for s in sig {
            ids.entry(s.clone()).or_default()[side] += 1;
        }
    }
    if ids.values().any(|c| c[0] != c[1]) {
        return None;
    }
    let lookup: BTreeMap<&S, usize> = ids.keys().enumerate().map(|(k, s)| (s, k)).collect();
    Some([0, 1].map(|side| sigs[side].iter().map(|s| lookup[s]).collect()))
}

fn class_count(c: &[usize]) -> usize {
    c.iter().max().map_or(0, |m| m + 1)
}

fn refine(pair: [&FinitePoset; 2], mut colours: Colours) -> Option<Colours> {
    loop {
        let before = class_count(&colours[0]);
        let sigs = [0, 1].map(|side| {
            let x = pair[side];
            let c = &colours[side];
            (0..x.len())
                .map(|i| {
                    let mut up: Vec<usize> = x.upper_covers(i).iter().map(|&j| c[j]).collect();
                    let mut down: Vec<usize> = x.lower_covers(i).iter().map(|&j| c[j]).collect();
                    up.sort_unstable();
                    down.sort_unstable();
                    (c[i], up, down)
                })
                .collect::<Vec<_>>()
        });
        colours = canonical(&sigs)?;
        if class_count(&colours[0]) == before {
            return Some(colours);
        }
    }
}

fn search(pair: [&FinitePoset; 2], colours: Colours) -> Option<Vec<usize>> {
    let n = pair[0].len();
    let classes = class_count(&colours[0]);
    if classes == n {
        let mut map = vec![0usize; n];
        let mut by_colour = vec![0usize; n];
        for (j, &c) in colours[1].iter().enumerate() {
            by_colour[c] = j;
        }
        for (i, &c) in colours[0].iter().enumerate() {
            map[i] = by_colour[c];
        }
        return preserves_covers(pair, &map).then_some(map);
    }
    let mut sizes = vec![0usize; classes];
    for &c in &colours[0] {
        sizes[c] += 1;
    }
    let target = (0..classes).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c))?;
    let v = colours[0].iter().position(|&c| c == target)?;
    for w in (0..n).filter(|&w| colours[1][w] == target) {
        let mut next = colours.clone();
        next[0][v] = classes;
        next[1][w] = classes;
        if let Some(refined) = refine(pair, next) {
            if let Some(map) = search(pair, refined) {
                return Some(map);
            }
        }
    }
    None
}

fn preserves_covers(pair: [&FinitePoset; 2], map: &[usize]) -> bool {
    let (p, q) = (pair[0], pair[1]);
    (0..p.len()).all(|i| {
        let mut a: Vec<usize> = p.upper_covers(i).iter().map(|&j| map[j]).collect();
        let mut b = q.upper_covers(map[i]).to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    })
}
