use std::collections::BTreeMap;
use std::iter;

use super::{BicoloredComposition, BicoloredPartition, BicoloredSetPartition, Block, Color};

/// Lazy stream over the family `S^r_{n+r,k+r}`.
pub type SStream = Box<dyn Iterator<Item = BicoloredSetPartition> + Send>;

fn base(r: u32) -> BicoloredSetPartition {
    let blocks = (1..=r).map(|i| Block { elems: vec![i], color: Color::One }).collect();
    BicoloredSetPartition::from_canonical(r, blocks)
}

/// Defers construction of a sub-stream until it is first polled.
fn deferred(f: impl FnOnce() -> SStream + Send + 'static) -> SStream {
    Box::new(iter::once(f).flat_map(|f| f()))
}

/// Streams the bicolored set partitions of `{1..n+r}` having `r` color-1
/// blocks, the i-th of which contains `i`, and `k` color-2 blocks.
///
/// Elements `r+1, …, r+n` are added one at a time: the new element either
/// opens a color-2 singleton or joins one of the existing blocks. Within a
/// level, every singleton extension is produced before any insertion, and
/// insertions run over blocks in canonical order.
pub fn stream_s(r: u32, n: u32, k: u32) -> SStream {
    if k > n {
        return Box::new(iter::empty());
    }
    if n == 0 {
        return Box::new(iter::once(base(r)));
    }
    let fresh: SStream = if k >= 1 {
        Box::new(deferred(move || stream_s(r, n - 1, k - 1)).map(|p| p.push_singleton(Color::Two)))
    } else {
        Box::new(iter::empty())
    };
    let grow: SStream = if k < n {
        Box::new(
            deferred(move || stream_s(r, n - 1, k))
                .flat_map(|p| (0..p.length()).map(move |j| p.insert_into(j))),
        )
    } else {
        Box::new(iter::empty())
    };
    Box::new(fresh.chain(grow))
}

/// Materialized [`stream_s`].
pub fn generate_s(r: u32, n: u32, k: u32) -> Vec<BicoloredSetPartition> {
    stream_s(r, n, k).collect()
}

/// Direct test of the defining property of `S^r_{n+r,k+r}`.
pub fn is_member_s(p: &BicoloredSetPartition, r: u32, n: u32, k: u32) -> bool {
    if p.weight() != n + r {
        return false;
    }
    let color1: Vec<&Block> = p.blocks().iter().filter(|b| b.color == Color::One).collect();
    let color2 = p.blocks().iter().filter(|b| b.color == Color::Two).count();
    if color1.len() != r as usize || color2 != k as usize {
        return false;
    }
    (1..=r).all(|i| color1[i as usize - 1].elems.contains(&i))
}

/// Every bicolored set partition of `{1..n}`, via restricted growth strings.
pub fn all_bicolored_set_partitions(n: u32) -> Vec<BicoloredSetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n as usize];
    loop {
        let nblocks = rgs.iter().max().map_or(0, |m| m + 1);
        let mut elems = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            elems[b].push(i as u32 + 1);
        }
        for mask in 0u64..(1 << nblocks) {
            let blocks = elems
                .iter()
                .enumerate()
                .map(|(j, e)| Block {
                    elems: e.clone(),
                    color: if mask >> j & 1 == 1 { Color::Two } else { Color::One },
                })
                .collect();
            out.push(BicoloredSetPartition::from_canonical(n, blocks));
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    out
}

fn next_rgs(rgs: &mut [usize]) -> bool {
    for i in (1..rgs.len()).rev() {
        let bound = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
        if rgs[i] < bound {
            rgs[i] += 1;
            for x in &mut rgs[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// `f^r_{n+r,k+r}(I)`: members of `S^r_{n+r,k+r}` with `c(π) = I`.
pub fn count_f(r: u32, n: u32, k: u32, shape: &BicoloredComposition) -> usize {
    if shape.weight() != n + r || shape.length() != (k + r) as usize {
        return 0;
    }
    stream_s(r, n, k).filter(|p| p.shape_c() == *shape).count()
}

/// `g^r_{n+r,k+r}(λ)`: members of `S^r_{n+r,k+r}` with `λ(π) = λ`.
pub fn count_g(r: u32, n: u32, k: u32, shape: &BicoloredPartition) -> usize {
    if shape.weight() != n + r || shape.length() != (k + r) as usize {
        return 0;
    }
    stream_s(r, n, k).filter(|p| p.shape_lambda() == *shape).count()
}

/// All nonzero `f` counts in one pass.
pub fn f_table(r: u32, n: u32, k: u32) -> BTreeMap<BicoloredComposition, usize> {
    let mut out = BTreeMap::new();
    for p in stream_s(r, n, k) {
        *out.entry(p.shape_c()).or_insert(0) += 1;
    }
    out
}

/// All nonzero `g` counts in one pass.
pub fn g_table(r: u32, n: u32, k: u32) -> BTreeMap<BicoloredPartition, usize> {
    let mut out = BTreeMap::new();
    for p in stream_s(r, n, k) {
        *out.entry(p.shape_lambda()).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::Color::{One, Two};
    use super::*;

    fn sp(raw: &[(&[u32], Color)]) -> BicoloredSetPartition {
        BicoloredSetPartition::canonicalize(raw.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn base_case() {
        assert_eq!(generate_s(2, 0, 0), vec![sp(&[(&[1], One), (&[2], One)])]);
        assert_eq!(generate_s(0, 0, 0), vec![BicoloredSetPartition::empty()]);
    }

    #[test]
    fn worked_family_in_generation_order() {
        let got = generate_s(2, 2, 1);
        let expected = vec![
            sp(&[(&[1, 3], One), (&[2], One), (&[4], Two)]),
            sp(&[(&[1], One), (&[2, 3], One), (&[4], Two)]),
            sp(&[(&[1, 4], One), (&[2], One), (&[3], Two)]),
            sp(&[(&[1], One), (&[2, 4], One), (&[3], Two)]),
            sp(&[(&[1], One), (&[2], One), (&[3, 4], Two)]),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn stirling_sized_family() {
        let got = generate_s(0, 4, 2);
        assert_eq!(got.len(), 7);
        assert!(got.iter().all(|p| p.blocks().iter().all(|b| b.color == Two)));
        let brute = all_bicolored_set_partitions(4)
            .into_iter()
            .filter(|p| p.length() == 2 && p.blocks().iter().all(|b| b.color == Two))
            .count();
        assert_eq!(brute, 7);
    }

    #[test]
    fn empty_families() {
        assert!(generate_s(1, 2, 3).is_empty());
        assert!(generate_s(0, 3, 0).is_empty());
    }

    #[test]
    fn counts_on_worked_family() {
        let c = |v: Vec<(u32, Color)>| BicoloredComposition::new(v);
        assert_eq!(count_f(2, 2, 1, &c(vec![(2, One), (1, One), (1, Two)])), 2);
        assert_eq!(count_f(2, 2, 1, &c(vec![(1, One), (1, One), (2, Two)])), 1);
        assert_eq!(count_f(2, 2, 1, &c(vec![(3, One), (1, Two)])), 0);
        let l = |v: Vec<(u32, Color)>| BicoloredPartition::new(v);
        assert_eq!(count_g(2, 2, 1, &l(vec![(2, One), (1, One), (1, Two)])), 4);
        assert_eq!(count_g(2, 2, 1, &l(vec![(1, One), (1, One), (2, Two)])), 1);
        assert_eq!(count_g(2, 2, 1, &l(vec![(1, One), (1, Two)])), 0);
    }

    #[test]
    fn brute_force_sizes() {
        let sizes: Vec<usize> = (0..=5).map(|n| all_bicolored_set_partitions(n).len()).collect();
        // Σ_k S(n,k) 2^k
        assert_eq!(sizes, vec![1, 2, 6, 22, 94, 454]);
    }
}
