//! Dense indexing of unordered pairs and triples of vertices.
//!
//! Both use the colexicographic combinatorial number system, so the pair
//! `{i < j}` sits at `C(j,2) + i` and the triple `{i < j < k}` at
//! `C(k,3) + C(j,2) + i`. Indices of all tuples over `0..n` are exactly
//! `0..C(n,2)` and `0..C(n,3)`, and the indices of a smaller vertex set are a
//! prefix of those of a larger one.

#[inline]
pub fn choose2(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

#[inline]
pub fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Index of the unordered pair `{a, b}`; `a != b`, order irrelevant.
#[inline]
pub fn pair_index(a: usize, b: usize) -> usize {
    debug_assert_ne!(a, b);
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    choose2(j) + i
}

/// Index of the unordered triple `{a, b, c}` of distinct vertices.
#[inline]
pub fn triple_index(a: usize, b: usize, c: usize) -> usize {
    let [i, j, k] = sort3(a, b, c);
    debug_assert!(i < j && j < k);
    choose3(k) + choose2(j) + i
}

#[inline]
pub fn sort3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// All pairs over `0..n` in index order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// All triples over `0..n` in index order.
pub fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (2..n).flat_map(|k| (1..k).flat_map(move |j| (0..j).map(move |i| [i, j, k])))
}
