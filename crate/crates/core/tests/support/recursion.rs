//! Blade products by multiplying in one generator at a time, using only the
//! defining relations `e_i e_i = η_i` and `e_i e_j = -e_j e_i` for `i ≠ j`.
//! Kept independent of the bitmask sign formula so the two can be compared.

#![allow(dead_code)]

/// Ascending generator indices of a mask.
pub fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn mask(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

/// `e_I · e_j` for ascending `I`, returned as `(sign, ascending indices)`.
pub fn blade_times_generator(blade: &[usize], j: usize, eta: &[i8]) -> (i8, Vec<usize>) {
    match blade.split_last() {
        None => (1, vec![j]),
        Some((&i, rest)) if i < j => {
            let mut out = rest.to_vec();
            out.extend([i, j]);
            (1, out)
        }
        Some((&i, rest)) if i == j => (eta[i], rest.to_vec()),
        Some((&i, rest)) => {
            // e_{I'} e_i e_j = -(e_{I'} e_j) e_i, and everything in e_{I'} e_j is below i.
            let (sign, mut out) = blade_times_generator(rest, j, eta);
            out.push(i);
            (-sign, out)
        }
    }
}

/// `e_I · e_J`, folding in the generators of `J` from left to right.
pub fn blade_product(a: &[usize], b: &[usize], eta: &[i8]) -> (i8, Vec<usize>) {
    b.iter().fold((1, a.to_vec()), |(sign, acc), &j| {
        let (s, out) = blade_times_generator(&acc, j, eta);
        (sign * s, out)
    })
}

/// `η` for `p` positive then `q` negative generators.
pub fn eta(p: usize, q: usize) -> Vec<i8> {
    std::iter::repeat_n(1, p).chain(std::iter::repeat_n(-1, q)).collect()
}

/// Mask-level wrapper: `(sign, mask)` of `e_a · e_b`.
pub fn mask_product(a: u32, b: u32, eta: &[i8]) -> (i8, u32) {
    let (sign, out) = blade_product(&indices(a), &indices(b), eta);
    (sign, mask(&out))
}
