use crate::combinatorics::{complement, interval, Label};
use crate::matrix::{FqMatrix, PrimeField};

/// `∏_{i<n} (q^n - q^i)`
pub fn gl_order(n: usize, q: u32) -> u128 {
    let q = q as u128;
    (0..n as u32).map(|i| q.pow(n as u32) - q.pow(i)).product()
}

/// Every invertible `n × n` matrix over the field, sorted.
pub(crate) fn enumerate_gl(n: usize, field: PrimeField) -> Vec<FqMatrix> {
    let p = field.p() as u64;
    let total = p.pow((n * n) as u32);
    let mut entries = vec![0u8; n * n];
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        // Most significant digit first, so codes run in lexicographic order.
        for k in (0..n * n).rev() {
            entries[k] = (c % p) as u8;
            c /= p;
        }
        let g = FqMatrix::from_entries(n, field, &entries);
        if g.is_invertible() {
            out.push(g);
        }
    }
    out
}

/// Transvections `1 + E_{ij}` and `diag(ω, 1, ..., 1)`.
pub(crate) fn gl_generators(n: usize, field: PrimeField) -> Vec<FqMatrix> {
    let mut gens = Vec::new();
    for i in 1..=n as Label {
        for j in 1..=n as Label {
            if i != j {
                gens.push(FqMatrix::elementary(n, field, i, j, 1));
            }
        }
    }
    if n > 0 && field.p() > 2 {
        gens.push(FqMatrix::elementary(n, field, 1, 1, field.primitive_root()));
    }
    gens
}

/// The permutation `w_I` as a list of images: `1..|I|` go to sorted `I`, the
/// rest to sorted `Iᶜ`.
pub fn coset_rep_w(sub: &[Label], n: usize) -> Vec<Label> {
    let mut sorted = sub.to_vec();
    sorted.sort_unstable();
    sorted.extend(complement(&interval(n), &sorted));
    sorted
}

/// Lower-left `(n-i) × i` block vanishes.
pub fn in_parabolic(g: &FqMatrix, i: usize) -> bool {
    let n = g.n() as Label;
    (i as Label + 1..=n).all(|r| (1..=i as Label).all(|c| g.get(r, c) == 0))
}

/// Block diagonal with blocks `[i]` and `[n] \ [i]`.
pub fn in_levi(g: &FqMatrix, i: usize) -> bool {
    in_parabolic(g, i) && in_parabolic(&g.transpose(), i)
}

/// `[[1, B], [0, 1]]` with blocks `[i]` and `[n] \ [i]`.
pub fn in_radical(g: &FqMatrix, i: usize) -> bool {
    let n = g.n() as Label;
    let i = i as Label;
    in_parabolic(g, i as usize)
        && (1..=n).all(|r| {
            (1..=n).all(|c| {
                let same_block = (r <= i) == (c <= i);
                !same_block || g.get(r, c) == u8::from(r == c)
            })
        })
}
