use super::TotalPreorder;
use crate::error::PreorderError;
use crate::lattice::Lattice;

/// Largest carrier for which topped preorders are enumerated by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// All topped total preorders on `m` elements: the top in id order, then the
/// ordered set partitions of the rest, each block chosen as a bitmask in
/// ascending order.
pub fn topped_preorders(m: usize, cap: usize) -> Result<Vec<TotalPreorder>, PreorderError> {
    if m > cap || m > 63 {
        return Err(PreorderError::TooLarge { size: m, cap });
    }
    let mut out = Vec::new();
    let full: u64 = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let mut rank = vec![0u32; m];
    for t in 0..m {
        rank[t] = 0;
        partition(full & !(1 << t), 1, &mut rank, &mut out);
    }
    Ok(out)
}

fn partition(rest: u64, depth: u32, rank: &mut [u32], out: &mut Vec<TotalPreorder>) {
    if rest == 0 {
        out.push(TotalPreorder { rank: rank.to_vec() });
        return;
    }
    let mut block = rest.wrapping_neg() & rest;
    loop {
        for i in 0..rank.len() {
            if block >> i & 1 == 1 {
                rank[i] = depth;
            }
        }
        partition(rest & !block, depth + 1, rank, out);
        if block == rest {
            break;
        }
        block = block.wrapping_sub(rest) & rest;
    }
}

pub fn enumerate_topped_preorders(l: &Lattice) -> Result<Vec<TotalPreorder>, PreorderError> {
    topped_preorders(l.size(), DEFAULT_ENUMERATION_CAP)
}

fn filtered(
    l: &Lattice,
    cap: usize,
    keep: impl Fn(&TotalPreorder) -> Result<bool, PreorderError>,
) -> Result<Vec<TotalPreorder>, PreorderError> {
    let mut out = Vec::new();
    for p in topped_preorders(l.size(), cap)? {
        if keep(&p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// The full unimodal domain, in enumeration order.
pub fn enumerate_unimodal(l: &Lattice) -> Result<Vec<TotalPreorder>, PreorderError> {
    enumerate_unimodal_capped(l, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_unimodal_capped(l: &Lattice, cap: usize) -> Result<Vec<TotalPreorder>, PreorderError> {
    filtered(l, cap, |p| p.is_unimodal(l))
}

/// The full locally strictly unimodal domain, in enumeration order.
pub fn enumerate_lsu(l: &Lattice) -> Result<Vec<TotalPreorder>, PreorderError> {
    enumerate_lsu_capped(l, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_lsu_capped(l: &Lattice, cap: usize) -> Result<Vec<TotalPreorder>, PreorderError> {
    filtered(l, cap, |p| p.is_locally_strictly_unimodal(l))
}

pub fn enumerate_separable(l: &Lattice) -> Result<Vec<TotalPreorder>, PreorderError> {
    filtered(l, DEFAULT_ENUMERATION_CAP, |p| p.is_separable(l))
}
