//! Brute-force isomorphism test by searching permutations of the ground set.
//!
//! The search only tries maps that preserve, for each element, the number of
//! bases containing it, and for each pair the number of bases containing both.
//! Both counts are isomorphism invariants, so pruning on them never rejects
//! an isomorphism.

use std::collections::HashSet;

use super::{GroundSubset, Matroid};
use crate::error::{Error, Result};

pub const MAX_ISO_GROUND: usize = 9;

fn co_degrees(m: &Matroid) -> Vec<Vec<usize>> {
    let n = m.ground_size();
    let mut table = vec![vec![0usize; n]; n];
    for b in m.bases() {
        let elems: Vec<usize> = b.elements().collect();
        for &x in &elems {
            for &y in &elems {
                table[x - 1][y - 1] += 1;
            }
        }
    }
    table
}

pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Result<bool> {
    let n = a.ground_size();
    if n > MAX_ISO_GROUND {
        return Err(Error::GroundSetTooLarge { n, limit: MAX_ISO_GROUND });
    }
    if n != b.ground_size() || a.rank() != b.rank() || a.bases().len() != b.bases().len() {
        return Ok(false);
    }
    let ca = co_degrees(a);
    let cb = co_degrees(b);
    let mut da: Vec<usize> = (0..n).map(|x| ca[x][x]).collect();
    let mut db: Vec<usize> = (0..n).map(|x| cb[x][x]).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    let target: HashSet<GroundSubset> = b.bases().iter().copied().collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(search(0, a, &ca, &cb, &target, &mut image, &mut used))
}

fn search(
    x: usize,
    a: &Matroid,
    ca: &[Vec<usize>],
    cb: &[Vec<usize>],
    target: &HashSet<GroundSubset>,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = image.len();
    if x == n {
        return a.bases().iter().all(|basis| {
            let mapped: GroundSubset = basis.elements().map(|e| image[e - 1] + 1).collect();
            target.contains(&mapped)
        });
    }
    for y in 0..n {
        if used[y] || ca[x][x] != cb[y][y] {
            continue;
        }
        if (0..x).any(|w| ca[w][x] != cb[image[w]][y]) {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if search(x + 1, a, ca, cb, target, image, used) {
            return true;
        }
        used[y] = false;
    }
    image[x] = usize::MAX;
    false
}
